"""Exact re-derivation of the orders of the Monster and Baby Monster by
counting axes, with the Leech lattice and Conway group machinery it needs."""

__version__ = "0.1.0"
