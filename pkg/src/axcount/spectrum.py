"""Eigenspace dimensions of the adjoint action of an axis, by counting.

Everything is counted over the 98280 short classes of Leech mod 2, relative
to a fixed short class r.  A class s contributes according to the absolute
inner product of minimal representatives and the parity <l_Omega, l_s>.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cache

import numpy as np

from .leech import (Leech2Vector, NotMember, lambda_omega, leech_forms, minimal_vectors,
                    to_leech2, to_leech2_many)

N_SHORT = 98280
DIM_B = 196884
EIGENVALUES = ("16", "0", "4", "1/2")

# the fixed contributions of the 300-dimensional part: 1, 1 + 276, and 23
FIXED_PART = {"16": 1, "0": 1 + 276, "4": 23, "1/2": 0}

DEFAULT_R = (0, 0, 4, -4) + (0,) * 20


class InconsistentProfile(ValueError):
    pass


@dataclass(frozen=True)
class ShortClasses:
    indices: np.ndarray   # uint32, sorted
    reps: np.ndarray      # int64 (98280, 24), one minimal representative per class


@cache
def short_classes() -> ShortClasses:
    vecs = np.concatenate(list(minimal_vectors(4))).astype(np.int64)
    idx = to_leech2_many(vecs)
    order = np.argsort(idx, kind="stable")
    idx, vecs = idx[order], vecs[order]
    first = np.ones(len(idx), dtype=bool)
    first[1:] = idx[1:] != idx[:-1]
    return ShortClasses(idx[first], vecs[first])


@dataclass(frozen=True)
class ShortProfile:
    r: int
    buckets: dict[tuple[int, str], int]   # (|ip|, parity) -> classes s != r
    pairs: dict[str, int]                 # parity -> unordered {s, t}, s + t = r

    def bucket(self, ip: int, parity: str) -> int:
        return self.buckets.get((ip, parity), 0)

    @property
    def total(self) -> int:
        return 1 + sum(self.buckets.values())


@dataclass(frozen=True)
class AdSpectrum:
    dims: dict[str, int]

    @property
    def total(self) -> int:
        return sum(self.dims.values())


def _rep_of(r: int, sc: ShortClasses) -> np.ndarray:
    pos = int(np.searchsorted(sc.indices, r))
    if pos >= len(sc.indices) or sc.indices[pos] != r:
        raise ValueError("r is not a short class")
    return sc.reps[pos]


def short_vector_profile(r) -> ShortProfile:
    if not isinstance(r, (Leech2Vector, int, np.integer)):
        try:
            r = to_leech2(r)
        except NotMember as e:
            raise ValueError("r is not a lattice vector") from e
    r = int(r)
    sc = short_classes()
    xr = _rep_of(r, sc)
    ips = np.abs(sc.reps @ xr) // 8
    parity = leech_forms().bilinear_many(sc.indices, lambda_omega().index)
    others = sc.indices != r
    buckets = {}
    for ip in (0, 1, 2, 4):
        for p, name in ((0, "even"), (1, "odd")):
            n = int(((ips == ip) & (parity == p) & others).sum())
            if n:
                buckets[(ip, name)] = n
    # classes at |ip| = 2 pair up as s, s + r
    two = sc.indices[(ips == 2) & others]
    partner_short = np.isin(two ^ np.uint32(r), sc.indices)
    if not partner_short.all():
        raise InconsistentProfile("a class with |ip| = 2 has no short partner")
    pairs = {"even": buckets.get((2, "even"), 0) // 2, "odd": buckets.get((2, "odd"), 0) // 2}
    return ShortProfile(r, buckets, pairs)


def eigenspace_dims(p: ShortProfile) -> AdSpectrum:
    if p.total != N_SHORT:
        raise InconsistentProfile(f"profile covers {p.total} classes, not {N_SHORT}")
    if 2 * (p.pairs["even"] + p.pairs["odd"]) != p.bucket(2, "even") + p.bucket(2, "odd"):
        raise InconsistentProfile("pair counts disagree with the |ip| = 2 buckets")
    pe, po = p.pairs["even"], p.pairs["odd"]
    dims = {
        "16": FIXED_PART["16"],
        "0": FIXED_PART["0"] + pe + p.bucket(0, "even") + 3 * (po + p.bucket(0, "odd")),
        "4": FIXED_PART["4"] + pe + 3 * po,
        "1/2": p.bucket(1, "even") + 3 * p.bucket(1, "odd"),
    }
    return AdSpectrum(dims)


def render(p: ShortProfile, s: AdSpectrum) -> str:
    rows = [
        ("X_s, <r,s> = +-1, even", p.bucket(1, "even"), "1/2", "V_0"),
        ("X_s, <r,s> = +-1, odd", p.bucket(1, "odd"), "1/2", "V_X"),
        ("X_s, <r,s> = 0, even", p.bucket(0, "even"), "0", "V_0"),
        ("X_s, <r,s> = 0, odd", p.bucket(0, "odd"), "0", "V_X"),
        ("X_s +- X_t, rst = 1, even", p.pairs["even"], "0, 4", "V_0"),
        ("X_s +- X_t, rst = 1, odd", p.pairs["odd"], "0, 4", "V_X"),
    ]
    w = max(len(r[0]) for r in rows)
    out = [f"{'vectors'.ljust(w)}  {'count':>6}  eigenvalue  part"]
    out += [f"{a.ljust(w)}  {n:>6}  {e:<10}  {v}" for a, n, e, v in rows]
    out.append("")
    out += [f"eigenvalue {k:>3}: dimension {v}" for k, v in s.dims.items()]
    out.append(f"total: {s.total}")
    return "\n".join(out)
