"""Invertible bit matrices acting on row vectors over GF(2).

A vector of F_2^n is an int whose bit i is coordinate i.  A matrix is the
tuple of its n row images; ``v @ M`` is the XOR of the rows selected by the
bits of ``v``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np


def _rank(rows):
    basis = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
    return len(basis)


@dataclass(frozen=True)
class GF2Matrix:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= 24:
            raise ValueError(f"dimension {self.n} outside 1..24")
        if len(self.rows) != self.n:
            raise ValueError("row count does not match dimension")
        mask = (1 << self.n) - 1
        if any(r & ~mask for r in self.rows):
            raise ValueError("row has bits beyond dimension")
        if _rank(self.rows) != self.n:
            raise ValueError("matrix is singular over GF(2)")

    @classmethod
    def identity(cls, n: int) -> "GF2Matrix":
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_permutation(cls, perm) -> "GF2Matrix":
        """Permutation matrix sending coordinate i to coordinate perm[i]."""
        return cls(len(perm), tuple(1 << int(p) for p in perm))

    @classmethod
    def from_bits(cls, array) -> "GF2Matrix":
        a = np.asarray(array, dtype=np.uint8) & 1
        n = a.shape[0]
        rows = tuple(int(sum(int(b) << j for j, b in enumerate(row))) for row in a)
        return cls(n, rows)

    def to_bits(self) -> np.ndarray:
        return np.array([[(r >> j) & 1 for j in range(self.n)] for r in self.rows],
                        dtype=np.uint8)

    def apply(self, v: int) -> int:
        out = 0
        i = 0
        while v:
            if v & 1:
                out ^= self.rows[i]
            v >>= 1
            i += 1
        return out

    def __matmul__(self, other: "GF2Matrix") -> "GF2Matrix":
        if other.n != self.n:
            raise ValueError("dimension mismatch")
        # rows of A@B are the rows of A pushed through B
        t = other.tables
        rows = (t[0][self.array & 0xFF] ^ t[1][(self.array >> 8) & 0xFF]
                ^ t[2][(self.array >> 16) & 0xFF])
        return GF2Matrix.__new_unchecked(self.n, tuple(int(r) for r in rows))

    @classmethod
    def __new_unchecked(cls, n, rows):
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "rows", rows)
        return obj

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.uint32)

    @cached_property
    def tables(self) -> np.ndarray:
        """Three 256-entry lookup tables, one per input byte."""
        rows = list(self.rows) + [0] * (24 - self.n)
        t = np.zeros((3, 256), dtype=np.uint32)
        for k in range(3):
            for bit in range(8):
                r = rows[8 * k + bit]
                lo = 1 << bit
                t[k, lo:2 * lo] = t[k, :lo] ^ np.uint32(r)
        return t

    def apply_many(self, points: np.ndarray) -> np.ndarray:
        p = np.asarray(points, dtype=np.uint32)
        t = self.tables
        return t[0][p & 0xFF] ^ t[1][(p >> 8) & 0xFF] ^ t[2][(p >> 16) & 0xFF]

    @cached_property
    def inverse(self) -> "GF2Matrix":
        n = self.n
        # Gauss-Jordan on [M | I] with rows packed as 2n-bit ints
        work = [(r | (1 << (n + i))) for i, r in enumerate(self.rows)]
        for col in range(n):
            piv = next(i for i in range(col, n) if (work[i] >> col) & 1)
            work[col], work[piv] = work[piv], work[col]
            for i in range(n):
                if i != col and (work[i] >> col) & 1:
                    work[i] ^= work[col]
        return GF2Matrix.__new_unchecked(n, tuple(w >> n for w in work))

    def is_identity(self) -> bool:
        return all(r == 1 << i for i, r in enumerate(self.rows))

    def __pow__(self, e: int) -> "GF2Matrix":
        if e < 0:
            return self.inverse ** (-e)
        result, base = GF2Matrix.identity(self.n), self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def __repr__(self):
        return f"GF2Matrix(n={self.n}, rows={[hex(r) for r in self.rows]})"
