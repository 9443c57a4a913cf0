"""Binary Golay code, its cocode, and M24, in MOG coordinates.

Point numbering: the 24 points form a 4x6 array (the MOG).  Point ``i`` sits
in column ``i // 4`` and row ``i % 4``; the rows are labelled 0, 1, w, w-bar
in GF(4).  A word is a 24-bit int with bit ``i`` for point ``i``.

A 4x6 array is a codeword iff every column has the parity of the top row,
and the column scores (sum of row labels over set entries) form a hexacode
word.  The hexacode is ``{(a, b, c, f(1), f(w), f(w-bar))}`` for
``f(x) = a x^2 + b x + c``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache, cached_property

import numpy as np

from ._data import data_lines
from .gf2 import GF2Matrix

N_POINTS = 24
ALL_ONES = (1 << N_POINTS) - 1

# GF(4) = {0, 1, w, w-bar} encoded 0..3; addition is xor
_F4_MUL = ((0, 0, 0, 0), (0, 1, 2, 3), (0, 2, 3, 1), (0, 3, 1, 2))


def popcount(w: int) -> int:
    return bin(w).count("1")


def column(c: int) -> int:
    """The tetrad of MOG column ``c``."""
    return 0xF << (4 * c)


def hexacode() -> list[tuple[int, ...]]:
    def f(a, b, c, x):
        return _F4_MUL[a][_F4_MUL[x][x]] ^ _F4_MUL[b][x] ^ c

    return [(a, b, c, f(a, b, c, 1), f(a, b, c, 2), f(a, b, c, 3))
            for a in range(4) for b in range(4) for c in range(4)]


def mog_codewords() -> list[int]:
    """All 4096 codewords from the hexacode rule, sorted."""
    by_score: dict[tuple[int, int], list[int]] = {}
    for m in range(16):
        score = 0
        for r in range(4):
            if m >> r & 1:
                score ^= r
        by_score.setdefault((score, popcount(m) & 1), []).append(m)
    words = set()
    for h in hexacode():
        for par in (0, 1):
            for cols in itertools.product(*[by_score[(h[c], par)] for c in range(6)]):
                w = 0
                for c, m in enumerate(cols):
                    w |= m << (4 * c)
                top = sum(w >> (4 * c) & 1 for c in range(6)) & 1
                if top == par:
                    words.add(w)
    return sorted(words)


def _echelon(words) -> list[int]:
    """Reduced echelon basis, pivots at the lowest set bits."""
    basis: list[int] = []
    for w in words:
        for b in basis:
            if w & (b & -b):
                w ^= b
        if w:
            low = w & -w
            basis = [b ^ w if b & low else b for b in basis]
            basis.append(w)
    return sorted(basis, key=lambda b: b & -b)


@dataclass(frozen=True)
class CocodeElement:
    syndrome: int
    rep: int
    weight: int

    @property
    def even(self) -> bool:
        return self.weight % 2 == 0


@dataclass(frozen=True)
class GolayCode:
    basis: tuple[int, ...]
    parity_check: tuple[int, ...]

    @cached_property
    def codewords(self) -> np.ndarray:
        words = np.zeros(1, dtype=np.uint32)
        for b in self.basis:
            words = np.concatenate([words, words ^ np.uint32(b)])
        return np.sort(words)

    @cached_property
    def _codeword_set(self) -> frozenset[int]:
        return frozenset(int(w) for w in self.codewords)

    def is_codeword(self, w: int) -> bool:
        return w in self._codeword_set

    def octads(self) -> list[int]:
        return [int(w) for w in self.codewords if popcount(int(w)) == 8]

    def weight_enumerator(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for w in self.codewords:
            k = popcount(int(w))
            out[k] = out.get(k, 0) + 1
        return dict(sorted(out.items()))

    def syndrome_bits(self, word: int) -> int:
        s = 0
        for j, h in enumerate(self.parity_check):
            s |= (popcount(word & h) & 1) << j
        return s

    @cached_property
    def _leaders(self) -> tuple[np.ndarray, np.ndarray]:
        rep = np.full(1 << 12, -1, dtype=np.int64)
        weight = np.full(1 << 12, -1, dtype=np.int8)
        for k in range(5):
            for pts in itertools.combinations(range(N_POINTS), k):
                w = sum(1 << p for p in pts)
                s = self.syndrome_bits(w)
                if weight[s] < 0 or (weight[s] == k and w < rep[s]):
                    rep[s], weight[s] = w, k
        if (weight < 0).any():
            raise RuntimeError("coset without a leader of weight <= 4")
        return rep, weight

    def coset(self, s: int) -> CocodeElement:
        rep, weight = self._leaders
        return CocodeElement(s, int(rep[s]), int(weight[s]))

    @cached_property
    def even_basis(self) -> tuple[int, ...]:
        """Syndromes of independent duads {0, i}, chosen greedily."""
        chosen: list[int] = []
        span = {0}
        for i in range(1, N_POINTS):
            s = self.syndrome_bits(1 | 1 << i)
            if s not in span:
                chosen.append(s)
                span |= {x ^ s for x in span}
            if len(chosen) == 11:
                break
        return tuple(chosen)

    @cached_property
    def _even_coords(self) -> dict[int, int]:
        coords = {0: 0}
        for k, s in enumerate(self.even_basis):
            coords.update({x ^ s: c | 1 << k for x, c in list(coords.items())})
        return coords

    def even_coordinates(self, word: int) -> int:
        """11-bit coordinates of an even-weight word's coset."""
        if popcount(word) & 1:
            raise ValueError("odd word has no even-cocode coordinates")
        return self._even_coords[self.syndrome_bits(word)]


@cache
def build_golay() -> GolayCode:
    basis = tuple(_echelon(mog_codewords()))
    # self-dual: the generator matrix is also a parity-check matrix
    code = GolayCode(basis, basis)
    if len(basis) != 12:
        raise RuntimeError("hexacode construction did not give dimension 12")
    return code


def syndrome(word: int, code: GolayCode | None = None) -> CocodeElement:
    code = code or build_golay()
    return code.coset(code.syndrome_bits(word))


@dataclass(frozen=True)
class M24Element:
    perm: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(int(p) for p in self.perm))
        if sorted(self.perm) != list(range(N_POINTS)):
            raise ValueError("not a permutation of 24 points")

    @classmethod
    def identity(cls) -> "M24Element":
        return cls(tuple(range(N_POINTS)))

    def __call__(self, word: int) -> int:
        out = 0
        for i in range(N_POINTS):
            if word >> i & 1:
                out |= 1 << self.perm[i]
        return out

    def __mul__(self, other: "M24Element") -> "M24Element":
        """``g * h`` applies g first, then h."""
        return M24Element(tuple(other.perm[p] for p in self.perm))

    def matrix(self) -> GF2Matrix:
        return GF2Matrix.from_permutation(self.perm)


def preserves_code(g: M24Element, code: GolayCode | None = None) -> bool:
    code = code or build_golay()
    return all(code.is_codeword(g(b)) for b in code.basis)


@cache
def m24_generators() -> tuple[M24Element, ...]:
    gens = tuple(M24Element(tuple(int(x) for x in line.split()))
                 for line in data_lines("m24_generators.txt"))
    for g in gens:
        if not preserves_code(g):
            raise RuntimeError(f"generator {g.perm} does not preserve the code")
    return gens


def cocode_action(g: M24Element, code: GolayCode | None = None) -> GF2Matrix:
    """Induced map on the 11-dimensional even cocode."""
    code = code or build_golay()
    if not preserves_code(g, code):
        raise ValueError("permutation does not preserve the Golay code")
    rows = []
    for s in code.even_basis:
        rep = code.coset(s).rep
        rows.append(code.even_coordinates(g(rep)))
    return GF2Matrix(11, tuple(rows))
