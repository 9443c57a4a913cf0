"""The Leech lattice, its minimal vectors, and Leech mod 2.

Coordinates are scaled by sqrt(8): a vector is 24 integers and its norm is
``sum(x*x) / 8``.  A class of Leech/2Leech is encoded as a 24-bit index, the
coefficient vector mod 2 of any representative in the basis B stored in
``data/leech_basis.txt``.

Every lattice vector can be written ``x = m*o + 2c + 4w`` with m in {0, 1},
``o = (-3, 1^23)``, c a Golay codeword (as a 0/1 vector), and w an integer
vector of even coordinate sum.  The enumerators below walk over (m, c) and
the residues ``x_i = m + 2 c_i (mod 4)``.  They use this decomposition to
update the class index incrementally.
"""
from __future__ import annotations

import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import cache, cached_property
from pathlib import Path
from typing import Iterator, Sequence

import numba
import numpy as np

from ._data import data_lines
from .golay import build_golay, popcount

DIM = 24
NPTS = 1 << DIM
NORMS = (4, 6, 8)
MINIMAL_COUNTS = {4: 196560, 6: 16773120, 8: 398034000}
TYPE_CENSUS = {0: 1, 2: 98280, 3: 8386560, 4: 8292375}
MULTIPLICITY = {2: 2, 3: 2, 4: 48}
CACHE_MAGIC = b"LEECH2TYPES1"
OMEGA_VECTOR = (8,) + (0,) * 23
ODD_VECTOR = (-3,) + (1,) * 23


class CensusError(RuntimeError):
    pass


class NotMember(ValueError):
    pass


def is_member(coords: Sequence[int]) -> bool:
    x = [int(v) for v in coords]
    if len(x) != DIM:
        return False
    m = x[0] & 1
    if any((v - m) & 1 for v in x):
        return False
    word = sum(1 << i for i, v in enumerate(x) if (v - m - 2) % 4 == 0)
    if not build_golay().is_codeword(word):
        return False
    return sum(x) % 8 == 4 * m


@dataclass(frozen=True)
class LeechVector:
    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(v) for v in self.coords))

    @property
    def norm(self) -> int:
        return sum(v * v for v in self.coords) // 8

    def dot(self, other: "LeechVector") -> int:
        return sum(a * b for a, b in zip(self.coords, other.coords)) // 8


@dataclass(frozen=True)
class Leech2Vector:
    index: int

    def __int__(self) -> int:
        return self.index

    def __xor__(self, other: "Leech2Vector") -> "Leech2Vector":
        return Leech2Vector(self.index ^ int(other))


@dataclass(frozen=True)
class LeechBasis:
    rows: np.ndarray  # int64, shape (24, 24)

    @cached_property
    def dual(self) -> np.ndarray:
        """D = 8 B^-1, an integer matrix since the Gram matrix is unimodular."""
        from fractions import Fraction

        n = DIM
        aug = [[Fraction(int(v)) for v in row] + [Fraction(int(i == j)) for j in range(n)]
               for i, row in enumerate(self.rows)]
        for col in range(n):
            piv = next(r for r in range(col, n) if aug[r][col] != 0)
            aug[col], aug[piv] = aug[piv], aug[col]
            p = aug[col][col]
            aug[col] = [v / p for v in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
        inv8 = [[8 * aug[i][n + j] for j in range(n)] for i in range(n)]
        if any(v.denominator != 1 for row in inv8 for v in row):
            raise RuntimeError("8 B^-1 is not integral")
        return np.array([[int(v) for v in row] for row in inv8], dtype=np.int64)

    @cached_property
    def gram(self) -> np.ndarray:
        g = self.rows @ self.rows.T
        if (g % 8).any():
            raise RuntimeError("basis Gram matrix is not integral")
        return g // 8

    def coefficients(self, x: np.ndarray) -> np.ndarray:
        c = np.asarray(x, dtype=np.int64) @ self.dual
        if (c % 8).any():
            raise NotMember("vector is not in the lattice")
        return c // 8


@cache
def leech_basis() -> LeechBasis:
    rows = np.array([[int(v) for v in line.split()] for line in data_lines("leech_basis.txt")],
                    dtype=np.int64)
    if rows.shape != (DIM, DIM):
        raise RuntimeError("leech basis must be 24x24")
    for r in rows:
        if not is_member(r):
            raise RuntimeError("basis row is not a lattice vector")
    det = round(abs(np.linalg.det(rows.astype(float))))
    if det != 2 ** 36:
        raise RuntimeError(f"basis determinant {det} != 2^36")
    return LeechBasis(rows)


def _bits(c: np.ndarray) -> np.ndarray:
    w = np.uint32(1) << np.arange(DIM, dtype=np.uint32)
    return ((c & 1).astype(np.uint32) * w).sum(axis=-1).astype(np.uint32)


def to_leech2(v) -> Leech2Vector:
    coords = v.coords if isinstance(v, LeechVector) else v
    if not is_member(coords):
        raise NotMember(f"{tuple(coords)} is not in the lattice")
    return Leech2Vector(int(_bits(leech_basis().coefficients(np.array(coords)))))


def to_leech2_many(x: np.ndarray) -> np.ndarray:
    """Indices of many lattice vectors (rows); membership is not rechecked."""
    return _bits(leech_basis().coefficients(np.asarray(x, dtype=np.int64)))


def from_leech2(index: int) -> np.ndarray:
    """Some lattice representative of a class: the 0/1 combination of B rows."""
    a = np.array([(index >> i) & 1 for i in range(DIM)], dtype=np.int64)
    return a @ leech_basis().rows


# --- incremental index data --------------------------------------------------

@dataclass(frozen=True)
class _IndexData:
    codewords: np.ndarray   # uint32, all 4096 codewords
    two_c: np.ndarray       # uint32, index of 2c for each codeword
    odd: int                # index of o
    four: np.ndarray        # uint32, index of 4(e0 + ei), entry 0 unused
    eight: int              # index of 8 e0


@cache
def _index_data() -> _IndexData:
    words = build_golay().codewords
    bits = ((words[:, None] >> np.arange(DIM, dtype=np.uint32)) & 1).astype(np.int64)
    two_c = to_leech2_many(2 * bits)
    four = np.zeros(DIM, dtype=np.uint32)
    for i in range(1, DIM):
        v = np.zeros(DIM, dtype=np.int64)
        v[0] = v[i] = 4
        four[i] = to_leech2(v).index
    return _IndexData(words, two_c, to_leech2(ODD_VECTOR).index, four,
                      to_leech2(OMEGA_VECTOR).index)


# candidate coordinate values per residue mod 4, ordered by absolute value
_VALUES = np.array([[0, 4, -4, 8, -8],
                    [1, -3, 5, -7, 99],
                    [2, -2, 6, -6, 99],
                    [-1, 3, -5, 7, 99]], dtype=np.int64)
_NVALUES = np.array([5, 4, 4, 4], dtype=np.int64)


@numba.njit(cache=True, nogil=True)
def _walk(m, c, base, four, eight, budget, exact, out, counters, totals):
    """Depth-first walk over lattice vectors with residue pattern (m, c).

    With ``exact == 0`` every vector of squared length 32, 48 or 64 bumps the
    saturating counter of its class and its norm total.  Otherwise vectors of
    squared length ``exact`` are written to ``out``; returns the number
    written, or -1 if ``out`` is too small.
    """
    res = np.empty(24, np.int64)
    for i in range(24):
        res[i] = (m + 2 * ((c >> i) & 1)) & 3
    suffix = np.zeros(25, np.int64)
    for i in range(23, -1, -1):
        r = res[i]
        suffix[i] = suffix[i + 1] + (0 if r == 0 else (4 if r == 2 else 1))
    choice = np.full(24, -1, np.int64)
    sq = np.zeros(25, np.int64)
    acc = np.zeros(25, np.int64)
    ssum = np.zeros(25, np.int64)
    x = np.zeros(24, np.int64)
    nout = 0
    i = 0
    while i >= 0:
        if i == 24:
            s = sq[24]
            if s != 0 and (ssum[24] & 1) == 0:
                idx = base ^ acc[24]
                if (ssum[24] & 3) == 2:
                    idx ^= eight
                if exact == 0:
                    slot = s // 16 - 2
                    if s % 16 != 0 or slot < 0 or slot > 2:
                        totals[3] += 1
                    else:
                        totals[slot] += 1
                        if counters[slot, idx] < 255:
                            counters[slot, idx] += 1
                elif s == exact:
                    if nout >= out.shape[0]:
                        return -1
                    for k in range(24):
                        out[nout, k] = x[k]
                    nout += 1
            i -= 1
            continue
        r = res[i]
        k = choice[i] + 1
        if k >= _NVALUES[r]:
            choice[i] = -1
            i -= 1
            continue
        v = _VALUES[r, k]
        nsq = sq[i] + v * v
        if nsq + suffix[i + 1] > budget:
            choice[i] = -1
            i -= 1
            continue
        choice[i] = k
        x[i] = v
        ci = (c >> i) & 1
        if i == 0:
            w = (v + 3 * m - 2 * ci) // 4
            ssum[1] = w
            acc[1] = 0
        else:
            w = (v - m - 2 * ci) // 4
            ssum[i + 1] = ssum[i] - w
            acc[i + 1] = acc[i] ^ (four[i] if (w & 1) else 0)
        sq[i + 1] = nsq
        i += 1
    return nout


@numba.njit(cache=True, nogil=True)
def _census_chunk(ms, cs, bases, four, eight, counters, totals):
    dummy = np.zeros((0, 24), np.int64)
    for t in range(ms.shape[0]):
        _walk(ms[t], cs[t], bases[t], four, eight, 64, 0, dummy, counters, totals)


def _tasks() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    d = _index_data()
    ms = np.repeat(np.array([0, 1], dtype=np.int64), len(d.codewords))
    cs = np.tile(d.codewords.astype(np.int64), 2)
    bases = np.tile(d.two_c.astype(np.int64), 2)
    bases[ms == 1] ^= d.odd
    return ms, cs, bases


def minimal_vectors(norm: int, batch: int = 65536) -> Iterator[np.ndarray]:
    """Every lattice vector of the given norm exactly once, in int8 batches."""
    if norm not in NORMS:
        raise ValueError("norm must be one of 4, 6, 8")
    d = _index_data()
    ms, cs, bases = _tasks()
    out = np.empty((4096, DIM), dtype=np.int64)
    counters = np.zeros((3, 1), dtype=np.uint8)
    totals = np.zeros(4, dtype=np.int64)
    pending: list[np.ndarray] = []
    held = 0
    for m, c, b in zip(ms, cs, bases):
        while True:
            n = _walk(m, c, b, d.four.astype(np.int64), d.eight, 8 * norm, 8 * norm,
                      out, counters, totals)
            if n >= 0:
                break
            out = np.empty((2 * out.shape[0], DIM), dtype=np.int64)
        if n:
            pending.append(out[:n].astype(np.int8))
            held += n
        if held >= batch:
            yield np.concatenate(pending)
            pending, held = [], 0
    if pending:
        yield np.concatenate(pending)


# --- type table --------------------------------------------------------------

@dataclass
class TypeTable:
    bitmaps: dict[int, np.ndarray]          # type -> packed little-endian bitmap
    census: dict[int, int]
    norm_totals: dict[int, int] = field(default_factory=dict)

    @cached_property
    def types(self) -> np.ndarray:
        t = np.zeros(NPTS, dtype=np.uint8)
        for k, bm in self.bitmaps.items():
            t[np.unpackbits(bm, bitorder="little").astype(bool)] = k
        return t

    def type_of(self, index) -> int:
        return int(self.types[int(index)])

    def save(self, path: Path) -> None:
        with open(path, "wb") as f:
            f.write(CACHE_MAGIC)
            for k in (2, 3, 4):
                f.write(self.bitmaps[k].tobytes())

    @classmethod
    def load(cls, path: Path) -> "TypeTable":
        raw = Path(path).read_bytes()
        nbytes = NPTS // 8
        if raw[:len(CACHE_MAGIC)] != CACHE_MAGIC or len(raw) != len(CACHE_MAGIC) + 3 * nbytes:
            raise CensusError(f"{path}: not a type-table cache")
        body = raw[len(CACHE_MAGIC):]
        bitmaps = {k: np.frombuffer(body[i * nbytes:(i + 1) * nbytes], dtype=np.uint8).copy()
                   for i, k in enumerate((2, 3, 4))}
        table = cls(bitmaps, {})
        table.census = _census_from_types(table.types)
        _check_partition(bitmaps)
        return table


def _census_from_types(types: np.ndarray) -> dict[int, int]:
    counts = np.bincount(types, minlength=5)
    return {k: int(counts[k]) for k in (0, 2, 3, 4)}


def _check_partition(bitmaps: dict[int, np.ndarray]) -> None:
    b2, b3, b4 = (bitmaps[k] for k in (2, 3, 4))
    if (b2 & b3).any() or (b2 & b4).any() or (b3 & b4).any():
        raise CensusError("type bitmaps overlap")
    cover = b2 | b3 | b4
    # only index 0 may be unmarked
    if cover[0] != 0xFE or (cover[1:] != 0xFF).any():
        raise CensusError("type bitmaps do not cover every nonzero class")


def census_counters(threads: int = 1, progress=None) -> tuple[np.ndarray, np.ndarray]:
    """Per-class hit counters for norms 4, 6, 8 and the per-norm totals."""
    d = _index_data()
    ms, cs, bases = _tasks()
    four = d.four.astype(np.int64)
    chunks = np.array_split(np.arange(len(ms)), max(1, threads))

    def run(ix):
        counters = np.zeros((3, NPTS), dtype=np.uint8)
        totals = np.zeros(4, dtype=np.int64)
        step = 256
        for s in range(0, len(ix), step):
            sl = ix[s:s + step]
            _census_chunk(ms[sl], cs[sl], bases[sl], four, d.eight, counters, totals)
            if progress:
                progress(f"census: {sl[-1] + 1}/{len(ms)} residue patterns")
        return counters, totals

    if threads <= 1:
        return run(chunks[0])
    with ThreadPoolExecutor(threads) as pool:
        parts = list(pool.map(run, chunks))
    counters = parts[0][0].astype(np.uint16)
    totals = parts[0][1].copy()
    for c, t in parts[1:]:
        counters += c
        np.minimum(counters, 255, out=counters)
        totals += t
    return counters.astype(np.uint8), totals


def build_type_table(threads: int = 1, cache: Path | None = None,
                     progress=None) -> TypeTable:
    """Mark classes by norm-4, then norm-6, then norm-8 hits, with full checks.

    A cache file, when given and present, is loaded and checked for shape,
    disjointness and coverage; otherwise the census runs and the cache is
    written.
    """
    if cache is not None and Path(cache).exists():
        table = TypeTable.load(cache)
        if table.census != TYPE_CENSUS:
            raise CensusError(f"cached census {table.census} is wrong")
        return table
    counters, totals = census_counters(threads, progress)
    if totals[3]:
        raise CensusError(f"{totals[3]} lattice vectors with unexpected norm")
    norm_totals = {n: int(totals[i]) for i, n in enumerate(NORMS)}
    if norm_totals != MINIMAL_COUNTS:
        raise CensusError(f"minimal vector totals {norm_totals}")
    hit4, hit6, hit8 = counters
    t2 = hit4 > 0
    t3 = (hit6 > 0) & ~t2
    t4 = (hit8 > 0) & ~t2 & ~t3
    if (hit6[t2] != 0).any() or (hit8[t2 | t3] != 0).any():
        raise CensusError("a longer vector landed in a class of smaller type")
    for t, mask, hits in ((2, t2, hit4), (3, t3, hit6), (4, t4, hit8)):
        if (hits[mask] != MULTIPLICITY[t]).any():
            raise CensusError(f"type-{t} multiplicity is not {MULTIPLICITY[t]}")
    marked = t2 | t3 | t4
    if marked[0] or not marked[1:].all():
        raise CensusError("some nonzero class is unmarked")
    bitmaps = {k: np.packbits(mask, bitorder="little") for k, mask in ((2, t2), (3, t3), (4, t4))}
    table = TypeTable(bitmaps, {0: 1, 2: int(t2.sum()), 3: int(t3.sum()), 4: int(t4.sum())},
                      norm_totals)
    if cache is not None:
        table.save(cache)
    return table


_TABLE: TypeTable | None = None


def type_table(threads: int = 1, cache: Path | None = None) -> TypeTable:
    """Process-wide type table, built on first use."""
    global _TABLE
    if _TABLE is None:
        _TABLE = build_type_table(threads, cache,
                                  progress=lambda s: print(s, file=sys.stderr))
    return _TABLE


def set_type_table(table: TypeTable) -> None:
    global _TABLE
    _TABLE = table


# --- forms -------------------------------------------------------------------

@dataclass(frozen=True)
class Forms:
    gram_rows: tuple[int, ...]   # row i of the Gram matrix mod 2, as a bitmask
    upper_rows: tuple[int, ...]  # strictly upper triangular part
    diag: int                    # bit i = q(B_i)

    def bilinear(self, a: int, b: int) -> int:
        v = 0
        for i in range(DIM):
            if b >> i & 1:
                v ^= self.gram_rows[i]
        return popcount(a & v) & 1

    def quadratic(self, a: int) -> int:
        q = popcount(a & self.diag)
        for i in range(DIM):
            if a >> i & 1:
                q += popcount(a & self.upper_rows[i])
        return q & 1

    def bilinear_many(self, a: np.ndarray, b: int) -> np.ndarray:
        v = 0
        for i in range(DIM):
            if b >> i & 1:
                v ^= self.gram_rows[i]
        return _parity(np.asarray(a, dtype=np.uint32) & np.uint32(v))


def _parity(x: np.ndarray) -> np.ndarray:
    x = x.astype(np.uint32)
    x ^= x >> 16
    x ^= x >> 8
    x ^= x >> 4
    x ^= x >> 2
    x ^= x >> 1
    return (x & 1).astype(np.uint8)


@cache
def leech_forms() -> Forms:
    g = leech_basis().gram
    n2 = np.diag(g)  # norms of basis rows
    gram_rows = tuple(int(sum(int(g[i, j] & 1) << j for j in range(DIM))) for i in range(DIM))
    upper = tuple(int(sum(int(g[i, j] & 1) << j for j in range(i + 1, DIM))) for i in range(DIM))
    diag = int(sum(int((n2[i] // 2) & 1) << i for i in range(DIM)))
    return Forms(gram_rows, upper, diag)


def forms(a, b) -> tuple[int, int]:
    """(bilinear form <a, b>, quadratic form q(a)), both mod 2."""
    f = leech_forms()
    return f.bilinear(int(a), int(b)), f.quadratic(int(a))


def lambda_omega() -> Leech2Vector:
    return to_leech2(OMEGA_VECTOR)


def feasible_census(beta, table: TypeTable | None = None) -> int:
    """Number of short classes l with l + beta of type 4."""
    table = table or type_table()
    b = int(beta)
    if table.type_of(b) != 2:
        raise ValueError("beta must be a short (type-2) class")
    short = np.flatnonzero(table.types == 2).astype(np.uint32)
    return int((table.types[short ^ np.uint32(b)] == 4).sum())
