"""Orbits, Schreier vectors and stabilizer chains for bit-matrix groups.

Points are indices in ``range(2**n)``.  Generators act on the right, and the
breadth-first search follows each generator and its inverse, in the order
``g0, g0^-1, g1, g1^-1, ...``.  Each BFS layer is sorted before it is
expanded, and the first edge to reach a point is the one recorded.  That makes
every result a pure function of the generator list.

A Schreier entry is one byte:

    bits 0-4  generator index (at most 32 generators per group)
    bit 5     set when the edge used the inverse
    0x40      ROOT, the orbit representative
    0x80      UNSEEN, a point outside the domain or not yet reached
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numba
import numpy as np

from .gf2 import GF2Matrix

ROOT = 0x40
UNSEEN = 0x80
INV_BIT = 0x20
MAX_GENERATORS = 32
WORD_LENGTH = 50
DEFAULT_SEED = 0x5EED_C0DE
BATCH = 16
RETRIES = 4


class LasVegasMismatch(RuntimeError):
    def __init__(self, claimed: int, computed: int):
        super().__init__(f"chain order {computed} differs from claimed {claimed}")
        self.claimed = claimed
        self.computed = computed


class DomainError(ValueError):
    pass


@dataclass(frozen=True)
class ActionGroup:
    n: int
    generators: tuple[GF2Matrix, ...]
    rng_seed: int = DEFAULT_SEED

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        if len(gens) > MAX_GENERATORS:
            raise ValueError(f"at most {MAX_GENERATORS} generators supported")
        for g in gens:
            if g.n != self.n:
                raise ValueError("generator dimension mismatch")

    @property
    def inverses(self) -> tuple[GF2Matrix, ...]:
        return tuple(g.inverse for g in self.generators)

    def tables(self) -> np.ndarray:
        """Lookup tables of shape (2k, 3, 256): g0, g0^-1, g1, g1^-1, ..."""
        k = len(self.generators)
        out = np.zeros((2 * k, 3, 256), dtype=np.uint32)
        for j, g in enumerate(self.generators):
            out[2 * j] = g.tables
            out[2 * j + 1] = g.inverse.tables
        return out

    def letter(self, gen: int, exp: int) -> GF2Matrix:
        return self.generators[gen] if exp > 0 else self.generators[gen].inverse


@dataclass(frozen=True)
class GroupWord:
    letters: tuple[tuple[int, int], ...]
    matrix: GF2Matrix

    @classmethod
    def resolve(cls, G: ActionGroup, letters: Sequence[tuple[int, int]]) -> "GroupWord":
        m = GF2Matrix.identity(G.n)
        for gen, exp in letters:
            m = m @ G.letter(gen, exp)
        return cls(tuple(letters), m)

    def inverse(self, G: ActionGroup) -> "GroupWord":
        return GroupWord(tuple((g, -e) for g, e in reversed(self.letters)),
                         self.matrix.inverse)


@dataclass
class OrbitData:
    n: int
    orbit_id: np.ndarray
    schreier: np.ndarray
    reps: list[int] = field(default_factory=list)
    sizes: list[int] = field(default_factory=list)

    def rep_of(self, p: int) -> int:
        oid = int(self.orbit_id[p])
        if oid < 0:
            raise DomainError(f"point {p} outside the computed domain")
        return self.reps[oid]

    def size_of(self, p: int) -> int:
        return self.sizes[int(self.orbit_id[p])]


@numba.njit(cache=True, nogil=True)
def _image(tables, s, p):
    return (tables[s, 0, p & 0xFF] ^ tables[s, 1, (p >> 8) & 0xFF]
            ^ tables[s, 2, (p >> 16) & 0xFF])


@numba.njit(cache=True, nogil=True)
def _bfs(tables, start, schreier, mask, pts, pos):
    """Expand the orbit of ``start`` into ``pts[pos:]``; return the new end."""
    nlet = tables.shape[0]
    schreier[start] = 0x40
    pts[pos] = start
    lo = pos
    hi = pos + 1
    while lo < hi:
        end = hi
        for i in range(lo, end):
            p = pts[i]
            for s in range(nlet):
                q = _image(tables, s, p)
                if schreier[q] == 0x80 and mask[q]:
                    schreier[q] = (s >> 1) | ((s & 1) << 5)
                    pts[hi] = q
                    hi += 1
        if hi > end:
            pts[end:hi].sort()
        lo = end
    return hi


@numba.njit(cache=True, nogil=True)
def _partition(tables, schreier, orbit_id, mask, pts, reps, sizes):
    npts = schreier.shape[0]
    nlet = tables.shape[0]
    norb = 0
    for p in range(npts):
        if schreier[p] != 0x80 or not mask[p]:
            continue
        fixed = True
        for s in range(0, nlet, 2):
            if _image(tables, s, p) != p:
                fixed = False
                break
        if fixed:
            schreier[p] = 0x40
            orbit_id[p] = norb
            reps[norb] = p
            sizes[norb] = 1
            norb += 1
            continue
        end = _bfs(tables, p, schreier, mask, pts, 0)
        for i in range(end):
            orbit_id[pts[i]] = norb
        reps[norb] = p
        sizes[norb] = end
        norb += 1
    return norb


def _domain_mask(n: int, domain) -> np.ndarray:
    if domain is None:
        return np.ones(1 << n, dtype=np.bool_)
    if callable(domain):
        mask = np.asarray(domain(np.arange(1 << n, dtype=np.uint32)), dtype=np.bool_)
    else:
        mask = np.asarray(domain, dtype=np.bool_)
    if mask.shape != (1 << n,):
        raise ValueError("domain mask must cover all 2**n points")
    return mask


def _closed(G: ActionGroup, mask: np.ndarray) -> None:
    pts = np.flatnonzero(mask).astype(np.uint32)
    for g in G.generators:
        if not mask[g.apply_many(pts)].all():
            raise DomainError("domain is not invariant under the generators")


def orbits(G: ActionGroup, domain: Callable | np.ndarray | None = None) -> OrbitData:
    """Partition the domain (default: all of F_2^n) into orbits."""
    mask = _domain_mask(G.n, domain)
    if domain is not None:
        _closed(G, mask)
    size = 1 << G.n
    schreier = np.full(size, UNSEEN, dtype=np.uint8)
    orbit_id = np.full(size, -1, dtype=np.int32)
    pts = np.empty(size, dtype=np.uint32)
    reps = np.empty(size, dtype=np.int64)
    sizes = np.empty(size, dtype=np.int64)
    tables = G.tables() if G.generators else np.zeros((0, 3, 256), dtype=np.uint32)
    k = _partition(tables, schreier, orbit_id, mask, pts, reps, sizes)
    return OrbitData(G.n, orbit_id, schreier, reps[:k].tolist(), sizes[:k].tolist())


def orbit_of(G: ActionGroup, p: int) -> tuple[OrbitData, np.ndarray]:
    """Single-orbit BFS rooted at ``p``; returns data and the sorted orbit."""
    size = 1 << G.n
    schreier = np.full(size, UNSEEN, dtype=np.uint8)
    pts = np.empty(size, dtype=np.uint32)
    mask = np.ones(size, dtype=np.bool_)
    tables = G.tables() if G.generators else np.zeros((0, 3, 256), dtype=np.uint32)
    end = _bfs(tables, p, schreier, mask, pts, 0)
    orbit = np.sort(pts[:end])
    orbit_id = np.full(size, -1, dtype=np.int32)
    orbit_id[orbit] = 0
    return OrbitData(G.n, orbit_id, schreier, [int(p)], [int(end)]), orbit


def map_to_rep(O: OrbitData, G: ActionGroup, p: int) -> GroupWord:
    """Word w with rep(p) . w = p."""
    if not 0 <= p < (1 << O.n) or O.schreier[p] == UNSEEN:
        raise DomainError(f"point {p} outside the computed domain")
    letters = []
    q = p
    m = GF2Matrix.identity(G.n)
    while True:
        e = int(O.schreier[q])
        if e == ROOT:
            break
        gen, exp = e & 0x1F, (-1 if e & INV_BIT else 1)
        letters.append((gen, exp))
        q = G.letter(gen, -exp).apply(q)
    letters.reverse()
    for gen, exp in letters:
        m = m @ G.letter(gen, exp)
    return GroupWord(tuple(letters), m)


def random_word(G: ActionGroup, rng: np.random.Generator,
                length: int = WORD_LENGTH) -> GF2Matrix:
    m = GF2Matrix.identity(G.n)
    if not G.generators:
        return m
    for s in rng.integers(0, 2 * len(G.generators), size=length):
        m = m @ G.letter(int(s) >> 1, -1 if s & 1 else 1)
    return m


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed))


def random_stabilizer_element(O: OrbitData, G: ActionGroup, p: int, count: int,
                              seed: int | None = None) -> list[GF2Matrix]:
    """``count`` seeded elements of the stabilizer of ``p``."""
    v = map_to_rep(O, G, p).matrix
    rng = _rng(G.rng_seed if seed is None else seed)
    out = []
    for _ in range(count):
        g1 = random_word(G, rng)
        q = g1.apply(p)
        w = map_to_rep(O, G, q).matrix
        # p.g1 = q = rep.w and rep.v = p, so g1 w^-1 v fixes p
        out.append(g1 @ w.inverse @ v)
    return out


@dataclass(frozen=True)
class ChainLevel:
    base_point: int
    orbit_size: int


def _nontrivial(gens: Sequence[GF2Matrix]) -> list[GF2Matrix]:
    return [g for g in gens if not g.is_identity()]


def stabilizer_chain(G: ActionGroup, base: Sequence[int] | None = None,
                     batch: int = BATCH, seed: int | None = None,
                     progress: Callable[[str], None] | None = None) -> list[ChainLevel]:
    """Orbit sizes along the chain.

    Base points are tried in order: the optional ``base`` prefix, then the
    unit vectors e_0 .. e_{n-1}; points fixed by the current subgroup are
    skipped.
    """
    seed = G.rng_seed if seed is None else seed
    candidates = list(base or []) + [1 << i for i in range(G.n)]
    gens = _nontrivial(G.generators)
    levels: list[ChainLevel] = []
    depth = 0
    for p in candidates:
        if not gens:
            break
        if all(g.apply(p) == p for g in gens):
            continue
        H = ActionGroup(G.n, tuple(gens), seed + depth)
        O, orbit = orbit_of(H, p)
        levels.append(ChainLevel(p, len(orbit)))
        if progress:
            progress(f"level {depth}: base {p:#x} orbit {len(orbit)}")
        gens = _nontrivial(random_stabilizer_element(O, H, p, batch,
                                                     seed=seed + 7919 * (depth + 1)))
        depth += 1
    return levels


def order_via_chain(G: ActionGroup, claimed: int | None = None,
                    base: Sequence[int] | None = None,
                    progress: Callable[[str], None] | None = None) -> int:
    """Group order as the product of chain orbit sizes.

    Without ``claimed`` the result is a Monte Carlo lower bound.  With it the
    chain is rerun with a fresh seed and a larger batch up to ``RETRIES``
    times, and LasVegasMismatch is raised if no run reaches the claim.
    """
    attempts = 1 if claimed is None else 1 + RETRIES
    batch = BATCH
    order = 1
    for attempt in range(attempts):
        levels = stabilizer_chain(G, base, batch=batch,
                                  seed=G.rng_seed + 104729 * attempt, progress=progress)
        order = 1
        for lv in levels:
            order *= lv.orbit_size
        if claimed is None or order == claimed:
            return order
        batch = min(2 * batch, MAX_GENERATORS)
    raise LasVegasMismatch(claimed, order)


def format_orbits(O: OrbitData) -> str:
    lines = [f"ORBITS {O.n} {len(O.reps)}"]
    lines += [f"{r} {s}" for r, s in zip(O.reps, O.sizes)]
    return "\n".join(lines) + "\n"
