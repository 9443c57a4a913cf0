"""Generators of Co_0 = Aut(Leech) and their action on Leech mod 2.

Matrices act on row vectors (``x -> x @ g``).  Entries lie in Z[1/2], so a
matrix is stored as the integer matrix ``2g``.

The generating set is:
  * the permutation matrices of the two M24 generators;
  * the sign change on the octad formed by MOG columns 0 and 1;
  * xi, which acts on each MOG column tetrad by +-(J/2 - I), J the all-ones
    4x4 matrix, with the signs chosen so the result preserves the lattice.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache

import numpy as np

from ._data import data_lines
from .gf2 import GF2Matrix
from .golay import m24_generators
from .leech import DIM, is_member, lambda_omega, leech_basis, to_leech2_many
from .orbit_engine import DEFAULT_SEED, ActionGroup, order_via_chain

DENOM = 2


@dataclass(frozen=True)
class IntegralAutomorphism:
    twice: np.ndarray  # 2g as int64
    name: str = ""

    @classmethod
    def from_rational(cls, g: np.ndarray, name: str = "") -> "IntegralAutomorphism":
        t = np.asarray(g, dtype=float) * DENOM
        if not np.allclose(t, np.round(t)):
            raise ValueError("entries must lie in (1/2)Z")
        return cls(np.round(t).astype(np.int64), name)

    @classmethod
    def identity(cls) -> "IntegralAutomorphism":
        return cls(DENOM * np.eye(DIM, dtype=np.int64), "1")

    def apply(self, x: np.ndarray) -> np.ndarray:
        y = np.asarray(x, dtype=np.int64) @ self.twice
        if (y % DENOM).any():
            raise ValueError("image is not an integer vector")
        return y // DENOM

    def __matmul__(self, other: "IntegralAutomorphism") -> "IntegralAutomorphism":
        t = self.twice @ other.twice
        if (t % DENOM).any():
            raise ValueError("product has entries outside (1/2)Z")
        return IntegralAutomorphism(t // DENOM, f"{self.name}{other.name}")

    @property
    def is_monomial(self) -> bool:
        return bool(((self.twice != 0).sum(axis=1) == 1).all())


def verify_automorphism(g: IntegralAutomorphism) -> bool:
    t = np.asarray(g.twice, dtype=np.int64)
    if t.shape != (DIM, DIM):
        return False
    if not np.array_equal(t @ t.T, DENOM * DENOM * np.eye(DIM, dtype=np.int64)):
        return False
    B = leech_basis().rows
    images = B @ t
    if (images % DENOM).any():
        return False
    images //= DENOM
    if not all(is_member(r) for r in images):
        return False
    # orthogonal + maps the lattice into itself; unimodular, so onto
    return bool(np.array_equal(images @ images.T, B @ B.T))


def reduce_mod2(g: IntegralAutomorphism) -> GF2Matrix:
    if not verify_automorphism(g):
        raise ValueError("not a lattice automorphism")
    images = g.apply(leech_basis().rows)
    return GF2Matrix(DIM, tuple(int(v) for v in to_leech2_many(images)))


def permutation_matrix(perm) -> IntegralAutomorphism:
    t = np.zeros((DIM, DIM), dtype=np.int64)
    for i, p in enumerate(perm):
        t[i, p] = DENOM
    return IntegralAutomorphism(t)


def sign_change(word: int) -> IntegralAutomorphism:
    d = [-DENOM if word >> i & 1 else DENOM for i in range(DIM)]
    return IntegralAutomorphism(np.diag(d).astype(np.int64), "eps")


def xi_candidates():
    """All 64 sign variants of the tetrad block map J/2 - I on MOG columns.

    Variants negating exactly one tetrad come first, starting with column 0.
    """
    block = np.ones((4, 4), dtype=np.int64) - 2 * np.eye(4, dtype=np.int64)  # 2(J/2 - I)
    single = [tuple(-1 if c == k else 1 for c in range(6)) for k in range(6)]
    rest = [s for s in itertools.product((1, -1), repeat=6) if s not in single]
    for signs in single + rest:
        t = np.zeros((DIM, DIM), dtype=np.int64)
        for c, s in enumerate(signs):
            t[4 * c:4 * c + 4, 4 * c:4 * c + 4] = s * block
        yield signs, IntegralAutomorphism(t, "xi")


OCTAD_COLUMNS_01 = 0xFF


def construct_generators() -> list[IntegralAutomorphism]:
    """Build the generating set from scratch (used to write the data file)."""
    gens = [permutation_matrix(g.perm) for g in m24_generators()]
    gens.append(sign_change(OCTAD_COLUMNS_01))
    for _, xi in xi_candidates():
        if verify_automorphism(xi):
            gens.append(xi)
            break
    else:
        raise RuntimeError("no sign variant of the tetrad map preserves the lattice")
    return gens


def format_generators(gens) -> str:
    lines = [f"DENOM {DENOM}"]
    for g in gens:
        lines.append("")
        lines.extend(" ".join(str(int(v)) for v in row) for row in g.twice)
    return "\n".join(lines) + "\n"


@cache
def co0_generators() -> tuple[IntegralAutomorphism, ...]:
    lines = data_lines("co0_generators.txt")
    if not lines or lines[0] != f"DENOM {DENOM}":
        raise RuntimeError("co0_generators.txt must start with 'DENOM 2'")
    rows = [[int(v) for v in line.split()] for line in lines[1:]]
    if len(rows) % DIM:
        raise RuntimeError("co0_generators.txt holds a partial matrix")
    gens = tuple(IntegralAutomorphism(np.array(rows[k:k + DIM], dtype=np.int64), f"g{k // DIM}")
                 for k in range(0, len(rows), DIM))
    for g in gens:
        if not verify_automorphism(g):
            raise RuntimeError(f"generator {g.name} fails lattice verification")
    return gens


@cache
def co1_generators() -> tuple[GF2Matrix, ...]:
    return tuple(reduce_mod2(g) for g in co0_generators())


def co1_action(seed: int | None = None) -> ActionGroup:
    return ActionGroup(DIM, co1_generators(), DEFAULT_SEED if seed is None else seed)


def co1_order(seed: int | None = None, claimed: int | None = None, progress=None) -> int:
    """|Co1| by the stabilizer chain, with lambda_Omega as first base point."""
    return order_via_chain(co1_action(seed), claimed=claimed,
                           base=[lambda_omega().index], progress=progress)
