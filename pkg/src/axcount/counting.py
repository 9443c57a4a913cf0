"""Orbit sizes from transition matrices, and the final order arithmetic."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from ._data import data_lines

TWO_24 = 1 << 24
MONSTER_DIM = 196884


class CountingError(ValueError):
    pass


class ColumnSumError(CountingError):
    pass


class KernelDimension(CountingError):
    pass


class NonIntegralSizes(CountingError):
    pass


class NonPositive(CountingError):
    pass


class NotRegular(CountingError):
    pass


class NonIntegral(CountingError):
    pass


class IncompleteFactorization(CountingError):
    pass


@dataclass(frozen=True)
class TransitionMatrix:
    """Entry (i, j) counts moves from orbit j to orbit i; columns sum to colsum."""

    labels: tuple[str, ...]
    entries: tuple[tuple[int, ...], ...]
    colsum: int

    def __post_init__(self):
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise CountingError("duplicate labels")
        if len(self.entries) != n or any(len(r) != n for r in self.entries):
            raise CountingError(f"matrix is not {n}x{n}")
        if any(v < 0 for r in self.entries for v in r):
            raise NonPositive("negative entry")
        self.check_columns()

    @property
    def n(self) -> int:
        return len(self.labels)

    def column_sums(self) -> list[int]:
        return [sum(r[j] for r in self.entries) for j in range(self.n)]

    def check_columns(self) -> None:
        for j, s in enumerate(self.column_sums()):
            if s != self.colsum:
                raise ColumnSumError(f"column {self.labels[j]} sums to {s}, not {self.colsum}")

    def replace(self, i: int, j: int, value: int) -> "TransitionMatrix":
        rows = [list(r) for r in self.entries]
        rows[i][j] = value
        return TransitionMatrix(self.labels, tuple(map(tuple, rows)), self.colsum)


@dataclass(frozen=True)
class OrbitSizeVector:
    sizes: dict[str, int]

    @property
    def total(self) -> int:
        return sum(self.sizes.values())

    def __getitem__(self, label: str) -> int:
        return self.sizes[label]


def parse_value(tok: str) -> int:
    return 0 if tok == "." else int(tok)


def load_transition_matrix(name: str, colsum: int) -> TransitionMatrix:
    """Read ``labels`` then one row per label; a leading row label is optional."""
    lines = data_lines(name)
    labels = tuple(lines[0].split())
    rows = []
    for line, label in zip(lines[1:], labels):
        toks = line.split()
        if toks and toks[0].rstrip(":") == label:
            toks = toks[1:]
        rows.append(tuple(parse_value(t) for t in toks))
    if len(rows) != len(labels) or len(lines) != len(labels) + 1:
        raise CountingError(f"{name}: expected {len(labels)} rows")
    return TransitionMatrix(labels, tuple(rows), colsum)


def kernel(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Basis of the right null space, by Gauss-Jordan over exact rationals."""
    a = [list(map(Fraction, r)) for r in rows]
    nrows, ncols = len(a), len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        a[r] = [v / p for v in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -a[i][f]
        basis.append(v)
    return basis


def orbit_sizes(M: TransitionMatrix, anchor_label: str, anchor_size: int) -> OrbitSizeVector:
    """The eigenvector of M for eigenvalue colsum, scaled to the anchor."""
    M.check_columns()
    if anchor_label not in M.labels:
        raise CountingError(f"unknown anchor label {anchor_label}")
    n = M.n
    shifted = [[Fraction(M.entries[i][j] - (M.colsum if i == j else 0)) for j in range(n)]
               for i in range(n)]
    ker = kernel(shifted)
    if len(ker) != 1:
        raise KernelDimension(f"eigenspace has dimension {len(ker)}")
    v = ker[0]
    a = M.labels.index(anchor_label)
    if v[a] == 0:
        raise NonPositive("anchor coordinate of the eigenvector is zero")
    scaled = [x * anchor_size / v[a] for x in v]
    if any(x.denominator != 1 for x in scaled):
        raise NonIntegralSizes("scaled eigenvector is not integral")
    if any(x <= 0 for x in scaled):
        raise NonPositive("scaled eigenvector has a non-positive entry")
    return OrbitSizeVector({lab: int(x) for lab, x in zip(M.labels, scaled)})


def regularity_index(M: TransitionMatrix, limit: int | None = None) -> int:
    """Smallest k <= limit (default: the dimension) with M^k entrywise positive."""
    M.check_columns()
    n = M.n
    limit = n if limit is None else limit
    pattern = [[v > 0 for v in r] for r in M.entries]
    power = pattern
    for k in range(1, limit + 1):
        if all(all(r) for r in power):
            return k
        power = [[any(power[i][t] and pattern[t][j] for t in range(n)) for j in range(n)]
                 for i in range(n)]
    raise NotRegular(f"no power up to {limit} is positive")


def _positive(*xs: int) -> None:
    if any(x <= 0 for x in xs):
        raise CountingError("inputs must be positive")


def monster_order(x_plus: int, x_minus: int, co2_order: int) -> int:
    _positive(x_plus, x_minus, co2_order)
    return x_plus * x_minus * TWO_24 * co2_order


def baby_monster_order(x_minus: int, co2_order: int) -> int:
    _positive(x_minus, co2_order)
    n = x_minus * TWO_24 * co2_order
    if n % 2:
        raise NonIntegral("odd product cannot be halved")
    return n // 2


def _primes(bound: int) -> list[int]:
    sieve = bytearray([1]) * (bound + 1)
    sieve[:2] = b"\x00\x00"
    for p in range(2, int(bound ** 0.5) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytearray(len(sieve[p * p::p]))
    return [p for p in range(bound + 1) if sieve[p]]


def factorize(n: int, bound: int = 10_000) -> dict[int, int]:
    if n < 1:
        raise ValueError("n must be positive")
    out: dict[int, int] = {}
    for p in _primes(bound):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        if n == 1:
            break
    if n != 1:
        raise IncompleteFactorization(f"cofactor {n} has no prime factor <= {bound}")
    return out


def format_factors(f: dict[int, int]) -> str:
    return " ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in sorted(f.items()))


def sylow11_check() -> tuple[Fraction, bool]:
    """(196884 + (11^3 - 1) 17) / 11^3 and whether it fails to be an integer."""
    q = 11 ** 3
    value = Fraction(MONSTER_DIM + (q - 1) * 17, q)
    assert gcd(value.numerator, value.denominator) == 1
    return value, value.denominator != 1
