"""Orbit tables, fusion rows, and their arithmetic consistency."""
from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cache
from math import factorial, gcd, prod

from ._data import data_lines

SHORT_CLASSES = 98280
N_XYZ_COSETS = 6  # |N_0 : N_xyz| = |S_3|


@dataclass(frozen=True)
class GOrbitRow:
    label: str
    n_x0_suborbits: int
    n_xyz_suborbits: int
    size: int
    q_part_order: int
    quotient: str
    quotient_order: int


@dataclass(frozen=True)
class FusionRow:
    number: int
    e_part: str
    g_part: str
    g_order: int
    s_order: int
    printed: str
    parts: tuple[tuple[str, int], ...]  # (label, smallest constituents inside)


@dataclass
class Report:
    name: str
    failures: list[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, cond: bool, msg: str) -> None:
        if not cond:
            self.failures.append(msg)

    def __str__(self) -> str:
        head = f"{self.name}: {'ok' if self.ok else 'FAILED'}"
        return "\n".join([head] + [f"  {m}" for m in self.failures])


# --- classical orders ----------------------------------------------------------

@cache
def classical_orders() -> dict[str, int]:
    out = {}
    for line in data_lines("classical_orders.txt"):
        name, value = line.split()
        out[name] = int(value)
    return out


def alternating_order(n: int) -> int:
    return factorial(n) // 2


def symplectic_order(n: int, q: int) -> int:
    """|S_2n(q)|, the simple symplectic group."""
    return q ** (n * n) * prod(q ** (2 * i) - 1 for i in range(1, n + 1)) // gcd(2, q - 1)


def unitary_order(n: int, q: int) -> int:
    """|U_n(q)|, the simple unitary group."""
    return (q ** (n * (n - 1) // 2) * prod(q ** i - (-1) ** i for i in range(2, n + 1))
            // gcd(n, q + 1))


def orthogonal_plus_order(n: int, q: int) -> int:
    """|O_2n^+(q)|, the simple orthogonal group of plus type."""
    return (q ** (n * (n - 1)) * (q ** n - 1) * prod(q ** (2 * i) - 1 for i in range(1, n))
            // gcd(4, q ** n - 1))


def linear_order(n: int, q: int) -> int:
    """|L_n(q)|, the simple linear group."""
    return (q ** (n * (n - 1) // 2) * prod(q ** i - 1 for i in range(2, n + 1))
            // gcd(n, q - 1))


def formula_orders() -> dict[str, int]:
    return {
        "A5": alternating_order(5),
        "A8": alternating_order(8),
        "A9": alternating_order(9),
        "S6": factorial(6),
        "S6(2)": symplectic_order(3, 2),
        "U4(2)": unitary_order(4, 2),
        "U6(2)": unitary_order(6, 2),
        "O8+(2)": orthogonal_plus_order(4, 2),
        "L3(4)": linear_order(3, 4),
    }


def check_classical_orders() -> Report:
    rep = Report("classical orders")
    emb = classical_orders()
    for name, value in formula_orders().items():
        rep.check(emb.get(name) == value, f"{name}: embedded {emb.get(name)} != formula {value}")
    return rep


def evaluate_order(expr: str, orders: dict[str, int] | None = None) -> int:
    """Product of factors: integers, 2^k, or names of classical groups."""
    orders = orders or classical_orders()
    total = 1
    for tok in (t.strip() for t in expr.split("*")):
        if re.fullmatch(r"\d+", tok):
            total *= int(tok)
        elif m := re.fullmatch(r"(\d+)\^(\d+)", tok):
            total *= int(m[1]) ** int(m[2])
        elif tok in orders:
            total *= orders[tok]
        else:
            raise ValueError(f"unknown factor {tok!r}")
    return total


# --- loaders -------------------------------------------------------------------

def _fields(line: str) -> list[str]:
    return [f.strip() for f in line.split("|")]


@cache
def load_orbit_table(name: str) -> tuple[GOrbitRow, ...]:
    rows = []
    for line in data_lines(name):
        f = _fields(line)
        if len(f) != 7:
            raise ValueError(f"{name}: expected 7 fields in {line!r}")
        rows.append(GOrbitRow(f[0], int(f[1]), int(f[2]), int(f[3]),
                              evaluate_order(f[4], {}), f[5], evaluate_order(f[6])))
    return tuple(rows)


def parse_fusion(printed: str) -> list[tuple[str, int]]:
    """Read the printed notation: 'A^3', 'A,B^2' or 'A,B,C' -> (label, power)."""
    out = []
    for tok in printed.split(","):
        label, _, power = tok.partition("^")
        out.append((label, int(power) if power else 1))
    return out


def expected_parts(s_order: int, printed: str) -> tuple[tuple[str, int], ...]:
    """Apply the fusion rules to the printed notation."""
    toks = parse_fusion(printed)
    if s_order == 1:
        if len(toks) != 3 or any(p != 1 for _, p in toks):
            raise ValueError(f"|S| = 1 needs three plain labels: {printed}")
        return tuple((lab, 2) for lab, _ in toks)
    if s_order == 2:
        if len(toks) != 2 or sorted(p for _, p in toks) != [1, 2]:
            raise ValueError(f"|S| = 2 needs one plain and one squared label: {printed}")
        small = next(lab for lab, p in toks if p == 1)
        large = next(lab for lab, p in toks if p == 2)
        return ((small, 1), (large, 2))
    if s_order in (3, 6):
        if len(toks) != 1 or toks[0][1] != 3:
            raise ValueError(f"|S| = {s_order} needs a single cubed label: {printed}")
        return ((toks[0][0], 2 if s_order == 3 else 1),)
    raise ValueError(f"|S| = {s_order} is not a subgroup order of S_3")


@cache
def load_fusion_table(name: str) -> tuple[FusionRow, ...]:
    rows = []
    for line in data_lines(name):
        f = _fields(line)
        if len(f) != 7:
            raise ValueError(f"{name}: expected 7 fields in {line!r}")
        parts = tuple((lab, int(k)) for lab, k in (t.split(":") for t in f[6].split()))
        row = FusionRow(int(f[0]), f[1], f[2], int(f[3]), int(f[4]), f[5], parts)
        if sorted(row.parts) != sorted(expected_parts(row.s_order, row.printed)):
            raise ValueError(f"{name} row {row.number}: encoding disagrees with {row.printed}")
        rows.append(row)
    return tuple(rows)


def table1() -> tuple[GOrbitRow, ...]:
    return load_orbit_table("table1.txt")


def table3() -> tuple[GOrbitRow, ...]:
    return load_orbit_table("table3.txt")


def table5() -> tuple[FusionRow, ...]:
    return load_fusion_table("table5.txt")


def table6() -> tuple[FusionRow, ...]:
    return load_fusion_table("table6.txt")


# --- checks --------------------------------------------------------------------

def check_suborbit_totals() -> Report:
    rep = Report("suborbit totals")
    for name, rows, fusion, want in (("table 1", table1(), table5(), (251, 405, 123)),
                                     ("table 3", table3(), table6(), (59, 87, 32))):
        got = (sum(r.n_x0_suborbits for r in rows), sum(r.n_xyz_suborbits for r in rows),
               len(fusion))
        rep.details[name] = got
        rep.check(got == want, f"{name}: totals {got} != {want}")
        by_rule = (sum(len(f.parts) for f in fusion),
                   sum(N_XYZ_COSETS // f.s_order for f in fusion))
        rep.check(by_rule == want[:2], f"{name}: fusion rows give {by_rule} != {want[:2]}")
    return rep


def fusion_aggregate(fusion) -> dict[str, tuple[int, int]]:
    agg: dict[str, list[int]] = defaultdict(lambda: [0, 0])
    for row in fusion:
        for label, k in row.parts:
            agg[label][0] += 1
            agg[label][1] += k
    return {lab: (a, b) for lab, (a, b) in agg.items()}


def check_fusion(fusion, orbit_rows, name: str = "fusion") -> Report:
    rep = Report(name)
    agg = fusion_aggregate(fusion)
    labels = {r.label for r in orbit_rows}
    rep.check(set(agg) <= labels, f"unknown labels {sorted(set(agg) - labels)}")
    for r in orbit_rows:
        got = agg.get(r.label, (0, 0))
        rep.details[r.label] = got
        rep.check(got == (r.n_x0_suborbits, r.n_xyz_suborbits),
                  f"{r.label}: fusion gives {got}, table has "
                  f"{(r.n_x0_suborbits, r.n_xyz_suborbits)}")
    return rep


def check_stabilizer_products(co1_order: int, orders: dict[str, int] | None = None) -> Report:
    """size * |C cap Q| * |C/(C cap Q)| against 2^25 |Co1| and 2^24 |Co2|."""
    rep = Report("stabilizer products")
    if co1_order % SHORT_CLASSES:
        rep.check(False, "|Co1| is not divisible by 98280")
        return rep
    co2 = co1_order // SHORT_CLASSES
    orders = dict(orders or classical_orders())
    rep.check(orders.get("Co2") == co2, f"embedded Co2 {orders.get('Co2')} != |Co1|/98280 = {co2}")
    orders["Co2"] = co2
    for rows, target, name in ((table1(), 2 ** 25 * co1_order, "table 1"),
                               (table3(), 2 ** 24 * co2, "table 3")):
        for r in rows:
            q = evaluate_order(_quotient_expr(r), orders)
            lhs = r.size * r.q_part_order * q
            rep.check(lhs == target, f"{name} {r.label}: {lhs} != {target}")
            rep.details[r.label] = lhs == target
    return rep


@cache
def _quotient_exprs() -> dict[str, str]:
    out = {}
    for name in ("table1.txt", "table3.txt"):
        for line in data_lines(name):
            f = _fields(line)
            out[f[0]] = f[6]
    return out


def _quotient_expr(row: GOrbitRow) -> str:
    return _quotient_exprs()[row.label]


def e_order(e: str) -> int:
    """Order of E from '2^{a+b+c}', '2^k', '2' or '1'."""
    if e == "1":
        return 1
    if e == "2":
        return 2
    m = re.fullmatch(r"2\^\{?([\d+]+)\}?", e)
    if not m:
        raise ValueError(f"cannot read {e!r}")
    return 2 ** sum(int(x) for x in m[1].split("+"))


def orbit_sizes_from_fusion(fusion, group_order: int) -> dict[str, int]:
    """Sizes of the larger orbits, summing |group|/|C| over fusion rows.

    Each row's orbit splits into 6/|S| equal smallest constituents, shared
    out between labels as the encoded column says.
    """
    sizes: dict[str, int] = defaultdict(int)
    for row in fusion:
        stab = e_order(row.e_part) * row.g_order * row.s_order
        if group_order % stab:
            raise ValueError(f"row {row.number}: |C| does not divide the group order")
        orbit = group_order // stab
        piece = orbit * row.s_order // N_XYZ_COSETS
        for label, k in row.parts:
            sizes[label] += k * piece
    return dict(sizes)


def check_fusion_sizes(m24_order: int) -> Report:
    """Orbit sizes rebuilt from the stabilizer columns of Tables 5 and 6."""
    rep = Report("fusion orbit sizes")
    m22_2 = 2 * classical_orders()["M22"]
    for fusion, rows, order, name in (
            (table5(), table1(), 2 ** 35 * m24_order * 6, "table 5"),
            (table6(), table3(), 2 ** 33 * m22_2 * 6, "table 6")):
        sizes = orbit_sizes_from_fusion(fusion, order)
        for r in rows:
            rep.check(sizes.get(r.label) == r.size,
                      f"{name} {r.label}: {sizes.get(r.label)} != {r.size}")
    return rep


def check_against_counting(rows, sizes: dict[str, int],
                           name: str = "orbit table vs recovered sizes") -> Report:
    rep = Report(name)
    for r in rows:
        rep.check(sizes.get(r.label) == r.size, f"{r.label}: {sizes.get(r.label)} != {r.size}")
    return rep


def check_all(co1_order: int, m24_order: int) -> list[Report]:
    return [check_suborbit_totals(),
            check_fusion(table5(), table1(), "fusion table 5 -> table 1"),
            check_fusion(table6(), table3(), "fusion table 6 -> table 3"),
            check_classical_orders(),
            check_stabilizer_products(co1_order),
            check_fusion_sizes(m24_order)]
