"""Write data/monster.cert from the transition matrices and published values.

Claims come from the orbit tables and the published orders.  Nothing here
is computed from the claims themselves; the verifier does that.
"""
from __future__ import annotations

import argparse
from pathlib import Path

from axcount import counting, tables
from axcount._data import data_path
from axcount.certificate import Certificate, MatrixSection, format_certificate, parse

CO2_ORDER = 42305421312000
MONSTER = 808017424794512875886459904961710757005754368000000000
MONSTER_FACTORS = "2^46 3^20 5^9 7^6 11^2 13^3 17 19 23 29 31 41 47 59 71"
BABY = 4154781481226426191177580544000000
# the printed factor list for this order also contains 41; its product is
# then 41 times the order, so the list is taken from the integer instead
BABY_FACTORS = "2^41 3^13 5^6 7^2 11 13 17 19 23 31 47"

COMMENT = """\
Orbit sizes of axes and feasible axes, and the resulting group orders.
Scope: transition matrices, anchors, claimed orbit sizes and orders only.
Group-element words and axis data are not included; the entries of the
transition matrices are taken as given."""


def factors(s: str) -> dict[int, int]:
    out = {}
    for t in s.split():
        p, _, e = t.partition("^")
        out[int(p)] = int(e) if e else 1
    return out


def section(matrix_file: str, colsum: int, rows, anchor: str) -> MatrixSection:
    M = counting.load_transition_matrix(matrix_file, colsum)
    claims = {r.label: r.size for r in rows}
    return MatrixSection(M.labels, M.colsum, M.entries, (anchor, claims[anchor]),
                         claims, sum(claims.values()))


def build() -> Certificate:
    return Certificate(
        section("table2.txt", 16584750, tables.table1(), "2A"),
        section("table4.txt", 93150, tables.table3(), "2A1"),
        CO2_ORDER, MONSTER, factors(MONSTER_FACTORS), BABY, factors(BABY_FACTORS))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=data_path("monster.cert"))
    args = ap.parse_args()
    text = format_certificate(build(), COMMENT)
    parse(text)
    args.out.write_text(text, encoding="utf-8")
    print(f"wrote {args.out} ({len(text)} bytes)")


if __name__ == "__main__":
    main()
