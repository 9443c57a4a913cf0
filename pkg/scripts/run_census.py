"""Run the Leech mod 2 type census and optionally save the type table."""
from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from axcount import leech


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--out", type=Path, help="write the type table here")
    args = ap.parse_args()
    t0 = time.perf_counter()
    table = leech.build_type_table(args.threads,
                                   progress=lambda s: print(s, file=sys.stderr))
    dt = time.perf_counter() - t0
    for k, v in table.census.items():
        print(f"type {k}: {v}")
    for n, v in table.norm_totals.items():
        print(f"norm {n}: {v}")
    print(f"elapsed: {dt:.1f} s with {args.threads} thread(s)")
    if args.out:
        table.save(args.out)
        print(f"saved {args.out}")


if __name__ == "__main__":
    main()
