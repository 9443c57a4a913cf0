"""Stabilizer-chain orders of M24 and Co1 over several seeds, with timings."""
from __future__ import annotations

import argparse
import time

from axcount import conway, golay
from axcount.orbit_engine import DEFAULT_SEED, ActionGroup, stabilizer_chain

M24 = 244823040
CO1 = 4157776806543360000


def report(name: str, G: ActionGroup, base, want: int, seed: int) -> None:
    t0 = time.perf_counter()
    levels = stabilizer_chain(G, base, seed=seed)
    order = 1
    for lv in levels:
        order *= lv.orbit_size
    dt = time.perf_counter() - t0
    sizes = " ".join(str(lv.orbit_size) for lv in levels)
    print(f"{name} seed {seed:#x}: {order} ({'ok' if order == want else 'LOW'}) "
          f"levels [{sizes}] {dt:.1f} s")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seeds", type=int, default=3)
    args = ap.parse_args()
    m24 = ActionGroup(24, tuple(g.matrix() for g in golay.m24_generators()))
    for k in range(args.seeds):
        seed = DEFAULT_SEED + k
        report("M24", m24, None, M24, seed)
        report("Co1", conway.co1_action(seed), [conway.lambda_omega().index], CO1, seed)


if __name__ == "__main__":
    main()
