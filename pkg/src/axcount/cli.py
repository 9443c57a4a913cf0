"""Command line entry point.

Exit codes: 0 success, 1 a check failed, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import conway, counting, golay, leech, spectrum, tables
from .certificate import ParseError, parse, verify
from .orbit_engine import DEFAULT_SEED, ActionGroup, LasVegasMismatch, order_via_chain

OK, FAILED, USAGE = 0, 1, 2

ANCHORS = {"axes": ("table2.txt", 16584750, "2A", 2 * 98280),
           "feasible": ("table4.txt", 93150, "2A1", 1)}


def _progress(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


def _emit(args, doc: dict, text: str) -> None:
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_golay_check(args) -> int:
    code = golay.build_golay()
    enum = code.weight_enumerator()
    census: dict[int, int] = {}
    for s in range(1 << 12):
        w = code.coset(s).weight
        census[w] = census.get(w, 0) + 1
    gens = golay.m24_generators()
    preserved = all(golay.preserves_code(g, code) for g in gens)
    ok = (enum == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}
          and census == {0: 1, 1: 24, 2: 276, 3: 2024, 4: 1771} and preserved)
    doc = {"weight_enumerator": enum, "cocode_weights": dict(sorted(census.items())),
           "m24_generators": len(gens), "generators_preserve_code": preserved, "ok": ok}
    text = "\n".join([f"weight enumerator: {enum}",
                      f"cocode weights:    {dict(sorted(census.items()))}",
                      f"M24 generators preserve the code: {preserved}",
                      f"result: {'ok' if ok else 'FAILED'}"])
    _emit(args, doc, text)
    return OK if ok else FAILED


def cmd_census(args) -> int:
    try:
        t = leech.build_type_table(args.threads, args.cache, progress=_progress)
    except leech.CensusError as e:
        _emit(args, {"ok": False, "error": str(e)}, f"census FAILED: {e}")
        return FAILED
    ok = t.census == leech.TYPE_CENSUS
    doc = {"types": t.census, "norm_totals": t.norm_totals,
           "multiplicities": leech.MULTIPLICITY, "ok": ok}
    lines = [f"type {k}: {v}" for k, v in t.census.items()]
    if t.norm_totals:
        lines += [f"norm {n} vectors: {v}" for n, v in t.norm_totals.items()]
        lines.append("hit multiplicities 2 / 2 / 48: verified")
    else:
        lines.append("(loaded from cache)")
    _emit(args, doc, "\n".join(lines))
    return OK if ok else FAILED


def cmd_spectrum(args) -> int:
    p = spectrum.short_vector_profile(spectrum.DEFAULT_R)
    s = spectrum.eigenspace_dims(p)
    doc = {"buckets": {f"{ip}/{par}": n for (ip, par), n in sorted(p.buckets.items())},
           "pairs": p.pairs, "dimensions": s.dims, "total": s.total}
    _emit(args, doc, spectrum.render(p, s))
    return OK if s.total == spectrum.DIM_B else FAILED


def cmd_co1_order(args) -> int:
    try:
        order = conway.co1_order(args.seed, args.claim, progress=_progress)
    except LasVegasMismatch as e:
        _emit(args, {"claimed": e.claimed, "computed": e.computed, "las_vegas": False},
              f"Las Vegas check FAILED: {e}")
        return FAILED
    co2, rem = divmod(order, 98280)
    doc = {"co1": order, "co2": co2 if not rem else None, "seed": args.seed}
    lines = [f"|Co1| >= {order}" if args.claim is None else f"|Co1| = {order}",
             f"|Co2| = |Co1| / 98280 = {co2}" if not rem else "98280 does not divide |Co1|"]
    if args.claim is not None:
        doc["las_vegas"] = True
        lines.append("Las Vegas check: claimed order reached")
    _emit(args, doc, "\n".join(lines))
    return OK


def _sizes(table: str) -> counting.OrbitSizeVector:
    name, colsum, label, size = ANCHORS[table]
    return counting.orbit_sizes(counting.load_transition_matrix(name, colsum), label, size)


def cmd_orbit_sizes(args) -> int:
    s = _sizes(args.table)
    w = max(map(len, s.sizes))
    text = "\n".join([f"{k.ljust(w)}  {v:>24}" for k, v in s.sizes.items()]
                     + [f"{'total'.ljust(w)}  {s.total:>24}"])
    _emit(args, {"table": args.table, "sizes": s.sizes, "total": s.total}, text)
    return OK


def cmd_monster_order(args) -> int:
    co1 = conway.co1_order(args.seed, progress=_progress)
    co2 = co1 // 98280
    xp, xm = _sizes("axes").total, _sizes("feasible").total
    m = counting.monster_order(xp, xm, co2)
    b = counting.baby_monster_order(xm, co2)
    mf, bf = counting.factorize(m), counting.factorize(b)
    doc = {"x_plus": xp, "x_minus": xm, "co2": co2, "monster": m,
           "monster_factors": {str(p): e for p, e in mf.items()},
           "baby": b, "baby_factors": {str(p): e for p, e in bf.items()}}
    text = "\n".join([f"|X+| = {xp}", f"|X-| = {xm}", f"|Co2| = {co2}",
                      f"|M| = {m}", f"    = {counting.format_factors(mf)}",
                      f"|B| = {b}", f"    = {counting.format_factors(bf)}"])
    _emit(args, doc, text)
    return OK


def cmd_tables_check(args) -> int:
    co1 = conway.co1_order(args.seed, progress=_progress)
    m24 = order_via_chain(ActionGroup(24, tuple(g.matrix() for g in golay.m24_generators()),
                                      args.seed))
    reports = tables.check_all(co1, m24)
    reports.append(tables.check_against_counting(tables.table1(), _sizes("axes").sizes,
                                                 "table 1 vs table 2 eigenvector"))
    reports.append(tables.check_against_counting(tables.table3(), _sizes("feasible").sizes,
                                                 "table 3 vs table 4 eigenvector"))
    ok = all(r.ok for r in reports)
    doc = {"reports": {r.name: {"ok": r.ok, "failures": r.failures} for r in reports},
           "ok": ok}
    _emit(args, doc, "\n".join(str(r) for r in reports))
    return OK if ok else FAILED


def cmd_verify(args) -> int:
    try:
        text = Path(args.cert).read_text(encoding="utf-8")
    except OSError as e:
        print(f"cannot read certificate: {e}", file=sys.stderr)
        return USAGE
    try:
        cert = parse(text)
    except ParseError as e:
        _emit(args, {"parse_error": {"line": e.line, "reason": e.reason}},
              f"parse error: {e}")
        return USAGE
    co1 = conway.co1_order(args.seed, progress=_progress) if args.with_chain else None
    rep = verify(cert, co1)
    doc = {"checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in rep.checks],
           "monster": cert.monster, "ok": rep.ok}
    _emit(args, doc, rep.render())
    return OK if rep.ok else FAILED


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="axcount", description=__doc__)
    ap.add_argument("--json", action="store_true", help="emit one JSON document")
    ap.add_argument("--threads", type=int, default=1, help="worker threads for the census")
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser("golay-check").set_defaults(func=cmd_golay_check)
    p = sub.add_parser("census")
    p.add_argument("--cache", type=Path, help="type-table cache file (read or written)")
    p.set_defaults(func=cmd_census)
    sub.add_parser("spectrum").set_defaults(func=cmd_spectrum)
    p = sub.add_parser("co1-order")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--claim", type=int, help="verify this order (Las Vegas mode)")
    p.set_defaults(func=cmd_co1_order)
    p = sub.add_parser("orbit-sizes")
    p.add_argument("--table", choices=sorted(ANCHORS), required=True)
    p.set_defaults(func=cmd_orbit_sizes)
    for name, func in (("monster-order", cmd_monster_order), ("tables-check", cmd_tables_check)):
        p = sub.add_parser(name)
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.set_defaults(func=func)
    p = sub.add_parser("verify")
    p.add_argument("--cert", required=True)
    p.add_argument("--with-chain", action="store_true", help="check |Co2| against the chain")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_verify)
    return ap


def run(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code else OK
    if args.threads < 1:
        print("--threads must be positive", file=sys.stderr)
        return USAGE
    return args.func(args)


def main() -> None:
    sys.exit(run())
