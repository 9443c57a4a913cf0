"""Certificate files for the orbit-size and order computations.

Layout (line oriented, ``#`` starts a comment)::

    AXCOUNT-CERT v1
    section axes
    labels <l1> ... <ln>
    colsum <N>
    row <label> <n values, '.' for 0>      (n lines, in label order)
    anchor <label> <size>
    claim-size <label> <size>              (n lines, in label order)
    claim-total <N>
    section feasible
    ... same as axes ...
    section orders
    co2 <N>
    monster <N>
    monster-factors p^e ...
    baby <N>
    baby-factors p^e ...
    end
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import counting
from .counting import TransitionMatrix

HEADER = "AXCOUNT-CERT v1"
SECTIONS = ("axes", "feasible")
EXPECTED_COLSUM = {"axes": 16584750, "feasible": 93150}
SHORT_CLASSES = 98280


class ParseError(ValueError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


@dataclass(frozen=True)
class MatrixSection:
    labels: tuple[str, ...]
    colsum: int
    rows: tuple[tuple[int, ...], ...]
    anchor: tuple[str, int]
    claimed_sizes: dict[str, int]
    claimed_total: int


@dataclass(frozen=True)
class Certificate:
    axes: MatrixSection
    feasible: MatrixSection
    co2_order: int
    monster: int
    monster_factors: dict[int, int]
    baby: int
    baby_factors: dict[int, int]


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)
    sizes: dict[str, dict[str, int]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return bool(self.checks) and all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, bool(ok), detail))
        return bool(ok)

    def render(self) -> str:
        lines = [f"{'PASS' if c.ok else 'FAIL'}  {c.name}" + (f"  ({c.detail})" if c.detail else "")
                 for c in self.checks]
        lines.append(f"overall: {'verified' if self.ok else 'FAILED'}")
        return "\n".join(lines)


# --- parsing -------------------------------------------------------------------

class _Lines:
    def __init__(self, text: str):
        self.items = []
        for no, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if line:
                self.items.append((no, line.split()))
        self.pos = 0
        self.last = len(text.splitlines()) or 1

    def next(self, key: str, nargs: int | None = None) -> tuple[int, list[str]]:
        if self.pos >= len(self.items):
            raise ParseError(self.last, f"unexpected end of input, expected '{key}'")
        no, toks = self.items[self.pos]
        if toks[0] != key:
            raise ParseError(no, f"expected '{key}', found '{toks[0]}'")
        if nargs is not None and len(toks) - 1 != nargs:
            raise ParseError(no, f"'{key}' takes {nargs} argument(s)")
        self.pos += 1
        return no, toks[1:]


def _int(no: int, tok: str, allow_dot: bool = False) -> int:
    if allow_dot and tok == ".":
        return 0
    try:
        v = int(tok)
    except ValueError:
        raise ParseError(no, f"not an integer: {tok!r}") from None
    if v < 0:
        raise ParseError(no, f"negative value {v}")
    return v


def _factors(no: int, toks: list[str]) -> dict[int, int]:
    out: dict[int, int] = {}
    for t in toks:
        p, sep, e = t.partition("^")
        prime = _int(no, p)
        exp = _int(no, e) if sep else 1
        if prime in out:
            raise ParseError(no, f"prime {prime} listed twice")
        out[prime] = exp
    return out


def _matrix_section(lines: _Lines) -> MatrixSection:
    no, labels = lines.next("labels")
    if not labels or len(set(labels)) != len(labels):
        raise ParseError(no, "labels must be non-empty and distinct")
    n = len(labels)
    no, args = lines.next("colsum", 1)
    colsum = _int(no, args[0])
    rows = []
    for label in labels:
        no, args = lines.next("row")
        if not args or args[0] != label:
            raise ParseError(no, f"expected row for label {label}")
        if len(args) - 1 != n:
            raise ParseError(no, f"row {label} has {len(args) - 1} values for {n} labels")
        rows.append(tuple(_int(no, t, allow_dot=True) for t in args[1:]))
    no, args = lines.next("anchor", 2)
    if args[0] not in labels:
        raise ParseError(no, f"unknown anchor label {args[0]}")
    anchor = (args[0], _int(no, args[1]))
    claims = {}
    for label in labels:
        no, args = lines.next("claim-size", 2)
        if args[0] != label:
            raise ParseError(no, f"expected claim-size for {label}")
        claims[label] = _int(no, args[1])
    no, args = lines.next("claim-total", 1)
    return MatrixSection(tuple(labels), colsum, tuple(rows), anchor, claims, _int(no, args[0]))


def parse(text: str) -> Certificate:
    lines = _Lines(text)
    if not lines.items or lines.items[0][1] != HEADER.split():
        raise ParseError(lines.items[0][0] if lines.items else 1, f"missing header '{HEADER}'")
    lines.pos = 1
    sections = {}
    for name in SECTIONS:
        no, args = lines.next("section", 1)
        if args[0] != name:
            raise ParseError(no, f"expected section {name}")
        sections[name] = _matrix_section(lines)
    no, args = lines.next("section", 1)
    if args[0] != "orders":
        raise ParseError(no, "expected section orders")
    no, args = lines.next("co2", 1)
    co2 = _int(no, args[0])
    no, args = lines.next("monster", 1)
    monster = _int(no, args[0])
    no, args = lines.next("monster-factors")
    mf = _factors(no, args)
    no, args = lines.next("baby", 1)
    baby = _int(no, args[0])
    no, args = lines.next("baby-factors")
    bf = _factors(no, args)
    lines.next("end", 0)
    if lines.pos != len(lines.items):
        raise ParseError(lines.items[lines.pos][0], "content after 'end'")
    return Certificate(sections["axes"], sections["feasible"], co2, monster, mf, baby, bf)


# --- writing -------------------------------------------------------------------

def _fmt(v: int) -> str:
    return "." if v == 0 else str(v)


def format_certificate(c: Certificate, comment: str = "") -> str:
    out = [HEADER]
    out += [f"# {line}" if line else "#" for line in comment.splitlines()]
    for name in SECTIONS:
        s: MatrixSection = getattr(c, name)
        out.append(f"section {name}")
        out.append("labels " + " ".join(s.labels))
        out.append(f"colsum {s.colsum}")
        w = max(len(_fmt(v)) for r in s.rows for v in r)
        lw = max(map(len, s.labels))
        for label, r in zip(s.labels, s.rows):
            out.append(f"row {label.ljust(lw)} " + " ".join(_fmt(v).rjust(w) for v in r))
        out.append(f"anchor {s.anchor[0]} {s.anchor[1]}")
        for label in s.labels:
            out.append(f"claim-size {label.ljust(lw)} {s.claimed_sizes[label]}")
        out.append(f"claim-total {s.claimed_total}")
    out.append("section orders")
    out.append(f"co2 {c.co2_order}")
    out.append(f"monster {c.monster}")
    out.append("monster-factors " + counting.format_factors(c.monster_factors))
    out.append(f"baby {c.baby}")
    out.append("baby-factors " + counting.format_factors(c.baby_factors))
    out.append("end")
    return "\n".join(out) + "\n"


# --- verification --------------------------------------------------------------

def _verify_section(name: str, s: MatrixSection, rep: VerificationReport) -> int | None:
    """Run the matrix checks; return the recovered total, or None on failure."""
    want = EXPECTED_COLSUM[name]
    sums = [sum(r[j] for r in s.rows) for j in range(len(s.labels))]
    bad = [lab for lab, v in zip(s.labels, sums) if v != want]
    if not rep.add(f"{name}: column sums", s.colsum == want and not bad,
                   f"colsum {s.colsum}, bad columns {bad}" if bad or s.colsum != want else str(want)):
        return None
    M = TransitionMatrix(s.labels, s.rows, s.colsum)
    try:
        k = counting.regularity_index(M)
        rep.add(f"{name}: regularity", True, f"M^{k} > 0")
    except counting.NotRegular as e:
        rep.add(f"{name}: regularity", False, str(e))
        return None
    try:
        sizes = counting.orbit_sizes(M, *s.anchor)
    except counting.CountingError as e:
        rep.add(f"{name}: eigenvector", False, f"{type(e).__name__}: {e}")
        return None
    rep.add(f"{name}: eigenvector", True, "kernel dimension 1, integral, positive")
    rep.sizes[name] = dict(sizes.sizes)
    diff = [lab for lab in s.labels if sizes[lab] != s.claimed_sizes[lab]]
    rep.add(f"{name}: sizes match claims", not diff, f"mismatch at {diff}" if diff else "")
    rep.add(f"{name}: total matches claim", sizes.total == s.claimed_total,
            f"{sizes.total}")
    return sizes.total if not diff and sizes.total == s.claimed_total else None


def verify(c: Certificate, co1_order_from_chain: int | None = None) -> VerificationReport:
    rep = VerificationReport()
    x_plus = _verify_section("axes", c.axes, rep)
    x_minus = _verify_section("feasible", c.feasible, rep)
    rep.add("axes anchor is 2 * 98280", c.axes.anchor[1] == 2 * SHORT_CLASSES,
            str(c.axes.anchor[1]))
    if co1_order_from_chain is not None:
        ok = co1_order_from_chain % SHORT_CLASSES == 0 and \
            co1_order_from_chain // SHORT_CLASSES == c.co2_order
        rep.add("co2 = |Co1| / 98280", ok, f"|Co1| = {co1_order_from_chain}")
    if x_plus is None or x_minus is None:
        rep.add("monster order", False, "orbit totals unavailable")
        rep.add("baby monster order", False, "orbit totals unavailable")
    else:
        m = counting.monster_order(x_plus, x_minus, c.co2_order)
        b = counting.baby_monster_order(x_minus, c.co2_order)
        rep.add("monster order", m == c.monster, str(m))
        rep.add("baby monster order", b == c.baby, str(b))
        rep.add("monster = 2 |X+| |B|", m == 2 * x_plus * b)
    for name, n, f in (("monster", c.monster, c.monster_factors),
                       ("baby monster", c.baby, c.baby_factors)):
        try:
            rep.add(f"{name} factorization", counting.factorize(n) == f,
                    counting.format_factors(f))
        except counting.IncompleteFactorization as e:
            rep.add(f"{name} factorization", False, str(e))
    value, non_integral = counting.sylow11_check()
    rep.add("sylow-11 count is not an integer", non_integral, str(value))
    return rep
