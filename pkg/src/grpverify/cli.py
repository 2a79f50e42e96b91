"""Command-line front end: expression parser, analysis commands, ledger runs.

Exit codes: 0 all claims pass, 1 any claim fails, 2 usage or parse error,
3 internal error.  Cycle notation for permutations is 1-based, e.g.
"(1 2 3)(4 5)"; composition applies the right factor first.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys

from . import construct as cx
from .autmorph import automorphism_group
from .gf import is_prime, is_prime_power
from .lattice import all_subgroups, j_analysis, sub_materialized, subgroup_classes
from .ledger import (
    Caps,
    report_text,
    run,
    select_claims,
    summary,
    write_json_report,
)
from .smallgroup import p_part

CACHE_ENV = "GRPVERIFY_CACHE_DIR"


class ParseError(ValueError):
    def __init__(self, message, pos):
        super().__init__(f"syntax error at byte {pos}: {message}")
        self.pos = pos


class _Parser:
    """Recursive descent over the group-expression grammar."""

    ATOMS0 = {"H3": cx.H3, "HESS": cx.Hess, "HSL23": cx.Hsl23}
    ACTIONS = ("swap", "natperm", "evenperm", "quotperm", "linear", "inv",
               "explicit")

    def __init__(self, src: str):
        self.src = src
        self.pos = 0

    def error(self, message):
        raise ParseError(message, self.pos)

    def _ws(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self._ws()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def expect(self, ch):
        self._ws()
        if self.pos >= len(self.src) or self.src[self.pos] != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def ident(self):
        self._ws()
        start = self.pos
        while self.pos < len(self.src) and (self.src[self.pos].isalnum()
                                            or self.src[self.pos] == "_"):
            self.pos += 1
        if self.pos == start:
            self.error("expected a name")
        return self.src[start:self.pos]

    def integer(self):
        self._ws()
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an integer")
        return int(self.src[start:self.pos])

    def string(self):
        self._ws()
        if self.peek() != '"':
            self.error('expected a "..." cycle string')
        self.pos += 1
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos] != '"':
            self.pos += 1
        if self.pos >= len(self.src):
            self.error("unterminated string")
        out = self.src[start:self.pos]
        self.pos += 1
        return out

    def parse(self):
        expr = self.expr()
        self._ws()
        if self.pos != len(self.src):
            self.error("trailing input")
        return expr

    def expr(self):
        at = self.pos
        name = self.ident()
        if name in self.ATOMS0:
            return self.ATOMS0[name]()
        if name in ("C", "D", "S", "A"):
            self.expect("(")
            n = self.integer()
            self.expect(")")
            return self._simple_atom(name, n, at)
        if name == "EA":
            self.expect("(")
            p = self.integer()
            self.expect(",")
            m = self.integer()
            self.expect(")")
            if not is_prime(p):
                self.error(f"EA({p},{m}): {p} is not prime")
            if m < 1 or p * m > 64:
                self.error(f"EA({p},{m}): rank out of range")
            return cx.ElemAb(p, m)
        if name in ("GL", "SL", "PGL", "PSL"):
            return self._linear(name, at)
        if name == "WD":
            self.expect("(")
            n = self.integer()
            self.expect(")")
            if not 2 <= n <= 8:
                self.error(f"WD({n}): n out of range 2..8")
            return cx.WeylD(n)
        if name == "prod":
            self.expect("(")
            a = self.expr()
            self.expect(",")
            b = self.expr()
            self.expect(")")
            return cx.Prod(a, b)
        if name == "swapsq":
            self.expect("(")
            e = self.expr()
            self.expect(")")
            return cx.SwapSq(e)
        if name == "semi":
            self.expect("(")
            n = self.expr()
            self.expect(",")
            h = self.expr()
            self.expect(",")
            act = self.action()
            self.expect(")")
            return cx.Semi(n, h, act)
        if name == "pgroup":
            self.expect("(")
            n = self.integer()
            cycles = []
            while self.peek() == ",":
                self.expect(",")
                cycles.append(self.string())
            self.expect(")")
            if not 1 <= n <= 64:
                self.error(f"pgroup degree {n} out of range 1..64")
            return cx.PGroup(n, tuple(cycles))
        self.pos = at
        self.error(f"unknown atom {name!r}")

    def _simple_atom(self, name, n, at):
        limits = {"C": (1, 64), "D": (2, 32), "S": (1, 8), "A": (1, 9)}
        lo, hi = limits[name]
        if not lo <= n <= hi:
            self.pos = at
            self.error(f"{name}({n}): parameter out of range {lo}..{hi}")
        return {"C": cx.Cyc, "D": cx.Dih, "S": cx.Sym, "A": cx.Alt}[name](n)

    def _linear(self, name, at):
        self.expect("(")
        dim = self.integer()
        self.expect(",")
        q = self.integer()
        self.expect(")")
        if name == "PSL" and dim == 3:
            if q != 2:
                self.error("only PSL(3,2) is supported in dimension 3")
            return cx.PSL32()
        if dim != 2:
            self.error(f"{name} supports dimension 2 only")
        if not is_prime_power(q):
            self.error(f"{q} is not a prime power")
        if name in ("GL", "SL"):
            if q > 8:
                self.error(f"{name}(2,{q}): vector action degree exceeds 63")
            return (cx.MatGL if name == "GL" else cx.MatSL)(q)
        if q > 61:
            self.error(f"{name}(2,{q}): projective degree exceeds 64")
        return (cx.ProjGL if name == "PGL" else cx.ProjSL)(q)

    def action(self):
        at = self.pos
        name = self.ident()
        if name not in self.ACTIONS:
            self.pos = at
            self.error(f"unknown action {name!r}")
        if name != "explicit":
            return cx.Action(name)
        params = []
        if self.peek() == "[":
            self.expect("[")
            params.append(self.integer())
            while self.peek() == ",":
                self.expect(",")
                params.append(self.integer())
            self.expect("]")
        return cx.Action("explicit", tuple(params))


def parse_expr(src: str):
    """Parse a group expression; raises ParseError with a byte offset."""
    return _Parser(src).parse()


def _caps_from_args(args) -> Caps:
    return Caps(max_order=args.max_order,
                max_subgroup_order=args.max_subgroup_order,
                max_aut_order=args.max_aut_order)


def _add_cap_flags(sub):
    sub.add_argument("--max-order", type=int, default=50000,
                     help="materialization cap (default 50000)")
    sub.add_argument("--max-subgroup-order", type=int, default=2000,
                     help="subgroup-sweep cap (default 2000)")
    sub.add_argument("--max-aut-order", type=int, default=1000,
                     help="automorphism-computation cap (default 1000)")


def cmd_analyze(args) -> int:
    if not is_prime(args.p):
        raise ValueError(f"-p {args.p}: not a prime")
    expr = parse_expr(args.expr)
    caps = _caps_from_args(args)
    handle = cx.build(expr, caps.max_order)
    m = handle.materialized(caps.max_order)
    ja = j_analysis(m, args.p)
    witness = ja.witness
    hint = _iso_hint(m, witness)
    print(f"group      {cx.to_src(expr)}")
    print(f"order      {m.n}")
    print(f"p          {args.p}")
    print(f"|G_(p)|    {ja.p_part}")
    print(f"min_index  {ja.min_index}")
    print(f"j_ratio    {ja.j_ratio}")
    print(f"witness    order {witness.order}{hint}")
    return 0


def _iso_hint(m, witness) -> str:
    sm = sub_materialized(m, witness)
    if sm.n == 1:
        return " (trivial)"
    orders = sorted({sm.element_order(i) for i in range(sm.n)})
    if not sm.is_abelian():
        return ""
    if max(orders) == sm.n:
        return f" (cyclic mu_{sm.n})"
    return f" (abelian, exponent {max(orders)})"


def cmd_subgroups(args) -> int:
    expr = parse_expr(args.expr)
    caps = _caps_from_args(args)
    m = cx.build(expr, caps.max_order).materialized(caps.max_order)
    cached = _cache_get(args, expr, caps)
    if cached is not None:
        subs = cached
    else:
        if args.up_to_conjugacy:
            subs = [(s.order, s.mask) for s in
                    subgroup_classes(m, cap=caps.max_subgroup_order)]
        else:
            subs = [(s.order, s.mask) for s in
                    all_subgroups(m, cap=caps.max_subgroup_order)]
        _cache_put(args, expr, caps, subs)
    kind = "classes" if args.up_to_conjugacy else "subgroups"
    print(f"group {cx.to_src(expr)}: |G| = {m.n}, {len(subs)} {kind}")
    by_order = {}
    for order, _ in subs:
        by_order[order] = by_order.get(order, 0) + 1
    for order in sorted(by_order):
        print(f"  order {order:6d}: {by_order[order]}")
    return 0


def _cache_key(args, expr, caps) -> str:
    blob = json.dumps([cx.to_src(expr), bool(args.up_to_conjugacy),
                       caps.max_order, caps.max_subgroup_order])
    return hashlib.sha256(blob.encode()).hexdigest()[:24]


def _cache_get(args, expr, caps):
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    path = os.path.join(root, _cache_key(args, expr, caps) + ".json")
    if not os.path.exists(path):
        return None
    with open(path) as fh:
        return [(int(o), int(m, 16)) for o, m in json.load(fh)]


def _cache_put(args, expr, caps, subs):
    root = os.environ.get(CACHE_ENV)
    if not root:
        return
    os.makedirs(root, exist_ok=True)
    path = os.path.join(root, _cache_key(args, expr, caps) + ".json")
    with open(path, "w") as fh:
        json.dump([[o, format(m, "x")] for o, m in subs], fh)


def cmd_aut(args) -> int:
    expr = parse_expr(args.expr)
    caps = _caps_from_args(args)
    m = cx.build(expr, caps.max_order).materialized(caps.max_order)
    aut = automorphism_group(m, cap=caps.max_aut_order)
    print(f"group      {cx.to_src(expr)}")
    print(f"order      {m.n}")
    print(f"|Aut|      {aut.order}")
    print(f"|Inn|      {aut.inner_count}")
    print(f"|Out|      {aut.out_order}")
    return 0


def cmd_claims(args) -> int:
    from .claims import builtin_claims

    for rec in builtin_claims():
        if args.list:
            print(rec.id)
        else:
            print(f"{rec.id:24s} [{rec.kind}] {rec.paper_ref[:90]}")
    return 0


def cmd_verify(args) -> int:
    from .claims import builtin_claims

    records = builtin_claims()
    if not args.all and not args.claim and args.filter is None:
        print("verify: pass --all, --claim ID, or --filter GLOB", file=sys.stderr)
        return 2
    if not args.all:
        records = select_claims(records, ids=set(args.claim) or None,
                                pattern=args.filter)
        if not records:
            print("verify: no claims match the selection", file=sys.stderr)
            return 2
    caps = _caps_from_args(args)
    results = run(records, jobs=args.jobs, timeout=args.timeout or None,
                  caps=caps)
    print(report_text(results))
    if args.json:
        write_json_report(results, args.json)
        print(f"json report written to {args.json}")
    return 1 if summary(results)["fail"] else 0


def build_arg_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="grpverify",
        description="finite-group engine and claim ledger for p-Jordan "
        "index bounds",
        epilog='permutations use 1-based cycle notation "(1 2 3)(4 5)" '
        "and products apply the right factor first; set "
        f"{CACHE_ENV} to cache subgroup sweeps")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run ledger claims")
    v.add_argument("--all", action="store_true", help="run every claim")
    v.add_argument("--claim", action="append", default=[],
                   help="claim id (repeatable)")
    v.add_argument("--filter", default=None, help="glob over claim ids")
    v.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                   help="parallel claim processes (default: logical cores)")
    v.add_argument("--timeout", type=float, default=0.0,
                   help="per-claim timeout in seconds (0 = none)")
    v.add_argument("--json", default=None, help="write the JSON report here")
    _add_cap_flags(v)
    v.set_defaults(fn=cmd_verify)

    a = sub.add_parser("analyze", help="minimal coprime abelian index of a group")
    a.add_argument("expr", help='group expression, e.g. "swapsq(A(5))"')
    a.add_argument("-p", type=int, required=True, help="the prime p")
    _add_cap_flags(a)
    a.set_defaults(fn=cmd_analyze)

    s = sub.add_parser("subgroups", help="enumerate subgroups of a group")
    s.add_argument("expr")
    s.add_argument("--up-to-conjugacy", action="store_true")
    _add_cap_flags(s)
    s.set_defaults(fn=cmd_subgroups)

    u = sub.add_parser("aut", help="automorphism group of a group")
    u.add_argument("expr")
    _add_cap_flags(u)
    u.set_defaults(fn=cmd_aut)

    c = sub.add_parser("claims", help="list the claim registry")
    c.add_argument("--list", action="store_true", help="ids only")
    c.set_defaults(fn=cmd_claims)
    return ap


def main(argv=None) -> int:
    from .smallgroup import CapExceeded

    ap = build_arg_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        return args.fn(args)
    except (ParseError, ValueError, CapExceeded) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except Exception as e:  # pragma: no cover - internal failures
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
