"""Command-line interface.

Exit codes: 0 success, 2 usage or parse error, 3 routes disagree under
``decide --route all``, 4 compute budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .anc import parse_group
from .arith import is_squarefree
from .cyclometers import cyclometer_table, cyclometers
from .fields import BudgetExceeded
from .literals import parse_field
from .primitivity import (
    anc_groups,
    cyclic_primitive_raw,
    cyclotomic_family,
    decide,
    decide_raw,
    describe,
    enumerate_degree,
    quadratic_family,
)
from . import selfcheck

EXIT_OK, EXIT_USAGE, EXIT_DISAGREE, EXIT_BUDGET = 0, 2, 3, 4


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _descriptor(args):
    lit = parse_field(args.field)
    imag = getattr(args, "totally_imaginary", None)
    even = getattr(args, "local_deg2_even", None)
    return lit, describe(lit.field, lit.label, imag, even)


def cmd_cyclometer(args, out) -> int:
    lit = parse_field(args.field)
    if args.n is not None:
        c, cp, cm = cyclometers(lit.field, args.n)
        if args.json:
            out.write(json.dumps({"n": args.n, "c": c, "c_plus": cp, "c_minus": cm}) + "\n")
        else:
            out.write(f"{c}\t{cp}\t{cm}\n")
        return EXIT_OK
    table = cyclometer_table(lit.field)
    out.write(table.to_json() + "\n" if args.json else table.to_tsv())
    return EXIT_OK


def _verdicts(G, lit, K, route):
    routes = ["char", "raw", "family"] if route == "all" else [route]
    has_family = lit.cyclotomic_r is not None or lit.quadratic_d is not None
    if route == "family" and not has_family:
        raise UsageError("the family route needs a field literal E(r), Q or Q(sqrt,d)")
    if K.provenance != "computed-from-abelian" and "family" in routes:
        if route == "family":
            raise UsageError("the family route cannot use overridden field flags")
        routes.remove("family")
    verdicts = []
    for r in routes:
        if r == "char":
            verdicts.append(decide(G, K))
        elif r == "raw":
            verdicts.append(cyclic_primitive_raw(K, G.n, str(G)) if G.is_cyclic else decide_raw(G, K))
        elif has_family:
            if lit.cyclotomic_r is not None:
                v = cyclotomic_family(lit.cyclotomic_r, G)
            else:
                v = quadratic_family(lit.quadratic_d, G)
            v.field = lit.label
            verdicts.append(v)
    return verdicts


def cmd_decide(args, out) -> int:
    G = parse_group(args.group)
    lit, K = _descriptor(args)
    verdicts = _verdicts(G, lit, K, args.route)
    if args.route == "all":
        out.write(json.dumps([v.to_dict() for v in verdicts]) + "\n")
        if len({v.primitive for v in verdicts}) > 1:
            sys.stderr.write("routes disagree\n")
            return EXIT_DISAGREE
    else:
        out.write(verdicts[0].to_json() + "\n")
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    _, K = _descriptor(args)
    found = enumerate_degree(K, args.d, args.bound)
    if args.json:
        out.write(json.dumps([v.to_dict() for _, v in found]) + "\n")
    else:
        for G, _ in found:
            out.write(f"{G}\n")
    return EXIT_OK


def _emit_rows(rows, header, as_json, out):
    if as_json:
        out.write(json.dumps([dict(zip(header, row)) for row in rows]) + "\n")
        return
    out.write("\t".join(header) + "\n")
    for row in rows:
        out.write("\t".join(str(int(x)) if isinstance(x, bool) else str(x) for x in row) + "\n")


def cmd_table_cyclotomic(args, out) -> int:
    lit = parse_field(f"E({args.r})")
    K = describe(lit.field, lit.label)
    rows = [(str(G), G.n, decide(G, K).primitive) for G in anc_groups(args.n_max)]
    _emit_rows(rows, ("group", "n", "primitive"), args.json, out)
    return EXIT_OK


def cmd_table_quadratic(args, out) -> int:
    rows = []
    for d in range(-args.d_max, args.d_max + 1):
        if d in (0, 1) or not is_squarefree(d):
            continue
        lit = parse_field(f"Q(sqrt,{d})")
        K = describe(lit.field, lit.label)
        for G in anc_groups(args.n_max):
            rows.append((d, str(G), G.n, decide(G, K).primitive))
    _emit_rows(rows, ("d", "group", "n", "primitive"), args.json, out)
    return EXIT_OK


def cmd_selfcheck(args, out) -> int:
    results = selfcheck.run(fast=args.fast)
    for res in results:
        status = "PASS" if res.ok else "FAIL"
        out.write(f"{status}\t{res.name}\t{res.passed} passed\t{len(res.failures)} failed\n")
        for case in res.failures[:10]:
            out.write(f"\t{case}\n")
    return EXIT_OK if all(r.ok for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ancprim", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_overrides(p):
        p.add_argument("--totally-imaginary", action=argparse.BooleanOptionalAction, default=None)
        p.add_argument("--local-deg2-even", action=argparse.BooleanOptionalAction, default=None)

    p = sub.add_parser("cyclometer", help="cyclometers of an abelian field")
    p.add_argument("field")
    p.add_argument("n", nargs="?", type=_positive)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cyclometer)

    p = sub.add_parser("decide", help="is G(K) primitive")
    p.add_argument("group")
    p.add_argument("field")
    p.add_argument("--route", choices=("char", "raw", "family", "all"), default="char")
    add_overrides(p)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("enumerate", help="primitive ANC groups of degree d over K")
    p.add_argument("field")
    p.add_argument("d", type=_positive)
    p.add_argument("--bound", type=_positive, default=None)
    p.add_argument("--json", action="store_true")
    add_overrides(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("table-cyclotomic", help="primitivity over E_r for n <= N_MAX")
    p.add_argument("r", type=_positive)
    p.add_argument("n_max", type=_positive)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table_cyclotomic)

    p = sub.add_parser("table-quadratic", help="primitivity over Q(sqrt d) for |d| <= D_MAX")
    p.add_argument("d_max", type=_positive)
    p.add_argument("n_max", type=_positive)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table_quadratic)

    p = sub.add_parser("selfcheck", help="run the property corpus")
    p.add_argument("--fast", action="store_true")
    p.set_defaults(func=cmd_selfcheck)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except BudgetExceeded as exc:
        sys.stderr.write(f"ancprim: {exc}\n")
        return EXIT_BUDGET
    except (UsageError, ValueError) as exc:
        sys.stderr.write(f"ancprim: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
