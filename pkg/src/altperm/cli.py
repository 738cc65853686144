"""Command-line front end.

Every query is answered by one or more independent methods. When more than
one is requested the answers are compared, and any disagreement is reported
as a MISMATCH record with exit status 2.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Callable, Dict, List, Sequence

from . import distributions as dist
from . import pops, springer
from .laurent import LaurentPolynomial, format_coefficient, to_records
from .perms import AltClass, StatKind
from .series import cos, max_order, sec, sin, tan

BRUTE_LIMIT = 13
DEFAULT_ORDER = 12

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad input; 2 is reserved for mismatches here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- method selection --

# what "both" means for each query kind; "all" is every available method
BOTH = {"single": ("brute", "gf"), "joint": ("brute", "gf"), "springer": ("brute", "gf"), "pop": ("brute", "rec")}


def select_methods(requested: str | None, available: Sequence[str], kind: str) -> List[str]:
    if requested is None:
        return ["gf"] if "gf" in available else [available[-1]]
    if requested == "all":
        return list(available)
    if requested == "both":
        chosen = [m for m in BOTH[kind] if m in available]
        if len(chosen) < 2:
            raise UsageError(f"'both' needs two methods, this query supports only {', '.join(available)}")
        return chosen
    if requested not in available:
        raise UsageError(f"method {requested!r} is not available here (choose from {', '.join(available)})")
    return [requested]


def check_brute(methods: Sequence[str], length: int, force: bool):
    if "brute" not in methods or length <= BRUTE_LIMIT:
        return
    if not force:
        raise UsageError(f"brute force at length {length} exceeds {BRUTE_LIMIT}; pass --force to run it anyway")
    print(f"warning: brute force at length {length} may take a very long time", file=sys.stderr)


def check_order(order: int):
    cap = max_order()
    if order > cap:
        raise UsageError(f"order {order} exceeds the cap {cap} (raise ALTPERM_MAX_ORDER to allow it)")
    if order < 0:
        raise UsageError("order must be non-negative")


# -- records --


def render(value, variables):
    if isinstance(value, LaurentPolynomial):
        return to_records(value, variables)
    if isinstance(value, Fraction):
        return format_coefficient(value)
    return str(value)


def make_record(command: str, params: dict, computations: Dict[str, Callable], variables=("q",)) -> dict:
    values = {name: fn() for name, fn in computations.items()}
    first = next(iter(values.values()))
    rec = {"command": command, "params": params, "methods": list(values), "result": render(first, variables)}
    if len(values) == 1:
        rec["status"] = "single-method"
    elif all(v == first for v in values.values()):
        rec["status"] = "verified-agree"
    else:
        rec["status"] = "MISMATCH"
        rec["by_method"] = {name: render(v, variables) for name, v in values.items()}
    return rec


def _result_text(result) -> str:
    if isinstance(result, str):
        return result
    if not result:
        return "0"
    poly = LaurentPolynomial(
        ((r.get("e_p", 0), r.get("e_q", 0)), Fraction(r["c"])) for r in result
    )
    return str(poly)


def format_json(records) -> str:
    return json.dumps(records, indent=2) + "\n"


def format_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    param_keys: List[str] = []
    for rec in records:
        for k in rec["params"]:
            if k not in param_keys:
                param_keys.append(k)
    scalar = all(isinstance(rec["result"], str) for rec in records)
    if scalar:
        writer.writerow(["command", *param_keys, "result", "methods", "status"])
    else:
        writer.writerow(["command", *param_keys, "e_p", "e_q", "c", "methods", "status"])
    for rec in records:
        head = [rec["command"], *(rec["params"].get(k, "") for k in param_keys)]
        tail = [";".join(rec["methods"]), rec["status"]]
        if scalar:
            writer.writerow([*head, rec["result"], *tail])
        else:
            for term in rec["result"]:
                writer.writerow([*head, term.get("e_p", 0), term.get("e_q", 0), term["c"], *tail])
    return buf.getvalue()


def format_table(records) -> str:
    rows = [
        (
            " ".join(f"{k}={v}" for k, v in rec["params"].items()),
            ",".join(rec["methods"]),
            _result_text(rec["result"]),
            rec["status"],
        )
        for rec in records
    ]
    header = ("query", "methods", "result", "status")
    widths = [max(len(r[i]) for r in [header, *rows]) for i in range(3)]
    lines = []
    for r in [header, *rows]:
        lines.append("  ".join(r[i].ljust(widths[i]) for i in range(3)) + "  " + r[3])
    return "\n".join(lines) + "\n"


FORMATTERS = {"json": format_json, "csv": format_csv, "table": format_table}


# -- subcommands --


def cmd_dist(args) -> List[dict]:
    n, cls = args.length, AltClass.parse(args.cls)
    if n < 1:
        raise UsageError("--length must be at least 1")
    if args.what == "single":
        kind = StatKind(args.stat)
        methods = select_methods(args.method, ("brute", "gf"), "single")
        check_brute(methods, n, args.force)
        check_order(n)
        available = {"brute": lambda: dist.brute_single(n, cls, kind), "gf": lambda: dist.gf_single_for(n, cls, kind)}
        params = {"class": cls.value, "length": n, "stat": kind.value, "variant": f"F{dist.single_variant(n, cls, kind)}"}
        return [make_record("dist single", params, {m: available[m] for m in methods})]
    if args.what == "joint-mmp":
        variant = dist.joint_variant(n, cls)
        methods = select_methods(args.method, ("brute", "gf", "rec"), "joint")
        check_brute(methods, n, args.force)
        if "gf" in methods:
            check_order(n)
        available = {
            "brute": lambda: dist.brute_joint_mmp(n, cls),
            "gf": lambda: dist.gf_joint_mmp_coefficient(variant, n),
            "rec": lambda: dist.rec_joint_mmp(variant, n),
        }
        params = {"class": cls.value, "length": n, "variant": variant}
        return [make_record("dist joint-mmp", params, {m: available[m] for m in methods}, ("p", "q"))]
    variant = dist.maxmin_variant(n, cls)
    methods = select_methods(args.method, ("brute", "gf", "subst", "rec"), "joint")
    check_brute(methods, n, args.force)
    if "gf" in methods or "subst" in methods:
        check_order(n)
    available = {
        "brute": lambda: dist.brute_joint_maxmin(n, cls),
        "gf": lambda: dist.gf_joint_maxmin_coefficient(variant, n),
        "subst": lambda: dist.gf_joint_maxmin_coefficient(variant, n, via_subst=True),
        "rec": lambda: dist.rec_joint_maxmin(variant, n),
    }
    params = {"class": cls.value, "length": n, "variant": f"G{variant}"}
    return [make_record("dist joint-maxmin", params, {m: available[m] for m in methods}, ("p", "q"))]


def cmd_springer(args) -> List[dict]:
    if args.section7 is not None:
        i = args.section7
        if i not in springer.Q_SPRINGER_FORMS:
            raise UsageError("--section7 takes 1, 2, 3 or 4")
        select_methods(args.method, ("gf",), "springer")
        order = args.order
        check_order(order)
        series = springer.q_springer_series(i, order)
        return [
            make_record(
                "springer section7",
                {"series": i, "n": n},
                {"gf": lambda n=n: LaurentPolynomial.coerce(series.egf(n))},
            )
            for n in range(order + 1)
        ]
    top = args.max_half_n
    if top < 0:
        raise UsageError("--max-half-n must be non-negative")
    if args.q_analog is not None:
        which, variables = {"lle": ("Q", ("q",)), "be": ("U", ("p",)), "joint": ("W", ("p", "q"))}[args.q_analog]
        methods = select_methods(args.method, ("brute", "gf"), "springer")
        check_brute(methods, 2 * top, args.force)
        if "gf" in methods:
            check_order(top)
        records = []
        for n in range(1, top + 1):

            def brute(n=n):
                poly = springer.brute_lle_be(2 * n)
                if which == "Q":
                    return poly.specialize(p=1)
                if which == "U":
                    return poly.specialize(q=1)
                return poly

            available = {"brute": brute, "gf": lambda n=n: springer.refined_coefficient(which, n)}
            records.append(
                make_record(
                    f"springer {args.q_analog}", {"half_n": n, "length": 2 * n}, {m: available[m] for m in methods}, variables
                )
            )
        return records
    methods = select_methods(args.method, ("brute", "gf", "rec"), "springer")
    check_brute(methods, 2 * top, args.force)
    if "gf" in methods:
        check_order(top)
    gf = springer.springer_numbers(top) if "gf" in methods else None
    rec = springer.rc_count_recurrence(top) if "rec" in methods else None
    records = []
    for n in range(top + 1):
        available = {
            "brute": lambda n=n: springer.brute_rc_count(n),
            "gf": lambda n=n: gf[n],
            "rec": lambda n=n: rec[n],
        }
        records.append(make_record("springer", {"half_n": n, "length": 2 * n}, {m: available[m] for m in methods}))
    return records


def cmd_pop(args) -> List[dict]:
    n, k = args.length, args.k
    if n < 0:
        raise UsageError("--length must be non-negative")
    if args.what == "count":
        if k < 3:
            raise UsageError("--k must be at least 3 for the avoidance recurrences")
        variant, cls = pops.FlatPopVariant.parse(args.variant), AltClass.parse(args.cls)
        methods = select_methods(args.method, ("brute", "rec"), "pop")
        check_brute(methods, n, args.force)
        available = {
            "brute": lambda: pops.brute_pop_avoiding(n, cls, pops.flat_pop(variant, k)),
            "rec": lambda: pops.pop_table_lookup(variant, cls, n, k),
        }
        params = {"variant": variant.value, "k": k, "class": cls.value, "length": n,
                  "sequence": pops.table_shape(variant, cls, n)}
        return [make_record("pop count", params, {m: available[m] for m in methods})]
    if k < 2:
        raise UsageError("--k must be at least 2")
    methods = select_methods(args.method, ("brute", "rec"), "pop")
    check_brute(methods, n, args.force)

    def as_poly(table):
        return LaurentPolynomial({(0, ell): c for ell, c in table.items()})

    available = {
        "brute": lambda: as_poly(pops.brute_pop_distribution(n, k)),
        "rec": lambda: as_poly(pops.flat_pop_distribution(n, k)),
    }
    return [make_record("pop dist", {"k": k, "length": n}, {m: available[m] for m in methods})]


def named_series(name: str, order: int):
    """Series registry for ``series show``."""
    fixed = {
        "sin": lambda: sin(order),
        "cos": lambda: cos(order),
        "sec": lambda: sec(order),
        "tan": lambda: tan(order),
        "euler": lambda: sec(order) + tan(order),
        "springer": lambda: springer.springer_series(order),
        "Q": lambda: springer.gf_Q(order),
        "U": lambda: springer.gf_U(order),
        "W": lambda: springer.gf_W(order),
    }
    for i in range(1, 5):
        fixed[f"F{i}"] = lambda i=i: dist.gf_single(i, order)
        fixed[f"G{i}"] = lambda i=i: dist.gf_joint_maxmin(i, order)
        fixed[f"q-springer-{i}"] = lambda i=i: springer.q_springer_series(i, order)
    for v in "ABCD":
        fixed[v] = lambda v=v: dist.gf_joint_mmp(v, order)
    if name not in fixed:
        raise UsageError(f"unknown series {name!r} (known: {', '.join(fixed)})")
    return fixed[name]()


SERIES_NAMES = (
    "sin cos sec tan euler springer F1 F2 F3 F4 A B C D G1 G2 G3 G4 Q U W "
    "q-springer-1 q-springer-2 q-springer-3 q-springer-4"
).split()


def cmd_series(args) -> List[dict]:
    order = args.order
    check_order(order)
    if order < 1:
        raise UsageError("--order must be at least 1")
    select_methods(args.method, ("gf",), "single")
    f = named_series(args.name, order)
    records = []
    for n in range(order + 1):
        c = f.egf(n) if args.egf else f[n]
        records.append(
            make_record("series show", {"name": args.name, "n": n}, {"gf": lambda c=c: LaurentPolynomial.coerce(c)},
                        ("p", "q"))
        )
    return records


# -- parser --


def _shared(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=sorted(FORMATTERS), default="table")
    p.add_argument("--method", choices=["brute", "gf", "rec", "subst", "both", "all"], default=None,
                   help="computation method; 'both' pairs brute force with the main formula")
    p.add_argument("--order", type=int, default=DEFAULT_ORDER, help="series truncation order")
    p.add_argument("--force", action="store_true", help=f"allow brute force beyond length {BRUTE_LIMIT}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="altperm", description="Exact statistics on alternating permutations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    d = sub.add_parser("dist", help="distributions of maxima/minima statistics")
    d.add_argument("what", choices=["single", "joint-mmp", "joint-maxmin"])
    d.add_argument("--class", dest="cls", choices=["ud", "du"], required=True)
    d.add_argument("--length", type=int, required=True)
    d.add_argument("--stat", choices=[k.value for k in StatKind], default="rlmax")
    _shared(d)
    d.set_defaults(func=cmd_dist)

    s = sub.add_parser("springer", help="Springer numbers and their refinements")
    s.add_argument("--max-half-n", type=int, default=6)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--q-analog", choices=["lle", "be", "joint"])
    g.add_argument("--section7", type=int, metavar="I", help="q-deformed Springer series I (1-4)")
    _shared(s)
    s.set_defaults(func=cmd_springer)

    p = sub.add_parser("pop", help="flat partially ordered patterns")
    p.add_argument("what", choices=["count", "dist"])
    p.add_argument("--variant", choices=[v.value for v in pops.FlatPopVariant], default="lambda")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--class", dest="cls", choices=["ud", "du"], default="ud")
    p.add_argument("--length", type=int, required=True)
    _shared(p)
    p.set_defaults(func=cmd_pop)

    r = sub.add_parser("series", help="print a named generating function")
    r.add_argument("action", choices=["show"])
    r.add_argument("--name", required=True, choices=SERIES_NAMES)
    r.add_argument("--egf", action="store_true", help="print n! times each coefficient")
    _shared(r)
    r.set_defaults(func=cmd_series)
    return parser


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        records = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"altperm: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    stdout.write(FORMATTERS[args.format](records))
    bad = [r for r in records if r["status"] == "MISMATCH"]
    for r in bad:
        print(f"altperm: MISMATCH for {r['command']} {r['params']}", file=sys.stderr)
    return EXIT_MISMATCH if bad else EXIT_OK


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
