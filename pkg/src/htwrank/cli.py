"""Command-line interface: ``htwrank analyze|chartab|scan|split``."""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import construct, load_catalog, parse_group_spec, resolve_catalog_path
from .chartab import character_table
from .errors import BadSpec, HTWError
from .permgroup import DEFAULT_CAP, generate_group, power_maps
from .ranks import analyze, format_report, scan
from .ratrep import AbelianFieldDescriptor, field_descriptor
from .splitting import decomposition_data, splitting_type

SPEC_HELP = """\
group specs:
  trivial, sl2_3
  cyclic:n                    cyclic group of order n
  dihedral:N                  dihedral group of ORDER N (N even, >= 4)
  generalized_quaternion:N    generalized quaternion group of ORDER N (4 | N, N >= 8)
  symmetric:n, alternating:n  S_n and A_n
  A x B                       direct products, e.g. "cyclic:2 x cyclic:4"
"""


class UsageError(Exception):
    pass


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("table", "json"), default="table")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum group order to enumerate")

    parser = argparse.ArgumentParser(
        prog="htwrank",
        description="Compare rank G_1(ZG) with the rank predicted by the HTW decomposition.",
        epilog=SPEC_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in (("analyze", "compute R(G), P(G) and their difference"), ("chartab", "print the character table")):
        p = sub.add_parser(name, parents=[common], help=helptext, epilog=SPEC_HELP,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
        p.add_argument("spec", nargs="+", help="group spec")
    p = sub.add_parser("scan", parents=[common], help="analyze every group in a catalog file")
    p.add_argument("--catalog", required=True)
    p.add_argument("--max-order", type=int, default=200)
    p = sub.add_parser("split", parents=[common], help="splitting of p in a subfield of Q(zeta_n)")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--stabilizer", default="1", help="comma-separated generators of H")
    p.add_argument("--prime", type=int, required=True)
    return parser


def _group(args):
    try:
        spec = parse_group_spec(" ".join(args.spec))
    except BadSpec as exc:
        raise UsageError(str(exc)) from None
    return spec.name, generate_group(construct(spec), cap=args.cap)


def cmd_analyze(args, out):
    name, g = _group(args)
    report = analyze(g, name)
    out.write(report.to_json() + "\n" if args.output == "json" else format_report(report))


def cmd_chartab(args, out):
    name, g = _group(args)
    tab = character_table(g)
    maps = power_maps(g, g.classes, tab.level)
    cd = tab.classes
    fields = [field_descriptor(chi, tab.level, maps).label() for chi in tab.characters]
    if args.output == "json":
        doc = {
            "group": name,
            "order": tab.group_order,
            "level": tab.level,
            "dixon_prime": tab.dixon_prime,
            "classes": [
                {"representative": str(c.representative), "size": c.size, "order": c.element_order}
                for c in cd.classes
            ],
            "characters": [
                {"values": list(chi.rendered()), "field": f} for chi, f in zip(tab.characters, fields)
            ],
        }
        out.write(json.dumps(doc, indent=2) + "\n")
        return
    rows = [["", *[f"C{i + 1}" for i in range(len(cd))], "field"]]
    rows.append(["size:", *[str(c.size) for c in cd.classes], ""])
    rows.append(["order:", *[str(c.element_order) for c in cd.classes], ""])
    for i, (chi, f) in enumerate(zip(tab.characters, fields)):
        rows.append([f"chi{i + 1}", *chi.rendered(), f])
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    out.write(f"group: {name}  order: {tab.group_order}  level: {tab.level}  dixon prime: {tab.dixon_prime}\n")
    for i, c in enumerate(cd.classes):
        out.write(f"C{i + 1}: {c.representative}\n")
    for r in rows:
        out.write("  ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip() + "\n")


def cmd_scan(args, out):
    path = resolve_catalog_path(args.catalog)
    if path is None:
        raise UsageError(f"catalog file not found: {args.catalog}")
    result = scan(load_catalog(path), max_order=args.max_order, cap=args.cap)
    if args.output == "json":
        doc = {
            "reports": [r.to_dict() for r in result.reports],
            "errors": [{"name": n, "message": m} for n, m in result.errors],
            "skipped": result.skipped,
            "violators": [r.group_name for r in result.violators],
            "odd_violators": [r.group_name for r in result.odd_violators],
        }
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        return
    width = max([len(r.group_name) for r in result.reports] + [5])
    out.write(f"{'group'.ljust(width)}  order    R    P  diff\n")
    for r in result.reports:
        out.write(f"{r.group_name.ljust(width)}  {r.group_order:5d} {r.R:4d} {r.P:4d} {r.difference:5d}\n")
    for name in result.skipped:
        out.write(f"skipped (order above {args.max_order}): {name}\n")
    for name, msg in result.errors:
        out.write(f"error: {name}: {msg}\n")
    for r in result.odd_violators:
        out.write(f"!!! ODD-ORDER VIOLATOR: {r.group_name} (order {r.group_order})\n")
    names = ", ".join(r.group_name for r in result.violators)
    out.write(f"violators: {len(result.violators)}" + (f" ({names})" if names else "") + "\n")


def cmd_split(args, out):
    n, p = args.level, args.prime
    if n < 1 or p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise UsageError("--level must be >= 1 and --prime must be prime")
    try:
        gens = [int(t) for t in args.stabilizer.split(",") if t.strip()]
        field = AbelianFieldDescriptor.from_generators(n, gens or [1])
    except ValueError as exc:
        raise UsageError(f"bad --stabilizer: {exc}") from None
    dd = decomposition_data(n, p)
    st = splitting_type(field, p)
    doc = {
        "level": n,
        "prime": p,
        "stabilizer": sorted(field.stabilizer),
        "field_degree": field.degree,
        "inertia": sorted(dd.inertia),
        "frobenius": dd.frobenius,
        "decomposition": sorted(dd.decomposition),
        "e": st.ramification,
        "f": st.residue_degree,
        "g": st.primes,
    }
    if args.output == "json":
        out.write(json.dumps(doc, indent=2) + "\n")
        return
    for key, val in doc.items():
        if isinstance(val, list):
            val = "{" + ", ".join(map(str, val)) + "}"
        out.write(f"{key}: {val}\n")


COMMANDS = {"analyze": cmd_analyze, "chartab": cmd_chartab, "scan": cmd_scan, "split": cmd_split}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        COMMANDS[args.command](args, out)
    except UsageError as exc:
        sys.stderr.write(f"htwrank: {exc}\n\n{SPEC_HELP}")
        return 2
    except HTWError as exc:
        sys.stderr.write(f"htwrank: {type(exc).__name__}: {exc}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
