"""Command-line front end.

Subcommands: analyze (single n report), verify (sweep, JSON lines),
pgroup (abelian p-group component report), export (DOT / edge list),
cayley (analyze a Cayley-table file).

Exit codes: 0 success, 1 check failure, 2 usage error, 3 size cap exceeded
without a fallback. Size caps come from --flow-cap/--brute-cap flags, then
the PGLAB_FLOW_CAP/PGLAB_BRUTE_CAP environment variables, then defaults.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from pglab.connectivity import (
    DEFAULT_BRUTE_CAP,
    DEFAULT_FLOW_CAP,
    CapExceededError,
    components,
    vertex_connectivity,
    vertex_connectivity_via_quotient,
)
from pglab.groups import CayleyTableError, build_abelian_p, build_cyclic, parse_cayley_table
from pglab.numtheory import divisors, euler_phi, factorize, is_prime
from pglab.powergraph import (
    NullGraphError,
    build_power_graph,
    build_power_graph_zn_fast,
    build_proper_power_graph,
    build_reduced_graph,
    equiv_classes,
    generator_set_szn,
    mask_of,
)
from pglab.theorems import (
    CASE_NO_CLOSED_FORM,
    abelian_p_component_formula,
    compare_xi,
    kappa_closed_form,
    verify_group,
    verify_zn,
    xi1,
    xi2,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3

_RANGE_RE = re.compile(r"^(\d+)\.\.(\d+)$")


def _env_cap(name: str, default: int) -> int:
    raw = os.environ.get(name, "").strip()
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        return default


def _caps(args) -> tuple[int, int]:
    flow = args.flow_cap if args.flow_cap is not None else _env_cap("PGLAB_FLOW_CAP", DEFAULT_FLOW_CAP)
    brute = args.brute_cap if args.brute_cap is not None else _env_cap("PGLAB_BRUTE_CAP", DEFAULT_BRUTE_CAP)
    return flow, brute


def _add_cap_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--flow-cap", type=int, default=None, help="max vertices for exact flow computations")
    p.add_argument("--brute-cap", type=int, default=None, help="max vertices for subset-search oracles")


def _print_json(obj, out) -> None:
    out.write(json.dumps(obj, separators=(", ", ": ")) + "\n")


# -- analyze -----------------------------------------------------------------


def analysis_report(n: int, *, exact: bool, flow_cap: int, brute_cap: int) -> dict:
    """Stable-schema report for a single n (keys in fixed order)."""
    fact = factorize(n)
    classes = equiv_classes(build_cyclic(n))
    report: dict = {
        "n": n,
        "factorization": [[p, a] for p, a in fact.factors],
        "phi": euler_phi(n),
        "class_count": classes.block_count,
        "class_sizes": {
            str(classes.representatives[b]): len(block)
            for b, block in enumerate(classes.blocks)
        },
        "reduced_vertex_count": 0 if is_prime(n) else n - euler_phi(n) - 1,
    }
    formula = kappa_closed_form(n)
    report["kappa_closed_form"] = {"case": formula.case, "value": formula.value}
    if fact.num_primes >= 2:
        report["xi1"] = xi1(n)
        report["xi2"] = None if fact.exponents == (1, 1) and fact.num_primes == 2 else xi2(n)
    else:
        report["xi1"] = None
        report["xi2"] = None

    if exact and n <= flow_cap:
        graph = build_power_graph_zn_fast(n)
        if graph.is_complete():
            result = vertex_connectivity(graph, flow_cap=flow_cap)
        else:
            result = vertex_connectivity_via_quotient(graph, classes)
        report["kappa_exact"] = result.kappa
        report["kappa_method"] = result.method
        report["witness"] = sorted(result.witness)
    else:
        report["kappa_exact"] = None
        report["kappa_method"] = None
        report["witness"] = None

    checks = verify_zn(n, flow_cap=flow_cap if exact else 0, brute_cap=brute_cap)
    report["checks"] = [c.to_dict() for c in checks.checks]
    return report


def _render_human(report: dict, out) -> None:
    fact = " * ".join(
        f"{p}^{a}" if a > 1 else str(p) for p, a in report["factorization"]
    )
    out.write(f"n: {report['n']} = {fact}\n")
    out.write(f"phi: {report['phi']}\n")
    out.write(f"classes: {report['class_count']}  sizes: {report['class_sizes']}\n")
    out.write(f"reduced vertices: {report['reduced_vertex_count']}\n")
    cf = report["kappa_closed_form"]
    out.write(f"closed form: {cf['case']}" + (f" -> {cf['value']}\n" if cf["value"] is not None else "\n"))
    out.write(f"xi1: {report['xi1']}  xi2: {report['xi2']}\n")
    if report["kappa_exact"] is not None:
        out.write(
            f"kappa: {report['kappa_exact']} ({report['kappa_method']}), witness {report['witness']}\n"
        )
    else:
        out.write("kappa: skipped\n")
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for c in report["checks"]:
        counts[c["status"]] += 1
        if c["status"] == "fail":
            out.write(f"FAIL {c['name']}: {c['detail']}\n")
    out.write(f"checks: {counts['pass']} pass, {counts['fail']} fail, {counts['skipped']} skipped\n")


def cmd_analyze(args, out) -> int:
    flow_cap, brute_cap = _caps(args)
    n = args.n
    if n < 2:
        print(f"analyze requires n >= 2, got {n}", file=sys.stderr)
        return EXIT_USAGE
    exact = not args.no_exact
    if exact and n > flow_cap:
        print(
            f"n={n} exceeds the flow cap {flow_cap}; rerun with --no-exact or raise --flow-cap",
            file=sys.stderr,
        )
        return EXIT_CAP
    report = analysis_report(n, exact=exact, flow_cap=flow_cap, brute_cap=brute_cap)
    if args.json:
        _print_json(report, out)
    else:
        _render_human(report, out)
    failed = sum(1 for c in report["checks"] if c["status"] == "fail")
    return EXIT_CHECK_FAILED if failed else EXIT_OK


# -- verify ------------------------------------------------------------------


def cmd_verify(args, out) -> int:
    m = _RANGE_RE.match(args.range)
    if not m:
        print(f"malformed range {args.range!r}, expected like 2..400", file=sys.stderr)
        return EXIT_USAGE
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo < 2 or hi < lo:
        print(f"range must satisfy 2 <= lo <= hi, got {args.range}", file=sys.stderr)
        return EXIT_USAGE
    flow_cap, brute_cap = _caps(args)
    total_failed = 0
    for n in range(lo, hi + 1):
        report = verify_zn(n, flow_cap=flow_cap, brute_cap=brute_cap)
        record = {"n": n, "failed": report.failed, "checks": [c.to_dict() for c in report.checks]}
        _print_json(record, out)
        total_failed += report.failed
    print(f"verified {hi - lo + 1} values, {total_failed} failed checks", file=sys.stderr)
    return EXIT_CHECK_FAILED if total_failed else EXIT_OK


# -- pgroup ------------------------------------------------------------------


def cmd_pgroup(args, out) -> int:
    try:
        exponents = [int(tok) for tok in args.exponents.split(",") if tok.strip()]
    except ValueError:
        print(f"malformed exponent list {args.exponents!r}", file=sys.stderr)
        return EXIT_USAGE
    flow_cap, brute_cap = _caps(args)
    try:
        group = build_abelian_p(args.p, exponents)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    if group.order > flow_cap:
        print(f"group order {group.order} exceeds flow cap {flow_cap}", file=sys.stderr)
        return EXIT_CAP

    proper = build_proper_power_graph(group)
    comps = components(proper)
    from pglab.groups import element_order

    comp_rows = []
    for comp in comps:
        order_p = [proper.source_ids[v] for v in comp if element_order(group, proper.source_ids[v]) == args.p]
        comp_rows.append({"size": len(comp), "order_p_elements": len(order_p)})
    report = verify_group(group, flow_cap=flow_cap, brute_cap=brute_cap)
    record = {
        "p": args.p,
        "exponents": exponents,
        "order": group.order,
        "component_count": len(comps),
        "formula_value": abelian_p_component_formula(args.p, len(exponents)),
        "components": comp_rows,
        "checks": [c.to_dict() for c in report.checks],
    }
    if args.json:
        _print_json(record, out)
    else:
        out.write(
            f"abelian p-group p={args.p} exponents={exponents} order={group.order}\n"
            f"proper power graph components: {len(comps)} (formula {record['formula_value']})\n"
        )
        for i, row in enumerate(comp_rows):
            out.write(f"  component {i}: size {row['size']}, order-p elements {row['order_p_elements']}\n")
        for c in report.checks:
            if c.status == "fail":
                out.write(f"FAIL {c.name}: {c.detail}\n")
        out.write(f"checks: {sum(c.status == 'pass' for c in report.checks)} pass, {report.failed} fail\n")
    return EXIT_CHECK_FAILED if report.failed else EXIT_OK


# -- export ------------------------------------------------------------------


def cmd_export(args, out) -> int:
    n = args.n
    if n < 1:
        print(f"export requires n >= 1, got {n}", file=sys.stderr)
        return EXIT_USAGE
    if args.target == "power":
        graph = build_power_graph_zn_fast(n)
    elif args.target == "proper":
        graph = build_proper_power_graph(build_cyclic(n))
    else:
        try:
            graph = build_reduced_graph(n)
        except NullGraphError as exc:
            print(str(exc), file=sys.stderr)
            body = ""
            _write_export(args, body)
            return EXIT_OK
        except ValueError as exc:
            print(str(exc), file=sys.stderr)
            return EXIT_USAGE
    body = graph.to_edge_lines() if args.format == "edges" else graph.to_dot(f"{args.target}_z{n}")
    _write_export(args, body)
    return EXIT_OK


def _write_export(args, body: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


# -- cayley ------------------------------------------------------------------


def cmd_cayley(args, out) -> int:
    flow_cap, brute_cap = _caps(args)
    try:
        with open(args.path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    try:
        group = parse_cayley_table(text)
    except CayleyTableError as exc:
        print(f"invalid Cayley table: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    graph = build_power_graph(group)
    classes = equiv_classes(group)
    report = verify_group(group, flow_cap=flow_cap, brute_cap=brute_cap)
    record: dict = {
        "order": group.order,
        "class_count": classes.block_count,
        "proper_components": len(components(build_proper_power_graph(group))),
    }
    if group.order <= flow_cap:
        result = vertex_connectivity(graph, flow_cap=flow_cap)
        record["kappa_exact"] = result.kappa
        record["witness"] = sorted(result.witness)
    elif args.no_exact:
        record["kappa_exact"] = None
        record["witness"] = None
    else:
        print(f"order {group.order} exceeds flow cap {flow_cap}; use --no-exact", file=sys.stderr)
        return EXIT_CAP
    record["checks"] = [c.to_dict() for c in report.checks]
    if args.json:
        _print_json(record, out)
    else:
        out.write(f"group of order {group.order}: {record['class_count']} classes, ")
        out.write(f"kappa {record.get('kappa_exact')}, proper components {record['proper_components']}\n")
        for c in report.checks:
            if c.status == "fail":
                out.write(f"FAIL {c.name}: {c.detail}\n")
        out.write(f"checks: {sum(c.status == 'pass' for c in report.checks)} pass, {report.failed} fail\n")
    return EXIT_CHECK_FAILED if report.failed else EXIT_OK


# -- entry -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pglab",
        description="Power graphs of finite groups: connectivity, separating sets, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for a single n")
    p.add_argument("n", type=int)
    p.add_argument("--exact", action="store_true", help="force exact kappa (default)")
    p.add_argument("--no-exact", action="store_true", help="skip exact kappa computation")
    p.add_argument("--json", action="store_true")
    _add_cap_flags(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="verification sweep, one JSON line per n")
    p.add_argument("range", help="inclusive range like 2..400")
    _add_cap_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("pgroup", help="abelian p-group component report")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--exponents", type=str, required=True, help="comma-separated, e.g. 1,2")
    p.add_argument("--json", action="store_true")
    _add_cap_flags(p)
    p.set_defaults(func=cmd_pgroup)

    p = sub.add_parser("export", help="write a graph as DOT or an edge list")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("dot", "edges"), required=True)
    p.add_argument("--target", choices=("power", "proper", "reduced"), required=True)
    p.add_argument("--output", type=str, default=None)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("cayley", help="analyze a Cayley-table file")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-exact", action="store_true")
    _add_cap_flags(p)
    p.set_defaults(func=cmd_cayley)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, sys.stdout)
    except CapExceededError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
