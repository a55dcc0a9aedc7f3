"""Command line entry point: verify, rootsys, primes, constants, closure, browse."""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Any, Optional, Sequence

from chevcheck.algebra.chevalley import chevalley_build, lie_reduce
from chevcheck.algebra.field import FiniteField, field_from_order
from chevcheck.algebra.group import GroupElement, root_element, torus_element, weyl_rep
from chevcheck.algebra.rootsystem import (
    Cocharacter,
    RootSystem,
    rootsystem_from_label,
    supported_type_labels,
)
from chevcheck.algebra.subgroup import closure
from chevcheck.scenarios import parse_field_label
from chevcheck.services.scenario_service import (
    reports_to_json,
    resolve_ids,
    run_suite,
    summary_exit_code,
    write_reports,
)
from chevcheck.utils.constants import (
    CLOSURE_CAP,
    DEFAULT_SUITE,
    ERROR_LOG_PATH,
    EXIT_PASS,
    EXIT_USAGE,
)
from chevcheck.utils.errors import (
    ChevcheckError,
    GeneratorSpecError,
    UnsupportedFieldError,
    exit_code_for,
    format_cli_error,
    record_error,
)
from chevcheck.utils.formatting import aligned_table, canonical_json, root_label
from chevcheck.utils.logging_setup import configure_logging


class ChevcheckParser(argparse.ArgumentParser):
    """Usage errors exit with EXIT_USAGE instead of argparse's 2."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} must be positive")
    return value


def build_parser() -> ChevcheckParser:
    parser = ChevcheckParser(prog="chevcheck", description="Exact checks for Chevalley groups.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run verification scenarios")
    verify.add_argument("--suite", default=DEFAULT_SUITE)
    verify.add_argument("--scenario", action="append", dest="scenarios", metavar="ID")
    verify.add_argument("--field", action="append", dest="fields", metavar="gfQ")
    verify.add_argument("--out", metavar="FILE", help="write the JSON report array here")
    verify.add_argument("--budget", type=_positive_int, default=CLOSURE_CAP)
    verify.add_argument("--tuple-length", type=_positive_int, default=None)
    verify.add_argument("--jobs", type=_positive_int, default=1)
    verify.add_argument("--no-timing", action="store_true", help="omit elapsed_s from JSON")
    verify.add_argument("--json", action="store_true", help="print JSON instead of the summary table")

    rootsys = sub.add_parser("rootsys", help="roots, coroots and pairings of a root system")
    rootsys.add_argument("--type", required=True, dest="type_label")
    rootsys.add_argument("--format", choices=("json", "text"), default="json")

    primes = sub.add_parser("primes", help="bad and not very good primes")
    primes.add_argument("--type", dest="type_label", help="omit to list every supported type")
    primes.add_argument("--format", choices=("json", "text"), default="json")

    constants = sub.add_parser("constants", help="structure constants N_{a,b} as JSON")
    constants.add_argument("--type", required=True, dest="type_label")

    closure_cmd = sub.add_parser("closure", help="order of a generated subgroup")
    closure_cmd.add_argument("--group", default="G2", dest="type_label")
    closure_cmd.add_argument("--field", default="gf2")
    closure_cmd.add_argument(
        "--gens",
        default="simple",
        help="'simple' or ';'-separated x[c1,c2](v), h[c1,c2](v), s[c1,c2]",
    )
    closure_cmd.add_argument("--cap", type=_positive_int, default=CLOSURE_CAP)
    closure_cmd.add_argument("--dump", metavar="FILE", help="write all elements as integer matrices")

    browse = sub.add_parser("browse", help="open the report browser")
    browse.add_argument("--report", metavar="FILE", help="JSON report to load")
    browse.add_argument("--export", metavar="FILE", default="chevcheck_report.json")
    return parser


# verify


def cmd_verify(args: argparse.Namespace) -> int:
    params: dict[str, Any] = {"budget": args.budget}
    if args.fields:
        params["fields"] = [parse_field_label(f) for f in args.fields]
    if args.tuple_length is not None:
        params["tuple_length"] = args.tuple_length
    ids = resolve_ids(args.scenarios, args.suite)
    reports = run_suite(ids, params, jobs=args.jobs)

    if args.out:
        write_reports(args.out, reports, timing=not args.no_timing)
    if args.json:
        sys.stdout.write(reports_to_json(reports, timing=not args.no_timing))
    else:
        rows = [
            (
                r.scenario_id,
                r.status,
                r.metrics.get("checks", 0),
                "-" if args.no_timing or r.elapsed_s is None else f"{r.elapsed_s:.2f}s",
                (r.failure or {}).get("check") or r.reason or "",
            )
            for r in reports
        ]
        print(aligned_table(("id", "status", "checks", "time", "note"), rows))
    return summary_exit_code(reports)


# root data


def rootsys_data(rs: RootSystem) -> dict[str, Any]:
    pos = list(rs.positive_roots)
    return {
        "type": rs.label,
        "rank": rs.rank,
        "cartan": [list(row) for row in rs.cartan],
        "lengths": list(rs.lengths),
        "positive_roots": [list(r) for r in pos],
        "labels": [root_label(r) for r in pos],
        "coroots": [list(rs.coroot(r).coeffs) for r in pos],
        "norms": [rs.norm(r) for r in pos],
        "pairings": rs.pairing_matrix(pos),
        "highest_root": list(rs.highest_root),
        "root_count": len(rs.roots),
        "bad_primes": list(rs.classify_primes().bad),
    }


def cmd_rootsys(args: argparse.Namespace) -> int:
    rs = rootsystem_from_label(args.type_label)
    data = rootsys_data(rs)
    if args.format == "json":
        sys.stdout.write(canonical_json(data))
        return EXIT_PASS
    rows = [
        (label, sum(r), norm, root_label(co, symbol="h"), " ".join(str(p) for p in rs.simple_pairings(tuple(r))))
        for label, r, norm, co in zip(data["labels"], data["positive_roots"], data["norms"], data["coroots"])
    ]
    print(f"{rs.label}: {data['root_count']} roots, highest {root_label(rs.highest_root)}")
    print(aligned_table(("root", "height", "norm", "coroot", "<root, a_i^v>"), rows))
    return EXIT_PASS


def cmd_primes(args: argparse.Namespace) -> int:
    labels = [args.type_label] if args.type_label else supported_type_labels()
    table = {}
    for label in labels:
        rs = rootsystem_from_label(label)
        table[rs.label] = rs.classify_primes().to_dict()
    if args.format == "json":
        if args.type_label:
            ((label, entry),) = table.items()
            sys.stdout.write(canonical_json({"type": label, **entry}))
        else:
            sys.stdout.write(canonical_json(table))
        return EXIT_PASS
    rows = [(k, v["bad"] or "-", v["not_very_good_extra"] or "-") for k, v in table.items()]
    print(aligned_table(("type", "bad", "not very good"), rows))
    return EXIT_PASS


def cmd_constants(args: argparse.Namespace) -> int:
    form = chevalley_build(rootsystem_from_label(args.type_label))
    sys.stdout.write(canonical_json(form.constants_dump()))
    return EXIT_PASS


# closure


_GEN_RE = re.compile(r"\s*([xhs])\[\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\](?:\((\d+)\))?\s*")


def _parse_order(label: str) -> FiniteField:
    match = re.fullmatch(r"\s*gf\(?(\d+)\)?\s*", label, flags=re.IGNORECASE)
    if not match:
        raise UnsupportedFieldError(f"cannot parse field label {label!r}")
    return field_from_order(int(match.group(1)))


def parse_generators(spec: str, rs: RootSystem, field: FiniteField) -> list[GroupElement]:
    """Generators from 'simple' or a ';'-separated list of x[..](v), h[..](v) and s[..]."""
    lie = lie_reduce(chevalley_build(rs), field)
    if spec.strip() == "simple":
        return [
            root_element(lie, tuple(sign * c for c in r), field.one())
            for r in rs.simple_roots
            for sign in (1, -1)
        ]
    gens: list[GroupElement] = []
    for token in filter(str.strip, spec.split(";")):
        match = _GEN_RE.fullmatch(token)
        if not match:
            raise GeneratorSpecError(f"cannot parse generator {token!r}")
        kind, coeffs_text, value = match.groups()
        coeffs = tuple(int(c) for c in coeffs_text.split(","))
        if len(coeffs) != rs.rank:
            raise GeneratorSpecError(f"{token.strip()}: expected {rs.rank} coordinates")
        if value is not None and int(value) >= field.order:
            raise GeneratorSpecError(f"{token.strip()}: {value} is not an element of {field.label}")
        scalar = field.element(int(value)) if value is not None else field.one()
        if kind == "x":
            gens.append(root_element(lie, rs.check(coeffs), scalar))
        elif kind == "h":
            if scalar.is_zero():
                raise GeneratorSpecError(f"{token.strip()}: torus elements need a nonzero value")
            gens.append(torus_element(lie, Cocharacter(coeffs), scalar))
        else:
            gens.append(weyl_rep(lie, rs.check(coeffs)))
    if not gens:
        raise GeneratorSpecError("no generators given")
    return gens


def cmd_closure(args: argparse.Namespace) -> int:
    rs = rootsystem_from_label(args.type_label)
    field = _parse_order(args.field)
    gens = parse_generators(args.gens, rs, field)
    group = closure(gens, args.cap, "closure")
    stats = group.stats
    print(
        aligned_table(
            ("group", "field", "generators", "order", "rounds", "time"),
            [(rs.label, field.label, stats.generator_count, stats.order, stats.rounds, f"{stats.elapsed_s:.2f}s")],
        )
    )
    if args.dump:
        mats = [field.to_ints(group.matrices[i]).tolist() for i in range(group.order)]
        with open(args.dump, "w", encoding="utf-8") as f:
            json.dump({"field": field.label, "order": group.order, "elements": mats}, f)
    return EXIT_PASS


def cmd_browse(args: argparse.Namespace) -> int:
    from chevcheck.app import ChevcheckTui

    ChevcheckTui(report_path=args.report, export_path=args.export).run()
    return EXIT_PASS


_COMMANDS = {
    "verify": cmd_verify,
    "rootsys": cmd_rootsys,
    "primes": cmd_primes,
    "constants": cmd_constants,
    "closure": cmd_closure,
    "browse": cmd_browse,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command != "browse":
        configure_logging(args.verbose)
    try:
        return _COMMANDS[args.command](args)
    except (ChevcheckError, OSError) as exc:
        record_error(args.command, exc, ERROR_LOG_PATH)
        print(format_cli_error(args.command, exc, ERROR_LOG_PATH), file=sys.stderr)
        return exit_code_for(exc)


if __name__ == "__main__":
    sys.exit(main())
