"""Command-line front end.

Every command builds a list of records (plain dicts with a fixed key
order) and hands it to one of three renderers.  Exit codes: 0 success,
1 conformance failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Dict, List, Optional, Sequence

from . import __version__
from .chow import CurveClass, DivisorClass
from .cohomology import cohomology_vector, ext1_line, initialized_acm_line_bundles
from .conformance import SCOPES, run_checks
from .delpezzo import SurfaceClass, cremona, curve_classes, normal_chi, orbit_reduce, pushforward, s_degree, s_genus
from .enumeration import (
    DivisorialVerdict,
    IntermediateVerdict,
    decomposable_candidates,
    divisorial_table,
    intermediate_table,
    theorem_a_filter,
    theorem_b_verdict,
)
from .invariants import BundleData, NonIntegralError, chi_rank2

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

Record = Dict[str, Any]


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# rendering


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    if isinstance(value, (list, tuple)):
        if value and all(isinstance(v, int) for v in value):
            return "(" + ",".join(str(v) for v in value) + ")"
        return " ".join(_cell(v) for v in value)
    return str(value)


def _jsonable(value: Any) -> Any:
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    if isinstance(value, list):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


def render_json(data: Any) -> str:
    return json.dumps(_jsonable(data), separators=(",", ":"), ensure_ascii=False)


def render_csv(records: Sequence[Record], columns: Sequence[str]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(columns)
    for r in records:
        writer.writerow([_cell(r[c]) for c in columns])
    return buf.getvalue()


def render_md(records: Sequence[Record], columns: Sequence[str]) -> str:
    rows = [[_cell(r[c]).replace("|", "\\|") for c in columns] for r in records]
    widths = [max([len(c)] + [len(row[i]) for row in rows]) for i, c in enumerate(columns)]

    def line(cells):
        return "| " + " | ".join(v.ljust(w) for v, w in zip(cells, widths)) + " |"

    out = [line(columns), "|" + "|".join("-" * (w + 2) for w in widths) + "|"]
    out.extend(line(row) for row in rows)
    return "\n".join(out) + "\n"


def emit(records: Sequence[Record], columns: Sequence[str], fmt: str, single: bool = False, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        payload = records[0] if single else list(records)
        out.write(render_json(payload) + "\n")
    elif fmt == "csv":
        out.write(render_csv(records, columns))
    else:
        out.write(render_md(records, columns))


def default_format(stream=None) -> str:
    stream = stream or sys.stdout
    try:
        return "md" if stream.isatty() else "csv"
    except (AttributeError, ValueError):
        return "csv"


# ---------------------------------------------------------------------------
# commands


def _pair_text(pair) -> str:
    return "%s+%s" % pair


def cmd_cohom(args) -> int:
    v = cohomology_vector(DivisorClass(*args.d))
    record = {"h0": v.h0, "h1": v.h1, "h2": v.h2, "h3": v.h3}
    emit([record], list(record), args.format, single=True)
    return EXIT_OK


def cmd_chi(args) -> int:
    b = BundleData(DivisorClass(*args.c1), CurveClass(*args.c2))
    try:
        value = chi_rank2(b)
    except NonIntegralError as exc:
        raise UsageError(str(exc)) from exc
    record = {"c1": b.c1.as_tuple(), "c2": b.c2.as_tuple(), "chi": value}
    emit([record], list(record), args.format, single=True)
    return EXIT_OK


def cmd_ext(args) -> int:
    target, sub = DivisorClass(*args.target), DivisorClass(*args.sub)
    record = {"target": target.as_tuple(), "sub": sub.as_tuple(), "ext1": ext1_line(target, sub)}
    emit([record], list(record), args.format, single=True)
    return EXIT_OK


def cmd_acm_lines(args) -> int:
    records = [{"d1": d.d1, "d2": d.d2, "d3": d.d3} for d in sorted(initialized_acm_line_bundles())]
    emit(records, ["d1", "d2", "d3"], args.format)
    return EXIT_OK


def _divisorial_records(verdict: Optional[str]) -> List[Record]:
    records = []
    for r in divisorial_table():
        if verdict and r.verdict.value != verdict:
            continue
        records.append(
            {
                "alpha": r.alpha.as_tuple(),
                "delta": r.delta.as_tuple(),
                "e": r.e,
                "beta": r.beta.as_tuple(),
                "classE": r.classE.as_tuple(),
                "verdict": r.verdict.value,
            }
        )
    return records


def _intermediate_records(verdict: Optional[str]) -> List[Record]:
    records = []
    for r in intermediate_table():
        if verdict and r.verdict.value != verdict:
            continue
        records.append(
            {
                "label": r.label,
                "alpha": r.alpha.as_tuple(),
                "beta": r.beta.as_tuple(),
                "degE": r.degE,
                "paE": r.paE,
                "verdict": r.verdict.value,
                "split": _pair_text(r.split) if r.split else "",
            }
        )
    return records


def cmd_table(args) -> int:
    if args.which == "divisorial":
        choices = [v.value for v in DivisorialVerdict]
        columns = ["alpha", "delta", "e", "beta", "classE", "verdict"]
        build = _divisorial_records
    else:
        choices = [v.value for v in IntermediateVerdict]
        columns = ["label", "alpha", "beta", "degE", "paE", "verdict", "split"]
        build = _intermediate_records
    if args.verdict and args.verdict not in choices:
        raise UsageError(f"unknown verdict {args.verdict!r}; choose from {', '.join(choices)}")
    emit(build(args.verdict), columns, args.format)
    return EXIT_OK


def _classify_record(c1: DivisorClass, c2: Optional[CurveClass]) -> Record:
    in_a = theorem_a_filter(c1)
    verdict = theorem_b_verdict(c1, c2) if c2 is not None else None
    if not in_a:
        text = "outside Theorem A bounds"
    elif verdict is None or not verdict.admissible:
        text = "not admissible (Theorem B)"
    else:
        text = f"admissible: {verdict.curve_description}; {verdict.indecomposability_condition}"
    splits = decomposable_candidates(c1, c2_target=c2)
    return {
        "c1": c1.as_tuple(),
        "c2": c2.as_tuple() if c2 is not None else None,
        "theorem_a": in_a,
        "verdict": text,
        "split_candidates": [_pair_text(p) for p in splits],
    }


def cmd_classify(args) -> int:
    c1 = DivisorClass(*args.c1)
    if args.c2 is not None:
        records = [_classify_record(c1, CurveClass(*args.c2))]
    else:
        allowed = theorem_b_verdict(c1, CurveClass(0, 0, 0)).allowed_c2 if theorem_a_filter(c1) else ()
        c1_sorted = DivisorClass(*sorted(c1))
        if allowed:
            records = [_classify_record(c1_sorted, c2) for c2 in allowed]
        else:
            records = [_classify_record(c1, None)]
    columns = ["c1", "c2", "theorem_a", "verdict", "split_candidates"]
    emit(records, columns, args.format, single=len(records) == 1)
    return EXIT_OK


def _surface_record(c: SurfaceClass) -> Record:
    return {
        "class": str(c),
        "degree": s_degree(c),
        "genus": s_genus(c),
        "pushforward": pushforward(c).as_tuple(),
    }


def cmd_delpezzo(args) -> int:
    if args.action == "classes":
        try:
            found = curve_classes(args.degree, args.genus)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        if args.reduce:
            found = orbit_reduce(found)
        records = [_surface_record(c) for c in found]
        emit(records, ["class", "degree", "genus", "pushforward"], args.format)
        return EXIT_OK
    c = SurfaceClass(*args.cls)
    if args.action == "cremona":
        image = cremona(c)
        record = {"class": str(c), "image": str(image), "degree": s_degree(image), "genus": s_genus(image)}
    else:
        record = _surface_record(c)
        if record["genus"] in (0, 1):
            record["chi_OS"], record["chi_N"] = normal_chi(c)
    emit([record], list(record), args.format, single=True)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_checks(args.only)
    if args.format == "json":
        sys.stdout.write(render_json(report.as_dict()) + "\n")
    else:
        records = [c.as_dict() for c in report.checks]
        emit(records, ["name", "scope", "provenance", "status", "detail"], args.format)
        if args.format == "md":
            s = report.summary()
            sys.stdout.write(
                f"\n{s['total']} checks: {s['pass']} pass, {s['fail']} fail, "
                f"{s['paper-discrepancy']} paper-discrepancy\n"
            )
    return report.exit_code


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json", "md"), default=None)

    parser = argparse.ArgumentParser(
        prog="triquad",
        description="Rank-2 aCM bundle bookkeeping on P1 x P1 x P1.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cohom", parents=[common], help="h^i of a line bundle")
    p.add_argument("d", nargs=3, type=int, metavar="D")
    p.set_defaults(func=cmd_cohom)

    p = sub.add_parser("chi", parents=[common], help="Euler characteristic of rank-2 Chern data")
    p.add_argument("c1", nargs=3, type=int, metavar="A")
    p.add_argument("c2", nargs=3, type=int, metavar="B")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("ext", parents=[common], help="dim Ext^1(target, sub) for line bundles")
    p.add_argument("target", nargs=3, type=int, metavar="T")
    p.add_argument("sub", nargs=3, type=int, metavar="S")
    p.set_defaults(func=cmd_ext)

    p = sub.add_parser("acm-lines", parents=[common], help="initialized aCM line bundles")
    p.set_defaults(func=cmd_acm_lines)

    p = sub.add_parser("table", parents=[common], help="regenerate a case table")
    p.add_argument("which", choices=("divisorial", "intermediate"))
    p.add_argument("--verdict", default=None, metavar="FILTER")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("classify", parents=[common], help="classifier verdict for (c1, c2)")
    p.add_argument("c1", nargs=3, type=int, metavar="A")
    p.add_argument("--c2", nargs=3, type=int, metavar="B", default=None)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("delpezzo", parents=[common], help="curves on the degree-6 del Pezzo surface")
    dp = p.add_subparsers(dest="action", required=True)
    q = dp.add_parser("classes", parents=[common])
    q.add_argument("degree", type=int)
    q.add_argument("genus", type=int)
    q.add_argument("--reduce", action="store_true", help="one class per Cremona orbit")
    for name in ("push", "cremona"):
        q = dp.add_parser(name, parents=[common])
        q.add_argument("cls", nargs=4, type=int, metavar=("A", "B1", "B2", "B3"))
    p.set_defaults(func=cmd_delpezzo)

    p = sub.add_parser("verify", parents=[common], help="compare derived results with golden data")
    p.add_argument("--only", action="append", choices=SCOPES, metavar="SCOPE")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = default_format()
    try:
        return args.func(args)
    except (UsageError, OverflowError, TypeError) as exc:
        print(f"triquad: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
