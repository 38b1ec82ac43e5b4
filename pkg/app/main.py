# cover-pairs command line
# Subcommands: invariants, family, survey, pairs, verify

import argparse
import csv
import json
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, ValidationError

from app.apis.family import FAMILIES, FamilyParams, get_family, render_family
from app.apis.invariants import InvariantsParams, get_invariants, render_invariants
from app.apis.pairs import PAIR_CLASSES, PairsParams, get_pairs, render_pairs
from app.apis.survey import SurveyParams, get_survey, render_survey
from app.apis.verify import VerifyParams, get_verify, render_verify
from app.config import use_config
from app.errors import (
    CoverPairsError, FamilyParameterError, GraphFormatError, GraphValueError, PairNotRealizedError, UnsupportedError,
)
from app.functions.survey import SurveyOptions, emit, survey_summary
from app.ingest.models.SurveyRecord import CSV_COLUMNS
from app.ingest.transforms.logging_consumers import log_failure, log_file_written, set_quiet

SCHEMA = "cover-pairs/1"
EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2
USAGE_ERRORS = (GraphFormatError, GraphValueError, FamilyParameterError, PairNotRealizedError, UnsupportedError)


def _int_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma list of integers, got {text!r}")


def _print_json(command: str, payload):
    if isinstance(payload, BaseModel):
        payload = payload.model_dump(mode="json")
    print(json.dumps({"schema": SCHEMA, "command": command, "result": payload}, indent=2, sort_keys=True))


def _add_graph_input(p: argparse.ArgumentParser, required: bool):
    group = p.add_mutually_exclusive_group(required=required)
    group.add_argument("--g6", metavar="G6|FILE|-", help="graph6 string, file (first graph) or '-' for stdin")
    group.add_argument("--edges", metavar="N:U-V,...", help="edge list, e.g. '4:0-1,1-2,2-3'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cover-pairs",
        description="Invariants of edge and cover ideals of graphs and the (reg, deg h) pairs they realize",
    )
    parser.add_argument("--config", type=Path, help="Path to cover_pairs.config.toml")
    parser.add_argument("--quiet", action="store_true", help="Suppress progress lines on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="Report every invariant of one graph")
    _add_graph_input(p, required=True)
    p.add_argument("--field", help="Homology field: q or p:PRIME")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--trace", action="store_true", help="Print recursion traces")
    p.add_argument("--no-betti", action="store_true", help="Skip the Hochster Betti table")

    p = sub.add_parser("family", help="Construct a family member and check its predictions")
    p.add_argument("name", choices=sorted(FAMILIES))
    p.add_argument("values", nargs="*", type=int, help="Family parameters")
    p.add_argument("--L1", type=int, help="radius2: leaves at the center")
    p.add_argument("--ts", type=_int_list, help="radius2: comma list t_1,...,t_m")
    p.add_argument("--pdim-method", choices=["auto", "jk", "chordal", "hochster"], default="auto")
    p.add_argument("--field", help="Homology field for Hochster measurements: q or p:PRIME")
    _add_graph_input(p, required=False)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("survey", help="Survey a graph6 corpus or all connected graphs on n <= 7 vertices")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--g6", metavar="FILE|-", help="graph6 file, one graph per line, or '-' for stdin")
    source.add_argument("--n", type=int, help="Enumerate connected graphs on n vertices")
    p.add_argument("--field", help="Homology field: q or p:PRIME")
    p.add_argument("--jobs", type=int, help="Worker processes")
    p.add_argument("--spot-rate", type=float, help="Share of chordal graphs re-checked by Hochster")
    p.add_argument("--oracle-rate", type=float, help="Share of graphs re-checked against series oracles")
    p.add_argument("--seed", type=int, help="Sampling seed")
    p.add_argument("--format", choices=["text", "json", "csv", "jsonl", "scatter"], default="text")
    p.add_argument("--output", type=Path, help="Write records here instead of stdout")

    p = sub.add_parser("pairs", help="Predicted (reg, deg h) pairs of a family class with witnesses")
    p.add_argument("pair_class", choices=sorted(PAIR_CLASSES))
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")

    p = sub.add_parser("verify", help="Run the cross-check suites")
    p.add_argument("level", nargs="?", choices=["quick", "full"], default="quick")
    p.add_argument("--format", choices=["text", "json"], default="text")
    return parser


def cmd_invariants(args) -> int:
    r = get_invariants(InvariantsParams(
        graph6=args.g6, edges=args.edges, field=args.field, betti=not args.no_betti, trace=args.trace,
    ))
    if args.format == "json":
        _print_json("invariants", r)
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        deg_j = r.h_cover.deg_h if r.h_cover else ""
        a_inv = r.h_cover.a_invariant if r.h_cover else ""
        writer.writerow([
            r.graph6, r.flags.n, r.bundle.alpha, r.bundle.M, r.bundle.gG, r.i,
            "" if r.pdim is None else r.pdim, "" if r.reg_cover is None else r.reg_cover,
            deg_j, r.h_edge.deg_h, a_inv, "|".join(r.flags.labels()),
        ])
    else:
        print(render_invariants(r))
    return EXIT_OK


def cmd_family(args) -> int:
    r = get_family(FamilyParams(
        name=args.name, values=args.values, L1=args.L1, ts=args.ts,
        graph6=args.g6, edges=args.edges, pdim_method=args.pdim_method, field=args.field,
    ))
    if args.format == "json":
        _print_json("family", r)
    else:
        print(render_family(r))
    return EXIT_OK if r.all_match else EXIT_FAILURE


def cmd_survey(args) -> int:
    options = SurveyOptions(
        field=args.field, jobs=args.jobs, spot_check_rate=args.spot_rate,
        oracle_sample_rate=args.oracle_rate, seed=args.seed,
    )
    result = get_survey(SurveyParams(source=args.g6, n=args.n, options=options))
    if args.format in ("csv", "jsonl", "scatter"):
        if args.output:
            with open(args.output, "w", newline="") as f:
                rows = emit(result, args.format, f)
            log_file_written(str(args.output), rows)
        else:
            emit(result, args.format, sys.stdout)
    elif args.format == "json":
        _print_json("survey", survey_summary(result))
    else:
        print(render_survey(result))
    return EXIT_OK if result.summary.ok else EXIT_FAILURE


def cmd_pairs(args) -> int:
    r = get_pairs(PairsParams(pair_class=args.pair_class, n=args.n))
    if args.format == "json":
        _print_json("pairs", r)
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["reg", "deg", "witness", "graph6"])
        for row in r.rows:
            writer.writerow([row.reg, row.deg, row.witness, row.graph6])
    else:
        print(render_pairs(r))
    return EXIT_OK


def cmd_verify(args) -> int:
    report = get_verify(VerifyParams(level=args.level))
    if args.format == "json":
        _print_json("verify", report)
    else:
        print(render_verify(report))
    return EXIT_OK if report.ok else EXIT_FAILURE


COMMANDS = {
    "invariants": cmd_invariants,
    "family": cmd_family,
    "survey": cmd_survey,
    "pairs": cmd_pairs,
    "verify": cmd_verify,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    set_quiet(args.quiet)
    if args.config:
        use_config(args.config)
    try:
        return COMMANDS[args.command](args)
    except (ValidationError, ValueError) + USAGE_ERRORS as e:
        log_failure(str(e))
        return EXIT_USAGE
    except CoverPairsError as e:
        log_failure(f"{type(e).__name__}: {e}")
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
