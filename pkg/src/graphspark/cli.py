"""Command-line interface.

Graph arguments may be a graph6 string, a family spec (``spider:4,1,1``,
``cart:(cycle:4)x(path:2)``) or a file of such lines, in which case the
command runs once per line.  Vertices are 0-indexed everywhere.

Exit status: 0 success, 1 verification violations, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import batch
from .config import load_settings
from .connectivity import minimum_vertex_cut, vertex_connectivity
from .constructions import FortVectorAssignment, border, matrix_from_fort, rank_bump_details
from .errors import GraphSparkError
from .forts import fort_sequence, is_zero_forcing_set, spark, zf_closure
from .linalg import (
    full_spark_check,
    generic_nullity,
    graph_of,
    is_generic,
    matrix_spark,
    null_basis,
    null_support,
    nullity,
    parter_fiedler,
    rank,
)
from .graph6 import encode_graph6
from .matio import format_matrix_text, load_matrix, matrix_to_json, parse_vector
from .verify import SUITES, run_verify

EXIT_OK, EXIT_VIOLATIONS, EXIT_USAGE = 0, 1, 2


def _int_list(text: str) -> list[int]:
    return [int(t) for t in text.replace(",", " ").split()]


def _graph_inputs(arg: str) -> list[str]:
    path = Path(arg)
    if path.is_file():
        return batch.read_lines(path)
    return [arg]


def _emit(obj, args) -> None:
    print(json.dumps(obj, indent=None if getattr(args, "compact", False) else 2))


def _emit_records(records: list[dict], args) -> None:
    if getattr(args, "csv", False):
        sys.stdout.write(batch.records_to_csv(records))
    elif len(records) == 1 and "error" not in records[0]:
        rec = dict(records[0])
        rec.pop("line", None)
        _emit(rec, args)
    else:
        sys.stdout.write(batch.records_to_json_lines(records))


def _emit_matrix(a, args) -> None:
    if getattr(args, "json", False):
        _emit(matrix_to_json(a), args)
    else:
        sys.stdout.write(format_matrix_text(a))


def cmd_spark(args, settings) -> int:
    method = {"bnb": "branch_and_bound", "brute": "brute_force"}.get(args.method, args.method or settings.spark_method)
    _emit_records(list(batch.run_batch("spark", _graph_inputs(args.graph), method=method)), args)
    return EXIT_OK


def cmd_forts(args, settings) -> int:
    limit = args.limit or settings.fort_limit
    if args.list:
        g = batch.parse_graph_text(args.graph)
        seq = fort_sequence(g, limit=limit, emit=True)
        _emit(seq.to_dict(), args)
        return EXIT_OK
    if not args.sequence:
        # Without --sequence report the minimum fort only.
        return cmd_spark(argparse.Namespace(**{**vars(args), "method": None}), settings)
    _emit_records(list(batch.run_batch("forts", _graph_inputs(args.graph), limit=limit)), args)
    return EXIT_OK


def cmd_zf(args, settings) -> int:
    g = batch.parse_graph_text(args.graph)
    initial = _int_list(args.initial) if args.initial else []
    closure = zf_closure(g, initial)
    _emit({
        "initial": sorted(initial),
        "closure": sorted(closure),
        "zero_forcing": is_zero_forcing_set(g, initial),
        "fort": sorted(set(range(g.n)) - closure),
    }, args)
    return EXIT_OK


def cmd_kappa(args, settings) -> int:
    records = []
    for i, text in enumerate(_graph_inputs(args.graph), 1):
        rec = {"line": i, "input": text}
        try:
            g = batch.parse_graph_text(text)
            cut = minimum_vertex_cut(g)
            rec.update({"kappa": vertex_connectivity(g), "cut": None if cut is None else sorted(cut)})
        except (GraphSparkError, ValueError) as exc:
            rec["error"] = str(exc)
        records.append(rec)
    _emit_records(records, args)
    return EXIT_OK


def cmd_mat(args, settings) -> int:
    a = load_matrix(args.file)
    op = args.op
    if op == "rank":
        _emit({"rank": rank(a), "nullity": nullity(a), "shape": list(a.shape)}, args)
    elif op == "spark":
        _emit(matrix_spark(a).to_dict(), args)
    elif op == "null":
        basis = null_basis(a)
        _emit({
            "nullity": basis.dimension,
            "basis": [[str(x) for x in v] for v in basis.vectors],
            "support": sorted(null_support(a)),
        }, args)
    elif op == "classify":
        if args.vertex is None:
            verts = range(a.n_rows)
        else:
            verts = [args.vertex]
        _emit({str(v): parter_fiedler(a, v).to_dict() for v in verts}, args)
    elif op == "generic":
        x_generic = is_generic(a, limit=settings.generic_limit)
        out = {"generic": x_generic}
        if a.symmetric:
            out["generic_nullity_at_least"] = generic_nullity(a, seed=settings.seed, limit=settings.generic_limit)
        _emit(out, args)
    elif op == "fullspark":
        _emit(full_spark_check(a).to_dict(), args)
    elif op == "graph":
        g = graph_of(a)
        _emit({"graph6": encode_graph6(g), "edges": g.edges()}, args)
    return EXIT_OK


def cmd_construct(args, settings) -> int:
    if args.kind == "from-fort":
        g = batch.parse_graph_text(args.target)
        fort = _int_list(args.fort)
        values = parse_vector(args.values) if args.values else [Fraction(1)] * len(fort)
        a = matrix_from_fort(g, FortVectorAssignment.from_lists(fort, values))
        _emit_matrix(a, args)
    elif args.kind == "bump":
        res = rank_bump_details(load_matrix(args.target))
        if args.json:
            _emit({**matrix_to_json(res.matrix), "index": res.index}, args)
        else:
            sys.stdout.write(format_matrix_text(res.matrix))
    elif args.kind == "border":
        if not args.x:
            raise GraphSparkError("border needs --x")
        _emit_matrix(border(load_matrix(args.target), parse_vector(args.x)), args)
    return EXIT_OK


def cmd_verify(args, settings) -> int:
    if args.list or not args.suite:
        for name, suite in SUITES.items():
            print(f"{name:18s} {suite.kind:6s} {suite.description}")
        return EXIT_OK
    seed = settings.seed if args.seed is None else args.seed
    threads = args.threads or settings.threads
    report = run_verify(args.suite, args.corpus, seed=seed, threads=threads)
    if args.json:
        _emit(report.to_dict(), args)
    else:
        status = "PASS" if report.passed else "FAIL"
        print(f"{status} suite={report.suite} corpus={report.corpus} seed={report.seed} "
              f"cases={report.cases} violations={len(report.violations)} elapsed={report.elapsed:.2f}s")
        for v in report.violations[:20]:
            print("  " + json.dumps(v))
    return EXIT_OK if report.passed else EXIT_VIOLATIONS


def cmd_batch(args, settings) -> int:
    options = {}
    if args.command == "spark":
        options["method"] = settings.spark_method
    elif args.command == "forts":
        options["limit"] = settings.fort_limit
    records = list(batch.run_batch(args.command, batch.read_lines(args.file), **options))
    if args.csv:
        sys.stdout.write(batch.records_to_csv(records))
    else:
        sys.stdout.write(batch.records_to_json_lines(records))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphspark", description=__doc__.split("\n\n")[0])
    parser.add_argument("--config", help="settings file (key = value lines)")
    sub = parser.add_subparsers(dest="cmd", required=True)

    def output_flags(p):
        p.add_argument("--json", action="store_true", help="JSON output (default for most commands)")
        p.add_argument("--csv", action="store_true", help="CSV output where tabular")
        p.add_argument("--compact", action="store_true", help="single-line JSON")

    p = sub.add_parser("spark", help="minimum fort / spark of a graph")
    p.add_argument("graph")
    p.add_argument("--method", choices=["bnb", "brute", "branch_and_bound", "brute_force"])
    output_flags(p)
    p.set_defaults(func=cmd_spark)

    p = sub.add_parser("forts", help="fort sequence (counts by size)")
    p.add_argument("graph")
    p.add_argument("--sequence", action="store_true", help="count forts of every size")
    p.add_argument("--list", action="store_true", help="also list the forts (n <= 10)")
    p.add_argument("--limit", type=int, help="largest order for exhaustive enumeration")
    output_flags(p)
    p.set_defaults(func=cmd_forts)

    p = sub.add_parser("zf", help="zero forcing closure")
    p.add_argument("graph")
    p.add_argument("--initial", default="", help="comma-separated initial blue vertices")
    output_flags(p)
    p.set_defaults(func=cmd_zf)

    p = sub.add_parser("kappa", help="vertex connectivity and a minimum cut set")
    p.add_argument("graph")
    output_flags(p)
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("mat", help="exact matrix computations on a matrix file")
    p.add_argument("op", choices=["rank", "spark", "null", "classify", "generic", "fullspark", "graph"])
    p.add_argument("file")
    p.add_argument("-v", "--vertex", type=int, help="vertex for classify (default: all)")
    output_flags(p)
    p.set_defaults(func=cmd_mat)

    p = sub.add_parser("construct", help="matrix constructions")
    p.add_argument("kind", choices=["from-fort", "bump", "border"])
    p.add_argument("target", help="graph (from-fort) or matrix file (bump, border)")
    p.add_argument("--fort", default="", help="fort vertices for from-fort")
    p.add_argument("--values", help="nonzero values on the fort (default all ones)")
    p.add_argument("--x", help="bordering vector for border")
    output_flags(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="run a theorem verification suite")
    p.add_argument("suite", nargs="?", help="suite id; omit or use --list to see them")
    p.add_argument("--corpus", default="exhaustive:7",
                   help="exhaustive:N | exhaustive:A-B | file:PATH | random:COUNT:NMAX")
    p.add_argument("--seed", type=int)
    p.add_argument("--threads", type=int)
    p.add_argument("--list", action="store_true")
    output_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("batch", help="run a graph command over every line of a file")
    p.add_argument("command", choices=sorted(batch.COMMANDS))
    p.add_argument("file")
    output_flags(p)
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = load_settings(args.config)
        return args.func(args, settings)
    except (GraphSparkError, ValueError, OSError) as exc:
        print(f"graphspark: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
