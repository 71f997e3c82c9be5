"""Command-line front end: ``pmcut solve|check|generate|verify-reduction|bench``."""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import generators as gen
from .branching import solve_pmc
from .graph import Cut, Graph, GraphFormatError, classify_cut, is_connected, max_degree, parse_graph
from .oracle import InstanceTooLarge, OracleLimits, has_pmc_oracle
from .poly import (
    NotInClass,
    TPresentError,
    caterpillar_criterion,
    is_pseudo_chordal,
    is_t_free,
    solve_max_deg2,
    solve_pseudo_chordal,
    solve_t_free,
)
from .reductions import CnfFormatError, parse_cnf, reduce_basic, reduce_girth, verify_reduction
from .result import SolveResult, SolveStats, checked

ALGORITHMS = ("auto", "oracle", "branch", "tfree", "pseudochordal", "deg2")

EXIT_OK, EXIT_NO, EXIT_ERROR, EXIT_DISAGREE = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def pick_algorithm(g: Graph) -> str:
    if max_degree(g) <= 2:
        return "deg2"
    if is_pseudo_chordal(g)[0]:
        return "pseudochordal"
    if is_t_free(g)[0]:
        return "tfree"
    return "branch"


def run_algorithm(g: Graph, algo: str, oracle_limit: int = 24, threads: int = 1) -> SolveResult:
    """Dispatch after checking the algorithm's precondition."""
    if algo == "auto":
        algo = pick_algorithm(g)
    if algo == "oracle":
        ok, cut = has_pmc_oracle(g, OracleLimits(max_vertices_pmc=oracle_limit))
        res = SolveResult(ok, cut, SolveStats(), "oracle")
    elif algo == "branch":
        res = solve_pmc(g, workers=threads)
    elif algo == "deg2":
        res = solve_max_deg2(g)
    elif algo == "pseudochordal":
        res = solve_pseudo_chordal(g)
    elif algo == "tfree":
        free, witness = is_t_free(g)
        if not free:
            raise TPresentError(witness)
        res = solve_t_free(g)
    elif algo == "caterpillar":
        res = caterpillar_criterion(g)
    else:
        raise UsageError(f"unknown algorithm {algo!r}")
    return checked(g, res)


def applicable_algorithms(g: Graph, oracle_limit: int) -> list[str]:
    out = []
    if g.n <= oracle_limit:
        out.append("oracle")
    out.append("branch")
    if max_degree(g) <= 2:
        out.append("deg2")
    if is_pseudo_chordal(g)[0]:
        out.append("pseudochordal")
    if is_t_free(g)[0]:
        out.append("tfree")
    if is_connected(g) and g.m == g.n - 1:
        out.append("caterpillar")
    return out


def cmd_solve(args) -> int:
    g = parse_graph(_read_text(args.graph))
    start = time.perf_counter()
    res = run_algorithm(g, args.algo, args.oracle_limit, args.threads)
    elapsed = (time.perf_counter() - start) * 1000
    doc = res.to_json()
    doc["n"], doc["m"] = g.n, g.m
    if not args.deterministic:
        doc["wall_ms"] = round(elapsed, 3)
    status = EXIT_OK if res.has_pmc else EXIT_NO
    if args.cross_check:
        verdicts = {a: run_algorithm(g, a, args.oracle_limit, args.threads).has_pmc
                    for a in applicable_algorithms(g, args.oracle_limit)}
        agree = len(set(verdicts.values()) | {res.has_pmc}) == 1
        doc["cross_check"] = {"verdicts": verdicts, "agree": agree}
        if not agree:
            status = EXIT_DISAGREE
    if args.json:
        _write_text(args.output, _dump(doc))
    else:
        line = f"{'YES' if res.has_pmc else 'NO'} algorithm={res.algorithm} n={g.n} m={g.m}"
        if res.certificate is not None:
            line += " X=" + ",".join(str(v + 1) for v in res.certificate.xs)
        if args.cross_check:
            line += f" cross_check={'agree' if doc['cross_check']['agree'] else 'DISAGREE'}"
        _write_text(args.output, line + "\n")
    return status


def cmd_check(args) -> int:
    g = parse_graph(_read_text(args.graph))
    data = json.loads(_read_text(args.cut))
    if "certificate" in data:
        data = data["certificate"]
    if data is None:
        raise UsageError("no certificate to check")
    cut = Cut.from_json(g.n, data)
    cls = classify_cut(g, cut)
    ok = cls.name == "PERFECT_MATCHING_CUT"
    sys.stdout.write(_dump({"classification": cls.name, "result": "PASS" if ok else "FAIL"}))
    return EXIT_OK if ok else EXIT_NO


def _generate_graph(args) -> tuple[Graph, object]:
    rng = random.Random(args.seed)
    p = args.params
    kind = args.kind

    def need(k):
        if len(p) != k:
            raise UsageError(f"{kind} takes {k} integer parameter(s)")
        return [int(v) for v in p]

    if kind == "path":
        return gen.path(*need(1)), None
    if kind == "cycle":
        return gen.cycle(*need(1)), None
    if kind == "complete":
        return gen.complete(*need(1)), None
    if kind == "star":
        return gen.star(*need(1)), None
    if kind == "cube":
        need(0)
        return gen.cube(), None
    if kind == "t":
        need(0)
        return gen.t_graph(), None
    if kind == "caterpillar":
        return gen.caterpillar([int(v) for v in p]), None
    if kind == "random-tree":
        return gen.random_tree(*need(1), rng), None
    if kind == "random":
        n, m = need(2)
        return gen.random_connected(n, m, rng), None
    if kind == "pseudochordal":
        return gen.random_pseudo_chordal(*need(1), rng), None
    if kind == "reduction":
        need(0)
        if args.cnf is None:
            raise UsageError("reduction needs --cnf")
        f = parse_cnf(_read_text(args.cnf))
        if args.girth is None and args.h is None:
            return reduce_basic(f)
        return reduce_girth(f, args.girth or 3, args.h)
    raise UsageError(f"unknown kind {kind!r}")


def cmd_generate(args) -> int:
    g, rmap = _generate_graph(args)
    _write_text(args.output, g.to_edge_list())
    if args.map is not None:
        if rmap is None:
            raise UsageError("--map only applies to reduction instances")
        Path(args.map).write_text(rmap.dumps() + "\n")
    return EXIT_OK


def cmd_verify_reduction(args) -> int:
    f = parse_cnf(_read_text(args.cnf))
    girth_mode = args.girth is not None or args.h is not None
    report = verify_reduction(f, "girth" if girth_mode else "basic", args.girth, args.h)
    sys.stdout.write(_dump(report.to_json()))
    return EXIT_OK if report.passed else EXIT_NO


def _bench_one(job):
    name, g, algo, oracle_limit = job
    start = time.perf_counter()
    res = run_algorithm(g, algo, oracle_limit)
    millis = (time.perf_counter() - start) * 1000
    return name, g.n, g.m, res.algorithm, res.has_pmc, res.stats.nodes, millis


def cmd_bench(args) -> int:
    rng = random.Random(args.seed)
    jobs = []
    for path in args.graphs:
        jobs.append((path, parse_graph(_read_text(path)), args.algo, args.oracle_limit))
    for n in args.sizes:
        m = round(args.density * n)
        for k in range(args.count):
            g = gen.random_connected(n, m, rng)
            jobs.append((f"random-n{n}-m{m}-{k}", g, args.algo, args.oracle_limit))
    if args.threads > 1:
        with ProcessPoolExecutor(max_workers=args.threads) as pool:
            rows = list(pool.map(_bench_one, jobs))
    else:
        rows = [_bench_one(j) for j in jobs]
    out = sys.stdout if args.output in (None, "-") else open(args.output, "w", newline="")
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["instance", "n", "m", "algorithm", "has_pmc", "nodes", "millis"])
        for name, n, m, algo, ok, nodes, millis in rows:
            writer.writerow([name, n, m, algo, str(ok).lower(), nodes, f"{millis:.3f}"])
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pmcut", description="Perfect matching cut solvers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide whether a graph has a perfect matching cut")
    p.add_argument("graph", nargs="?", default="-", help="edge-list file, '-' for stdin")
    p.add_argument("--algo", choices=ALGORITHMS, default="auto")
    p.add_argument("--cross-check", action="store_true", help="run every applicable algorithm and compare")
    p.add_argument("--oracle-limit", type=int, default=24)
    p.add_argument("--threads", type=int, default=1, help="worker processes for the seed-edge loop")
    p.add_argument("--json", action="store_true")
    p.add_argument("--deterministic", action="store_true", help="omit wall time from the JSON")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="classify a cut given as JSON")
    p.add_argument("graph")
    p.add_argument("cut", help='JSON {"X": [...], "Y": [...]} or a solve --json result')
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("generate", help="write an instance in edge-list format")
    p.add_argument("kind", choices=("path", "cycle", "complete", "star", "cube", "t", "caterpillar",
                                    "random-tree", "random", "pseudochordal", "reduction"))
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cnf", help="DIMACS CNF for reduction instances")
    p.add_argument("--girth", type=int)
    p.add_argument("--h", type=int)
    p.add_argument("--map", help="write the reduction map JSON sidecar here")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify-reduction", help="structural report for a reduced instance")
    p.add_argument("cnf")
    p.add_argument("--girth", type=int)
    p.add_argument("--h", type=int)
    p.set_defaults(func=cmd_verify_reduction)

    p = sub.add_parser("bench", help="timing sweep, CSV output")
    p.add_argument("graphs", nargs="*")
    p.add_argument("--algo", choices=ALGORITHMS, default="branch")
    p.add_argument("--sizes", type=_int_list, default=[])
    p.add_argument("--density", type=float, default=2.0, help="edges per vertex")
    p.add_argument("--count", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--oracle-limit", type=int, default=24)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        args.threads = 1
    try:
        return args.func(args)
    except (GraphFormatError, CnfFormatError, NotInClass, InstanceTooLarge, UsageError,
            ValueError, OSError, json.JSONDecodeError) as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, TPresentError):
            err["witness"] = exc.witness.to_json()
        if getattr(exc, "line", None) is not None:
            err["line"] = exc.line
        sys.stderr.write(_dump(err))
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
