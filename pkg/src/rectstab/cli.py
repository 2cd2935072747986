"""Command-line surface: solve, verify, gen, reduce, extract, bench.

Exit codes: 0 success, 1 negative outcome (no witness, infeasible, invalid
solution, extraction not applicable), 2 usage or parse errors. stdout is
machine-readable JSON or CSV; diagnostics go to stderr. File emissions are
byte-deterministic given inputs and seeds; stdout run reports additionally
carry wall-clock time.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import approx, exact, formats, generators, reduction
from .core import Instance, Solution, UnknownLineError, rect_stabbed_by, verify


def _sidecar(out: str, tag: str) -> str:
    p = Path(out)
    if p.suffix == ".json":
        return str(p.with_suffix(f".{tag}.json"))
    return f"{out}.{tag}.json"


def _report(**fields) -> None:
    print(json.dumps(fields, sort_keys=True))


def _instance_stats(inst: Instance) -> dict:
    return {"rects": len(inst.rects), "hlines": len(inst.hlines), "vlines": len(inst.vlines)}


def _is_infeasible(inst: Instance) -> bool:
    return any(not rect_stabbed_by(r, inst.hlines, inst.vlines) for r in inst.rects)


def cmd_solve(args: argparse.Namespace) -> int:
    try:
        inst = formats.load_instance(args.instance)
    except (formats.FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    stats = approx.SearchStats()
    start = time.perf_counter()
    outcome = "no-witness"
    size: Optional[int] = None
    budget: Optional[int] = None
    sol: Optional[Solution] = None
    if _is_infeasible(inst):
        outcome = "infeasible"
    elif args.exact:
        try:
            sol = exact.opt_exact(inst, exact.SearchBudget(args.max_size, args.node_limit))
        except exact.NodeLimitExceeded as exc:
            print(f"error: {exc}", file=sys.stderr)
            outcome = "error"
        if sol is not None:
            outcome, size, budget = "solved", len(sol), args.max_size
    elif args.min:
        found = approx.solve_min(inst, args.kmax, stats)
        if found is not None:
            budget, sol = found
            outcome, size = "solved", len(sol)
    else:
        sol = approx.solve_with_budget(inst, args.k, stats)
        if sol is not None:
            outcome, size, budget = "solved", len(sol), args.k
    wall_ms = (time.perf_counter() - start) * 1000.0
    if sol is not None and args.out:
        formats.dump_solution(sol, args.out)
    _report(
        command="solve",
        mode="exact" if args.exact else ("approx-min" if args.min else "approx"),
        args={
            "instance": args.instance,
            "k": args.k,
            "kmax": args.kmax,
            "max_size": args.max_size,
            "node_limit": args.node_limit,
            "out": args.out,
        },
        instance=_instance_stats(inst),
        outcome=outcome,
        size=size,
        budget=budget,
        wall_ms=round(wall_ms, 3),
        counters={
            "splits": stats.splits,
            "vertical_guesses": stats.vertical_guesses,
            "horizontal_guesses": stats.horizontal_guesses,
            "twosat_calls": stats.twosat_calls,
        },
    )
    return 0 if outcome == "solved" else 1


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        inst = formats.load_instance(args.instance)
        sol = formats.load_solution(args.solution)
    except (formats.FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        unstabbed = verify(inst, sol)
    except UnknownLineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if not unstabbed:
        return 0
    for r in unstabbed:
        print(f"unstabbed: [{r.x1},{r.x2}]x[{r.y1},{r.y2}]", file=sys.stderr)
    return 1


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        if args.generator == "planted":
            out = args.out or f"planted_k{args.k}_n{args.n}_s{args.seed}.json"
            inst, witness = generators.gen_planted(args.k, args.n, args.coord_range, args.seed)
            formats.dump_instance(inst, out)
            formats.dump_solution(witness.as_solution(), _sidecar(out, "witness"))
        elif args.generator == "uniform":
            out = args.out or f"uniform_n{args.n}_m{args.m_lines}_s{args.seed}.json"
            formats.dump_instance(
                generators.gen_uniform(args.n, args.m_lines, args.coord_range, args.seed), out
            )
        elif args.generator == "mcgraph":
            out = args.out or f"mcgraph_k{args.k}_r{args.r}_s{args.seed}.json"
            num, den = args.prob
            graph, clique = generators.gen_mcgraph(args.k, args.r, num, den, args.seed, args.plant)
            formats.dump_graph(graph, out)
            if clique is not None:
                Path(_sidecar(out, "clique")).write_text(
                    json.dumps(formats.clique_json(clique), sort_keys=True, indent=2) + "\n"
                )
        else:  # discretize
            out = args.out or f"{Path(args.points).stem}_stab.json"
            pts = formats.load_points_csv(args.points)
            formats.dump_instance(generators.discretization_to_stabbing(pts), out)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def cmd_reduce(args: argparse.Namespace) -> int:
    try:
        graph = formats.load_graph(args.graph)
    except (formats.FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if graph.has_intra_part_edges():
        print("warning: intra-part edges present; the reduction ignores them", file=sys.stderr)
    try:
        red = reduction.build(graph)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out = args.out or f"{Path(args.graph).stem}_instance.json"
    inst = red.inst
    if args.nondegenerate:
        inst, _ = reduction.make_nondegenerate(inst)
    formats.dump_instance(inst, out)
    formats.dump_strip_table(red, _sidecar(out, "strips"), doubled=args.nondegenerate)
    return 0


def _parse_eps(text: str) -> tuple[int, int]:
    num, _, den = text.partition("/")
    return int(num), int(den or "1")


def cmd_extract(args: argparse.Namespace) -> int:
    strips_path = args.strips or _sidecar(args.instance, "strips")
    try:
        red, doubled = formats.load_reduced(args.instance, strips_path)
        sol = formats.load_solution(args.solution)
        eps_num, eps_den = _parse_eps(args.eps)
    except (formats.FormatError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if doubled:
        sol = reduction.map_solution_back(sol, lambda pos: pos // 2)
    try:
        clique = reduction.reverse(red, sol, eps_num, eps_den)
    except reduction.NotApplicable as exc:
        print(f"not applicable: {exc.reason}", file=sys.stderr)
        return 1
    except reduction.MalformedReduction as exc:
        print(f"malformed reduction inputs: {exc}", file=sys.stderr)
        return 2
    print(json.dumps(formats.clique_json(clique), sort_keys=True))
    if args.out:
        formats.dump_clique(clique, args.out)
    return 0


_BENCH_FIELDS = [
    "instance",
    "solver",
    "outcome",
    "k",
    "size",
    "ratio",
    "rects",
    "hlines",
    "vlines",
    "splits",
    "vertical_guesses",
    "horizontal_guesses",
    "twosat_calls",
]


def _bench_one(job: tuple[str, bool, bool, int, int]) -> list[dict]:
    path, run_approx, run_exact, kmax, max_size = job
    name = Path(path).name
    try:
        inst = formats.load_instance(path)
    except (formats.FormatError, OSError):
        return [{"instance": name, "solver": s, "outcome": "error"}
                for s in (["approx"] if run_approx else []) + (["exact"] if run_exact else [])]
    base = {"instance": name, **_instance_stats(inst)}
    rows = []
    exact_size: Optional[int] = None
    if run_exact:
        row = dict(base, solver="exact")
        try:
            sol = exact.opt_exact(inst, exact.SearchBudget(max_size))
            if sol is None:
                row["outcome"] = "no-witness"
            else:
                exact_size = len(sol)
                row.update(outcome="solved", size=exact_size)
        except Exception:
            row["outcome"] = "error"
        rows.append(row)
    if run_approx:
        row = dict(base, solver="approx")
        stats = approx.SearchStats()
        try:
            found = approx.solve_min(inst, kmax, stats)
            if found is None:
                row["outcome"] = "infeasible" if _is_infeasible(inst) else "no-witness"
            else:
                k, sol = found
                row.update(outcome="solved", k=k, size=len(sol))
                if exact_size:
                    row["ratio"] = str(Fraction(len(sol), exact_size))
        except Exception:
            row["outcome"] = "error"
        row.update(
            splits=stats.splits,
            vertical_guesses=stats.vertical_guesses,
            horizontal_guesses=stats.horizontal_guesses,
            twosat_calls=stats.twosat_calls,
        )
        rows.append(row)
    return rows


def cmd_bench(args: argparse.Namespace) -> int:
    fixture_dir = Path(args.fixtures)
    if not fixture_dir.is_dir():
        print(f"error: {fixture_dir} is not a directory", file=sys.stderr)
        return 2
    run_approx = args.approx or not args.exact
    run_exact = args.exact
    paths = sorted(
        str(p)
        for p in fixture_dir.glob("*.json")
        if not any(p.name.endswith(f".{tag}.json") for tag in ("witness", "clique", "strips"))
    )
    jobs = [(p, run_approx, run_exact, args.kmax, args.max_size) for p in paths]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_bench_one, jobs))
    else:
        results = [_bench_one(j) for j in jobs]
    rows = sorted(
        (row for batch in results for row in batch), key=lambda r: (r["instance"], r["solver"])
    )

    lines_out = [",".join(_BENCH_FIELDS)]
    for row in rows:
        lines_out.append(",".join(str(row.get(f, "")) for f in _BENCH_FIELDS))
    Path(args.out).write_text("\n".join(lines_out) + "\n")

    # sizes-vs-budget summary over solved approx rows
    by_k: dict[int, list[dict]] = {}
    for row in rows:
        if row["solver"] == "approx" and row.get("outcome") == "solved":
            by_k.setdefault(row["k"], []).append(row)
    summary = ["k,count,max_size,size_bound,max_ratio"]
    for k in sorted(by_k):
        group = by_k[k]
        ratios = [Fraction(r["ratio"]) for r in group if "ratio" in r]
        summary.append(
            ",".join(
                [
                    str(k),
                    str(len(group)),
                    str(max(r["size"] for r in group)),
                    str((7 * k) // 4),
                    str(max(ratios)) if ratios else "",
                ]
            )
        )
    Path(_summary_path(args.out)).write_text("\n".join(summary) + "\n")
    print(json.dumps({"command": "bench", "instances": len(paths), "rows": len(rows)}))
    return 0


def _summary_path(out: str) -> str:
    p = Path(out)
    if p.suffix == ".csv":
        return str(p.with_suffix(".summary.csv"))
    return f"{out}.summary.csv"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rectstab", description="Rectangle stabbing toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance")
    p.add_argument("instance")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--approx", action="store_true")
    mode.add_argument("--exact", action="store_true")
    p.add_argument("-k", type=int, help="budget for --approx")
    p.add_argument("--min", action="store_true", help="smallest budget up to --kmax")
    p.add_argument("--kmax", type=int)
    p.add_argument("--max-size", type=int, help="size cap for --exact")
    p.add_argument("--node-limit", type=int)
    p.add_argument("--out", help="write the solution JSON here")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a solution against an instance")
    p.add_argument("instance")
    p.add_argument("solution")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate instances and graphs")
    gsub = p.add_subparsers(dest="generator", required=True)
    g = gsub.add_parser("planted")
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--coord-range", type=int, default=50)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--out")
    g = gsub.add_parser("uniform")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m-lines", type=int, required=True)
    g.add_argument("--coord-range", type=int, default=50)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--out")
    g = gsub.add_parser("mcgraph")
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--r", type=int, required=True)
    g.add_argument("--prob", type=_parse_eps, default=(1, 2), help="extra edge probability NUM/DEN")
    g.add_argument("--plant", action="store_true")
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--out")
    g = gsub.add_parser("discretize")
    g.add_argument("points", help="colored points CSV (x,y,color)")
    g.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("reduce", help="build the clique-hardness instance of a graph")
    p.add_argument("graph")
    p.add_argument("--out")
    p.add_argument("--nondegenerate", action="store_true", help="apply the doubling transform")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("extract", help="read a clique back out of a reduced-instance solution")
    p.add_argument("instance")
    p.add_argument("solution")
    p.add_argument("--eps", required=True, help="rational NUM/DEN")
    p.add_argument("--strips", help="strip-table sidecar (default: derived from instance path)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("bench", help="run solvers across a fixture directory")
    p.add_argument("fixtures")
    p.add_argument("--out", default="bench.csv")
    p.add_argument("--approx", action="store_true")
    p.add_argument("--exact", action="store_true")
    p.add_argument("--kmax", type=int, default=8)
    p.add_argument("--max-size", type=int, default=8)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "solve":
        if args.approx and not args.min and args.k is None:
            parser.error("--approx needs -k, or --min with --kmax")
        if args.approx and args.min and args.kmax is None:
            parser.error("--min needs --kmax")
        if args.exact and args.max_size is None:
            parser.error("--exact needs --max-size")
        for name in ("k", "kmax", "max_size", "node_limit"):
            value = getattr(args, name)
            if value is not None and value < 0:
                parser.error(f"--{name.replace('_', '-')} must be nonnegative")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
