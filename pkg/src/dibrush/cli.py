"""Command-line interface.

Subcommands: gen, solve, strategy, simulate, bounds, verify, conjecture.
Results go to stdout as JSON (or a table for `verify`); diagnostics go to
stderr.  Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bounds as bounds_mod
from . import solver, strategies, verify
from .engine import BrushPlan, plan_to_json_str, run, trace_to_json_str
from .errors import BrushingError, MethodNotApplicable, NotAcyclic, TooLarge
from .graphs import (
    Digraph,
    FamilySpec,
    build,
    complete_digraph,
    export_dot,
    parse,
    random_dag,
    random_digraph,
    random_rooted_tree,
    serialize,
    topological_order,
    transitive_tournament,
)


def _default_seed() -> int:
    return int(os.environ.get("DIBRUSH_SEED", "0"))


def _read_graph(path: str) -> Digraph:
    if path == "-":
        return parse(sys.stdin.read())
    with open(path) as fh:
        return parse(fh.read())


def _parse_symbols(text: str) -> frozenset[int]:
    return frozenset(int(x) for x in text.split(",") if x.strip())


# ---------------------------------------------------------------------------
# subcommands


def cmd_gen(args) -> int:
    if args.family in ("tt", "transitive-tournament"):
        g = build(FamilySpec("transitive-tournament", n=args.n))
    elif args.family == "complete":
        g = build(FamilySpec("complete", n=args.n))
    elif args.family == "rotational":
        if not args.symbols:
            raise BrushingError("rotational needs --symbols")
        g = build(FamilySpec("rotational", n=args.n, symbols=_parse_symbols(args.symbols)))
    elif args.family == "tree":
        g = random_rooted_tree(args.n, args.seed)
    elif args.family in ("dag", "random-dag"):
        g = random_dag(args.n, args.p, args.seed)
    elif args.family == "digraph":
        g = random_digraph(args.n, args.p, args.seed)
    else:  # pragma: no cover - argparse choices guard this
        raise BrushingError(f"unknown family {args.family!r}")
    text = serialize(g)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_solve(args) -> int:
    g = _read_graph(args.file)
    if args.bounds_only:
        report = bounds_mod.bound_report(g, subset_cap=args.subset_cap)
        print(bounds_mod.bound_report_to_json_str(report))
        return 0
    try:
        result = solver.brushing_number_exact(
            g,
            topo_only=args.topo_only,
            worker_count=args.jobs,
            cap=args.cap,
        )
    except TooLarge as exc:
        print(f"{exc}; try --bounds-only or raise --cap", file=sys.stderr)
        return 1
    print(json.dumps(result.to_json(), indent=2, sort_keys=True))
    return 0


def _detect_tt(g: Digraph) -> int | None:
    if g.arcs == transitive_tournament(g.n).arcs:
        return g.n
    return None


def _detect_tt_minus_arc(g: Digraph):
    full = set(transitive_tournament(g.n).arcs)
    missing = full - set(g.arcs)
    if len(missing) == 1 and set(g.arcs) <= full:
        return g.n, missing.pop()
    return None


def _plan_for_method(g: Digraph, method: str) -> BrushPlan:
    if method == "tt":
        n = _detect_tt(g)
        if n is None:
            raise MethodNotApplicable("graph is not a transitive tournament")
        return strategies.strategy_transitive(n)
    if method == "tt-minus-arc":
        found = _detect_tt_minus_arc(g)
        if found is None:
            raise MethodNotApplicable(
                "graph is not a transitive tournament minus one arc"
            )
        n, e = found
        return strategies.strategy_tt_minus_arc(n, e)
    if method == "complete":
        if g.arcs != complete_digraph(g.n).arcs:
            raise MethodNotApplicable("graph is not the complete digraph")
        return strategies.strategy_complete(g.n)
    if method == "rotational":
        symbols = solver.rotational_symbols(g)
        if symbols is None:
            raise MethodNotApplicable("graph is not a rotational tournament")
        return strategies.strategy_rotational(g.n, symbols)
    if method == "tree":
        try:
            return strategies.strategy_rooted_tree(g)
        except BrushingError as exc:
            raise MethodNotApplicable(str(exc)) from exc
    if method == "dag-recursive":
        try:
            return strategies.strategy_dag_recursive(g)
        except NotAcyclic as exc:
            raise MethodNotApplicable(str(exc)) from exc
    if method == "path-decomp":
        try:
            decomp = strategies.perfect_decomposition(g)
        except NotAcyclic as exc:
            raise MethodNotApplicable(str(exc)) from exc
        return strategies.plan_from_paths(g, decomp)
    # auto: try families in order, then generic DAG constructions
    for candidate in ("tt", "complete", "rotational", "tree", "tt-minus-arc"):
        try:
            return _plan_for_method(g, candidate)
        except MethodNotApplicable:
            continue
    if topological_order(g) is not None:
        return _plan_for_method(g, "dag-recursive")
    raise MethodNotApplicable("no strategy applies; try the exact solver")


def cmd_strategy(args) -> int:
    g = _read_graph(args.file)
    plan = _plan_for_method(g, args.method)
    trace = run(g, plan)  # every emitted plan must validate
    if not trace.is_complete(g):
        raise BrushingError("strategy produced an incomplete cleaning")
    print(plan_to_json_str(plan))
    return 0


def cmd_simulate(args) -> int:
    g = _read_graph(args.file)
    with open(args.plan) as fh:
        plan = BrushPlan.from_json(json.load(fh))
    try:
        trace = run(g, plan)
    except BrushingError as exc:
        print(f"simulation failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.trace:
        with open(args.trace, "w") as fh:
            fh.write(trace_to_json_str(trace))
    if args.dot_dir:
        os.makedirs(args.dot_dir, exist_ok=True)
        for step in trace.steps:
            path = os.path.join(args.dot_dir, f"step_{step.t:03d}.dot")
            with open(path, "w") as fh:
                fh.write(export_dot(g, step))
    if args.fig_dir:
        from . import report

        report.render_trace(g, trace, args.fig_dir)
    if not (args.trace or args.dot_dir or args.fig_dir):
        print(trace_to_json_str(trace))
    return 0


def cmd_bounds(args) -> int:
    g = _read_graph(args.file)
    report = bounds_mod.bound_report(g, subset_cap=args.subset_cap)
    print(bounds_mod.bound_report_to_json_str(report))
    return 0


def cmd_verify(args) -> int:
    if args.max_n > solver.HARD_CAP:
        raise BrushingError(
            f"--max-n {args.max_n} exceeds the solver hard cap {solver.HARD_CAP}"
        )
    rows = verify.run_suite(args.suite, args.max_n)
    width = max(len(r["name"]) for r in rows)
    for r in rows:
        mark = "ok  " if r["ok"] else "FAIL"
        print(f"{mark} {r['name']:<{width}}  expected={r['expected']}  computed={r['computed']}")
    failed = sum(1 for r in rows if not r["ok"])
    print(f"{len(rows) - failed}/{len(rows)} checks passed")
    if args.report_dir:
        from . import report

        csv_path, fig_path = report.write_suite_report(rows, args.report_dir)
        print(f"report written to {csv_path} and {fig_path}", file=sys.stderr)
    return 1 if failed else 0


def cmd_conjecture(args) -> int:
    rep = solver.conjecture_explorer(args.n, cap=args.cap)
    data = rep.to_json()
    if not args.full:
        del data["tournaments"]
    print(json.dumps(data, indent=2, sort_keys=True))
    if not rep.holds:
        print(
            f"CONJECTURE VIOLATED: max value {rep.max_value} exceeds bound {rep.bound}",
            file=sys.stderr,
        )
        return 1
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dibrush", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a family instance as an edge list")
    g.add_argument(
        "--family",
        required=True,
        choices=["tt", "complete", "rotational", "tree", "dag", "digraph"],
    )
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--symbols", help="comma-separated, e.g. 1,2,3")
    g.add_argument("--p", type=float, default=0.5)
    g.add_argument("--seed", type=int, default=_default_seed())
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="exact brushing number (or bounds only)")
    s.add_argument("file")
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", default=True)
    mode.add_argument("--bounds-only", action="store_true")
    s.add_argument("--topo-only", action="store_true")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--cap", type=int, default=solver.DEFAULT_CAP)
    s.add_argument("--subset-cap", type=int, default=bounds_mod.DEFAULT_SUBSET_CAP)
    s.add_argument("--json", action="store_true", help="output JSON (the default)")
    s.set_defaults(func=cmd_solve)

    st = sub.add_parser("strategy", help="emit a constructive plan as JSON")
    st.add_argument("file")
    st.add_argument(
        "--method",
        default="auto",
        choices=[
            "auto",
            "tt",
            "tt-minus-arc",
            "complete",
            "rotational",
            "tree",
            "dag-recursive",
            "path-decomp",
        ],
    )
    st.set_defaults(func=cmd_strategy)

    sim = sub.add_parser("simulate", help="run a plan and write trace artifacts")
    sim.add_argument("file")
    sim.add_argument("--plan", required=True)
    sim.add_argument("--trace")
    sim.add_argument("--dot-dir")
    sim.add_argument("--fig-dir")
    sim.set_defaults(func=cmd_simulate)

    b = sub.add_parser("bounds", help="lower/upper bound report as JSON")
    b.add_argument("file")
    b.add_argument("--subset-cap", type=int, default=bounds_mod.DEFAULT_SUBSET_CAP)
    b.set_defaults(func=cmd_bounds)

    v = sub.add_parser("verify", help="run a self-check suite")
    v.add_argument("--suite", required=True, choices=sorted(verify.SUITES))
    v.add_argument("--max-n", type=int, default=7)
    v.add_argument("--report-dir", help="also write rows.csv and summary.png here")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("conjecture", help="regular-tournament bound explorer")
    c.add_argument("--n", type=int, default=5)
    c.add_argument("--cap", type=int, default=5)
    c.add_argument("--full", action="store_true", help="include every tournament")
    c.set_defaults(func=cmd_conjecture)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BrushingError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
