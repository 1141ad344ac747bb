"""Command-line surface: gen, verify, bound, construct, solve, sweep.

Exit codes: 0 all checks pass, 1 domination/claim violation, 2 usage error,
3 budget exceeded somewhere (results still written).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds as bounds_mod
from . import solver as solver_mod
from . import sweep as sweep_mod
from .construction import InapplicableError, construct_best
from .graph import FAMILIES, GraphError, generate, parse_edgelist, write_edgelist
from .params import ParamTriple, is_dominating, set_mask, violation_report

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

SWEEP_FAMILIES = ("path", "cycle", "complete", "star", "random_gnp",
                  "random_regular", "random_tree")


def _load_graph(path: str):
    try:
        return parse_edgelist(Path(path).read_text())
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc}") from exc


def _parse_triple(text: str) -> ParamTriple:
    return ParamTriple.parse(text)


def _parse_vertex_set(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(part) for part in text.split(",")]


def cmd_gen(args) -> int:
    g = generate(args.family, args.params, args.seed)
    text = write_edgelist(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    p = _parse_triple(args.triple)
    members = _parse_vertex_set(args.set)
    mask = set_mask(g, members)
    if is_dominating(g, mask, p):
        print(json.dumps({"dominating": True, "violations": []}))
        return EXIT_OK
    violations = [
        {"vertex": v.vertex, "condition": v.condition, "have": v.have, "need": v.need}
        for v in violation_report(g, mask, p)
    ]
    print(json.dumps({"dominating": False, "violations": violations}))
    return EXIT_VIOLATION


def cmd_bound(args) -> int:
    g = _load_graph(args.graph)
    p = _parse_triple(args.triple)
    report = bounds_mod.bound_report(g, p)
    print(json.dumps(report.to_json_dict()))
    return EXIT_OK


def cmd_construct(args) -> int:
    g = _load_graph(args.graph)
    p = _parse_triple(args.triple)
    best = construct_best(g, p)
    if best is None:
        print(json.dumps({"part": None, "size": None, "valid": False}), file=sys.stdout)
        print("construction inapplicable for this graph and triple", file=sys.stderr)
        return EXIT_VIOLATION
    part, s = best
    print(" ".join(str(v) for v in sorted(s)))
    print(json.dumps({"part": part, "size": len(s), "valid": bool(is_dominating(g, s, p))}))
    return EXIT_OK


def cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    p = _parse_triple(args.triple)
    result = solver_mod.solve_exact(
        g, p,
        node_budget=args.budget_nodes,
        time_budget=args.budget_secs,
        use_bound_pruning=not args.no_prune,
    )
    print(json.dumps(result.to_json_dict()))
    return EXIT_BUDGET if result.status == solver_mod.BUDGET_EXCEEDED else EXIT_OK


def cmd_sweep(args) -> int:
    triples = [_parse_triple(t) for t in args.triple]
    specs: list[sweep_mod.RowSpec] = []
    for family in args.family:
        if family not in SWEEP_FAMILIES:
            raise GraphError(f"sweep supports families {SWEEP_FAMILIES}, got {family!r}")
        for n in args.n:
            if family == "random_gnp":
                params: tuple[float, ...] = (n, args.gnp_p)
            elif family == "random_regular":
                params = (n, args.degree)
            else:
                params = (n,)
            seeds = args.seed if family.startswith("random") else [args.seed[0]]
            for seed in seeds:
                for triple in triples:
                    specs.append(sweep_mod.RowSpec(
                        family=family, params=params, seed=seed, triple=triple,
                        node_budget=args.budget_nodes, time_budget=args.budget_secs,
                    ))
    rows = sweep_mod.run_sweep(specs)
    text = sweep_mod.rows_to_csv(rows)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if any(row["status"] == solver_mod.BUDGET_EXCEEDED for row in rows):
        return EXIT_BUDGET
    if any(not row["dominance_ok"] for row in rows):
        return EXIT_VIOLATION
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domset",
        description="Compute, bound, construct, and verify generalized dominating sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a graph and write its edge list")
    gen.add_argument("family", choices=FAMILIES)
    gen.add_argument("params", nargs="*", type=float, help="size parameters for the family")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", default=None)
    gen.set_defaults(func=cmd_gen)

    verify = sub.add_parser("verify", help="check a vertex set against the predicate")
    verify.add_argument("--graph", required=True)
    verify.add_argument("--set", required=True, help="comma-separated vertices, '' for empty")
    verify.add_argument("--triple", required=True, help="k,k',k''")
    verify.set_defaults(func=cmd_verify)

    bound = sub.add_parser("bound", help="report every applicable bound as JSON")
    bound.add_argument("--graph", required=True)
    bound.add_argument("--triple", required=True)
    bound.set_defaults(func=cmd_bound)

    construct = sub.add_parser("construct", help="build the upper-bound witness set")
    construct.add_argument("--graph", required=True)
    construct.add_argument("--triple", required=True)
    construct.set_defaults(func=cmd_construct)

    solve = sub.add_parser("solve", help="exact domination number via branch and bound")
    solve.add_argument("--graph", required=True)
    solve.add_argument("--triple", required=True)
    solve.add_argument("--budget-nodes", type=int, default=solver_mod.DEFAULT_NODE_BUDGET)
    solve.add_argument("--budget-secs", type=float, default=solver_mod.DEFAULT_TIME_BUDGET)
    solve.add_argument("--no-prune", action="store_true",
                       help="disable the closed-form lower-bound floor")
    solve.set_defaults(func=cmd_solve)

    sweep = sub.add_parser("sweep", help="evaluate all claims over a corpus grid")
    sweep.add_argument("--family", action="append", required=True, choices=SWEEP_FAMILIES)
    sweep.add_argument("--n", action="append", type=int, required=True)
    sweep.add_argument("--seed", action="append", type=int, default=None)
    sweep.add_argument("--triple", action="append", required=True)
    sweep.add_argument("--degree", type=int, default=3, help="degree for random_regular")
    sweep.add_argument("--gnp-p", type=float, default=0.5, help="edge probability for random_gnp")
    sweep.add_argument("--budget-nodes", type=int, default=solver_mod.DEFAULT_NODE_BUDGET)
    sweep.add_argument("--budget-secs", type=float, default=solver_mod.DEFAULT_TIME_BUDGET)
    sweep.add_argument("--out", default=None)
    sweep.set_defaults(func=cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seed", None) is None and args.command == "sweep":
        args.seed = [0]
    try:
        return args.func(args)
    except (GraphError, InapplicableError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
