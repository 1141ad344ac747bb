"""Corpus sweeps: evaluate every bound and claim on (graph, triple) grids.

One CSV row per (graph, triple). Raw rational bounds are rendered with six
decimal places, but all dominance and soundness checks run on exact
rationals before rendering.
"""

from __future__ import annotations

import csv
import io
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import bounds as bounds_mod
from . import solver as solver_mod
from .graph import generate, max_degree, min_degree
from .params import ParamTriple

CSV_COLUMNS = (
    ["family", "n", "m", "seed", "k", "kp", "kpp", "delta", "Delta", "delta_star",
     "lb_general_raw", "lb_general", "lb_kp0"]
    + [f"prior_{name}" for name in bounds_mod.PRIOR_NAMES]
    + ["ub_construct", "exact_gamma", "status", "lb_tight", "ub_tight", "dominance_ok"]
)


@dataclass(frozen=True)
class RowSpec:
    family: str
    params: tuple[float, ...]
    seed: int
    triple: ParamTriple
    node_budget: int = solver_mod.DEFAULT_NODE_BUDGET
    time_budget: float = solver_mod.DEFAULT_TIME_BUDGET


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, Fraction):
        return f"{value.numerator / value.denominator:.6f}"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def evaluate_row(spec: RowSpec) -> dict:
    g = generate(spec.family, spec.params, spec.seed)
    p = spec.triple
    report = bounds_mod.bound_report(g, p)
    result = solver_mod.solve_exact(g, p, spec.node_budget, spec.time_budget)

    failures = bounds_mod.dominance_failures(report)
    sound = True
    if result.status == solver_mod.OPTIMAL:
        if report.lb_general is not None and result.gamma < report.lb_general:
            sound = False
        if report.lb_kp_zero is not None and result.gamma < report.lb_kp_zero:
            sound = False
        if report.ub_construct is not None and result.gamma > report.ub_construct:
            sound = False
    dominance_ok = sound and not failures

    row = {
        "family": spec.family,
        "n": g.n,
        "m": g.m,
        "seed": spec.seed,
        "k": p.k,
        "kp": p.kp,
        "kpp": p.kpp,
        "delta": min_degree(g),
        "Delta": max_degree(g),
        "delta_star": report.delta_star,
        "lb_general_raw": report.lb_general_raw,
        "lb_general": report.lb_general,
        "lb_kp0": report.lb_kp_zero,
        "ub_construct": report.ub_construct,
        "exact_gamma": result.gamma,
        "status": result.status,
        "lb_tight": (result.gamma == report.lb_general
                     if result.gamma is not None and report.lb_general is not None else None),
        "ub_tight": (result.gamma == report.ub_construct
                     if result.gamma is not None and report.ub_construct is not None else None),
        "dominance_ok": dominance_ok,
    }
    for name in bounds_mod.PRIOR_NAMES:
        row[f"prior_{name}"] = report.prior_raw.get(name)
    return row


def worker_count() -> int:
    """Resolve the DOMSET_THREADS override (unset -> 1, 0 -> auto)."""
    raw = os.environ.get("DOMSET_THREADS")
    if raw is None:
        return 1
    value = int(raw)
    if value == 0:
        return os.cpu_count() or 1
    if value < 0:
        raise ValueError("DOMSET_THREADS must be >= 0")
    return value


def run_sweep(specs: list[RowSpec], workers: int | None = None) -> list[dict]:
    """Evaluate rows, in spec order, optionally across processes."""
    if workers is None:
        workers = worker_count()
    if workers <= 1 or len(specs) <= 1:
        return [evaluate_row(s) for s in specs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(evaluate_row, specs, chunksize=4))


def rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([_fmt(row[c]) for c in CSV_COLUMNS])
    return buf.getvalue()
