"""Exact (k, kp, kpp)-domination numbers.

``solve_exact`` runs a branch-and-bound over in/out/undecided vertex states
with feasibility propagation and an optional closed-form lower-bound floor.
``brute_force_oracle`` enumerates all subsets in increasing cardinality and
shares no search code with the solver; it exists to test the solver.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from .bounds import lower_bound_general, lower_bound_kp_zero
from .construction import construct_best
from .graph import Graph, min_degree
from .params import ParamTriple, is_dominating, mask_to_sorted

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
BUDGET_EXCEEDED = "budget_exceeded"

DEFAULT_NODE_BUDGET = 10**8
DEFAULT_TIME_BUDGET = 60.0

ORACLE_MAX_N = 20


@dataclass(frozen=True)
class SolveResult:
    status: str
    gamma: int | None
    witness: frozenset[int] | None
    nodes_explored: int
    elapsed: float

    def to_json_dict(self) -> dict:
        return {
            "status": self.status,
            "gamma": self.gamma,
            "witness": sorted(self.witness) if self.witness is not None else None,
            "nodes": self.nodes_explored,
            "elapsed_ms": int(self.elapsed * 1000),
        }


class _Budget(Exception):
    pass


def solve_exact(
    g: Graph,
    p: ParamTriple,
    node_budget: int = DEFAULT_NODE_BUDGET,
    time_budget: float = DEFAULT_TIME_BUDGET,
    use_bound_pruning: bool = True,
) -> SolveResult:
    """Exact optimum or proof of infeasibility, within an explicit budget.

    Exceeding the budget yields status ``budget_exceeded`` with no gamma;
    the solver never returns an unproven value.
    """
    start = time.monotonic()
    n = g.n
    full = g.full_mask
    adj = g.adj
    k, kp, kpp = p.k, p.kp, p.kpp

    best_size = n + 1
    best_mask: int | None = None

    # Seed the incumbent: S = V when it dominates, then the constructed set.
    if n >= 1 and min_degree(g) >= k:
        best_size, best_mask = n, full
    built = construct_best(g, p)
    if built is not None:
        _, s = built
        if len(s) < best_size:
            best_size = len(s)
            best_mask = sum(1 << v for v in s)

    floor = 0
    if use_bound_pruning and n >= 1:
        for lb in (lower_bound_general(g, p), lower_bound_kp_zero(g, p)):
            if lb is not None and lb > floor:
                floor = lb

    nodes = 0
    deadline = start + time_budget

    def search(in_mask: int, out_mask: int) -> None:
        nonlocal nodes, best_size, best_mask
        nodes += 1
        if nodes > node_budget or (nodes % 1024 == 0 and time.monotonic() > deadline):
            raise _Budget
        if best_size <= floor:
            return
        und = full & ~in_mask & ~out_mask
        size_in = in_mask.bit_count()
        if size_in >= best_size:
            return
        # Feasibility: each committed vertex must still be able to meet its
        # quotas using every undecided vertex; track the largest shortfall of
        # in-neighbors as an admissible addition to the incumbent bound.
        max_need = 0
        branch_hint = -1
        for v in range(n):
            a = adj[v]
            if in_mask >> v & 1:
                have = (a & in_mask).bit_count()
                if have + (a & und).bit_count() < k:
                    return
                if k - have > max_need:
                    max_need = k - have
                    branch_hint = v
            elif out_mask >> v & 1:
                have = (a & in_mask).bit_count()
                if have + (a & und).bit_count() < kp:
                    return
                if (a & (out_mask | und)).bit_count() < kpp:
                    return
                if kp - have > max_need:
                    max_need = kp - have
                    branch_hint = v
        if size_in + max_need >= best_size:
            return
        if und == 0:
            # All quotas verified exactly above.
            best_size = size_in
            best_mask = in_mask
            return
        # Sending every undecided vertex out is the cheapest completion of
        # this branch; if it dominates, the subtree is settled.
        if is_dominating(g, in_mask, p):
            if size_in < best_size:
                best_size = size_in
                best_mask = in_mask
            return
        if branch_hint >= 0 and adj[branch_hint] & und:
            v = (adj[branch_hint] & und & -(adj[branch_hint] & und)).bit_length() - 1
        else:
            v = (und & -und).bit_length() - 1
        bit = 1 << v
        search(in_mask, out_mask | bit)
        search(in_mask | bit, out_mask)

    try:
        search(0, 0)
    except _Budget:
        return SolveResult(BUDGET_EXCEEDED, None, None, nodes, time.monotonic() - start)

    elapsed = time.monotonic() - start
    if best_mask is None:
        return SolveResult(INFEASIBLE, None, None, nodes, elapsed)
    witness = frozenset(mask_to_sorted(best_mask))
    assert is_dominating(g, best_mask, p)
    return SolveResult(OPTIMAL, best_size, witness, nodes, elapsed)


def brute_force_oracle(g: Graph, p: ParamTriple) -> SolveResult:
    """Enumerate subsets by increasing cardinality; first hit is optimal.

    Intentionally naive, single-threaded, and independent of solve_exact.
    Guarded at n <= 20.
    """
    if g.n > ORACLE_MAX_N:
        raise ValueError(f"oracle guard: n={g.n} exceeds {ORACLE_MAX_N}")
    start = time.monotonic()
    n = g.n
    full = (1 << n) - 1
    adj = [0] * n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    k, kp, kpp = p.k, p.kp, p.kpp
    checked = 0
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            checked += 1
            s = 0
            for v in combo:
                s |= 1 << v
            comp = full & ~s
            ok = True
            for v in range(n):
                a = adj[v]
                if s >> v & 1:
                    if (a & s).bit_count() < k:
                        ok = False
                        break
                else:
                    if (a & s).bit_count() < kp or (a & comp).bit_count() < kpp:
                        ok = False
                        break
            if ok:
                return SolveResult(OPTIMAL, size, frozenset(combo), checked,
                                   time.monotonic() - start)
    return SolveResult(INFEASIBLE, None, None, checked, time.monotonic() - start)
