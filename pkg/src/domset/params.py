"""Parameter triples, the generalized domination predicate, named variants.

A set S is (k, kp, kpp)-dominating when every member of S has at least k
neighbors inside S and every vertex outside S has at least kp neighbors in
S and at least kpp neighbors outside S.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .graph import Graph, GraphError, min_degree


@dataclass(frozen=True)
class ParamTriple:
    k: int
    kp: int
    kpp: int

    def __post_init__(self) -> None:
        if self.k < 0 or self.kp < 0 or self.kpp < 0:
            raise ValueError(f"parameters must be nonnegative, got {self}")

    def __str__(self) -> str:
        return f"{self.k},{self.kp},{self.kpp}"

    @classmethod
    def parse(cls, text: str) -> "ParamTriple":
        parts = text.split(",")
        if len(parts) != 3:
            raise ValueError(f"expected 'k,kp,kpp', got {text!r}")
        return cls(*(int(p) for p in parts))


FIXED_NAMES = {
    "restrained": ParamTriple(0, 1, 1),
    "total_restrained": ParamTriple(1, 1, 1),
    "restrained_double": ParamTriple(1, 2, 1),
}

PARAMETRIC_NAMES = ("k_tuple_total_restrained", "k_tuple_total", "k_tuple", "k_domination")


def named(name: str, k: int | None = None) -> ParamTriple:
    """Map a variant name to its parameter triple."""
    if name in FIXED_NAMES:
        if k is not None:
            raise ValueError(f"{name!r} does not take a k argument")
        return FIXED_NAMES[name]
    if name in PARAMETRIC_NAMES:
        if k is None or k < 1:
            raise ValueError(f"{name!r} requires an integer k >= 1")
        if name == "k_tuple_total_restrained":
            return ParamTriple(k, k, k)
        if name == "k_tuple_total":
            return ParamTriple(k, k, 0)
        if name == "k_tuple":
            return ParamTriple(k - 1, k, 0)
        return ParamTriple(0, k, 0)
    raise ValueError(f"unknown variant name {name!r}")


def set_mask(g: Graph, members: Iterable[int]) -> int:
    """Pack a vertex collection into a bitmask, validating membership in V."""
    mask = 0
    for v in members:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
        mask |= 1 << v
    return mask


def mask_to_sorted(mask: int) -> list[int]:
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return out


def is_dominating(g: Graph, members: Iterable[int] | int, p: ParamTriple) -> bool:
    """Check the (k, kp, kpp)-domination predicate.

    ``members`` may be a vertex iterable or a precomputed bitmask. The empty
    set is handled literally: it dominates iff kp == 0 and every vertex has
    at least kpp neighbors.
    """
    s = members if isinstance(members, int) else set_mask(g, members)
    comp = g.full_mask & ~s
    for v in range(g.n):
        a = g.adj[v]
        if s >> v & 1:
            if (a & s).bit_count() < p.k:
                return False
        else:
            if (a & s).bit_count() < p.kp or (a & comp).bit_count() < p.kpp:
                return False
    return True


class Violation(NamedTuple):
    vertex: int
    condition: str
    have: int
    need: int


COND_K = "k in-S neighbors"
COND_KP = "k' in-S neighbors"
COND_KPP = "k'' out-S neighbors"


def violation_report(g: Graph, members: Iterable[int] | int, p: ParamTriple) -> list[Violation]:
    """One entry per violated constraint; empty iff the set dominates."""
    s = members if isinstance(members, int) else set_mask(g, members)
    comp = g.full_mask & ~s
    out: list[Violation] = []
    for v in range(g.n):
        a = g.adj[v]
        if s >> v & 1:
            have = (a & s).bit_count()
            if have < p.k:
                out.append(Violation(v, COND_K, have, p.k))
        else:
            have = (a & s).bit_count()
            if have < p.kp:
                out.append(Violation(v, COND_KP, have, p.kp))
            have_out = (a & comp).bit_count()
            if have_out < p.kpp:
                out.append(Violation(v, COND_KPP, have_out, p.kpp))
    return out


def trivial_feasible(g: Graph, p: ParamTriple) -> bool:
    """Sufficient feasibility check: S = V dominates iff the minimum degree
    reaches k. Not necessary; the exact solver decides the general case."""
    return min_degree(g) >= p.k
