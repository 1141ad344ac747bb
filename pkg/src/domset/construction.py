"""Constructive upper bounds for (k, kp, 1)-domination.

Both constructions delete most of the closed neighborhood of a minimum
degree vertex u, keeping a few neighbors inside S so that the deleted
vertices stay dominated. The witness set is returned, not just its size.
"""

from __future__ import annotations

from .graph import Graph, min_degree
from .params import ParamTriple, is_dominating, mask_to_sorted


class InapplicableError(ValueError):
    """The construction's preconditions do not hold for this instance."""


def _min_degree_vertex(g: Graph) -> int:
    d = min_degree(g)
    return g.degree.index(d)


def _carve(g: Graph, p: ParamTriple, keep_count: int, expected_size: int) -> set[int]:
    u = _min_degree_vertex(g)
    neighbors = mask_to_sorted(g.adj[u])
    kept = neighbors[:keep_count]
    removed_mask = g.closed_neighborhood_mask(u)
    for v in kept:
        removed_mask &= ~(1 << v)
    s_mask = g.full_mask & ~removed_mask
    # The removed vertices must induce a subgraph without isolated vertices:
    # u is adjacent to every other removed vertex, so this can only fail if
    # the removed set degenerates to {u}.
    for v in mask_to_sorted(removed_mask):
        if g.adj[v] & removed_mask == 0:
            raise AssertionError(f"removed vertex {v} is isolated among the removed set")
    size = s_mask.bit_count()
    if size != expected_size:
        raise AssertionError(f"constructed size {size} != expected {expected_size}")
    if not is_dominating(g, s_mask, p):
        raise AssertionError("constructed set fails the domination predicate")
    return set(mask_to_sorted(s_mask))


def construct_part1(g: Graph, p: ParamTriple) -> set[int]:
    """Witness of size n - delta + kp - 1; needs kp >= k+1 and delta >= kp+1."""
    if p.kpp != 1:
        raise InapplicableError("construction requires kpp = 1")
    if p.kp < p.k + 1:
        raise InapplicableError(f"part 1 requires kp >= k+1, got k={p.k}, kp={p.kp}")
    delta = min_degree(g)
    if delta < p.kp + 1:
        raise InapplicableError(f"part 1 requires minimum degree >= {p.kp + 1}, got {delta}")
    return _carve(g, p, p.kp, g.n - delta + p.kp - 1)


def construct_part2(g: Graph, p: ParamTriple) -> set[int]:
    """Witness of size n - delta + k; needs k >= kp and delta >= k+2."""
    if p.kpp != 1:
        raise InapplicableError("construction requires kpp = 1")
    if p.k < p.kp:
        raise InapplicableError(f"part 2 requires k >= kp, got k={p.k}, kp={p.kp}")
    delta = min_degree(g)
    if delta < p.k + 2:
        raise InapplicableError(f"part 2 requires minimum degree >= {p.k + 2}, got {delta}")
    return _carve(g, p, p.k + 1, g.n - delta + p.k)


def construct_best(g: Graph, p: ParamTriple) -> tuple[int, set[int]] | None:
    """Smallest witness over the applicable parts as (part, set); None when
    neither part applies."""
    if g.n == 0:
        return None
    candidates: list[tuple[int, int, set[int]]] = []
    try:
        s = construct_part1(g, p)
        candidates.append((len(s), 1, s))
    except InapplicableError:
        pass
    try:
        s = construct_part2(g, p)
        candidates.append((len(s), 2, s))
    except InapplicableError:
        pass
    if not candidates:
        return None
    size, part, s = min(candidates, key=lambda c: (c[0], c[1]))
    return part, s


def upper_bound(g: Graph, p: ParamTriple) -> int | None:
    """Size of the best constructed witness; None when inapplicable."""
    best = construct_best(g, p)
    return None if best is None else len(best[1])
