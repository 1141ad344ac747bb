"""Immutable simple undirected graphs, deterministic generators, edge-list I/O.

Vertices are the integers 0..n-1. Neighborhoods are stored as integer
bitmasks, which keeps the domination predicates and the exact solver fast
for the small graphs this library targets.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Invalid graph construction, generation, or parsing input."""


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph.

    Fields are canonical and immutable: ``edges`` holds each edge once as
    (min, max), sorted lexicographically; ``adj[v]`` is the bitmask of
    neighbors of v; ``degree[v] == adj[v].bit_count()``.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[int, ...]
    degree: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> set[int]:
        return _mask_to_set(self.adj[v])

    def closed_neighborhood_mask(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, m={self.m})"


def _mask_to_set(mask: int) -> set[int]:
    out = set()
    v = 0
    while mask:
        if mask & 1:
            out.add(v)
        mask >>= 1
        v += 1
    return out


def build(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list, deduplicating symmetric repeats.

    Rejects out-of-range endpoints and self-loops, naming the offending pair.
    """
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    seen: set[tuple[int, int]] = set()
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v}) is not allowed")
        seen.add((min(u, v), max(u, v)))
    edges = tuple(sorted(seen))
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n=n, edges=edges, adj=tuple(adj), degree=tuple(a.bit_count() for a in adj))


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("minimum degree is undefined for the empty graph")
    return min(g.degree)


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("maximum degree is undefined for the empty graph")
    return max(g.degree)


def is_connected(g: Graph) -> bool:
    """True when every vertex is reachable from vertex 0 (n >= 1)."""
    if g.n == 0:
        raise GraphError("connectivity is undefined for the empty graph")
    reached = 1
    frontier = 1
    while frontier:
        nxt = 0
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            nxt |= g.adj[v] & ~reached
        reached |= nxt
        frontier = nxt
    return reached == g.full_mask


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


# --- generators ------------------------------------------------------------


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("path requires n >= 1")
    return build(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle requires n >= 3")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph requires n >= 1")
    return build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError("complete bipartite graph requires both sides nonempty")
    return build(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(n: int) -> Graph:
    """Star with center 0 and n-1 leaves (K_{1,n-1})."""
    if n < 1:
        raise GraphError("star requires n >= 1")
    return build(n, [(0, i) for i in range(1, n)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return build(10, outer + inner + spokes)


def random_gnp(n: int, p: float, seed: int = 0) -> Graph:
    if n < 1:
        raise GraphError("random_gnp requires n >= 1")
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return build(n, edges)


def random_regular(n: int, d: int, seed: int = 0, max_attempts: int = 10000) -> Graph:
    """d-regular graph via the pairing model, rejecting non-simple pairings."""
    if d < 0 or n < 1:
        raise GraphError("random_regular requires n >= 1 and d >= 0")
    if d >= n:
        raise GraphError(f"degree {d} is infeasible for {n} vertices")
    if (n * d) % 2 != 0:
        raise GraphError(f"n*d must be even, got n={n}, d={d}")
    rng = random.Random(seed)
    stubs_template = [v for v in range(n) for _ in range(d)]
    for _ in range(max_attempts):
        stubs = stubs_template[:]
        rng.shuffle(stubs)
        edges: set[tuple[int, int]] = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                ok = False
                break
            e = (min(u, v), max(u, v))
            if e in edges:
                ok = False
                break
            edges.add(e)
        if ok:
            return build(n, edges)
    raise GraphError(f"no simple {d}-regular pairing found in {max_attempts} attempts")


def random_tree(n: int, seed: int = 0) -> Graph:
    """Uniform random labelled tree via a Pruefer sequence."""
    if n < 1:
        raise GraphError("random_tree requires n >= 1")
    if n == 1:
        return build(1, [])
    if n == 2:
        return build(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    count = [1] * n
    for v in seq:
        count[v] += 1
    edges = []
    leaves = [v for v in range(n) if count[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        count[v] -= 1
        if count[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return build(n, edges)


FAMILIES = (
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "star",
    "petersen",
    "random_gnp",
    "random_regular",
    "random_tree",
)


def generate(family: str, params: Sequence[float] = (), seed: int = 0) -> Graph:
    """Dispatch to a named generator. Deterministic in (family, params, seed)."""
    params = list(params)

    def want(count: int) -> None:
        if len(params) != count:
            raise GraphError(f"family {family!r} takes {count} size parameter(s), got {len(params)}")

    if family == "path":
        want(1)
        return path_graph(int(params[0]))
    if family == "cycle":
        want(1)
        return cycle_graph(int(params[0]))
    if family == "complete":
        want(1)
        return complete_graph(int(params[0]))
    if family == "complete_bipartite":
        want(2)
        return complete_bipartite_graph(int(params[0]), int(params[1]))
    if family == "star":
        want(1)
        return star_graph(int(params[0]))
    if family == "petersen":
        want(0)
        return petersen_graph()
    if family == "random_gnp":
        want(2)
        return random_gnp(int(params[0]), float(params[1]), seed)
    if family == "random_regular":
        want(2)
        return random_regular(int(params[0]), int(params[1]), seed)
    if family == "random_tree":
        want(1)
        return random_tree(int(params[0]), seed)
    raise GraphError(f"unknown family {family!r}; known: {', '.join(FAMILIES)}")


# --- edge-list format ------------------------------------------------------


def parse_edgelist(text: str) -> Graph:
    """Parse the strict edge-list format: "n m" header, then m lines "u v".

    Duplicate edges (in either orientation), self-loops, out-of-range
    endpoints, count mismatches, and trailing content are all errors.
    """
    if not text.endswith("\n"):
        raise GraphError("edge list must be newline-terminated")
    lines = text.split("\n")[:-1]
    if not lines:
        raise GraphError("missing header line")
    header = lines[0].split(" ")
    if len(header) != 2:
        raise GraphError(f"malformed header {lines[0]!r}, expected 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphError(f"malformed header {lines[0]!r}, expected two integers") from None
    if n < 0 or m < 0:
        raise GraphError(f"negative counts in header {lines[0]!r}")
    if len(lines) - 1 != m:
        raise GraphError(f"header declares {m} edges but {len(lines) - 1} edge lines follow")
    seen: set[tuple[int, int]] = set()
    edges = []
    for line in lines[1:]:
        parts = line.split(" ")
        if len(parts) != 2:
            raise GraphError(f"malformed edge line {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"malformed edge line {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v}) is not allowed")
        e = (min(u, v), max(u, v))
        if e in seen:
            raise GraphError(f"duplicate edge ({u}, {v})")
        seen.add(e)
        edges.append(e)
    return build(n, edges)


def write_edgelist(g: Graph) -> str:
    """Render the canonical edge list: edges as (min, max), sorted."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
