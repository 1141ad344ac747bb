import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domset import graph as G


def test_build_path():
    p4 = G.build(4, [(0, 1), (1, 2), (2, 3)])
    assert p4.degree == (1, 2, 2, 1)
    assert p4.m == 3


def test_build_edgeless():
    g = G.build(3, [])
    assert G.min_degree(g) == 0
    assert G.max_degree(g) == 0


def test_build_dedups_symmetric_pair():
    g = G.build(4, [(0, 1), (1, 0)])
    assert g.m == 1
    assert g.edges == ((0, 1),)


def test_build_rejects_self_loop():
    with pytest.raises(G.GraphError, match=r"\(2, 2\)"):
        G.build(4, [(2, 2)])


def test_build_rejects_out_of_range():
    with pytest.raises(G.GraphError, match=r"\(0, 4\)"):
        G.build(4, [(0, 4)])


def test_degree_extremes():
    assert G.min_degree(G.path_graph(4)) == 1
    assert G.max_degree(G.path_graph(4)) == 2
    k4 = G.complete_graph(4)
    assert G.min_degree(k4) == G.max_degree(k4) == 3
    star = G.star_graph(4)
    assert G.min_degree(star) == 1
    assert G.max_degree(star) == 3


def test_degree_empty_graph_errors():
    g = G.build(0, [])
    with pytest.raises(G.GraphError):
        G.min_degree(g)
    with pytest.raises(G.GraphError):
        G.max_degree(g)


def test_generate_cycle_and_complete():
    c4 = G.generate("cycle", [4])
    assert c4.m == 4
    assert set(c4.degree) == {2}
    k6 = G.generate("complete", [6])
    assert k6.m == 15
    assert G.min_degree(k6) == 5


def test_petersen():
    g = G.petersen_graph()
    assert g.n == 10
    assert g.m == 15
    assert set(g.degree) == {3}


@pytest.mark.parametrize("seed", range(8))
def test_random_regular_is_regular(seed):
    g = G.random_regular(10, 3, seed=seed)
    assert all(d == 3 for d in g.degree)


def test_random_regular_deterministic():
    a = G.random_regular(10, 3, seed=7)
    b = G.random_regular(10, 3, seed=7)
    assert a.edges == b.edges


def test_random_regular_infeasible():
    with pytest.raises(G.GraphError):
        G.random_regular(4, 4, seed=0)
    with pytest.raises(G.GraphError):
        G.random_regular(5, 3, seed=0)


@pytest.mark.parametrize("n,seed", [(1, 0), (2, 1), (7, 3), (12, 9)])
def test_random_tree_properties(n, seed):
    g = G.random_tree(n, seed=seed)
    assert g.m == n - 1
    assert G.is_connected(g)
    assert G.random_tree(n, seed=seed).edges == g.edges


def test_generate_rejects_unknown_family():
    with pytest.raises(G.GraphError):
        G.generate("hypercube", [3])


def test_generate_rejects_wrong_arity():
    with pytest.raises(G.GraphError):
        G.generate("cycle", [4, 5])


def test_parse_edgelist_path():
    g = G.parse_edgelist("4 3\n0 1\n1 2\n2 3\n")
    assert g.edges == ((0, 1), (1, 2), (2, 3))
    assert g.degree == (1, 2, 2, 1)


def test_write_is_canonical():
    g = G.build(4, [(3, 2), (1, 0), (2, 1)])
    assert G.write_edgelist(g) == "4 3\n0 1\n1 2\n2 3\n"


@pytest.mark.parametrize(
    "text",
    [
        "2 1\n0 0\n",          # self-loop
        "2 2\n0 1\n1 0\n",     # duplicate edge, reversed orientation
        "4 3\n0 1\n1 2\n",     # count mismatch
        "4\n",                 # malformed header
        "2 1\n0 1",            # missing final newline
        "2 1\n0 1\nextra\n",   # trailing content
        "2 1\n0 2\n",          # endpoint out of range
    ],
)
def test_parse_edgelist_rejects(text):
    with pytest.raises(G.GraphError):
        G.parse_edgelist(text)


@given(n=st.integers(1, 12), seed=st.integers(0, 10**6))
@settings(max_examples=60)
def test_roundtrip_and_handshake(n, seed):
    g = G.random_gnp(n, 0.5, seed=seed)
    assert sum(g.degree) == 2 * g.m
    assert G.parse_edgelist(G.write_edgelist(g)).edges == g.edges
    # adjacency symmetry
    for u, v in g.edges:
        assert g.adj[u] >> v & 1 and g.adj[v] >> u & 1
        assert u != v


def test_is_connected():
    assert G.is_connected(G.path_graph(5))
    assert not G.is_connected(G.build(3, [(0, 1)]))
    assert G.is_connected(G.build(1, []))
