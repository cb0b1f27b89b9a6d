import networkx as nx
import pytest

from fimfp2.cayley import (
    STRONG,
    TREE,
    EdgeClass,
    EdgeKind,
    EdgeRef,
    Path,
    ball_edges,
    classify_edge,
    geodesic,
    is_transition,
    is_tree_edge_oracle,
    parse_edge,
    scc_key,
    tree_path,
    verify_classification,
)
from fimfp2.monogenic import (
    IDENTITY,
    Interval,
    TypeI,
    TypeII,
    element_word,
    enumerate_ball,
    left_mult,
    nf_interval,
)


def ball_graph(N):
    g = nx.MultiDiGraph()
    g.add_nodes_from(enumerate_ball(N))
    for e, _ in ball_edges(N):
        g.add_edge(e.source, e.target, key=e.gen)
    return g


def test_classify_examples():
    assert classify_edge(EdgeRef(Interval(0, 2, 1), "x")) == STRONG
    assert classify_edge(EdgeRef(IDENTITY, "x")) == TREE
    e = EdgeRef(nf_interval(TypeII(1, 2, 2)), "x")
    assert e.source == Interval(-1, 1, 1)
    assert classify_edge(e) == EdgeClass(EdgeKind.TRANSITION, 2)


def test_edge_validation_and_parsing():
    with pytest.raises(ValueError):
        EdgeRef(IDENTITY, "z")
    assert parse_edge("x^1 y^2 x^2:x") == EdgeRef(Interval(-1, 1, 1), "x")
    with pytest.raises(ValueError):
        parse_edge("xyy")


def test_tree_edge_patterns():
    # x^n -> x^(n+1); x^n y^k -> x^n y^(k+1); x^n y^k x^j -> x^n y^k x^(j+1), j < k
    for n in range(6):
        assert classify_edge(EdgeRef(Interval(0, n, n), "x")) == TREE
        for k in range(n + 1):
            assert classify_edge(EdgeRef(nf_interval(TypeI(n, k)), "y")) == TREE
    for k in range(1, 6):
        for n in range(k):
            assert classify_edge(EdgeRef(nf_interval(TypeII(n, k, 0)), "y")) == TREE
            for j in range(k):
                assert classify_edge(EdgeRef(nf_interval(TypeII(n, k, j)), "x")) == TREE


def test_scc_key_examples():
    assert scc_key(Interval(0, 2, 1)) == scc_key(Interval(0, 2, 2)) == (0, 2)
    assert scc_key(Interval(0, 1, 1)) != scc_key(Interval(-1, 1, 1))
    assert scc_key(IDENTITY) == (0, 0)


def test_scc_key_matches_graph_components():
    # independent oracle: Tarjan via networkx on the ball, which is closed under SCCs
    g = ball_graph(7)
    for comp in nx.strongly_connected_components(g):
        keys = {scc_key(v) for v in comp}
        assert len(keys) == 1
    n_components = nx.number_strongly_connected_components(g)
    assert n_components == len({scc_key(v) for v in g.nodes})


def test_is_transition_includes_some_tree_edges():
    e = EdgeRef(Interval(0, 2, 2), "x")
    assert classify_edge(e) == TREE and is_transition(e)
    assert not is_transition(EdgeRef(Interval(0, 2, 1), "x"))


def test_tree_path_examples():
    p = tree_path(Interval(0, 5, 2))
    assert [e.gen for e, _ in p] == list("xxxxxyyy")
    assert len(tree_path(IDENTITY)) == 0
    p = tree_path(Interval(-2, 4, 1))
    assert "".join(e.gen for e, _ in p) == "x" * 4 + "y" * 6 + "x" * 3
    assert p.start == IDENTITY and p.end == Interval(-2, 4, 1)
    assert all(fwd for _, fwd in p)
    assert all(classify_edge(e) == TREE for e, _ in p)


def test_geodesic_examples():
    x2 = Interval(0, 2, 2)
    g = geodesic(IDENTITY, x2)
    assert [(e.gen, fwd) for e, fwd in g] == [("x", True), ("x", True)]
    back = geodesic(x2, IDENTITY)
    assert [(e.gen, fwd) for e, fwd in back] == [("x", False), ("x", False)]
    assert {e for e, _ in g} == {e for e, _ in back}
    # normal forms "x" and "xxyyyxxx" share the prefix "x"
    g = geodesic(Interval(0, 1, 1), Interval(-1, 2, 2))
    assert all(fwd for _, fwd in g)
    assert "".join(e.gen for e, _ in g) == "xyyyxxx"
    assert len(geodesic(x2, x2)) == 0


def test_geodesic_reversal_and_minimality():
    ball = enumerate_ball(4)
    g = nx.Graph()
    for e, cls in ball_edges(4):
        if cls == TREE:
            g.add_edge(e.source, e.target)
    for u in ball[::3]:
        for w in ball[::5]:
            p, q = geodesic(u, w), geodesic(w, u)
            assert q.steps == p.reversed().steps
            assert p.start == u and p.end == w
            assert all(is_tree_edge_oracle(e) for e, _ in p)
            assert len(p) == nx.shortest_path_length(g, u, w)


def test_path_validation():
    e = EdgeRef(IDENTITY, "x")
    with pytest.raises(ValueError, match="malformed"):
        Path(IDENTITY, ((e, True), (e, True)))
    p = Path(IDENTITY, ((e, True), (e, False)))
    assert p.is_closed


def test_ball_edges_n1():
    edges = dict(ball_edges(1))
    assert edges[EdgeRef(IDENTITY, "x")] == TREE
    assert edges[EdgeRef(IDENTITY, "y")] == TREE
    assert edges[EdgeRef(Interval(0, 1, 0), "x")] == STRONG
    assert edges[EdgeRef(Interval(0, 1, 1), "y")] == TREE
    assert len(edges) == 6


def test_transition_edges_in_ball():
    for N in range(1, 9):
        trans = [(e, c) for e, c in ball_edges(N) if c.kind is EdgeKind.TRANSITION]
        assert all(e.source.size <= N - 1 for e, _ in trans)
        for k in range(1, N):
            assert sum(1 for _, c in trans if c.weight == k) == k


def test_spanning_property():
    for N in range(0, 7):
        ball = set(enumerate_ball(N))
        for v in ball:
            p = tree_path(v)
            assert p.end == v
            assert all(e.source in ball for e, _ in p)


def test_tree_edge_oracle_equivalence():
    for e, cls in ball_edges(8):
        assert (cls == TREE) == is_tree_edge_oracle(e)


def test_size_behaviour_by_class():
    for e, cls in ball_edges(8):
        s, t = e.source, e.target
        if cls.kind is EdgeKind.TRANSITION:
            assert t.size == s.size + 1
            assert cls.weight == s.size
        elif cls.kind is EdgeKind.STRONG:
            assert scc_key(s) == scc_key(t)
        else:
            assert t.size in (s.size, s.size + 1)


def test_each_vertex_has_one_incoming_tree_edge():
    incoming = {}
    for e, cls in ball_edges(6):
        if cls == TREE:
            incoming[e.target] = incoming.get(e.target, 0) + 1
    assert set(incoming.values()) == {1}
    assert set(incoming) == set(enumerate_ball(6)) - {IDENTITY}


def test_left_translation_maps_edges_to_edges():
    for e, _ in ball_edges(8):
        for z in "xy":
            moved = EdgeRef(left_mult(z, e.source), e.gen)
            assert moved.target == left_mult(z, e.target)


def test_verify_classification():
    r = verify_classification(8)
    assert r.passed
    assert r.details["counts"] == {"tree": 284, "strong": 240, "transition": 28}
    assert r.checked >= 552
    with pytest.raises(ValueError):
        verify_classification(1)


def test_canonical_edge_ordering():
    edges = [e for e, _ in ball_edges(5)]
    assert edges == sorted(edges, key=lambda e: e.sort_key)
    assert element_word(edges[0].source) == ""
