import pytest
from hypothesis import given, settings

from tchordal.digraph import (
    Digraph,
    Embedding,
    directed_cycle,
    directed_path,
    disjoint_union,
    identity_embedding,
    induced_subdigraph,
    is_acyclic,
    new_digraph,
    strongly_connected_components,
    underlying_clique_number,
)
from tchordal.errors import DigonError, SelfLoopError, VertexOutOfRangeError

from .strategies import digraphs
from .oracles import clique_number_oracle, is_acyclic_oracle, reachable


def test_new_digraph_three_cycle():
    d = new_digraph(3, [(1, 2), (2, 3), (3, 1)])
    assert d.vertex_count == 3
    assert d.arcs == {(1, 2), (2, 3), (3, 1)}
    assert d.out_neighbors(1) == (2,)
    assert d.in_neighbors(1) == (3,)


def test_arcs_deduplicated():
    assert len(new_digraph(2, [(1, 2), (1, 2)]).arcs) == 1


@pytest.mark.parametrize(
    "n, arcs, exc",
    [
        (2, [(1, 2), (2, 1)], DigonError),
        (1, [(1, 1)], SelfLoopError),
        (2, [(1, 3)], VertexOutOfRangeError),
        (2, [(0, 1)], VertexOutOfRangeError),
    ],
)
def test_new_digraph_rejects(n, arcs, exc):
    with pytest.raises(exc):
        new_digraph(n, arcs)


@pytest.mark.parametrize(
    "d, omega",
    [
        (directed_cycle(3), 3),
        (directed_cycle(4), 2),
        (Digraph(5), 1),
        (Digraph(0), 0),
        (Digraph(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]), 4),
    ],
)
def test_clique_number_examples(d, omega):
    assert underlying_clique_number(d) == omega


@settings(max_examples=150, deadline=None)
@given(digraphs(max_vertices=11))
def test_clique_number_matches_brute_force(d):
    assert underlying_clique_number(d) == clique_number_oracle(d)


def test_scc_examples():
    assert strongly_connected_components(directed_cycle(5)) == [[1, 2, 3, 4, 5]]
    assert strongly_connected_components(directed_path(3)) == [[1], [2], [3]]
    two, _ = disjoint_union([directed_cycle(3), directed_cycle(3)])
    assert strongly_connected_components(two) == [[1, 2, 3], [4, 5, 6]]


@settings(max_examples=150, deadline=None)
@given(digraphs(max_vertices=12))
def test_scc_matches_mutual_reachability(d):
    comps = strongly_connected_components(d)
    assert sorted(v for c in comps for v in c) == list(d.vertices)
    assert [c[0] for c in comps] == sorted(c[0] for c in comps)
    where = {v: i for i, c in enumerate(comps) for v in c}
    reach = {v: reachable(d, v) for v in d.vertices}
    for u in d.vertices:
        for v in d.vertices:
            assert (where[u] == where[v]) == (v in reach[u] and u in reach[v])


@settings(max_examples=100, deadline=None)
@given(digraphs(max_vertices=10))
def test_is_acyclic_matches_graphlib(d):
    assert is_acyclic(d) == is_acyclic_oracle(d)


def test_induced_subdigraph_examples():
    sub, relabel = induced_subdigraph(directed_cycle(3), {1, 2})
    assert sub == Digraph(2, [(1, 2)])
    assert relabel == {1: 1, 2: 2}
    d = directed_cycle(4)
    assert induced_subdigraph(d, d.vertices)[0] == d
    assert induced_subdigraph(d, set())[0] == Digraph(0)
    with pytest.raises(VertexOutOfRangeError):
        induced_subdigraph(d, {5})


@settings(max_examples=80, deadline=None)
@given(digraphs(max_vertices=9))
def test_induced_subdigraph_embeds_back(d):
    keep = [v for v in d.vertices if v % 2 == 1]
    sub, relabel = induced_subdigraph(d, keep)
    back = {new: old for old, new in relabel.items()}
    emb = Embedding(sub, tuple(back[i] for i in sub.vertices))
    assert emb.is_valid_in(d)
    assert identity_embedding(d).is_valid_in(d)


def test_disjoint_union_examples():
    u, offsets = disjoint_union([directed_cycle(3), directed_cycle(3)])
    assert u.vertex_count == 6 and len(u.arcs) == 6
    assert offsets == [0, 3]
    assert len(strongly_connected_components(u)) == 2
    d = directed_cycle(4)
    assert disjoint_union([d])[0] == d
    assert disjoint_union([])[0] == Digraph(0)


@settings(max_examples=80, deadline=None)
@given(digraphs(max_vertices=8))
def test_every_digraph_is_simple(d):
    for u, v in d.arcs:
        assert u != v
        assert (v, u) not in d.arcs


def test_embedding_rejects_non_induced_copy():
    host = Digraph(3, [(1, 2), (2, 3), (1, 3)])
    assert not Embedding(directed_path(3), (1, 2, 3)).is_valid_in(host)
    assert Embedding(directed_path(2), (1, 3)).is_valid_in(host)
    assert not Embedding(directed_path(2), (1, 1)).is_valid_in(host)
