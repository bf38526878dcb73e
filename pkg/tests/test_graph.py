from __future__ import annotations

from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import iso_classes, naive_reduced_split_graphs, nx_contains_induced, nx_iso
from wordrep.catalog import load_builtin
from wordrep.graph import (
    Graph,
    SplitGraph,
    all_split_partitions,
    canonical_key,
    contains_induced,
    delete_vertex,
    find_isomorphism,
    is_induced_embedding,
    is_isomorphic,
    is_reduced,
    reduce,
    split_partition,
)


@st.composite
def split_graphs(draw, max_k=6, max_e=5):
    k = draw(st.integers(1, max_k))
    e = draw(st.integers(0, max_e))
    rows = [draw(st.integers(0, (1 << k) - 1)) for _ in range(e)]
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    edges += [(c, k + r) for r, m in enumerate(rows) for c in range(k) if m >> c & 1]
    perm = draw(st.permutations(range(k + e)))
    g = Graph.from_edges(k + e, edges)
    return g.relabel(perm)


def test_graph_rejects_asymmetric_adjacency():
    with pytest.raises(ValueError):
        Graph((0b10, 0b00))
    with pytest.raises(ValueError):
        Graph((0b1,))


def test_split_partition_complete_graph():
    s = split_partition(Graph.complete(5))
    assert (s.k, s.e) == (5, 0)


def test_split_partition_non_split():
    assert split_partition(Graph.cycle(4)) is None
    assert split_partition(Graph.cycle(5)) is None
    assert split_partition(Graph.from_edges(4, [(0, 1), (2, 3)])) is None


def test_split_partition_d1(d1):
    s = split_partition(d1)
    assert sorted(d1.name(v) for v in s.clique) == list("123456")
    assert sorted(d1.name(v) for v in s.indep) == list("abcd")


def test_split_partition_path_is_maximal():
    s = split_partition(Graph.path(3))
    assert s.k == 2 and s.e == 1


def test_split_graph_rejects_non_maximal_clique():
    g = Graph.complete(3)
    with pytest.raises(ValueError, match="maximal"):
        SplitGraph(g, (0, 1), (2,))


@given(split_graphs())
@settings(max_examples=300, deadline=None)
def test_split_partition_invariants(g):
    s = split_partition(g)
    assert s is not None
    assert sorted(s.clique + s.indep) == list(range(g.n))
    assert g.is_clique(s.clique) and g.is_independent(s.indep)
    for u in s.indep:
        assert s.k_mask(u) != (1 << s.k) - 1
    for alt in all_split_partitions(s):
        assert alt.k == s.k


def test_d_e_accessor(d1):
    s = split_partition(d1)
    by_name = {d1.name(v): s.d_e(v) for v in s.clique}
    assert by_name == {"1": 2, "2": 1, "3": 2, "4": 1, "5": 2, "6": 1}


def test_contains_induced_examples(d1):
    assert contains_induced(d1, Graph.complete(6)) is not None
    assert contains_induced(Graph.complete(5), Graph.path(3)) is None
    assert contains_induced(Graph.cycle(5), Graph.path(4)) is not None


@given(split_graphs(max_k=4, max_e=3), split_graphs(max_k=3, max_e=2))
@settings(max_examples=200, deadline=None)
def test_contains_induced_matches_networkx(host, pattern):
    emb = contains_induced(host, pattern)
    assert (emb is not None) == nx_contains_induced(host, pattern)
    if emb is not None:
        assert is_induced_embedding(host, pattern, emb)


@given(split_graphs(), st.randoms())
@settings(max_examples=200, deadline=None)
def test_isomorphism_under_relabeling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    iso = find_isomorphism(g, h)
    assert iso is not None
    assert all(g.has_edge(u, v) == h.has_edge(iso[u], iso[v]) for u in range(g.n) for v in range(g.n))


def test_isomorphism_distinguishes():
    assert not is_isomorphic(Graph.path(4), Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]))


def test_reduce_removes_twins_and_pendants():
    s = SplitGraph.from_neighborhoods(["1", "2", "3", "4"], {"a": ["1", "2"], "b": ["1", "2"], "c": ["3"]})
    r = reduce(s)
    assert is_reduced(r)
    assert r.e <= 1


@given(split_graphs())
@settings(max_examples=300, deadline=None)
def test_reduce_idempotent(g):
    r = reduce(split_partition(g))
    assert is_reduced(r)
    rr = reduce(r)
    assert rr.graph == r.graph


def test_canonical_key_rejects_unreduced():
    s = split_partition(Graph.path(3))
    with pytest.raises(ValueError):
        canonical_key(s)


@pytest.mark.parametrize("e,k", [(e, k) for e in (1, 2, 3) for k in (3, 4, 5)])
def test_canonical_key_iff_isomorphic_exhaustive(e, k):
    groups: dict = {}
    for s in naive_reduced_split_graphs(e, k):
        key = canonical_key(s)
        groups.setdefault(key, []).append(s)
    reps = []
    for members in groups.values():
        head = members[0].graph
        assert all(is_isomorphic(head, m.graph) for m in members[1:])
        reps.append(head)
    assert len(iso_classes(reps)) == len(reps)


def test_two_partitions_same_key():
    # a is adjacent to K - {3} and 3 has no E-neighbour, so a and 3 can swap
    s = SplitGraph.from_neighborhoods(["1", "2", "3"], {"a": ["1", "2"]})
    alts = all_split_partitions(s)
    assert len(alts) == 2
    keys = {canonical_key(reduce(t)) for t in alts}
    assert len(keys) == 1


def test_delete_vertex_rederives_partition(d1):
    s = split_partition(d1)
    t = delete_vertex(s, d1.index_of("1"))
    assert t.graph.n == 9
    for u in t.indep:
        assert t.k_mask(u) != (1 << t.k) - 1


def test_builtins_are_split():
    for name in ("B1", "B2", "B3", "D1"):
        assert split_partition(load_builtin(name).graph) is not None


def test_induced_renumbers_in_order():
    g = Graph.path(4)
    h = g.induced([3, 2, 1])
    assert h.has_edge(0, 1) and h.has_edge(1, 2) and not h.has_edge(0, 2)


def test_complement_involution():
    g = Graph.cycle(5)
    assert g.complement().complement() == g
    assert nx_iso(g, g.complement())


def test_canonical_key_example_pair():
    a = SplitGraph.from_neighborhoods(["1", "2", "3"], {"x": ["1", "2"], "y": ["1", "3"]})
    b = SplitGraph.from_neighborhoods(["1", "2", "3"], {"x": ["1", "2"], "y": ["2", "3"]})
    assert canonical_key(a) == canonical_key(b)


def test_canonical_key_distinguishes_d1_deletion(d1):
    s = split_partition(d1)
    assert canonical_key(s) != canonical_key(reduce(delete_vertex(s, d1.index_of("a"))))


def test_reduce_undoes_isolated_vertex_and_copy(d1):
    s = split_partition(d1)
    with_isolated = split_partition(d1.add_vertex([], "z"))
    b = d1.index_of("b")
    with_copy = split_partition(d1.add_vertex(d1.neighbors(b), "b2"))
    for t in (with_isolated, with_copy):
        assert nx_iso(reduce(t).graph, d1)
    assert reduce(s).graph == s.graph


def test_contains_induced_identity_and_p4_in_b1():
    b1 = load_builtin("B1").graph
    assert contains_induced(b1, b1) == tuple(range(b1.n))
    emb = contains_induced(b1, Graph.path(4))
    assert emb is not None and is_induced_embedding(b1, Graph.path(4), emb)


def test_isomorphism_examples():
    p4 = Graph.path(4)
    assert is_isomorphic(p4, p4.relabel([3, 2, 1, 0]))
    assert not is_isomorphic(Graph.complete(4), Graph.cycle(4))
    assert not is_isomorphic(load_builtin("B1").graph, load_builtin("B2").graph)
