from __future__ import annotations

import json

import pytest

from oracles import iso_classes, naive_reduced_split_graphs, nx_iso
from wordrep.catalog import load_builtin
from wordrep.graph import CapacityError, canonical_key, is_reduced
from wordrep.miner import (
    DependencyError,
    MiningParams,
    counts_report,
    enumerate_reduced,
    is_minimal_forbidden,
    load_reports,
    mine_minimal,
    verify_main_theorem,
)
from wordrep.graph import split_partition


def test_params_validation():
    with pytest.raises(ValueError):
        MiningParams(None, 5)
    with pytest.raises(ValueError):
        MiningParams(2, 5, growth_mode="sideways")
    with pytest.raises(ValueError):
        MiningParams(-1, 5)


def test_enumeration_e0_is_complete_graphs():
    gs = list(enumerate_reduced(MiningParams(0, 3)))
    assert [(s.k, s.e) for s in gs] == [(1, 0), (2, 0), (3, 0)]


def test_enumeration_e1_is_empty():
    # one E-vertex of degree >= 2 leaves at least two clique vertices with the same E-neighbourhood
    assert list(enumerate_reduced(MiningParams(1, 3))) == []


@pytest.mark.parametrize("e,k", [(2, 3), (2, 4), (3, 3), (3, 4)])
def test_enumeration_matches_naive(e, k):
    ours = [s for s in enumerate_reduced(MiningParams(e, k)) if (s.e, s.k) == (e, k)]
    naive = iso_classes(naive_reduced_split_graphs(e, k))
    assert len(ours) == len(naive)
    for s in ours:
        assert is_reduced(s)
        assert sum(nx_iso(s.graph, t.graph) for t in naive) == 1


def test_enumeration_no_empty_clique_vertex():
    for s in enumerate_reduced(MiningParams(3, 5, allow_empty_clique_vertex=False)):
        assert all(s.e_mask(v) for v in s.clique)


def test_enumeration_keys_distinct():
    keys = [canonical_key(s) for s in enumerate_reduced(MiningParams(3, 6))]
    assert len(keys) == len(set(keys))


def test_enumeration_guard():
    with pytest.raises(CapacityError):
        list(enumerate_reduced(MiningParams(7, 4)))


def test_small_clique_run_is_empty():
    assert mine_minimal(MiningParams(6, 3)).minimal == []
    assert mine_minimal(MiningParams(None, 3, growth_mode="incremental")).minimal == []


def test_e3_run():
    rep = mine_minimal(MiningParams(3, 6))
    assert len(rep.minimal) == 3
    assert all((s.e, s.k) == (3, 4) for s in rep.minimal)
    assert all(is_minimal_forbidden(s) for s in rep.minimal)


def test_hereditary_minimality_d1(d1):
    assert is_minimal_forbidden(split_partition(d1))


def test_workers_do_not_change_output():
    a = mine_minimal(MiningParams(3, 5)).to_json()
    b = mine_minimal(MiningParams(3, 5), workers=2).to_json()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_report_json_states_bound():
    data = mine_minimal(MiningParams(3, 4), record_decisions=True).to_json(include_decisions=True)
    assert "no claim is made beyond" in data["searched_bound"]
    assert "timings" not in data
    assert len(data["decisions"]) == data["total_enumerated"]


def test_incremental_k4_and_monotone():
    k4 = mine_minimal(MiningParams(None, 4, growth_mode="incremental"))
    assert len(k4.minimal) == 4
    # raising the |E| bound never loses graphs
    small = mine_minimal(MiningParams(3, 4, growth_mode="incremental"))
    for s in small.minimal:
        assert any(nx_iso(s.graph, t.graph) for t in k4.minimal)


def test_incremental_matches_exhaustive_on_overlap():
    inc = mine_minimal(MiningParams(4, 5, growth_mode="incremental"))
    exh = mine_minimal(MiningParams(4, 5))
    assert sorted(canonical_key(s) for s in inc.minimal) == sorted(canonical_key(s) for s in exh.minimal)


def test_verify_needs_catalog(tmp_path):
    with pytest.raises(DependencyError):
        verify_main_theorem(4, catalog_path=tmp_path / "missing.json")


def test_verify_small_bound():
    from wordrep.catalog import forbidden_catalog

    res = verify_main_theorem(5, catalog=forbidden_catalog())
    assert res["verdict"] == "verified" and res["counterexamples"] == []


def test_verify_detects_incomplete_catalog():
    from wordrep.catalog import forbidden_catalog

    partial = [e for e in forbidden_catalog() if e.name != "M1"]
    res = verify_main_theorem(4, catalog=partial)
    assert res["verdict"] == "refuted"


def test_counts_report_needs_runs(tmp_path):
    with pytest.raises(DependencyError):
        counts_report(load_reports(tmp_path))


def test_counts_report_from_fake_runs():
    def rep(mode, e, k, count):
        return {"params": {"growth_mode": mode, "e_max": e, "k_max": k}, "minimal_count": count}

    rows = counts_report(
        [rep("exhaustive", 3, 6, 3), rep("exhaustive", 4, 7, 9), rep("incremental", None, 4, 4), rep("incremental", None, 5, 9)]
    )["rows"]
    assert [(r["count_E"], r["count_K"], r["difference"]) for r in rows] == [(3, 4, 1), (9, 9, 0)]


def test_verify_trivial_bound():
    from wordrep.catalog import forbidden_catalog

    res = verify_main_theorem(2, catalog=forbidden_catalog())
    assert res["verdict"] == "verified" and res["total_checked"] == 0


@pytest.mark.slow
def test_remining_reproduces_packaged_catalog():
    from wordrep.catalog import dumps_catalog, packaged_catalog_path

    p = MiningParams(4, 7)
    rep = mine_minimal(p)
    assert dumps_catalog([s.graph for s in rep.minimal], p.to_dict(), rep.names) == packaged_catalog_path().read_text()


@pytest.mark.slow
def test_no_new_minimal_graph_at_k7():
    a = mine_minimal(MiningParams(4, 6))
    b = mine_minimal(MiningParams(4, 7))
    assert [canonical_key(s) for s in a.minimal] == [canonical_key(s) for s in b.minimal]


def test_minimal_graphs_reduced_and_cross_checked():
    from wordrep.graph import reduce
    from wordrep.semitrans import exists_semitransitive

    for s in mine_minimal(MiningParams(4, 5)).minimal:
        assert reduce(s).graph == s.graph
        if s.graph.n <= 9:
            assert exists_semitransitive(s.graph) is None
