"""Replay of the explicit clique orderings and containment claims from the |E| = 4 case analysis."""

from __future__ import annotations

import json
from itertools import combinations
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence

from .catalog import CatalogEntry, find_witness, forbidden_catalog
from .graph import Graph, SplitGraph, contains_induced
from .semitrans import CliqueLabeling, labeling_violations


class FixtureError(ValueError):
    pass


def packaged_fixtures_path() -> Path:
    return Path(str(resources.files("wordrep") / "data" / "proof_fixtures.json"))


def fixture_graph(fx: dict) -> Graph:
    """Graph with clique ``kOrder`` and independent vertices from ``graph``.

    The clique need not be maximal: a containment host may have an
    independent vertex adjacent to every clique vertex.
    """
    kverts = fx["kOrder"]
    unknown = {v for nb in fx["graph"].values() for v in nb} - set(kverts)
    if unknown:
        raise FixtureError(f"{fx['caseId']}: neighbours {sorted(unknown)} are not clique vertices")
    k = len(kverts)
    idx = {name: i for i, name in enumerate(kverts)}
    edges = list(combinations(range(k), 2))
    for j, nb in enumerate(fx["graph"].values()):
        edges.extend((k + j, idx[name]) for name in nb)
    return Graph.from_edges(k + len(fx["graph"]), edges, list(kverts) + list(fx["graph"]))


def _resolve(hosts: list[tuple[str, set[str]]]) -> dict:
    tally: dict[str, int] = {}
    for _, contained in hosts:
        for name in contained:
            tally[name] = tally.get(name, 0) + 1
    top = max(tally.values(), default=0)
    best = sorted(name for name, c in tally.items() if c == top)
    return {
        "candidates": best,
        "hosts": len(hosts),
        "dissenting": [case for case, contained in hosts if not contained & set(best)],
    }


def replay_proof_fixtures(path=None, catalog: Optional[Sequence[CatalogEntry]] = None) -> dict:
    """Re-check every transcribed labeling and containment claim.

    A containment claim naming ``D1`` must be witnessed by D1 itself; claims
    naming a ``T_i`` are confirmed by any catalog witness, since the catalog
    names mined graphs ``M1..``.  For each ``T_i`` the report also names the
    catalog entries contained in the most hosts claimed to contain it, and
    the hosts that contain none of them.
    """
    path = Path(path) if path is not None else packaged_fixtures_path()
    fixtures = json.loads(path.read_text())
    catalog = list(catalog) if catalog is not None else forbidden_catalog()
    results = []
    t_hosts: dict[str, list[tuple[str, set[str]]]] = {}
    for fx in fixtures:
        g = fixture_graph(fx)
        exp = fx["expected"]
        rec = {"caseId": fx["caseId"]}
        if exp == "pass":
            k = len(fx["kOrder"])
            s = SplitGraph(g, tuple(range(k)), tuple(range(k, g.n)))
            L = CliqueLabeling(tuple(g.index_of(name) for name in fx["kOrder"]))
            problems = labeling_violations(s, L)
            rec.update(kind="labeling", ok=not problems, violations=problems)
        else:
            claimed = exp["containsWitness"]
            hit = find_witness(g, catalog)
            contained = sorted(e.name for e in catalog if contains_induced(g, e.graph) is not None)
            if claimed == "D1":
                ok = hit is not None and hit[0] == "D1"
            else:
                ok = hit is not None
                t_hosts.setdefault(claimed, []).append((fx["caseId"], set(contained)))
            rec.update(
                kind="containment",
                claimed=claimed,
                ok=ok,
                witness=None if hit is None else hit[0],
                embedding=None if hit is None else [g.name(v) for v in hit[1]],
                contained=contained,
            )
        results.append(rec)
    resolution = {t: _resolve(hosts) for t, hosts in sorted(t_hosts.items())}
    failures = [r["caseId"] for r in results if not r["ok"]]
    return {
        "fixtures": len(results),
        "labelings": sum(r["kind"] == "labeling" for r in results),
        "containments": sum(r["kind"] == "containment" for r in results),
        "failures": failures,
        "verdict": "pass" if not failures else "fail",
        "t_name_candidates": resolution,
        "results": results,
    }
