"""Isomorph-free enumeration of reduced split graphs and mining of minimal forbidden ones.

Two growth modes:

``exhaustive``
    |E| and |K| both bounded.  A graph is a set of distinct subsets of E, one
    per clique vertex; every such set family within the bounds is generated,
    filtered to reduced form and deduplicated under permutations of E.

``incremental``
    |K| bounded, |E| grown one vertex at a time.  For a fixed clique size the
    word-representable families of independent neighbourhoods are closed
    under removing a member, so they are generated level by level
    (Apriori-style); a non-representable candidate all of whose one-smaller
    subfamilies are representable is minimal in the E-direction, and is kept
    if deleting any clique vertex also gives a representable graph.
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from itertools import combinations
from multiprocessing import Pool
from pathlib import Path
from typing import Iterator, Optional, Sequence

import numpy as np

from . import families as fam
from .catalog import CatalogEntry, find_witness, load_mined, name_mined
from .graph import (
    CapacityError,
    SplitGraph,
    all_split_partitions,
    bits,
    canonical_key_unchecked,
    delete_vertex,
    popcount,
)
from .graph6 import encode_graph6
from .semitrans import decide_masks, decide_split

EXHAUSTIVE_E_MAX = 6
EXHAUSTIVE_K_MAX = 8
INCREMENTAL_K_MAX = 6
VERIFY_K_MAX = 7


class DependencyError(RuntimeError):
    """A step needs the output of an earlier run that is not available."""


@dataclass(frozen=True)
class MiningParams:
    e_max: Optional[int]
    k_max: int
    allow_empty_clique_vertex: bool = True
    growth_mode: str = "exhaustive"
    max_vertices: Optional[int] = None

    def __post_init__(self):
        if self.growth_mode not in ("exhaustive", "incremental"):
            raise ValueError(f"unknown growth mode {self.growth_mode!r}")
        if self.k_max < 1:
            raise ValueError("k_max must be at least 1")
        if self.e_max is None:
            if self.growth_mode != "incremental":
                raise ValueError("an open e_max needs incremental growth")
        elif self.e_max < 0:
            raise ValueError("e_max must be non-negative")

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class MinerReport:
    params: MiningParams
    total_enumerated: int
    minimal: list[SplitGraph]
    names: list[str]
    decisions: list[dict] = field(default_factory=list)
    levels: list[dict] = field(default_factory=list)
    stop_reason: str = ""
    timings: dict = field(default_factory=dict)

    @property
    def label(self) -> str:
        return run_label(self.params)

    def to_json(self, include_decisions: bool = False) -> dict:
        """Deterministic JSON; timings are deliberately left out."""
        out = {
            "label": self.label,
            "params": self.params.to_dict(),
            "searched_bound": searched_bound(self.params),
            "total_enumerated": self.total_enumerated,
            "minimal_count": len(self.minimal),
            "minimal": [
                {"name": name, "graph6": encode_graph6(s.graph), "e": s.e, "k": s.k, "split": split_text(s)}
                for name, s in zip(self.names, self.minimal)
            ],
            "stop_reason": self.stop_reason,
            "levels": self.levels,
        }
        if include_decisions:
            out["decisions"] = self.decisions
        return out


def run_label(p: MiningParams) -> str:
    if p.growth_mode == "exhaustive":
        return f"E<={p.e_max},K<={p.k_max}"
    return f"K<={p.k_max},E<={'adaptive' if p.e_max is None else p.e_max}"


def searched_bound(p: MiningParams) -> str:
    e = "unbounded (grown until stable)" if p.e_max is None else f"<= {p.e_max}"
    extra = f", n <= {p.max_vertices}" if p.max_vertices is not None else ""
    return f"|E| {e}, |K| <= {p.k_max}{extra}; no claim is made beyond these bounds"


def split_text(s: SplitGraph) -> str:
    """The human-readable split format used by the CLI."""
    g = s.graph
    lines = ["E: " + " ".join(g.name(u) for u in s.indep), "K: " + " ".join(g.name(v) for v in s.clique)]
    for u in s.indep:
        lines.append(f"{g.name(u)}: " + " ".join(g.name(v) for v in s.clique if g.has_edge(u, v)))
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# decisions


def is_wr(s: SplitGraph) -> bool:
    return decide_masks(s.k, s.k_masks()) is not None


def all_deletions_wr(s: SplitGraph) -> bool:
    return all(is_wr(delete_vertex(s, v)) for v in range(s.graph.n))


def is_minimal_forbidden(s: SplitGraph) -> bool:
    return not is_wr(s) and all_deletions_wr(s)


# ---------------------------------------------------------------------------
# exhaustive enumeration (E-side families)


def _e_family_ok(kmasks: Sequence[int], e: int, k: int) -> bool:
    cols = fam.transpose(kmasks, e)
    if len(set(cols)) != e:
        return False
    return all(2 <= popcount(c) < k for c in cols)


def _alt_partition_families(kmasks: Sequence[int], e: int) -> list[int]:
    """E-families of the other maximum-clique partitions of the graph, if any."""
    s = fam.split_from_masks(kmasks, e)
    out = []
    for p in all_split_partitions(s)[1:]:
        out.append(fam.family_of(p.e_masks()))
    return out


def _enumerate_ek_chunk(args) -> list[int]:
    e, k, first, allow_empty = args
    masks = [m for m in range(1 << e) if allow_empty or m]
    rest = [m for m in masks if m > first]
    fams = []
    for tail in combinations(rest, k - 1):
        kmasks = (first,) + tail
        if _e_family_ok(kmasks, e, k):
            fams.append(fam.family_of(kmasks))
    return fams


def _canonical_e_families(e: int, k: int, allow_empty: bool, workers: int = 1) -> list[int]:
    masks = [m for m in range(1 << e) if allow_empty or m]
    tasks = [(e, k, first, allow_empty) for first in masks]
    if workers > 1:
        with Pool(workers) as pool:
            chunks = pool.map(_enumerate_ek_chunk, tasks)
    else:
        chunks = [_enumerate_ek_chunk(t) for t in tasks]
    raw = [f for chunk in chunks for f in chunk]
    if not raw:
        return []
    canon = fam.canon_many(raw, e) if e else np.asarray(raw, dtype=np.uint64)
    best = {}
    for f in np.unique(canon).tolist():
        kmasks = fam.members(f)
        key = f
        alts = _alt_partition_families(kmasks, e) if 0 in kmasks else []
        if alts:
            key = min([f] + [fam.canon(a, e) for a in alts])
        best.setdefault(key, key)
    return sorted(best)


def enumerate_reduced(p: MiningParams, workers: int = 1) -> Iterator[SplitGraph]:
    """One representative per isomorphism class of reduced split graphs within the bounds.

    Graphs with ``1 <= |E| <= e_max`` are produced, ordered by ``(|E|, |K|)``
    then canonical family.  ``e_max == 0`` yields the complete graphs
    ``K_1..K_{k_max}``.
    """
    if p.e_max is None or p.e_max > EXHAUSTIVE_E_MAX or p.k_max > EXHAUSTIVE_K_MAX:
        raise CapacityError(
            f"exhaustive enumeration needs e_max <= {EXHAUSTIVE_E_MAX} and k_max <= {EXHAUSTIVE_K_MAX}"
        )
    if p.e_max == 0:
        for k in range(1, p.k_max + 1):
            yield fam.split_from_masks([0] * k, 0)
        return
    for e in range(1, p.e_max + 1):
        for k in range(3, p.k_max + 1):
            if p.max_vertices is not None and e + k > p.max_vertices:
                continue
            for f in _canonical_e_families(e, k, p.allow_empty_clique_vertex, workers):
                yield fam.split_from_e_family(f, e)


# ---------------------------------------------------------------------------
# incremental growth (K-side families)


def _grow_fixed_clique(k: int, e_max: Optional[int], levels_out: list) -> tuple[list[SplitGraph], int, str]:
    universe = [m for m in range(1 << k) if 2 <= popcount(m) <= k - 1]
    level = [0]
    level_set = {0}
    found: list[SplitGraph] = []
    examined = 1
    quiet = 0
    obstructed = False
    size = 0
    stop = "no representable family can be extended"
    while level:
        if e_max is not None and size >= e_max:
            stop = f"reached |E| = {e_max}"
            break
        if e_max is None and quiet >= 2:
            stop = "two consecutive sizes added no minimal graph"
            break
        size += 1
        raw = [F | 1 << S for F in level for S in universe if not F >> S & 1]
        if not raw:
            break
        cands = np.unique(fam.canon_many(raw, k)).tolist()
        next_level = []
        new_min = 0
        for C in cands:
            mem = fam.members(C)
            subs = fam.canon_many([C & ~(1 << S) for S in mem], k)
            if not all(int(x) in level_set for x in subs):
                continue
            examined += 1
            if decide_masks(k, mem) is not None:
                next_level.append(C)
                continue
            obstructed = True
            s = fam.split_from_k_family(C, k)
            if all_deletions_wr(s):
                found.append(s)
                new_min += 1
        levels_out.append({"k": k, "e": size, "representable": len(next_level), "new_minimal": new_min})
        # stabilisation is only counted once obstructions have started to appear
        if obstructed:
            quiet = 0 if new_min else quiet + 1
        level = next_level
        level_set = set(next_level)
    return found, examined, stop


# ---------------------------------------------------------------------------
# mining


def _dedup(graphs: Sequence[SplitGraph]) -> list[SplitGraph]:
    by_key = {}
    for s in graphs:
        by_key.setdefault(canonical_key_unchecked(s), s)
    return [by_key[key] for key in sorted(by_key)]


def mine_minimal(p: MiningParams, workers: int = 1, record_decisions: bool = False) -> MinerReport:
    """All minimal non-word-representable split graphs within the bounds of ``p``."""
    t0 = time.perf_counter()
    decisions: list[dict] = []
    levels: list[dict] = []
    found: list[SplitGraph] = []
    if p.growth_mode == "exhaustive":
        total = 0
        for s in enumerate_reduced(p, workers):
            total += 1
            L = decide_split(s)
            minimal = L is None and all_deletions_wr(s)
            if minimal:
                found.append(s)
            if record_decisions:
                rec = {"graph6": encode_graph6(s.graph), "e": s.e, "k": s.k, "representable": L is not None}
                if L is not None:
                    rec["labeling"] = L.to_json(s.graph)
                else:
                    rec["minimal"] = minimal
                decisions.append(rec)
        stop = "enumeration complete"
    else:
        if p.k_max > INCREMENTAL_K_MAX:
            raise CapacityError(f"incremental growth needs k_max <= {INCREMENTAL_K_MAX}")
        total = 0
        stops = []
        for k in range(3, p.k_max + 1):
            got, examined, stop = _grow_fixed_clique(k, p.e_max, levels)
            found.extend(got)
            total += examined
            stops.append(f"|K|={k}: {stop}")
        stop = "; ".join(stops)
    minimal = _dedup(found)
    for s in minimal:
        assert not is_wr(s) and all_deletions_wr(s)
    names = name_mined([s.graph for s in minimal])
    return MinerReport(
        params=p,
        total_enumerated=total,
        minimal=minimal,
        names=names,
        decisions=decisions,
        levels=levels,
        stop_reason=stop,
        timings={"mine_seconds": time.perf_counter() - t0},
    )


def catalog_graphs(report: MinerReport) -> list:
    return [s.graph for s in report.minimal]


# ---------------------------------------------------------------------------
# verification of the |E| <= 4 characterisation


def verify_main_theorem(k_max: int, catalog_path=None, catalog: Optional[Sequence[CatalogEntry]] = None) -> dict:
    """Check ``representable <=> no catalog witness`` on every reduced split graph with |E| <= 4, |K| <= k_max."""
    if k_max > VERIFY_K_MAX:
        raise CapacityError(f"verification is limited to k_max <= {VERIFY_K_MAX}")
    if catalog is None:
        if catalog_path is None or not Path(catalog_path).exists():
            raise DependencyError(f"catalog file {catalog_path} not found; run `wordrep mine` first")
        catalog = load_mined(catalog_path)
    catalog = list(catalog)
    params = MiningParams(e_max=4, k_max=k_max)
    counterexamples = []
    total = 0
    per_k: dict[int, int] = {}
    for s in enumerate_reduced(params):
        total += 1
        per_k[s.k] = per_k.get(s.k, 0) + 1
        L = decide_split(s)
        w = find_witness(s, catalog)
        if (L is None) != (w is not None):
            counterexamples.append(
                {
                    "graph6": encode_graph6(s.graph),
                    "split": split_text(s),
                    "labeling": L.to_json(s.graph) if L is not None else None,
                    "witness": None if w is None else {"name": w[0], "embedding": [s.graph.name(v) for v in w[1]]},
                }
            )
    return {
        "verdict": "verified" if not counterexamples else "refuted",
        "k_max": k_max,
        "searched_bound": searched_bound(params),
        "catalog": sorted(e.name for e in catalog),
        "total_checked": total,
        "checked_per_k": {str(k): v for k, v in sorted(per_k.items())},
        "counterexamples": counterexamples,
    }


# ---------------------------------------------------------------------------
# counts table


def _report_count(reports: Sequence[dict], mode: str, **bounds) -> int:
    for r in reports:
        p = r["params"]
        if p["growth_mode"] == mode and all(p[key] == val for key, val in bounds.items()):
            return r["minimal_count"]
    raise DependencyError(f"no {mode} mining report with {bounds}")


def counts_report(reports: Sequence[dict]) -> dict:
    """Minimal-forbidden counts for fixed |E| against |K| = |E| + 1."""
    e3 = _report_count(reports, "exhaustive", e_max=3)
    e4 = _report_count(reports, "exhaustive", e_max=4)
    k4 = _report_count(reports, "incremental", k_max=4)
    k5 = _report_count(reports, "incremental", k_max=5)
    return {
        "rows": [
            {"E": 3, "count_E": e3, "K": 4, "count_K": k4, "difference": abs(e3 - k4)},
            {"E": 4, "count_E": e4, "K": 5, "count_K": k5, "difference": abs(e4 - k5)},
        ]
    }


def load_reports(directory) -> list[dict]:
    d = Path(directory)
    if not d.is_dir():
        raise DependencyError(f"report directory {d} not found")
    out = []
    for path in sorted(d.glob("*.json")):
        try:
            data = json.loads(path.read_text())
        except json.JSONDecodeError:
            continue  # catalog files share the extension
        if isinstance(data, dict) and "params" in data and "minimal_count" in data:
            out.append(data)
    return out
