#!/usr/bin/env python3
"""Run every mining experiment, then verification, proof replay and the counts table.

Writes one JSON report per run plus catalogs and ``summary.json`` to --out.
"""

from __future__ import annotations

import argparse
import json
import time
from pathlib import Path

from wordrep.catalog import save_mined
from wordrep.miner import MiningParams, counts_report, load_reports, mine_minimal, verify_main_theorem
from wordrep.replay import replay_proof_fixtures

RUNS = {
    "e3_k6": MiningParams(3, 6),
    "e4_k7": MiningParams(4, 7),
    "k3": MiningParams(6, 3),
    "k4_adaptive": MiningParams(None, 4, growth_mode="incremental"),
    "k5_adaptive": MiningParams(None, 5, growth_mode="incremental"),
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="results")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--verify-k-max", type=int, default=7)
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    summary: dict = {"runs": {}}
    for label, params in RUNS.items():
        t0 = time.perf_counter()
        rep = mine_minimal(params, workers=args.workers)
        (out / f"{label}.json").write_text(json.dumps(rep.to_json(), sort_keys=True, indent=1) + "\n")
        save_mined([s.graph for s in rep.minimal], params.to_dict(), out / f"{label}.catalog", rep.names)
        dt = time.perf_counter() - t0
        summary["runs"][label] = {"minimal": len(rep.minimal), "names": rep.names, "seconds": round(dt, 2)}
        print(f"{label:12} {len(rep.minimal):3d} minimal  ({dt:.1f}s)  {rep.stop_reason}")

    t0 = time.perf_counter()
    ver = verify_main_theorem(args.verify_k_max, catalog_path=out / "e4_k7.catalog")
    summary["verify"] = {k: ver[k] for k in ("verdict", "total_checked", "checked_per_k", "searched_bound")}
    summary["verify"]["counterexamples"] = len(ver["counterexamples"])
    print(f"verify       {ver['verdict']}: {ver['total_checked']} graphs ({time.perf_counter() - t0:.1f}s)")

    rep = replay_proof_fixtures()
    summary["replay"] = {k: rep[k] for k in ("labelings", "containments", "failures", "t_name_candidates")}
    print(f"replay       {rep['labelings']} orderings, {rep['containments']} claims, {len(rep['failures'])} failures")

    table = counts_report(load_reports(out))
    summary["counts"] = table
    for row in table["rows"]:
        print(f"counts       |E|={row['E']}: {row['count_E']}   |K|={row['K']}: {row['count_K']}   difference {row['difference']}")

    (out / "summary.json").write_text(json.dumps(summary, sort_keys=True, indent=1) + "\n")


if __name__ == "__main__":
    main()
