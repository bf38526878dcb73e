#!/usr/bin/env python3
"""Compare the split-graph deciders with the general semi-transitivity oracles.

Existence level: decide_split against exists_semitransitive on every reduced
split graph with at most --max-n vertices.  Orientation level: the A/B/C
validator against the literal shortcut checker on every orientation of the
graphs with at most --orient-max-n vertices.
"""

from __future__ import annotations

import argparse
import time

from wordrep.miner import MiningParams, enumerate_reduced
from wordrep.semitrans import (
    decide_split,
    exists_semitransitive,
    is_semitransitive_orientation,
    iter_orientations,
    validate_split_orientation,
)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--orient-max-n", type=int, default=8)
    args = ap.parse_args()

    corpus = list(enumerate_reduced(MiningParams(6, 8, max_vertices=args.max_n)))
    t0 = time.perf_counter()
    bad = [s for s in corpus if (decide_split(s) is None) != (exists_semitransitive(s.graph) is None)]
    print(f"existence: {len(corpus) - len(bad)}/{len(corpus)} agree ({time.perf_counter() - t0:.1f}s)")

    t0 = time.perf_counter()
    total = disagree = semitransitive = 0
    for s in corpus:
        if s.graph.n > args.orient_max_n:
            continue
        for o in iter_orientations(s.graph):
            a = validate_split_orientation(s, o)
            total += 1
            semitransitive += a
            disagree += a != is_semitransitive_orientation(o)
    print(f"orientations: {total - disagree}/{total} agree, {semitransitive} semi-transitive ({time.perf_counter() - t0:.1f}s)")


if __name__ == "__main__":
    main()
