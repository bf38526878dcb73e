#!/usr/bin/env python3
"""Write src/wordrep/data/proof_fixtures.json from the transcription below.

Clique vertices are written v{S}: a clique vertex whose neighbourhood in
E = {x, y, z, w} is exactly S.  Labelling fixtures list the clique in label
order; the graph is the configuration made of exactly those clique vertices.
"""

from __future__ import annotations

import json
from pathlib import Path

from wordrep.catalog import load_builtin
from wordrep.graph import split_partition

E = "xyzw"
O = "x>y>z>w"

# (case id, E order, K order as neighbourhood strings; "" is the empty set)
LABELINGS = [
    ("1(a)i", O, ["x", "xy", "y", "yz", "z", "w", ""]),
    ("1(a)ii", O, ["x", "xy", "y", "z", "zw", "w", ""]),
    ("1(b)i", O, ["xz", "x", "xy", "y", "yz", "z"]),
    ("1(b)ii", "y>x>z>w", ["y", "xy", "x", "xz", "xw", "w", ""]),
    ("1(b)iii", "w>x>y>z", ["w", "xw", "x", "xy", "y", "yz", "z", ""]),
    ("1(c)i", O, ["xw", "x", "xy", "y", "yz", "z", "zw", "w"]),
    ("1(c)ii", "y>x>w>z", ["yz", "y", "xy", "x", "xw", "xz", "z"]),
    ("2(a)i#1", O, ["x", "xyz", "xy", "y", "w", ""]),
    ("2(a)i#2", O, ["x", "xy", "xyz", "z", "w", ""]),
    ("2(a)ii", O, ["x", "xyz", "z", "zw", "w", ""]),
    ("2(b)i#1", O, ["x", "xy", "xyz", "yz", "z", "w", ""]),
    ("2(b)i#2", O, ["x", "xy", "xyz", "yz", "y", "w", ""]),
    ("2(b)ii", O, ["x", "xy", "xyz", "z", "zw", "w", ""]),
    ("2(b)iii#1", O, ["x", "xy", "xyz", "y", "yw", "w", ""]),
    ("2(b)iii#2", "w>y>x>z", ["w", "wy", "y", "yx", "xyz", "z", ""]),
    ("2(b)iv", "x>y>w>z", ["xyz", "y", "yw", "w", "wz", "z"]),
    ("2(c)ii", "x>z>y>w", ["xw", "x", "xyz", "xy", "y", "yw", "w"]),
    ("2(c)iii", "y>z>x>w", ["y", "xy", "xyz", "xz", "x", "xw", "w", ""]),
    ("2(c)v#1", "w>x>y>z", ["w", "xw", "x", "xy", "xyz", "yz", "z", ""]),
    ("2(c)v#2", "w>x>y>z", ["w", "xw", "x", "xy", "xyz", "yz", "y", ""]),
    ("2(c)vi", O, ["xw", "x", "xy", "xyz", "z", "zw", "w"]),
    ("2(d)i", O, ["xw", "x", "xy", "xyz", "yz", "z", "zw", "w"]),
    ("2(d)iii", O, ["xw", "x", "xy", "xyz", "xz", "z", "zw", "w"]),
    ("3(b)i#1", O, ["x", "xy", "xyz", "yz", "yzw", "y", ""]),
    ("3(b)i#2", O, ["y", "xy", "xyz", "yz", "yzw", "z", ""]),
    ("3(b)i#3", O, ["x", "xy", "xyz", "yz", "yzw", "z", ""]),
    ("3(b)i#4", O, ["x", "xy", "xyz", "yz", "yzw", "w", ""]),
    ("3(b)i#5", O, ["y", "xy", "xyz", "yz", "yzw", "w", ""]),
    ("3(b)ii#1", O, ["x", "xy", "xyz", "yzw", "zw", "z", ""]),
    ("3(b)ii#2", O, ["y", "xy", "xyz", "yzw", "zw", "w", ""]),
    ("3(b)ii#3", O, ["x", "xy", "xyz", "yzw", "zw", "w", ""]),
    ("3(b)ii#4", O, ["y", "xy", "xyz", "yzw", "zw", "z", ""]),
    ("3(b)iii#1", O, ["x", "xy", "xyz", "yzw", "yw", "y", ""]),
    ("3(b)iii#2", O, ["y", "xy", "xyz", "yzw", "yw", "w", ""]),
    ("3(b)iii#3", O, ["x", "xy", "xyz", "yzw", "yw", "w", ""]),
    ("3(b)v", O, ["xw", "x", "xyz", "yz", "yzw", "w"]),
    ("3(b)vi", O, ["xw", "x", "xy", "xyz", "yzw", "w"]),
    ("3(c)ii", O, ["xw", "x", "xy", "xyz", "yzw", "yw", "w"]),
    ("3(c)iv#1", O, ["x", "xy", "xyz", "yz", "yzw", "yw", "y", ""]),
    ("3(c)iv#2", O, ["y", "xy", "xyz", "yz", "yzw", "yw", "w", ""]),
    ("3(c)iv#3", O, ["x", "xy", "xyz", "yz", "yzw", "yw", "w", ""]),
    ("3(c)v", O, ["xw", "x", "xy", "xyz", "yz", "yzw", "w"]),
    ("3(c)vi#1", O, ["x", "xy", "xyz", "yz", "yzw", "zw", "z", ""]),
    ("3(c)vi#2", O, ["y", "xy", "xyz", "yz", "yzw", "zw", "w", ""]),
    ("3(c)vi#3", O, ["x", "xy", "xyz", "yz", "yzw", "zw", "w", ""]),
    ("3(c)vi#4", O, ["y", "xy", "xyz", "yz", "yzw", "zw", "z", ""]),
    ("3(c)vii", O, ["xw", "x", "xy", "xyz", "yzw", "zw", "w"]),
    ("3(d)i", O, ["xw", "x", "xy", "xyz", "yz", "yzw", "zw", "w"]),
    ("3(d)v", O, ["xw", "x", "xy", "xyz", "yz", "yzw", "yw", "w"]),
]

D1_CLIQUE = ["1", "2", "3", "4", "5", "6"]
D1_NBHDS = {"a": ["1", "3", "5"], "b": ["1", "2"], "c": ["3", "4"], "d": ["5", "6"]}

# (case id, deleted vertex, E order, K order)
D1_DELETIONS = [
    ("D1-minus:a", "a", "b>c>d", ["1", "2", "3", "4", "5", "6"]),
    ("D1-minus:b", "b", "d>a>c", ["6", "5", "1", "3", "4", "2"]),
    ("D1-minus:1", "1", "d>a>c>b", ["6", "5", "3", "4", "2"]),
    ("D1-minus:2", "2", "c>a>b>d", ["4", "3", "1", "5", "6"]),
]

# (case id, clique configuration, claimed forbidden subgraph)
CLAIMS = [
    ("1(b)i+v{}", ["xy", "yz", "xz", ""], "T1"),
    ("1(b)i+v{w}", ["xy", "yz", "xz", "w"], "T1"),
    ("1(b)ii+v{y},v{z},v{w}", ["xy", "xz", "xw", "y", "z", "w"], "D1"),
    ("1(c)i+v{}", ["xy", "yz", "zw", "xw", ""], "T5"),
    ("1(c)ii+v{}", ["xy", "xz", "xw", "yz", ""], "T1"),
    ("1(c)ii+v{w}", ["xy", "xz", "xw", "yz", "w"], "T1"),
    ("1(d)", ["xy", "xz", "xw", "yz", "yw"], "T7"),
    ("2+v{x},v{y},v{z}", ["xyz", "x", "y", "z"], "T2"),
    ("2(a)ii+v{x},v{y}", ["xyz", "zw", "x", "y"], "T2"),
    ("2(b)iii+v{x},v{z}", ["xyz", "xy", "yw", "x", "z"], "T2"),
    ("2(b)iv+v{x}", ["xyz", "zw", "yw", "x"], "T2"),
    ("2(b)iv+v{}", ["xyz", "zw", "yw", ""], "T1"),
    ("2(c)i", ["xyz", "xy", "yz", "xz"], "T3"),
    ("2(c)ii+v{z}", ["xyz", "xy", "yw", "xw", "z"], "T2"),
    ("2(c)ii+v{}", ["xyz", "xy", "yw", "xw", ""], "T1"),
    ("2(c)iii+v{z},v{y}", ["xyz", "xy", "xz", "xw", "z", "y"], "T2"),
    ("2(c)iv", ["xyz", "xw", "yw", "zw"], "T2"),
    ("2(c)v+v{z},v{y}", ["xyz", "xy", "yz", "xw", "z", "y"], "T2"),
    ("2(c)vi+v{y}", ["xyz", "xy", "zw", "xw", "y"], "T2"),
    ("2(c)vi+v{}", ["xyz", "xy", "zw", "xw", ""], "T1"),
    ("2(d)i+v{y}", ["xyz", "xy", "yz", "zw", "xw", "y"], "T2"),
    ("3+v{x},v{y},v{z}", ["xyz", "yzw", "x", "y", "z"], "T2"),
    ("3+v{y},v{z},v{w}", ["xyz", "yzw", "y", "z", "w"], "T2"),
    ("3+v{x},v{y},v{w}", ["xyz", "yzw", "x", "y", "w"], "T6"),
    ("3+v{x},v{z},v{w}", ["xyz", "yzw", "x", "z", "w"], "T6"),
    ("3(a)ii+v{}", ["xyz", "yzw", "xw", ""], "T1"),
    ("3(b)i+v{z},v{w}", ["xyz", "yzw", "xy", "yz", "z", "w"], "T2"),
    ("3(b)iii+v{z}", ["xyz", "yzw", "xy", "yw", "z"], "T8"),
    ("3(b)iv", ["xyz", "yzw", "xy", "xz"], "T3"),
    ("3(b)v+v{y}", ["xyz", "yzw", "yz", "xw", "y"], "T1"),
    ("3(b)v+v{}", ["xyz", "yzw", "yz", "xw", ""], "T1"),
    ("3(b)vi+v{y}", ["xyz", "yzw", "xw", "xy", "y"], "T1"),
    ("3(b)vi+v{z}", ["xyz", "yzw", "xw", "xy", "z"], "T1"),
    ("3(b)vi+v{}", ["xyz", "yzw", "xw", "xy", ""], "T1"),
    ("3(c)iii", ["xyz", "yzw", "xy", "xz", "xw"], "T3"),
    ("3(d)ii", ["xyz", "yzw", "xy", "xz", "xw", "yz"], "T3"),
    ("3(d)iii", ["xyz", "yzw", "xy", "xz", "xw", "yw"], "T3"),
    ("3(d)iv", ["xyz", "yzw", "xy", "yz", "yw", "xz"], "T3"),
    ("4", ["xyz", "yzw", "xzw"], "T3"),
]

UNIVERSAL_CLAIMS = [("5:B1+universal", "B1", "T2"), ("5:B2+universal", "B2", "T3"), ("5:B3+universal", "B3", "T4")]


def vname(s: str) -> str:
    return "v{" + ",".join(ch for ch in E if ch in s) + "}"


def config(sets: list[str]) -> tuple[list[str], dict[str, list[str]]]:
    kverts = [vname(s) for s in sets]
    nbhds = {x: [vname(s) for s in sets if x in s] for x in E}
    return kverts, nbhds


def build() -> list[dict]:
    out = []
    for case, eorder, korder in LABELINGS:
        kverts, nbhds = config(korder)
        out.append({"caseId": case, "graph": nbhds, "kOrder": kverts, "eOrder": eorder.split(">"), "expected": "pass"})
    for case, gone, eorder, korder in D1_DELETIONS:
        nbhds = {u: [v for v in nb if v != gone] for u, nb in D1_NBHDS.items() if u != gone}
        out.append({"caseId": case, "graph": nbhds, "kOrder": korder, "eOrder": eorder.split(">"), "expected": "pass"})
    for case, sets, name in CLAIMS:
        kverts, nbhds = config(sets)
        out.append({"caseId": case, "graph": nbhds, "kOrder": kverts, "eOrder": [], "expected": {"containsWitness": name}})
    for case, base, name in UNIVERSAL_CLAIMS:
        g = load_builtin(base).graph
        g = g.add_vertex(range(g.n), "u")
        s = split_partition(g)
        kverts = [g.name(v) for v in s.clique]
        nbhds = {g.name(u): [g.name(v) for v in s.clique if g.has_edge(u, v)] for u in s.indep}
        out.append({"caseId": case, "graph": nbhds, "kOrder": kverts, "eOrder": [], "expected": {"containsWitness": name}})
    return out


if __name__ == "__main__":
    target = Path(__file__).resolve().parents[1] / "src" / "wordrep" / "data" / "proof_fixtures.json"
    target.write_text(json.dumps(build(), indent=1) + "\n")
    print(f"wrote {target}")
