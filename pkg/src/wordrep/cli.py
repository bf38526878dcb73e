"""``wordrep`` command line.

Exit status: 0 when the property asked about holds, 1 when it fails, 2 on a
usage or input error.  Input errors print one line naming file, line and byte.

Split text format::

    E: a b c d
    K: 1 2 3 4 5 6
    a: 1 3 5
    b: 1 2

Blank lines and lines starting with ``#`` are ignored.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import combinations
from pathlib import Path
from typing import Optional, Sequence

from .catalog import (
    CatalogNotFound,
    IntegrityError,
    builtin_names,
    default_catalog_path,
    find_witness,
    load_builtin,
    load_mined,
    save_mined,
)
from .graph import CapacityError, Graph, is_induced_embedding, split_partition
from .graph6 import Graph6Error, decode_graph6, encode_graph6
from .miner import (
    DependencyError,
    MiningParams,
    counts_report,
    load_reports,
    mine_minimal,
    split_text,
    verify_main_theorem,
)
from .replay import FixtureError, packaged_fixtures_path, replay_proof_fixtures
from .semitrans import check_labeling, decide_split, exhaust_labelings
from .words import DEFAULT_MAX_OCCURRENCES, find_word, represents


class InputError(Exception):
    def __init__(self, path, line: int, byte: int, message: str):
        super().__init__(f"{path}:{line}:{byte}: {message}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(_fail(f"{self.prog}: {message}"))


def _fail(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


# ---------------------------------------------------------------------------
# input


def parse_split_text(text: str, source: str = "<input>") -> Graph:
    """Graph from the split text format; the partition is re-derived later."""
    e_names: Optional[list[str]] = None
    k_names: Optional[list[str]] = None
    nbhds: dict[str, list[str]] = {}
    rows: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        col = raw.index(line[0])
        head, sep, rest = line.partition(":")
        if not sep:
            raise InputError(source, lineno, col, "expected 'name: ...'")
        head = head.strip()
        toks = rest.split()
        if head == "E":
            e_names = toks
        elif head == "K":
            k_names = toks
        else:
            if head in rows:
                raise InputError(source, lineno, col, f"second neighbourhood line for {head!r}")
            rows[head] = lineno
            nbhds[head] = toks
    if e_names is None or k_names is None:
        raise InputError(source, 1, 0, "missing 'E:' or 'K:' line")
    names = k_names + e_names
    if len(set(names)) != len(names):
        raise InputError(source, 1, 0, "a vertex name is listed twice")
    lines = text.splitlines()
    for u, nb in nbhds.items():
        line = lines[rows[u] - 1]
        if u not in e_names:
            raise InputError(source, rows[u], line.index(u), f"{u!r} is not listed on the 'E:' line")
        for v in nb:
            if v not in k_names:
                raise InputError(source, rows[u], line.index(v, line.index(":")), f"{v!r} is not a clique vertex")
    edges = [(a, b) for a, b in combinations(k_names, 2)]
    edges += [(u, v) for u, nb in nbhds.items() for v in nb]
    return Graph.from_named_edges(names, edges)


def read_graph(path: str, fmt: str = "auto") -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(path, 0, 0, exc.strerror or str(exc)) from None
    if fmt == "auto":
        first = next((ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")), "")
        fmt = "split" if first[:2] in ("E:", "K:") else "graph6"
    if fmt == "split":
        return parse_split_text(text, path)
    for lineno, line in enumerate(text.splitlines(), 1):
        if line.strip():
            try:
                return decode_graph6(line.strip())
            except Graph6Error as exc:
                raise InputError(path, lineno, exc.offset, str(exc).split(": ", 1)[-1]) from None
    raise InputError(path, 1, 0, "no graph6 line found")


def _catalog(path: Optional[str]):
    p = Path(path) if path else default_catalog_path()
    if not p.exists():
        if path:
            raise DependencyError(f"catalog file {p} not found")
        return None
    return load_mined(p)


def _emit(obj, as_json: bool, lines: Sequence[str]) -> None:
    if as_json:
        print(json.dumps(obj, sort_keys=True, indent=1))
    else:
        print("\n".join(lines))


# ---------------------------------------------------------------------------
# commands


def cmd_check(args) -> int:
    g = read_graph(args.graphfile, args.format)
    s = split_partition(g)
    if s is None:
        raise InputError(args.graphfile, 0, 0, "graph is not a split graph")
    out = {
        "graph6": encode_graph6(g),
        "partition": {"K": [g.name(v) for v in s.clique], "E": [g.name(u) for u in s.indep]},
    }
    L = decide_split(s)
    if L is not None:
        if not check_labeling(s, L):
            raise AssertionError("labeling certificate failed re-validation")
        out.update(representable=True, certificate={"labeling": L.to_json(g)})
        _emit(out, args.json, ["YES", "labeling: " + " ".join(L.to_json(g))])
        return 0
    out["representable"] = False
    catalog = _catalog(args.catalog)
    hit = find_witness(s, catalog) if catalog is not None else None
    if hit is not None:
        name, emb = hit
        entry = next(e for e in catalog if e.name == name)
        if not is_induced_embedding(g, entry.graph, emb):
            raise AssertionError("witness embedding failed re-validation")
        out["witness"] = {"name": name, "embedding": [g.name(v) for v in emb]}
        _emit(out, args.json, ["NO", f"witness: {name}", "embedding: " + " ".join(g.name(v) for v in emb)])
    else:
        examined, passing = exhaust_labelings(s)
        if passing:
            raise AssertionError("exhaustive labeling search disagrees with decide_split")
        note = f"exhaustive labeling search: none of the {examined} labelings up to reversal is valid"
        out["note"] = note
        _emit(out, args.json, ["NO", note])
    return 1


def cmd_represents(args) -> int:
    g = read_graph(args.graphfile, args.format)
    try:
        w = [g.index_of(tok) for tok in args.word.split()]
    except KeyError as exc:
        return _fail(f"{args.graphfile}: word letter {exc.args[0]} is not a vertex")
    try:
        ok = represents(w, g)
    except ValueError as exc:
        return _fail(str(exc))
    print("YES" if ok else "NO")
    return 0 if ok else 1


def cmd_findword(args) -> int:
    g = read_graph(args.graphfile, args.format)
    w = find_word(g, args.max_occ)
    if w is None:
        print(f"UNKNOWN within cap {args.max_occ}")
        return 1
    if not represents(w, g):
        raise AssertionError("word certificate failed re-validation")
    print(" ".join(g.name(v) for v in w))
    return 0


def cmd_mine(args) -> int:
    mode = "incremental" if args.incremental else "exhaustive"
    if args.e_max is None and mode == "exhaustive":
        return _fail("mine: --e-max is required unless --incremental is given")
    p = MiningParams(args.e_max, args.k_max, growth_mode=mode, max_vertices=args.max_vertices)
    rep = mine_minimal(p, workers=args.workers)
    if args.out:
        save_mined([s.graph for s in rep.minimal], p.to_dict(), args.out, rep.names)
    data = rep.to_json()
    if args.report:
        Path(args.report).write_text(json.dumps(data, sort_keys=True, indent=1) + "\n")
    lines = [
        f"run {rep.label}: {len(rep.minimal)} minimal non-representable split graphs",
        f"searched: {data['searched_bound']}",
        f"enumerated: {rep.total_enumerated}",
    ]
    lines += [f"{e['name']}: e={e['e']} k={e['k']} {e['graph6']}" for e in data["minimal"]]
    _emit(data, args.json, lines)
    return 0


def cmd_verify(args) -> int:
    path = args.catalog or str(default_catalog_path())
    res = verify_main_theorem(args.k_max, catalog_path=path)
    lines = [
        f"verdict: {res['verdict']}",
        f"searched: {res['searched_bound']}",
        f"checked: {res['total_checked']} graphs " + json.dumps(res["checked_per_k"], sort_keys=True),
        f"counterexamples: {len(res['counterexamples'])}",
    ]
    _emit(res, args.json, lines)
    return 0 if res["verdict"] == "verified" else 1


def cmd_replay(args) -> int:
    res = replay_proof_fixtures(args.fixtures or packaged_fixtures_path(), _catalog(args.catalog))
    lines = [f"{r['caseId']}: {'ok' if r['ok'] else 'FAIL'}" for r in res["results"]]
    for r in res["results"]:
        if not r["ok"] and r["kind"] == "labeling":
            lines += [f"  {v}" for v in r["violations"]]
    lines.append(f"{res['labelings']} labelings, {res['containments']} containment claims, {len(res['failures'])} failures")
    for t, info in res["t_name_candidates"].items():
        extra = f" (not in hosts {', '.join(info['dissenting'])})" if info["dissenting"] else ""
        lines.append(f"{t} -> {' / '.join(info['candidates'])}{extra}")
    _emit(res, args.json, lines)
    return 0 if res["verdict"] == "pass" else 1


def _adjacency(g: Graph) -> list[str]:
    return [f"{g.name(v)}: " + " ".join(g.name(u) for u in g.neighbors(v)) for v in range(g.n)]


def cmd_catalog(args) -> int:
    mined = _catalog(args.catalog) or []
    entries = [load_builtin(n) for n in builtin_names()] + list(mined)
    if args.action == "list":
        rows = [
            {"name": e.name, "provenance": e.provenance, "n": e.graph.n, "m": e.graph.edge_count(), "graph6": encode_graph6(e.graph)}
            for e in entries
        ]
        _emit(rows, args.json, [f"{r['name']:4} {r['provenance']:21} n={r['n']:<3} m={r['m']:<3} {r['graph6']}" for r in rows])
        return 0
    if not args.name:
        return _fail("catalog show: a name is required")
    matches = [e for e in entries if e.name == args.name]
    if not matches:
        raise CatalogNotFound(f"no catalog entry {args.name!r}; have {', '.join(e.name for e in entries)}")
    out, lines = [], []
    for e in matches:
        s = split_partition(e.graph)
        rec = {"name": e.name, "provenance": e.provenance, "note": e.source_note, "graph6": encode_graph6(e.graph), "adjacency": _adjacency(e.graph)}
        if s is not None:
            rec["split"] = split_text(s)
        out.append(rec)
        lines += [f"{e.name} ({e.provenance}) {rec['graph6']}", *_adjacency(e.graph)]
        if s is not None:
            lines += ["", rec["split"]]
    _emit(out, args.json, lines)
    return 0


def cmd_counts(args) -> int:
    res = counts_report(load_reports(args.reports))
    lines = ["|E|  count  |K|  count  difference"]
    lines += [f"{r['E']:>3}  {r['count_E']:>5}  {r['K']:>3}  {r['count_K']:>5}  {r['difference']:>10}" for r in res["rows"]]
    _emit(res, args.json, lines)
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="wordrep", description="Word-representability of split graphs.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_cmd(name, helptext):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--format", choices=["auto", "split", "graph6"], default="auto")
        return p

    p = graph_cmd("check", "decide word-representability of a split graph")
    p.add_argument("graphfile")
    p.add_argument("--json", action="store_true")
    p.add_argument("--catalog", help="forbidden catalog used for witnesses")
    p.set_defaults(func=cmd_check)

    p = graph_cmd("represents", "test whether a word represents a graph")
    p.add_argument("word", help="whitespace-separated vertex names")
    p.add_argument("graphfile")
    p.set_defaults(func=cmd_represents)

    p = graph_cmd("findword", "bounded search for a representing word")
    p.add_argument("graphfile")
    p.add_argument("--max-occ", type=int, default=DEFAULT_MAX_OCCURRENCES)
    p.set_defaults(func=cmd_findword)

    p = sub.add_parser("mine", help="mine minimal non-representable split graphs")
    p.add_argument("--e-max", type=int)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--incremental", action="store_true", help="grow |E| with |K| bounded; adaptive stop without --e-max")
    p.add_argument("--max-vertices", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="write a catalog file")
    p.add_argument("--report", help="write the JSON run report")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_mine)

    p = sub.add_parser("verify", help="check representable <=> no catalog witness on the |E| <= 4 corpus")
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--catalog")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("replay", help="re-check the transcribed labelings and containment claims")
    p.add_argument("--fixtures")
    p.add_argument("--catalog")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("catalog", help="list or show catalog entries")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("name", nargs="?")
    p.add_argument("--catalog")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("counts", help="fixed-|E| versus fixed-|K| counts from saved run reports")
    p.add_argument("--reports", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_counts)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        return _fail(str(exc))
    except Graph6Error as exc:
        return _fail(str(exc))
    except (IntegrityError, FixtureError, CapacityError, DependencyError) as exc:
        return _fail(str(exc))
    except CatalogNotFound as exc:
        return _fail(exc.args[0])
    except json.JSONDecodeError as exc:
        return _fail(f"line {exc.lineno}, byte {exc.pos}: {exc.msg}")
    except ValueError as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    raise SystemExit(main())
