"""Named forbidden graphs: hard-coded obstructions plus mined catalog files.

Catalog file layout: a one-line JSON header
``{"version", "params", "count", "checksum", "names"}`` followed by one
graph6 line per entry.  The checksum is the SHA-256 of the graph6 lines
joined by newlines.
"""

from __future__ import annotations

import hashlib
import json
import os
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .graph import Graph, SplitGraph, contains_induced, is_isomorphic
from .graph6 import Graph6Error, decode_graph6, encode_graph6

CATALOG_VERSION = 1
CATALOG_ENV = "WORDREP_CATALOG"
PACKAGED_CATALOG = "catalog_e4_k7.json"


class CatalogNotFound(KeyError):
    pass


class IntegrityError(ValueError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: Graph
    provenance: str  # "builtin-paper-figure" or "mined"
    source_note: str = ""


_BUILTIN_EDGES = {
    "B1": ("abcdef", ["ac", "bd", "cd", "ce", "de", "ef"]),
    "B2": ("abcdef", ["ab", "bc", "ad", "df", "fe", "ec", "de", "db", "be"]),
    "B3": ("abcdefg", ["ef", "fg", "ec", "cf", "fd", "dg", "cd", "bd", "ac"]),
}


def _d1() -> Graph:
    clique = ["1", "2", "3", "4", "5", "6"]
    nbhds = {"a": ["1", "3", "5"], "b": ["1", "2"], "c": ["3", "4"], "d": ["5", "6"]}
    return SplitGraph.from_neighborhoods(clique, nbhds).graph


def builtin_names() -> list[str]:
    return ["B1", "B2", "B3", "D1"]


def load_builtin(name: str) -> CatalogEntry:
    if name == "D1":
        return CatalogEntry("D1", _d1(), "builtin-paper-figure", "ten-vertex graph: K6 on 1..6, a~1,3,5, b~1,2, c~3,4, d~5,6")
    if name not in _BUILTIN_EDGES:
        raise CatalogNotFound(f"unknown catalog entry {name!r}; valid names: {', '.join(builtin_names())}")
    verts, edges = _BUILTIN_EDGES[name]
    g = Graph.from_named_edges(list(verts), [(e[0], e[1]) for e in edges])
    return CatalogEntry(name, g, "builtin-paper-figure", "split comparability obstruction")


def _natural_key(name: str):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", name)]


def _checksum(lines: Sequence[str]) -> str:
    return hashlib.sha256("\n".join(lines).encode("ascii")).hexdigest()


def name_mined(graphs: Sequence[Graph]) -> list[str]:
    """``D1`` for the graph isomorphic to the built-in D1, ``M1..`` for the rest in the given order."""
    d1 = _d1()
    names = []
    i = 0
    for g in graphs:
        if is_isomorphic(g, d1):
            names.append("D1")
        else:
            i += 1
            names.append(f"M{i}")
    return names


def dumps_catalog(graphs: Sequence[Graph], params: dict, names: Optional[Sequence[str]] = None) -> str:
    lines = [encode_graph6(g) for g in graphs]
    if names is None:
        names = name_mined(graphs)
    header = {
        "version": CATALOG_VERSION,
        "params": params,
        "count": len(lines),
        "checksum": _checksum(lines),
        "names": list(names),
    }
    return json.dumps(header, sort_keys=True) + "\n" + "".join(line + "\n" for line in lines)


def save_mined(graphs: Sequence[Graph], params: dict, path, names: Optional[Sequence[str]] = None) -> None:
    Path(path).write_text(dumps_catalog(graphs, params, names))


def loads_catalog(text: str, source: str = "<catalog>") -> list[CatalogEntry]:
    lines = text.splitlines()
    if not lines:
        raise IntegrityError(f"{source}: empty catalog file")
    try:
        header = json.loads(lines[0])
    except json.JSONDecodeError as exc:
        raise IntegrityError(f"{source}: line 1, byte {exc.pos}: bad JSON header: {exc.msg}") from None
    for key in ("version", "params", "count", "checksum", "names"):
        if key not in header:
            raise IntegrityError(f"{source}: header is missing {key!r}")
    if header["version"] != CATALOG_VERSION:
        raise IntegrityError(f"{source}: unsupported catalog version {header['version']}")
    body = [ln.strip() for ln in lines[1:] if ln.strip()]
    if len(body) != header["count"] or len(header["names"]) != header["count"]:
        raise IntegrityError(f"{source}: header declares {header['count']} graphs, file has {len(body)}")
    if _checksum(body) != header["checksum"]:
        raise IntegrityError(f"{source}: checksum mismatch")
    note = "mined with " + json.dumps(header["params"], sort_keys=True)
    entries = []
    for lineno, (name, line) in enumerate(zip(header["names"], body), 2):
        try:
            g = decode_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(str(exc).split(": ", 1)[1], exc.offset, lineno) from None
        entries.append(CatalogEntry(name, g, "mined", note))
    return entries


def load_mined(path) -> list[CatalogEntry]:
    return loads_catalog(Path(path).read_text(), str(path))


def catalog_params(path) -> dict:
    return json.loads(Path(path).read_text().splitlines()[0])["params"]


def packaged_catalog_path() -> Path:
    return Path(str(resources.files("wordrep") / "data" / PACKAGED_CATALOG))


def default_catalog_path() -> Path:
    env = os.environ.get(CATALOG_ENV)
    return Path(env) if env else packaged_catalog_path()


def forbidden_catalog() -> list[CatalogEntry]:
    """The frozen catalog of minimal non-word-representable split graphs with |E| <= 4."""
    return load_mined(default_catalog_path())


def find_witness(s, catalog: Iterable[CatalogEntry]) -> Optional[tuple[str, tuple[int, ...]]]:
    """First entry (by natural name order) induced in ``s``, with its embedding."""
    host = s.graph if isinstance(s, SplitGraph) else s
    for entry in sorted(catalog, key=lambda e: _natural_key(e.name)):
        emb = contains_induced(host, entry.graph)
        if emb is not None:
            return entry.name, emb
    return None
