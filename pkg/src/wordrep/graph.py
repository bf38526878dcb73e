"""Undirected simple graphs, split partitions, isomorphism and induced containment.

Graphs store adjacency as one int bitmask per vertex; vertex ids are dense
``0..n-1``.  Everything here is immutable and pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Optional, Sequence


class CapacityError(ValueError):
    """An input exceeds the size guard of an exhaustive search."""


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    adj: tuple[int, ...]
    names: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        n = len(self.adj)
        full = (1 << n) - 1
        for v, m in enumerate(self.adj):
            if m & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if m >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(m):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric on {{{u}, {v}}}")
        if self.names is not None and len(self.names) != n:
            raise ValueError("names must have one entry per vertex")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], names: Optional[Sequence[str]] = None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(tuple(adj), tuple(names) if names is not None else None)

    @classmethod
    def from_named_edges(cls, names: Sequence[str], edges: Iterable[tuple[str, str]]) -> "Graph":
        index = {name: i for i, name in enumerate(names)}
        return cls.from_edges(len(names), ((index[a], index[b]) for a, b in edges), names)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges(n, combinations(range(n), 2))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @property
    def n(self) -> int:
        return len(self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(popcount(m) for m in self.adj) // 2

    def name(self, v: int) -> str:
        return self.names[v] if self.names is not None else str(v)

    def vertex_names(self) -> list[str]:
        return [self.name(v) for v in range(self.n)]

    def index_of(self, name: str) -> int:
        names = self.vertex_names()
        try:
            return names.index(name)
        except ValueError:
            raise KeyError(f"no vertex named {name!r}") from None

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        mask = sum(1 << v for v in vs)
        return all((self.adj[v] | 1 << v) & mask == mask for v in vs)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        mask = sum(1 << v for v in vs)
        return all(self.adj[v] & mask == 0 for v in vs)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced by ``vertices``, renumbered in the given order."""
        pos = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            m = 0
            for u in bits(self.adj[v]):
                if u in pos:
                    m |= 1 << pos[u]
            adj.append(m)
        names = tuple(self.name(v) for v in vertices) if self.names is not None else None
        return Graph(tuple(adj), names)

    def delete(self, v: int) -> "Graph":
        return self.induced([u for u in range(self.n) if u != v])

    def add_vertex(self, neighbors: Iterable[int], name: Optional[str] = None) -> "Graph":
        nb = list(neighbors)
        new = self.n
        adj = list(self.adj)
        m = 0
        for u in nb:
            adj[u] |= 1 << new
            m |= 1 << u
        adj.append(m)
        names = None
        if self.names is not None or name is not None:
            names = tuple(self.vertex_names()) + (name if name is not None else str(new),)
        return Graph(tuple(adj), names)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            adj[perm[v]] = sum(1 << perm[u] for u in bits(self.adj[v]))
        names = None
        if self.names is not None:
            lst = [""] * self.n
            for v in range(self.n):
                lst[perm[v]] = self.names[v]
            names = tuple(lst)
        return Graph(tuple(adj), names)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(tuple(full & ~m & ~(1 << v) for v, m in enumerate(self.adj)), self.names)


@dataclass(frozen=True)
class SplitGraph:
    """A graph together with a clique/independent-set partition whose clique is maximal."""

    graph: Graph
    clique: tuple[int, ...]
    indep: tuple[int, ...]
    _kmask: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        g = self.graph
        if sorted(self.clique + self.indep) != list(range(g.n)):
            raise ValueError("clique and independent set must partition the vertices")
        if not g.is_clique(self.clique):
            raise ValueError("clique vertices are not pairwise adjacent")
        if not g.is_independent(self.indep):
            raise ValueError("independent vertices are not pairwise non-adjacent")
        kmask = sum(1 << v for v in self.clique)
        object.__setattr__(self, "_kmask", kmask)
        for v in self.indep:
            if g.adj[v] & kmask == kmask:
                raise ValueError(f"vertex {g.name(v)} is adjacent to the whole clique (clique not maximal)")

    @property
    def k(self) -> int:
        return len(self.clique)

    @property
    def e(self) -> int:
        return len(self.indep)

    def d_e(self, v: int) -> int:
        """Number of independent-set neighbours of ``v``."""
        return sum(1 for u in self.indep if self.graph.adj[v] >> u & 1)

    def e_mask(self, v: int) -> int:
        """Neighbourhood of clique vertex ``v`` in E, as a bitmask over indices into ``indep``."""
        adj = self.graph.adj[v]
        return sum(1 << i for i, u in enumerate(self.indep) if adj >> u & 1)

    def k_mask(self, u: int) -> int:
        """Neighbourhood of independent vertex ``u`` in K, as a bitmask over indices into ``clique``."""
        adj = self.graph.adj[u]
        return sum(1 << i for i, v in enumerate(self.clique) if adj >> v & 1)

    def e_masks(self) -> list[int]:
        return [self.e_mask(v) for v in self.clique]

    def k_masks(self) -> list[int]:
        return [self.k_mask(u) for u in self.indep]

    @classmethod
    def from_neighborhoods(cls, clique_names: Sequence[str], nbhds: dict[str, Sequence[str]]) -> "SplitGraph":
        """Build from clique names and, per independent vertex, its clique neighbours."""
        names = list(clique_names) + list(nbhds)
        k = len(clique_names)
        edges = list(combinations(range(k), 2))
        idx = {name: i for i, name in enumerate(clique_names)}
        for j, (_, nb) in enumerate(nbhds.items()):
            for name in nb:
                edges.append((k + j, idx[name]))
        g = Graph.from_edges(len(names), edges, names)
        return cls(g, tuple(range(k)), tuple(range(k, len(names))))


def split_partition(g: Graph) -> Optional[SplitGraph]:
    """Split partition with a maximal clique, or ``None`` if ``g`` is not split.

    Uses the degree-sequence test: with degrees sorted non-increasingly and
    ``m = max{i : d_i >= i - 1}``, the graph is split iff
    ``sum_{i<=m} d_i == m(m-1) + sum_{i>m} d_i``; the top ``m`` vertices form
    the clique.
    """
    n = g.n
    if n == 0:
        return SplitGraph(g, (), ())
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    deg = [g.degree(v) for v in order]
    m = max(i for i in range(1, n + 1) if deg[i - 1] >= i - 1)
    if sum(deg[:m]) != m * (m - 1) + sum(deg[m:]):
        return None
    clique = sorted(order[:m])
    indep = sorted(order[m:])
    kmask = sum(1 << v for v in clique)
    for v in list(indep):
        if g.adj[v] & kmask == kmask:
            indep.remove(v)
            clique.append(v)
            kmask |= 1 << v
    clique.sort()
    if not (g.is_clique(clique) and g.is_independent(indep)):
        raise AssertionError("degree-sequence split test produced an invalid partition")
    return SplitGraph(g, tuple(clique), tuple(indep))


def all_split_partitions(s: SplitGraph) -> list[SplitGraph]:
    """Every partition of ``s.graph`` into a maximum clique and an independent set.

    A clique holds at most one independent vertex, so the only other maximum
    cliques are ``{u} + N(u)`` for independent ``u`` missing exactly one clique
    vertex ``v``; the swap is a valid split partition when ``v`` has no
    independent neighbour.
    """
    g = s.graph
    out = [s]
    for u in s.indep:
        missing = [v for v in s.clique if not g.has_edge(u, v)]
        if len(missing) != 1:
            continue
        v = missing[0]
        if s.d_e(v):
            continue
        clique = tuple(sorted(set(s.clique) - {v} | {u}))
        indep = tuple(sorted(set(s.indep) - {u} | {v}))
        out.append(SplitGraph(g, clique, indep))
    return out


def _triangles(g: Graph, v: int) -> int:
    nb = g.adj[v]
    return sum(popcount(g.adj[u] & nb) for u in bits(nb)) // 2


def _embeddings(host: Graph, pattern: Graph, host_class=None, pattern_class=None):
    """Induced embeddings of ``pattern`` into ``host`` in lexicographic order."""
    pn, hn = pattern.n, host.n
    if pn > hn:
        return
    hdeg = [host.degree(v) for v in range(hn)]
    pdeg = [pattern.degree(v) for v in range(pn)]
    cands = []
    for p in range(pn):
        if pattern_class is None:
            c = [h for h in range(hn) if hdeg[h] >= pdeg[p]]
        else:
            c = [h for h in range(hn) if host_class[h] == pattern_class[p]]
        if not c:
            return
        cands.append(c)
    mapping = [0] * pn
    used = 0

    def extend(i):
        nonlocal used
        if i == pn:
            yield tuple(mapping)
            return
        padj = pattern.adj[i]
        for h in cands[i]:
            if used >> h & 1:
                continue
            hadj = host.adj[h]
            ok = True
            for j in range(i):
                if (padj >> j & 1) != (hadj >> mapping[j] & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[i] = h
            used |= 1 << h
            yield from extend(i + 1)
            used &= ~(1 << h)

    yield from extend(0)


def contains_induced(host: Graph, pattern: Graph) -> Optional[tuple[int, ...]]:
    """Lexicographically smallest induced embedding of ``pattern`` in ``host``.

    The result maps pattern vertex ``i`` to host vertex ``emb[i]``.
    """
    return next(_embeddings(host, pattern), None)


def is_induced_embedding(host: Graph, pattern: Graph, emb: Sequence[int]) -> bool:
    if len(emb) != pattern.n or len(set(emb)) != len(emb):
        return False
    return all(
        pattern.has_edge(u, v) == host.has_edge(emb[u], emb[v])
        for u, v in combinations(range(pattern.n), 2)
    )


def _refine_classes(g: Graph) -> list[tuple]:
    base = [(g.degree(v), _triangles(g, v)) for v in range(g.n)]
    # one round of neighbour refinement
    return [(base[v], tuple(sorted(base[u] for u in bits(g.adj[v])))) for v in range(g.n)]


def find_isomorphism(g: Graph, h: Graph) -> Optional[tuple[int, ...]]:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return None
    gc, hc = _refine_classes(g), _refine_classes(h)
    if sorted(gc) != sorted(hc):
        return None
    return next(_embeddings(h, g, hc, gc), None)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def _is_reduced(s: SplitGraph) -> bool:
    kms = s.k_masks()
    if any(popcount(m) < 2 for m in kms) or len(set(kms)) != len(kms):
        return False
    ems = s.e_masks()
    return len(set(ems)) == len(ems)


def is_reduced(s: SplitGraph) -> bool:
    """No E-vertex of degree < 2, no twins on either side (hence at most one empty clique vertex)."""
    return _is_reduced(s)


def reduce(s: SplitGraph) -> SplitGraph:
    """Strip representability-neutral vertices until the graph is in reduced form.

    Removes independent vertices of degree 0 or 1, independent twins, and
    clique vertices whose E-neighbourhood repeats an earlier one (which also
    leaves at most one clique vertex with empty E-neighbourhood).  The
    partition is recomputed after every deletion.
    """
    while True:
        g = s.graph
        victim = None
        for u in s.indep:
            if g.degree(u) <= 1:
                victim = u
                break
        if victim is None:
            seen = {}
            for u in s.indep:
                if g.adj[u] in seen:
                    victim = u
                    break
                seen[g.adj[u]] = u
        if victim is None:
            seen = {}
            for v in s.clique:
                m = s.e_mask(v)
                if m in seen:
                    victim = v
                    break
                seen[m] = v
        if victim is None:
            return s
        s = split_partition(g.delete(victim))


def _perm_tables(size: int) -> tuple[tuple[int, ...], ...]:
    return _perm_tables_cached(size)


@lru_cache(maxsize=None)
def _perm_tables_cached(size: int):
    tables = []
    for p in permutations(range(size)):
        row = []
        for mask in range(1 << size):
            row.append(sum(1 << p[i] for i in bits(mask)))
        tables.append(tuple(row))
    return tuple(tables)


def _side_key(masks: Sequence[int], size: int) -> tuple[int, ...]:
    best = None
    for row in _perm_tables(size):
        cand = tuple(sorted(row[m] for m in masks))
        if best is None or cand < best:
            best = cand
    return best if best is not None else ()


def _partition_key(s: SplitGraph) -> tuple:
    if s.e <= s.k:
        return ("E", _side_key(s.e_masks(), s.e))
    return ("K", _side_key(s.k_masks(), s.k))


def canonical_key_unchecked(s: SplitGraph) -> tuple:
    """Isomorphism-complete key for any split graph (no reduced-form check)."""
    return (s.graph.n, s.k, s.e, min(_partition_key(p) for p in all_split_partitions(s)))


def canonical_key(s: SplitGraph) -> tuple:
    """Comparable key; equal for two reduced split graphs iff they are isomorphic.

    Minimises the sorted multiset of neighbourhood bitmasks of one side over
    all permutations of the other side (E is permuted unless |E| > |K|), and
    over every maximum-clique partition of the graph.
    """
    if not _is_reduced(s):
        raise ValueError("canonical_key requires a split graph in reduced form")
    return canonical_key_unchecked(s)


def delete_vertex(s: SplitGraph, v: int) -> SplitGraph:
    """``s`` minus ``v``, with the partition re-derived."""
    sub = split_partition(s.graph.delete(v))
    assert sub is not None  # induced subgraphs of split graphs are split
    return sub
