"""Semi-transitive orientations and the split-graph decision procedures.

Three independent routes decide whether a split graph is semi-transitive
(equivalently word-representable):

* ``exists_semitransitive``: complete search over acyclic orientations,
  checked edge-by-edge for shortcuts;
* ``decide_split``: search over labelings of the clique by ``1..k`` under
  which every independent neighbourhood is an interval or a prefix+suffix and
  the pairwise conditions hold;
* ``validate_split_orientation``: orientation-level classification of
  independent vertices into source/sink/through types.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional, Sequence, Union

from .graph import CapacityError, Graph, SplitGraph, bits, contains_induced, popcount

MAX_PATH_CHECK_VERTICES = 12
MAX_ORIENTATION_SEARCH_VERTICES = 9
MAX_LABELING_CLIQUE = 9


# ---------------------------------------------------------------------------
# orientations


@dataclass(frozen=True)
class Orientation:
    """Direction of every edge of ``base``; ``succ[v]`` is the out-neighbour bitmask of ``v``."""

    base: Graph
    succ: tuple[int, ...]

    def __post_init__(self):
        g = self.base
        if len(self.succ) != g.n:
            raise ValueError("succ must have one entry per vertex")
        for v in range(g.n):
            if self.succ[v] & ~g.adj[v]:
                raise ValueError(f"arc out of vertex {v} is not an edge of the base graph")
        for u, v in g.edges():
            fwd, back = self.succ[u] >> v & 1, self.succ[v] >> u & 1
            if fwd == back:
                raise ValueError(f"edge {{{u}, {v}}} must be oriented exactly once")

    @classmethod
    def _trusted(cls, g: Graph, succ: tuple[int, ...]) -> "Orientation":
        o = object.__new__(cls)
        object.__setattr__(o, "base", g)
        object.__setattr__(o, "succ", succ)
        return o

    @classmethod
    def from_arcs(cls, g: Graph, arcs) -> "Orientation":
        succ = [0] * g.n
        for u, v in arcs:
            succ[u] |= 1 << v
        return cls(g, tuple(succ))

    @classmethod
    def from_order(cls, g: Graph, order: Sequence[int]) -> "Orientation":
        """Orient every edge from the earlier to the later vertex of ``order``."""
        rank = {v: i for i, v in enumerate(order)}
        return cls.from_arcs(g, [(u, v) if rank[u] < rank[v] else (v, u) for u, v in g.edges()])

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.succ[u] >> v & 1)

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.base.n) for v in bits(self.succ[u])]

    def to_json(self) -> list[list[str]]:
        g = self.base
        return [[g.name(u), g.name(v)] for u, v in self.arcs()]


def _is_acyclic(succ: Sequence[int]) -> bool:
    n = len(succ)
    indeg = [0] * n
    for v in range(n):
        for u in bits(succ[v]):
            indeg[u] += 1
    stack = [v for v in range(n) if indeg[v] == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for u in bits(succ[v]):
            indeg[u] -= 1
            if indeg[u] == 0:
                stack.append(u)
    return seen == n


def is_semitransitive_orientation(o: Orientation) -> bool:
    """Acyclic, and every directed path with a chord from its first to last vertex induces a transitive tournament.

    Checked literally: for each arc ``a -> b`` every simple directed path from
    ``a`` to ``b`` with at least two arcs is enumerated.
    """
    n = o.base.n
    if n > MAX_PATH_CHECK_VERTICES:
        raise CapacityError(f"path enumeration is limited to {MAX_PATH_CHECK_VERTICES} vertices, got {n}")
    succ = o.succ
    if not _is_acyclic(succ):
        return False
    for a, b in o.arcs():
        path = [a]

        def walk(v: int) -> bool:
            for u in bits(succ[v]):
                if u in path:
                    continue
                path.append(u)
                if u == b:
                    if len(path) >= 3 and not all(
                        succ[path[i]] >> path[j] & 1 for i, j in combinations(range(len(path)), 2)
                    ):
                        return False
                elif not walk(u):
                    return False
                path.pop()
            return True

        if not walk(a):
            return False
    return True


def clique_is_transitive(o: Orientation, verts: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Topological order ``p_1..p_m`` of the tournament on ``verts``, or ``None`` if it is not transitive."""
    g = o.base
    if not g.is_clique(verts):
        raise ValueError("vertices are not pairwise adjacent")
    mask = sum(1 << v for v in verts)
    outdeg = {v: popcount(o.succ[v] & mask) for v in verts}
    order = sorted(verts, key=lambda v: -outdeg[v])
    m = len(order)
    if sorted(outdeg.values()) != list(range(m)):
        return None
    for i, j in combinations(range(m), 2):
        if not o.has_arc(order[i], order[j]):
            return None
    return tuple(order)


class _ShortcutSearch:
    """Incremental shortcut detection for edge-by-edge orientation search.

    With acyclicity maintained, a shortcut exists iff some directed path of
    at least two arcs from ``a`` to ``b``, with ``a -> b`` present, visits two
    vertices that are non-adjacent in the base graph.  Every such pattern has a
    last-oriented arc, so checking paths through each new arc suffices.
    """

    def __init__(self, g: Graph):
        self.g = g
        self.n = g.n
        self.succ = [0] * g.n
        self.pred = [0] * g.n

    def _is_clique(self, mask: int) -> bool:
        adj = self.g.adj
        for v in bits(mask):
            if (adj[v] | 1 << v) & mask != mask:
                return False
        return True

    def _reaches(self, src: int, dst: int) -> bool:
        seen = 1 << src
        stack = [src]
        succ = self.succ
        while stack:
            v = stack.pop()
            nxt = succ[v] & ~seen
            if nxt >> dst & 1:
                return True
            seen |= nxt
            stack.extend(bits(nxt))
        return False

    def _paths(self, start: int, step) -> list[tuple[int, int]]:
        """(endpoint, vertex mask) of every simple directed path from ``start``."""
        out = [(start, 1 << start)]
        stack = [(start, 1 << start)]
        while stack:
            v, mask = stack.pop()
            for u in bits(step[v] & ~mask):
                item = (u, mask | 1 << u)
                out.append(item)
                stack.append(item)
        return out

    def creates_bad(self, u: int, v: int) -> bool:
        """Would adding ``u -> v`` create a cycle or a shortcut?"""
        if self._reaches(v, u):
            return True
        succ = self.succ
        # u -> v as the chord of a longer path
        for end, mask in self._paths(u, succ):
            if end == v and popcount(mask) >= 3 and not self._is_clique(mask):
                return True
        # u -> v inside a path a ~> u -> v ~> b whose chord a -> b exists
        back = self._paths(u, self.pred)
        fwd = self._paths(v, succ)
        for a, ma in back:
            for b, mb in fwd:
                if a == u and b == v:
                    continue
                if succ[a] >> b & 1 and not self._is_clique(ma | mb):
                    return True
        return False

    def add(self, u: int, v: int) -> None:
        self.succ[u] |= 1 << v
        self.pred[v] |= 1 << u

    def remove(self, u: int, v: int) -> None:
        self.succ[u] &= ~(1 << v)
        self.pred[v] &= ~(1 << u)


def _edge_order(g: Graph) -> list[tuple[int, int]]:
    return sorted(g.edges(), key=lambda e: (max(e), min(e)))


def exists_semitransitive(g: Graph) -> Optional[Orientation]:
    """A semi-transitive orientation of ``g`` if one exists (complete search), else ``None``.

    Orients edges one at a time, backtracking as soon as a cycle or a
    shortcut appears.  Reversing every arc preserves semi-transitivity, so the
    first edge is fixed in one direction.
    """
    if g.n > MAX_ORIENTATION_SEARCH_VERTICES:
        raise CapacityError(f"orientation search is limited to {MAX_ORIENTATION_SEARCH_VERTICES} vertices, got {g.n}")
    edges = _edge_order(g)
    state = _ShortcutSearch(g)

    def rec(i: int) -> bool:
        if i == len(edges):
            return True
        a, b = edges[i]
        for u, v in ((a, b), (b, a)) if i else ((a, b),):
            if state.creates_bad(u, v):
                continue
            state.add(u, v)
            if rec(i + 1):
                return True
            state.remove(u, v)
        return False

    if not rec(0):
        return None
    o = Orientation(g, tuple(state.succ))
    if not is_semitransitive_orientation(o):
        raise AssertionError("orientation search produced a non-semi-transitive orientation")
    return o


def iter_orientations(g: Graph) -> Iterator[Orientation]:
    """All ``2**|E|`` orientations of ``g``."""
    edges = g.edges()
    for code in range(1 << len(edges)):
        succ = [0] * g.n
        for i, (u, v) in enumerate(edges):
            if code >> i & 1:
                succ[v] |= 1 << u
            else:
                succ[u] |= 1 << v
        yield Orientation._trusted(g, tuple(succ))


# ---------------------------------------------------------------------------
# clique labelings


@dataclass(frozen=True)
class CliqueLabeling:
    """``order[i]`` is the clique vertex labelled ``i + 1``."""

    order: tuple[int, ...]

    def pos(self, v: int) -> int:
        return self.order.index(v) + 1

    def reversed(self) -> "CliqueLabeling":
        return CliqueLabeling(tuple(reversed(self.order)))

    def to_json(self, g: Graph) -> list[str]:
        return [g.name(v) for v in self.order]


@dataclass(frozen=True)
class Interval:
    lo: int
    hi: int


@dataclass(frozen=True)
class PrefixSuffix:
    """``[1, a] + [b, k]`` with ``a < b``."""

    a: int
    b: int


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class InvalidShape:
    positions: tuple[int, ...]


Shape = Union[Interval, PrefixSuffix, Empty, InvalidShape]


def classify_positions(positions: Sequence[int], k: int) -> Shape:
    ps = sorted(positions)
    if not ps:
        return Empty()
    if ps[-1] - ps[0] + 1 == len(ps):
        return Interval(ps[0], ps[-1])
    if ps[0] == 1 and ps[-1] == k:
        a = 1
        while a + 1 in ps:
            a += 1
        b = k
        while b - 1 in ps:
            b -= 1
        if a + (k - b + 1) == len(ps):
            return PrefixSuffix(a, b)
    return InvalidShape(tuple(ps))


def _check_labeling(s: SplitGraph, L: CliqueLabeling) -> list[str]:
    if sorted(L.order) != sorted(s.clique):
        raise ValueError("labeling must be a bijection onto the clique")
    g = s.graph
    k = s.k
    pos = {v: i + 1 for i, v in enumerate(L.order)}
    shapes = {}
    problems = []
    for u in s.indep:
        shape = classify_positions([pos[v] for v in s.clique if g.has_edge(u, v)], k)
        if isinstance(shape, InvalidShape):
            problems.append(
                f"N({g.name(u)}) = {list(shape.positions)} is neither an interval [a,b] nor [1,a] + [b,{k}]"
            )
        shapes[u] = shape
    for u in s.indep:
        for v in s.indep:
            if u == v:
                continue
            su, sv = shapes[u], shapes[v]
            if isinstance(su, Interval) and isinstance(sv, PrefixSuffix):
                if not (su.lo > sv.a or su.hi < sv.b):
                    problems.append(
                        f"interval N({g.name(u)}) = [{su.lo},{su.hi}] vs N({g.name(v)}) = [1,{sv.a}] + [{sv.b},{k}]: "
                        f"need a1 > a2 or b1 < b2"
                    )
            elif isinstance(su, PrefixSuffix) and isinstance(sv, PrefixSuffix) and u < v:
                if not (sv.a < su.b and su.a < sv.b):
                    problems.append(
                        f"N({g.name(u)}) = [1,{su.a}] + [{su.b},{k}] vs N({g.name(v)}) = [1,{sv.a}] + [{sv.b},{k}]: "
                        f"need a2 < b1 and a1 < b2"
                    )
    return problems


def labeling_violations(s: SplitGraph, L: CliqueLabeling) -> list[str]:
    """Human-readable list of the labeling conditions that ``L`` violates."""
    return _check_labeling(s, L)


def check_labeling(s: SplitGraph, L: CliqueLabeling) -> bool:
    return not _check_labeling(s, L)


def _masks_ok(k: int, masks: Sequence[int]) -> bool:
    """Full labeling check on position bitmasks (bit ``i`` = label ``i + 1``)."""
    full = (1 << k) - 1
    ivs = []
    pss = []
    for m in masks:
        if m == 0:
            continue
        low = (m & -m).bit_length()
        high = m.bit_length()
        if m == ((1 << high) - 1) ^ ((1 << (low - 1)) - 1):
            ivs.append((low, high))
            continue
        gap = full & ~m
        glow = (gap & -gap).bit_length()
        ghigh = gap.bit_length()
        if m & 1 and m >> (k - 1) & 1 and gap == ((1 << ghigh) - 1) ^ ((1 << (glow - 1)) - 1):
            pss.append((glow - 1, ghigh + 1))
        else:
            return False
    for a2, b2 in pss:
        for a1, b1 in ivs:
            if not (a1 > a2 or b1 < b2):
                return False
    for i in range(len(pss)):
        a1, b1 = pss[i]
        for j in range(i + 1, len(pss)):
            a2, b2 = pss[j]
            if not (a2 < b1 and a1 < b2):
                return False
    return True


def decide_masks(k: int, nbhds: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Core of ``decide_split`` on clique-index bitmasks.

    ``nbhds[j]`` is the set of clique indices adjacent to independent vertex
    ``j``.  Returns the first labeling (as a tuple of clique indices, label 1
    first) in lexicographic order with ``order[0] < order[-1]``.
    Partial labelings are cut as soon as some neighbourhood's membership
    sequence changes value more than twice.
    """
    nb = [m for m in nbhds if m]
    order: list[int] = []
    # per neighbourhood: (changes so far, last bit)
    state = [(0, -1)] * len(nb)
    placed = 0

    def rec() -> bool:
        nonlocal placed
        depth = len(order)
        if depth == k:
            if k > 1 and order[0] > order[-1]:
                return False
            pmasks = []
            for m in nb:
                pm = 0
                for p, v in enumerate(order):
                    if m >> v & 1:
                        pm |= 1 << p
                pmasks.append(pm)
            return _masks_ok(k, pmasks)
        for v in range(k):
            if placed >> v & 1:
                continue
            saved = state[:]
            ok = True
            for j, m in enumerate(nb):
                bit = m >> v & 1
                ch, last = state[j]
                if last != -1 and bit != last:
                    ch += 1
                    if ch > 2:
                        ok = False
                        break
                state[j] = (ch, bit)
            if ok:
                order.append(v)
                placed |= 1 << v
                if rec():
                    return True
                placed &= ~(1 << v)
                order.pop()
            state[:] = saved
        return False

    if rec():
        return tuple(order)
    return None


def decide_split(s: SplitGraph) -> Optional[CliqueLabeling]:
    """A clique labeling certifying semi-transitivity, or ``None`` if none exists."""
    k = s.k
    if k > MAX_LABELING_CLIQUE:
        raise CapacityError(f"labeling search is limited to |K| <= {MAX_LABELING_CLIQUE}, got {k}")
    found = decide_masks(k, s.k_masks())
    if found is None:
        return None
    L = CliqueLabeling(tuple(s.clique[i] for i in found))
    if not check_labeling(s, L):
        raise AssertionError("labeling search returned a labeling that fails check_labeling")
    return L


def exhaust_labelings(s: SplitGraph) -> tuple[int, int]:
    """Check every labeling with ``order[0] < order[-1]``; return ``(examined, passing)``.

    No partial pruning: this is the literal ``k!/2`` scan.
    """
    from itertools import permutations

    examined = passing = 0
    for perm in permutations(s.clique):
        if len(perm) > 1 and perm[0] > perm[-1]:
            continue
        examined += 1
        if check_labeling(s, CliqueLabeling(perm)):
            passing += 1
    return examined, passing


# ---------------------------------------------------------------------------
# orientation-level validator for split graphs


@dataclass(frozen=True)
class TypeA:
    """Source whose neighbourhood is ``p_lo..p_hi`` (``lo > hi`` encodes an isolated vertex)."""

    lo: int
    hi: int


@dataclass(frozen=True)
class TypeB:
    """Sink whose neighbourhood is ``p_lo..p_hi``."""

    lo: int
    hi: int


@dataclass(frozen=True)
class TypeC:
    """In-arcs from ``p_1..p_i``, out-arcs to ``p_j..p_m``."""

    i: int
    j: int


@dataclass(frozen=True)
class Invalid:
    reason: str


VertexType = Union[TypeA, TypeB, TypeC, Invalid]


def _clique_path(s: SplitGraph, o: Orientation) -> tuple[int, ...]:
    p = clique_is_transitive(o, s.clique)
    if p is None:
        raise ValueError("clique is not transitively oriented")
    return p


def _classify(s: SplitGraph, o: Orientation, v: int, pos: dict[int, int]) -> VertexType:
    g = s.graph
    m = len(pos)
    ins = sorted(pos[u] for u in s.clique if o.has_arc(u, v))
    outs = sorted(pos[u] for u in s.clique if o.has_arc(v, u))
    if not ins and not outs:
        return TypeA(1, 0)
    if not ins or not outs:
        ps = outs or ins
        if ps[-1] - ps[0] + 1 != len(ps):
            return Invalid(f"{'source' if not ins else 'sink'} {g.name(v)} has non-consecutive neighbours {ps}")
        return TypeA(ps[0], ps[-1]) if not ins else TypeB(ps[0], ps[-1])
    if ins != list(range(1, len(ins) + 1)):
        return Invalid(f"in-neighbours of {g.name(v)} at {ins} are not a prefix of the clique path")
    if outs != list(range(m - len(outs) + 1, m + 1)):
        return Invalid(f"out-neighbours of {g.name(v)} at {outs} are not a suffix of the clique path")
    return TypeC(len(ins), m - len(outs) + 1)


def classify_vertex(s: SplitGraph, o: Orientation, v: int) -> VertexType:
    p = _clique_path(s, o)
    if v not in s.indep:
        raise ValueError("classify_vertex expects an independent-set vertex")
    return _classify(s, o, v, {u: i + 1 for i, u in enumerate(p)})


def check_type_c_constraints(s: SplitGraph, o: Orientation, types: dict[int, VertexType]) -> bool:
    """For every type-C vertex, no other vertex may straddle its boundary pair ``p_i, p_j``."""
    p = _clique_path(s, o)
    g = s.graph
    for x, tx in types.items():
        if not isinstance(tx, TypeC):
            continue
        lo_v, hi_v = p[tx.i - 1], p[tx.j - 1]
        for y, ty in types.items():
            if y == x:
                continue
            if isinstance(ty, (TypeA, TypeB)):
                if g.has_edge(y, lo_v) and g.has_edge(y, hi_v):
                    return False
            elif isinstance(ty, TypeC):
                # I_y = p_1..p_{i'} holds both iff j <= i'; O_y = p_{j'}..p_m iff i >= j'
                if tx.j <= ty.i or tx.i >= ty.j:
                    return False
    return True


def validate_split_orientation(s: SplitGraph, o: Orientation) -> bool:
    if o.base != s.graph:
        raise ValueError("orientation is for a different graph")
    p = clique_is_transitive(o, s.clique)
    if p is None:
        return False
    pos = {u: i + 1 for i, u in enumerate(p)}
    types = {v: _classify(s, o, v, pos) for v in s.indep}
    if any(isinstance(t, Invalid) for t in types.values()):
        return False
    return check_type_c_constraints(s, o, types)


# ---------------------------------------------------------------------------
# comparability


def _transitive_search(g: Graph) -> Optional[list[int]]:
    edges = _edge_order(g)
    succ = [0] * g.n
    pred = [0] * g.n
    adj = g.adj

    def consistent(u: int, v: int) -> bool:
        # x -> u -> v needs x -> v; u -> v -> y needs u -> y
        for x in bits(pred[u]):
            if not adj[x] >> v & 1 or succ[v] >> x & 1:
                return False
        for y in bits(succ[v]):
            if not adj[u] >> y & 1 or succ[y] >> u & 1:
                return False
        return True

    def rec(i: int) -> bool:
        if i == len(edges):
            return True
        a, b = edges[i]
        for u, v in ((a, b), (b, a)) if i else ((a, b),):
            if not consistent(u, v):
                continue
            succ[u] |= 1 << v
            pred[v] |= 1 << u
            if rec(i + 1):
                return True
            succ[u] &= ~(1 << v)
            pred[v] &= ~(1 << u)
        return False

    return succ if rec(0) else None


def is_transitive_orientation(o: Orientation) -> bool:
    succ = o.succ
    for u in range(o.base.n):
        for v in bits(succ[u]):
            if succ[v] & ~succ[u]:
                return False
    return True


def is_comparability(g: Graph) -> Optional[Orientation]:
    """A transitive orientation of ``g`` (complete search), or ``None``."""
    if g.n > MAX_ORIENTATION_SEARCH_VERTICES:
        raise CapacityError(f"comparability search is limited to {MAX_ORIENTATION_SEARCH_VERTICES} vertices, got {g.n}")
    succ = _transitive_search(g)
    if succ is None:
        return None
    o = Orientation(g, tuple(succ))
    if not is_transitive_orientation(o):
        raise AssertionError("comparability search produced a non-transitive orientation")
    return o


def is_split_comparability(s: SplitGraph) -> bool:
    """True iff none of the three split comparability obstructions is induced in ``s``."""
    from .catalog import load_builtin

    return all(contains_induced(s.graph, load_builtin(name).graph) is None for name in ("B1", "B2", "B3"))


def wr_via_universal(g: Graph) -> Optional[bool]:
    """Word-representability via a universal vertex ``x``: holds iff ``g - x`` is a comparability graph."""
    for v in range(g.n):
        if g.degree(v) == g.n - 1:
            return is_comparability(g.delete(v)) is not None
    return None
