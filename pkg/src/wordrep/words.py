"""Alternation in words and word-representants of graphs."""

from __future__ import annotations

from itertools import combinations
from typing import Optional, Sequence

from .graph import CapacityError, Graph

Word = tuple[int, ...]

MAX_FIND_WORD_VERTICES = 8
DEFAULT_MAX_OCCURRENCES = 3


def alternates(w: Sequence[int], x: int, y: int) -> bool:
    """True iff the projection of ``w`` onto ``{x, y}`` has no two equal adjacent letters.

    Projections of length 0 or 1 alternate vacuously.
    """
    if x == y:
        raise ValueError("alternation needs two distinct letters")
    last = None
    for ch in w:
        if ch == x or ch == y:
            if ch == last:
                return False
            last = ch
    return True


def _check_alphabet(w: Sequence[int], g: Graph) -> None:
    letters = set(w)
    verts = set(range(g.n))
    missing, extra = verts - letters, letters - verts
    if missing or extra:
        parts = []
        if missing:
            parts.append("missing " + ", ".join(g.name(v) for v in sorted(missing)))
        if extra:
            parts.append("extra " + ", ".join(map(str, sorted(extra, key=str))))
        raise ValueError("word alphabet does not match the vertex set: " + "; ".join(parts))


def represents(w: Sequence[int], g: Graph) -> bool:
    _check_alphabet(w, g)
    return all(alternates(w, x, y) == g.has_edge(x, y) for x, y in combinations(range(g.n), 2))


def find_word(g: Graph, max_occurrences: int = DEFAULT_MAX_OCCURRENCES) -> Optional[Word]:
    """First representing word (shortest, then lexicographic) using each letter at most ``max_occurrences`` times.

    ``None`` only says no such word exists within the cap.
    """
    n = g.n
    if n > MAX_FIND_WORD_VERTICES:
        raise CapacityError(f"find_word is limited to {MAX_FIND_WORD_VERTICES} vertices, got {n}")
    if max_occurrences < 1:
        raise ValueError("max_occurrences must be positive")
    if n == 0:
        return ()
    adj = g.adj
    full = (1 << n) - 1
    nonadj = [full & ~adj[v] & ~(1 << v) for v in range(n)]

    for length in range(n, n * max_occurrences + 1):
        word = [0] * length
        count = [0] * n
        # since_last[v]: letters written after the latest copy of v
        since_last = [0] * n
        # broken[v]: non-neighbours u whose projection with v already repeats a letter
        broken = [0] * n

        def dfs(i: int, unused: int) -> bool:
            if i == length:
                return unused == 0 and all(broken[v] == nonadj[v] for v in range(n))
            if length - i < unused:
                return False
            for x in range(n):
                c = count[x]
                if c == max_occurrences:
                    continue
                if c and since_last[x] & adj[x] != adj[x]:
                    continue
                saved_since = since_last[:]
                # non-neighbours absent since the previous x now project to "..xx.."
                newly = nonadj[x] & ~since_last[x] & ~broken[x] if c else 0
                for y in range(n):
                    since_last[y] |= 1 << x
                since_last[x] = 0
                count[x] = c + 1
                broken[x] |= newly
                for y in _iter_bits(newly):
                    broken[y] |= 1 << x
                word[i] = x
                if dfs(i + 1, unused - (c == 0)):
                    return True
                count[x] = c
                broken[x] &= ~newly
                for y in _iter_bits(newly):
                    broken[y] &= ~(1 << x)
                since_last[:] = saved_since
            return False

        if dfs(0, n):
            return tuple(word)
    return None


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
