"""Set families over a small ground set, canonicalised under permutations of the ground set.

A split graph is stored as a family of subsets of one side: either the
E-neighbourhoods of the clique vertices (subsets of E), or the
K-neighbourhoods of the independent vertices (subsets of K).  A family of
subsets of ``[s]`` is an int with bit ``m`` set when subset ``m`` is a member,
so up to ``s = 6`` a family fits a ``uint64``.  Canonical form is the minimum
over all ``s!`` relabelings, computed in bulk with numpy byte tables.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Sequence

import numpy as np

from .graph import Graph, SplitGraph, bits

MAX_GROUND = 6
_CHUNK = 1 << 14


@lru_cache(maxsize=None)
def _tables(size: int) -> np.ndarray:
    """``T[p, b, byte]``: image of family byte ``b`` with value ``byte`` under permutation ``p``."""
    if size > MAX_GROUND:
        raise ValueError(f"ground sets above {MAX_GROUND} do not fit a 64-bit family")
    nsub = 1 << size
    nbytes = max(1, nsub // 8)
    perms = list(permutations(range(size)))
    sub_img = np.zeros((len(perms), nsub), dtype=np.uint64)
    for pi, p in enumerate(perms):
        for m in range(nsub):
            sub_img[pi, m] = sum(1 << p[i] for i in bits(m))
    T = np.zeros((len(perms), nbytes, 256), dtype=np.uint64)
    for b in range(nbytes):
        for val in range(256 if nsub >= 8 else 1 << nsub):
            for pi in range(len(perms)):
                acc = 0
                for i in bits(val):
                    m = b * 8 + i
                    acc |= 1 << int(sub_img[pi, m])
                T[pi, b, val] = acc
    return T


def canon_many(fams: Sequence[int] | np.ndarray, size: int) -> np.ndarray:
    """Canonical forms of many families over ``[size]``."""
    fams = np.asarray(fams, dtype=np.uint64)
    if fams.size == 0:
        return fams
    T = _tables(size)
    nbytes = T.shape[1]
    out = np.empty_like(fams)
    for start in range(0, fams.size, _CHUNK):
        chunk = fams[start:start + _CHUNK]
        best = None
        for b in range(nbytes):
            byte = ((chunk >> np.uint64(8 * b)) & np.uint64(255)).astype(np.intp)
            img = T[:, b, byte]
            best = img if best is None else best | img
        out[start:start + _CHUNK] = best.min(axis=0)
    return out


def canon(fam: int, size: int) -> int:
    return int(canon_many([fam], size)[0])


def members(fam: int) -> list[int]:
    return bits(int(fam))


def family_of(masks: Iterable[int]) -> int:
    f = 0
    for m in masks:
        f |= 1 << m
    return f


def transpose(masks: Sequence[int], size: int) -> list[int]:
    """Swap sides: given each row's subset of ``[size]``, return each column's subset of rows."""
    cols = [0] * size
    for r, m in enumerate(masks):
        for c in bits(m):
            cols[c] |= 1 << r
    return cols


def split_from_e_family(fam: int, e: int) -> SplitGraph:
    """Clique vertices first (ascending E-mask), then E vertices ``e0..``."""
    kmasks = members(fam)
    return split_from_masks(kmasks, e)


def split_from_masks(kmasks: Sequence[int], e: int) -> SplitGraph:
    k = len(kmasks)
    n = k + e
    edges = list(combinations(range(k), 2))
    for i, m in enumerate(kmasks):
        for j in bits(m):
            edges.append((i, k + j))
    names = [f"k{i}" for i in range(k)] + [f"e{j}" for j in range(e)]
    g = Graph.from_edges(n, edges, names)
    return SplitGraph(g, tuple(range(k)), tuple(range(k, n)))


def split_from_k_family(fam: int, k: int) -> SplitGraph:
    """Independent vertices given as subsets of ``[k]``."""
    emasks = members(fam)
    return split_from_masks(transpose(emasks, k), len(emasks))
