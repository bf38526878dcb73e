from __future__ import annotations

from itertools import permutations

from hypothesis import given, settings
from hypothesis import strategies as st

from wordrep.families import canon, canon_many, family_of, members, split_from_k_family, split_from_masks, transpose
from wordrep.graph import bits


def brute_canon(fam: int, size: int) -> int:
    best = None
    for p in permutations(range(size)):
        img = family_of(sum(1 << p[i] for i in bits(m)) for m in members(fam))
        best = img if best is None else min(best, img)
    return best


@given(st.integers(1, 4).flatmap(lambda s: st.tuples(st.just(s), st.integers(0, (1 << (1 << s)) - 1))))
@settings(max_examples=300, deadline=None)
def test_canon_matches_brute_force(args):
    size, fam = args
    assert canon(fam, size) == brute_canon(fam, size)


def test_canon_many_vectorised():
    fams = [0b0110, 0b1010, 0b1100]
    assert list(canon_many(fams, 2)) == [canon(f, 2) for f in fams]


def test_transpose_involution():
    rows = [0b011, 0b110]
    assert transpose(transpose(rows, 3), 2) == rows


def test_split_constructors_agree():
    s = split_from_masks([0b01, 0b11, 0b10], 2)
    t = split_from_k_family(family_of(s.k_masks()), 3)
    assert sorted(s.graph.edges()) == sorted(t.graph.edges())
