from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import to_nx, trees
from treestatus.errors import CapExceeded
from treestatus.families import path, star
from treestatus.graph import Tree, status_sequence
from treestatus.oracle import (
    BACKEND_CAPS,
    canonical_form,
    enumerate_free_trees,
    is_isomorphic,
    prufer_decode,
    realize_exhaustive,
    rooted_encoding,
    status_unique_in_trees,
)

# OEIS A000055, cross-checked below against networkx's generator
COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159]


@pytest.mark.parametrize("n", range(1, 15))
def test_wrom_counts(n):
    forms = {canonical_form(t) for t in enumerate_free_trees(n)}
    assert len(forms) == COUNTS[n - 1]
    assert sum(1 for _ in enumerate_free_trees(n)) == COUNTS[n - 1]


@pytest.mark.parametrize("n", range(2, 11))
def test_counts_match_networkx(n):
    assert sum(1 for _ in nx.nonisomorphic_trees(n)) == COUNTS[n - 1]


@pytest.mark.parametrize("backend", ["grow", "prufer"])
@pytest.mark.parametrize("n", range(1, 10))
def test_backends_agree(backend, n):
    a = sorted(canonical_form(t) for t in enumerate_free_trees(n))
    b = sorted(canonical_form(t) for t in enumerate_free_trees(n, backend))
    assert a == b


def test_enumeration_errors():
    with pytest.raises(ValueError):
        enumerate_free_trees(0)
    with pytest.raises(ValueError):
        enumerate_free_trees(5, "nope")
    with pytest.raises(CapExceeded):
        enumerate_free_trees(BACKEND_CAPS["prufer"] + 1, "prufer")


def test_canonical_form_examples():
    assert canonical_form(path(4)) == canonical_form(Tree(4, [(2, 0), (0, 3), (3, 1)]))
    assert canonical_form(path(4)) != canonical_form(star(3))
    assert canonical_form(Tree(1, [])) == canonical_form(Tree(1, []))
    # rooted encodings distinguish roots of the same tree
    p3 = path(3)
    assert rooted_encoding(p3, 0) != rooted_encoding(p3, 1)
    assert rooted_encoding(p3, 0) == rooted_encoding(p3, 2)


def test_prufer_decode_known_code():
    # code (3, 3, 3) is the star centred at 3
    t = prufer_decode([3, 3, 3], 5)
    assert t.degree(3) == 4


@settings(max_examples=200, deadline=None)
@given(trees(max_n=18), st.randoms(use_true_random=False))
def test_canonical_form_invariant_under_relabelling(t, rnd):
    perm = list(range(t.n))
    rnd.shuffle(perm)
    u = t.relabel(perm)
    assert canonical_form(u) == canonical_form(t)
    assert is_isomorphic(t, u)


@settings(max_examples=200, deadline=None)
@given(trees(max_n=11), trees(max_n=11))
def test_canonical_form_agrees_with_networkx(a, b):
    same = a.n == b.n and nx.is_isomorphic(to_nx(a), to_nx(b))
    assert (canonical_form(a) == canonical_form(b)) == same


def test_realize_exhaustive_examples():
    got = realize_exhaustive([4, 4, 6, 6])
    assert len(got) == 1 and is_isomorphic(got[0], path(4))
    assert realize_exhaustive([5, 4, 3]) == []
    assert realize_exhaustive([]) == []
    with pytest.raises(CapExceeded):
        realize_exhaustive([0] * 17)


def _nx_shared(n: int) -> int:
    by_seq: dict[tuple[int, ...], int] = {}
    for h in nx.nonisomorphic_trees(n):
        seq = tuple(sorted(sum(d.values()) for _, d in nx.all_pairs_shortest_path_length(h)))
        by_seq[seq] = by_seq.get(seq, 0) + 1
    return sum(1 for c in by_seq.values() if c > 1)


def test_smallest_shared_sequence_is_on_ten_vertices():
    for n in range(2, 10):
        assert _nx_shared(n) == 0
    assert _nx_shared(10) == 1
    by_seq: dict[tuple[int, ...], list[Tree]] = {}
    for t in enumerate_free_trees(10):
        by_seq.setdefault(tuple(status_sequence(t)), []).append(t)
    shared = [(s, ts) for s, ts in by_seq.items() if len(ts) > 1]
    assert len(shared) == 1
    seq, ts = shared[0]
    assert len(realize_exhaustive(list(seq))) == len(ts) == 2
    assert not status_unique_in_trees(ts[0])
    assert len(set(seq)) < 10


def test_status_unique_examples():
    assert status_unique_in_trees(path(6))
    assert status_unique_in_trees(star(5))
    rng = random.Random(3)
    for n in range(1, 10):
        trees_n = list(enumerate_free_trees(n))
        t = rng.choice(trees_n)
        expected = sum(1 for u in trees_n if status_sequence(u) == status_sequence(t)) == 1
        assert status_unique_in_trees(t) == expected
