from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import nx_statuses, to_nx, trees
from treestatus.errors import GraphError
from treestatus.families import (
    FamilySpec,
    balanced_double_star,
    check_k_bound,
    classify_k2,
    classify_k3,
    double_star,
    family_t_double_star,
    family_t_star,
    generate,
    path,
    spider,
    star,
)
from treestatus.graph import distinct_status_count, metrics
from treestatus.oracle import enumerate_free_trees, is_isomorphic, status_unique_in_trees
from treestatus.partitions import orbit_partition

import networkx as nx


def test_generator_examples():
    assert is_isomorphic(balanced_double_star(1), path(4))
    assert is_isomorphic(family_t_star(2, 1), path(5))
    ds = double_star(1, 2)
    assert ds.n == 5 and len(set(nx_statuses(ds))) >= 4
    assert family_t_star(3, 2).n == 10
    assert spider(1, 1, 2).n == 5
    assert generate(FamilySpec("path", (1,))).n == 1


def test_generator_sizes():
    assert family_t_double_star(2, 3).n == 6 + 4 * 3
    assert star(4).n == 5


@pytest.mark.parametrize(
    "family",
    [
        FamilySpec("path", (0,)),
        FamilySpec("star", ()),
        FamilySpec("double_star", (0, 1)),
        FamilySpec("family_T_star", (1, 1)),
        FamilySpec("spider", (1, 2)),
        FamilySpec("wheel", (5,)),
    ],
)
def test_generator_rejects_bad_params(family):
    with pytest.raises(GraphError):
        generate(family)


def test_k_bound_examples():
    assert tuple(check_k_bound(path(5))) == (3, 3, True)
    assert tuple(check_k_bound(star(4))) == (2, 2, True)
    assert check_k_bound(family_t_star(3, 2)).holds


@pytest.mark.parametrize("n", range(1, 16))
def test_path_status_count(n):
    assert distinct_status_count(path(n)) == (n + 1) // 2


def test_classify_k2_examples():
    assert classify_k2(star(3)) and distinct_status_count(star(3)) == 2
    assert classify_k2(path(4)) and distinct_status_count(path(4)) == 2
    assert not classify_k2(double_star(1, 2)) and distinct_status_count(double_star(1, 2)) > 2
    assert not classify_k2(path(2))  # K2 has a single status value


def test_classify_k3_examples():
    assert classify_k3(path(5)) and distinct_status_count(path(5)) == 3
    assert not classify_k3(star(3))
    t = family_t_star(3, 2)
    assert classify_k3(t) and distinct_status_count(t) == 3
    assert classify_k3(family_t_double_star(2, 1))


@pytest.mark.parametrize(
    "t",
    [family_t_star(2, 1), family_t_star(3, 2), family_t_star(5, 1), family_t_double_star(1, 1), family_t_double_star(3, 2)],
)
def test_family_members_have_three_orbits(t):
    assert len(orbit_partition(t).partition) == 3
    assert distinct_status_count(t) == 3
    assert classify_k3(t)


@settings(max_examples=200, deadline=None)
@given(trees(max_n=20))
def test_bound_holds_on_random_trees(t):
    kb = check_k_bound(t)
    h = to_nx(t)
    diam = nx.diameter(h) if t.n > 1 else 0
    assert kb.lower_bound == -(-(diam + 1) // 2)
    assert kb.k == len(set(nx_statuses(t))) >= kb.lower_bound


@settings(max_examples=200, deadline=None)
@given(trees(max_n=20))
def test_characterizations_on_random_trees(t):
    k = distinct_status_count(t)
    assert classify_k2(t) == (k == 2)
    assert classify_k3(t) == (k == 3)


def test_diameter_five_k3_trees_classified():
    # family members built on a balanced double star have diameter 5
    for a in range(1, 4):
        for b in range(1, 4):
            t = family_t_double_star(a, b)
            assert metrics(t).diameter == 5
            assert classify_k3(t) and distinct_status_count(t) == 3


def _leg_partitions(total: int, parts: int, largest: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for x in range(min(total, largest), 0, -1):
        for rest in _leg_partitions(total - x, parts - 1, x):
            yield (x, *rest)


@pytest.mark.parametrize("n", range(4, 13))
def test_spiders_are_status_unique(n):
    for parts in range(3, n):
        for legs in _leg_partitions(n - 1, parts, n - 1):
            assert status_unique_in_trees(spider(*legs)), legs


def test_k3_characterization_exhaustive_small():
    for n in range(1, 11):
        for t in enumerate_free_trees(n):
            k = distinct_status_count(t)
            assert classify_k2(t) == (k == 2)
            assert classify_k3(t) == (k == 3)
