from __future__ import annotations

from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from networkx.algorithms.isomorphism import GraphMatcher

from conftest import nx_statuses, to_nx, trees
from treestatus.errors import GraphError
from treestatus.families import star
from treestatus.graph import (
    Graph,
    Tree,
    all_pairs_distances,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
)
from treestatus.oracle import enumerate_free_trees, rooted_encoding
from treestatus.partitions import (
    Partition,
    distance_partition,
    generate_Gm,
    gm_partition,
    gm_vertex,
    is_distance_mean_regular,
    is_equitable,
    is_equitable_by_reconstruction,
    orbit_partition,
    prop45_report,
    quotient_matrix,
    refines,
    status_partition,
)

G3 = generate_Gm(3)


def _nx_orbits(g: Graph) -> tuple[set[frozenset[int]], int]:
    """Orbits and group order by listing every automorphism with VF2."""
    h = to_nx(g)
    images: dict[int, set[int]] = {v: set() for v in range(g.n)}
    order = 0
    for iso in GraphMatcher(h, h).isomorphisms_iter():
        order += 1
        for v, w in iso.items():
            images[v].add(w)
    return {frozenset(s) for s in images.values()}, order


def _parts(p: Partition) -> set[frozenset[int]]:
    return {frozenset(x) for x in p}


def P4():
    return Graph(4, path_graph(4).edges())


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition.of([[0], []])
    with pytest.raises(ValueError):
        Partition.of([[0, 1]]).validate(3)
    assert Partition.of([[2, 1], [0]]).parts == ((0,), (1, 2))


def test_status_partition_examples():
    assert _parts(status_partition(path_graph(4))) == {frozenset({1, 2}), frozenset({0, 3})}
    assert len(status_partition(cycle_graph(5))) == 1


def test_status_partition_g3():
    sp = status_partition(G3)
    s = nx_statuses(G3)
    # the parts are exactly the classes of equal independently computed status
    assert len(sp) == len(set(s))
    assert _parts(sp) != _parts(gm_partition(3))
    assert s[gm_vertex(3, "B", 0, 0)] != s[gm_vertex(3, "B", 0, 1)]
    assert not refines(sp, gm_partition(3))
    assert not refines(gm_partition(3), sp)


def test_orbit_examples():
    o = orbit_partition(P4())
    assert _parts(o.partition) == {frozenset({0, 3}), frozenset({1, 2})} and o.order == 2
    g3 = orbit_partition(G3)
    assert len(g3.partition) == 20 and g3.order == 1
    assert orbit_partition(petersen_graph()).order == 120


@pytest.mark.parametrize(
    "g",
    [cycle_graph(5), cycle_graph(6), complete_graph(4), P4(), petersen_graph(), G3, Graph(5, star(4).edges())],
    ids=["C5", "C6", "K4", "P4", "Petersen", "G3", "K1,4"],
)
def test_search_orbits_match_vf2(g):
    got = orbit_partition(g, method="search")
    orbits, order = _nx_orbits(g)
    assert _parts(got.partition) == orbits
    assert got.order == order


@settings(max_examples=150, deadline=None)
@given(trees(max_n=16))
def test_tree_orbits_match_search_and_rooted_forms(t):
    by_tree = orbit_partition(t, method="tree")
    by_search = orbit_partition(t, method="search")
    # u and v share an orbit iff the tree rooted at u is isomorphic to it rooted at v
    forms: dict[object, set[int]] = {}
    for v in range(t.n):
        forms.setdefault(rooted_encoding(t, v), set()).add(v)
    expected = {frozenset(x) for x in forms.values()}
    assert _parts(by_tree.partition) == _parts(by_search.partition) == expected
    assert by_tree.order == by_search.order
    if t.n <= 8:
        assert by_tree.order == _nx_orbits(t)[1]


def test_orbit_method_errors():
    with pytest.raises(GraphError):
        orbit_partition(cycle_graph(5), method="tree")
    with pytest.raises(ValueError):
        orbit_partition(cycle_graph(5), method="magic")


def test_distance_partition_examples():
    s = star(4)
    assert distance_partition(s, 0).parts == ((0,), (1, 2, 3, 4))
    assert len(distance_partition(path_graph(5), 0)) == 5
    assert [len(p) for p in distance_partition(cycle_graph(6), 2)] == [1, 2, 2, 1]


def test_quotient_examples():
    d = all_pairs_distances(P4())
    single = Partition.of([[v] for v in range(4)])
    assert [[int(x) for x in row] for row in quotient_matrix(P4(), single, "distance").rows] == d
    one = Partition.of([range(5)])
    assert quotient_matrix(cycle_graph(5), one, "distance").rows == ((Fraction(6),),)
    q = quotient_matrix(G3, gm_partition(3), "adjacency").rows
    assert q == tuple(tuple(Fraction(x) for x in r) for r in [(0, 9, 0, 0), (1, 2, 1, 0), (0, 1, 2, 1), (0, 0, 9, 0)])


def test_g3_equitability():
    p = gm_partition(3)
    assert is_equitable(G3, p, "adjacency")
    assert not is_equitable(G3, p, "distance")
    d = all_pairs_distances(G3)
    A = [gm_vertex(3, "A", i, j) for i in range(3) for j in range(3)]
    b00, b01 = gm_vertex(3, "B", 0, 0), gm_vertex(3, "B", 0, 1)
    assert sum(1 for w in A if d[b00][w] == 2) == 4
    assert sum(1 for w in A if d[b01][w] == 2) == 3
    for g in (G3, P4(), cycle_graph(6)):
        single = Partition.of([[v] for v in range(g.n)])
        assert is_equitable(g, single, "adjacency") and is_equitable(g, single, "distance")


def test_generate_gm_counts():
    assert (G3.n, G3.edge_count) == (20, 45)
    assert G3.labels[0] == "a" and G3.labels[-1] == "b"
    h = to_nx(generate_Gm(4))
    assert h.number_of_nodes() == 34 and nx.is_connected(h)
    with pytest.raises(GraphError):
        generate_Gm(2)


def test_refines_examples():
    fine = Partition.of([[0], [1], [2, 3]])
    coarse = Partition.of([[0, 1], [2, 3]])
    assert refines(fine, coarse) and not refines(coarse, fine)
    assert refines(coarse, coarse)


def _random_partition(draw, n):
    labels = draw(st.lists(st.integers(0, 3), min_size=n, max_size=n))
    groups: dict[int, list[int]] = {}
    for v, lab in enumerate(labels):
        groups.setdefault(lab, []).append(v)
    return Partition.of(groups.values())


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_equitable_implementations_agree(data):
    g = data.draw(st.sampled_from([cycle_graph(6), P4(), petersen_graph(), G3, complete_graph(4)]) | trees(max_n=9))
    p = _random_partition(data.draw, g.n)
    for base in ("adjacency", "distance"):
        assert is_equitable(g, p, base) == is_equitable_by_reconstruction(g, p, base)
    assert is_equitable(g, status_partition(g), "adjacency") == is_equitable_by_reconstruction(g, status_partition(g))


@settings(max_examples=150, deadline=None)
@given(trees(max_n=14))
def test_quotient_row_sums_are_statuses(t):
    sp = status_partition(t)
    q = quotient_matrix(t, sp, "distance")
    s = nx_statuses(t)
    for part, row in zip(sp, q.rows):
        assert sum(row) == s[part[0]]
    one = Partition.of([range(t.n)])
    assert quotient_matrix(t, one, "distance").rows[0][0] == Fraction(sum(s), t.n)


def test_prop45_examples():
    c6 = prop45_report(cycle_graph(6))
    assert c6.all_match and c6.status_partition_equitable and c6.pairs_checked == 15
    p4 = prop45_report(P4())
    assert p4.all_match and p4.status_partition_equitable
    g3 = prop45_report(G3)
    assert g3.consistent


@pytest.mark.parametrize(
    "g, expected",
    [(cycle_graph(5), True), (complete_graph(4), True), (cycle_graph(6), True), (petersen_graph(), True),
     (path_graph(3), False), (P4(), False)],
    ids=["C5", "K4", "C6", "Petersen", "P3", "P4"],
)
def test_distance_mean_regular(g, expected):
    assert is_distance_mean_regular(g) == expected


def test_orbits_refine_status_on_all_small_trees():
    for n in range(1, 10):
        for t in enumerate_free_trees(n):
            o = orbit_partition(t)
            assert refines(o.partition, status_partition(t))
            if len(status_partition(t)) == n:
                assert len(o.partition) == n and o.order == 1


@settings(max_examples=100, deadline=None)
@given(trees(max_n=30))
def test_injective_trees_are_asymmetric(t):
    o = orbit_partition(t)
    assert refines(o.partition, status_partition(t))
    if len(set(nx_statuses(t))) == t.n:
        assert o.order == 1


def test_prop45_consistent_on_corpus():
    from treestatus.checks import partition_corpus

    for name, g in partition_corpus(9):
        rep = prop45_report(g)
        assert rep.consistent, name
        if is_distance_mean_regular(g):
            assert rep.all_match and rep.status_partition_equitable, name
