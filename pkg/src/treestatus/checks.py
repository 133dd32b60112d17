"""Desk-scale verification sweeps, one per structural claim.

Each check enumerates all free trees up to ``max_n`` (or a fixed corpus)
and returns a :class:`CheckResult`; nothing here raises on a failed claim.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable

from .families import check_k_bound, classify_k2, classify_k3, path, star
from .graph import (
    Graph,
    Tree,
    complete_graph,
    cycle_graph,
    distinct_status_count,
    edge_split,
    median_path_is_increasing,
    path_graph,
    petersen_graph,
    status_sequence,
    tree_statuses,
)
from .hardness import (
    ThreePartitionInstance,
    brute_force_3partition,
    build_gadget_tree,
    extract_partition,
    pad_instance,
    reduce_3partition,
)
from .oracle import canonical_form, enumerate_free_trees
from .partitions import generate_Gm, orbit_partition, refines, status_partition
from .realize import realize_injective
from .srtd3 import srt_d3_realize
from .errors import NotRealizable

FREE_TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106,
                    11: 235, 12: 551, 13: 1301, 14: 3159, 15: 7741, 16: 19320}


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int
    summary: str
    failures: list[str] = field(default_factory=list)

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.summary}"


def _trees(max_n: int):
    for n in range(1, max_n + 1):
        yield from enumerate_free_trees(n)


def _edges_str(t: Tree) -> str:
    return " ".join(f"{u}-{v}" for u, v in t.edges()) or "K1"


def check_k_bound_sweep(max_n: int = 12) -> CheckResult:
    failures, checked = [], 0
    for t in _trees(max_n):
        checked += 1
        if not check_k_bound(t).holds:
            failures.append(_edges_str(t))
    for n in range(1, max_n + 1):
        if not check_k_bound(path(n)).tight:
            failures.append(f"P_{n} not tight")
    for leaves in range(2, max_n):
        if not check_k_bound(star(leaves)).tight:
            failures.append(f"K_1,{leaves} not tight")
    return CheckResult("k-bound", not failures, checked,
                       f"all trees n <= {max_n} satisfy k >= ceil((diam+1)/2); paths and stars attain it"
                       if not failures else f"{len(failures)} violations", failures)


def _characterization(name: str, k: int, classify: Callable[[Tree], bool], max_n: int) -> CheckResult:
    failures, checked, members = [], 0, 0
    for t in _trees(max_n):
        checked += 1
        structural = classify(t)
        members += structural
        if structural != (distinct_status_count(t) == k):
            failures.append(_edges_str(t))
    return CheckResult(name, not failures, checked,
                       f"k(T) = {k} iff structural test, {members} members among {checked} trees n <= {max_n}"
                       if not failures else f"{len(failures)} counterexamples", failures)


def check_k2(max_n: int = 12) -> CheckResult:
    return _characterization("k2-char", 2, classify_k2, max_n)


def check_k3(max_n: int = 12) -> CheckResult:
    return _characterization("k3-char", 3, classify_k3, max_n)


def check_injective_unique(max_n: int = 10) -> CheckResult:
    """Enumeration counts, roundtrip of every injective tree, no shared injective sequences."""
    failures, checked, injective = [], 0, 0
    for n in range(1, max_n + 1):
        by_seq: dict[tuple[int, ...], list] = defaultdict(list)
        count = 0
        for t in enumerate_free_trees(n):
            count += 1
            checked += 1
            seq = status_sequence(t)
            if len(set(seq)) != n:
                continue
            injective += 1
            form = canonical_form(t)
            by_seq[tuple(seq)].append(form)
            try:
                rebuilt = realize_injective(seq).tree
            except NotRealizable as exc:
                failures.append(f"{_edges_str(t)}: {exc}")
                continue
            if canonical_form(rebuilt) != form:
                failures.append(f"{_edges_str(t)}: rebuilt a different tree")
        if n in FREE_TREE_COUNTS and count != FREE_TREE_COUNTS[n]:
            failures.append(f"n={n}: enumerated {count} trees, expected {FREE_TREE_COUNTS[n]}")
        for seq, forms in by_seq.items():
            if len(set(forms)) > 1:
                failures.append(f"sequence {seq} shared by {len(set(forms))} trees")
    return CheckResult("injective-unique", not failures, checked,
                       f"{injective} injective trees among {checked} (n <= {max_n}) rebuilt uniquely"
                       if not failures else f"{len(failures)} failures", failures)


def partition_corpus(max_n: int = 9) -> list[tuple[str, Graph]]:
    corpus: list[tuple[str, Graph]] = []
    for n in range(1, max_n + 1):
        for i, t in enumerate(enumerate_free_trees(n)):
            corpus.append((f"tree{n}.{i}", t))
    corpus += [
        ("C5", cycle_graph(5)),
        ("C6", cycle_graph(6)),
        ("K4", complete_graph(4)),
        ("P4", Graph(4, path_graph(4).edges())),
        ("Petersen", petersen_graph()),
        ("G3", generate_Gm(3)),
    ]
    return corpus


def check_orbit_refines_status(max_n: int = 9) -> CheckResult:
    failures, checked = [], 0
    for name, g in partition_corpus(max_n):
        checked += 1
        orbits = orbit_partition(g).partition
        if not refines(orbits, status_partition(g)):
            failures.append(f"{name}: orbit partition does not refine status partition")
        if distinct_status_count(g) == g.n and len(orbits) != g.n:
            failures.append(f"{name}: injective but has a nontrivial automorphism")
    return CheckResult("orbit-refines-status", not failures, checked,
                       f"orbits refine statuses on {checked} graphs; injective graphs are asymmetric"
                       if not failures else f"{len(failures)} failures", failures)


def check_edge_split(max_n: int = 10) -> CheckResult:
    failures, checked = [], 0
    for t in _trees(max_n):
        s = tree_statuses(t)
        for u, v in t.edges():
            for a, b in ((u, v), (v, u)):
                checked += 1
                size_a, size_b = edge_split(t, (a, b))
                if s[a] - s[b] != size_b - size_a:
                    failures.append(f"{_edges_str(t)} edge {a}-{b}")
    return CheckResult("edge-split", not failures, checked,
                       f"s(v1) - s(v2) = |T2| - |T1| on {checked} oriented edges"
                       if not failures else f"{len(failures)} violations", failures)


def check_median_monotone(max_n: int = 10) -> CheckResult:
    failures, checked = [], 0
    for t in _trees(max_n):
        checked += 1
        if not median_path_is_increasing(t):
            failures.append(_edges_str(t))
    return CheckResult("median-monotone", not failures, checked,
                       f"statuses increase away from the median in all {checked} trees n <= {max_n}"
                       if not failures else f"{len(failures)} violations", failures)


def random_yes_instance(rng: random.Random, m: int, low: int = 20, high: int = 40) -> ThreePartitionInstance:
    """Yes-instance with B/4 < a_i < B/2, drawn by splitting B into three parts."""
    while True:
        B = rng.randint(low, high)
        elems = []
        for _ in range(m):
            while True:
                x = rng.randint(B // 4 + 1, (B - 1) // 2)
                y = rng.randint(B // 4 + 1, (B - 1) // 2)
                z = B - x - y
                if 4 * z > B and 2 * z < B:
                    elems += [x, y, z]
                    break
        rng.shuffle(elems)
        inst = ThreePartitionInstance(elems)
        if inst.in_window():
            return inst


def check_reduction_roundtrip(seed: int = 0, samples: int = 4) -> CheckResult:
    """Gadget statuses match the closed forms; extraction and the solver close the loop."""
    rng = random.Random(seed)
    failures, checked = [], 0
    instances = [ThreePartitionInstance([5, 6, 7]), ThreePartitionInstance([5, 6, 7, 5, 6, 7])]
    instances += [random_yes_instance(rng, rng.randint(1, 3)) for _ in range(samples)]
    for inst in instances:
        checked += 1
        part = brute_force_3partition(inst)
        if part is None:
            failures.append(f"{inst.elements}: brute force found no partition")
            continue
        red = reduce_3partition(inst)
        tree = build_gadget_tree(inst, part)
        if status_sequence(tree) != red.sequence():
            failures.append(f"{inst.elements}: gadget statuses differ from closed forms")
            continue
        got = extract_partition(tree, inst)
        if any(sum(inst.elements[i] for i in t) != inst.target for t in got):
            failures.append(f"{inst.elements}: extracted triples do not sum to B")
        try:
            solved = srt_d3_realize(red.sequence(), inst.m)
        except NotRealizable:
            failures.append(f"{inst.elements}: solver missed the gadget")
            continue
        if status_sequence(solved) != red.sequence():
            failures.append(f"{inst.elements}: solver output has the wrong sequence")
    no = pad_instance(ThreePartitionInstance([5, 5, 5, 5, 5, 7]))
    checked += 1
    if brute_force_3partition(no) is not None:
        failures.append("padded {5,5,5,5,5,7} unexpectedly solvable")
    else:
        try:
            srt_d3_realize(reduce_3partition(no).sequence(), 2)
            failures.append("padded {5,5,5,5,5,7}: solver found a realization")
        except NotRealizable:
            pass
    return CheckResult("reduction-roundtrip", not failures, checked,
                       f"{checked} instances: closed forms, extraction and solver agree"
                       if not failures else f"{len(failures)} failures", failures)


CHECKS: dict[str, Callable[..., CheckResult]] = {
    "k-bound": check_k_bound_sweep,
    "k2-char": check_k2,
    "k3-char": check_k3,
    "injective-unique": check_injective_unique,
    "orbit-refines-status": check_orbit_refines_status,
    "edge-split": check_edge_split,
    "median-monotone": check_median_monotone,
    "reduction-roundtrip": check_reduction_roundtrip,
}
