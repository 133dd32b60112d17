"""Named tree families and the structural tests for few distinct statuses."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import GraphError
from .graph import Tree, distinct_status_count, metrics

KINDS = (
    "path",
    "star",
    "double_star",
    "balanced_double_star",
    "family_T_star",
    "family_T_double_star",
    "spider",
)


@dataclass(frozen=True)
class FamilySpec:
    """``kind`` plus integer parameters.

    ========================  ============================================
    kind                      params
    ========================  ============================================
    path                      (n,)
    star                      (leaves,)
    double_star               (a, b) pendants on the two ends of K_2
    balanced_double_star      (a,)
    family_T_star             (leaves, b) b pendants on each star leaf
    family_T_double_star      (a, b) b pendants on each leaf of the
                              balanced double star with parameter a
    spider                    leg lengths, at least three legs
    ========================  ============================================
    """

    kind: str
    params: tuple[int, ...]


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


def _double_star_edges(a: int, b: int) -> list[tuple[int, int]]:
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + i) for i in range(b)]
    return edges


def _append_pendants(n: int, edges: list[tuple[int, int]], b: int) -> Tree:
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    out = list(edges)
    nxt = n
    for v in range(n):
        if deg[v] == 1:
            for _ in range(b):
                out.append((v, nxt))
                nxt += 1
    return Tree(nxt, out)


def generate(spec: FamilySpec) -> Tree:
    kind, p = spec.kind, spec.params
    if kind not in KINDS:
        raise GraphError(f"unknown family {kind!r}")
    if kind == "path":
        _need(len(p) == 1 and p[0] >= 1, "path takes n >= 1")
        return Tree(p[0], [(i, i + 1) for i in range(p[0] - 1)])
    if kind == "star":
        _need(len(p) == 1 and p[0] >= 1, "star takes leaves >= 1")
        return Tree(p[0] + 1, [(0, i) for i in range(1, p[0] + 1)])
    if kind == "double_star":
        _need(len(p) == 2 and min(p) >= 1, "double_star takes a, b >= 1")
        return Tree(2 + p[0] + p[1], _double_star_edges(p[0], p[1]))
    if kind == "balanced_double_star":
        _need(len(p) == 1 and p[0] >= 1, "balanced_double_star takes a >= 1")
        return Tree(2 + 2 * p[0], _double_star_edges(p[0], p[0]))
    if kind == "family_T_star":
        _need(len(p) == 2 and p[0] >= 2 and p[1] >= 1, "family_T_star takes leaves >= 2, b >= 1")
        leaves, b = p
        return _append_pendants(leaves + 1, [(0, i) for i in range(1, leaves + 1)], b)
    if kind == "family_T_double_star":
        _need(len(p) == 2 and min(p) >= 1, "family_T_double_star takes a, b >= 1")
        a, b = p
        return _append_pendants(2 + 2 * a, _double_star_edges(a, a), b)
    _need(len(p) >= 3 and min(p) >= 1, "spider takes at least three legs of length >= 1")
    edges = []
    nxt = 1
    for length in p:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Tree(nxt, edges)


def path(n: int) -> Tree:
    return generate(FamilySpec("path", (n,)))


def star(leaves: int) -> Tree:
    return generate(FamilySpec("star", (leaves,)))


def double_star(a: int, b: int) -> Tree:
    return generate(FamilySpec("double_star", (a, b)))


def balanced_double_star(a: int) -> Tree:
    return generate(FamilySpec("balanced_double_star", (a,)))


def family_t_star(leaves: int, b: int) -> Tree:
    return generate(FamilySpec("family_T_star", (leaves, b)))


def family_t_double_star(a: int, b: int) -> Tree:
    return generate(FamilySpec("family_T_double_star", (a, b)))


def spider(*legs: int) -> Tree:
    return generate(FamilySpec("spider", tuple(legs)))


# -- structural classification -----------------------------------------------


class KBound(NamedTuple):
    k: int
    lower_bound: int
    tight: bool

    @property
    def holds(self) -> bool:
        return self.k >= self.lower_bound


def check_k_bound(t: Tree) -> KBound:
    """Distinct status count against ceil((diam + 1) / 2)."""
    k = distinct_status_count(t)
    lb = (metrics(t).diameter + 2) // 2
    return KBound(k, lb, k == lb)


def _leaf_neighbour_counts(t: Tree) -> list[int]:
    return [sum(1 for w in t.adjacency[v] if t.degree(w) == 1) for v in range(t.n)]


def is_star(t: Tree) -> bool:
    """K_{1,s} with s >= 2 (so K_2 does not count)."""
    return t.n >= 3 and max(t.degree(v) for v in range(t.n)) == t.n - 1


def is_balanced_double_star(t: Tree) -> bool:
    inner = [v for v in range(t.n) if t.degree(v) > 1]
    if len(inner) != 2 or not t.has_edge(*inner):
        return False
    return t.degree(inner[0]) == t.degree(inner[1])


def classify_k2(t: Tree) -> bool:
    """Star or balanced double star."""
    return is_star(t) or is_balanced_double_star(t)


def classify_k3(t: Tree) -> bool:
    """Membership in the family built from a star or balanced double star by
    hanging the same number b >= 1 of pendants on each of its leaves.

    Stripping the leaves of such a tree gives back the base exactly, and in
    the original tree every base leaf carries b leaves while no other base
    vertex carries any.
    """
    if t.n < 5:
        return False
    keep = [v for v in range(t.n) if t.degree(v) > 1]
    index = {v: i for i, v in enumerate(keep)}
    base_edges = [(index[u], index[v]) for u, v in t.edges() if u in index and v in index]
    try:
        base = Tree(len(keep), base_edges)
    except GraphError:
        return False
    if not classify_k2(base):
        return False
    hanging = _leaf_neighbour_counts(t)
    pendant_counts = set()
    for v in keep:
        if base.degree(index[v]) == 1:
            pendant_counts.add(hanging[v])
        elif hanging[v]:
            return False
    return len(pendant_counts) == 1 and min(pendant_counts) >= 1
