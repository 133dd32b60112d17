"""Brute-force ground truth over all free trees of small order.

Three independent enumeration backends are provided so they can check
each other:

* ``"wrom"`` - successor generation of level sequences rooted at the
  centre (Wright, Richmond, Odlyzko and McKay). Lazy, constant amortised
  time per tree; the default.
* ``"grow"`` - every tree on n vertices is a tree on n - 1 vertices plus
  a leaf; extend each representative at every vertex and deduplicate by
  canonical form.
* ``"prufer"`` - decode Pruefer sequences and deduplicate. Only sequences
  whose label multiplicities are nonincreasing in the label are decoded;
  relabelling by degree shows every isomorphism class has such a code.
"""

from __future__ import annotations

import heapq
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import CapExceeded
from .graph import Tree, _bfs_order, metrics, status_sequence

CanonicalForm = tuple[int, ...]

BACKEND_CAPS = {"wrom": 20, "grow": 14, "prufer": 10}
EXHAUSTIVE_CAP = 16


# -- canonical forms ---------------------------------------------------------


def rooted_encoding(t: Tree, root: int) -> CanonicalForm:
    """Integer encoding of ``t`` rooted at ``root``; equal iff rooted-isomorphic.

    Bottom-up by depth: each vertex gets the sorted tuple of its children's
    ids, and the distinct tuples at a depth are ranked to give the ids for
    the level above. The encoding lists every level's sorted tuples.
    """
    order, parent = _bfs_order(t, root)
    depth = {root: 0}
    levels: list[list[int]] = [[root]]
    for v in order[1:]:
        d = depth[parent[v]] + 1
        depth[v] = d
        if d == len(levels):
            levels.append([])
        levels[d].append(v)
    child_ids: dict[int, list[int]] = {v: [] for v in order}
    out = [t.n, len(levels)]
    for d in range(len(levels) - 1, -1, -1):
        keys = {v: tuple(sorted(child_ids[v])) for v in levels[d]}
        ranked = {k: i for i, k in enumerate(sorted(set(keys.values())))}
        out.append(len(levels[d]))
        for k in sorted(keys.values()):
            out.append(len(k))
            out.extend(k)
        for v, k in keys.items():
            if v != root:
                child_ids[parent[v]].append(ranked[k])
    return tuple(out)


def canonical_form(t: Tree) -> CanonicalForm:
    """Encoding at the centre; for two centres, the smaller of both rootings."""
    return min(rooted_encoding(t, c) for c in metrics(t).center)


def is_isomorphic(t1: Tree, t2: Tree) -> bool:
    return t1.n == t2.n and canonical_form(t1) == canonical_form(t2)


# -- level-sequence successor generation --------------------------------------


def _next_rooted(levels: list[int], p: int | None = None) -> list[int] | None:
    """Next rooted tree in reverse lexicographic level-sequence order."""
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = list(levels)
    shift = p - q
    for i in range(p, len(out)):
        out[i] = out[i - shift]
    return out


def _split(levels: list[int]) -> tuple[list[int], list[int]]:
    """Split off the first principal subtree: (that subtree, the remainder)."""
    second = next((i for i in range(2, len(levels)) if levels[i] == 1), len(levels))
    left = [x - 1 for x in levels[1:second]]
    rest = [0] + levels[second:]
    return left, rest


def _next_free(levels: list[int]) -> list[int]:
    """Advance to the next level sequence that is centre-rooted and canonical."""
    left, rest = _split(levels)
    lh, rh = max(left), max(rest)
    ok = rh >= lh
    if ok and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            ok = False
    if ok:
        return levels
    p = len(left)
    nxt = _next_rooted(levels, p)
    if levels[p] > 2:
        new_left, _ = _split(nxt)
        tail = list(range(1, max(new_left) + 2))
        nxt[-len(tail):] = tail
    return nxt


def _levels_to_tree(levels: Sequence[int]) -> Tree:
    stack: list[int] = []
    edges = []
    for v, lev in enumerate(levels):
        del stack[lev:]
        if stack:
            edges.append((stack[-1], v))
        stack.append(v)
    return Tree(len(levels), edges)


def _wrom(n: int) -> Iterator[Tree]:
    if n <= 2:
        yield Tree(n, [(0, 1)] if n == 2 else [])
        return
    levels: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        levels = _next_free(levels)
        yield _levels_to_tree(levels)
        levels = _next_rooted(levels)


# -- leaf growth --------------------------------------------------------------


@lru_cache(maxsize=None)
def _grown(n: int) -> tuple[Tree, ...]:
    if n == 1:
        return (Tree(1, []),)
    found: dict[CanonicalForm, Tree] = {}
    for t in _grown(n - 1):
        base = t.edges()
        for v in range(t.n):
            child = Tree(n, base + [(v, n - 1)])
            found.setdefault(canonical_form(child), child)
    return tuple(found[k] for k in sorted(found))


# -- Pruefer codes ------------------------------------------------------------


def prufer_decode(code: Sequence[int], n: int) -> Tree:
    degree = [1] * n
    for x in code:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Tree(n, edges)


def _count_vectors(total: int, parts: int, cap: int) -> Iterator[list[int]]:
    """Nonincreasing vectors of ``parts`` nonnegative ints, entries <= cap, summing to total."""
    if parts == 0:
        if total == 0:
            yield []
        return
    for first in range(min(total, cap), -1, -1):
        if first * parts < total:
            break
        for rest in _count_vectors(total - first, parts - 1, first):
            yield [first] + rest


def _arrangements(counts: list[int], length: int) -> Iterator[list[int]]:
    """All distinct sequences using symbol ``v`` exactly ``counts[v]`` times."""
    seq = [0] * length

    def rec(pos: int) -> Iterator[list[int]]:
        if pos == length:
            yield list(seq)
            return
        for v, c in enumerate(counts):
            if c:
                counts[v] -= 1
                seq[pos] = v
                yield from rec(pos + 1)
                counts[v] += 1

    yield from rec(0)


def _prufer(n: int) -> list[Tree]:
    if n <= 2:
        return [Tree(n, [(0, 1)] if n == 2 else [])]
    found: dict[CanonicalForm, Tree] = {}
    for counts in _count_vectors(n - 2, n, n - 2):
        for code in _arrangements(counts, n - 2):
            t = prufer_decode(code, n)
            found.setdefault(canonical_form(t), t)
    return [found[k] for k in sorted(found)]


# -- public API ---------------------------------------------------------------


def enumerate_free_trees(n: int, backend: str = "wrom") -> Iterator[Tree]:
    """Yield one tree per isomorphism class on ``n`` vertices."""
    if backend not in BACKEND_CAPS:
        raise ValueError(f"unknown backend {backend!r}")
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > BACKEND_CAPS[backend]:
        raise CapExceeded(f"backend {backend!r} is capped at n={BACKEND_CAPS[backend]}")
    if backend == "wrom":
        return _wrom(n)
    if backend == "grow":
        return iter(_grown(n))
    return iter(_prufer(n))


@lru_cache(maxsize=None)
def _sequence_index(n: int) -> dict[tuple[int, ...], tuple[Tree, ...]]:
    index: dict[tuple[int, ...], list[Tree]] = {}
    for t in enumerate_free_trees(n):
        index.setdefault(tuple(status_sequence(t)), []).append(t)
    return {k: tuple(v) for k, v in index.items()}


def _check_cap(n: int) -> None:
    if n > EXHAUSTIVE_CAP:
        raise CapExceeded(f"exhaustive search is capped at n={EXHAUSTIVE_CAP}")


def realize_exhaustive(seq: Sequence[int]) -> list[Tree]:
    """All pairwise non-isomorphic trees whose status sequence is ``seq``."""
    n = len(seq)
    if n == 0:
        return []
    _check_cap(n)
    return list(_sequence_index(n).get(tuple(sorted(seq)), ()))


def status_unique_in_trees(t: Tree) -> bool:
    _check_cap(t.n)
    same = _sequence_index(t.n)[tuple(status_sequence(t))]
    form = canonical_form(t)
    return all(canonical_form(other) == form for other in same)
