"""Realize a status sequence by a tree of depth at most 3 whose root has bounded degree.

A realization is rooted at a vertex ``r`` of eccentricity <= 3 with at
most ``delta`` neighbours ``I``. Below each ``i`` in ``I`` hang
(i, j)-branches: a vertex of status ``s_j`` plus its leaf children. The
edge-split identity fixes everything about a branch from ``(n, s_i, s_j)``,
so a realization is a choice of branch counts ``x[c, j]`` per root
neighbour ``c``, found by an exact integer search.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import gcd
from typing import Iterator, Sequence

from .errors import NotRealizable
from .graph import Tree, tree_statuses


@dataclass(frozen=True)
class BranchProfile:
    s_i: int
    s_j: int
    leaf_status: int
    leaf_count: int

    def coefficients(self) -> Counter:
        """Number of vertices of each status in one branch (i itself excluded)."""
        c = Counter({self.s_j: 1})
        if self.leaf_count:
            c[self.leaf_status] += self.leaf_count
        return c

    @property
    def size(self) -> int:
        return 1 + self.leaf_count


def branch_profile(n: int, s_i: int, s_j: int) -> BranchProfile | None:
    """Profile of a branch with statuses ``s_i`` above ``s_j``; None if impossible.

    Across edge (i, j) the status rises by n - 2*size(j); across a leaf edge
    it rises by n - 2.
    """
    diff = n - s_j + s_i
    if diff % 2 or diff < 2:
        return None
    return BranchProfile(s_i, s_j, s_j + n - 2, diff // 2 - 1)


@dataclass(frozen=True)
class CenterConfig:
    n: int
    root_status: int
    neighbor_statuses: tuple[int, ...]

    def subtree_size(self, s_i: int) -> int:
        """Vertices in the subtree of a root neighbour of status ``s_i`` (itself included)."""
        return (self.n + self.root_status - s_i) // 2


@dataclass
class FeasibilitySystem:
    """Equality system ``sum_v coeff[row][v] * x[v] == rhs[row]``, x >= 0 integral.

    Variables are ``(c, s_j)``: the number of branches with middle status
    ``s_j`` under the ``c``-th root neighbour. Rows are one multiplicity
    constraint per status value outside ``{r} + I``, one subtree-size
    constraint per root neighbour, and one root-status constraint.
    """

    config: CenterConfig
    variables: list[tuple[int, int]]
    profiles: list[BranchProfile]
    row_names: list[str]
    coeffs: list[list[int]]
    rhs: list[int]
    remaining: Counter = field(default_factory=Counter)


class ConfigError(ValueError):
    """A centre configuration is inconsistent with the sequence."""


def build_system(seq: Sequence[int], config: CenterConfig) -> FeasibilitySystem:
    n = len(seq)
    if config.n != n:
        raise ConfigError("config order differs from sequence length")
    remaining = Counter(seq)
    for s in (config.root_status, *config.neighbor_statuses):
        if remaining[s] <= 0:
            raise ConfigError(f"status {s} does not occur often enough in the sequence")
        remaining[s] -= 1
    remaining = +remaining
    sizes = []
    for s_i in config.neighbor_statuses:
        total = n + config.root_status - s_i
        if total % 2 or total < 2:
            raise ConfigError(f"no root neighbour of status {s_i} is possible")
        sizes.append(total // 2)

    variables: list[tuple[int, int]] = []
    profiles: list[BranchProfile] = []
    for c, s_i in enumerate(config.neighbor_statuses):
        for s_j in sorted(remaining):
            p = branch_profile(n, s_i, s_j)
            if p is None or p.size > sizes[c] - 1:
                continue
            if p.leaf_count and p.leaf_status not in remaining:
                continue
            variables.append((c, s_j))
            profiles.append(p)

    row_names: list[str] = []
    coeffs: list[list[int]] = []
    rhs: list[int] = []
    for ell in sorted(remaining):
        row_names.append(f"count[{ell}]")
        coeffs.append([p.coefficients()[ell] for p in profiles])
        rhs.append(remaining[ell])
    for c, size in enumerate(sizes):
        row_names.append(f"size[{c}]")
        coeffs.append([p.size if v[0] == c else 0 for v, p in zip(variables, profiles)])
        rhs.append(size - 1)
    # root status = sum of depths; depth-1 vertices contribute len(I)
    row_names.append("root")
    coeffs.append([2 + 3 * p.leaf_count for p in profiles])
    rhs.append(config.root_status - len(config.neighbor_statuses))
    return FeasibilitySystem(config, variables, profiles, row_names, coeffs, rhs, remaining)


def iter_solutions(sys: FeasibilitySystem) -> Iterator[list[int]]:
    """All nonnegative integer solutions in lexicographic order.

    Depth-first over variables with values in increasing order. Each
    variable is bounded by its tightest row; a branch is cut when some
    row's residual is not a multiple of the gcd of that row's remaining
    coefficients (which also covers parity and "nothing left to fill").
    """
    nv = len(sys.variables)
    rows = range(len(sys.rhs))
    if any(r < 0 for r in sys.rhs):
        return
    # suffix_gcd[row][t] = gcd of coeffs[row][t:]
    suffix_gcd = []
    for row in rows:
        g = [0] * (nv + 1)
        for t in range(nv - 1, -1, -1):
            g[t] = gcd(g[t + 1], sys.coeffs[row][t])
        suffix_gcd.append(g)
    residual = list(sys.rhs)
    x = [0] * nv

    def feasible(t: int) -> bool:
        for row in rows:
            g = suffix_gcd[row][t]
            r = residual[row]
            if (g == 0 and r != 0) or (g and r % g):
                return False
        return True

    def rec(t: int) -> Iterator[list[int]]:
        if t == nv:
            yield list(x)
            return
        col = [sys.coeffs[row][t] for row in rows]
        hi = min((residual[row] // a for row, a in enumerate(col) if a), default=0)
        for value in range(hi + 1):
            for row, a in enumerate(col):
                residual[row] -= a * value
            x[t] = value
            if feasible(t + 1):
                yield from rec(t + 1)
            for row, a in enumerate(col):
                residual[row] += a * value
        x[t] = 0

    if feasible(0):
        yield from rec(0)


def solve_system(sys: FeasibilitySystem) -> dict[tuple[int, int], int] | None:
    """Lexicographically least solution as ``{(c, s_j): count}``, or None."""
    for x in iter_solutions(sys):
        return dict(zip(sys.variables, x))
    return None


def assemble(sys: FeasibilitySystem, solution: dict[tuple[int, int], int]) -> Tree:
    """Root 0, neighbours 1..|I|, then branches in (neighbour, s_j) order."""
    cfg = sys.config
    k = len(cfg.neighbor_statuses)
    edges = [(0, 1 + c) for c in range(k)]
    nxt = 1 + k
    for (c, _s_j), p in sorted(zip(sys.variables, sys.profiles), key=lambda vp: vp[0]):
        for _ in range(solution.get((c, _s_j), 0)):
            j = nxt
            edges.append((1 + c, j))
            nxt += 1
            for _ in range(p.leaf_count):
                edges.append((j, nxt))
                nxt += 1
    return Tree(nxt, edges)


def center_configs(seq: Sequence[int], delta: int) -> Iterator[CenterConfig]:
    """Candidate (root status, neighbour statuses) pairs in lexicographic order.

    Only configurations whose subtree sizes add up to n - 1 and whose root
    status lies in the range a depth-3 rooting allows are produced.
    """
    n = len(seq)
    counts = Counter(seq)
    values = sorted(counts)
    for s_r in values:
        counts[s_r] -= 1
        pool = [v for v in values if counts[v] > 0 and (n + s_r - v) % 2 == 0 and n + s_r - v >= 2]
        for size in range(1, min(delta, n - 1) + 1):
            deep = n - 1 - size
            if not (size + 2 * deep <= s_r <= size + 3 * deep):
                continue
            for neigh in combinations_with_replacement(pool, size):
                use = Counter(neigh)
                if any(use[v] > counts[v] for v in use):
                    continue
                if sum((n + s_r - v) // 2 for v in neigh) != n - 1:
                    continue
                yield CenterConfig(n, s_r, neigh)
        counts[s_r] += 1


def srt_d3_realize(seq: Sequence[int], delta: int) -> Tree:
    """First verified tree over configurations in lexicographic order.

    Raises:
        NotRealizable: no tree has this status sequence together with a
            vertex of eccentricity <= 3 and degree <= ``delta``.
    """
    if delta < 1:
        raise ValueError("delta must be at least 1")
    seq = sorted(seq)
    if seq == [0]:
        return Tree(1, [])
    for cfg in center_configs(seq, delta):
        sys = build_system(seq, cfg)
        for x in iter_solutions(sys):
            tree = assemble(sys, dict(zip(sys.variables, x)))
            if sorted(tree_statuses(tree)) == seq:
                return tree
    raise NotRealizable(f"no depth-3 realization with root degree <= {delta}")
