"""Status, orbit, equitable and distance partitions; quotient matrices.

Quotient matrices are exact (:class:`fractions.Fraction`). Equitability
can be measured against the adjacency matrix (neighbour counts) or the
distance matrix; the two notions differ, and the graph ``G_m`` built by
:func:`generate_Gm` separates them.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable, Literal, Sequence

from .errors import CapExceeded, GraphError
from .graph import Graph, Tree, all_pairs_distances, bfs_distances, metrics, statuses, tree_statuses

Base = Literal["adjacency", "distance"]

GENERAL_AUTOMORPHISM_CAP = 24


@dataclass(frozen=True)
class Partition:
    parts: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, parts: Iterable[Iterable[int]], canonical: bool = True) -> "Partition":
        ps = [tuple(sorted(p)) for p in parts]
        if any(not p for p in ps):
            raise ValueError("parts must be nonempty")
        if canonical:
            ps.sort()
        return cls(tuple(ps))

    def canonical(self) -> "Partition":
        return Partition(tuple(sorted(self.parts)))

    def validate(self, n: int) -> None:
        members = sorted(v for p in self.parts for v in p)
        if members != list(range(n)):
            raise ValueError(f"not a partition of the vertex set 0..{n - 1}")

    def block_of(self) -> dict[int, int]:
        return {v: i for i, p in enumerate(self.parts) for v in p}

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)


def _classes(values: Sequence) -> Partition:
    groups: dict = defaultdict(list)
    for v, key in enumerate(values):
        groups[key].append(v)
    return Partition.of(groups.values())


def status_partition(g: Graph) -> Partition:
    return _classes(tree_statuses(g) if isinstance(g, Tree) else statuses(g))


def distance_partition(g: Graph, v: int) -> Partition:
    """Parts by distance from ``v``, in distance order (part 0 is ``{v}``)."""
    dist = bfs_distances(g, v)
    layers: list[list[int]] = [[] for _ in range(max(dist) + 1)]
    for w, d in enumerate(dist):
        layers[d].append(w)
    return Partition.of(layers, canonical=False)


def refines(p: Partition, q: Partition) -> bool:
    """Every part of ``p`` lies inside a single part of ``q``."""
    owner = q.block_of()
    return all(len({owner[v] for v in part}) == 1 for part in p)


# -- quotient matrices --------------------------------------------------------


@dataclass(frozen=True)
class QuotientMatrix:
    rows: tuple[tuple[Fraction, ...], ...]
    base: str

    def __len__(self) -> int:
        return len(self.rows)


def base_matrix(g: Graph, base: Base) -> list[list[int]]:
    if base == "distance":
        return all_pairs_distances(g)
    if base == "adjacency":
        m = [[0] * g.n for _ in range(g.n)]
        for u, v in g.edges():
            m[u][v] = m[v][u] = 1
        return m
    raise ValueError(f"unknown base {base!r}")


def _block_row_sums(g: Graph, p: Partition, base: Base) -> list[list[list[int]]]:
    """sums[i][j][k]: row sum of block (i, j) for the k-th vertex of part i."""
    p.validate(g.n)
    mat = base_matrix(g, base)
    return [[[sum(mat[u][w] for w in pj) for u in pi] for pj in p.parts] for pi in p.parts]


def quotient_matrix(g: Graph, p: Partition, base: Base = "adjacency") -> QuotientMatrix:
    sums = _block_row_sums(g, p, base)
    rows = tuple(
        tuple(Fraction(sum(cell), len(cell)) for cell in row) for row in sums
    )
    return QuotientMatrix(rows, base)


def is_equitable(g: Graph, p: Partition, base: Base = "adjacency") -> bool:
    """Every block of the base matrix has constant row sums."""
    return all(len(set(cell)) == 1 for row in _block_row_sums(g, p, base) for cell in row)


def is_equitable_by_reconstruction(g: Graph, p: Partition, base: Base = "adjacency") -> bool:
    """Check ``S B == M S`` with S the characteristic matrix and B the quotient."""
    q = quotient_matrix(g, p, base).rows
    mat = base_matrix(g, base)
    owner = p.block_of()
    for u in range(g.n):
        ms = [0] * len(p)
        for w in range(g.n):
            ms[owner[w]] += mat[u][w]
        if any(Fraction(ms[j]) != q[owner[u]][j] for j in range(len(p))):
            return False
    return True


# -- automorphisms ------------------------------------------------------------


@dataclass(frozen=True)
class AutomorphismGroupOrbits:
    partition: Partition
    order: int


def _tree_orbits(t: Tree) -> AutomorphismGroupOrbits:
    """Orbits from subtree isomorphism classes, rooted at the centre.

    Two vertices share an orbit iff the isomorphism classes of the subtrees
    along their root paths agree level by level. For two centres a virtual
    root sits between them.
    """
    centre = metrics(t).center
    parent = {c: -1 for c in centre}
    order = list(centre)
    for u in order:
        for w in t.adjacency[u]:
            if w not in parent:
                parent[w] = u
                order.append(w)
    children: dict[int, list[int]] = defaultdict(list)
    for v in order:
        children[parent[v]].append(v)
    intern: dict[tuple, int] = {}
    ident: dict[int, int] = {}
    for v in reversed(order):
        key = tuple(sorted(ident[c] for c in children[v]))
        ident[v] = intern.setdefault(key, len(intern))
    group = 1
    for v in [-1] + order:
        for mult in Counter(ident[c] for c in children[v]).values():
            group *= factorial(mult)
    chain: dict[tuple, int] = {}
    path_key = {-1: -1}
    for v in order:
        path_key[v] = chain.setdefault((path_key[parent[v]], ident[v]), len(chain))
    return AutomorphismGroupOrbits(_classes([path_key[v] for v in range(t.n)]), group)


def _refine(adj: Sequence[Sequence[int]], colours: list[int]) -> list[int]:
    """Colour refinement to the coarsest stable colouring; names are canonical."""
    count = len(set(colours))
    while True:
        sigs = [(colours[v], tuple(sorted(colours[w] for w in adj[v]))) for v in range(len(adj))]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == count:
            return new
        colours, count = new, len(rank)


class _Searcher:
    """Automorphism search by individualisation and refinement.

    Runs on the disjoint union of two copies of the graph so colour names
    are comparable across the copies; a discrete stable colouring with
    matching halves pins down a candidate map that is then checked.
    """

    def __init__(self, g: Graph, invariant: Sequence[int]) -> None:
        self.g = g
        n = g.n
        self.adj = [list(a) for a in g.adjacency] + [[w + n for w in a] for a in g.adjacency]
        self.invariant = list(invariant) * 2

    def _individualise(self, colours: list[int], pairs: Iterable[tuple[int, int]]) -> list[int]:
        out = list(colours)
        top = max(out) + 1
        for k, (x, y) in enumerate(pairs):
            out[x] = out[y + self.g.n] = top + k
        return _refine(self.adj, out)

    def find(self, fixed: Sequence[int], u: int, v: int) -> list[int] | None:
        base = _refine(self.adj, self.invariant)
        colours = self._individualise(base, [(f, f) for f in fixed] + [(u, v)])
        return self._search(colours)

    def _search(self, colours: list[int]) -> list[int] | None:
        n = self.g.n
        left, right = colours[:n], colours[n:]
        if Counter(left) != Counter(right):
            return None
        cells: dict[int, list[int]] = defaultdict(list)
        for x, c in enumerate(left):
            cells[c].append(x)
        big = [c for c, members in cells.items() if len(members) > 1]
        if not big:
            where = {c: y for y, c in enumerate(right)}
            perm = [where[c] for c in left]
            g = self.g
            if all(g.has_edge(perm[a], perm[b]) for a, b in g.edges()):
                return perm
            return None
        cell = min(big, key=lambda c: (len(cells[c]), c))
        x = cells[cell][0]
        for y in (y for y, c in enumerate(right) if c == cell):
            found = self._search(self._individualise(colours, [(x, y)]))
            if found is not None:
                return found
        return None


def _orbits_fixing(search: _Searcher, fixed: Sequence[int]) -> list[list[int]]:
    n = search.g.n
    root = list(range(n))

    def find(x: int) -> int:
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    colours = search._individualise(_refine(search.adj, search.invariant), [(f, f) for f in fixed])[:n]
    for u in range(n):
        for v in range(u + 1, n):
            if colours[u] != colours[v] or find(u) == find(v):
                continue
            perm = search.find(fixed, u, v)
            if perm is not None:
                for w, pw in enumerate(perm):
                    a, b = find(w), find(pw)
                    if a != b:
                        root[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = defaultdict(list)
    for v in range(n):
        groups[find(v)].append(v)
    return sorted(groups.values())


def _general_orbits(g: Graph, cap: int) -> AutomorphismGroupOrbits:
    if g.n > cap:
        raise CapExceeded(f"automorphism search on general graphs is capped at {cap} vertices")
    s = statuses(g)
    invariant = [(g.degree(v), s[v]) for v in range(g.n)]
    rank = {x: i for i, x in enumerate(sorted(set(invariant)))}
    search = _Searcher(g, [rank[x] for x in invariant])
    orbits = _orbits_fixing(search, ())
    # orbit-stabiliser along a base of fixed points
    order = 1
    fixed: list[int] = []
    current = orbits
    while True:
        moved = [o for o in current if len(o) > 1]
        if not moved:
            break
        point = moved[0][0]
        order *= len(moved[0])
        fixed.append(point)
        current = _orbits_fixing(search, fixed)
    return AutomorphismGroupOrbits(Partition.of(orbits), order)


def orbit_partition(
    g: Graph, method: str = "auto", cap: int = GENERAL_AUTOMORPHISM_CAP
) -> AutomorphismGroupOrbits:
    """Orbits of the full automorphism group and the group order.

    ``method``: ``"tree"`` (trees only, any size), ``"search"`` (general,
    at most ``cap`` vertices) or ``"auto"``.
    """
    if method == "tree" or (method == "auto" and isinstance(g, Tree)):
        if not isinstance(g, Tree):
            raise GraphError("tree method needs a Tree")
        return _tree_orbits(g)
    if method not in ("auto", "search"):
        raise ValueError(f"unknown method {method!r}")
    return _general_orbits(g, cap)


# -- the G_m family -----------------------------------------------------------


def gm_vertex(m: int, name: str, i: int = 0, j: int = 0) -> int:
    """Vertex id in :func:`generate_Gm` for ``"a"``, ``"b"``, ``"A"`` (a_ij) or ``"B"`` (b_ij)."""
    if name == "a":
        return 0
    if name == "A":
        return 1 + (i % m) * m + (j % m)
    if name == "B":
        return 1 + m * m + (i % m) * m + (j % m)
    if name == "b":
        return 1 + 2 * m * m
    raise ValueError(name)


def generate_Gm(m: int) -> Graph:
    """The 2m^2 + 2 vertex graph whose partition {a}, A, B, {b} is adjacency-equitable
    yet separates vertices of different status."""
    if m < 3:
        raise GraphError("G_m needs m >= 3")
    A = lambda i, j: gm_vertex(m, "A", i, j)  # noqa: E731
    B = lambda i, j: gm_vertex(m, "B", i, j)  # noqa: E731
    a, b = gm_vertex(m, "a"), gm_vertex(m, "b")
    edges = []
    for i in range(m):
        for j in range(m):
            edges.append((a, A(i, j)))
            edges.append((b, B(i, j)))
            edges.append((A(i, j), A(i, j + 1) if j != m - 1 else A(i + 1, 0)))
            edges.append((B(i, j), B(i, j + 1)))
            if i != j or i == m - 1:
                edges.append((A(i, j), B(i, j)))
            else:
                k = (i + 1) % (m - 1)
                edges.append((A(i, i), B(k, k)))
    labels = ["a"]
    labels += [f"a_{i},{j}" for i in range(m) for j in range(m)]
    labels += [f"b_{i},{j}" for i in range(m) for j in range(m)]
    labels.append("b")
    return Graph(2 * m * m + 2, edges, labels)


def gm_partition(m: int) -> Partition:
    """{a}, A, B, {b} in that order."""
    a, b = gm_vertex(m, "a"), gm_vertex(m, "b")
    A = [gm_vertex(m, "A", i, j) for i in range(m) for j in range(m)]
    B = [gm_vertex(m, "B", i, j) for i in range(m) for j in range(m)]
    return Partition.of([[a], A, B, [b]], canonical=False)


# -- equal-status vertices and distance partitions ------------------------------


@dataclass
class Prop45Report:
    """Equal-status pairs compared through their distance-partition quotients.

    ``all_match`` is whether every pair of equal-status vertices has the
    same quotient of the distance matrix over its distance partition;
    ``status_partition_equitable`` is adjacency-equitability of the status
    partition. ``consistent`` records whether the two agree on this graph.
    """

    pairs_checked: int
    mismatched_pairs: list[tuple[int, int]] = field(default_factory=list)
    status_partition_equitable: bool = False

    @property
    def all_match(self) -> bool:
        return not self.mismatched_pairs

    @property
    def consistent(self) -> bool:
        return self.all_match == self.status_partition_equitable


def prop45_report(g: Graph) -> Prop45Report:
    sp = status_partition(g)
    quotient = {}
    report = Prop45Report(0)
    for part in sp:
        for idx, u in enumerate(part):
            for v in part[idx + 1 :]:
                for w in (u, v):
                    if w not in quotient:
                        quotient[w] = quotient_matrix(g, distance_partition(g, w), "distance")
                report.pairs_checked += 1
                # unequal eccentricities give different sizes and never match
                if quotient[u] != quotient[v]:
                    report.mismatched_pairs.append((u, v))
    report.status_partition_equitable = is_equitable(g, sp, "adjacency")
    return report


def is_distance_mean_regular(g: Graph) -> bool:
    """Mean of |G_i(u) & G_j(v)| over v at distance h from u is the same for every u."""
    dist = all_pairs_distances(g)
    n = g.n
    reference = None
    for u in range(n):
        totals: Counter = Counter()
        layer_size: Counter = Counter()
        for v in range(n):
            h = dist[u][v]
            layer_size[h] += 1
            for w in range(n):
                totals[(h, dist[u][w], dist[v][w])] += 1
        profile = {key: Fraction(c, layer_size[key[0]]) for key, c in totals.items()}
        profile["layers"] = tuple(sorted(layer_size.items()))  # type: ignore[index]
        if reference is None:
            reference = profile
        elif profile != reference:
            return False
    return True
