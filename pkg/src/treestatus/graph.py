"""Graphs, trees, distances and vertex status values.

Vertices are dense ids ``0..n-1``. Input labels are remapped on
construction and kept in :attr:`Graph.labels` so results can be reported
in the caller's vocabulary.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .errors import GraphError

DistanceMatrix = list[list[int]]


class Graph:
    """Simple connected undirected graph with sorted adjacency lists."""

    __slots__ = ("n", "adjacency", "labels", "_edge_count")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[Hashable] | None = None,
    ) -> None:
        if n < 1:
            raise GraphError("a graph needs at least one vertex")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        count = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if v in nbrs[u]:
                raise GraphError(f"repeated edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
            count += 1
        self.n = n
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbrs)
        self._edge_count = count
        if labels is None:
            self.labels: tuple[Hashable, ...] = tuple(range(n))
        else:
            if len(labels) != n or len(set(labels)) != n:
                raise GraphError("labels must be n distinct values")
            self.labels = tuple(labels)
        if not self._connected():
            raise GraphError("graph is not connected")

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[Hashable, Hashable]],
        vertices: Iterable[Hashable] = (),
    ):
        """Build from labelled edges; labels are remapped to dense ids.

        Labels are ordered by sorting when they are mutually comparable,
        otherwise by first appearance. ``vertices`` may list extra labels
        (needed for the one-vertex graph, which has no edges).
        """
        edges = list(edges)
        seen: dict[Hashable, None] = dict.fromkeys(vertices)
        for u, v in edges:
            seen.setdefault(u)
            seen.setdefault(v)
        order = list(seen)
        try:
            order.sort()
        except TypeError:
            pass
        index = {lab: i for i, lab in enumerate(order)}
        return cls(len(order), [(index[u], index[v]) for u, v in edges], order)

    def _connected(self) -> bool:
        seen = [False] * self.n
        seen[0] = True
        stack = [0]
        reached = 1
        while stack:
            u = stack.pop()
            for w in self.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    reached += 1
                    stack.append(w)
        return reached == self.n

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def labelled_edges(self) -> list[tuple[Hashable, Hashable]]:
        lab = self.labels
        return [(lab[u], lab[v]) for u, v in self.edges()]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the isomorphic copy in which vertex ``v`` becomes ``perm[v]``."""
        return type(self)(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, edges={self.edges()})"


class Tree(Graph):
    """A :class:`Graph` with exactly ``n - 1`` edges."""

    __slots__ = ()

    def __init__(self, n, edges, labels=None) -> None:
        super().__init__(n, edges, labels)
        if self.edge_count != n - 1:
            raise GraphError(f"a tree on {n} vertices has {n - 1} edges, got {self.edge_count}")

    @classmethod
    def from_parents(cls, parents: Sequence[int | None]) -> "Tree":
        """Build from a parent array; exactly one entry (the root) is ``None``."""
        return cls(len(parents), [(v, p) for v, p in enumerate(parents) if p is not None])


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    return [bfs_distances(g, v) for v in range(g.n)]


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range 0..{g.n - 1}")


def status(g: Graph, v: int) -> int:
    """Sum of the distances from ``v`` to every other vertex."""
    _check_vertex(g, v)
    return sum(bfs_distances(g, v))


def statuses(g: Graph) -> list[int]:
    """Per-vertex statuses by breadth-first search from every vertex. O(n*m)."""
    return [sum(bfs_distances(g, v)) for v in range(g.n)]


def tree_statuses(t: Tree) -> list[int]:
    """Per-vertex statuses of a tree in O(n).

    The root's status is the sum of depths; moving across an edge into a
    subtree of size ``k`` changes the status by ``n - 2k``.
    """
    n = t.n
    order, parent = _bfs_order(t, 0)
    size = [1] * n
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]
    depth = [0] * n
    for v in order[1:]:
        depth[v] = depth[parent[v]] + 1
    out = [0] * n
    out[0] = sum(depth)
    for v in order[1:]:
        out[v] = out[parent[v]] + n - 2 * size[v]
    return out


def _bfs_order(g: Graph, root: int) -> tuple[list[int], list[int]]:
    parent = [-1] * g.n
    parent[root] = root
    order = [root]
    adj = g.adjacency
    for u in order:
        for w in adj[u]:
            if parent[w] < 0:
                parent[w] = u
                order.append(w)
    return order, parent


def status_sequence(g: Graph) -> list[int]:
    """Statuses of all vertices in nondecreasing order."""
    s = tree_statuses(g) if isinstance(g, Tree) else statuses(g)
    return sorted(s)


def distinct_status_count(g: Graph) -> int:
    return len(set(status_sequence(g)))


def is_status_injective(g: Graph) -> bool:
    return distinct_status_count(g) == g.n


@dataclass(frozen=True)
class TreeMetrics:
    diameter: int
    radius: int
    depth: int
    center: tuple[int, ...]
    median: tuple[int, ...]


def _farthest(g: Graph, source: int) -> tuple[int, list[int]]:
    dist = bfs_distances(g, source)
    far = max(range(g.n), key=lambda v: (dist[v], -v))
    return far, dist


def metrics(t: Tree) -> TreeMetrics:
    a, _ = _farthest(t, 0)
    b, dist_a = _farthest(t, a)
    diameter = dist_a[b]
    # walk back from b to a along decreasing distance
    path = [b]
    while path[-1] != a:
        u = path[-1]
        path.append(next(w for w in t.adjacency[u] if dist_a[w] == dist_a[u] - 1))
    if diameter % 2 == 0:
        center: tuple[int, ...] = (path[diameter // 2],)
    else:
        center = tuple(sorted(path[diameter // 2 : diameter // 2 + 2]))
    radius = (diameter + 1) // 2
    s = tree_statuses(t)
    low = min(s)
    median = tuple(v for v in range(t.n) if s[v] == low)
    return TreeMetrics(diameter, radius, radius, center, median)


def eccentricity(g: Graph, v: int) -> int:
    return max(bfs_distances(g, v))


def edge_split(t: Tree, edge: tuple[int, int]) -> tuple[int, int]:
    """Component sizes after deleting ``edge``, the ``edge[0]`` side first."""
    v1, v2 = edge
    _check_vertex(t, v1)
    _check_vertex(t, v2)
    if not t.has_edge(v1, v2):
        raise GraphError(f"({v1}, {v2}) is not an edge")
    seen = {v1, v2}
    stack = [v1]
    size1 = 1
    while stack:
        u = stack.pop()
        for w in t.adjacency[u]:
            if w not in seen:
                seen.add(w)
                size1 += 1
                stack.append(w)
    return size1, t.n - size1


def median_path_is_increasing(t: Tree) -> bool:
    """Check that statuses strictly increase along every path leaving the median.

    Every path starting at a median vertex whose second vertex is not a
    median is a root-to-descendant path once the tree is rooted at that
    median vertex, so checking each parent->child edge suffices.
    """
    s = tree_statuses(t)
    med = metrics(t).median
    for m in med:
        for first in t.adjacency[m]:
            if first in med:
                continue
            if s[first] <= s[m]:
                return False
            stack = [(first, m)]
            while stack:
                u, par = stack.pop()
                for w in t.adjacency[u]:
                    if w == par:
                        continue
                    if s[w] <= s[u]:
                        return False
                    stack.append((w, u))
    return True


# -- standard small graphs ---------------------------------------------------


def path_graph(n: int) -> Tree:
    return Tree(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Tree:
    """K_{1,leaves} with the centre at vertex 0."""
    return Tree(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)
