"""3-Partition to depth-3 tree status recognition.

An instance ``a_1..a_n`` (n = 3m, A = sum, B = A/m) maps to a status
sequence whose realizations are forced, once A is large enough, to be the
gadget tree: a root, m triplet vertices, three element vertices under each
triplet vertex, and ``a_i`` leaves under element ``i``. Element indices are
0-based throughout.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapExceeded, InstanceError, StructureError
from .graph import Tree, tree_statuses

TripletPartition = list[tuple[int, int, int]]

BRUTE_FORCE_CAP = 30


@dataclass(frozen=True)
class ThreePartitionInstance:
    elements: tuple[int, ...]

    def __init__(self, elements: Iterable[int]) -> None:
        elements = tuple(elements)
        if not elements or len(elements) % 3:
            raise InstanceError("the number of elements must be a positive multiple of 3")
        if any(a <= 0 for a in elements):
            raise InstanceError("elements must be positive integers")
        object.__setattr__(self, "elements", elements)

    @property
    def m(self) -> int:
        return len(self.elements) // 3

    @property
    def total(self) -> int:
        return sum(self.elements)

    @property
    def b_integral(self) -> bool:
        return self.total % self.m == 0

    @property
    def target(self) -> int:
        """The common triple sum B."""
        if not self.b_integral:
            raise InstanceError(f"B = {self.total}/{self.m} is not an integer")
        return self.total // self.m

    def in_window(self) -> bool:
        """B/4 < a_i < B/2 for every element (checked in integers)."""
        A, m = self.total, self.m
        return all(4 * a * m > A and 2 * a * m < A for a in self.elements)

    @property
    def padding_constant(self) -> int:
        return 3 * self.target + 19 * self.m + 9

    def structure_forced(self) -> bool:
        """A > 3B + 19m + 9, the regime where realizations must be gadgets."""
        return self.total > self.padding_constant


@dataclass(frozen=True)
class ReducedSequence:
    """Reduced status values grouped by the gadget role they belong to."""

    n_vertices: int
    root: int
    triplet: int
    m: int
    element: tuple[int, ...]
    leaf: tuple[int, ...]
    leaf_counts: tuple[int, ...]

    def multiset(self) -> Counter:
        c = Counter({self.root: 1})
        c[self.triplet] += self.m
        for e, lf, a in zip(self.element, self.leaf, self.leaf_counts):
            c[e] += 1
            c[lf] += a
        return c

    def sequence(self) -> list[int]:
        return sorted(self.multiset().elements())

    def __len__(self) -> int:
        return self.n_vertices


def _values(inst: ThreePartitionInstance) -> ReducedSequence:
    A, B, m = inst.total, inst.target, inst.m
    a = inst.elements
    return ReducedSequence(
        n_vertices=A + 4 * m + 1,
        root=3 * A + 7 * m,
        triplet=4 * A - 2 * B + 11 * m - 7,
        m=m,
        element=tuple(5 * A - 2 * B - 2 * x + 15 * m - 8 for x in a),
        leaf=tuple(6 * A - 2 * B - 2 * x + 19 * m - 9 for x in a),
        leaf_counts=a,
    )


def reduce_3partition(inst: ThreePartitionInstance) -> ReducedSequence:
    """Status sequence that is tree-realizable iff ``inst`` is a yes-instance."""
    if not inst.b_integral:
        raise InstanceError(f"B = {inst.total}/{inst.m} is not an integer")
    if not inst.in_window():
        raise InstanceError("elements must satisfy B/4 < a_i < B/2")
    return _values(inst)


def pad_instance(inst: ThreePartitionInstance) -> ThreePartitionInstance:
    """Add 3B + 19m + 9 to every element.

    Triple sums all shift by the same amount, so the answer is unchanged.
    The forcing condition ``A > 3B + 19m + 9`` holds afterwards only when
    m >= 4; see :meth:`ThreePartitionInstance.structure_forced`.
    """
    c = inst.padding_constant
    return ThreePartitionInstance(a + c for a in inst.elements)


def validate_partition(inst: ThreePartitionInstance, partition: Sequence[Sequence[int]]) -> TripletPartition:
    n = len(inst.elements)
    triples = [tuple(sorted(t)) for t in partition]
    if len(triples) != inst.m or any(len(t) != 3 for t in triples):
        raise InstanceError(f"expected {inst.m} triples of element indices")
    used = sorted(i for t in triples for i in t)
    if used != list(range(n)):
        raise InstanceError(f"triples must use each index 0..{n - 1} exactly once")
    B = inst.target
    for t in triples:
        if sum(inst.elements[i] for i in t) != B:
            raise InstanceError(f"triple {t} does not sum to B = {B}")
    return sorted(triples)  # type: ignore[return-value]


def build_gadget_tree(inst: ThreePartitionInstance, partition: Sequence[Sequence[int]]) -> Tree:
    """Root 0, triplet vertices 1..m, then each element vertex followed by its leaves."""
    triples = validate_partition(inst, partition)
    m = inst.m
    edges = [(0, 1 + t) for t in range(m)]
    nxt = 1 + m
    for t, triple in enumerate(triples):
        for i in triple:
            elem = nxt
            edges.append((1 + t, elem))
            nxt += 1
            for _ in range(inst.elements[i]):
                edges.append((elem, nxt))
                nxt += 1
    return Tree(nxt, edges)


def extract_partition(t: Tree, inst: ThreePartitionInstance) -> TripletPartition:
    """Read the triple grouping off a tree that realizes the reduced sequence.

    Roles come from status values and adjacency only: the root is the
    vertex of status 3A + 7m, its neighbours are triplet vertices, their
    other neighbours are element vertices, and each element's leaf count
    identifies which ``a_i`` it carries.
    """
    red = reduce_3partition(inst)
    s = tree_statuses(t)
    if t.n != red.n_vertices or sorted(s) != red.sequence():
        raise StructureError("tree does not realize the reduced sequence")
    A, B, m = inst.total, inst.target, inst.m

    roots = [v for v in range(t.n) if s[v] == red.root]
    if len(roots) != 1:
        raise StructureError(f"expected one vertex of status {red.root}, found {len(roots)}")
    root = roots[0]
    triplets = t.adjacency[root]
    if len(triplets) != m or any(s[u] != red.triplet for u in triplets):
        raise StructureError(f"root must have exactly {m} neighbours of status {red.triplet}")

    free = defaultdict(list)
    for i, a in enumerate(inst.elements):
        free[a].append(i)
    out: TripletPartition = []
    for u in triplets:
        elems = [w for w in t.adjacency[u] if w != root]
        if len(elems) != 3:
            raise StructureError(f"triplet vertex {u} has {len(elems)} element children, not 3")
        triple = []
        for v in elems:
            below = [w for w in t.adjacency[v] if w != u]
            if any(t.degree(w) != 1 for w in below):
                raise StructureError(f"element vertex {v} has a non-leaf child")
            x = len(below)
            if s[v] != 5 * A - 2 * B - 2 * x + 15 * m - 8:
                raise StructureError(f"element vertex {v} has status inconsistent with {x} leaves")
            if any(s[w] != 6 * A - 2 * B - 2 * x + 19 * m - 9 for w in below):
                raise StructureError(f"leaf status mismatch under element vertex {v}")
            if not free[x]:
                raise StructureError(f"no unused element of value {x}")
            triple.append(free[x].pop(0))
        if sum(inst.elements[i] for i in triple) != B:
            raise StructureError(f"triple {sorted(triple)} does not sum to B = {B}")
        out.append(tuple(sorted(triple)))  # type: ignore[arg-type]
    return sorted(out)


def brute_force_3partition(inst: ThreePartitionInstance) -> TripletPartition | None:
    """Lexicographically smallest valid triple partition, or None."""
    n = len(inst.elements)
    if n > BRUTE_FORCE_CAP:
        raise CapExceeded(f"brute force is capped at {BRUTE_FORCE_CAP} elements")
    if not inst.b_integral:
        return None
    a, B = inst.elements, inst.target
    used = [False] * n
    chosen: TripletPartition = []

    def search() -> bool:
        try:
            i = used.index(False)
        except ValueError:
            return True
        used[i] = True
        for j in range(i + 1, n):
            if used[j] or a[i] + a[j] >= B:
                continue
            used[j] = True
            need = B - a[i] - a[j]
            for k in range(j + 1, n):
                if not used[k] and a[k] == need:
                    used[k] = True
                    chosen.append((i, j, k))
                    if search():
                        return True
                    chosen.pop()
                    used[k] = False
            used[j] = False
        used[i] = False
        return False

    return list(chosen) if search() else None
