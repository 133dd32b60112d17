"""Reconstruct the unique tree with a given status-injective sequence."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .errors import NotInjectiveError, NotRealizable
from .graph import Tree, tree_statuses


@dataclass(frozen=True)
class Realization:
    """Tree built from an injective sequence.

    Vertex ``v`` is the one assigned ``status_of[v]``; vertices are numbered
    by decreasing status, so the last vertex is the root.
    """

    tree: Tree
    parent: dict[int, int]
    status_of: tuple[int, ...]

    def labelled_edges(self) -> list[tuple[int, int]]:
        """Edges as (child status, parent status) pairs."""
        s = self.status_of
        return [(s[v], s[p]) for v, p in self.parent.items()]


def realize_injective(seq: Iterable[int]) -> Realization:
    """Build the tree whose status sequence is ``seq``.

    Values are processed in decreasing order. Vertex ``i`` with ``c``
    descendants found so far hangs off the vertex whose status is
    ``a_i - n + 2(c + 1)``; that vertex inherits the ``c + 1`` descendants.
    The result is re-verified against ``seq`` before returning.

    Raises:
        NotInjectiveError: ``seq`` has a repeated value.
        NotRealizable: no tree on ``len(seq)`` vertices has this sequence.
    """
    a = sorted(seq, reverse=True)
    n = len(a)
    if n == 0:
        raise NotRealizable("empty sequence")
    dups = sorted(v for v, c in Counter(a).items() if c > 1)
    if dups:
        raise NotInjectiveError(f"not injective: repeated values {dups}")

    index = {value: i for i, value in enumerate(a)}
    desc = [0] * n
    parent: dict[int, int] = {}
    for i in range(n - 1):
        target = a[i] - n + 2 * (desc[i] + 1)
        j = index.get(target)
        if j is None or j <= i:
            raise NotRealizable(
                f"no later value {target} to serve as parent of status {a[i]}"
            )
        parent[i] = j
        desc[j] += desc[i] + 1

    tree = Tree(n, parent.items())
    result = Realization(tree, parent, tuple(a))
    if not verify_realization(tree, a, result.status_of):
        raise NotRealizable("constructed tree does not reproduce the sequence")
    return result


def verify_realization(t: Tree, seq: Iterable[int], status_of: Iterable[int] | None = None) -> bool:
    """True iff ``t``'s statuses equal ``seq`` as multisets.

    With ``status_of`` the check is per vertex, which is stronger.
    """
    seq = list(seq)
    if t.n != len(seq):
        return False
    actual = tree_statuses(t)
    if status_of is not None:
        return actual == list(status_of)
    return sorted(actual) == sorted(seq)
