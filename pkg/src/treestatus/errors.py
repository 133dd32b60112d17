"""Exception types shared across the package."""

from __future__ import annotations


class GraphError(ValueError):
    """Invalid graph input: loops, multi-edges, disconnection, not a tree."""


class NotRealizable(Exception):
    """No tree (of the requested kind) has the given status sequence."""


class NotInjectiveError(ValueError):
    """A sequence passed to the injective realizer contains repeated values."""


class InstanceError(ValueError):
    """Malformed or out-of-window 3-Partition instance or partition."""


class StructureError(ValueError):
    """A tree does not have the structure forced by the reduced sequence."""


class CapExceeded(ValueError):
    """Input exceeds the size cap of an exhaustive routine."""
