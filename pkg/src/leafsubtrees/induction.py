"""Leaf-subset induction and the exhaustive subset-sweep oracle.

The subtree induced by a nonempty set of leaves is obtained by restricting
the host to the paths joining those leaves to their most recent common
ancestor, re-rooting there, and contracting every vertex that is left with
exactly one child.  Sweeping all 2**n - 1 nonempty leaf subsets and
deduplicating by canonical code yields the reference value of the
nonisomorphic induced-subtree count, used as the oracle for the efficient
bottom-up enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ResourceLimitError
from .trees import CanonicalCode, LeafPath, RootedTree, canonical_code

DEFAULT_LEAF_CAP = 20


@dataclass(frozen=True)
class InducedSet:
    """Deduplicated isomorphism classes of the induced subtrees of one host."""

    codes: frozenset[CanonicalCode]
    host_code: CanonicalCode

    def __len__(self) -> int:
        return len(self.codes)

    def __iter__(self) -> Iterator[CanonicalCode]:
        return iter(self.codes)

    def __contains__(self, code: CanonicalCode) -> bool:
        return code in self.codes


def _require_leaf(t: RootedTree, path: LeafPath) -> None:
    node = t
    for i in path:
        if not 0 <= i < len(node.children):
            raise ValueError(f"position {path!r} does not address a vertex")
        node = node.children[i]
    if not node.is_leaf():
        raise ValueError(f"position {path!r} is not a leaf")


def _restrict(node: RootedTree, paths: list[LeafPath]) -> RootedTree:
    # paths are the selected leaves relative to `node`; outdegree-1 vertices
    # are contracted on the way down by recursing through single groups.
    if len(paths) == 1 and paths[0] == ():
        return node
    groups: dict[int, list[LeafPath]] = {}
    for p in paths:
        groups.setdefault(p[0], []).append(p[1:])
    if len(groups) == 1:
        i, sub = next(iter(groups.items()))
        return _restrict(node.children[i], sub)
    return RootedTree(
        tuple(_restrict(node.children[i], sub) for i, sub in sorted(groups.items()))
    )


def induce(t: RootedTree, positions: Iterable[LeafPath]) -> RootedTree:
    """Subtree of ``t`` induced by the given leaf positions.

    The result has exactly one leaf per selected position, keeps those
    leaves' labels, and never contains a vertex of outdegree one.
    """
    paths = sorted(set(tuple(p) for p in positions))
    if not paths:
        raise ValueError("at least one leaf position is required")
    for p in paths:
        _require_leaf(t, p)
    prefix_len = 0
    first = paths[0]
    while all(len(p) > prefix_len and p[prefix_len] == first[prefix_len] for p in paths):
        prefix_len += 1
    ancestor = t.at(first[:prefix_len])
    return _restrict(ancestor, [p[prefix_len:] for p in paths])


def leaf_subsets(t: RootedTree) -> Iterator[tuple[LeafPath, ...]]:
    """All nonempty leaf subsets, in binary-counter order over t.leaves()."""
    ls = t.leaves()
    n = len(ls)
    for mask in range(1, 1 << n):
        yield tuple(ls[k] for k in range(n) if mask >> k & 1)


def brute_force_set(t: RootedTree, leaf_cap: int = DEFAULT_LEAF_CAP) -> InducedSet:
    """Induced-subtree classes of ``t`` by sweeping every nonempty leaf subset.

    Exponential in the leaf count, so refuses hosts above ``leaf_cap`` leaves.
    """
    n = t.leaf_count()
    if n > leaf_cap:
        raise ResourceLimitError(
            f"host has {n} leaves; subset sweep is capped at {leaf_cap} leaves "
            f"(2**{n} subsets)"
        )
    codes = {canonical_code(induce(t, subset)) for subset in leaf_subsets(t)}
    return InducedSet(frozenset(codes), canonical_code(t))
