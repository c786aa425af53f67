"""Rooted unlabeled trees, canonical isomorphism codes, and standard tree families.

A tree is an immutable value: a node is its tuple of child subtrees, and a
node with no children is a leaf.  Leaves may carry an optional text label for
I/O purposes; labels never participate in isomorphism.

Isomorphism classes are identified by a canonical nested-parenthesis code
(children encoded recursively and concatenated in sorted order), so two trees
have equal codes exactly when they are isomorphic as unlabeled rooted trees.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

LeafPath = tuple[int, ...]


@dataclass(frozen=True)
class RootedTree:
    """Immutable rooted tree; a leaf is a node with no children."""

    children: tuple["RootedTree", ...] = ()
    label: str | None = None

    def __post_init__(self) -> None:
        if self.label is not None and self.children:
            raise ValueError("labels are only allowed on leaves")

    def is_leaf(self) -> bool:
        return not self.children

    def leaf_count(self) -> int:
        if self.is_leaf():
            return 1
        return sum(c.leaf_count() for c in self.children)

    def height(self) -> int:
        if self.is_leaf():
            return 0
        return 1 + max(c.height() for c in self.children)

    def leaves(self) -> tuple[LeafPath, ...]:
        """Root-to-leaf child-index paths, in depth-first order."""
        out: list[LeafPath] = []

        def walk(node: RootedTree, path: LeafPath) -> None:
            if node.is_leaf():
                out.append(path)
                return
            for i, child in enumerate(node.children):
                walk(child, path + (i,))

        walk(self, ())
        return tuple(out)

    def at(self, path: LeafPath) -> "RootedTree":
        """Return the subtree at a child-index path."""
        node = self
        for i in path:
            if not 0 <= i < len(node.children):
                raise ValueError(f"invalid path {path!r}: no child {i}")
            node = node.children[i]
        return node

    def is_topological(self) -> bool:
        """True iff no vertex (root included) has exactly one child."""
        if len(self.children) == 1:
            return False
        return all(c.is_topological() for c in self.children)

    def __repr__(self) -> str:
        if self.is_leaf():
            return f"leaf({self.label!r})" if self.label is not None else "leaf()"
        return f"node({', '.join(map(repr, self.children))})"


def leaf(label: str | None = None) -> RootedTree:
    return RootedTree((), label)


def node(*children: RootedTree) -> RootedTree:
    return RootedTree(tuple(children))


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Canonical encoding of a rooted tree's isomorphism class.

    ``code`` is a balanced-parenthesis string; the leaf is "()" and an
    internal vertex wraps the sorted concatenation of its children's codes.
    Equality and ordering on the ``code`` field decide everything: the other
    fields are functions of it, cached for convenience.
    """

    code: str
    leaf_count: int = field(compare=False)
    height: int = field(compare=False)

    def __str__(self) -> str:
        return self.code


LEAF_CODE = CanonicalCode("()", 1, 0)


def join_codes(parts: Sequence[CanonicalCode]) -> CanonicalCode:
    """Code of a root whose child subtrees have the given codes."""
    if not parts:
        raise ValueError("cannot join an empty sequence of codes")
    return CanonicalCode(
        "(" + "".join(sorted(p.code for p in parts)) + ")",
        sum(p.leaf_count for p in parts),
        1 + max(p.height for p in parts),
    )


def canonical_code(t: RootedTree) -> CanonicalCode:
    """Canonical code of ``t``; equal codes iff isomorphic, labels ignored."""
    if t.is_leaf():
        return LEAF_CODE
    return join_codes([canonical_code(c) for c in t.children])


def tree_from_code(code: CanonicalCode | str) -> RootedTree:
    """Rebuild an unlabeled representative tree from a canonical code."""
    s = code.code if isinstance(code, CanonicalCode) else code
    pos = 0

    def parse() -> RootedTree:
        nonlocal pos
        if pos >= len(s) or s[pos] != "(":
            raise ValueError(f"malformed code {s!r} at index {pos}")
        pos += 1
        children = []
        while pos < len(s) and s[pos] == "(":
            children.append(parse())
        if pos >= len(s) or s[pos] != ")":
            raise ValueError(f"malformed code {s!r} at index {pos}")
        pos += 1
        return RootedTree(tuple(children))

    t = parse()
    if pos != len(s):
        raise ValueError(f"trailing characters in code {s!r}")
    return t


def star(n: int) -> RootedTree:
    """Root with ``n`` leaf children; n=1 is the single vertex."""
    if n < 1:
        raise ValueError(f"star needs n >= 1, got {n}")
    if n == 1:
        return leaf()
    return RootedTree(tuple(leaf() for _ in range(n)))


def binary_caterpillar(n: int) -> RootedTree:
    """Chain of cherries with ``n`` leaves; n=1 single vertex, n=2 cherry."""
    if n < 1:
        raise ValueError(f"binary caterpillar needs n >= 1, got {n}")
    t = leaf()
    if n == 1:
        return t
    t = node(leaf(), leaf())
    for _ in range(n - 2):
        t = node(leaf(), t)
    return t


def dary_caterpillar(d: int, n: int) -> RootedTree:
    """Strict d-ary caterpillar with ``n`` leaves.

    Every internal vertex has d-1 leaf children plus one internal child,
    except the deepest, which has d leaf children.  Exists only when
    n == 1 (mod d-1); the height is then (n-1)/(d-1).
    """
    if d < 2:
        raise ValueError(f"caterpillar arity must be >= 2, got {d}")
    if n < 1:
        raise ValueError(f"caterpillar needs n >= 1 leaves, got {n}")
    if (n - 1) % (d - 1) != 0:
        raise ValueError(
            f"no strict {d}-ary caterpillar with {n} leaves: "
            f"need n == 1 (mod {d - 1})"
        )
    if n == 1:
        return leaf()
    h = (n - 1) // (d - 1)
    t = star(d)
    for _ in range(h - 1):
        t = RootedTree(tuple(leaf() for _ in range(d - 1)) + (t,))
    return t


def complete_dary(d: int, h: int) -> RootedTree:
    """Strict d-ary tree with all d**h leaves at depth ``h``."""
    if d <= 1:
        raise ValueError(f"complete d-ary tree needs d >= 2, got {d}")
    if h < 0:
        raise ValueError(f"height must be >= 0, got {h}")
    t = leaf()
    for _ in range(h):
        t = RootedTree((t,) * d)
    return t
