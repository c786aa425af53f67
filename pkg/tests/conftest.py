"""Shared test helpers: tree strategies, relabeling, and fixture paths."""

from __future__ import annotations

import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

from leafsubtrees import RootedTree, leaf

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
GOLDEN = Path(__file__).resolve().parent / "golden"


def topological_trees(max_leaves: int = 6) -> st.SearchStrategy[RootedTree]:
    """Random topological trees (every internal vertex has >= 2 children)."""
    return st.recursive(
        st.just(leaf()),
        lambda kids: st.lists(kids, min_size=2, max_size=4).map(
            lambda cs: RootedTree(tuple(cs))
        ),
        max_leaves=max_leaves,
    )


def shuffle_children(t: RootedTree, rng: random.Random) -> RootedTree:
    if t.is_leaf():
        return t
    kids = [shuffle_children(c, rng) for c in t.children]
    rng.shuffle(kids)
    return RootedTree(tuple(kids))


def label_leaves(t: RootedTree, prefix: str = "l") -> RootedTree:
    """Copy of ``t`` with leaves labeled l0, l1, ... in depth-first order."""
    counter = [0]

    def walk(node: RootedTree) -> RootedTree:
        if node.is_leaf():
            lbl = f"{prefix}{counter[0]}"
            counter[0] += 1
            return leaf(lbl)
        return RootedTree(tuple(walk(c) for c in node.children))

    return walk(t)


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES
