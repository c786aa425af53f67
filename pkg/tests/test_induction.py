"""Leaf-subset induction and the subset-sweep oracle."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leafsubtrees import (
    ResourceLimitError,
    brute_force_set,
    canonical_code,
    complete_dary,
    dary_caterpillar,
    induce,
    leaf,
    leaf_subsets,
    node,
    star,
)
from leafsubtrees.formulas import caterpillar_count

from conftest import label_leaves, topological_trees


def labeled_two_cherries():
    return node(
        node(leaf("a"), leaf("b")),
        node(leaf("c"), leaf("d")),
    )


class TestInduce:
    def test_single_leaf_gives_single_vertex(self):
        t = labeled_two_cherries()
        result = induce(t, [(0, 0)])
        assert result.is_leaf()
        assert result.label == "a"

    def test_two_leaves_across_cherries_give_cherry(self):
        t = labeled_two_cherries()
        result = induce(t, [(0, 0), (1, 0)])
        assert canonical_code(result) == canonical_code(star(2))
        assert sorted(result.at(p).label for p in result.leaves()) == ["a", "c"]

    def test_three_leaves_give_binary_caterpillar(self):
        t = labeled_two_cherries()
        result = induce(t, [(0, 0), (0, 1), (1, 0)])
        assert canonical_code(result) == canonical_code(node(node(leaf(), leaf()), leaf()))

    def test_all_leaves_give_host_class(self):
        for t in (complete_dary(2, 2), dary_caterpillar(3, 7), star(5)):
            assert canonical_code(induce(t, t.leaves())) == canonical_code(t)

    def test_duplicates_collapse(self):
        t = labeled_two_cherries()
        assert induce(t, [(0, 0), (0, 0)]).is_leaf()

    def test_empty_subset(self):
        with pytest.raises(ValueError):
            induce(labeled_two_cherries(), [])

    def test_position_not_a_leaf(self):
        with pytest.raises(ValueError):
            induce(labeled_two_cherries(), [(0,)])

    def test_position_out_of_range(self):
        with pytest.raises(ValueError):
            induce(labeled_two_cherries(), [(0, 7)])

    @settings(max_examples=120)
    @given(topological_trees(), st.randoms(use_true_random=False))
    def test_leaf_count_and_topology(self, t, rng):
        leaves = t.leaves()
        k = rng.randint(1, len(leaves))
        subset = rng.sample(leaves, k)
        result = induce(t, subset)
        assert result.leaf_count() == len(set(subset))
        assert result.is_topological()

    @settings(max_examples=80)
    @given(topological_trees(), st.randoms(use_true_random=False))
    def test_idempotent_on_full_leaf_set(self, t, rng):
        leaves = t.leaves()
        subset = rng.sample(leaves, rng.randint(1, len(leaves)))
        once = induce(t, subset)
        again = induce(once, once.leaves())
        assert canonical_code(again) == canonical_code(once)

    @settings(max_examples=80)
    @given(topological_trees(), st.randoms(use_true_random=False))
    def test_composition_via_labels(self, t, rng):
        host = label_leaves(t)
        leaves = host.leaves()
        s = rng.sample(leaves, rng.randint(1, len(leaves)))
        sub_labels = {
            host.at(p).label for p in rng.sample(s, rng.randint(1, len(s)))
        }
        first = induce(host, s)
        relayed = induce(
            first,
            [p for p in first.leaves() if first.at(p).label in sub_labels],
        )
        direct = induce(
            host, [p for p in leaves if host.at(p).label in sub_labels]
        )
        assert canonical_code(relayed) == canonical_code(direct)


class TestLeafSubsets:
    def test_count_is_all_nonempty_subsets(self):
        for t in (star(4), complete_dary(2, 2), dary_caterpillar(3, 5)):
            n = t.leaf_count()
            assert sum(1 for _ in leaf_subsets(t)) == 2**n - 1

    def test_binary_counter_order(self):
        cherry = star(2)
        assert list(leaf_subsets(cherry)) == [
            ((0,),),
            ((1,),),
            ((0,), (1,)),
        ]


class TestBruteForceSet:
    def test_complete_binary_height_two(self):
        assert len(brute_force_set(complete_dary(2, 2))) == 4

    def test_star_classes_are_smaller_stars(self):
        result = brute_force_set(star(5))
        assert result.codes == frozenset(canonical_code(star(k)) for k in range(1, 6))

    def test_single_vertex(self):
        assert len(brute_force_set(leaf())) == 1

    def test_ternary_caterpillar_matches_closed_form(self):
        assert len(brute_force_set(dary_caterpillar(3, 7))) == caterpillar_count(3, 7)

    def test_host_code_recorded(self):
        t = complete_dary(2, 2)
        result = brute_force_set(t)
        assert result.host_code == canonical_code(t)
        assert result.host_code in result

    def test_cap_enforced(self):
        with pytest.raises(ResourceLimitError, match="20"):
            brute_force_set(star(21))

    def test_custom_cap(self):
        with pytest.raises(ResourceLimitError, match="5"):
            brute_force_set(star(6), leaf_cap=5)
        assert len(brute_force_set(star(6), leaf_cap=6)) == 6

    def test_four_leaf_exceptional_counts(self):
        # among 4-leaf topological trees: the height-2 complete binary tree
        # has 4 classes; the two classes that are neither stars, binary
        # caterpillars, nor that tree have 5 each
        assert len(brute_force_set(complete_dary(2, 2))) == 4
        assert len(brute_force_set(node(leaf(), star(3)))) == 5
        assert len(brute_force_set(node(leaf(), leaf(), star(2)))) == 5
