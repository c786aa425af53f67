"""Bottom-up class enumeration against the subset-sweep oracle."""

from __future__ import annotations

import pytest

from leafsubtrees import (
    ResourceLimitError,
    binary_caterpillar,
    brute_force_set,
    canonical_code,
    complete_dary,
    count,
    dary_caterpillar,
    generate_topological,
    induced_set,
    leaf,
    node,
    star,
)
from leafsubtrees.enumeration import clear_cache
from leafsubtrees.formulas import complete_dary_count


class TestInducedSetExamples:
    def test_complete_binary_height_two(self):
        expected = {
            canonical_code(leaf()),
            canonical_code(star(2)),
            canonical_code(binary_caterpillar(3)),
            canonical_code(complete_dary(2, 2)),
        }
        assert induced_set(complete_dary(2, 2)).codes == frozenset(expected)

    def test_star_classes(self):
        result = induced_set(star(7))
        assert result.codes == frozenset(canonical_code(star(k)) for k in range(1, 8))

    def test_binary_caterpillar_classes(self):
        result = induced_set(binary_caterpillar(6))
        assert result.codes == frozenset(
            canonical_code(binary_caterpillar(k)) for k in range(1, 7)
        )

    def test_ternary_caterpillar_five_leaves(self):
        assert len(induced_set(dary_caterpillar(3, 5))) == 7

    def test_single_vertex(self):
        result = induced_set(leaf())
        assert result.codes == frozenset({canonical_code(leaf())})

    def test_rejects_non_topological(self):
        from leafsubtrees import RootedTree

        with pytest.raises(ValueError):
            induced_set(RootedTree((node(leaf(), leaf()),)))


class TestCount:
    def test_complete_binary_height_three(self):
        assert count(complete_dary(2, 3)) == 11

    def test_single_vertex(self):
        assert count(star(1)) == 1

    def test_complete_ternary_matches_recursion(self):
        assert count(complete_dary(3, 2)) == complete_dary_count(3, 2) == 17

    def test_family_shortcut_agrees_with_enumeration(self):
        for t in (star(9), binary_caterpillar(8), complete_dary(2, 3), dary_caterpillar(3, 7)):
            assert count(t) == len(induced_set(t))


class TestOracleEquivalence:
    def test_all_topological_hosts_up_to_five_leaves(self):
        for n in range(1, 6):
            for t in generate_topological(n):
                assert induced_set(t).codes == brute_force_set(t).codes

    @pytest.mark.parametrize(
        "t",
        [
            complete_dary(2, 2),
            complete_dary(2, 3),
            complete_dary(3, 2),
            dary_caterpillar(3, 9),
            dary_caterpillar(4, 7),
            binary_caterpillar(9),
        ],
        ids=["c2h2", "c2h3", "c3h2", "cat3n9", "cat4n7", "bincat9"],
    )
    def test_family_hosts(self, t):
        assert induced_set(t).codes == brute_force_set(t).codes


class TestInvariants:
    def test_monotone_containment_for_complete_trees(self):
        for d, h_top in ((2, 3), (3, 2), (4, 1)):
            for h in range(1, h_top + 1):
                smaller = induced_set(complete_dary(d, h - 1)).codes
                larger = induced_set(complete_dary(d, h)).codes
                assert smaller <= larger

    def test_count_at_least_leaf_count(self):
        for n in range(1, 7):
            for t in generate_topological(n):
                assert count(t) >= n

    def test_single_vertex_class_always_present(self):
        for t in (star(4), complete_dary(2, 2), dary_caterpillar(3, 5)):
            assert canonical_code(leaf()) in induced_set(t)

    def test_host_class_present_for_topological_hosts(self):
        for t in (star(4), complete_dary(2, 3), dary_caterpillar(3, 7)):
            assert canonical_code(t) in induced_set(t)

    def test_memoization_transparent(self):
        clear_cache()
        for n in range(1, 6):
            for t in generate_topological(n):
                fresh = induced_set(t, memoize=False).codes
                cached = induced_set(t).codes
                assert fresh == cached

    def test_budget_enforced(self):
        clear_cache()
        with pytest.raises(ResourceLimitError, match="1000"):
            induced_set(complete_dary(2, 5), memoize=False, budget=1000)
        clear_cache()
