"""Exhaustive corpora and the extremal minimum-count verification."""

from __future__ import annotations

import pytest

from leafsubtrees import (
    ProofWitnessError,
    ResourceLimitError,
    binary_caterpillar,
    brute_force_set,
    canonical_code,
    complete_dary,
    distinguishing_witnesses,
    generate_topological,
    induce,
    leaf,
    leaf_subsets,
    node,
    series_reduced_leaf_counts,
    star,
    verify_minimum,
)

EXPECTED_SIZES = [0, 1, 1, 2, 5, 12, 33, 90, 261]


class TestGeneration:
    def test_sizes_match_independent_recurrence(self):
        recurrence = series_reduced_leaf_counts(8)
        for n in range(1, 9):
            assert len(generate_topological(n)) == recurrence[n] == EXPECTED_SIZES[n]

    def test_singleton_corpus(self):
        corpus = generate_topological(1)
        assert len(corpus) == 1
        assert corpus.trees[0] == leaf()

    def test_three_leaf_classes(self):
        codes = {canonical_code(t) for t in generate_topological(3)}
        assert codes == {canonical_code(star(3)), canonical_code(binary_caterpillar(3))}

    def test_four_leaf_classes(self):
        codes = {canonical_code(t) for t in generate_topological(4)}
        assert codes == {
            canonical_code(star(4)),
            canonical_code(binary_caterpillar(4)),
            canonical_code(complete_dary(2, 2)),
            canonical_code(node(leaf(), star(3))),
            canonical_code(node(leaf(), leaf(), star(2))),
        }

    def test_all_topological_with_right_leaf_count(self):
        for n in range(1, 7):
            for t in generate_topological(n):
                assert t.is_topological()
                assert t.leaf_count() == n

    def test_distinct_codes(self):
        for n in range(1, 8):
            corpus = generate_topological(n)
            codes = {canonical_code(t).code for t in corpus}
            assert len(codes) == len(corpus)

    def test_closed_under_induction(self):
        corpora = {n: {canonical_code(t).code for t in generate_topological(n)} for n in range(1, 6)}
        for t in generate_topological(5):
            for subset in leaf_subsets(t):
                image = canonical_code(induce(t, subset))
                assert image.code in corpora[image.leaf_count]

    def test_cap(self):
        with pytest.raises(ResourceLimitError):
            generate_topological(11)
        with pytest.raises(ResourceLimitError):
            generate_topological(4, cap=3)
        with pytest.raises(ValueError):
            generate_topological(0)


class TestRecurrence:
    def test_known_prefix(self):
        assert series_reduced_leaf_counts(10) == [
            0, 1, 1, 2, 5, 12, 33, 90, 261, 766, 2312,
        ]

    def test_invalid(self):
        with pytest.raises(ValueError):
            series_reduced_leaf_counts(0)


class TestVerifyMinimum:
    def test_five_leaves(self):
        report = verify_minimum(5)
        assert report.passed
        assert report.corpus_size == 12
        assert report.min_count == 5
        assert len(report.minimizers) == 2

    def test_six_leaves(self):
        report = verify_minimum(6)
        assert report.passed
        assert report.corpus_size == 33
        assert report.min_count == 6

    def test_four_leaf_boundary(self):
        # below the theorem's range: the height-2 complete binary tree also
        # attains the minimum, so there are three minimizers and the strict
        # two-minimizer claim correctly reports as failed
        report = verify_minimum(4)
        assert not report.passed
        assert report.min_count == 4
        assert set(report.minimizers) == {
            canonical_code(star(4)),
            canonical_code(binary_caterpillar(4)),
            canonical_code(complete_dary(2, 2)),
        }
        assert dict(report.histogram) == {4: 3, 5: 2}

    def test_four_leaf_exceptional_classes_have_five(self):
        for t in (node(leaf(), star(3)), node(leaf(), leaf(), star(2))):
            assert len(brute_force_set(t)) == 5

    def test_two_leaf_degenerate(self):
        report = verify_minimum(2)
        assert report.passed  # the cherry is both star and caterpillar
        assert report.corpus_size == 1

    def test_invalid(self):
        with pytest.raises(ValueError):
            verify_minimum(1)


class TestWitnesses:
    def test_high_outdegree_case(self):
        report = distinguishing_witnesses(node(leaf(), leaf(), leaf(), star(2)))
        assert report.case == 1
        assert report.witnesses == (
            canonical_code(star(3)),
            canonical_code(binary_caterpillar(3)),
        )

    def test_binary_case(self):
        report = distinguishing_witnesses(complete_dary(2, 3))
        assert report.case == 2
        assert report.witnesses == (
            canonical_code(complete_dary(2, 2)),
            canonical_code(binary_caterpillar(4)),
        )

    def test_every_corpus_tree_has_witnesses(self):
        for n in (5, 6):
            skip = {
                canonical_code(star(n)),
                canonical_code(binary_caterpillar(n)),
            }
            for t in generate_topological(n):
                if canonical_code(t) in skip:
                    continue
                distinguishing_witnesses(t)  # raises if the pair is absent

    def test_preconditions(self):
        with pytest.raises(ValueError):
            distinguishing_witnesses(star(6))
        with pytest.raises(ValueError):
            distinguishing_witnesses(binary_caterpillar(7))
        with pytest.raises(ValueError):
            distinguishing_witnesses(complete_dary(2, 2))  # only 4 leaves
