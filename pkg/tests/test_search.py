import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cycleregions.arrangement import build_arrangement, region_count_euler
from cycleregions.embedding import (
    CycleEmbedding,
    perturb,
    regular_polygon_points,
    validate_general_position,
)
from cycleregions.formulas import InvalidN, f_max
from cycleregions.search import (
    CyclicPermutation,
    NTooLarge,
    _crossing_count,
    crossing_count_convex,
    oracle_max_regions_convex,
    random_search,
    splitter_bound_check,
)


def realize_on_circle(order, digits=6):
    """Place label k at vertex k of a regular polygon and visit in the
    given cycle order; nudge into general position if needed."""
    n = len(order)
    poly = regular_polygon_points(n, 1, digits)
    emb = CycleEmbedding(n, tuple(poly[lbl] for lbl in order))
    if not validate_general_position(emb).is_empty():
        emb = perturb(emb, Fraction(1, 10**4), seed=0)
    return emb


class TestCyclicPermutation:
    def test_canonical_rotates_to_zero(self):
        assert CyclicPermutation.canonical((2, 0, 1)).order == (0, 1, 2)

    def test_canonical_prefers_smaller_reflection(self):
        # (0,3,1,2) reversed reads (0,2,1,3), which is smaller
        assert CyclicPermutation.canonical((0, 3, 1, 2)).order == (0, 2, 1, 3)

    def test_rejects_non_permutation(self):
        with pytest.raises(ValueError):
            CyclicPermutation.canonical((0, 1, 1))

    def test_rejects_non_canonical_direct_construction(self):
        with pytest.raises(ValueError):
            CyclicPermutation((1, 0, 2))
        with pytest.raises(ValueError):
            CyclicPermutation((0, 3, 1, 2))

    def test_rejects_short_orders(self):
        with pytest.raises(ValueError):
            CyclicPermutation.canonical((0, 1))

    @given(st.permutations(list(range(6))), st.integers(0, 5), st.booleans())
    def test_canonical_is_dihedral_invariant(self, seq, shift, flip):
        n = len(seq)
        moved = [seq[(i + shift) % n] for i in range(n)]
        if flip:
            moved.reverse()
        assert (
            CyclicPermutation.canonical(moved).order
            == CyclicPermutation.canonical(seq).order
        )


class TestCrossingCount:
    def test_convex_order_has_no_crossings(self):
        assert crossing_count_convex(CyclicPermutation.canonical(range(6))) == 0

    def test_hourglass_has_one(self):
        assert crossing_count_convex(CyclicPermutation((0, 2, 1, 3))) == 1

    def test_pentagram_has_five(self):
        assert crossing_count_convex(CyclicPermutation((0, 2, 4, 1, 3))) == 5

    @given(st.permutations(list(range(7))), st.integers(0, 6), st.booleans())
    @settings(max_examples=80)
    def test_invariant_under_rotation_and_reflection(self, seq, shift, flip):
        n = len(seq)
        moved = [seq[(i + shift) % n] for i in range(n)]
        if flip:
            moved.reverse()
        assert _crossing_count(moved) == _crossing_count(seq)

    @given(st.permutations(list(range(6))))
    @settings(max_examples=50, deadline=None)
    def test_matches_geometric_region_count(self, seq):
        # combinatorial crossings + 1 = regions of any convex realization
        emb = realize_on_circle(seq)
        assert region_count_euler(build_arrangement(emb)) == _crossing_count(seq) + 1


class TestOracle:
    @pytest.mark.parametrize(
        "n,regions,classes",
        [(3, 1, 1), (4, 2, 3), (5, 6, 12), (6, 8, 60), (7, 15, 360)],
    )
    def test_small_cases(self, n, regions, classes):
        result = oracle_max_regions_convex(n)
        assert result.max_regions == regions
        assert result.evaluated_count == classes
        assert result.max_regions == f_max(n)

    def test_class_count_formula(self):
        for n in range(3, 9):
            result = oracle_max_regions_convex(n)
            assert result.evaluated_count == math.factorial(n - 1) // 2

    def test_pentagram_is_the_five_witness(self):
        assert oracle_max_regions_convex(5).witness.order == (0, 2, 4, 1, 3)

    def test_witness_achieves_the_maximum(self):
        for n in range(3, 9):
            result = oracle_max_regions_convex(n)
            assert crossing_count_convex(result.witness) + 1 == result.max_regions

    def test_witness_realizes_geometrically(self):
        for n in range(3, 9):
            result = oracle_max_regions_convex(n)
            emb = realize_on_circle(result.witness.order)
            assert region_count_euler(build_arrangement(emb)) == result.max_regions

    def test_sampled_orders_realize_geometrically(self):
        rng = random.Random(1849)
        for n in (4, 5, 6):
            for _ in range(100):
                order = tuple([0] + rng.sample(range(1, n), n - 1))
                emb = realize_on_circle(order)
                assert (
                    region_count_euler(build_arrangement(emb))
                    == _crossing_count(order) + 1
                )

    def test_bounds(self):
        with pytest.raises(NTooLarge):
            oracle_max_regions_convex(12)
        with pytest.raises(InvalidN):
            oracle_max_regions_convex(2)


class TestRandomSearch:
    def test_triangle_always_one_region(self):
        best, emb = random_search(3, 25, seed=0)
        assert best == 1
        assert emb.n == 3

    def test_never_exceeds_ceiling(self):
        for n in (4, 5, 6):
            best, _ = random_search(n, 60, seed=n)
            assert best <= f_max(n)

    def test_deterministic(self):
        assert random_search(5, 40, seed=7) == random_search(5, 40, seed=7)

    def test_returned_embedding_has_returned_count(self):
        best, emb = random_search(6, 40, seed=2)
        assert region_count_euler(build_arrangement(emb)) == best

    def test_rejects_bad_arguments(self):
        with pytest.raises(InvalidN):
            random_search(2, 10)
        with pytest.raises(ValueError):
            random_search(5, 0)


class TestSplitterBound:
    @pytest.mark.parametrize("n", [4, 6])
    def test_never_more_than_two_for_even_n(self, n):
        assert splitter_bound_check(n, 60, seed=3) == 2

    def test_deterministic(self):
        assert splitter_bound_check(6, 30, seed=1) == splitter_bound_check(
            6, 30, seed=1
        )

    def test_rejects_odd_n(self):
        with pytest.raises(InvalidN):
            splitter_bound_check(5, 10)
