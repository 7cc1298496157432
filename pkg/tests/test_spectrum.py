import numpy as np
import pytest
from hypothesis import given, settings

from udrange.spectrum import (
    PlanError,
    SelectionError,
    count_multiples,
    count_multiples_upto,
    enumerate_indices,
    sample_selection,
    sample_selection_batch,
    selection_from_indices,
    validate_plan,
)

from .conftest import make_plan, small_plans
from .oracles import count_multiples_brute


class TestValidatePlan:
    def test_single_band_scenario(self):
        plan = validate_plan(
            {"f_min_hz": 1000, "segments": [{"start_index": 54000, "count": 32768}]}
        )
        assert plan.n_segments == 1
        assert plan.n_frequencies == 32768
        assert plan.first_index == 54000
        assert plan.last_index == 86767

    def test_rejects_overlap(self):
        with pytest.raises(PlanError, match="overlap"):
            make_plan([(10, 5), (12, 3)])

    def test_degenerate_single_frequency(self):
        plan = make_plan([(1, 1)])
        assert plan.n_frequencies == 1
        assert plan.first_index == plan.last_index == 1
        assert plan.span == 1

    @pytest.mark.parametrize(
        "raw",
        [
            {"f_min_hz": 0, "segments": [{"start_index": 1, "count": 1}]},
            {"f_min_hz": -5, "segments": [{"start_index": 1, "count": 1}]},
            {"f_min_hz": 1000, "segments": []},
            {"f_min_hz": 1000, "segments": [{"start_index": 0, "count": 3}]},
            {"f_min_hz": 1000, "segments": [{"start_index": 5, "count": 0}]},
            {"f_min_hz": 1000, "segments": [{"start": 5}]},
            {"segments": [{"start_index": 5, "count": 1}]},
        ],
    )
    def test_rejects_malformed(self, raw):
        with pytest.raises(PlanError):
            validate_plan(raw)

    def test_normalizes_segment_order(self):
        plan = validate_plan(
            {
                "f_min_hz": 1000,
                "segments": [
                    {"start_index": 50, "count": 2},
                    {"start_index": 3, "count": 4},
                ],
            }
        )
        assert [s.start for s in plan.segments] == [3, 50]

    def test_span_at_least_n(self):
        plan = make_plan([(5, 10), (100, 7)])
        assert plan.span >= plan.n_frequencies


class TestCountMultiples:
    def test_hand_enumeration(self):
        plan = make_plan([(10, 10)])  # indices 10..19
        assert count_multiples(plan, 3) == 3  # 12, 15, 18

    def test_j_one_counts_everything(self):
        plan = make_plan([(7, 9), (40, 11)])
        assert count_multiples(plan, 1) == plan.n_frequencies

    def test_band_multiples_of_seven(self):
        plan = make_plan([(54000, 32768)])
        brute = sum(1 for k in range(54000, 86768) if k % 7 == 0)
        assert brute == 4681
        assert count_multiples(plan, 7) == 4681

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            count_multiples(make_plan([(1, 3)]), 0)

    @given(plan=small_plans())
    @settings(max_examples=40, deadline=None)
    def test_matches_brute_force(self, plan):
        for j in range(1, plan.last_index + 1):
            assert count_multiples(plan, j) == count_multiples_brute(plan, j)

    @given(plan=small_plans())
    @settings(max_examples=40, deadline=None)
    def test_segment_bound(self, plan):
        n, L = plan.n_frequencies, plan.n_segments
        for j in range(1, plan.last_index + 5):
            x = count_multiples(plan, j)
            assert n / j - L <= x <= n / j + L

    def test_vanishes_beyond_last_index(self):
        plan = make_plan([(4, 6), (20, 3)])
        for j in range(plan.last_index + 1, plan.last_index + 50):
            assert count_multiples(plan, j) == 0

    def test_vectorized_agrees_with_scalar(self):
        plan = make_plan([(9, 14), (60, 21)])
        x = count_multiples_upto(plan, plan.last_index)
        for j in range(1, plan.last_index + 1):
            assert x[j - 1] == count_multiples(plan, j)


class TestEnumerateIndices:
    def test_single_segment(self):
        assert list(enumerate_indices(make_plan([(2, 3)]))) == [2, 3, 4]

    def test_two_segments(self):
        assert list(enumerate_indices(make_plan([(1, 2), (5, 2)]))) == [1, 2, 5, 6]

    def test_band_head_and_count(self):
        plan = make_plan([(54000, 32768)])
        it = enumerate_indices(plan)
        assert next(it) == 54000
        assert sum(1 for _ in it) == 32767


class TestSampling:
    def test_members_of_plan(self):
        plan = make_plan([(10, 5), (100, 5)])
        rng = np.random.default_rng(3)
        sel = sample_selection(plan, 3, rng)
        assert len(sel) == 3
        assert all(plan.contains_index(k) for k in sel.indices)

    def test_deterministic_given_seed(self):
        plan = make_plan([(10, 50), (100, 50)])
        a = sample_selection(plan, 8, np.random.default_rng(99))
        b = sample_selection(plan, 8, np.random.default_rng(99))
        assert a == b

    def test_uniform_marginals(self):
        plan = make_plan([(1, 4)])
        rng = np.random.default_rng(2024)
        draws = sample_selection_batch(plan, 1, 100_000, rng).ravel()
        sigma = np.sqrt(100_000 * 0.25 * 0.75)
        for k in (1, 2, 3, 4):
            assert abs(np.count_nonzero(draws == k) - 25_000) < 4 * sigma

    def test_rejects_bad_sizes(self):
        plan = make_plan([(1, 4)])
        rng = np.random.default_rng(0)
        with pytest.raises(ValueError):
            sample_selection(plan, 0, rng)
        with pytest.raises(ValueError):
            sample_selection_batch(plan, 2, 0, rng)


class TestSelectionFromIndices:
    def test_accepts_members(self):
        plan = make_plan([(5, 3), (20, 2)])
        sel = selection_from_indices(plan, [5, 21, 7])
        assert sel.indices == (5, 21, 7)

    def test_rejects_outsider(self):
        plan = make_plan([(5, 3)])
        with pytest.raises(SelectionError):
            selection_from_indices(plan, [5, 9])

    def test_rejects_empty(self):
        with pytest.raises(SelectionError):
            selection_from_indices(make_plan([(5, 3)]), [])
