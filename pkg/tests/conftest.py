from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

from udrange import fig1
from udrange.spectrum import FrequencyPlan, validate_plan

REPO_ROOT = Path(__file__).resolve().parents[1]
PLAN_DIR = REPO_ROOT / "plans"


@pytest.fixture(scope="session")
def fig1_plans() -> tuple[FrequencyPlan, ...]:
    return fig1.all_plans()


@pytest.fixture(scope="session")
def fig1_plan_l1(fig1_plans) -> FrequencyPlan:
    return fig1_plans[0]


def make_plan(segments, f_min_hz=1000.0) -> FrequencyPlan:
    return validate_plan(
        {
            "f_min_hz": f_min_hz,
            "segments": [{"start_index": a, "count": n} for a, n in segments],
        }
    )


@st.composite
def small_plans(draw, max_segments=4, max_count=25, total_cap=100):
    """Random valid plans with small index sets, for brute-force comparison."""
    n_segments = draw(st.integers(1, max_segments))
    segments = []
    pos = draw(st.integers(1, 10))
    total = 0
    for _ in range(n_segments):
        count = draw(st.integers(1, max_count))
        if total + count > total_cap:
            count = max(1, total_cap - total)
        segments.append((pos, count))
        total += count
        pos += count + draw(st.integers(1, 12))
    return make_plan(segments)


def random_tiny_plan(rng: np.random.Generator, max_total=60, max_segments=4):
    """Seeded random plan with N <= max_total, for the acceptance oracle runs."""
    n_segments = int(rng.integers(1, max_segments + 1))
    segments = []
    pos = int(rng.integers(1, 30))
    budget = int(rng.integers(n_segments, max_total + 1))
    counts = rng.multinomial(budget - n_segments, [1 / n_segments] * n_segments)
    for c in counts:
        count = int(c) + 1
        segments.append((pos, count))
        pos += count + int(rng.integers(1, 20))
    return make_plan(segments)
