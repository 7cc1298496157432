"""Segmented frequency plans on the f_min grid and the induced integer index set."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Iterator, Mapping, Sequence

import numpy as np


class PlanError(ValueError):
    """Raised for structurally invalid frequency plans."""


class SelectionError(ValueError):
    """Raised when indices fall outside a plan's index set."""


@dataclass(frozen=True)
class Segment:
    """Contiguous run of grid indices ``start .. start + count - 1``."""

    start: int
    count: int

    @property
    def end(self) -> int:
        """Last index covered (inclusive)."""
        return self.start + self.count - 1


@dataclass(frozen=True)
class FrequencyPlan:
    """Available bandwidth: f_min grid spacing plus disjoint index segments.

    Segment l covers grid indices [a_l, a_l + count_l - 1], i.e. frequencies
    a_l * f_min .. (a_l + count_l - 1) * f_min.
    """

    f_min_hz: float
    segments: tuple[Segment, ...]

    @property
    def n_segments(self) -> int:
        return len(self.segments)

    @property
    def n_frequencies(self) -> int:
        return sum(s.count for s in self.segments)

    @property
    def first_index(self) -> int:
        return self.segments[0].start

    @property
    def last_index(self) -> int:
        return self.segments[-1].end

    @property
    def span(self) -> int:
        """Number of grid points between first and last index, inclusive."""
        return self.last_index - self.first_index + 1

    def contains_index(self, k: int) -> bool:
        for seg in self.segments:
            if seg.start <= k <= seg.end:
                return True
        return False

    def to_dict(self) -> dict[str, Any]:
        return {
            "f_min_hz": self.f_min_hz,
            "segments": [
                {"start_index": s.start, "count": s.count} for s in self.segments
            ],
        }


@dataclass(frozen=True)
class Selection:
    """Ordered tuple of grid indices used in one measurement."""

    indices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.indices)


def validate_plan(raw: Mapping[str, Any] | FrequencyPlan) -> FrequencyPlan:
    """Build a validated FrequencyPlan from a raw description.

    Accepts ``{"f_min_hz": number, "segments": [{"start_index", "count"}, ...]}``
    (or an already-built plan, which is re-checked). Segments are sorted by
    start index; overlaps, zero counts, zero start indices and non-positive
    f_min are rejected.
    """
    if isinstance(raw, FrequencyPlan):
        raw = raw.to_dict()
    try:
        f_min = float(raw["f_min_hz"])
        raw_segments = raw["segments"]
    except (KeyError, TypeError) as exc:
        raise PlanError(f"plan is missing required field: {exc}") from exc
    if not f_min > 0:
        raise PlanError(f"f_min_hz must be positive, got {f_min}")
    if not raw_segments:
        raise PlanError("plan must contain at least one segment")

    segments = []
    for i, rs in enumerate(raw_segments):
        try:
            if isinstance(rs, Segment):
                start, count = rs.start, rs.count
            else:
                start, count = int(rs["start_index"]), int(rs["count"])
        except (KeyError, TypeError, ValueError) as exc:
            raise PlanError(f"segment {i} is malformed: {rs!r}") from exc
        if start < 1:
            raise PlanError(f"segment {i}: start_index must be >= 1, got {start}")
        if count < 1:
            raise PlanError(f"segment {i}: count must be >= 1, got {count}")
        segments.append(Segment(start=start, count=count))

    segments.sort(key=lambda s: s.start)
    for prev, cur in zip(segments, segments[1:]):
        if cur.start <= prev.end:
            raise PlanError(
                f"segments overlap: [{prev.start}, {prev.end}] and "
                f"[{cur.start}, {cur.end}]"
            )
    return FrequencyPlan(f_min_hz=f_min, segments=tuple(segments))


def load_plan(path: str | Path) -> FrequencyPlan:
    """Read and validate a JSON plan file."""
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise PlanError(f"cannot read plan file {path}: {exc}") from exc
    return validate_plan(raw)


def count_multiples(plan: FrequencyPlan, j: int) -> int:
    """Number of indices in the plan's index set divisible by j; exact, O(L)."""
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    return sum(s.end // j - (s.start - 1) // j for s in plan.segments)


def count_multiples_upto(plan: FrequencyPlan, j_max: int) -> np.ndarray:
    """Vectorized count_multiples for j = 1..j_max; entry [j-1] is x_j."""
    j = np.arange(1, j_max + 1, dtype=np.int64)
    x = np.zeros(j_max, dtype=np.int64)
    for s in plan.segments:
        x += s.end // j - (s.start - 1) // j
    return x


def enumerate_indices(plan: FrequencyPlan) -> Iterator[int]:
    """Yield all indices of the plan's set in ascending order."""
    for s in plan.segments:
        yield from range(s.start, s.end + 1)


def _positions_to_indices(plan: FrequencyPlan, positions: np.ndarray) -> np.ndarray:
    """Map flat positions 0..N-1 onto grid indices across segments."""
    starts = np.array([s.start for s in plan.segments], dtype=np.int64)
    counts = np.array([s.count for s in plan.segments], dtype=np.int64)
    cum = np.cumsum(counts)
    seg = np.searchsorted(cum, positions, side="right")
    offset_before = cum - counts
    return starts[seg] + (positions - offset_before[seg])


def sample_selection_batch(
    plan: FrequencyPlan, m: int, n: int, rng: np.random.Generator
) -> np.ndarray:
    """Draw n independent selections of m indices each, uniform with replacement.

    Returns an (n, m) int64 array of grid indices; advances the generator.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    positions = rng.integers(0, plan.n_frequencies, size=(n, m), dtype=np.int64)
    return _positions_to_indices(plan, positions)


def sample_selection(
    plan: FrequencyPlan, m: int, rng: np.random.Generator
) -> Selection:
    """Draw one selection of m indices, uniform with replacement."""
    row = sample_selection_batch(plan, m, 1, rng)[0]
    return Selection(indices=tuple(int(k) for k in row))


def selection_from_indices(
    plan: FrequencyPlan, indices: Sequence[int]
) -> Selection:
    """Build a Selection, checking every index against the plan's segments."""
    if not indices:
        raise SelectionError("selection must contain at least one index")
    checked = []
    for k in indices:
        k = int(k)
        if not plan.contains_index(k):
            raise SelectionError(f"index {k} is not in the plan's index set")
        checked.append(k)
    return Selection(indices=tuple(checked))
