"""Unambiguous distance of a phase-based ranging system with hopping frequencies.

Library layout:

- ``numtheory`` — Mobius sieve, integer-argument zeta, multi-way GCD
- ``spectrum`` — segmented frequency plans and the induced index set
- ``ranging`` — phase-shift model and UD = c / (gcd * f_min)
- ``estimator`` — exact / asymptotic / Monte Carlo probability of maximal UD
- ``cli`` — `udrange` command-line driver
- ``fig1`` — bundled 54-862 MHz, N = 2^15 simulation scenarios
"""

from .estimator import (
    ProbabilityEstimate,
    SweepRow,
    prob_asymptotic,
    prob_exact,
    prob_montecarlo,
    sweep,
)
from .numtheory import MobiusTable, gcd_all, sieve_mobius, zeta_int
from .ranging import (
    SPEED_OF_LIGHT_M_S,
    PhaseVector,
    UdResult,
    compute_ud,
    phase_shifts,
    verify_ambiguity,
)
from .spectrum import (
    FrequencyPlan,
    PlanError,
    Segment,
    Selection,
    SelectionError,
    count_multiples,
    enumerate_indices,
    load_plan,
    sample_selection,
    selection_from_indices,
    validate_plan,
)

__all__ = [
    "FrequencyPlan",
    "MobiusTable",
    "PhaseVector",
    "PlanError",
    "ProbabilityEstimate",
    "SPEED_OF_LIGHT_M_S",
    "Segment",
    "Selection",
    "SelectionError",
    "SweepRow",
    "UdResult",
    "compute_ud",
    "count_multiples",
    "enumerate_indices",
    "gcd_all",
    "load_plan",
    "phase_shifts",
    "prob_asymptotic",
    "prob_exact",
    "prob_montecarlo",
    "sample_selection",
    "selection_from_indices",
    "sieve_mobius",
    "sweep",
    "validate_plan",
    "verify_ambiguity",
    "zeta_int",
]

__version__ = "0.1.0"
