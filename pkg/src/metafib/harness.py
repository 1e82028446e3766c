"""End-to-end verification campaigns.

Ties the recurrence engine to the closed forms: recompute each
construction from its initial condition and demand exact term-by-term
agreement, measure where the recurrence identity actually starts to
hold, and scan Hofstadter's original sequence for the overshoot
a(n) > n that would make the next step undefined without the zero
convention.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Optional, Sequence

from metafib.closedform import QuasipolySolution, WeightsLike, _coerce_weights, golomb_term
from metafib.engine import (
    HOFSTADTER_Q,
    NestedRecurrence,
    UnderflowPolicy,
    compute,
    iter_terms,
)


@dataclass(frozen=True)
class VerificationReport:
    subject: str
    range_checked: tuple[int, int]
    match: bool
    first_mismatch: Optional[tuple[int, int, int]]  # (index, expected, actual)
    first_valid_index: Optional[int]


def first_valid_index(values: Sequence[int], rec: NestedRecurrence = HOFSTADTER_Q) -> int:
    """Smallest m such that the recurrence identity holds at every
    checked index >= m, measured on the completed value list.

    The identity is read value-level under the zero convention: inner and
    outer references to nonpositive indices contribute 0, and references
    at or past the current index are resolved against the list itself.
    An index whose references land beyond the list cannot be validated
    and counts as not holding.
    """
    n = len(values)
    shifts = rec.shifts
    last_bad = 0
    for m in range(1, n + 1):
        total = 0
        for s in shifts:
            i = m - s
            inner = values[i - 1] if i >= 1 else 0
            outer = m - inner
            if outer >= 1:
                if outer > n:
                    total = None
                    break
                total += values[outer - 1]
        if total != values[m - 1]:
            last_bad = m
    return last_bad + 1


def verify_construction(
    d: int, n_max: int, weights: WeightsLike = None
) -> VerificationReport:
    """Engine output from the degree-d initial condition vs the closed form.

    Exact term-by-term comparison over m = 1..n_max, plus the measured
    first index from which the recurrence identity holds on the closed
    form (the construction guarantees validity past 3d + 2; the actual
    start is reported, not assumed).
    """
    sol = QuasipolySolution(d, _coerce_weights(weights))
    if n_max <= sol.initial_length:
        raise ValueError(
            f"n_max must exceed the initial condition length {sol.initial_length}"
        )
    closed = sol.buffer(n_max).to_list()
    engine = compute(
        HOFSTADTER_Q, sol.initial_condition(), n_max, UnderflowPolicy.ZERO
    ).to_list()
    mismatch = _first_difference(closed, engine)
    subject = f"construction d={d}"
    if sol.weights.entries:
        subject += f" weights={list(sol.weights.entries)}"
    return VerificationReport(
        subject=subject,
        range_checked=(1, n_max),
        match=mismatch is None,
        first_mismatch=mismatch,
        first_valid_index=first_valid_index(closed),
    )


def verify_golomb(n_max: int) -> VerificationReport:
    """Engine output from [3, 2, 1] vs Golomb's quasilinear pieces."""
    if n_max < 3:
        raise ValueError(f"n_max must be >= 3, got {n_max}")
    closed = [golomb_term(m) for m in range(1, n_max + 1)]
    engine = compute(HOFSTADTER_Q, [3, 2, 1], n_max, UnderflowPolicy.ZERO).to_list()
    mismatch = _first_difference(closed, engine)
    return VerificationReport(
        subject="golomb",
        range_checked=(1, n_max),
        match=mismatch is None,
        first_mismatch=mismatch,
        first_valid_index=first_valid_index(closed),
    )


def wellposed_scan(init: Sequence[int], n_max: int) -> Optional[int]:
    """Smallest computed n <= n_max with a(n) > n, or None.

    a(n) > n means the next step would reference a nonpositive index, so
    without the zero convention the sequence would die at n + 1. The scan
    stops at the first overshoot; initial-condition entries are given,
    not computed, and are not scanned.
    """
    start = len(init)
    for n, value in islice(iter_terms(HOFSTADTER_Q, init, UnderflowPolicy.ZERO), n_max):
        if n > start and value > n:
            return n
    return None


def _first_difference(
    expected: Sequence[int], actual: Sequence[int]
) -> Optional[tuple[int, int, int]]:
    for i, (e, a) in enumerate(zip(expected, actual)):
        if e != a:
            return (i + 1, e, a)
    return None
