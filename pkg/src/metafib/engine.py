"""Evaluate nested recurrences of Hofstadter type.

A recurrence is a multiset of shifts s_1..s_t with semantics

    a(n) = sum_j a(n - a(n - s_j))

for n beyond the supplied initial condition. References to indices <= 0
go through the underflow policy: the zero convention reads them as 0,
strict mode aborts. Sequences are 1-indexed throughout.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence


class UnderflowPolicy(Enum):
    """How a reference to an index <= 0 is resolved."""

    ZERO = "zero"      # the reference evaluates to 0
    STRICT = "strict"  # the reference aborts evaluation


class UnderflowError(Exception):
    """Strict-mode reference to a nonpositive index.

    ``index`` is the term being computed, ``shift`` the inner offset whose
    term drove the outer reference to ``target``.
    """

    def __init__(self, index: int, shift: int, target: int):
        self.index = index
        self.shift = shift
        self.target = target
        super().__init__(
            f"underflow at n={index}: inner shift {shift} gives "
            f"a({index} - a({index - shift})) = a({target})"
        )


class ForwardReferenceError(Exception):
    """Outer reference at or beyond the term being computed.

    Happens when a(n - s_j) <= 0, so the outer index n - a(n - s_j) is n
    or more. Distinct from underflow: treating it as 0 would fabricate a
    value the recurrence never defines.
    """

    def __init__(self, index: int, shift: int, target: int):
        self.index = index
        self.shift = shift
        self.target = target
        super().__init__(
            f"forward reference at n={index}: inner shift {shift} gives "
            f"a({index} - a({index - shift})) = a({target})"
        )


class NotExtendableError(ValueError):
    """extend() called on a buffer without recurrence provenance."""


@dataclass(frozen=True)
class NestedRecurrence:
    """Shift multiset for a(n) = sum_j a(n - a(n - s_j))."""

    shifts: tuple[int, ...]

    def __post_init__(self):
        if not self.shifts:
            raise ValueError("shift list must be nonempty")
        if any(s < 1 for s in self.shifts):
            raise ValueError(f"all shifts must be >= 1, got {self.shifts}")

    @property
    def max_shift(self) -> int:
        return max(self.shifts)


HOFSTADTER_Q = NestedRecurrence((1, 2))


@dataclass(frozen=True)
class RecurrenceProvenance:
    recurrence: NestedRecurrence
    initial: tuple[int, ...]
    policy: UnderflowPolicy


@dataclass(frozen=True)
class ExplicitProvenance:
    label: str


Provenance = RecurrenceProvenance | ExplicitProvenance


class SequenceBuffer:
    """Immutable 1-indexed prefix of an integer sequence plus provenance.

    ``buf[m]`` is the m-th term, m from 1 to len(buf). ``to_list`` returns
    a plain 0-based list for bulk work.
    """

    __slots__ = ("_terms", "provenance")

    def __init__(self, terms: Sequence[int], provenance: Provenance):
        self._terms = list(terms)
        self.provenance = provenance

    def __len__(self) -> int:
        return len(self._terms)

    def __getitem__(self, m: int) -> int:
        if not 1 <= m <= len(self._terms):
            raise IndexError(f"index {m} outside [1, {len(self._terms)}]")
        return self._terms[m - 1]

    def __iter__(self):
        return iter(self._terms)

    def to_list(self) -> list[int]:
        return list(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SequenceBuffer):
            return NotImplemented
        return self._terms == other._terms and self.provenance == other.provenance

    def __repr__(self) -> str:
        head = ", ".join(map(str, self._terms[:8]))
        tail = ", ..." if len(self._terms) > 8 else ""
        return f"SequenceBuffer([{head}{tail}], len={len(self._terms)})"


def _check_inputs(rec: NestedRecurrence, init: Sequence[int], n_max: int) -> None:
    if not init:
        raise ValueError("initial condition must be nonempty")
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if n_max > len(init) and len(init) < rec.max_shift:
        raise ValueError(
            f"initial condition of length {len(init)} is shorter than the "
            f"largest shift {rec.max_shift}; cannot compute past it"
        )


def iter_terms(
    rec: NestedRecurrence,
    init: Sequence[int],
    policy: UnderflowPolicy = UnderflowPolicy.ZERO,
) -> Iterator[tuple[int, int]]:
    """Yield (n, a(n)) for n = 1, 2, ... indefinitely.

    Terms 1..len(init) come from the initial condition verbatim; later
    terms from the recurrence. Raises UnderflowError or
    ForwardReferenceError as the corresponding references occur.
    """
    if not init:
        raise ValueError("initial condition must be nonempty")
    terms = list(init)
    for i, v in enumerate(terms):
        yield i + 1, v
    if len(init) < rec.max_shift:
        raise ValueError(
            f"initial condition of length {len(init)} is shorter than the "
            f"largest shift {rec.max_shift}; cannot compute past it"
        )
    shifts = rec.shifts
    zero_ok = policy is UnderflowPolicy.ZERO
    n = len(terms)
    while True:
        n += 1
        total = 0
        for s in shifts:
            inner = terms[n - s - 1]  # a(n - s); n - s >= 1 by the length check
            outer = n - inner
            if outer <= 0:
                if not zero_ok:
                    raise UnderflowError(n, s, outer)
                continue
            if outer >= n:
                raise ForwardReferenceError(n, s, outer)
            total += terms[outer - 1]
        terms.append(total)
        yield n, total


def _compute_terms(
    rec: NestedRecurrence,
    init: Sequence[int],
    n_max: int,
    policy: UnderflowPolicy,
) -> list[int]:
    _check_inputs(rec, init, n_max)
    if n_max <= len(init):
        return list(init[:n_max])
    terms = list(init)
    shifts = rec.shifts
    zero_ok = policy is UnderflowPolicy.ZERO
    for n in range(len(init) + 1, n_max + 1):
        total = 0
        for s in shifts:
            inner = terms[n - s - 1]
            outer = n - inner
            if outer <= 0:
                if not zero_ok:
                    raise UnderflowError(n, s, outer)
                continue
            if outer >= n:
                raise ForwardReferenceError(n, s, outer)
            total += terms[outer - 1]
        terms.append(total)
    return terms


def compute(
    rec: NestedRecurrence,
    init: Sequence[int],
    n_max: int,
    policy: UnderflowPolicy = UnderflowPolicy.ZERO,
) -> SequenceBuffer:
    """Evaluate ``rec`` from ``init`` out to n_max terms."""
    terms = _compute_terms(rec, init, n_max, policy)
    return SequenceBuffer(
        terms, RecurrenceProvenance(rec, tuple(init), policy)
    )


def extend(buf: SequenceBuffer, n_max: int) -> SequenceBuffer:
    """Grow a recurrence-produced buffer to n_max terms.

    The existing terms are reused unchanged (prefix stability); only the
    new tail is computed.
    """
    prov = buf.provenance
    if not isinstance(prov, RecurrenceProvenance):
        raise NotExtendableError(
            "buffer has explicit provenance and cannot be extended"
        )
    if n_max < len(buf):
        raise ValueError(
            f"n_max {n_max} is smaller than the current length {len(buf)}"
        )
    if n_max == len(buf):
        return buf
    terms = _compute_terms(prov.recurrence, buf.to_list(), n_max, prov.policy)
    return SequenceBuffer(terms, prov)
