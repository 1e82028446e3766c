"""Quasipolynomial solutions to the Hofstadter Q-recurrence.

For every degree d >= 1 there is an eventually-quasipolynomial sequence
with period 3d that satisfies a(n) = a(n - a(n-1)) + a(n - a(n-2)) under
the zero underflow convention, once past an initial condition of length
3d + 2. Residue classes r (mod 3d) carry:

    r = 0 (mod 3):  the degree-(r/3 + 1) polynomial piece in n, m = 3dn + r
    r = 1 (mod 3):  the constant 3d
    r = 2 (mod 3):  the constant 3, except 2 at r = 3d - 1

with exceptional first values a(1) = 3d - 2 and a(2) = 0. The pieces are
integer combinations of binomial coefficients,

    piece(d, k, n) = 3d C(n+k, 1+k) + sum_{i=1..k} w_i C(n-1+k-i, k-i),

with default weights w_i = 3i + 2; any weights with w_i >= 3i + 2 work.
Golomb's classical quasilinear solution (initial condition 3, 2, 1) is
also provided, as are exhaustive numerical checkers for the two facts the
construction rests on.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional, Sequence, Union

from metafib.engine import (
    HOFSTADTER_Q,
    ExplicitProvenance,
    NestedRecurrence,
    SequenceBuffer,
)
from metafib.exact import BinomialTerm, Polynomial, binom, poly_from_samples


def default_weight(i: int) -> int:
    """Smallest admissible weight for summand i."""
    return 3 * i + 2


@dataclass(frozen=True)
class WeightSequence:
    """Weights w_1, w_2, ... for the piece polynomials.

    Entries beyond the stored tuple fall back to the default 3i + 2, so
    the empty sequence is the standard construction. Admissibility
    (w_i >= 3i + 2) is validated eagerly: an inadmissible weight would
    produce a silently wrong sequence, not an obviously broken one.
    """

    entries: tuple[int, ...] = ()

    def __post_init__(self):
        for i, w in enumerate(self.entries, start=1):
            if w < default_weight(i):
                raise ValueError(
                    f"weight w_{i} = {w} is inadmissible; need w_{i} >= {default_weight(i)}"
                )

    def weight(self, i: int) -> int:
        if i < 1:
            raise ValueError(f"weight index must be >= 1, got {i}")
        if i <= len(self.entries):
            return self.entries[i - 1]
        return default_weight(i)


DEFAULT_WEIGHTS = WeightSequence()

WeightsLike = Union[WeightSequence, Sequence[int], None]


def _coerce_weights(weights: WeightsLike) -> WeightSequence:
    if weights is None:
        return DEFAULT_WEIGHTS
    if isinstance(weights, WeightSequence):
        return weights
    return WeightSequence(tuple(weights))


def piece_terms(d: int, k: int, weights: WeightsLike = None) -> tuple[BinomialTerm, ...]:
    """The piece polynomial as a sum of binomial-basis terms."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if k < -1:
        raise ValueError(f"k must be >= -1, got {k}")
    w = _coerce_weights(weights)
    terms = [BinomialTerm(3 * d, k, 1 + k)]
    for i in range(1, k + 1):
        terms.append(BinomialTerm(w.weight(i), k - i - 1, k - i))
    return tuple(terms)


def piece_value(d: int, k: int, n: int, weights: WeightsLike = None) -> int:
    """Evaluate the degree-(k+1) piece polynomial at integer n, exactly."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if k < -1:
        raise ValueError(f"k must be >= -1, got {k}")
    w = _coerce_weights(weights)
    total = 3 * d * binom(n + k, 1 + k)
    for i in range(1, k + 1):
        total += w.weight(i) * binom(n - 1 + k - i, k - i)
    return total


@lru_cache(maxsize=None)
def _piece_polynomial_cached(d: int, k: int, weights: WeightSequence) -> Polynomial:
    samples = [piece_value(d, k, n, weights) for n in range(k + 3)]
    return poly_from_samples(samples, 0)


def piece_polynomial(d: int, k: int, weights: WeightsLike = None) -> Polynomial:
    """Monomial form of the piece, recovered by exact interpolation."""
    return _piece_polynomial_cached(d, k, _coerce_weights(weights))


@dataclass(frozen=True)
class QuasipolySolution:
    """One member of the solution family: degree d, period 3d."""

    degree: int
    weights: WeightSequence = DEFAULT_WEIGHTS

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"degree must be >= 1, got {self.degree}")

    @property
    def period(self) -> int:
        return 3 * self.degree

    @property
    def first_term(self) -> int:
        """Exceptional value at index 1."""
        return 3 * self.degree - 2

    @property
    def second_term(self) -> int:
        """Exceptional value at index 2."""
        return 0

    @property
    def initial_length(self) -> int:
        return 3 * self.degree + 2

    def term(self, m: int) -> int:
        """Closed-form value at index m >= 1."""
        if m < 1:
            raise ValueError(f"index must be >= 1, got {m}")
        if m == 1:
            return self.first_term
        if m == 2:
            return self.second_term
        q = self.period
        n, r = divmod(m, q)
        rem3 = r % 3
        if rem3 == 0:
            return piece_value(self.degree, r // 3, n, self.weights)
        if rem3 == 1:
            return q
        return 2 if r == q - 1 else 3

    def residue_piece(self, r: int) -> Polynomial:
        """Eventual piece for residue class r, as a polynomial in n (m = 3dn + r)."""
        q = self.period
        if not 0 <= r < q:
            raise ValueError(f"residue must lie in [0, {q}), got {r}")
        rem3 = r % 3
        if rem3 == 0:
            return piece_polynomial(self.degree, r // 3, self.weights)
        if rem3 == 1:
            return Polynomial.constant(q)
        return Polynomial.constant(2 if r == q - 1 else 3)

    def pieces(self) -> dict[int, Polynomial]:
        return {r: self.residue_piece(r) for r in range(self.period)}

    def initial_condition(self) -> list[int]:
        return [self.term(m) for m in range(1, self.initial_length + 1)]

    def buffer(self, n_max: int) -> SequenceBuffer:
        """Closed-form terms 1..n_max as an explicit-provenance buffer.

        Polynomial classes are filled by forward-difference stepping, so
        the cost per term is O(degree) integer additions rather than a
        fresh binomial-sum evaluation.
        """
        if n_max < 1:
            raise ValueError(f"n_max must be >= 1, got {n_max}")
        d, q = self.degree, self.period
        terms = [0] * n_max
        for r in range(q):
            rem3 = r % 3
            if rem3 == 0:
                continue
            value = q if rem3 == 1 else (2 if r == q - 1 else 3)
            if r <= n_max:
                span = range(r - 1, n_max, q)
                terms[r - 1 : n_max : q] = [value] * len(span)
        for ell in range(d):
            r = 3 * ell
            n0 = 1 if r == 0 else 0
            first = q * n0 + r
            if first > n_max:
                continue
            count = (n_max - first) // q + 1
            values = self._piece_run(ell, n0, count)
            terms[first - 1 : n_max : q] = values
        if n_max >= 1:
            terms[0] = self.first_term
        if n_max >= 2:
            terms[1] = self.second_term
        label = f"closed form d={d}"
        if self.weights is not DEFAULT_WEIGHTS and self.weights.entries:
            label += f" weights={list(self.weights.entries)}"
        return SequenceBuffer(terms, ExplicitProvenance(label))

    def _piece_run(self, ell: int, n0: int, count: int) -> list[int]:
        """piece(d, ell, n) for n = n0, n0+1, ..., n0+count-1."""
        deg = ell + 1
        if count <= deg + 1:
            return [piece_value(self.degree, ell, n0 + i, self.weights) for i in range(count)]
        row = [piece_value(self.degree, ell, n0 + i, self.weights) for i in range(deg + 1)]
        diffs = []
        while row:
            diffs.append(row[0])
            row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
        out = []
        for _ in range(count):
            out.append(diffs[0])
            for j in range(deg):
                diffs[j] += diffs[j + 1]
        return out


def solution_term(d: int, m: int, weights: WeightsLike = None) -> int:
    """Closed-form term a(m) of the degree-d solution."""
    return QuasipolySolution(d, _coerce_weights(weights)).term(m)


def initial_condition(d: int, weights: WeightsLike = None) -> list[int]:
    """The 3d + 2 initial values the recurrence takes over from."""
    return QuasipolySolution(d, _coerce_weights(weights)).initial_condition()


def closed_form_buffer(d: int, n_max: int, weights: WeightsLike = None) -> SequenceBuffer:
    """Terms 1..n_max of the degree-d solution, explicit provenance."""
    return QuasipolySolution(d, _coerce_weights(weights)).buffer(n_max)


def golomb_term(m: int) -> int:
    """Golomb's purely quasilinear solution: 3n-2, 3, 3n+2 on classes mod 3."""
    if m < 1:
        raise ValueError(f"index must be >= 1, got {m}")
    r = m % 3
    if r == 0:
        return m - 2
    if r == 1:
        return 3
    return m


def golomb_polynomials() -> dict[int, Polynomial]:
    """Golomb pieces per residue class mod 3, in n with m = 3n + r."""
    return {
        0: Polynomial((-2, 3)),
        1: Polynomial.constant(3),
        2: Polynomial((2, 3)),
    }


def q_identity_holds(
    a: Callable[[int], int], m: int, rec: NestedRecurrence = HOFSTADTER_Q
) -> bool:
    """Value-level recurrence identity at index m under the zero convention.

    a(m) == sum_j a(m - a(m - s_j)), reading any nonpositive argument as 0.
    ``a`` must be defined at every positive index the identity touches.
    """
    total = 0
    for s in rec.shifts:
        inner = a(m - s) if m - s >= 1 else 0
        outer = m - inner
        if outer >= 1:
            total += a(outer)
    return total == a(m)


@dataclass(frozen=True)
class PascalCheckReport:
    """Outcome of the exhaustive piece-recurrence sweep."""

    holds: bool
    d: int
    k_max: int
    n_max: int
    counterexample: Optional[tuple[int, int, int, int]] = None  # (k, n, lhs, rhs)


@dataclass(frozen=True)
class BoundCheckReport:
    """Outcome of the exhaustive lower-bound sweep."""

    holds: bool
    d: int
    k_max: int
    n_max: int
    equality_witnesses: tuple[tuple[int, int], ...] = ()
    counterexample: Optional[tuple[int, int, int, int]] = None  # (k, n, value, bound)


def check_piece_pascal(
    d: int, k_max: int, n_max: int, weights: WeightsLike = None
) -> PascalCheckReport:
    """Check piece(d,k,n) = piece(d,k-1,n) + piece(d,k,n-1) for
    0 <= k <= k_max, 1 <= n <= n_max. Exact, exhaustive."""
    w = _coerce_weights(weights)
    for k in range(0, k_max + 1):
        for n in range(1, n_max + 1):
            lhs = piece_value(d, k, n, w)
            rhs = piece_value(d, k - 1, n, w) + piece_value(d, k, n - 1, w)
            if lhs != rhs:
                return PascalCheckReport(False, d, k_max, n_max, (k, n, lhs, rhs))
    return PascalCheckReport(True, d, k_max, n_max)


def check_piece_lower_bound(
    d: int, k_max: int, n_max: int, weights: WeightsLike = None
) -> BoundCheckReport:
    """Check piece(d,k,n) >= 3dn + 3k + 2 for 1 <= k <= k_max,
    0 <= n <= n_max, collecting the (k, n) pairs attaining equality."""
    w = _coerce_weights(weights)
    witnesses: list[tuple[int, int]] = []
    for k in range(1, k_max + 1):
        for n in range(0, n_max + 1):
            value = piece_value(d, k, n, w)
            bound = 3 * d * n + 3 * k + 2
            if value < bound:
                return BoundCheckReport(
                    False, d, k_max, n_max, tuple(witnesses), (k, n, value, bound)
                )
            if value == bound:
                witnesses.append((k, n))
    return BoundCheckReport(True, d, k_max, n_max, tuple(witnesses))
