"""Exact integer and rational arithmetic: extended binomial coefficients,
finite differences, and Newton-form polynomial interpolation.

Everything here is exact. Values are Python ints and ``fractions.Fraction``;
no operation introduces floating point.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]


def binom(x: int, k: int) -> int:
    """Binomial coefficient C(x, k) extended to every integer x.

    Defined as the falling-factorial polynomial x(x-1)...(x-k+1) / k!,
    so negative upper arguments are fine: C(-1, 0) = 1, C(-2, 1) = -2.
    Always an integer.
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if x >= 0:
        return math.comb(x, k)
    # x < 0: falling(x, k) = (-1)^k * falling(k - x - 1, k)
    return (-1) ** k * math.comb(k - x - 1, k)


def finite_difference(values: Sequence[int]) -> list[int]:
    """Consecutive differences values[i+1] - values[i]."""
    if len(values) < 2:
        raise ValueError("need at least two values to difference")
    return [values[i + 1] - values[i] for i in range(len(values) - 1)]


class Polynomial:
    """Polynomial with exact rational coefficients, stored lowest degree first.

    Normalized: the coefficient tuple never ends in zero, and the zero
    polynomial is the empty tuple (degree -1).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: Rational) -> "Polynomial":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __call__(self, n: Rational) -> Fraction:
        """Exact Horner evaluation."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * n + c
        return acc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return format_poly(self)


def format_poly(p: Polynomial, var: str = "n") -> str:
    """Render with rational coefficients in lowest terms, descending degree.

    Examples: "3/2 n^3 + 9/2 n^2 + 8 n + 8", "3 n - 2", "0".
    """
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for e in range(p.degree, -1, -1):
        c = p.coeffs[e]
        if c == 0:
            continue
        mag = -c if c < 0 else c
        if e == 0:
            body = str(mag)
        else:
            v = var if e == 1 else f"{var}^{e}"
            body = v if mag == 1 else f"{mag} {v}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def poly_from_samples(values: Sequence[Rational], start: int) -> Polynomial:
    """Interpolate f(start), f(start+1), ... by Newton forward differences.

    Returns the unique polynomial of degree < len(values) through the
    samples, in monomial form with exact rational coefficients. Minimal
    degree falls out automatically: trailing zero differences contribute
    nothing.
    """
    if not values:
        raise ValueError("cannot interpolate an empty sample list")
    # Forward-difference table; row j holds Delta^j f(start).
    table = [Fraction(v) for v in values]
    newton: list[Fraction] = [table[0]]
    for j in range(1, len(values)):
        table = [table[i + 1] - table[i] for i in range(len(table) - 1)]
        newton.append(table[0])
    # f(n) = sum_j Delta^j f(start) * C(t, j) with t = n - start.
    # Accumulate monomial coefficients of basis = t(t-1)...(t-j+1)/j!.
    coeffs = [Fraction(0)] * len(values)
    basis = [Fraction(1)]  # polynomial in n, ascending
    for j, d in enumerate(newton):
        if d != 0:
            for e, b in enumerate(basis):
                coeffs[e] += d * b
        # basis *= (n - start - j) / (j + 1)
        shift = Fraction(-(start + j), j + 1)
        inv = Fraction(1, j + 1)
        basis = [basis[0] * shift] + [
            basis[i] * shift + basis[i - 1] * inv for i in range(1, len(basis))
        ] + [basis[-1] * inv]
    return Polynomial(coeffs)


@dataclass(frozen=True)
class BinomialTerm:
    """The function n -> weight * C(n + shift, choose).

    As a polynomial in n this has degree ``choose`` and takes integer
    values at every integer, which is why sums of these stay in integer
    arithmetic.
    """

    weight: int
    shift: int
    choose: int

    def value_at(self, n: int) -> int:
        return self.weight * binom(n + self.shift, self.choose)
