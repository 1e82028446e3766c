"""Detect eventual quasipolynomial structure in a computed sequence.

For each candidate period q (smallest first) the buffer is split into
residue classes, index m = qn + r. Each class is interpolated from its
LAST deg_max + 1 samples, the part of the sequence most likely past the
eventual onset, and the fitted polynomial is then validated backward
toward the start of the class. A period wins only when every class keeps
at least ``min_confirm`` matching samples outside its interpolation
window; the guard keeps short chaotic prefixes from being overfit.

A failed search returns None. That is an ordinary outcome, not an error:
it means no structure was found within the requested bounds.
"""
from __future__ import annotations

from dataclasses import dataclass

from metafib.engine import SequenceBuffer
from metafib.exact import Polynomial, poly_from_samples


@dataclass(frozen=True)
class QuasipolyFit:
    """A verified eventual quasipolynomial description of a buffer.

    ``residue_polys[r]`` is a polynomial in n where index m = period*n + r;
    every buffer term with index >= onset equals its class polynomial.
    ``confirmed`` is the smallest number of matching out-of-window samples
    any class contributed.
    """

    period: int
    onset: int
    residue_polys: dict[int, Polynomial]
    confirmed: int

    def predict(self, m: int) -> int:
        """Fitted value at index m (meaningful for m >= onset)."""
        n, r = divmod(m, self.period)
        value = self.residue_polys[r](n)
        if value.denominator != 1:
            raise ValueError(f"fit is not integral at index {m}")
        return int(value)

    def matches(self, buf: SequenceBuffer) -> bool:
        """Does every buffer term with index >= onset equal the fit?"""
        values = buf.to_list()
        return all(
            self.predict(m) == values[m - 1] for m in range(self.onset, len(values) + 1)
        )


def detect_quasipoly(
    buf: SequenceBuffer,
    q_max: int,
    deg_max: int,
    min_confirm: int = 20,
) -> QuasipolyFit | None:
    """Search for the smallest period q <= q_max admitting a full fit.

    Returns None when no period fits within the degree cap and
    confirmation requirement. Candidate periods whose residue classes are
    too small to interpolate AND confirm are skipped; if even q = 1 is
    too large for the buffer, the search is meaningless and raises.
    """
    if q_max < 1:
        raise ValueError(f"q_max must be >= 1, got {q_max}")
    if deg_max < 0:
        raise ValueError(f"deg_max must be >= 0, got {deg_max}")
    if min_confirm < 1:
        raise ValueError(f"min_confirm must be >= 1, got {min_confirm}")
    window = deg_max + 1
    if len(buf) < window + min_confirm:
        raise ValueError(
            f"buffer of length {len(buf)} cannot support any search with "
            f"deg_max={deg_max} and min_confirm={min_confirm} "
            f"(need at least {window + min_confirm} terms)"
        )
    values = buf.to_list()
    for q in range(1, q_max + 1):
        fit = _try_period(values, q, window, min_confirm)
        if fit is not None:
            return fit
    return None


def _try_period(
    values: list[int], q: int, window: int, min_confirm: int
) -> QuasipolyFit | None:
    n_terms = len(values)
    polys: dict[int, Polynomial] = {}
    onset = 1
    confirmed: int | None = None
    for r in range(q):
        n_lo = 1 if r == 0 else 0
        n_hi = (n_terms - r) // q  # largest n with qn + r <= n_terms
        if n_hi < n_lo:
            return None
        samples = [values[q * n + r - 1] for n in range(n_lo, n_hi + 1)]
        if len(samples) < window + min_confirm:
            return None  # class too small to confirm anything at this period
        win_start = n_lo + len(samples) - window
        poly = poly_from_samples(samples[-window:], win_start)
        # Validate backward from the window toward the start of the class.
        i = len(samples) - window - 1
        while i >= 0 and poly(n_lo + i) == samples[i]:
            i -= 1
        first_match = i + 1
        if (len(samples) - window) - first_match < min_confirm:
            return None
        polys[r] = poly
        if first_match > 0:
            last_bad_index = q * (n_lo + first_match - 1) + r
            onset = max(onset, last_bad_index + 1)
        out_of_window = (len(samples) - window) - first_match
        confirmed = out_of_window if confirmed is None else min(confirmed, out_of_window)
    assert confirmed is not None
    return QuasipolyFit(period=q, onset=onset, residue_polys=polys, confirmed=confirmed)
