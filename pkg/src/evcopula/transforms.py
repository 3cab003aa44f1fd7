"""Vertex-insertion machinery for piecewise-linear Pickands functions.

A new vertex can be prepended before the first vertex of a function: the
leading segment is replaced by two segments through the inserted point.  The
admissible heights form a closed interval, the resulting changes of tau and
rho have closed forms depending only on the first vertex and the insertion
point, and the induced change of the sharp-bound slack factors into a short
polynomial quotient with provable sign.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import AdmissibilityError, DomainError, EnvelopeViolation, NoVertices
from .measures import rho, sharp_lower, tau
from .pickands import PiecewiseLinearPickands

#: Closed-interval membership slack; boundary insertions (the equality cases)
#: must remain testable under float rounding.
MEMBERSHIP_TOL = 1e-12


def triangular(x1: float, y1: float) -> PiecewiseLinearPickands:
    """Single-vertex function through (x1, y1); the product function if y1 = 1.

    Satisfies tau = (1-y1)/y1 and rho = 3(1-y1)/(1+y1), hence lies exactly on
    the sharp bound curve.
    """
    x1, y1 = float(x1), float(y1)
    if not 0.0 < x1 < 1.0:
        raise DomainError(f"x1 = {x1} outside (0, 1)")
    lo = max(x1, 1.0 - x1)
    if y1 < lo - MEMBERSHIP_TOL or y1 > 1.0 + MEMBERSHIP_TOL:
        raise EnvelopeViolation(f"y1 = {y1} outside [{lo}, 1]")
    return PiecewiseLinearPickands.validate([(x1, min(y1, 1.0))])


class AdmissibleInterval(NamedTuple):
    """Closed interval of legal insertion heights at a given abscissa."""

    lo: float
    hi: float

    def contains(self, y: float, tol: float = MEMBERSHIP_TOL) -> bool:
        return self.lo - tol <= y <= self.hi + tol


def admissible_interval(A: PiecewiseLinearPickands, x: float) -> AdmissibleInterval:
    """Legal heights for a vertex prepended at x, 0 < x < first abscissa.

    The lower end is the larger of the envelope leg 1-x and the backward
    extension of the segment following the first vertex; the upper end is
    the current function value at x (the no-op insertion).
    """
    verts = A.vertices
    if not verts:
        raise NoVertices("the product function has no first vertex")
    x = float(x)
    x1, y1 = verts[0]
    if not 0.0 < x < x1:
        raise DomainError(f"x = {x} outside (0, {x1})")
    lo = max(1.0 - x, y1 - (x1 - x) * A.slopes[1])
    hi = 1.0 - (1.0 - y1) / x1 * x
    return AdmissibleInterval(lo, hi)


def vertex_insert(
    A: PiecewiseLinearPickands, x: float, y: float
) -> PiecewiseLinearPickands:
    """Prepend the vertex (x, y); returns A itself for the no-op height.

    The result coincides with A on [x1, 1] and is linear on [0, x] and
    [x, x1].  Raises ``AdmissibilityError`` when y lies outside the
    admissible interval.
    """
    interval = admissible_interval(A, x)
    y = float(y)
    if not interval.contains(y):
        raise AdmissibilityError(f"height {y} outside {interval}")
    if abs(y - interval.hi) <= MEMBERSHIP_TOL:
        return A
    return PiecewiseLinearPickands.validate([(float(x), y), *A.vertices])


def _check_insertion_params(x1, y1, x, y):
    if not 0.0 < x < x1 < 1.0:
        raise DomainError(f"need 0 < x < x1 < 1, got x = {x}, x1 = {x1}")
    if y1 < max(x1, 1.0 - x1) - MEMBERSHIP_TOL or y1 > 1.0 + MEMBERSHIP_TOL:
        raise DomainError(f"y1 = {y1} outside the envelope at {x1}")
    lo = max(1.0 - x, y1 - (x1 - x) * (1.0 - y1) / (1.0 - x1))
    hi = 1.0 - (1.0 - y1) / x1 * x
    if y < lo - MEMBERSHIP_TOL or y > hi + MEMBERSHIP_TOL:
        raise DomainError(f"height {y} outside [{lo}, {hi}]")


def delta_tau(x1: float, y1: float, x: float, y: float) -> float:
    """Exact tau change caused by inserting (x, y) before first vertex (x1, y1).

    The change depends on the host function only through its first vertex.
    """
    _check_insertion_params(x1, y1, x, y)
    return (
        (x1 - x + x * y1 - x1 * y)
        * (y1 - y - x * y1 + x1 * y)
        / ((x1 - x) * y * y1)
    )


def delta_rho(x1: float, y1: float, x: float, y: float) -> float:
    """Exact rho change caused by inserting (x, y) before first vertex (x1, y1)."""
    _check_insertion_params(x1, y1, x, y)
    return 6.0 * (x1 * (1.0 - y) - x * (1.0 - y1)) / ((1.0 + y) * (1.0 + y1))


def sharp_slack(A: PiecewiseLinearPickands) -> float:
    """Slack rho(A) - 3*tau(A)/(2 + tau(A)) above the sharp bound curve."""
    return rho(A) - sharp_lower(tau(A))


def slack_difference(
    A: PiecewiseLinearPickands, B: PiecewiseLinearPickands
) -> float:
    """Difference of sharp-bound slacks, sharp_slack(A) - sharp_slack(B)."""
    return sharp_slack(A) - sharp_slack(B)


class InsertionSlackTerms(NamedTuple):
    """Polynomial factors of the slack change under triangular insertion.

    The slack difference between the inserted function and the original
    single-vertex function equals 6*n1*n2*n3 / (d1*d2*(d3 + d4 - d5 + d6)).
    """

    n1: float
    n2: float
    n3: float
    d1: float
    d2: float
    d3: float
    d4: float
    d5: float
    d6: float

    def value(self) -> float:
        return (
            6.0
            * self.n1
            * self.n2
            * self.n3
            / (self.d1 * self.d2 * (self.d3 + self.d4 - self.d5 + self.d6))
        )


def slack_difference_terms(
    x1: float, y1: float, x: float, y: float
) -> InsertionSlackTerms:
    """Factorized slack change for inserting (x, y) into the single-vertex
    function with vertex (x1, y1)."""
    _check_insertion_params(x1, y1, x, y)
    n1 = x * (1.0 - y1) - x1 * (1.0 - y)
    n2 = n1 + y1 - y
    n3 = y * (x1 + y1) + y1 * (1.0 - x)
    d1 = 1.0 + y
    d2 = 1.0 + y1
    d3 = x1 * y * (x1 - x + y * (1.0 - x1))
    d4 = y1 * (1.0 - x) * (x1 - x)
    d5 = 2.0 * x * y * y1 * (1.0 - x1)
    d6 = (1.0 - x) * x * y1**2
    return InsertionSlackTerms(n1, n2, n3, d1, d2, d3, d4, d5, d6)
