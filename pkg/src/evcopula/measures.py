"""Concordance measures and bound curves for extreme-value copulas.

Kendall's tau and Spearman's rho admit exact closed forms when the Pickands
dependence function is piecewise linear: tau is a finite sum over the slope
jumps at the interior vertices, rho a finite sum over the segments.  Smooth
dependence functions are handled by refining chord interpolants until both
measures stabilize.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NoConvergence
from .pickands import DependenceEvaluator, PiecewiseLinearPickands, interpolate

#: Slack allowed when asserting the sharp lower bound (separates logic
#: errors from float noise).
BOUND_SLACK = 1e-9

#: Node cap for adaptive interpolation refinement.
MAX_NODES = 2**20


def tau(A: PiecewiseLinearPickands) -> float:
    """Exact Kendall's tau: sum of x(1-x)/y times the slope jump per vertex."""
    xs, ys, s = A.xs, A.ys, A.slopes
    if len(xs) == 2:
        return 0.0
    return math.fsum(
        xs[i] * (1.0 - xs[i]) / ys[i] * (s[i] - s[i - 1])
        for i in range(1, len(xs) - 1)
    )


def rho(A: PiecewiseLinearPickands) -> float:
    """Exact Spearman's rho: 12 * sum of dx / ((1+y_left)(1+y_right)) - 3."""
    xs, ys = A.xs, A.ys
    return 12.0 * math.fsum(
        (xs[i + 1] - xs[i]) / ((1.0 + ys[i]) * (1.0 + ys[i + 1]))
        for i in range(len(xs) - 1)
    ) - 3.0


@dataclass(frozen=True)
class MeasurePair:
    """A (tau, rho) value pair with provenance of how it was computed.

    ``resolution`` is the string ``"exact"`` for closed-form values on a
    piecewise-linear function, or the interpolation node count otherwise.
    """

    tau: float
    rho: float
    resolution: object = "exact"

    def __post_init__(self):
        if not (-BOUND_SLACK <= self.tau <= 1.0 + BOUND_SLACK):
            raise DomainError(f"tau {self.tau} outside [0, 1]")
        if not (-BOUND_SLACK <= self.rho <= 1.0 + BOUND_SLACK):
            raise DomainError(f"rho {self.rho} outside [0, 1]")
        # Sanity post-check of the sharp lower bound.
        if self.rho < sharp_lower(min(max(self.tau, 0.0), 1.0)) - BOUND_SLACK:
            raise DomainError(
                f"(tau, rho) = ({self.tau}, {self.rho}) violates the sharp bound"
            )


def measure_pair(A: PiecewiseLinearPickands) -> MeasurePair:
    """Closed-form measures of a piecewise-linear function."""
    return MeasurePair(tau(A), rho(A), "exact")


def measures_general(f, tol: float) -> MeasurePair:
    """tau and rho of an arbitrary dependence function by chord refinement.

    Doubles the node count, starting at 64 (or the evaluator's declared
    resolution if larger), until consecutive tau and rho values differ by
    less than ``tol``.  Raises ``NoConvergence`` once the node count would
    exceed 2**20.
    """
    if tol <= 0.0:
        raise DomainError("tolerance must be positive")
    n = 64
    if isinstance(f, DependenceEvaluator):
        n = max(n, int(f.node_count))
    A = interpolate(f, n)
    t_prev, r_prev = tau(A), rho(A)
    while True:
        n *= 2
        if n > MAX_NODES:
            raise NoConvergence(f"no convergence up to {MAX_NODES} nodes")
        A = interpolate(f, n)
        t_cur, r_cur = tau(A), rho(A)
        if abs(t_cur - t_prev) < tol and abs(r_cur - r_prev) < tol:
            return MeasurePair(t_cur, r_cur, n)
        t_prev, r_prev = t_cur, r_cur


# ----------------------------------------------------------------------
# copula surface
# ----------------------------------------------------------------------
def copula_cdf(A: PiecewiseLinearPickands, x: float, y: float) -> float:
    """EVC value C(x, y) = (xy)^A(ln x / ln(xy)).

    Boundary values follow the copula axioms (uniform margins, groundedness)
    rather than limits of the formula.
    """
    x, y = float(x), float(y)
    if not (0.0 <= x <= 1.0 and 0.0 <= y <= 1.0):
        raise DomainError("arguments must lie in the unit square")
    if x == 0.0 or y == 0.0:
        return 0.0
    if x == 1.0:
        return y
    if y == 1.0:
        return x
    lx, ly = math.log(x), math.log(y)
    t = lx / (lx + ly)
    return math.exp(A.evaluate(t) * (lx + ly))


def copula_partial1(A: PiecewiseLinearPickands, x, y):
    """Partial derivative of the EVC in its first argument.

    Equals (C(x, y)/x) * (A(t) + (1-t) * D+A(t)) with t = ln x / ln(xy);
    this is the conditional distribution function v -> P(V <= v | U = u).
    Accepts scalars or broadcastable arrays with entries in (0, 1).
    """
    scalar = np.isscalar(x) and np.isscalar(y)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if np.any(x <= 0.0) or np.any(x >= 1.0) or np.any(y <= 0.0) or np.any(y >= 1.0):
        raise DomainError("arguments must lie in the open unit square")
    lx, ly = np.log(x), np.log(y)
    lxy = lx + ly
    t = lx / lxy
    a = A.evaluate(t)
    d = A.right_derivative(t)
    out = np.exp(a * lxy) / x * (a + (1.0 - t) * d)
    return float(out) if scalar else out


# ----------------------------------------------------------------------
# bound curves
# ----------------------------------------------------------------------
def sharp_lower(tau_value: float) -> float:
    """Sharp lower bound 3*tau / (2 + tau) on rho over extreme-value copulas."""
    if not 0.0 <= tau_value <= 1.0:
        raise DomainError(f"tau {tau_value} outside [0, 1]")
    return 3.0 * tau_value / (2.0 + tau_value)


def hl_lower(tau_value: float) -> float:
    """Classical lower bound -1 + sqrt(1 + 3*tau)."""
    if not 0.0 <= tau_value <= 1.0:
        raise DomainError(f"tau {tau_value} outside [0, 1]")
    return -1.0 + math.sqrt(1.0 + 3.0 * tau_value)


def hl_upper(tau_value: float) -> float:
    """Classical upper bound min(3*tau/2, 2*tau - tau^2)."""
    if not 0.0 <= tau_value <= 1.0:
        raise DomainError(f"tau {tau_value} outside [0, 1]")
    return min(1.5 * tau_value, 2.0 * tau_value - tau_value**2)


def bound_curves(tau_value: float):
    """All three bound-curve values (hl_lower, hl_upper, sharp_lower) at tau."""
    return hl_lower(tau_value), hl_upper(tau_value), sharp_lower(tau_value)


def gap_function(tau_value: float) -> float:
    """Excess 3*tau/(2+tau) - tau of the sharp bound over the diagonal."""
    if not 0.0 <= tau_value <= 1.0:
        raise DomainError(f"tau {tau_value} outside [0, 1]")
    return 3.0 * tau_value / (2.0 + tau_value) - tau_value
