"""Randomized, executable verification of the dependence-measure results.

Generates valid piecewise-linear Pickands functions, checks the sharp
inequality rho >= 3*tau/(2+tau) and the classical lower bound on every
instance, exercises the insertion inequalities with their equality cases,
verifies the concordance-ordering result on constructed dominance pairs,
and scans the reachable tau-rho region.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NotComparable
from .measures import hl_lower, rho, sharp_lower, tau
from .pickands import (
    PiecewiseLinearPickands,
    comonotone_mixture,
    gumbel,
    interpolate,
)
from .transforms import (
    admissible_interval,
    delta_rho,
    delta_tau,
    slack_difference,
    slack_difference_terms,
    triangular,
    vertex_insert,
)

#: Slack tolerance separating logic errors from float noise in the
#: inequality checks.
VIOLATION_TOL = 1e-9


# ----------------------------------------------------------------------
# instance generation
# ----------------------------------------------------------------------
def _lower_hull(points):
    """Lower convex hull of (x, y) points sorted by x (monotone chain)."""
    hull = []
    for p in points:
        while len(hull) >= 2:
            ox, oy = hull[-2]
            ax, ay = hull[-1]
            if (ax - ox) * (p[1] - oy) - (ay - oy) * (p[0] - ox) <= 0.0:
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def _random_pickands(n_vertices: int, rng) -> PiecewiseLinearPickands:
    if n_vertices == 0:
        return PiecewiseLinearPickands.validate([])
    xs = rng.uniform(0.0, 1.0, n_vertices)
    lo = np.maximum(xs, 1.0 - xs)
    ys = lo + rng.uniform(0.0, 1.0, n_vertices) * (1.0 - lo)
    points = sorted([(0.0, 1.0), (1.0, 1.0), *zip(xs.tolist(), ys.tolist())])
    hull = _lower_hull(points)
    # Vertices sampled inside the envelope pin the hull's end slopes to
    # [-1, 1], so the hull already dominates max(t, 1-t); validation guards
    # this instead of an explicit pointwise maximum.
    return PiecewiseLinearPickands.validate(hull[1:-1])


def random_pickands(n_vertices: int, seed) -> PiecewiseLinearPickands:
    """Random valid function: lower convex hull of in-envelope points.

    Up to ``n_vertices`` interior vertices survive the hull; deterministic
    per seed.
    """
    if n_vertices < 0:
        raise ValueError("vertex count must be non-negative")
    return _random_pickands(n_vertices, np.random.default_rng(seed))


# ----------------------------------------------------------------------
# per-instance checks
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class RegionSample:
    """One record of a region scan: a function, its measures and bound slacks."""

    function: PiecewiseLinearPickands
    tau: float
    rho: float
    slack_sharp: float
    slack_hl: float

    @property
    def ok(self) -> bool:
        return self.slack_sharp >= -VIOLATION_TOL and self.slack_hl >= -VIOLATION_TOL


def check_sharp_inequality(A: PiecewiseLinearPickands) -> RegionSample:
    """Measures of A together with the slack above both lower bound curves."""
    t, r = tau(A), rho(A)
    return RegionSample(A, t, r, r - sharp_lower(t), r - hl_lower(t))


@dataclass(frozen=True)
class OrderingReport:
    """Outcome of a pointwise comparison of two functions and its tau order."""

    relation: str  # "first_above", "second_above" or "equal"
    tau_first: float
    tau_second: float

    @property
    def consistent(self) -> bool:
        """Strict pointwise dominance must strictly reverse Kendall's tau."""
        if self.relation == "first_above":
            return self.tau_first < self.tau_second
        if self.relation == "second_above":
            return self.tau_second < self.tau_first
        return True


def check_ordering(
    A: PiecewiseLinearPickands, B: PiecewiseLinearPickands
) -> OrderingReport:
    """Decide pointwise order on the merged vertex grid and compare taus.

    Two piecewise-linear functions are ordered iff they are ordered at every
    breakpoint of both, so the decision is exact.  Raises ``NotComparable``
    when neither dominates.
    """
    grid = np.asarray(sorted(set(A.xs) | set(B.xs)))
    va, vb = A.evaluate(grid), B.evaluate(grid)
    if np.all(va == vb):
        relation = "equal"
    elif np.all(va >= vb):
        relation = "first_above"
    elif np.all(vb >= va):
        relation = "second_above"
    else:
        raise NotComparable("neither function dominates the other")
    return OrderingReport(relation, tau(A), tau(B))


# ----------------------------------------------------------------------
# insertion-inequality suite
# ----------------------------------------------------------------------
@dataclass
class CheckStats:
    """Aggregate of one named check across all trials."""

    trials: int = 0
    violations: int = 0
    worst: float = float("inf")  # smallest slack (or -max abs error) seen

    def record(self, slack: float, tol: float):
        self.trials += 1
        self.worst = min(self.worst, slack)
        if slack < -tol:
            self.violations += 1


@dataclass
class SuiteReport:
    """Pass counts and worst slacks of the randomized insertion checks."""

    trials: int
    seed: int
    checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.violations == 0 for c in self.checks.values())

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "seed": self.seed,
            "ok": self.ok,
            "checks": {
                name: {
                    "trials": c.trials,
                    "violations": c.violations,
                    "worst_slack": c.worst,
                }
                for name, c in self.checks.items()
            },
        }


def _random_insertion(rng):
    """A random host function with >= 1 vertex plus a legal insertion point."""
    A = _random_pickands(int(rng.integers(1, 7)), rng)
    while not A.vertices:
        A = _random_pickands(int(rng.integers(1, 7)), rng)
    x1, y1 = A.vertices[0]
    x = x1 * rng.uniform(0.05, 0.95)
    interval = admissible_interval(A, x)
    y = interval.lo + rng.uniform(0.0, 1.0) * (interval.hi - interval.lo)
    return A, x1, y1, x, y


def lemma_suite(trials: int, seed: int) -> SuiteReport:
    """Randomized checks of the insertion inequalities and identities.

    Per trial: the exact-change identities for tau and rho, the host-vs-
    triangular slack inequality, the non-negativity of the triangular slack
    change, the sign claims for its factorization, the reassembled quotient,
    and a constructed equality instance (insertion on the extension of the
    segment leaving the first vertex).
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    rng = np.random.default_rng(seed)
    report = SuiteReport(trials=trials, seed=seed)
    names = [
        "delta_tau_identity",
        "delta_rho_identity",
        "host_dominates_triangular",
        "triangular_slack_nonneg",
        "factor_n3_positive",
        "factor_denominator_positive",
        "factorization_identity",
        "equality_case",
        "strict_gain",
    ]
    for name in names:
        report.checks[name] = CheckStats()
    c = report.checks

    for _ in range(trials):
        A, x1, y1, x, y = _random_insertion(rng)
        B = vertex_insert(A, x, y)
        dt, dr = delta_tau(x1, y1, x, y), delta_rho(x1, y1, x, y)
        c["delta_tau_identity"].record(1e-12 - abs(tau(B) - tau(A) - dt), 0.0)
        c["delta_rho_identity"].record(1e-12 - abs(rho(B) - rho(A) - dr), 0.0)

        T = triangular(x1, y1)
        gain_host = slack_difference(B, A)
        TB = vertex_insert(T, x, y)
        gain_tri = slack_difference(TB, T)
        c["host_dominates_triangular"].record(gain_host - gain_tri, 1e-10)
        c["triangular_slack_nonneg"].record(gain_tri, 1e-12)

        terms = slack_difference_terms(x1, y1, x, y)
        c["factor_n3_positive"].record(terms.n3, 0.0)
        c["factor_denominator_positive"].record(
            terms.d3 + terms.d4 - terms.d5 + terms.d6, 0.0
        )
        c["factorization_identity"].record(
            1e-10 - abs(terms.value() - gain_tri), 0.0
        )

        # Strictness: a genuine insertion below the no-op height onto a host
        # with y1 < 1 that differs from its triangular envelope-mate.
        hi = admissible_interval(A, x).hi
        if y1 < 1.0 - 1e-6 and y < hi - 1e-6 and A != T:
            c["strict_gain"].record(gain_host - gain_tri, VIOLATION_TOL)

        # Equality instance: insert on the line through (x1, y1) with the
        # slope of the following segment of T; the result is single-vertex.
        x1e = rng.uniform(0.15, 0.85)
        y1e = max(x1e, 1.0 - x1e) + rng.uniform(0.01, 0.95) * (
            0.99 - max(x1e, 1.0 - x1e)
        )
        xe = x1e * rng.uniform(0.2, 0.9)
        ye = y1e - (x1e - xe) * (1.0 - y1e) / (1.0 - x1e)
        if ye >= 1.0 - xe:
            Te = triangular(x1e, y1e)
            gain = slack_difference(vertex_insert(Te, xe, ye), Te)
            c["equality_case"].record(1e-12 - abs(gain), 0.0)

    return report


# ----------------------------------------------------------------------
# region scan
# ----------------------------------------------------------------------
def region_scan(
    count: int, max_vertices: int, seed: int
) -> list[RegionSample]:
    """Scan the reachable tau-rho region with a deterministic instance mix.

    Mixes random functions, the single-vertex family on a parameter grid
    (which traces the sharp bound curve), and interpolants of smooth
    families; the product and comonotone functions are always included.
    Deterministic per (seed, count) through per-index seeding.
    """
    if count < 1:
        raise ValueError("need at least one sample")
    samples = []
    for i in range(count):
        rng = np.random.default_rng([int(seed), i])
        kind = i % 10
        if i == 0:
            A = PiecewiseLinearPickands.validate([])
        elif i == 1:
            A = PiecewiseLinearPickands.validate([(0.5, 0.5)])
        elif kind == 2:
            y1 = rng.uniform(0.5, 0.999)
            x1 = rng.uniform(1.0 - y1, y1)  # keeps y1 inside the envelope
            A = triangular(x1, y1)
        elif kind == 3:
            if rng.uniform() < 0.5:
                A = interpolate(gumbel(1.0 + 4.0 * rng.uniform()), 256)
            else:
                A = interpolate(comonotone_mixture(rng.uniform()), 256)
        else:
            A = _random_pickands(int(rng.integers(0, max_vertices + 1)), rng)
        samples.append(check_sharp_inequality(A))
    return samples
