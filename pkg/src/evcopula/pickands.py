"""Piecewise-linear Pickands dependence functions.

A Pickands dependence function is a convex function A on [0, 1] with
max(t, 1-t) <= A(t) <= 1 and A(0) = A(1) = 1.  This module provides a
canonical piecewise-linear representation (interior vertices only, the
endpoints (0, 1) and (1, 1) are implicit), validation, evaluation, chord
interpolation of smooth dependence functions, and the contact-point
geometry that locates the support of the induced copula measure.
"""

from __future__ import annotations

import bisect
import json
from dataclasses import dataclass
from typing import Callable, Iterable, NamedTuple, Sequence

import numpy as np

from .errors import (
    ConvexityViolation,
    DomainError,
    EnvelopeViolation,
    NonIncreasingAbscissae,
    SlopeOutOfRange,
)

# Absolute tolerance on slope differences; absorbs float rounding in the
# convexity and slope-range checks.
SLOPE_TOL = 1e-12
ENVELOPE_TOL = 1e-12


class Vertex(NamedTuple):
    """Interior vertex (x, y) with 0 < x < 1 and max(x, 1-x) <= y <= 1."""

    x: float
    y: float


def lower_envelope(t):
    """Lower admissible boundary max(t, 1-t); the comonotone function."""
    return np.maximum(t, 1.0 - t) if isinstance(t, np.ndarray) else max(t, 1.0 - t)


class PiecewiseLinearPickands:
    """Canonical piecewise-linear Pickands dependence function.

    Immutable.  Instances should be built through :meth:`validate` (or the
    helpers in :mod:`evcopula.transforms`), which checks all invariants and
    removes exactly-collinear interior vertices so that equal functions have
    equal representations.
    """

    __slots__ = ("xs", "ys", "slopes", "_xs_np", "_ys_np", "_slopes_np")

    def __init__(self, xs: tuple, ys: tuple, slopes: tuple):
        # Private: xs/ys include the implicit endpoints, slopes per segment.
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "ys", ys)
        object.__setattr__(self, "slopes", slopes)
        object.__setattr__(self, "_xs_np", None)
        object.__setattr__(self, "_ys_np", None)
        object.__setattr__(self, "_slopes_np", None)

    def __setattr__(self, name, value):
        raise AttributeError("PiecewiseLinearPickands is immutable")

    # ------------------------------------------------------------------
    # construction
    # ------------------------------------------------------------------
    @classmethod
    def validate(cls, raw_vertices: Iterable[Sequence[float]]) -> "PiecewiseLinearPickands":
        """Validate a raw (x, y) list and return the canonical function.

        The list may be unsorted; exactly-collinear interior vertices are
        dropped.  An empty list yields the product function A == 1.
        """
        pts = sorted((float(x), float(y)) for x, y in raw_vertices)
        for x, y in pts:
            if not (0.0 < x < 1.0):
                raise DomainError(f"vertex abscissa {x} outside (0, 1)")
        for (x0, _), (x1, _) in zip(pts, pts[1:]):
            if x1 <= x0:
                raise NonIncreasingAbscissae(f"duplicate abscissa {x1}")
        for x, y in pts:
            lo = max(x, 1.0 - x)
            if y < lo - ENVELOPE_TOL or y > 1.0 + ENVELOPE_TOL:
                raise EnvelopeViolation(
                    f"vertex ({x}, {y}) outside the band [{lo}, 1]"
                )

        xs = [0.0] + [p[0] for p in pts] + [1.0]
        ys = [1.0] + [p[1] for p in pts] + [1.0]
        slopes = [
            (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]) for i in range(len(xs) - 1)
        ]
        for s0, s1 in zip(slopes, slopes[1:]):
            if s1 < s0 - SLOPE_TOL:
                raise ConvexityViolation(f"slope drops from {s0} to {s1}")
        for s in slopes:
            if abs(s) > 1.0 + SLOPE_TOL:
                raise SlopeOutOfRange(f"chord slope {s} outside [-1, 1]")

        # Canonical form: drop vertices whose two chords are exactly collinear.
        keep = [
            i
            for i in range(1, len(xs) - 1)
            if slopes[i] - slopes[i - 1] != 0.0
        ]
        if len(keep) != len(pts):
            xs = [0.0] + [xs[i] for i in keep] + [1.0]
            ys = [1.0] + [ys[i] for i in keep] + [1.0]
            slopes = [
                (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i])
                for i in range(len(xs) - 1)
            ]
        return cls(tuple(xs), tuple(ys), tuple(slopes))

    @classmethod
    def from_json(cls, text: str) -> "PiecewiseLinearPickands":
        """Parse the interchange format ``{"vertices": [[x, y], ...]}``."""
        data = json.loads(text)
        return cls.validate(data["vertices"])

    def to_json(self) -> str:
        return json.dumps({"vertices": [[x, y] for x, y in self.vertices]})

    # ------------------------------------------------------------------
    # inspection
    # ------------------------------------------------------------------
    @property
    def vertices(self) -> list[Vertex]:
        """Interior vertices (endpoints excluded)."""
        return [Vertex(x, y) for x, y in zip(self.xs[1:-1], self.ys[1:-1])]

    def __eq__(self, other):
        if not isinstance(other, PiecewiseLinearPickands):
            return NotImplemented
        return self.xs == other.xs and self.ys == other.ys

    def __hash__(self):
        return hash((self.xs, self.ys))

    def __repr__(self):
        return f"PiecewiseLinearPickands({list(zip(self.xs[1:-1], self.ys[1:-1]))})"

    def _arrays(self):
        if self._xs_np is None:
            object.__setattr__(self, "_xs_np", np.asarray(self.xs))
            object.__setattr__(self, "_ys_np", np.asarray(self.ys))
            object.__setattr__(self, "_slopes_np", np.asarray(self.slopes))
        return self._xs_np, self._ys_np, self._slopes_np

    # ------------------------------------------------------------------
    # evaluation
    # ------------------------------------------------------------------
    def evaluate(self, t):
        """A(t) by linear interpolation; accepts scalars or arrays."""
        if isinstance(t, np.ndarray):
            if np.any(t < 0.0) or np.any(t > 1.0):
                raise DomainError("argument outside [0, 1]")
            xs, ys, _ = self._arrays()
            return np.interp(t, xs, ys)
        t = float(t)
        if t < 0.0 or t > 1.0:
            raise DomainError(f"argument {t} outside [0, 1]")
        i = bisect.bisect_right(self.xs, t) - 1
        if i == len(self.slopes):  # t == 1
            i -= 1
        return self.ys[i] + self.slopes[i] * (t - self.xs[i])

    __call__ = evaluate

    def right_derivative(self, t):
        """Right-hand derivative; at a vertex, the slope of the right segment.

        At t = 0 this equals the first-segment slope (the left derivative at
        0 of the extended function, matching the right-continuity convention).
        """
        if isinstance(t, np.ndarray):
            if np.any(t < 0.0) or np.any(t >= 1.0):
                raise DomainError("argument outside [0, 1)")
            xs, _, slopes = self._arrays()
            idx = np.searchsorted(xs, t, side="right") - 1
            return slopes[idx]
        t = float(t)
        if t < 0.0 or t >= 1.0:
            raise DomainError(f"argument {t} outside [0, 1)")
        return self.slopes[bisect.bisect_right(self.xs, t) - 1]


def validate(raw_vertices) -> PiecewiseLinearPickands:
    """Module-level alias for :meth:`PiecewiseLinearPickands.validate`."""
    return PiecewiseLinearPickands.validate(raw_vertices)


#: Product (independence) function A == 1.
PRODUCT = PiecewiseLinearPickands.validate([])
#: Comonotone function A(t) = max(t, 1-t).
COMONOTONE = PiecewiseLinearPickands.validate([(0.5, 0.5)])


@dataclass(frozen=True)
class DependenceEvaluator:
    """Wraps an arbitrary evaluable dependence function for interpolation.

    ``func`` must map t in [0, 1] to A(t); ``node_count`` is the starting
    resolution used by adaptive refinement.
    """

    func: Callable
    node_count: int = 64

    def __call__(self, t):
        return self.func(t)


def interpolate(f, n_nodes: int) -> PiecewiseLinearPickands:
    """Chord interpolant of a dependence function at n_nodes+1 uniform nodes.

    For convex ``f`` the interpolant dominates ``f`` pointwise and is itself
    a valid Pickands function.  Raises ``ConvexityViolation`` (or another
    validation error) if the sampled values do not pass validation, which
    signals that ``f`` was not a Pickands function.
    """
    n_nodes = int(n_nodes)
    if n_nodes < 1:
        raise DomainError("node count must be a positive integer")
    func = f.func if isinstance(f, DependenceEvaluator) else f
    t = np.linspace(0.0, 1.0, n_nodes + 1)
    try:
        vals = np.asarray(func(t), dtype=float)
        if vals.shape != t.shape:
            raise TypeError
    except (TypeError, ValueError):  # scalar-only callable
        vals = np.array([float(func(ti)) for ti in t])
    return PiecewiseLinearPickands.validate(list(zip(t[1:-1], vals[1:-1])))


class SupportGeometry(NamedTuple):
    """Contact points of A with the envelope legs 1-x (left) and x (right)."""

    left: float
    right: float


def support_geometry(A: PiecewiseLinearPickands) -> SupportGeometry:
    """Largest x with A(x) = 1-x and smallest x with A(x) = x.

    In canonical form only the first segment can have slope -1 and only the
    last segment slope +1, so the contact points fall on segment ends.
    """
    left = A.xs[1] if abs(A.slopes[0] + 1.0) <= SLOPE_TOL else 0.0
    right = A.xs[-2] if abs(A.slopes[-1] - 1.0) <= SLOPE_TOL else 1.0
    return SupportGeometry(left, right)


def support_curve(t: float, x: float) -> float:
    """Boundary curve x^(1/t - 1) of the copula-measure support band.

    Degenerate parameters: t = 0 gives the constant 0, t = 1 the constant 1.
    """
    if not (0.0 <= t <= 1.0 and 0.0 <= x <= 1.0):
        raise DomainError("both arguments must lie in [0, 1]")
    if t == 0.0:
        return 0.0
    if t == 1.0:
        return 1.0
    if x == 0.0:
        return 0.0
    return x ** (1.0 / t - 1.0)


def gumbel(theta: float) -> Callable:
    """Gumbel (logistic) dependence function (t^theta + (1-t)^theta)^(1/theta)."""
    if theta < 1.0:
        raise DomainError("theta must be >= 1")

    def A(t):
        t = np.asarray(t, dtype=float)
        out = (t**theta + (1.0 - t) ** theta) ** (1.0 / theta)
        return out if out.ndim else float(out)

    return A


def comonotone_mixture(lam: float) -> Callable:
    """Convex mixture t -> 1 - lam + lam * max(t, 1-t) for lam in [0, 1]."""
    if not 0.0 <= lam <= 1.0:
        raise DomainError("mixture weight must lie in [0, 1]")

    def A(t):
        t = np.asarray(t, dtype=float)
        out = 1.0 - lam + lam * np.maximum(t, 1.0 - t)
        return out if out.ndim else float(out)

    return A
