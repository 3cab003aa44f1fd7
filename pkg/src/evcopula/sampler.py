"""Random pairs from an extreme-value copula and empirical concordance.

Pairs are drawn by the conditional-distribution method: U is uniform and V
solves dC/du (U, V) = W for an independent uniform W.  The conditional CDF
is continuous and non-decreasing but kinked wherever the right derivative
of the dependence function jumps, so the inversion uses bisection.  The
empirical estimators exist to cross-validate the closed-form measures.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np
from scipy.stats import rankdata

from .errors import BisectionFailure, DomainError, InsufficientData
from .measures import copula_partial1
from .pickands import PiecewiseLinearPickands

_BRACKET_EPS = 1e-15
_BISECT_TOL = 1e-12
_MAX_BISECT = 100


class SamplePair(NamedTuple):
    """One realization (u, v) from the copula, both coordinates in (0, 1)."""

    u: float
    v: float


def sample(A: PiecewiseLinearPickands, n: int, seed) -> np.ndarray:
    """Draw n pairs from the copula of A; returns an (n, 2) array.

    Deterministic per seed.  Raises ``BisectionFailure`` if the quantile
    bracket fails to close, which signals a defective conditional CDF.
    """
    n = int(n)
    if n < 1:
        raise DomainError("sample size must be positive")
    rng = np.random.default_rng(seed)
    u = np.clip(rng.uniform(size=n), _BRACKET_EPS, 1.0 - _BRACKET_EPS)
    w = rng.uniform(size=n)
    lo = np.full(n, _BRACKET_EPS)
    hi = np.full(n, 1.0 - _BRACKET_EPS)
    for _ in range(_MAX_BISECT):
        mid = 0.5 * (lo + hi)
        below = copula_partial1(A, u, mid) < w
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
        if float(np.max(hi - lo)) < _BISECT_TOL:
            break
    else:
        raise BisectionFailure("conditional quantile bracket did not close")
    return np.column_stack([u, 0.5 * (lo + hi)])


def _merge_count(values: list[float]) -> int:
    """Number of inversions in ``values`` via merge sort (values are consumed)."""
    n = len(values)
    buf = values[:]
    inversions = 0
    width = 1
    while width < n:
        for lo in range(0, n - width, 2 * width):
            mid = lo + width
            hi = min(lo + 2 * width, n)
            i, j, k = lo, mid, lo
            while i < mid and j < hi:
                if values[i] <= values[j]:
                    buf[k] = values[i]
                    i += 1
                else:
                    buf[k] = values[j]
                    inversions += mid - i
                    j += 1
                k += 1
            buf[k:hi] = values[i:mid] if i < mid else values[j:hi]
        values[: n] = buf[: n]
        width *= 2
    return inversions


def empirical_tau(pairs) -> float:
    """Sample Kendall's tau, (concordant - discordant) / C(n, 2).

    O(n log n): sort by the first coordinate, count inversions of the second
    by merge sort.  Assumes no ties (ties have probability zero here).
    """
    pairs = np.asarray(pairs, dtype=float)
    n = len(pairs)
    if n < 2:
        raise InsufficientData("need at least two pairs")
    order = np.argsort(pairs[:, 0], kind="stable")
    v = pairs[order, 1].tolist()
    discordant = _merge_count(v)
    total = n * (n - 1) // 2
    return 1.0 - 2.0 * discordant / total


def empirical_rho(pairs) -> float:
    """Sample Spearman's rho: Pearson correlation of average ranks."""
    pairs = np.asarray(pairs, dtype=float)
    if len(pairs) < 2:
        raise InsufficientData("need at least two pairs")
    ru = rankdata(pairs[:, 0])
    rv = rankdata(pairs[:, 1])
    return float(np.corrcoef(ru, rv)[0, 1])
