"""Bivariate extreme-value copulas via Pickands dependence functions.

Exact Kendall's tau and Spearman's rho for piecewise-linear dependence
functions, the vertex-insertion calculus behind the sharp inequality
rho >= 3*tau/(2+tau), executable verification of the inequalities, and
conditional-method sampling from the induced copulas.
"""

from . import errors
from .measures import (
    MeasurePair,
    bound_curves,
    copula_cdf,
    copula_partial1,
    gap_function,
    hl_lower,
    hl_upper,
    measure_pair,
    measures_general,
    rho,
    sharp_lower,
    tau,
)
from .pickands import (
    COMONOTONE,
    PRODUCT,
    DependenceEvaluator,
    PiecewiseLinearPickands,
    SupportGeometry,
    Vertex,
    gumbel,
    interpolate,
    lower_envelope,
    support_curve,
    support_geometry,
    validate,
)
from .sampler import SamplePair, empirical_rho, empirical_tau, sample
from .transforms import (
    AdmissibleInterval,
    InsertionSlackTerms,
    admissible_interval,
    delta_rho,
    delta_tau,
    sharp_slack,
    slack_difference,
    slack_difference_terms,
    triangular,
    vertex_insert,
)
from .verification import (
    OrderingReport,
    RegionSample,
    SuiteReport,
    check_ordering,
    check_sharp_inequality,
    lemma_suite,
    random_pickands,
    region_scan,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibleInterval",
    "COMONOTONE",
    "DependenceEvaluator",
    "InsertionSlackTerms",
    "MeasurePair",
    "OrderingReport",
    "PRODUCT",
    "PiecewiseLinearPickands",
    "RegionSample",
    "SamplePair",
    "SuiteReport",
    "SupportGeometry",
    "Vertex",
    "admissible_interval",
    "bound_curves",
    "check_ordering",
    "check_sharp_inequality",
    "copula_cdf",
    "copula_partial1",
    "delta_rho",
    "delta_tau",
    "empirical_rho",
    "empirical_tau",
    "errors",
    "gap_function",
    "gumbel",
    "hl_lower",
    "hl_upper",
    "interpolate",
    "lemma_suite",
    "lower_envelope",
    "measure_pair",
    "measures_general",
    "random_pickands",
    "region_scan",
    "rho",
    "sample",
    "sharp_lower",
    "sharp_slack",
    "slack_difference",
    "slack_difference_terms",
    "support_curve",
    "support_geometry",
    "tau",
    "triangular",
    "validate",
    "vertex_insert",
]
