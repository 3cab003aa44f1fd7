import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from evcopula import (
    DependenceEvaluator,
    PiecewiseLinearPickands,
    gumbel,
    interpolate,
    random_pickands,
    support_curve,
    support_geometry,
    validate,
)
from evcopula.errors import (
    ConvexityViolation,
    DomainError,
    EnvelopeViolation,
    NonIncreasingAbscissae,
    SlopeOutOfRange,
)
from conftest import random_suite


class TestValidate:
    def test_empty_is_product(self, product):
        assert product.vertices == []
        assert product(0.3) == 1.0

    def test_single_vertex(self):
        A = validate([(0.5, 0.75)])
        assert A.vertices == [(0.5, 0.75)]

    def test_envelope_violation(self):
        with pytest.raises(EnvelopeViolation):
            validate([(0.5, 0.4)])
        with pytest.raises(EnvelopeViolation):
            validate([(0.2, 1.2)])

    def test_two_vertices_slopes(self):
        A = validate([(0.3, 0.8), (0.6, 0.7)])
        assert A.slopes == pytest.approx((-2 / 3, -1 / 3, 3 / 4), abs=1e-15)

    def test_unsorted_input_is_sorted(self):
        A = validate([(0.6, 0.7), (0.3, 0.8)])
        assert [v.x for v in A.vertices] == [0.3, 0.6]

    def test_duplicate_abscissa(self):
        with pytest.raises(NonIncreasingAbscissae):
            validate([(0.4, 0.8), (0.4, 0.9)])

    def test_convexity_violation(self):
        # middle vertex above the chord of its neighbours
        with pytest.raises(ConvexityViolation):
            validate([(0.2, 0.82), (0.5, 0.95), (0.8, 0.85)])

    def test_slope_out_of_range(self):
        # not reachable with in-envelope vertices except via endpoint chords;
        # force it with a tiny violation beyond the envelope tolerance
        with pytest.raises((SlopeOutOfRange, EnvelopeViolation)):
            validate([(0.5, 0.49)])

    def test_abscissa_outside_unit_interval(self):
        with pytest.raises(DomainError):
            validate([(0.0, 1.0)])
        with pytest.raises(DomainError):
            validate([(1.0, 1.0)])

    def test_collinear_vertex_removed(self):
        # (0.5, 0.875) lies exactly on the flat chord of its neighbours
        A = validate([(0.25, 0.875), (0.5, 0.875), (0.75, 0.875)])
        assert [v.x for v in A.vertices] == [0.25, 0.75]

    def test_vertex_at_height_one_removed(self):
        assert validate([(0.3, 1.0)]).vertices == []

    def test_json_round_trip(self):
        A = validate([(0.3, 0.8), (0.6, 0.7)])
        B = PiecewiseLinearPickands.from_json(A.to_json())
        assert A == B

    def test_immutable(self, tent):
        with pytest.raises(AttributeError):
            tent.xs = (0.0, 1.0)


class TestEval:
    def test_comonotone(self, comonotone):
        assert comonotone(0.3) == pytest.approx(0.7, abs=1e-15)

    def test_product_everywhere_one(self, product):
        for t in [0.0, 0.1, 0.5, 0.99, 1.0]:
            assert product(t) == 1.0

    def test_tent_midpoint(self, tent):
        # midpoint of the segment from (0, 1) to (0.5, 0.75)
        assert tent(0.25) == pytest.approx(0.875, abs=1e-15)

    def test_endpoints(self, tent):
        assert tent(0.0) == 1.0 and tent(1.0) == 1.0

    def test_domain_error(self, tent):
        with pytest.raises(DomainError):
            tent(-0.1)
        with pytest.raises(DomainError):
            tent(1.1)

    def test_array_matches_scalar(self, tent):
        grid = np.linspace(0, 1, 101)
        arr = tent.evaluate(grid)
        assert arr == pytest.approx([tent(t) for t in grid], abs=1e-15)

    @given(st.floats(0.0, 1.0))
    def test_envelope_property(self, t):
        A = validate([(0.3, 0.8), (0.55, 0.72), (0.8, 0.85)])
        assert max(t, 1 - t) - 1e-12 <= A(t) <= 1 + 1e-12


class TestRightDerivative:
    def test_comonotone_legs(self, comonotone):
        assert comonotone.right_derivative(0.2) == -1.0
        # right-continuity at the kink
        assert comonotone.right_derivative(0.5) == 1.0

    def test_tent_left_leg(self, tent):
        assert tent.right_derivative(0.1) == pytest.approx(-0.5, abs=1e-15)

    def test_at_zero_equals_first_slope(self, tent):
        assert tent.right_derivative(0.0) == tent.slopes[0]

    def test_domain(self, tent):
        with pytest.raises(DomainError):
            tent.right_derivative(1.0)

    def test_non_decreasing_on_grid(self):
        for A in random_suite(20, seed=5):
            d = [A.right_derivative(t) for t in np.linspace(0, 0.999, 200)]
            assert all(b >= a for a, b in zip(d, d[1:]))


class TestInterpolate:
    def test_comonotone_exact_at_even_nodes(self, comonotone):
        A = interpolate(lambda t: np.maximum(t, 1 - t), 2)
        assert A == comonotone

    def test_constant_one_empty(self):
        for n in [1, 2, 7, 64]:
            assert interpolate(lambda t: np.ones_like(np.asarray(t, float)), n).vertices == []

    def test_gumbel_sup_distance(self):
        g = gumbel(2.0)
        A = interpolate(g, 1024)
        grid = np.linspace(0, 1, 100001)
        assert np.max(np.abs(A.evaluate(grid) - g(grid))) < 1e-4

    def test_dominates_pointwise(self):
        g = gumbel(3.0)
        grid = np.linspace(0, 1, 5001)
        for n in [4, 16, 64, 256]:
            A = interpolate(g, n)
            assert np.all(A.evaluate(grid) >= g(grid) - 1e-12)

    def test_monotone_refinement(self):
        g = gumbel(2.0)
        grid = np.linspace(0, 1, 2001)
        coarse = interpolate(g, 32).evaluate(grid)
        fine = interpolate(g, 64).evaluate(grid)
        assert np.all(fine <= coarse + 1e-12)

    def test_scalar_only_callable(self):
        A = interpolate(lambda t: float(max(t, 1 - t)), 4)
        assert A.vertices == [(0.5, 0.5)]

    def test_evaluator_wrapper(self):
        A = interpolate(DependenceEvaluator(gumbel(2.0), node_count=16), 16)
        assert len(A.vertices) == 15

    def test_non_pickands_rejected(self):
        bump = lambda t: np.interp(t, [0, 0.3, 0.5, 0.7, 1], [1, 0.8, 0.85, 0.8, 1])
        with pytest.raises(ConvexityViolation):
            interpolate(bump, 64)


class TestSupportGeometry:
    def test_comonotone(self, comonotone):
        assert support_geometry(comonotone) == (0.5, 0.5)

    def test_product(self, product):
        assert support_geometry(product) == (0.0, 1.0)

    def test_tent_contacts_only_endpoints(self, tent):
        assert support_geometry(tent) == (0.0, 1.0)

    def test_one_sided_contact(self):
        A = validate([(0.3, 0.7), (0.6, 0.7)])  # first slope -1, last 0.75
        left, right = support_geometry(A)
        assert left == 0.3 and right == 1.0

    def test_random_slopes_rule(self):
        for A in random_suite(50, seed=11):
            left, right = support_geometry(A)
            if A.slopes[0] > -1 + 1e-9:
                assert left == 0.0
            if A.slopes[-1] < 1 - 1e-9:
                assert right == 1.0


class TestSupportCurve:
    def test_half_is_identity(self):
        assert support_curve(0.5, 0.3) == pytest.approx(0.3, abs=1e-15)

    def test_degenerate_parameters(self):
        for x in [0.0, 0.3, 1.0]:
            assert support_curve(0.0, x) == 0.0
            assert support_curve(1.0, x) == 1.0

    def test_one_third(self):
        assert support_curve(1 / 3, 0.5) == pytest.approx(0.25, abs=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            support_curve(0.5, 1.5)


class TestRandomPickands:
    def test_zero_vertices_is_product(self, product):
        assert random_pickands(0, 1) == product

    def test_deterministic(self):
        assert random_pickands(8, 123) == random_pickands(8, 123)

    def test_bulk_validity(self):
        rng = np.random.default_rng(0)
        for _ in range(2000):
            A = random_pickands(int(rng.integers(0, 17)), int(rng.integers(2**31)))
            validate(A.vertices)  # re-validation is the oracle
