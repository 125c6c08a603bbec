import random
from fractions import Fraction

import pytest

from ratinterp import (
    InterpolationData,
    ONE,
    RationalFunction,
    X,
    ZERO,
    ZeroDenominator,
    check_interpolates,
    check_weak,
    hermite_polynomial,
    nodal_poly,
    weak_cofactor,
)

from conftest import P, random_data


class TestInterpolationData:
    def test_duplicate_nodes_rejected(self):
        with pytest.raises(ValueError):
            InterpolationData.from_pairs([(1, [2]), (1, [3])])

    def test_empty_values_rejected(self):
        with pytest.raises(ValueError):
            InterpolationData.from_pairs([(1, [])])

    def test_no_points_rejected(self):
        with pytest.raises(ValueError):
            InterpolationData.from_pairs([])

    def test_counts(self, data_four):
        assert data_four.n == 4
        assert data_four.node_count == 3
        assert data_four.nodes == (0, 2, -1)

    def test_json_round_trip(self, data_four):
        again = InterpolationData.from_json_dict(data_four.to_json_dict())
        assert again == data_four

    @pytest.mark.parametrize(
        "obj",
        [
            {"nodes": []},
            {"points": "x"},
            {"points": [{"x": "1"}]},
            {"points": [{"x": "1", "values": "2"}]},
            {"points": [{"x": "1/0", "values": ["1"]}]},
            {"points": [{"x": "1", "values": ["1"]}, {"x": "1", "values": ["2"]}]},
        ],
    )
    def test_json_schema_violations(self, obj):
        with pytest.raises(ValueError):
            InterpolationData.from_json_dict(obj)


class TestNodalPoly:
    def test_four_point(self, data_four):
        assert nodal_poly(data_four) == P(0, -2, -3, 0, 1)

    def test_six_even(self, data_six_even):
        assert nodal_poly(data_six_even) == P(-36, 0, 49, 0, -14, 0, 1)

    def test_single_node(self):
        data = InterpolationData.from_pairs([(5, [1])])
        assert nodal_poly(data) == P(-5, 1)

    def test_monic_and_vanishing_orders(self):
        rng = random.Random(23)
        for _ in range(30):
            data = random_data(rng, max_n=6)
            f = nodal_poly(data)
            assert f.degree == data.n
            assert f.leading == 1
            for x, values in data.points:
                for j in range(len(values)):
                    assert f.derivative(j)(x) == 0
                assert f.derivative(len(values))(x) != 0


class TestHermitePolynomial:
    def test_four_point(self, data_four):
        assert hermite_polynomial(data_four) == P(-2, 0, 0, 1)

    def test_six_even(self, data_six_even):
        assert hermite_polynomial(data_six_even) == P(10, 0, -10, 0, 1)

    def test_single_point_constant(self):
        data = InterpolationData.from_pairs([(0, [7])])
        assert hermite_polynomial(data) == P(7)

    def test_single_node_high_multiplicity_is_a_taylor_polynomial(self):
        data = InterpolationData.from_pairs([(1, [2, 3, 4, 5])])
        shifted = X - 1
        taylor = (
            P(2) + 3 * shifted + 2 * shifted**2 + Fraction(5, 6) * shifted**3
        )
        assert hermite_polynomial(data) == taylor

    def test_matches_all_conditions(self):
        rng = random.Random(29)
        for _ in range(40):
            data = random_data(rng, max_n=7)
            g = hermite_polynomial(data)
            assert g.degree < data.n
            for x, values in data.points:
                for j, y in enumerate(values):
                    assert g.derivative(j)(x) == y


class TestWeakConditions:
    def test_nodal_pair(self, data_four):
        assert check_weak(nodal_poly(data_four), ZERO, data_four)

    def test_hermite_pair(self, data_four):
        assert check_weak(hermite_polynomial(data_four), ONE, data_four)

    def test_low_degree_trace_pair(self, data_four):
        assert check_weak(P(-2), P(1, 0, "-1/3"), data_four)

    def test_non_weak_pair(self, data_four):
        assert not check_weak(X, ONE, data_four)

    def test_multiplying_by_node_free_factor_preserves(self):
        rng = random.Random(31)
        for _ in range(30):
            data = random_data(rng, max_n=5)
            g = hermite_polynomial(data)
            xi = Fraction(11, 1)  # outside the node pool
            factor = X - xi
            assert check_weak(g * factor, factor, data)
            rf_plain = RationalFunction(g, ONE)
            rf_scaled = RationalFunction(g * factor, factor)
            assert rf_scaled == rf_plain  # reduction undoes the common factor
            assert check_interpolates(rf_scaled, data)

    def test_scaling_preserves_weakness_of_trace_rows(self, data_four):
        from ratinterp import extended_euclid

        factor = X - Fraction(7)
        trace = extended_euclid(nodal_poly(data_four), hermite_polynomial(data_four))
        for i in range(trace.N + 2):
            assert check_weak(trace.r(i) * factor, trace.s(i) * factor, data_four)


class TestCheckInterpolates:
    def test_hermite_always_interpolates(self, data_four):
        assert check_interpolates(RationalFunction(hermite_polynomial(data_four), ONE), data_four)

    def test_minimal_fraction(self, data_four):
        assert check_interpolates(RationalFunction(P(6), P(-3, 0, 1)), data_four)

    def test_reduced_node_sharing_pair_fails(self, data_four):
        # (-3x^2, -x) satisfies the weak conditions but reduces to 3x/1,
        # which no longer does
        assert check_weak(P(0, 0, -3), P(0, -1), data_four)
        rf = RationalFunction(P(0, 0, -3), P(0, -1))
        assert rf == RationalFunction(P(0, 3), ONE)
        assert not check_interpolates(rf, data_four)

    def test_pole_elsewhere_fails_weakly(self, data_four):
        assert not check_interpolates(RationalFunction(ONE, X), data_four)


class TestWeakCofactor:
    def test_nodal_row(self, data_four):
        assert weak_cofactor(nodal_poly(data_four), ZERO, data_four) == ONE

    def test_hermite_row(self, data_four):
        assert weak_cofactor(hermite_polynomial(data_four), ONE, data_four) == ZERO

    def test_trace_row(self, data_four):
        assert weak_cofactor(P(0, 0, -3), P(0, -1), data_four) == ONE

    def test_rejects_non_weak_pair(self, data_four):
        with pytest.raises(ValueError):
            weak_cofactor(X, ONE, data_four)

    def test_reconstruction(self):
        rng = random.Random(37)
        for _ in range(20):
            data = random_data(rng, max_n=5)
            f, g = nodal_poly(data), hermite_polynomial(data)
            b = P(rng.randint(-3, 3), rng.randint(-3, 3))
            c = P(rng.randint(-3, 3))
            a = b * g + c * f
            assert weak_cofactor(a, b, data) == c


class TestRationalFunction:
    def test_canonicalization(self):
        rf = RationalFunction(P(-2), P(1, 0, "-1/3"))
        assert rf.numer == P(6)
        assert rf.denom == P(-3, 0, 1)
        assert str(rf) == "6/(x^2 - 3)"

    def test_zero_numerator(self):
        rf = RationalFunction(ZERO, P(0, 0, 5))
        assert rf.numer == ZERO and rf.denom == ONE
        assert rf.delta_degree == 0

    def test_zero_denominator(self):
        with pytest.raises(ZeroDenominator):
            RationalFunction(ONE, ZERO)

    def test_equality_of_representations(self):
        assert RationalFunction(P(0, 2), P(2)) == RationalFunction(X, ONE)

    def test_delta_degree(self):
        assert RationalFunction(P(6), P(-3, 0, 1)).delta_degree == 2
        assert RationalFunction(P(-2, 0, 0, 1), ONE).delta_degree == 3

    def test_call(self):
        rf = RationalFunction(P(6), P(-3, 0, 1))
        assert rf(0) == -2
        assert rf(2) == 6
        with pytest.raises(ZeroDivisionError):
            RationalFunction(ONE, X)(0)
