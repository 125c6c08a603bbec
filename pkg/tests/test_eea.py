import random

import pytest

from ratinterp import (
    DegreeTie,
    NotASyzygy,
    ONE,
    X,
    ZERO,
    ZeroSecondInput,
    decompose,
    extended_euclid,
    recombine,
    syzygy_basis_pair,
)
from ratinterp.eea import Decomposition

from conftest import P, full_trace_check, interp_trace, random_poly


class TestFourPointTrace:
    """The degree-4 instance with one double node, traced exactly."""

    def trace(self):
        return extended_euclid(P(0, -2, -3, 0, 1), P(-2, 0, 0, 1))

    def test_length(self):
        assert self.trace().N == 3

    def test_remainders(self):
        tr = self.trace()
        assert [tr.r(i) for i in range(5)] == [
            P(0, -2, -3, 0, 1),
            P(-2, 0, 0, 1),
            P(0, 0, -3),
            P(-2),
            ZERO,
        ]

    def test_cofactors(self):
        tr = self.trace()
        assert [tr.s(i) for i in range(4)] == [ZERO, ONE, P(0, -1), P(1, 0, "-1/3")]
        assert [tr.t(i) for i in range(4)] == [ONE, ZERO, ONE, P(0, "1/3")]

    def test_quotients(self):
        assert list(self.trace().quotients) == [X, P(0, "-1/3"), P(0, 0, "3/2")]

    def test_invariants(self):
        full_trace_check(self.trace())


class TestSixEvenTrace:
    def test_rows_and_quotients(self, data_six_even):
        tr = interp_trace(data_six_even)
        assert tr.N == 3
        assert tr.r(2) == P(4, 0, -1)
        # forced by the recurrence: reducing g = x^4 - 10x^2 + 10 modulo
        # -x^2 + 4 substitutes x^2 = 4, giving 16 - 40 + 10
        assert tr.r(3) == P(-14)
        assert tr.s(2) == P(4, 0, -1)
        assert tr.s(3) == P(-23, 0, 10, 0, -1)
        assert list(tr.quotients) == [P(-4, 0, 1), P(6, 0, -1), P("-2/7", 0, "1/14")]

    def test_invariants(self, data_six_even):
        full_trace_check(interp_trace(data_six_even), data_six_even)


class TestSmallTraces:
    def test_exact_division_stops_immediately(self):
        tr = extended_euclid(P(0, 0, 1), X)
        assert tr.N == 1
        assert list(tr.quotients) == [X]
        assert tr.r(2) == ZERO
        full_trace_check(tr)

    def test_equal_degrees_allowed(self):
        tr = extended_euclid(P(1, 0, 1), P(0, 0, 1))
        assert tr.q(1) == ONE
        assert tr.r(2) == ONE
        full_trace_check(tr)

    def test_zero_second_input(self):
        with pytest.raises(ZeroSecondInput):
            extended_euclid(X, ZERO)

    def test_order_violations(self):
        with pytest.raises(ValueError):
            extended_euclid(X, P(0, 0, 1))
        with pytest.raises(ZeroSecondInput):
            extended_euclid(ZERO, ZERO)
        with pytest.raises(ValueError):
            extended_euclid(ZERO, ONE)

    def test_quotient_degrees(self):
        rng = random.Random(41)
        for _ in range(40):
            d0 = rng.randint(1, 7)
            r0 = random_poly(rng, d0)
            r1 = random_poly(rng, rng.randint(0, d0))
            tr = extended_euclid(r0, r1)
            for i in range(2, tr.N + 1):
                assert tr.q(i).degree >= 1
            if r0.degree > r1.degree:
                assert tr.q(1).degree >= 1
            full_trace_check(tr)


class TestDecompose:
    def test_basis_rows_are_units(self, data_four):
        tr = interp_trace(data_four)
        for i in (0, 1):
            dec = decompose(tr.r(i), tr.s(i), tr.t(i), tr)
            expected = [ZERO] * (tr.N + 2)
            expected[i] = ONE
            assert list(dec.m) == expected

    def test_round_trip_random_combinations(self, data_four):
        tr = interp_trace(data_four)
        rng = random.Random(43)
        for _ in range(50):
            m = [random_poly(rng, rng.randint(-1, 2))]
            for i in range(1, tr.N + 1):
                m.append(random_poly(rng, rng.randint(-1, tr.q(i).degree - 1)))
            m.append(random_poly(rng, rng.randint(-1, 2)))
            dec = Decomposition(tuple(m))
            a, b, c = recombine(dec, tr)
            assert decompose(a, b, c, tr) == dec

    def test_rejects_non_syzygy(self, data_four):
        tr = interp_trace(data_four)
        with pytest.raises(NotASyzygy):
            decompose(ONE, ONE, ONE, tr)

    def test_rejects_degree_tie(self):
        tr = extended_euclid(P(1, 0, 1), P(0, 0, 1))
        with pytest.raises(DegreeTie):
            decompose(tr.r(0), tr.s(0), tr.t(0), tr)

    def test_length_mismatch(self, data_four):
        tr = interp_trace(data_four)
        with pytest.raises(ValueError):
            recombine(Decomposition((ONE,)), tr)


class TestBasisPairs:
    def test_initial_rows(self, data_four):
        tr = interp_trace(data_four)
        first, second = syzygy_basis_pair(tr, 0)
        assert first == (tr.r(0), ZERO, ONE)
        assert second == (tr.r(1), ONE, ZERO)

    def test_four_point_pair_two(self, data_four):
        tr = interp_trace(data_four)
        first, second = syzygy_basis_pair(tr, 2)
        assert first == (P(0, 0, -3), P(0, -1), ONE)
        assert second == (P(-2), P(1, 0, "-1/3"), P(0, "1/3"))

    def test_returned_pair_is_unimodular(self, data_four):
        tr = interp_trace(data_four)
        for i in range(tr.N):
            (_, s0, t0), (_, s1, t1) = syzygy_basis_pair(tr, i)
            det = s0 * t1 - s1 * t0
            assert det == ONE or det == P(-1)

    def test_index_bounds(self, data_four):
        tr = interp_trace(data_four)
        with pytest.raises(IndexError):
            syzygy_basis_pair(tr, tr.N)
        with pytest.raises(IndexError):
            syzygy_basis_pair(tr, -1)
