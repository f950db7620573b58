from math import gcd, pi

import pytest

from npcount import SlopeRange, count_series, segment_exponents, symmetric_count, totient_sieve
from npcount.counting import _series_from_weights, series_from_exponents
from npcount.rho import rho_bruteforce

import golden
import oracles


class TestTotient:
    @pytest.mark.parametrize("n,phi", [(1, 1), (2, 1), (6, 2), (10, 4), (12, 4), (97, 96)])
    def test_known_values(self, n, phi):
        assert totient_sieve(n)[n] == phi

    def test_against_direct_coprime_count(self):
        phi = totient_sieve(300)
        for n in range(1, 301):
            assert phi[n] == sum(1 for k in range(1, n + 1) if gcd(n, k) == 1)

    def test_partial_sum_asymptotic(self):
        # sum_{n<=N} phi(n) ~ 3 N^2 / pi^2, within 0.1% at N = 10^4
        total = sum(totient_sieve(10_000)[1:])
        expect = 3 / pi ** 2 * 1e8
        assert abs(total - expect) <= 1e-3 * expect

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            totient_sieve(0)


class TestSegmentExponents:
    def test_half_open_is_totient(self):
        phi = totient_sieve(50)
        assert segment_exponents(SlopeRange.HALF_OPEN_01, 50) == phi

    def test_closed_adds_unit_slope(self):
        e = segment_exponents(SlopeRange.CLOSED_01, 10)
        assert e[1] == 2
        assert e[2:] == totient_sieve(10)[2:]

    def test_half_range_small(self):
        e = segment_exponents(SlopeRange.CLOSED_0_HALF, 4)
        assert e[1:] == [1, 1, 1, 1]

    @pytest.mark.parametrize("slope_range,num_ok", [
        (SlopeRange.HALF_OPEN_01, lambda n, m: n < m),
        (SlopeRange.CLOSED_01, lambda n, m: n <= m),
        (SlopeRange.CLOSED_0_HALF, lambda n, m: 2 * n <= m),
    ])
    def test_matches_direct_count_up_to_50(self, slope_range, num_ok):
        e = segment_exponents(slope_range, 50)
        for m in range(1, 51):
            assert e[m] == oracles.count_coprime_slopes(m, num_ok), m


class TestCountSeries:
    def test_golden_small(self):
        s = count_series(SlopeRange.HALF_OPEN_01, 10)
        assert s.values == golden.COUNTS_0_TO_10

    def test_golden_100(self):
        assert count_series(SlopeRange.HALF_OPEN_01, 100)[100] == golden.COUNT_100

    def test_limit_zero(self):
        assert count_series(SlopeRange.HALF_OPEN_01, 0).values == (1,)

    def test_closed_small(self):
        s = count_series(SlopeRange.CLOSED_01, 5)
        assert s.values == (1, 2, 4, 8, 15, 28)

    def test_closed_matches_bruteforce_by_depth(self):
        s = count_series(SlopeRange.CLOSED_01, 8)
        for h in range(1, 9):
            total = sum(rho_bruteforce(h, d, SlopeRange.CLOSED_01) for d in range(h + 1))
            assert s[h] == total

    def test_against_product_oracle(self):
        limit = 200
        for slope_range in SlopeRange:
            e = segment_exponents(slope_range, limit)
            assert series_from_exponents(e, limit) == oracles.product_series(e, limit)

    def test_prefix_sum_identity(self):
        base = count_series(SlopeRange.HALF_OPEN_01, 200)
        closed = count_series(SlopeRange.CLOSED_01, 200)
        running = 0
        for n in range(201):
            running += base[n]
            assert closed[n] == running

    def test_square_identity(self):
        # the [0,1/2] series squared equals the [0,1) series with extra
        # 1/(1-x) and 1/(1-x^2) factors, coefficientwise
        limit = 200
        half = count_series(SlopeRange.CLOSED_0_HALF, limit)
        e = segment_exponents(SlopeRange.HALF_OPEN_01, limit)
        e[1] += 1
        e[2] += 1
        rhs = series_from_exponents(e, limit)
        for n in range(limit + 1):
            conv = sum(half[i] * half[n - i] for i in range(n + 1))
            assert conv == rhs[n]

    def test_nondecreasing_half_open(self):
        s = count_series(SlopeRange.HALF_OPEN_01, 400)
        assert all(s[n + 1] >= s[n] for n in range(400))

    def test_all_ranges_start_at_one_and_stay_positive(self):
        for slope_range in SlopeRange:
            s = count_series(slope_range, 100)
            assert s[0] == 1
            assert all(v >= 1 for v in s.values)

    def test_inexact_division_raises(self):
        # weight table not of log-derivative form: 2 a(2) = b(1) a(1) + b(2) a(0) = 3
        with pytest.raises(ArithmeticError):
            _series_from_weights([0, 1, 2], 2)


class TestSymmetric:
    def test_small_values(self):
        assert symmetric_count(8)[1:] == list(golden.SYMMETRIC_COUNTS)

    def test_half_range_at_zero(self):
        assert count_series(SlopeRange.CLOSED_0_HALF, 0)[0] == 1
        assert count_series(SlopeRange.CLOSED_0_HALF, 8).values == golden.HALF_RANGE_COUNTS

    def test_against_bruteforce_enumeration(self):
        sym = symmetric_count(5)
        for g in range(1, 6):
            assert sym[g] == oracles.symmetric_polygons_bruteforce(g)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            symmetric_count(0)
