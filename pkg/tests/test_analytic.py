import cmath
import math
from fractions import Fraction

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from arith_harmonics import analytic as A, series as S
from arith_harmonics.analytic import ComplexParam
from arith_harmonics.errors import DomainError, InvalidArgument, PoleError

import oracles

mp.mp.dps = 30


def rel(a, b):
    return abs(complex(a) - complex(b)) / max(abs(complex(b)), 1e-300)


class TestComplexParam:
    def test_parse(self):
        assert complex(ComplexParam.parse("0.5+14.13i")) == 0.5 + 14.13j
        assert complex(ComplexParam.parse("2")) == 2
        assert complex(ComplexParam.parse("-1.5e-1-2i")) == -0.15 - 2j

    def test_rejects_nonfinite(self):
        with pytest.raises((ValueError, InvalidArgument)):
            ComplexParam(float("nan"), 0.0)


class TestZetaGamma:
    def test_classical(self):
        assert A.zeta(2) == pytest.approx(math.pi**2 / 6, rel=1e-15)
        assert (A.zeta(4) / A.zeta(2) ** 2).real == pytest.approx(0.4, rel=1e-14)
        assert (A.zeta(4) / A.zeta(2)).real == pytest.approx(math.pi**2 / 15, rel=1e-14)
        assert A.zeta(2).real == pytest.approx(oracles.zeta_direct(2), rel=1e-12)

    def test_pole(self):
        with pytest.raises(PoleError):
            A.zeta(1)
        with pytest.raises(PoleError):
            A.gamma_fn(-3)

    def test_zeta_vs_mpmath_grid(self):
        worst = 0.0
        for sigma in np.linspace(0.6, 4.0, 9):
            for t in np.linspace(-50, 50, 21):
                s = complex(sigma, t)
                worst = max(worst, rel(A.zeta(s), complex(mp.zeta(mp.mpc(s)))))
        assert worst <= 1e-12

    def test_zeta_negative_and_trivial_zeros(self):
        assert A.zeta(-1).real == pytest.approx(-1 / 12, rel=1e-13)
        assert abs(A.zeta(-2)) < 1e-14
        assert rel(A.zeta(-3.5 + 2j), complex(mp.zeta(mp.mpc(-3.5, 2)))) < 1e-11

    def test_gamma_vs_mpmath(self):
        worst = 0.0
        for sigma in np.linspace(0.1, 10, 12):
            for t in np.linspace(-30, 30, 13):
                s = complex(sigma, t)
                worst = max(worst, rel(A.gamma_fn(s), complex(mp.gamma(mp.mpc(s)))))
        assert worst <= 1e-12

    def test_gamma_values(self):
        assert A.gamma_fn(1) == pytest.approx(1)
        assert A.gamma_fn(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-15)

    def test_reflection(self):
        s = 0.3 + 0.2j
        assert rel(A.gamma_fn(s) * A.gamma_fn(1 - s), cmath.pi / cmath.sin(cmath.pi * s)) < 1e-13


class TestHurwitz:
    def test_at_one(self):
        for s in (2, 3.5, 0.5 + 3j, -2.5):
            assert rel(A.hurwitz_zeta(s, 1.0), A.zeta(s)) < 1e-12

    def test_half(self):
        direct = math.fsum(1 / (n + 0.5) ** 2 for n in range(10**6)) + 1 / (10**6)
        assert A.hurwitz_zeta(2, 0.5).real == pytest.approx(math.pi**2 / 2, rel=1e-14)
        assert A.hurwitz_zeta(2, 0.5).real == pytest.approx(direct, rel=1e-11)

    def test_distribution(self):
        m, s, x = 3, 2.5, 0.37
        lhs = sum(A.hurwitz_zeta(s, (x + k) / m) for k in range(m))
        assert rel(lhs, m**s * A.hurwitz_zeta(s, x)) < 1e-12

    def test_vs_mpmath(self):
        rng = np.random.default_rng(4)
        worst = 0.0
        for _ in range(150):
            r, th = rng.uniform(0.1, 20), rng.uniform(0, 2 * np.pi)
            s = complex(r * np.cos(th), r * np.sin(th))
            if abs(s - 1) < 0.1:
                continue
            x = rng.uniform(0.05, 1)
            worst = max(worst, rel(A.hurwitz_zeta(s, x), complex(mp.zeta(mp.mpc(s), x))))
        assert worst <= 1e-10

    def test_nonpositive_integers(self):
        for n in range(0, 6):
            x = Fraction(3, 10)
            want = -A.bernoulli_poly(n + 1, x) / (n + 1)
            assert A.hurwitz_zeta(-n, 0.3).real == pytest.approx(float(want), abs=1e-13)

    def test_errors(self):
        with pytest.raises(PoleError):
            A.hurwitz_zeta(1, 0.5)
        with pytest.raises((DomainError, InvalidArgument)):
            A.hurwitz_zeta(2, 1.5)
        with pytest.raises((DomainError, InvalidArgument)):
            A.hurwitz_zeta(2, 0.0)


class TestPolylog:
    def test_zeta_at_one(self):
        r = A.polylog(3, 1)
        assert rel(r.value, A.zeta(3)) < 1e-11 and r.converged

    def test_minus_one(self):
        r = A.polylog(2, -1)
        alt = math.fsum((-1) ** n / n**2 for n in range(1, 200001))
        assert r.value.real == pytest.approx(-math.pi**2 / 12, abs=1e-11)
        assert r.value.real == pytest.approx(alt, abs=1e-10)

    def test_zero(self):
        assert A.polylog(2, 0).value == 0

    def test_vs_mpmath_disk(self):
        for s in (0.5, 2, 1.5 + 2j, -1):
            for z in (0.3, -0.7j, 0.9 * cmath.exp(0.4j)):
                assert rel(A.polylog(s, z).value, complex(mp.polylog(mp.mpc(s), mp.mpc(z)))) < 1e-10

    def test_tail_honest(self):
        r = A.polylog(2, 0.99, tol=1e-12)
        assert r.tail_estimate >= 0 and r.tail_estimate <= 1e-12
        assert abs(r.value - complex(mp.polylog(2, 0.99))) <= 1e-11

    def test_boundary_domain(self):
        with pytest.raises(DomainError):
            A.polylog(0.5, -1)
        with pytest.raises(DomainError):
            A.polylog(2, 1.5)

    def test_abel_boundary(self):
        r = A.polylog(0.5, -1, tol=1e-8, mode="abel")
        assert rel(r.value, complex(mp.polylog(0.5, -1))) < 1e-8
        assert not r.rigorous


class TestCoefficientSeries:
    def test_mobius_at_one(self):
        r = A.mobius_series(2, 1, n_terms=10**6)
        # |mu| <= 1 gives the rigorous tail sum_{n>N} n^-2 <= 1/N
        assert r.rigorous and r.tail_estimate <= 1e-6
        assert abs(r.value.real - 6 / math.pi**2) <= r.tail_estimate

    def test_mobius_s1_heuristic(self):
        r = A.mobius_series(1, 1, n_terms=10**6)
        assert abs(r.value) < 1e-3
        assert r.tail_estimate > 0 and not r.rigorous

    def test_mobius_half_disk(self):
        r = A.mobius_series(0, 0.5)
        want = math.fsum(oracles.mu(k) * 0.5**k for k in range(1, 80))
        assert r.value.real == pytest.approx(want, abs=1e-15)

    def test_liouville(self):
        r = A.liouville_series(2, 1, n_terms=10**6)
        assert r.value.real == pytest.approx(math.pi**2 / 15, abs=1e-5)

    def test_ramanujan_value_at_one(self):
        s, l = 3, 4
        sigma = sum(d ** (s - 1) for d in oracles.divisors(l))
        r = A.ramanujan_series(s, l, 1, n_terms=10**5)
        assert r.value.real == pytest.approx(sigma / (l ** (s - 1) * A.zeta(s).real), abs=1e-9)

    def test_ramanujan_l1_is_mobius(self):
        for z in (0.5, -0.3 + 0.4j):
            assert abs(A.ramanujan_series(2, 1, z).value - A.mobius_series(2, z).value) < 1e-14

    def test_ramanujan_dual_route(self):
        r = A.ramanujan_series(2, 2, 0.5)
        assert abs(r.value - r.extras["direct"]) <= 1e-8

    def test_estermann(self):
        r = A.estermann(3, 1, 0.5)
        assert r.extras["route_difference"] <= 1e-8
        z = 0.4 - 0.3j
        want = sum(len(oracles.divisors(n)) * z**n / n**2.5 for n in range(1, 200))
        assert abs(A.estermann(2.5, 0, z).value - want) < 1e-13

    def test_estermann_boundary_bruteforce(self):
        s, a = 3, 0.5
        N = 20000
        sig = np.zeros(N + 1)
        for d in range(1, N + 1):
            sig[d::d] += d**a
        n = np.arange(1, N + 1)
        direct = math.fsum(sig[1:] / n**s)
        r = A.estermann(s, a, 1, n_terms=10**5)
        assert abs(r.value - direct) < 2 * N ** (a + 1.5 - s)

    def test_f_equation_coefficients(self):
        N = 256
        for s in (3, 2.5 + 1j):
            assert S.boole(S.polylog_coeffs(s, N)).allclose(S.polylog_coeffs(s - 1, N))
            assert S.boole(S.mobius_coeffs(s, N)).allclose(S.mobius_coeffs(s - 1, N))


class TestPeriodic:
    def test_sawtooth(self):
        assert A.sawtooth(0.25) == -0.25
        assert A.sawtooth(3.0) == 0.0
        assert A.sawtooth(-0.25) == pytest.approx(0.25)

    def test_sawtooth_fourier(self):
        t = 0.37
        m = np.arange(1, 10**5 + 1)
        partial = -np.sum(np.sin(2 * np.pi * m * t) / m) / np.pi
        assert abs(partial - A.sawtooth(t)) <= 1e-3

    def test_bernoulli(self):
        x = Fraction(2, 7)
        assert A.bernoulli_poly(2, x) == x * x - x + Fraction(1, 6)
        assert A.bernoulli_numbers(4)[4] == Fraction(-1, 30)

    def test_log_two_sin(self):
        n, x = 4, 0.13
        assert sum(A.log_two_sin(x + k / n) for k in range(n)) == pytest.approx(A.log_two_sin(n * x), abs=1e-14)
        with pytest.raises(DomainError):
            A.log_two_sin(2.0)

    def test_log_two_sin_fourier(self):
        x = 0.21
        n = np.arange(1, 400001)
        assert A.log_two_sin(x) == pytest.approx(-np.sum(np.cos(2 * np.pi * n * x) / n), abs=1e-5)

    def test_takagi(self):
        assert A.takagi(1 / 3) == pytest.approx(2 / 3, abs=1e-15)
        assert A.takagi(0.5) == pytest.approx(0.5)
        xs = np.linspace(0, 1, 257)
        assert np.allclose(A.takagi(xs), np.minimum(xs % 1, 1 - xs % 1) + A.takagi(2 * xs) / 2, atol=1e-15)
        with pytest.raises(InvalidArgument):
            A.takagi(0.3, 0)

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_perron_frobenius_bernoulli(self, p):
        R = 3000
        x = A.midpoint_grid(R)
        y = A.midpoint_grid(R // p)
        for n in (1, 2, 3, 4):
            u = A.bernoulli_poly(n, x)
            assert np.allclose(A.perron_frobenius(u, p), p ** (-n) * A.bernoulli_poly(n, y), atol=1e-13)

    def test_perron_frobenius_constant_and_hurwitz(self):
        R, p, s = 600, 3, 2.5
        assert np.allclose(A.perron_frobenius(np.ones(R), p), 1.0)
        x, y = A.midpoint_grid(R), A.midpoint_grid(R // p)
        u = A.hurwitz_zeta_array(s, x)
        got = A.perron_frobenius(u, p)
        assert np.allclose(got, p ** (s - 1) * A.hurwitz_zeta_array(s, y), rtol=1e-12)

    def test_perron_frobenius_errors(self):
        with pytest.raises(InvalidArgument):
            A.perron_frobenius(np.ones(10), 3)
        with pytest.raises(InvalidArgument):
            A.perron_frobenius(np.ones(10), 1)


class TestKubertAndLerch:
    @pytest.mark.parametrize("m", [2, 3])
    @pytest.mark.parametrize("x", [0.1, 0.37])
    def test_polylog_kubert(self, m, x):
        lhs, rhs = A.kubert_polylog_sides(2.5, x, m)
        assert abs(lhs - rhs) <= 1e-6

    @pytest.mark.parametrize("x", [0.2, 0.3, 0.5])
    def test_lerch(self, x):
        assert A.lerch_decomposition_check(0.5, x) <= 1e-6

    def test_lerch_swap(self):
        r1 = A.lerch_decomposition_check(0.5, 0.3)
        lhs, _ = A.lerch_sides(0.5, 0.7)
        Acoef, Bcoef = A.lerch_coefficients(0.5)
        swapped = Bcoef * A.hurwitz_zeta(0.5, 0.3) + Acoef * A.hurwitz_zeta(0.5, 0.7)
        assert abs(abs(lhs - swapped) - r1) <= 1e-12

    def test_lerch_real_at_half(self):
        lhs, _ = A.lerch_sides(0.5, 0.5)
        assert abs(lhs.imag) <= 1e-8

    def test_lerch_complex(self):
        assert A.lerch_decomposition_check(0.4 + 0.5j, 0.3) <= 1e-6

    def test_lerch_domain(self):
        with pytest.raises(DomainError):
            A.lerch_sides(1.5, 0.3)


@settings(max_examples=30, deadline=None)
@given(st.floats(1.2, 6), st.floats(-10, 10), st.floats(0.05, 0.95))
def test_hurwitz_shift_property(sigma, t, x):
    s = complex(sigma, t)
    # zeta(s, x) = x^{-s} + zeta(s, x + 1) and zeta(s, x + 1) = zeta(s, x) - x^{-s}
    lhs = A.hurwitz_zeta(s, x)
    rhs = x ** (-s) + A._hurwitz(s, x + 1)
    assert abs(lhs - rhs) <= 1e-11 * max(1.0, abs(lhs))
