import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from arith_harmonics import arith, series as S
from arith_harmonics.errors import InvalidArgument, NotInvertible

import oracles


def _rand_exact(rng, N, lead=None):
    c = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(N)]
    if lead is not None:
        c[0] = lead
    return S.from_coeffs(c)


def _pairs_product(a, b, N):
    """Brute force over all pairs (p, q) with pq <= N."""
    out = [0] * (N + 1)
    for p in range(1, N + 1):
        for q in range(1, N // p + 1):
            out[p * q] += a[p] * b[q]
    return out[1:]


class TestOtimes:
    def test_identity(self):
        rng = random.Random(0)
        A = _rand_exact(rng, 64)
        assert S.otimes(A, S.identity(64)).equals(A)

    @pytest.mark.parametrize("s", [0, 1, 2, 3])
    def test_polylog_mobius_inverse_exact(self, s):
        N = 2048
        r = S.otimes(S.polylog_coeffs(s, N), S.mobius_coeffs(s, N))
        assert r.equals(S.identity(N))

    def test_polylog_mobius_inverse_float(self):
        N = 512
        r = S.otimes(S.polylog_coeffs(1.5 + 2j, N), S.mobius_coeffs(1.5 + 2j, N))
        assert np.allclose(r.coeffs, S.identity(N).coeffs, atol=1e-13)

    def test_m0_square(self):
        N = 2048
        r = S.otimes(S.mobius_coeffs(0, N), S.mobius_coeffs(0, N))
        mu = lambda n: oracles.mu(n)
        for n in range(1, N + 1, 37):
            assert r[n] == oracles.dirichlet(mu, mu, n)

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_powers_give_divisor_counts(self, k):
        N = 600
        P = S.otimes_power(S.polylog_coeffs(2, N), k)
        assert all(P[n] == Fraction(oracles.ordered_factorizations(n, k), n**2) for n in range(1, N + 1, 7))
        if k >= 2:
            Q = S.otimes_power(S.mobius_coeffs(1, N), k)
            d = arith.dprime_count_k(N, k)
            assert all(Q[n] == Fraction(int(d[n]), n) for n in range(1, N + 1))

    def test_power_one(self):
        A = S.polylog_coeffs(2, 50)
        assert S.otimes_power(A, 1).equals(A)
        with pytest.raises(InvalidArgument):
            S.otimes_power(A, 0)

    def test_order_mismatch(self):
        with pytest.raises(InvalidArgument):
            S.otimes(S.identity(4), S.identity(5))
        with pytest.raises(InvalidArgument):
            S.boxtimes(S.identity(4), S.identity(5))

    @settings(max_examples=20, deadline=None)
    @given(st.integers(0, 2**32 - 1), st.integers(2, 512))
    def test_commutative_associative(self, seed, N):
        rng = random.Random(seed)
        A, B, C = (_rand_exact(rng, N) for _ in range(3))
        assert S.otimes(A, B).equals(S.otimes(B, A))
        assert S.otimes(S.otimes(A, B), C).equals(S.otimes(A, S.otimes(B, C)))

    def test_dirichlet_homomorphism(self):
        rng = random.Random(5)
        N = 300
        A, B = _rand_exact(rng, N), _rand_exact(rng, N)
        assert S.otimes(A, B).tolist() == _pairs_product(A.coeffs, B.coeffs, N)

    @pytest.mark.parametrize("r", [0.5, 0.9])
    def test_spira_domination(self, r):
        # (a * b)_n with n = pq and r^{pq} <= r^{p+q-1}
        rng = np.random.default_rng(1)
        N = 400
        a = np.concatenate([[0], rng.normal(size=N)])
        b = np.concatenate([[0], rng.normal(size=N)])
        c = S.otimes(S.TruncatedSeries(a), S.TruncatedSeries(b)).coeffs
        n = np.arange(N + 1)
        lhs = np.sum(np.abs(c) * r**n)
        rhs = np.sum(np.abs(a) * r**n) * np.sum(np.abs(b) * r**n) / r
        assert lhs <= rhs


class TestInverse:
    def test_polylog_inverse_is_mobius(self):
        N = 500
        assert S.otimes_inverse(S.polylog_coeffs(2, N)).equals(S.mobius_coeffs(2, N))

    def test_identity_inverse(self):
        assert S.otimes_inverse(S.identity(100)).equals(S.identity(100))

    def test_ones_inverse_is_mu(self):
        N = 1000
        inv = S.otimes_inverse(S.from_table(arith.ones(N)))
        assert inv.tolist() == [oracles.mu(n) for n in range(1, N + 1)]

    def test_not_invertible(self):
        with pytest.raises(NotInvertible):
            S.otimes_inverse(S.from_coeffs([0, 1, 2]))

    def test_random_round_trip(self):
        rng = random.Random(9)
        for _ in range(200):
            N = rng.randint(1, 128)
            A = _rand_exact(rng, N, lead=Fraction(rng.choice([-3, -1, 1, 2, 5]), rng.randint(1, 4)))
            assert S.otimes(A, S.otimes_inverse(A)).equals(S.identity(N))

    def test_float_round_trip(self):
        A = S.polylog_coeffs(0.5 + 1j, 300)
        B = S.otimes_inverse(A)
        assert B.allclose(S.mobius_coeffs(0.5 + 1j, 300), atol=1e-12)


class TestBoxtimes:
    def test_ramanujan_self_product(self):
        N = 300
        for l in (1, 4, 6, 12):
            C = S.ramanujan_coeffs(2, l, N)
            P = S.boxtimes(C, C)
            for n in range(1, N + 1):
                assert P[n] == Fraction(oracles.unitary_divisor_count(n) * arith.ramanujan_sum(n, l), n * n)

    def test_identity(self):
        A = S.polylog_coeffs(3, 100)
        assert S.boxtimes(A, S.identity(100)).equals(A)

    def test_unitary_divisor_count(self):
        N = 500
        one = S.from_table(arith.ones(N))
        assert S.boxtimes(one, one).tolist() == [oracles.unitary_divisor_count(n) for n in range(1, N + 1)]


class TestLambert:
    def test_mu(self):
        assert S.lambert_resum(S.from_table(arith.sieve("mu", 400))).equals(S.identity(400))

    def test_phi(self):
        assert S.lambert_resum(S.from_table(arith.sieve("phi", 400))).tolist() == list(range(1, 401))

    def test_liouville(self):
        r = S.lambert_resum(S.from_table(arith.sieve("lambda", 400))).tolist()
        assert r == [1 if math.isqrt(n) ** 2 == n else 0 for n in range(1, 401)]

    def test_power_series_evaluation(self):
        # sum mu(n) x^n / (1 - x^n) = x, evaluated as a power series
        x = 0.3
        direct = sum(oracles.mu(n) * x**n / (1 - x**n) for n in range(1, 80))
        assert direct == pytest.approx(x, abs=1e-15)


class TestMultiplier:
    def test_reciprocal_multipliers(self):
        rng = random.Random(2)
        f = _rand_exact(rng, 256)
        g = S.multiplier_apply(S.polylog_coeffs(3, 256), S.multiplier_apply(S.mobius_coeffs(3, 256), f))
        assert g.equals(f)
        assert S.multiplier_apply(S.identity(256), f).equals(f)

    def test_estermann_coefficients(self):
        N = 400
        for s, a in [(3, 1), (4, 2), (5, 0)]:
            r = S.multiplier_apply(S.mobius_coeffs(s, N), S.estermann_coeffs(s, a, N))
            assert r.equals(S.polylog_coeffs(s - a, N))

    def test_estermann_float(self):
        N = 300
        s, a = 3.2, 0.5 + 0.25j
        r = S.multiplier_apply(S.mobius_coeffs(s, N), S.estermann_coeffs(s, a, N))
        assert r.allclose(S.polylog_coeffs(s - a, N), atol=1e-12)


class TestMisc:
    def test_boole_shifts_parameter(self):
        N = 300
        for s in (3, 2):
            assert S.boole(S.polylog_coeffs(s, N)).equals(S.polylog_coeffs(s - 1, N))
            assert S.boole(S.mobius_coeffs(s, N)).equals(S.mobius_coeffs(s - 1, N))
        assert S.boole(S.polylog_coeffs(2.5, N)).allclose(S.polylog_coeffs(1.5, N))

    def test_dilate(self):
        A = S.from_coeffs([1, 2, 3, 4, 5, 6])
        assert S.dilate(A, 2).tolist() == [0, 1, 0, 2, 0, 3]

    def test_constant_term_rejected(self):
        with pytest.raises(InvalidArgument):
            S.TruncatedSeries(np.array([1, 2]))

    def test_evaluation(self):
        A = S.from_coeffs([1, 0, 2])
        assert A(0.5) == pytest.approx(0.5 + 2 * 0.125)

    def test_exact_kinds(self):
        assert S.polylog_coeffs(2, 10).scalar_kind == "exact"
        assert S.polylog_coeffs(2.5, 10).scalar_kind == "float"
