"""GCD-power matrices, the Gram matrices M_{s,N} of the dilated polylogarithms
L_s(z^n), and the biorthogonal system psi_n.

The inner product is the plain coefficient pairing (f|g) = sum a_n conj(b_n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy.sparse.linalg import eigsh

from . import analytic, arith, series
from .analytic import ComplexParam, _c
from .errors import DomainError, InvalidArgument, NumericError
from .series import TruncatedSeries


# --- Smith determinants ----------------------------------------------------------

def gcd_power_matrix(r: int, N: int) -> list[list[int]]:
    return [[math.gcd(i, j) ** r for j in range(1, N + 1)] for i in range(1, N + 1)]


def bareiss_leading_minors(M: list[list[int]]) -> list[int]:
    """All leading principal minors of an integer matrix, fraction-free.

    Without pivoting, the k-th Bareiss pivot is the k x k leading minor.  A zero
    pivot stops the elimination (later minors are then left undetermined).
    """
    A = [list(row) for row in M]
    n = len(A)
    minors = []
    prev = 1
    for k in range(n):
        piv = A[k][k]
        minors.append(piv)
        if piv == 0:
            break
        for i in range(k + 1, n):
            Ai, Ak = A[i], A[k]
            aik = Ai[k]
            for j in range(k + 1, n):
                Ai[j] = (piv * Ai[j] - aik * Ak[j]) // prev
            Ai[k] = 0
        prev = piv
    return minors


def smith_det(r: int, N: int) -> int:
    """det(gcd(m, n)^r)_{m,n <= N} = J_r(1) ... J_r(N)."""
    if r < 1 or N < 1:
        raise InvalidArgument("r, N must be >= 1")
    return math.prod(arith.jordan(k, r) for k in range(1, N + 1))


def smith_det_bruteforce(r: int, N: int) -> int:
    return bareiss_leading_minors(gcd_power_matrix(r, N))[-1]


# --- Gram matrices -------------------------------------------------------------------

@dataclass
class GramSpec:
    s: ComplexParam
    N: int
    matrix: np.ndarray
    _det: complex | None = field(default=None, repr=False)
    _eigs: tuple | None = field(default=None, repr=False)

    @property
    def det(self) -> complex:
        if self._det is None:
            self._det = gram_det(self)
        return self._det

    @property
    def lambda_min(self) -> float:
        return gram_extreme_eigs(self)[0]

    @property
    def lambda_max(self) -> float:
        return gram_extreme_eigs(self)[1]


def gram_matrix(s, N: int) -> GramSpec:
    """M_{s,N} = (gcd(m, n)^{2s} / (mn)^s), assembled in log space."""
    sc = _c(s)
    if N < 1:
        raise InvalidArgument("N must be >= 1")
    idx = np.arange(1, N + 1)
    g = np.gcd.outer(idx, idx).astype(np.float64)
    logm = np.log(idx.astype(np.float64))
    expo = 2 * np.log(g) - (logm[:, None] + logm[None, :])
    if sc.imag == 0:
        M = np.exp(sc.real * expo)
    else:
        M = np.exp(sc * expo)
    return GramSpec(ComplexParam.of(sc), N, M)


def gram_det(spec: GramSpec) -> complex:
    """Determinant through LU factorization."""
    sign, logdet = np.linalg.slogdet(spec.matrix)
    return complex(sign * np.exp(logdet))


def gram_det_closed(s, N: int):
    """(N!)^{-2s} prod_k J_{2s}(k) = prod_k prod_{p | k} (1 - p^{-2s}).

    Exact when 2s is an integer.
    """
    two_s = None
    if isinstance(s, (int, Fraction)) and Fraction(2 * s).denominator == 1:
        two_s = int(2 * s)
    elif isinstance(s, float) and (2 * s).is_integer():
        two_s = int(2 * s)
    if two_s is not None:
        e = two_s
        out = Fraction(1)
        for k in range(1, N + 1):
            out *= Fraction(arith.jordan(k, e), k**e)
        return out
    sc = _c(s)
    out = 1 + 0j
    for k in range(2, N + 1):
        for p in arith.factorize(k):
            out *= 1 - p ** (-2 * sc)
    return out


def eig_bounds(s) -> tuple[float, float]:
    """[zeta(2s)/zeta(s)^2, zeta(s)^2/zeta(2s)] for real s > 1."""
    sc = _c(s)
    if sc.imag != 0 or sc.real <= 1:
        raise DomainError("eigenvalue bounds need real s > 1")
    z1, z2 = analytic.zeta(sc).real, analytic.zeta(2 * sc).real
    return z2 / z1**2, z1**2 / z2


def gram_extreme_eigs(spec: GramSpec, dense_limit: int = 1000) -> tuple[float, float]:
    if spec._eigs is not None:
        return spec._eigs
    if not spec.s.is_real or spec.s.re <= 1:
        raise DomainError("spectral claims need real s > 1")
    M = spec.matrix
    if spec.N <= dense_limit:
        w = np.linalg.eigvalsh(M)
        out = (float(w[0]), float(w[-1]))
    else:
        try:
            lo = eigsh(M, k=1, which="SA", return_eigenvectors=False, tol=1e-12)
            hi = eigsh(M, k=1, which="LA", return_eigenvectors=False, tol=1e-12)
        except Exception as exc:  # ARPACK non-convergence
            raise NumericError(str(exc)) from exc
        out = (float(lo[0]), float(hi[0]))
    spec._eigs = out
    return out


# --- inner products -----------------------------------------------------------------

def polylog_inner_product(m: int, n: int, s) -> complex:
    """(L_s(z^m) | L_s(z^n)); for real s this is gcd(m,n)^{2s}/(mn)^s zeta(2s)."""
    sc = _c(s)
    if sc.real <= 1:
        raise DomainError("need Re s > 1")
    L = m * n // math.gcd(m, n)
    return (L / m) ** (-sc) * (L / n) ** (-sc.conjugate()) * analytic.zeta(2 * sc.real)


def polylog_inner_product_brute(m: int, n: int, s, K: int = 10**6) -> tuple[complex, float]:
    """Sum over coefficient indices km = ln with k, l <= K, and a tail bound."""
    sc = _c(s)
    k = np.arange(1, K + 1, dtype=np.int64)
    ok = (k * m) % n == 0
    k = k[ok]
    l = k * m // n
    keep = l <= K
    k, l = k[keep].astype(np.float64), l[keep].astype(np.float64)
    val = complex(np.sum(np.exp(-sc * np.log(k) - sc.conjugate() * np.log(l))[::-1]))
    L = m * n // math.gcd(m, n)
    j0 = min(K * m // L, K * n // L)
    base = (L * L / (m * n)) ** (-sc.real)
    tail = base * j0 ** (1 - 2 * sc.real) / (2 * sc.real - 1)
    return val, tail


def mobius_polylog_inner_product(m: int, n: int, s) -> complex:
    """(M_s(z^m) | L_s(z^n)) in closed form, delta = lcm(m, n)/m."""
    sc = _c(s)
    if sc.real <= 1:
        raise DomainError("need Re s > 1")
    L = m * n // math.gcd(m, n)
    delta = L // m
    mu = arith.mobius(delta)
    if mu == 0:
        return 0j
    s2 = 2 * sc.real
    euler = math.prod(1 - p ** (-s2) for p in arith.factorize(delta))
    return mu * delta ** (-sc) * (L / n) ** (-sc.conjugate()) / (analytic.zeta(s2).real * euler)


def mobius_polylog_inner_product_brute(m: int, n: int, s, n_terms: int = 10**6) -> complex:
    """Direct coefficient pairing over indices N = jm = ln <= n_terms."""
    sc = _c(s)
    mu = arith.sieve("mu", n_terms // m).values
    L = m * n // math.gcd(m, n)
    Nn = np.arange(L, n_terms + 1, L, dtype=np.int64)
    j = Nn // m
    l = (Nn // n).astype(np.float64)
    c = mu[j].astype(np.float64)
    return complex(np.sum((c * np.exp(-sc * np.log(j.astype(np.float64)) - sc.conjugate() * np.log(l)))[::-1]))


# --- biorthogonal system ---------------------------------------------------------------

def _exact_s(s):
    if isinstance(s, (int, np.integer)):
        return int(s)
    if isinstance(s, Fraction) and s.denominator == 1:
        return int(s)
    return None


@dataclass(frozen=True)
class BiorthCoeffs:
    n: int
    s: object
    coeffs: dict  # d -> mu(n/d) d^s / n^s

    def as_series(self, order: int) -> TruncatedSeries:
        if order < self.n:
            raise InvalidArgument("order must be >= n")
        exact = _exact_s(self.s) is not None
        c = np.zeros(order + 1, dtype=object if exact else np.complex128)
        if exact:
            c[:] = 0
        for d, v in self.coeffs.items():
            c[d] = v
        return TruncatedSeries(c, f"psi_{self.n}")


def biorth_psi(n: int, s) -> BiorthCoeffs:
    """psi_n = n^{-s} sum_{d | n} mu(n/d) d^s z^d."""
    if n < 1:
        raise InvalidArgument("n must be >= 1")
    e = _exact_s(s)
    out = {}
    for d in arith.divisors(n):
        mu = arith.mobius(n // d)
        if mu == 0:
            continue
        out[d] = mu * Fraction(d, n) ** e if e is not None else mu * (d / n) ** _c(s)
    return BiorthCoeffs(n, s if e is not None else _c(s), out)


def dilated_polylog(m: int, s, order: int) -> TruncatedSeries:
    """Coefficients of L_s(z^m) up to the given order."""
    return series.dilate(series.polylog_coeffs(s, order), m)


def riesz_expand(g: TruncatedSeries, s) -> TruncatedSeries:
    """alpha_n = sum_{d | n} g_d mu(n/d) (d/n)^s, so that g = sum alpha_n L_s(z^n).

    For real s, alpha_n = (g | psi_n).
    """
    return series.otimes(g, series.mobius_coeffs(s, g.order))


def riesz_reconstruct(alpha: TruncatedSeries, s, N: int | None = None) -> TruncatedSeries:
    """sum_n alpha_n L_s(z^n) truncated at order N."""
    N = alpha.order if N is None else N
    if N != alpha.order:
        c = np.zeros(N + 1, dtype=alpha.coeffs.dtype)
        if c.dtype == object:
            c[:] = 0
        m = min(N, alpha.order)
        c[1 : m + 1] = alpha.coeffs[1 : m + 1]
        alpha = TruncatedSeries(c, alpha.label)
    return series.otimes(alpha, series.polylog_coeffs(s, N))
