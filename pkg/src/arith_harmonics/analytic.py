"""Floating-point special functions and boundary-aware power-series evaluation.

Every series evaluator returns a :class:`SeriesEvalResult` carrying the
partial sum, the number of terms, a tail estimate and whether that estimate is
a proven bound (``rigorous``) or a heuristic.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

import numpy as np
from scipy import special as sp

from . import arith
from .errors import ConsistencyError, DomainError, InvalidArgument, PoleError

_CHUNK = 1 << 20


# --- parameters -----------------------------------------------------------------

_NUM = r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX_RE = re.compile(rf"^\s*(?P<re>{_NUM})?\s*(?:(?P<im>[+-]\s*(?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)\s*[ij])?\s*$")


@dataclass(frozen=True)
class ComplexParam:
    re: float
    im: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise InvalidArgument(f"non-finite parameter ({self.re}, {self.im})")
        object.__setattr__(self, "re", float(self.re))
        object.__setattr__(self, "im", float(self.im))

    @classmethod
    def of(cls, s) -> "ComplexParam":
        if isinstance(s, ComplexParam):
            return s
        if isinstance(s, str):
            return cls.parse(s)
        if isinstance(s, Fraction):
            return cls(float(s))
        z = complex(s)
        return cls(z.real, z.imag)

    @classmethod
    def parse(cls, text: str) -> "ComplexParam":
        """Parse "2", "0.5+14.13i", "-1i", "1.5-2j"."""
        m = _COMPLEX_RE.match(text)
        if not m or (m.group("re") is None and m.group("im") is None):
            raise InvalidArgument(f"cannot parse complex value {text!r}")
        re_part = float(m.group("re")) if m.group("re") else 0.0
        im_part = 0.0
        if m.group("im") is not None:
            t = m.group("im").replace(" ", "")
            im_part = float(t + "1") if t in "+-" else float(t)
        return cls(re_part, im_part)

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    @property
    def is_real(self) -> bool:
        return self.im == 0.0

    def __str__(self) -> str:
        if self.is_real:
            return repr(self.re)
        return f"{self.re!r}{self.im:+}i"


def _c(s) -> complex:
    return complex(ComplexParam.of(s))


@dataclass(frozen=True)
class SeriesEvalResult:
    value: complex
    terms_used: int
    tail_estimate: float
    converged: bool
    rigorous: bool = True
    method: str = "direct"
    extras: dict = field(default_factory=dict)

    def __complex__(self):
        return complex(self.value)


# --- Bernoulli numbers ------------------------------------------------------------

@lru_cache(maxsize=None)
def bernoulli_numbers(n: int) -> tuple[Fraction, ...]:
    """B_0..B_n as exact rationals (B_1 = -1/2)."""
    B = [Fraction(1)]
    for m in range(1, n + 1):
        B.append(-sum(comb(m + 1, k) * B[k] for k in range(m)) / (m + 1))
    return tuple(B)


def bernoulli_poly(n: int, x):
    """B_n(x); exact when x is a Fraction or int, float otherwise."""
    if n < 0:
        raise InvalidArgument("n must be >= 0")
    B = bernoulli_numbers(n)
    if isinstance(x, (int, Fraction)):
        return sum(comb(n, k) * B[k] * Fraction(x) ** (n - k) for k in range(n + 1))
    x = np.asarray(x, dtype=np.float64)
    acc = np.zeros_like(x)
    for k in range(n + 1):  # Horner in x
        acc = acc * x + comb(n, k) * float(B[k])
    return float(acc) if acc.ndim == 0 else acc


# --- zeta and gamma ---------------------------------------------------------------

def _is_nonpositive_int(s: complex) -> bool:
    return s.imag == 0 and s.real <= 0 and s.real == math.floor(s.real)


def gamma_fn(s) -> complex:
    z = _c(s)
    if _is_nonpositive_int(z):
        raise PoleError(f"Gamma has a pole at {z.real:g}")
    return complex(sp.gamma(z))


@lru_cache(maxsize=64)
def _eta_weights(n: int) -> np.ndarray:
    """(d_k - d_n)/d_n for k < n with exact integer d_k."""
    d, acc = [], 0
    for i in range(n + 1):
        acc += Fraction(math.factorial(n + i - 1) * 4**i, math.factorial(n - i) * math.factorial(2 * i))
        d.append(n * acc)
    dn = d[n]
    w = np.array([float((d[k] - dn) / dn) for k in range(n)])
    w.flags.writeable = False
    return w


def _eta_terms(t: float) -> int:
    return int(math.ceil((math.pi * abs(t) / 2 + math.log(1 + 2 * abs(t)) + 40.0) / math.log(3 + math.sqrt(8))))


def _zeta_eta(s: complex) -> complex:
    n = _eta_terms(s.imag)
    w = _eta_weights(n)
    k = np.arange(1, n + 1, dtype=np.float64)
    signs = np.where(np.arange(n) % 2 == 0, 1.0, -1.0)
    eta = -np.sum(signs * w * np.exp(-s * np.log(k)))
    return complex(eta) / (1 - 2 ** (1 - s))


def zeta(s) -> complex:
    """Riemann zeta, accelerated alternating series for Re s >= 0."""
    z = _c(s)
    if z == 1:
        raise PoleError("zeta has a pole at s = 1")
    if z.real < 0:
        # functional equation
        if _is_nonpositive_int(z) and int(z.real) % 2 == 0:
            return 0j
        return 2**z * math.pi ** (z - 1) * cmath.sin(math.pi * z / 2) * gamma_fn(1 - z) * zeta(1 - z)
    if abs(1 - 2 ** (1 - z)) < 0.05:
        return _hurwitz(z, 1.0)
    return _zeta_eta(z)


def _hurwitz(s: complex, a: float, n_shift: int | None = None, m_terms: int = 14) -> complex:
    """Euler-Maclaurin zeta(s, a) for any a > 0."""
    N = n_shift if n_shift is not None else int(max(15, 2 * abs(s))) + 15
    B = bernoulli_numbers(2 * m_terms)
    k = np.arange(N, dtype=np.float64) + a
    head = complex(np.sum(np.exp(-s * np.log(k))))
    x = N + a
    lx = math.log(x)
    xs = cmath.exp(-s * lx)
    acc = head + x * xs / (s - 1) + xs / 2
    rising = s  # s (s+1) ... (s+2j-2)
    xp = xs / x  # x^{-s-1}
    for j in range(1, m_terms + 1):
        term = float(B[2 * j]) / math.factorial(2 * j) * rising * xp
        acc += term
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        xp /= x * x
    return acc


def hurwitz_zeta(s, x: float) -> complex:
    """zeta(s, x) = sum_{k>=0} (k + x)^{-s} and its continuation, 0 < x <= 1."""
    z = _c(s)
    if z == 1:
        raise PoleError("Hurwitz zeta has a pole at s = 1")
    if not (0 < x <= 1):
        raise DomainError(f"x must lie in (0, 1], got {x}")
    if z.real < 0:
        if _is_nonpositive_int(z):
            n = -int(z.real)
            return complex(-bernoulli_poly(n + 1, float(x)) / (n + 1))
        return _hurwitz_binomial(z, float(x))
    return _hurwitz(z, float(x))


def hurwitz_zeta_array(s, x) -> np.ndarray:
    """hurwitz_zeta over an array of x in (0, 1]."""
    z = _c(s)
    x = np.asarray(x, dtype=np.float64)
    if np.any((x <= 0) | (x > 1)):
        raise DomainError("x must lie in (0, 1]")
    if z == 1:
        raise PoleError("Hurwitz zeta has a pole at s = 1")
    if z.real < -1:
        return np.array([hurwitz_zeta(z, float(v)) for v in x.ravel()]).reshape(x.shape)
    N = int(max(15, 2 * abs(z))) + 15
    m_terms = 14
    B = bernoulli_numbers(2 * m_terms)
    flat = x.ravel()
    head = np.zeros(flat.shape, dtype=np.complex128)
    for k in range(N):
        head += np.exp(-z * np.log(flat + k))
    X = N + flat
    xs = np.exp(-z * np.log(X))
    acc = head + X * xs / (z - 1) + xs / 2
    rising = z
    xp = xs / X
    for j in range(1, m_terms + 1):
        acc += float(B[2 * j]) / math.factorial(2 * j) * rising * xp
        rising *= (z + 2 * j - 1) * (z + 2 * j)
        xp = xp / (X * X)
    return acc.reshape(x.shape)


def _hurwitz_binomial(s: complex, a: float) -> complex:
    """zeta(s, a) = sum_k binom(-s, k) h^k zeta(s + k) around a = 1 (or a = 0 after peeling a^{-s}).

    Euler-Maclaurin cancels badly for Re s < 0; here |h| <= 1/2 and no large shift appears.
    """
    h = a - 1 if a > 0.5 else a
    acc, c, small = 0j, 1 + 0j, 0
    for k in range(400):
        if c == 0:
            break
        if s + k != 1:
            term = c * h**k * zeta(s + k)
            acc += term
            if k > abs(s) and abs(term) < 1e-17 * abs(acc):
                small += 1
                if small >= 3:
                    break
        c *= (-s - k) / (k + 1)
    return acc if a > 0.5 else acc + a ** (-s)


# --- power-series summation --------------------------------------------------------

def _terms(c: np.ndarray, start: int, stop: int, s: complex, z: complex) -> np.ndarray:
    """c_k z^k k^{-s} for start <= k < stop."""
    k = np.arange(start, stop, dtype=np.float64)
    logz = cmath.log(z) if z != 0 else None
    if logz is None:
        return np.zeros(stop - start, dtype=np.complex128)
    ex = -s * np.log(k) + k * logz.real
    ph = k * logz.imag
    return c[start:stop] * np.exp(ex + 1j * ph)


def _segment_sums(c: np.ndarray, s: complex, z: complex, cuts: list[int]) -> list[complex]:
    """Sums of c_k z^k k^{-s} over (cuts[i], cuts[i+1]]."""
    out = []
    for lo, hi in zip(cuts[:-1], cuts[1:]):
        acc = 0j
        a = lo + 1
        while a <= hi:
            b = min(hi + 1, a + _CHUNK)
            acc += complex(np.sum(_terms(c, a, b, s, z)))
            a = b
        out.append(acc)
    return out


def _dyadic_cuts(n: int, blocks: int = 10) -> list[int]:
    cuts = sorted({0} | {n >> j for j in range(blocks + 1)})
    return cuts


def _sum_with_blocks(c: np.ndarray, s: complex, z: complex, n: int):
    """Partial sum plus the heuristic max |block sum| over the last 10 dyadic blocks."""
    cuts = _dyadic_cuts(n)
    seg = _segment_sums(c, s, z, cuts)
    total = complex(sum(seg))
    blocks = seg[1:] if len(seg) > 1 else seg
    return total, max(abs(b) for b in blocks)


def _geometric_tail(rho: float, sigma: float, n: int) -> float:
    """Bound on sum_{k>n} k^{-sigma} rho^k for rho < 1."""
    if rho == 0:
        return 0.0
    first = (n + 1) ** (-sigma) * rho ** (n + 1)
    q = rho * ((n + 2) / (n + 1)) ** max(0.0, -sigma)
    if q >= 1:
        return math.inf
    return first / (1 - q)


def _boundary_tail(sigma: float, n: int) -> float:
    """Bound on sum_{k>n} k^{-sigma}, sigma > 1."""
    return n ** (1 - sigma) / (sigma - 1)


def _terms_for_geometric(rho: float, sigma: float, tol: float, cap: int) -> int:
    if rho == 0:
        return 1
    n = max(8, int(math.log(tol * (1 - rho)) / math.log(rho)) + 1)
    while n < cap and _geometric_tail(rho, sigma, n) > tol:
        n = min(cap, 2 * n)
    return n


def _neville_zero(h: list[float], v: list[complex]) -> tuple[complex, float]:
    """Polynomial extrapolation of v(h) to h = 0; returns value and last correction."""
    p = list(v)
    m = len(h)
    for level in range(1, m):
        for i in range(m - 1, level - 1, -1):
            p[i] = (h[i - level] * p[i] - h[i] * p[i - 1]) / (h[i - level] - h[i])
    # p[-2] is the extrapolant one order lower
    return p[-1], abs(p[-1] - p[-2])


def _abel(c_bound_sigma: float, coeffs_fn, s: complex, z: complex, tol: float,
          j_range=range(6, 11), cap: int = 10**7) -> SeriesEvalResult:
    """Radial limit of sum c_k (r z)^k k^{-s} by Richardson extrapolation in h = 1 - r."""
    hs, vals, used = [], [], 0
    for j in j_range:
        h = 2.0 ** (-j)
        r = 1 - h
        n = _terms_for_geometric(r * abs(z), c_bound_sigma, tol * 1e-3, cap)
        c = coeffs_fn(n)
        v = complex(sum(_segment_sums(c, s, r * z, [0, n])))
        hs.append(h)
        vals.append(v)
        used = max(used, n)
    value, corr = _neville_zero(hs, vals)
    return SeriesEvalResult(value, used, corr, corr <= tol, rigorous=False, method="abel",
                            extras={"radii": [1 - h for h in hs], "values": vals})


def _ones(n: int) -> np.ndarray:
    c = np.ones(n + 1, dtype=np.float64)
    c[0] = 0
    return c


def polylog(s, z, tol: float = 1e-12, *, mode: str = "direct", max_terms: int = 10**7) -> SeriesEvalResult:
    """L_s(z) = sum_{k>=1} z^k / k^s on the closed unit disk."""
    sc = _c(s)
    z = complex(z)
    sigma = sc.real
    az = abs(z)
    if az > 1 + 1e-15:
        raise DomainError("|z| must be <= 1")
    if z == 0:
        return SeriesEvalResult(0j, 0, 0.0, True)
    if mode == "abel":
        if abs(z - 1) < 1e-15 and sigma <= 1:
            raise DomainError("Abel mean at z = 1 diverges for Re s <= 1")
        return _abel(sigma, _ones, sc, z, tol, cap=max_terms)
    if mode != "direct":
        raise InvalidArgument(f"unknown mode {mode!r}")
    boundary = az >= 1 - 1e-15
    if boundary and sigma <= 1:
        raise DomainError("boundary evaluation needs Re s > 1 (use mode='abel')")
    if not boundary:
        n = _terms_for_geometric(az, sigma, tol, max_terms)
        tail = _geometric_tail(az, sigma, n)
        value = complex(sum(_segment_sums(_ones(n), sc, z, [0, n])))
        return SeriesEvalResult(value, n, tail, tail <= tol)
    if abs(z - 1) < 1e-15:
        # finite head plus Euler-Maclaurin tail zeta(s, n + 1)
        n = 64
        value = complex(sum(_segment_sums(_ones(n), sc, 1.0 + 0j, [0, n]))) + _hurwitz(sc, n + 1.0)
        return SeriesEvalResult(value, n, 0.0, True, method="direct+euler-maclaurin")
    # Dirichlet test: partial sums of z^k are bounded by 2/|1 - z|
    K = 2 * abs(sc) / (sigma * abs(1 - z))
    n = int(min(max_terms, max(16.0, (K / tol) ** (1 / sigma))))
    tail = K * (n + 1) ** (-sigma)
    value = complex(sum(_segment_sums(_ones(n), sc, z, [0, n])))
    return SeriesEvalResult(value, n, tail, tail <= tol)


def _coef_series(table_kind: str, s, z, n_terms: int, mode: str, tol: float) -> SeriesEvalResult:
    sc = _c(s)
    z = complex(z)
    sigma = sc.real
    az = abs(z)
    if az > 1 + 1e-15:
        raise DomainError("|z| must be <= 1")
    if n_terms < 1:
        raise InvalidArgument("n_terms must be >= 1")

    def coeffs(n):
        return arith.sieve(table_kind, n).values.astype(np.float64)

    if mode == "abel":
        return _abel(sigma, coeffs, sc, z, tol, cap=n_terms)
    if mode != "direct":
        raise InvalidArgument(f"unknown mode {mode!r}")
    c = coeffs(n_terms)
    value, block = _sum_with_blocks(c, sc, z, n_terms)
    if az < 1 - 1e-15:
        tail = _geometric_tail(az, sigma, n_terms)
        return SeriesEvalResult(value, n_terms, tail, tail <= tol)
    if sigma > 1:
        tail = _boundary_tail(sigma, n_terms)
        return SeriesEvalResult(value, n_terms, tail, tail <= tol)
    return SeriesEvalResult(value, n_terms, block, block <= tol, rigorous=False,
                            method="direct-heuristic-tail")


def mobius_series(s, z, n_terms: int = 10**5, mode: str = "direct", tol: float = 1e-6) -> SeriesEvalResult:
    """M_s(z) = sum mu(k) z^k / k^s."""
    return _coef_series("mu", s, z, n_terms, mode, tol)


def liouville_series(s, z, n_terms: int = 10**5, mode: str = "direct", tol: float = 1e-6) -> SeriesEvalResult:
    """N_s(z) = sum lambda(k) z^k / k^s."""
    return _coef_series("lambda", s, z, n_terms, mode, tol)


def ramanujan_series(s, l: int, z, n_terms: int = 10**5, tol: float = 1e-6) -> SeriesEvalResult:
    """C_{s,l}(z) = sum c_k(l) z^k / k^s, returned through sum_{d|l} d^{1-s} M_s(z^d).

    The direct partial sum is computed as well and the two must agree within
    ten times the combined tail estimates.
    """
    sc = _c(s)
    z = complex(z)
    if abs(z) > 1 + 1e-15:
        raise DomainError("|z| must be <= 1")
    if l < 1:
        raise InvalidArgument("l must be >= 1")
    c = arith.ramanujan_column(l, n_terms).astype(np.float64)
    direct, _ = _sum_with_blocks(c, sc, z, n_terms)
    ident, tails, rig = 0j, 0.0, True
    for d in arith.divisors(l):
        m = mobius_series(sc, z**d, n_terms, tol=tol)
        ident += d ** (1 - sc) * m.value
        tails += d ** (1 - sc.real) * m.tail_estimate
        rig = rig and m.rigorous
    direct_tail = tails  # same coefficient magnitudes up to sigma_1(l)
    diff = abs(direct - ident)
    if diff > 10 * (tails + direct_tail) + 1e-12 * max(1.0, abs(ident)):
        raise ConsistencyError(f"C_(s,l) routes disagree by {diff:.3e}")
    return SeriesEvalResult(ident, n_terms, tails, tails <= tol, rigorous=rig, method="mobius-identity",
                            extras={"direct": direct, "route_difference": diff})


def estermann(s, a, z, n_terms: int = 10**5, tol: float = 1e-8) -> SeriesEvalResult:
    """E(s, a, z) = sum sigma_a(n) z^n / n^s, cross-checked against sum_p p^{a-s} L_s(z^p)."""
    sc, ac = _c(s), _c(a)
    z = complex(z)
    az = abs(z)
    if az > 1 + 1e-15:
        raise DomainError("|z| must be <= 1")
    beta = max(0.0, ac.real)
    if az >= 1 - 1e-15 and sc.real <= 1 + beta:
        raise DomainError("boundary evaluation needs Re s > 1 + max(0, Re a)")
    coeff = arith.sigma_table(ac if ac.imag or ac.real != int(ac.real) else int(ac.real), n_terms).values
    c = coeff.astype(np.complex128)
    direct = complex(sum(_segment_sums(c, sc, z, [0, n_terms])))
    # |sigma_a(n)| <= d(n) n^beta <= 2 n^{beta + 1/2}
    growth = beta + 0.5
    if az < 1 - 1e-15:
        tail = 2 * _geometric_tail(az, sc.real - growth, n_terms)
    else:
        tail = 2 * _boundary_tail(sc.real - growth, n_terms) if sc.real - growth > 1 else math.inf
    one = _ones(n_terms)
    route = 0j
    for p in range(1, n_terms + 1):
        m = n_terms // p
        route += p ** (ac - sc) * complex(np.sum(_terms(one, 1, m + 1, sc, z**p)))
    diff = abs(direct - route)
    if diff > 1e-10 * max(1.0, abs(direct)) + 10 * tail:
        raise ConsistencyError(f"Estermann routes disagree by {diff:.3e}")
    return SeriesEvalResult(direct, n_terms, tail, tail <= tol, extras={"riesz_route": route, "route_difference": diff})


# --- periodic helpers ------------------------------------------------------------

def sawtooth(t):
    """{t} = t - floor(t) - 1/2 off the integers, 0 on them."""
    t = np.asarray(t, dtype=np.float64)
    f = t - np.floor(t)
    out = np.where(f == 0, 0.0, f - 0.5)
    return float(out) if out.ndim == 0 else out


def log_two_sin(x):
    """log|2 sin(pi x)|."""
    xa = np.asarray(x, dtype=np.float64)
    frac = xa - np.round(xa)
    if np.any(frac == 0):
        raise DomainError("log|2 sin(pi x)| is singular at integers")
    out = np.log(2 * np.abs(np.sin(np.pi * frac)))
    return float(out) if out.ndim == 0 else out


def takagi(x, n_terms: int = 53):
    """Blancmange function sum_{n<N} dist(2^n x, Z) / 2^n."""
    if n_terms < 1:
        raise InvalidArgument("n_terms must be >= 1")
    y = np.asarray(x, dtype=np.float64) % 1.0
    acc = np.zeros_like(y)
    w = 1.0
    for _ in range(n_terms):
        acc += w * np.minimum(y, 1 - y)
        y = (2 * y) % 1.0  # exact in binary
        w *= 0.5
    return float(acc) if acc.ndim == 0 else acc


def midpoint_grid(resolution: int) -> np.ndarray:
    return (np.arange(resolution) + 0.5) / resolution


def perron_frobenius(u, p: int) -> np.ndarray:
    """(P u)(y) = (1/p) sum_j u((y + j)/p).

    ``u`` holds samples on the R-point midpoint grid; the result holds samples
    on the R/p-point midpoint grid, where every preimage is an input node.
    """
    u = np.asarray(u)
    if p < 2:
        raise InvalidArgument("p must be >= 2")
    R = len(u)
    if R % p:
        raise InvalidArgument(f"resolution {R} not divisible by p={p}")
    return u.reshape(p, R // p).mean(axis=0)


# --- Lerch decomposition ----------------------------------------------------------

def lerch_coefficients(s) -> tuple[complex, complex]:
    sc = _c(s)
    base = (2 * math.pi) ** sc / (2 * gamma_fn(sc) * cmath.sin(math.pi * sc))
    A = 1j * base * cmath.exp(-1j * math.pi * sc / 2)
    B = -1j * base * cmath.exp(1j * math.pi * sc / 2)
    return A, B


def lerch_sides(s, x: float, tol: float = 1e-10) -> tuple[complex, complex]:
    """(L_s(e^{2 pi i x}) by Abel means, A_s zeta(1-s, x) + B_s zeta(1-s, 1-x))."""
    sc = _c(s)
    if not (0 < sc.real < 1):
        raise DomainError("need 0 < Re s < 1")
    if not (0 < x < 1):
        raise DomainError("need 0 < x < 1")
    z = cmath.exp(2j * math.pi * x)
    lhs = polylog(sc, z, tol, mode="abel").value
    A, B = lerch_coefficients(sc)
    rhs = A * hurwitz_zeta(1 - sc, x) + B * hurwitz_zeta(1 - sc, 1 - x)
    return lhs, rhs


def lerch_decomposition_check(s, x: float, tol: float = 1e-10) -> float:
    lhs, rhs = lerch_sides(s, x, tol)
    return abs(lhs - rhs)


# --- distribution relations -----------------------------------------------------------

def kubert_polylog_sides(s, x: float, m: int, tol: float = 1e-12) -> tuple[complex, complex]:
    """(m^{s-1} sum_{k<m} l((x+k)/m), l(x)) for l(x) = L_s(e^{2 pi i x}), Re s > 1."""
    sc = _c(s)
    if m < 1:
        raise InvalidArgument("m must be >= 1")
    ell = lambda t: polylog(sc, cmath.exp(2j * math.pi * t), tol).value
    lhs = m ** (sc - 1) * sum(ell((x + k) / m) for k in range(m))
    return lhs, ell(x)


def kubert_logsin_sides(n: int, x: float) -> tuple[float, float]:
    """(sum_{k<n} log|2 sin pi(x + k/n)|, log|2 sin(pi n x)|)."""
    if n < 1:
        raise InvalidArgument("n must be >= 1")
    return float(np.sum(log_two_sin(x + np.arange(n) / n))), log_two_sin(n * x)


def kubert_hurwitz_sides(s, x: float, m: int) -> tuple[complex, complex]:
    """(sum_{k<m} zeta(s, (x+k)/m), m^s zeta(s, x))."""
    sc = _c(s)
    if m < 1:
        raise InvalidArgument("m must be >= 1")
    lhs = sum(hurwitz_zeta(sc, (x + k) / m) for k in range(m))
    return lhs, m**sc * hurwitz_zeta(sc, x)
