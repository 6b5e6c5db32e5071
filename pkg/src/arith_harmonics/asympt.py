"""The cosine sum F(x) = sum_j (cos(x/j) - 1), its Taylor expansion in zeta(2k),
the transform sum_n f(z/n^s), and the semigroup T_s on power series."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy import integrate

from . import analytic, series
from .analytic import _c
from .errors import DomainError, InvalidArgument, NumericError, PreconditionViolation
from .identities import IdentityReport, _float_report
from .series import TruncatedSeries


# --- F(x) ------------------------------------------------------------------------------

def _cos_sum_parts(x: float, J: int) -> tuple[float, float, float]:
    """Head over j <= J, the zeta-series tail over j > J, and a bound on what is left."""
    j = np.arange(1, J + 1, dtype=np.float64)
    head = float(np.sum((-2.0 * np.sin(x / (2 * j)) ** 2)[::-1]))
    # sum_{j>J} (cos(x/j) - 1) = sum_k (-1)^k x^{2k}/(2k)! zeta(2k, J + 1)
    tail, k, last = 0.0, 1, math.inf
    while True:
        term = (-1) ** k * x ** (2 * k) / math.factorial(2 * k) * analytic._hurwitz(complex(2 * k), J + 1.0).real
        tail += term
        if abs(term) < 1e-18 * max(1.0, abs(head)) or k > 60:
            last = abs(term)
            break
        k += 1
    return head, tail, last


def cos_sum(x: float, tol: float = 1e-12) -> float:
    """F(x) = sum_{j>=1} (cos(x/j) - 1)."""
    x = float(x)
    if not math.isfinite(x):
        raise InvalidArgument("x must be finite")
    if x == 0:
        return 0.0
    ax = abs(x)
    J = int(max(64, 4 * ax))
    head, tail, last = _cos_sum_parts(ax, J)
    if last > tol:
        raise NumericError(f"cos_sum tail not resolved: {last:.2e}")
    return head + tail


def cos_sum_crude(x: float, J: int) -> tuple[float, float]:
    """Plain truncation at J with the bound x^2/(2J) on the omitted terms."""
    j = np.arange(1, J + 1, dtype=np.float64)
    return float(np.sum(-2.0 * np.sin(x / (2 * j)) ** 2)), x * x / (2 * J)


def cos_sum_taylor(x: float, tol: float = 1e-16) -> tuple[float, float]:
    """sum_k (-1)^k zeta(2k)/(2k)! x^{2k} and a rigorous truncation bound.

    Once x^2 < (2K+3)(2K+4) the terms decrease, and |zeta(2k)| <= zeta(2)
    bounds the rest by a geometric series.
    """
    x = float(x)
    acc, k = 0.0, 1
    z2 = math.pi**2 / 6
    while True:
        acc += (-1) ** k * analytic.zeta(2 * k).real / math.factorial(2 * k) * x ** (2 * k)
        q = x * x / ((2 * k + 3) * (2 * k + 4))
        nxt = z2 * abs(x) ** (2 * k + 2) / math.factorial(2 * k + 2)
        if q < 1 and nxt / (1 - q) < tol:
            return acc, nxt / (1 - q)
        k += 1
        if k > 200:
            raise NumericError("Taylor route did not converge")


def cos_sum_envelope(x: float, J: int | None = None) -> float:
    """sum_j min(2, x^2/(2 j^2)), an upper bound for |F(x)|."""
    x = abs(float(x))
    J = J or int(max(64, 4 * x))
    j = np.arange(1, J + 1, dtype=np.float64)
    head = float(np.sum(np.minimum(2.0, x * x / (2 * j * j))))
    return head + x * x / (2 * J)


# --- transforms -----------------------------------------------------------------------

def _poly_coeffs(f) -> np.ndarray:
    if isinstance(f, TruncatedSeries):
        return f.coeffs.astype(np.complex128)
    a = np.asarray(list(f), dtype=np.complex128)
    return np.concatenate([[0], a])  # a_1..a_K supplied


def _em_tail(a: np.ndarray, sc: complex, z: complex, N: int) -> complex:
    """Euler-Maclaurin estimate of sum_{n >= N} f(z n^{-s}) for polynomial f."""
    tail = 0j
    for k in range(2, len(a)):
        if a[k]:
            tail += a[k] * z**k * analytic._hurwitz(k * sc, float(N), n_shift=0)
    return tail


def chp_transform(f, s, z, tol: float = 1e-8, n_head: int = 2000) -> IdentityReport:
    """sum_n f(z/n^s) against sum_k a_k zeta(ks) z^k, f a polynomial with a_1 = 0.

    ``f`` holds a_1..a_K (or is a TruncatedSeries).  The left side adds an
    explicit head n < n_head to an Euler-Maclaurin remainder of the same sum.
    """
    sc = _c(s)
    if sc.real <= 0.5:
        raise DomainError("need Re s > 1/2")
    a = _poly_coeffs(f)
    if len(a) > 1 and a[1] != 0:
        raise PreconditionViolation("f must start at z^2 (a_1 = 0)")
    z = complex(z)
    n = np.arange(1, n_head, dtype=np.float64)
    w = z * np.exp(-sc * np.log(n))
    vals = np.zeros_like(w)
    for c in a[:0:-1]:
        vals = (vals + c) * w
    lhs = complex(np.sum(vals[::-1])) + _em_tail(a, sc, z, n_head)
    rhs = sum(a[k] * analytic.zeta(k * sc) * z**k for k in range(2, len(a)) if a[k])
    return _float_report("chp", lhs, rhs, tol, {"s": sc, "z": z, "degree": len(a) - 1})


def cos_minus_one_coeffs(K: int) -> list[float]:
    """a_1..a_K of cos(z) - 1."""
    return [0.0 if k % 2 else (-1) ** (k // 2) / math.factorial(k) for k in range(1, K + 1)]


# --- linear term of F ---------------------------------------------------------------------

@dataclass
class AsymptoticFit:
    x_grid: np.ndarray
    values: np.ndarray
    linear_coeff: float
    remainder_exponent: float
    fit_residual: float
    exponent_ci: tuple[float, float] = (math.nan, math.nan)
    extras: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "linear_coeff": self.linear_coeff,
            "abs_linear_coeff": abs(self.linear_coeff),
            "remainder_exponent": self.remainder_exponent,
            "exponent_ci": list(self.exponent_ci),
            "fit_residual": self.fit_residual,
            "n_points": int(len(self.x_grid)),
            "x_min": float(self.x_grid[0]),
            "x_max": float(self.x_grid[-1]),
        }


def lad_line(x: np.ndarray, y: np.ndarray, iters: int = 100) -> tuple[float, float]:
    """Least-absolute-deviation fit y = a + b x by iteratively reweighted least squares."""
    A = np.column_stack([np.ones_like(x), x])
    coef = np.linalg.lstsq(A, y, rcond=None)[0]
    for _ in range(iters):
        r = np.abs(y - A @ coef)
        w = 1.0 / np.maximum(r, 1e-9)
        sw = np.sqrt(w)
        new = np.linalg.lstsq(A * sw[:, None], y * sw, rcond=None)[0]
        if np.allclose(new, coef, rtol=1e-12, atol=1e-14):
            coef = new
            break
        coef = new
    return float(coef[0]), float(coef[1])


def linear_term_and_remainder(x_max: float = 1e5, n_points: int = 120, seed: int = 0,
                              n_boot: int = 200) -> AsymptoticFit:
    """Fit F(x) ~ c1 x + R(x) over the top two decades below x_max.

    c1 is the least-squares constant of F(x)/x over the top decade; the
    remainder exponent is the LAD slope of log|F(x) - c1 x| against log x,
    with a residual-bootstrap 95% interval.
    """
    if x_max < 100:
        raise InvalidArgument("x_max must be >= 100")
    if n_points < 8:
        raise NumericError("need at least 8 grid points")
    xs = np.geomspace(x_max / 100, x_max, n_points)
    F = np.array([cos_sum(x) for x in xs])
    top = xs >= x_max / 10
    c1 = float(np.mean(F[top] / xs[top]))
    R = F - c1 * xs
    keep = np.abs(R) > 0
    lx, ly = np.log(xs[keep]), np.log(np.abs(R[keep]))
    if len(lx) < 4:
        raise NumericError("degenerate remainder fit")
    a, b = lad_line(lx, ly)
    resid = ly - (a + b * lx)
    rng = np.random.default_rng(seed)
    slopes = []
    for _ in range(n_boot):
        yb = a + b * lx + rng.choice(resid, size=len(resid), replace=True)
        slopes.append(lad_line(lx, yb, iters=30)[1])
    lo, hi = np.percentile(slopes, [2.5, 97.5])
    return AsymptoticFit(xs, F, c1, b, float(np.median(np.abs(resid))), (float(lo), float(hi)),
                         {"c1_top_decade_std": float(np.std(F[top] / xs[top]))})


# --- the semigroup T_s -----------------------------------------------------------------------

def t_semigroup_coeff(f: TruncatedSeries, s) -> TruncatedSeries:
    """a_n -> a_n n^{-s}; exact for integer s and exact coefficients."""
    w = series.power_weights(f.order, s if isinstance(s, int) else _c(s))
    if w.dtype == object and f.coeffs.dtype.kind in "iuO":
        c = f.coeffs.astype(object) * w
    else:
        c = f.coeffs.astype(np.complex128) * w.astype(np.complex128)
    c[0] = 0
    return TruncatedSeries(c, f"T_{s}({f.label})")


def _poly_eval(a: np.ndarray, w):
    acc = 0j
    for c in a[:0:-1]:
        acc = (acc + c) * w
    return acc


def _t_integral(g, sc: complex, epsabs: float = 1e-13, epsrel: float = 1e-12) -> complex:
    """(1/Gamma(s)) int_0^inf g(t) t^{s-1} dt with t = u^{1/sigma}.

    The substitution turns t^{s-1} dt into (1/sigma) u^{i tau/sigma} du,
    removing the endpoint power singularity.
    """
    sigma, tau = sc.real, sc.imag
    if sigma <= 0:
        raise DomainError("need Re s > 0")

    def integrand(u, part):
        if u == 0:
            return 0.0 if tau else float(np.real(g(0.0)) if part == 0 else np.imag(g(0.0)))
        t = u ** (1 / sigma)
        v = g(t) * (u ** (1j * tau / sigma) if tau else 1.0)
        return v.real if part == 0 else v.imag

    out = 0j
    for lo, hi in ((0.0, 1.0), (1.0, np.inf)):
        re = integrate.quad(integrand, lo, hi, args=(0,), epsabs=epsabs, epsrel=epsrel, limit=400)
        im = integrate.quad(integrand, lo, hi, args=(1,), epsabs=epsabs, epsrel=epsrel, limit=400)
        if re[1] > 1e-8 or im[1] > 1e-8:
            raise NumericError(f"quadrature error estimate too large ({re[1]:.1e}, {im[1]:.1e})")
        out += re[0] + 1j * im[0]
    return out / (sigma * analytic.gamma_fn(sc))


def t_semigroup_quadrature(f, s, z) -> complex:
    """T_s(f)(z) = (1/Gamma(s)) int_0^inf f(e^{-t} z) t^{s-1} dt for a polynomial f."""
    sc = _c(s)
    z = complex(z)
    if abs(z) >= 1:
        raise DomainError("need |z| < 1")
    a = _poly_coeffs(f)
    if a[0] != 0:
        raise PreconditionViolation("f must vanish at 0")
    return _t_integral(lambda t: _poly_eval(a, math.exp(-t) * z), sc)


def t_semigroup_compose_quadrature(f, s1, s2, z) -> complex:
    """T_{s1}(T_{s2} f)(z) with both operators applied by quadrature."""
    c1, c2 = _c(s1), _c(s2)
    z = complex(z)
    if abs(z) >= 1:
        raise DomainError("need |z| < 1")
    a = _poly_coeffs(f)

    def inner(t):
        w = math.exp(-t) * z
        return _t_integral(lambda u: _poly_eval(a, math.exp(-u) * w), c2, 1e-14, 1e-13)

    return _t_integral(inner, c1)
