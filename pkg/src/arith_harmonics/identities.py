"""Executable checks of arithmetic identities.

Each check computes both sides independently and returns an
:class:`IdentityReport`.  Sums that only converge conditionally (the s = 1
cases) never get a plain ``pass``; they are reported as ``heuristic-pass`` or
``heuristic-fail`` together with the truncation level.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from . import analytic, arith
from .analytic import ComplexParam, _c
from .errors import DomainError, InvalidArgument
from .series import TruncatedSeries

PASS, FAIL, HPASS, HFAIL = "pass", "fail", "heuristic-pass", "heuristic-fail"


# --- reports ---------------------------------------------------------------------

def _scalar_json(v):
    if isinstance(v, Fraction):
        return {"exact": f"{v.numerator}/{v.denominator}", "approx": float(v)}
    if isinstance(v, (int, np.integer)):
        return {"exact": f"{int(v)}/1", "approx": float(v)}
    z = complex(v)
    return {"re": z.real, "im": z.imag}


def _param_json(v):
    if isinstance(v, ComplexParam):
        return str(v)
    if isinstance(v, complex):
        return str(ComplexParam.of(v))
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, (np.floating,)):
        return float(v)
    if isinstance(v, (list, tuple)):
        return [_param_json(x) for x in v]
    return v


@dataclass
class IdentityReport:
    name: str
    lhs: object
    rhs: object
    abs_error: float
    parameters: dict = field(default_factory=dict)
    verdict: str = PASS
    n_terms: int | None = None

    @property
    def passed(self) -> bool:
        return self.verdict in (PASS, HPASS)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "params": {k: _param_json(v) for k, v in self.parameters.items()},
            "lhs": _scalar_json(self.lhs),
            "rhs": _scalar_json(self.rhs),
            "abs_error": float(self.abs_error),
            "verdict": self.verdict,
            "n_terms": self.n_terms,
        }


def _float_report(name, lhs, rhs, tol, params, n_terms=None, heuristic=False) -> IdentityReport:
    err = abs(complex(lhs) - complex(rhs))
    ok = err <= tol
    verdict = (HPASS if ok else HFAIL) if heuristic else (PASS if ok else FAIL)
    return IdentityReport(name, complex(lhs), complex(rhs), err, {**params, "tol": tol}, verdict, n_terms)


def _exact_report(name, lhs, rhs, params) -> IdentityReport:
    ok = lhs == rhs
    return IdentityReport(name, lhs, rhs, 0.0 if ok else float(abs(Fraction(lhs) - Fraction(rhs))),
                          {**params, "tol": 0}, PASS if ok else FAIL)


# --- shared tables -----------------------------------------------------------------

@lru_cache(maxsize=8)
def _table(kind: str, n: int) -> np.ndarray:
    v = arith.sieve(kind, n).values
    v.flags.writeable = False
    return v


def _powers(n: int, s: complex) -> np.ndarray:
    """k^{-s} for k = 0..n with a zero pad at 0."""
    out = np.zeros(n + 1, dtype=np.complex128)
    out[1:] = np.exp(-s * np.log(np.arange(1, n + 1, dtype=np.float64)))
    return out


def _exact_sum(values: Sequence) -> Fraction:
    """Pairwise exact sum; keeps intermediate denominators small."""
    vals = [Fraction(v) for v in values]
    if not vals:
        return Fraction(0)
    while len(vals) > 1:
        nxt = [vals[i] + vals[i + 1] for i in range(0, len(vals) - 1, 2)]
        if len(vals) % 2:
            nxt.append(vals[-1])
        vals = nxt
    return vals[0]


# --- Franel integrals --------------------------------------------------------------

def franel_sawtooth(r: int, s: int) -> Fraction:
    """Exact int_0^1 {rt}{st} dt for the centred sawtooth {t}.

    On each cell [k/L, (k+1)/L], L = lcm(r, s), both factors are affine, so the
    integrand is a quadratic in the cell.  With t = (k + u)/L, a = L/r and
    P = 2(k mod a) - a the first factor is (P + 2u)/(2a), likewise (Q + 2u)/(2b)
    for the second, and the cell integral is (3PQ + 3P + 3Q + 4) / (12 a b L).
    """
    if r < 1 or s < 1:
        raise InvalidArgument("r, s must be >= 1")
    L = r * s // math.gcd(r, s)
    a, b = L // r, L // s
    k = np.arange(L, dtype=np.int64)
    P = 2 * (k % a) - a
    Q = 2 * (k % b) - b
    total = int(np.sum(3 * P * Q + 3 * P + 3 * Q + 4))
    return Fraction(total, 12 * a * b * L)


def franel_closed_form(r: int, s: int) -> Fraction:
    return Fraction(math.gcd(r, s) ** 2, 12 * r * s)


@lru_cache(maxsize=16)
def _tanh_sinh(n: int, T: float = 6.0):
    """Nodes as (side, relative offset from that endpoint, weight) on [-1, 1].

    ``side`` is -1 for offsets from the left end, +1 for the right end.  The
    offsets are computed in complementary form so nodes near a singular
    endpoint keep full relative accuracy.
    """
    if n % 2 == 0:
        n += 1
    h = 2 * T / (n - 1)
    t = np.linspace(-T, T, n)
    u = (np.pi / 2) * np.sinh(np.abs(t))
    e = np.exp(-2 * u)
    offset = 2 * e / (1 + e)  # 1 - tanh(u), distance to the nearer end on [-1, 1]
    w = h * (np.pi / 2) * np.cosh(t) * 4 * e / (1 + e) ** 2
    side = np.where(t < 0, -1, 1)
    keep = offset > 0
    return side[keep], offset[keep], w[keep]


def _breakpoints(*mults: int) -> list[Fraction]:
    pts = {Fraction(j, m) for m in mults for j in range(m + 1)}
    return sorted(pts)


def _piecewise_nodes(breaks: list[Fraction], n_per: int):
    """Yield (anchor, sign, delta, weight) for tanh-sinh on every piece.

    The node is anchor + sign * delta with anchor an exact breakpoint.
    """
    side, off, w = _tanh_sinh(n_per)
    for lo, hi in zip(breaks[:-1], breaks[1:]):
        half = float(hi - lo) / 2
        left = side < 0
        yield lo, 1, off[left] * half, w[left] * half
        yield hi, -1, off[~left] * half, w[~left] * half


def _frac_of(m: int, anchor: Fraction) -> float:
    """(m * anchor) mod 1, exactly, as a float."""
    v = m * anchor
    return float(v - math.floor(v))


def _log2sin_at(m: int, anchor: Fraction, sign: int, delta: np.ndarray) -> np.ndarray:
    y0 = _frac_of(m, anchor)
    if y0 == 0:
        arg = np.pi * m * delta  # sin is odd; |.| removes the sign
    else:
        arg = np.pi * (y0 + sign * m * delta)
    return np.log(2 * np.abs(np.sin(arg)))


def franel_logsin(r: int, s: int, quad_points: int = 100_000, tol: float = 1e-6) -> IdentityReport:
    """int_0^1 log|2 sin(pi r t)| log|2 sin(pi s t)| dt against (pi^2/12) gcd^2/(rs)."""
    if r < 1 or s < 1:
        raise InvalidArgument("r, s must be >= 1")
    breaks = _breakpoints(r, s)
    n_per = max(65, quad_points // (len(breaks) - 1))
    total = 0.0
    for anchor, sign, delta, w in _piecewise_nodes(breaks, n_per):
        f = _log2sin_at(r, anchor, sign, delta) * _log2sin_at(s, anchor, sign, delta)
        total += float(np.dot(w, f))
    rhs = math.pi**2 / 12 * math.gcd(r, s) ** 2 / (r * s)
    return _float_report("franel-logsin", total, rhs, tol, {"r": r, "s": s, "quad_points": quad_points})


def mikolas_closed_form(a: int, b: int, s) -> complex:
    sc = _c(s)
    g = math.gcd(a, b)
    l = a * b // g
    return 2 * analytic.gamma_fn(sc) ** 2 * analytic.zeta(2 * sc) / (2 * math.pi) ** (2 * sc) * (g / l) ** sc


def _hurwitz_frac(s1: complex, m: int, anchor: Fraction, sign: int, delta: np.ndarray) -> np.ndarray:
    """zeta(s1, frac(m t)) at t = anchor + sign * delta, inside one piece."""
    y0 = _frac_of(m, anchor)
    if sign > 0:
        u = y0 + m * delta
    else:
        u = (y0 if y0 > 0 else 1.0) - m * delta
    return analytic.hurwitz_zeta_array(s1, u)


def mikolas_integral(a: int, b: int, s, quad_points: int = 4000, tol: float = 1e-4) -> IdentityReport:
    """int_0^1 zeta(1-s, frac(ax)) zeta(1-s, frac(bx)) dx against its closed form."""
    sc = _c(s)
    if sc.real <= 0.5:
        raise DomainError("the integral diverges for Re s <= 1/2")
    if a < 1 or b < 1:
        raise InvalidArgument("a, b must be >= 1")
    s1 = 1 - sc
    breaks = _breakpoints(a, b)
    n_per = max(65, quad_points // (len(breaks) - 1))
    total = 0j
    for anchor, sign, delta, w in _piecewise_nodes(breaks, n_per):
        f = _hurwitz_frac(s1, a, anchor, sign, delta) * _hurwitz_frac(s1, b, anchor, sign, delta)
        total += complex(np.dot(w, f))
    rhs = mikolas_closed_form(a, b, sc)
    return _float_report("mikolas", total, rhs, tol, {"a": a, "b": b, "s": sc, "quad_points": quad_points})


# --- Ramanujan expansions -------------------------------------------------------------

def ramanujan_point_rhs(k: int, s) -> complex:
    """zeta(s) sum_{d|k} d^{1-s} mu(k/d); at s = 1 the limit -Lambda(k)."""
    sc = _c(s)
    if sc == 1:
        f = arith.factorize(k)
        return complex(-math.log(next(iter(f))) if len(f) == 1 else 0.0)
    return analytic.zeta(sc) * sum(d ** (1 - sc) * arith.mobius(k // d) for d in arith.divisors(k))


def ramanujan_point_formula(k: int, s, n_terms: int = 10**6, tol: float = 1e-6) -> IdentityReport:
    """sum_m c_k(m) / m^s, summed one full period at a time.

    ``n_terms`` counts periods.  c_k sums to zero over a period when k > 1,
    so the blocked series converges absolutely for Re s > 0.
    """
    if k < 2:
        raise InvalidArgument("k must be >= 2")
    sc = _c(s)
    if sc.real <= 0:
        raise DomainError("need Re s > 0")
    P = int(n_terms)
    period = [arith.ramanujan_sum(k, r) for r in range(1, k + 1)]
    base = np.arange(P, dtype=np.float64) * k
    blocks = np.zeros(P, dtype=np.complex128)
    for r, c in enumerate(period, start=1):
        if c:
            blocks += c * np.exp(-sc * np.log(base + r))
    lhs = complex(np.sum(blocks[::-1]))
    # block j >= 1 is bounded by |s| (sum_r r |c(r)|) (jk)^{-sigma-1}
    sigma = sc.real
    weight = sum(r * abs(c) for r, c in enumerate(period, start=1))
    tail = abs(sc) * weight * k ** (-sigma - 1) * (P - 1) ** (-sigma) / sigma if P > 1 else math.inf
    rhs = ramanujan_point_rhs(k, sc)
    heuristic = sc == 1
    rep = _float_report("ramanujan-point", lhs, rhs, tol, {"k": k, "s": sc, "periods": P, "tail_bound": tail},
                        n_terms=P * k, heuristic=heuristic)
    return rep


def ramanujan_dual_formula(m: int, s, n_terms: int = 10**6, tol: float = 1e-6) -> IdentityReport:
    """sum_k c_k(m) / k^s against sigma_{1-s}(m) / zeta(s)."""
    if m < 1:
        raise InvalidArgument("m must be >= 1")
    sc = _c(s)
    if sc.real < 1:
        raise DomainError("need Re s >= 1")
    c = arith.ramanujan_column(m, n_terms).astype(np.float64)
    lhs = complex(np.sum((c * _powers(n_terms, sc))[::-1]))
    heuristic = sc == 1
    if heuristic:
        rhs = 0j
        tol = max(tol, 1e-2)
    else:
        rhs = sum(d ** (1 - sc) for d in arith.divisors(m)) / analytic.zeta(sc)
    tail = (arith.sigma_table(1, m).values[m] * n_terms ** (1 - sc.real) / (sc.real - 1)
            if sc.real > 1 else math.inf)
    return _float_report("ramanujan-dual", lhs, rhs, tol, {"m": m, "s": sc, "tail_bound": float(tail)},
                         n_terms=n_terms, heuristic=heuristic)


def _as_values(g, n: int) -> np.ndarray:
    """Values g(1..n) in a padded array from a table, sequence or vectorized callable."""
    if isinstance(g, arith.ArithTable):
        if g.n_max < n:
            raise InvalidArgument(f"table too short: need {n}, have {g.n_max}")
        return g.values[: n + 1].astype(np.complex128)
    if callable(g):
        out = np.zeros(n + 1, dtype=np.complex128)
        out[1:] = g(np.arange(1, n + 1))
        return out
    vals = np.asarray(g)
    if len(vals) < n:
        raise InvalidArgument(f"need {n} values, have {len(vals)}")
    out = np.zeros(n + 1, dtype=np.complex128)
    out[1:] = vals[:n]
    return out


@dataclass
class DelangeResult:
    coeffs: np.ndarray  # fhat(1..q_max), padded
    reconstructed: np.ndarray
    direct: np.ndarray
    report: IdentityReport
    delange_sums: tuple


def delange_expand(g, q_max: int, m_max: int, n_check: int = 20, tol: float = 1e-4) -> DelangeResult:
    """Ramanujan coefficients fhat(q) = sum_m g(qm)/(qm) of f = g * 1, and the
    reconstruction f(n) = sum_q fhat(q) c_q(n) for n <= n_check."""
    G = q_max * m_max
    gv = _as_values(g, max(G, n_check))
    idx = np.arange(len(gv), dtype=np.float64)
    idx[0] = 1.0
    h = gv / idx
    fhat = np.zeros(q_max + 1, dtype=np.complex128)
    for q in range(1, q_max + 1):
        fhat[q] = np.sum(h[q : q * m_max + 1 : q][::-1])
    direct = np.zeros(n_check + 1, dtype=np.complex128)
    recon = np.zeros(n_check + 1, dtype=np.complex128)
    for n in range(1, n_check + 1):
        direct[n] = sum(gv[d] for d in arith.divisors(n))
        cq = arith.ramanujan_column(n, q_max).astype(np.float64)
        recon[n] = np.sum((fhat * cq)[::-1])
    err = float(np.max(np.abs(recon[1:] - direct[1:])))
    # hypothesis: sum 2^omega(n) |g(n)| / n should have settled
    theta = _table("theta", G).astype(np.float64)
    dl = np.cumsum(theta[1:] * np.abs(h[1 : G + 1]))
    s_half, s_full = float(dl[G // 2 - 1]) if G >= 2 else float(dl[-1]), float(dl[-1])
    if s_full > 0 and (s_full - s_half) > 1e-3 * s_full:
        warnings.warn("Delange series has not settled; g may decay too slowly", RuntimeWarning)
    rep = IdentityReport("delange", complex(recon[n_check]), complex(direct[n_check]), err,
                         {"q_max": q_max, "m_max": m_max, "n_check": n_check, "tol": tol},
                         PASS if err <= tol else FAIL, G)
    return DelangeResult(fhat, recon, direct, rep, (s_half, s_full))


def lucht_transform(g, k: int, n_terms: int) -> complex:
    """gamma(k) = k sum_{n <= N} mu(n) g(kn)."""
    gv = _as_values(g, k * n_terms)
    mu = _table("mu", n_terms).astype(np.float64)
    return complex(k * np.sum((mu[1:] * gv[k : k * n_terms + 1 : k])[::-1]))


def lucht_hat(g, l: int, n_terms: int) -> complex:
    """ghat(l) = sum_{n <= N} c_n(l) g(n)."""
    gv = _as_values(g, n_terms)
    c = arith.ramanujan_column(l, n_terms).astype(np.float64)
    return complex(np.sum((c * gv)[::-1]))


def lucht_check(g, l: int, n_terms: int = 2000, tol: float = 1e-8) -> IdentityReport:
    """(1 * gamma)(l) against ghat(l)."""
    lhs = sum(lucht_transform(g, d, n_terms) for d in arith.divisors(l))
    rhs = lucht_hat(g, l, n_terms * l)
    return _float_report("lucht", lhs, rhs, tol, {"l": l}, n_terms)


def polylog_weight(z, s) -> Callable:
    """g_{z,s}(n) = z^n / n^s, vectorized."""
    z, sc = complex(z), _c(s)

    def g(n):
        n = np.asarray(n, dtype=np.float64)
        return np.exp(n * np.log(z) - sc * np.log(n)) if z != 0 else np.zeros(n.shape)
    return g


# --- subseries, Besicovitch, Liouville ----------------------------------------------------

def phi_s(q: int, s):
    """q^s prod_{p | q} (1 - p^{-s}); exact for integer s."""
    if isinstance(s, int):
        out = Fraction(q**s)
        for p in arith.factorize(q):
            out *= 1 - Fraction(1, p**s)
        return out
    sc = _c(s)
    out = q**sc
    for p in arith.factorize(q):
        out *= 1 - p ** (-sc)
    return out


def phi_s_divisor_sum(q: int, s):
    """sum_{d | q} d^s mu(q/d)."""
    if isinstance(s, int):
        return sum(Fraction(d) ** s * arith.mobius(q // d) for d in arith.divisors(q))
    sc = _c(s)
    return sum(d**sc * arith.mobius(q // d) for d in arith.divisors(q))


def mu_subseries(q: int, s, n_terms: int = 200_000, tol: float = 1e-6) -> IdentityReport:
    """sum_n mu(qn)/n^s against mu(q) q^s / (Phi_s(q) zeta(s))."""
    sc = _c(s)
    if sc.real <= 1:
        raise DomainError("need Re s > 1")
    mu = _table("mu", q * n_terms)
    sub = mu[q : q * n_terms + 1 : q].astype(np.float64)
    lhs = complex(np.sum((sub * _powers(n_terms, sc)[1:])[::-1]))
    ps = phi_s(q, s if isinstance(s, int) else sc)
    rhs = arith.mobius(q) * q**sc / (complex(ps) * analytic.zeta(sc))
    rep = _float_report("mu-subseries", lhs, rhs, tol,
                        {"q": q, "s": sc, "tail_bound": n_terms ** (1 - sc.real) / (sc.real - 1)}, n_terms)
    ds = phi_s_divisor_sum(q, s if isinstance(s, int) else sc)
    rep.parameters["phi_s_consistent"] = bool(ds == ps) if isinstance(s, int) else bool(
        abs(complex(ds) - complex(ps)) <= 1e-12 * abs(complex(ps)))
    if not rep.parameters["phi_s_consistent"]:
        rep.verdict = FAIL
    return rep


def psi_n(n: int, s) -> complex:
    sc = _c(s)
    return sum(d**sc * abs(arith.mobius(n // d)) for d in arith.divisors(n))


def musq_coprime_series(n: int, s, n_terms: int = 10**6, tol: float = 1e-6) -> IdentityReport:
    """sum_{(m,n)=1} |mu(m)|/m^s against n^s zeta(s) / (psi_n(s) zeta(2s))."""
    sc = _c(s)
    if sc.real <= 1:
        raise DomainError("need Re s > 1")
    mu = _table("mu", n_terms)
    m = np.arange(1, n_terms + 1)
    mask = (np.gcd(m, n) == 1) & (mu[1:] != 0)
    lhs = complex(np.sum((mask * _powers(n_terms, sc)[1:])[::-1]))
    rhs = n**sc * analytic.zeta(sc) / (psi_n(n, sc) * analytic.zeta(2 * sc))
    return _float_report("musq-coprime", lhs, rhs, tol,
                         {"n": n, "s": sc, "tail_bound": n_terms ** (1 - sc.real) / (sc.real - 1)}, n_terms)


def root_values(coeffs: np.ndarray, k: int) -> np.ndarray:
    """f_N(e^{2 pi i h/k}) for h = 1..k, with phases indexed exactly by hn mod k."""
    N = len(coeffs) - 1
    r = np.arange(N + 1) % k
    cr = np.asarray(coeffs[1:])
    buckets = (np.bincount(r[1:], weights=cr.real, minlength=k)
               + 1j * np.bincount(r[1:], weights=cr.imag, minlength=k))
    h = np.arange(1, k + 1)
    idx = np.outer(h, np.arange(k)) % k
    roots = np.exp(2j * np.pi * np.arange(k) / k)
    return (roots[idx] * buckets[None, :]).sum(axis=1)


def besicovitch_closed_form(k: int, s, kind: str = "mu") -> complex:
    sc = _c(s)
    if kind == "mu":
        if sc == 1:
            return 0j
        return arith.mobius(k) * k / (complex(phi_s(k, sc)) * analytic.zeta(sc))
    if kind == "lambda":
        if sc == 1:
            return 0j
        lam = (-1) ** sum(arith.factorize(k).values())
        return lam * k ** (1 - sc) * analytic.zeta(2 * sc) / analytic.zeta(sc)
    raise InvalidArgument(f"unknown kind {kind!r}")


def besicovitch_sum(k: int, s, n_terms: int = 10**6, kind: str = "mu", tol: float | None = None) -> IdentityReport:
    """sum_{h=1}^k M_s(e^{2 pi i h/k}) (or N_s for kind='lambda') against its closed form."""
    sc = _c(s)
    if k < 1:
        raise InvalidArgument("k must be >= 1")
    if sc.real < 1:
        raise DomainError("need Re s >= 1")
    table = _table(kind if kind in ("mu", "lambda") else "mu", n_terms)
    if kind not in ("mu", "lambda"):
        raise InvalidArgument(f"unknown kind {kind!r}")
    coeffs = table.astype(np.float64) * _powers(n_terms, sc)
    vals = root_values(coeffs, k)
    lhs = complex(np.sum(vals))
    rhs = besicovitch_closed_form(k, sc, kind)
    heuristic = sc == 1
    if tol is None:
        tol = 1e-2 if heuristic else 1e-6
    return _float_report("besicovitch", lhs, rhs, tol, {"k": k, "s": sc, "kind": kind}, n_terms, heuristic)


def liouville_alternating(s, n_terms: int = 10**6, tol: float = 1e-6) -> IdentityReport:
    """sum (-1)^{n+1} lambda(n)/n^s against (1 + 2^{1-s}) zeta(2s)/zeta(s)."""
    sc = _c(s)
    if sc.real <= 1:
        raise DomainError("need Re s > 1")
    lam = _table("lambda", n_terms).astype(np.float64)
    sign = np.where(np.arange(n_terms + 1) % 2 == 1, 1.0, -1.0)
    lhs = complex(np.sum((sign * lam * _powers(n_terms, sc))[::-1]))
    rhs = (1 + 2 / 2**sc) * analytic.zeta(2 * sc) / analytic.zeta(sc)
    return _float_report("liouville-alt", lhs, rhs, tol, {"s": sc}, n_terms)


# --- roots of unity, exactly ----------------------------------------------------------------

@lru_cache(maxsize=None)
def cyclotomic(k: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_k, lowest degree first."""
    num = [-1] + [0] * (k - 1) + [1]  # x^k - 1
    for d in arith.divisors(k):
        if d < k:
            num = _poly_divexact(num, list(cyclotomic(d)))
    return tuple(num)


def _poly_divexact(a: list, b: list) -> list:
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1] // b[-1]
        q[i] = c
        for j, bj in enumerate(b):
            a[i + j] -= c * bj
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return q


def _poly_mod_monic(a: list, m: Sequence[int]) -> list:
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j in range(dm + 1):
                a[i - dm + j] -= c * m[j]
    return a[:dm] if dm > 0 else [a[0]]


def root_sum_cyclotomic(buckets: Sequence, k: int) -> list:
    """sum_{h=1}^k sum_r b_r w^{hr} as a reduced element of Q(w), w = e^{2 pi i/k}.

    Returns coefficients of the remainder mod Phi_k (lowest degree first).
    """
    P = [0] * k
    for r, b in enumerate(buckets):
        if b:
            for h in range(1, k + 1):
                P[(h * r) % k] += b
    return _poly_mod_monic(P, cyclotomic(k))


@dataclass(frozen=True)
class RootSum:
    direct: object
    identity: object
    exact: bool

    @property
    def agree(self) -> bool:
        if self.exact:
            return self.direct == self.identity
        return abs(complex(self.direct) - complex(self.identity)) <= 1e-12 * max(1.0, abs(complex(self.identity)))


def truncated_root_sum(f: TruncatedSeries, k: int) -> RootSum:
    """sum_{h=1}^k f_N(e^{2 pi i h/k}) two ways.

    ``direct`` sums the truncated series at every k-th root of unity (exactly
    in the cyclotomic field for exact coefficients); ``identity`` is
    k sum_j a_{jk}.
    """
    if k < 1:
        raise InvalidArgument("k must be >= 1")
    N = f.order
    ident_terms = [f.coeffs[j] for j in range(k, N + 1, k)]
    if f.scalar_kind == "exact":
        buckets = [_exact_sum(f.coeffs[r : N + 1 : k]) if r else _exact_sum(f.coeffs[k : N + 1 : k])
                   for r in range(k)]
        rem = root_sum_cyclotomic(buckets, k)
        if any(rem[1:]):
            direct = complex(sum(complex(c) * np.exp(2j * np.pi * i / k) for i, c in enumerate(rem)))
        else:
            direct = Fraction(rem[0])
        identity = k * _exact_sum(ident_terms)
        return RootSum(direct, identity, True)
    vals = root_values(f.coeffs.astype(np.complex128), k)
    return RootSum(complex(np.sum(vals)), k * complex(np.sum(np.asarray(ident_terms, dtype=np.complex128))), False)


# --- the tail-bound lemma ----------------------------------------------------------------------

def mu_tail_bound_check(D: int, tau: float) -> IdentityReport:
    """|sum_j mu(jD)/j^tau| against e (tau - 1)/zeta(tau), for 1 < tau < 3/2.

    The left side is evaluated in closed form |mu(D)| / (zeta(tau) prod_{p|D}(1 - p^{-tau})).
    The report also records P_D(tau) = prod_{p|D}(1 - p^{-tau})^{-1} against
    e (tau - 1), and against e / (tau - 1), the bound that the chain of
    estimates log P_D <= sum_p p^{-tau} + 1/2 <= 1 - log(tau - 1) actually gives.
    """
    if not (1 < tau < 1.5):
        raise DomainError("need 1 < tau < 3/2")
    if D < 1:
        raise InvalidArgument("D must be >= 1")
    z = analytic.zeta(tau).real
    prod = math.prod(1 - p ** (-tau) for p in arith.factorize(D))
    P = 1 / prod
    lhs = abs(arith.mobius(D)) * P / z
    bound = math.e * (tau - 1) / z
    ok = lhs <= bound and (P <= math.e * (tau - 1) or arith.mobius(D) == 0)
    params = {
        "D": D, "tau": tau, "P_D": P, "P_D_bound": math.e * (tau - 1),
        "P_D_within_stated_bound": P <= math.e * (tau - 1),
        "corrected_bound": math.e / (tau - 1),
        "P_D_within_corrected_bound": P <= math.e / (tau - 1),
        "tol": 0.0,
    }
    return IdentityReport("mu-tail-bound", lhs, bound, max(0.0, lhs - bound), params, PASS if ok else FAIL)


# --- correlation scans --------------------------------------------------------------------------

@dataclass
class ChowlaScan:
    kind: str
    shifts: tuple
    exponents: tuple
    checkpoints: np.ndarray
    normalized: np.ndarray

    @property
    def value(self) -> float:
        return float(self.normalized[-1])

    def trend(self) -> dict:
        M = int(self.checkpoints[-1])
        out = {}
        for frac, label in ((4, "M/4"), (2, "M/2"), (1, "M")):
            i = int(np.searchsorted(self.checkpoints, M // frac))
            out[label] = float(self.normalized[min(i, len(self.normalized) - 1)])
        return out


def chowla_correlation_scan(kind: str, shifts: Sequence[int], exponents: Sequence[int], M: int,
                            n_checkpoints: int = 10) -> ChowlaScan:
    """S(M)/M with S(M) = sum_{m <= M} prod_i f(m + n_i)^{e_i}, f = mu or lambda."""
    if kind not in ("mu", "lambda"):
        raise InvalidArgument(f"unknown kind {kind!r}")
    shifts, exponents = tuple(int(x) for x in shifts), tuple(int(e) for e in exponents)
    if len(shifts) != len(exponents) or not shifts:
        raise InvalidArgument("shifts and exponents must be non-empty and of equal length")
    if len(set(shifts)) != len(shifts) or min(shifts) < 0:
        raise InvalidArgument("shifts must be distinct and nonnegative")
    if any(e not in (1, 2) for e in exponents):
        raise InvalidArgument("exponents must be 1 or 2")
    if all(e == 2 for e in exponents):
        warnings.warn("all exponents equal 2: the correlation has positive density", RuntimeWarning)
    f = _table(kind, M + max(shifts)).astype(np.int64)
    prod = np.ones(M, dtype=np.int64)
    for n_i, e in zip(shifts, exponents):
        prod *= f[1 + n_i : M + 1 + n_i] ** e
    S = np.cumsum(prod)
    cps = np.unique(np.array([max(1, M >> j) for j in range(n_checkpoints - 1, -1, -1)] + [M // 4, M // 2, M]))
    return ChowlaScan(kind, shifts, exponents, cps, S[cps - 1] / cps)
