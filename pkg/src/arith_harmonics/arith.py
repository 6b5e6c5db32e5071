"""Sieved arithmetic functions and the Dirichlet / unitary convolution algebra.

Every table is 1-based: ``table.values[n]`` holds f(n) and ``values[0]`` is a
zero pad, so index arithmetic reads like the number theory.  Integer-valued
kinds are stored as ``int64`` (or Python ints in an object array when they may
overflow), rationals as :class:`fractions.Fraction` objects, and everything
irrational as ``float64`` / ``complex128``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from numbers import Integral, Rational
from typing import Callable, Sequence

import numpy as np

from .errors import InvalidArgument, PreconditionViolation

KINDS = (
    "mu", "lambda", "phi", "jordan", "sigma", "mangoldt", "theta",
    "n_simple", "omega", "mu_abs",
)
MULTIPLICATIVE = {"mu", "lambda", "phi", "jordan", "sigma", "theta", "mu_abs",
                  "ones", "unit", "power", "mu_alpha", "ramanujan_q"}

_INT64_SAFE = 2**62


@dataclass(frozen=True)
class ArithTable:
    """Values f(1..n_max) of one arithmetic function."""

    kind: str
    values: np.ndarray
    multiplicative: bool = False
    params: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.values.ndim != 1 or len(self.values) < 2:
            raise InvalidArgument("table needs at least the value at n=1")
        self.values.flags.writeable = False

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    @property
    def exact(self) -> bool:
        return self.values.dtype.kind in "iuO"

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return self.n_max

    def tolist(self) -> list:
        """Values f(1), ..., f(n_max) as plain Python scalars."""
        return self.values[1:].tolist()

    def equals(self, other: "ArithTable") -> bool:
        """Exact entrywise equality (n_max must match)."""
        if self.n_max != other.n_max:
            return False
        return all(a == b for a, b in zip(self.tolist(), other.tolist()))


@dataclass(frozen=True)
class RamanujanTable:
    """c_q(1..n_max) for a fixed modulus q."""

    q: int
    values: np.ndarray

    def __post_init__(self):
        self.values.flags.writeable = False

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n):
        return self.values[n]


def from_values(values: Sequence, kind: str = "custom", multiplicative: bool = False) -> ArithTable:
    """Wrap f(1..N) given as a sequence into a table."""
    seq = list(values)
    if not seq:
        raise InvalidArgument("empty value sequence")
    arr = _pack([0] + seq)
    return ArithTable(kind, arr, multiplicative)


def _pack(seq) -> np.ndarray:
    """Best dtype for a list of scalars; exact scalars stay exact."""
    if all(isinstance(v, (Integral, np.integer)) for v in seq):
        ints = [int(v) for v in seq]
        if max(abs(v) for v in ints) < _INT64_SAFE:
            return np.array(ints, dtype=np.int64)
        return np.array(ints, dtype=object)
    if all(isinstance(v, (Rational, np.integer)) for v in seq):
        out = np.empty(len(seq), dtype=object)
        out[:] = [Fraction(v) for v in seq]
        return out
    if any(isinstance(v, complex) or np.iscomplexobj(v) for v in seq):
        return np.array([complex(v) for v in seq], dtype=np.complex128)
    return np.array([float(v) for v in seq], dtype=np.float64)


def _check_n(n_max) -> int:
    if not isinstance(n_max, (Integral, np.integer)) or n_max < 1:
        raise InvalidArgument(f"n_max must be a positive integer, got {n_max!r}")
    return int(n_max)


# --- factorization sieve -----------------------------------------------------

@lru_cache(maxsize=4)
def factor_arrays(n_max: int):
    """Smallest-prime-factor sieve with the prime-power split of every n.

    Returns ``(spf, exp, ppow, rest)`` with ``n = ppow[n] * rest[n]``,
    ``ppow[n] = spf[n] ** exp[n]`` and ``gcd(spf[n], rest[n]) = 1``.
    Entries 0 and 1 are set to ``spf=1, exp=0, ppow=1, rest=1``.
    """
    n_max = _check_n(n_max)
    dt = np.int32 if n_max < 2**31 - 1 else np.int64
    idx = np.arange(n_max + 1, dtype=dt)
    spf = np.zeros(n_max + 1, dtype=dt)
    for p in range(2, math.isqrt(n_max) + 1):
        if spf[p] == 0:
            seg = spf[p * p :: p]
            seg[seg == 0] = p
    prime = (spf == 0) & (idx >= 2)
    spf[prime] = idx[prime]
    spf[:2] = 1
    exp = np.zeros(n_max + 1, dtype=np.int8)
    exp[2:] = 1
    ppow = spf.copy()
    rest = np.ones(n_max + 1, dtype=dt)
    rest[2:] = idx[2:] // spf[2:]
    live = np.nonzero(rest % spf == 0)[0]
    live = live[live >= 2]
    while live.size:
        p = spf[live]
        rest[live] //= p
        ppow[live] *= p
        exp[live] += 1
        live = live[rest[live] % p == 0]
    for a in (spf, exp, ppow, rest):
        a.flags.writeable = False
    return spf, exp, ppow, rest


def _multiplicative(n_max: int, fpp: Callable, dtype) -> np.ndarray:
    """Evaluate a multiplicative function from its prime-power rule.

    ``fpp(p, e)`` receives integer arrays of primes and exponents and returns
    the values f(p^e) as an array of the requested dtype.
    """
    spf, exp, _, rest = factor_arrays(n_max)
    out = np.zeros(n_max + 1, dtype=dtype)
    out[1] = 1
    if n_max >= 2:
        out[2:] = fpp(spf[2:].astype(np.int64), exp[2:].astype(np.int64))
        active = np.nonzero(rest > 1)[0]
        cur = rest[active]
        while active.size:
            out[active] = out[active] * fpp(spf[cur].astype(np.int64), exp[cur].astype(np.int64))
            cur = rest[cur]
            keep = cur > 1
            active, cur = active[keep], cur[keep]
    return out


def _additive(n_max: int, fpp: Callable) -> np.ndarray:
    """Evaluate an additive function (f(mn) = f(m) + f(n) for coprime m, n)."""
    spf, exp, _, rest = factor_arrays(n_max)
    out = np.zeros(n_max + 1, dtype=np.int64)
    if n_max >= 2:
        out[2:] = fpp(spf[2:].astype(np.int64), exp[2:].astype(np.int64))
        active = np.nonzero(rest > 1)[0]
        cur = rest[active]
        while active.size:
            out[active] += fpp(spf[cur].astype(np.int64), exp[cur].astype(np.int64))
            cur = rest[cur]
            keep = cur > 1
            active, cur = active[keep], cur[keep]
    return out


def _obj_pow(base: np.ndarray, e) -> np.ndarray:
    b = base.astype(object)
    return b ** e


def sieve(kind: str, n_max: int, *, k: int | None = None, a=None) -> ArithTable:
    """Tabulate a classical arithmetic function on 1..n_max.

    ``kind`` is one of mu, lambda, phi, jordan (needs ``k``), sigma (needs
    ``a``), mangoldt, theta (2^omega), n_simple (count of primes dividing n
    exactly once), omega and mu_abs.  Mangoldt values are floats; sigma with a
    non-integer ``a`` is complex; all others are exact integers.
    """
    n_max = _check_n(n_max)
    if kind == "mu":
        vals = _multiplicative(n_max, lambda p, e: np.where(e == 1, -1, 0), np.int64)
    elif kind == "mu_abs":
        vals = _multiplicative(n_max, lambda p, e: np.where(e == 1, 1, 0), np.int64)
    elif kind == "lambda":
        vals = _multiplicative(n_max, lambda p, e: np.where(e % 2 == 0, 1, -1), np.int64)
    elif kind == "theta":
        vals = _multiplicative(n_max, lambda p, e: np.full(p.shape, 2), np.int64)
    elif kind == "omega":
        vals = _additive(n_max, lambda p, e: np.ones(p.shape, dtype=np.int64))
    elif kind == "n_simple":
        vals = _additive(n_max, lambda p, e: (e == 1).astype(np.int64))
    elif kind == "phi":
        vals = _multiplicative(n_max, lambda p, e: p ** (e - 1) * (p - 1), np.int64)
    elif kind == "jordan":
        if k is None or int(k) < 1:
            raise InvalidArgument("jordan needs an integer k >= 1")
        k = int(k)
        if float(n_max) ** k < _INT64_SAFE:
            vals = _multiplicative(n_max, lambda p, e: p ** (e * k) - p ** ((e - 1) * k), np.int64)
        else:
            vals = _multiplicative(
                n_max, lambda p, e: _obj_pow(p, e * k) - _obj_pow(p, (e - 1) * k), object)
    elif kind == "sigma":
        if a is None:
            raise InvalidArgument("sigma needs an exponent a")
        return sigma_table(a, n_max)
    elif kind == "mangoldt":
        _, _, ppow, rest = factor_arrays(n_max)
        spf = factor_arrays(n_max)[0]
        vals = np.zeros(n_max + 1)
        pp = (rest == 1) & (np.arange(n_max + 1) >= 2)
        vals[pp] = np.log(spf[pp].astype(np.float64))
    else:
        raise InvalidArgument(f"unknown kind {kind!r}; expected one of {KINDS}")
    label = f"jordan({k})" if kind == "jordan" else kind
    return ArithTable(label, vals, kind in MULTIPLICATIVE, {"k": k} if k is not None else {})


def sigma_table(a, n_max: int) -> ArithTable:
    """sigma_a(n) = sum of d^a over divisors d of n.

    Exact for a nonnegative integer ``a``; otherwise complex floats by direct
    divisor enumeration.
    """
    n_max = _check_n(n_max)
    if isinstance(a, (Integral, np.integer)) and a >= 0:
        a = int(a)
        if float(n_max) ** (a + 1) < _INT64_SAFE:
            vals = np.zeros(n_max + 1, dtype=np.int64)
            pw = np.arange(n_max + 1, dtype=np.int64) ** a
        else:
            vals = np.zeros(n_max + 1, dtype=object)
            pw = _obj_pow(np.arange(n_max + 1), a)
    else:
        a = complex(a)
        vals = np.zeros(n_max + 1, dtype=np.complex128)
        pw = np.zeros(n_max + 1, dtype=np.complex128)
        pw[1:] = np.exp(a * np.log(np.arange(1, n_max + 1, dtype=np.float64)))
    for d in range(1, n_max + 1):
        vals[d::d] += pw[d]
    vals[0] = 0
    return ArithTable(f"sigma({a})", vals, True, {"a": a})


def ones(n_max: int) -> ArithTable:
    n_max = _check_n(n_max)
    vals = np.ones(n_max + 1, dtype=np.int64)
    vals[0] = 0
    return ArithTable("ones", vals, True)


def unit(n_max: int) -> ArithTable:
    """The convolution identity e: e(1) = 1, e(n) = 0 for n > 1."""
    n_max = _check_n(n_max)
    vals = np.zeros(n_max + 1, dtype=np.int64)
    vals[1] = 1
    return ArithTable("unit", vals, True)


def power(n_max: int, k: int) -> ArithTable:
    """n -> n^k for a nonnegative integer k."""
    n_max = _check_n(n_max)
    if float(n_max) ** k < _INT64_SAFE:
        vals = np.arange(n_max + 1, dtype=np.int64) ** k
    else:
        vals = _obj_pow(np.arange(n_max + 1), k)
    vals[0] = 0
    return ArithTable(f"power({k})", vals, True)


# --- convolutions --------------------------------------------------------------

def _common(f: np.ndarray, g: np.ndarray, bound_terms: int):
    """Bring two value arrays to a shared dtype safe for convolution."""
    kinds = f.dtype.kind + g.dtype.kind
    if "c" in kinds:
        return f.astype(np.complex128), g.astype(np.complex128)
    if "f" in kinds:
        if "O" in kinds and any(isinstance(v, complex) for v in (f.tolist() + g.tolist())):
            return f.astype(np.complex128), g.astype(np.complex128)
        return f.astype(np.float64), g.astype(np.float64)
    if "O" in kinds:
        return f.astype(object), g.astype(object)
    fm = int(np.max(np.abs(f))) if f.size else 0
    gm = int(np.max(np.abs(g))) if g.size else 0
    if fm * gm * bound_terms < _INT64_SAFE:
        return f.astype(np.int64), g.astype(np.int64)
    return f.astype(object), g.astype(object)


def dirichlet_array(f: np.ndarray, g: np.ndarray) -> np.ndarray:
    """(f * g)(n) = sum_{d | n} f(d) g(n/d) on padded 1-based arrays."""
    if len(f) != len(g):
        raise InvalidArgument(f"length mismatch: {len(f) - 1} vs {len(g) - 1}")
    n = len(f) - 1
    f, g = _common(f, g, n)
    out = np.zeros(n + 1, dtype=f.dtype)
    if f.dtype == object:
        out[:] = 0
    for d in range(1, n + 1):
        fd = f[d]
        if fd == 0:
            continue
        m = n // d
        out[d::d] += fd * g[1 : m + 1]
    return out


def unitary_array(f: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Unitary convolution: sum over n = pq with gcd(p, q) = 1 of f(p) g(q)."""
    if len(f) != len(g):
        raise InvalidArgument(f"length mismatch: {len(f) - 1} vs {len(g) - 1}")
    n = len(f) - 1
    f, g = _common(f, g, n)
    out = np.zeros(n + 1, dtype=f.dtype)
    if f.dtype == object:
        out[:] = 0
    for d in range(1, n + 1):
        fd = f[d]
        if fd == 0:
            continue
        m = n // d
        q = np.arange(1, m + 1)
        ok = np.gcd(q, d) == 1
        contrib = np.zeros(m, dtype=f.dtype)
        if f.dtype == object:
            contrib[:] = 0
        contrib[ok] = fd * g[1 : m + 1][ok]
        out[d::d] += contrib
    return out


def _same_size(f: ArithTable, g: ArithTable):
    if f.n_max != g.n_max:
        raise InvalidArgument(f"n_max mismatch: {f.n_max} vs {g.n_max}")


def dirichlet_convolve(f: ArithTable, g: ArithTable) -> ArithTable:
    _same_size(f, g)
    return ArithTable(f"({f.kind}*{g.kind})", dirichlet_array(f.values, g.values),
                      f.multiplicative and g.multiplicative)


def unitary_convolve(f: ArithTable, g: ArithTable) -> ArithTable:
    _same_size(f, g)
    return ArithTable(f"({f.kind}u{g.kind})", unitary_array(f.values, g.values),
                      f.multiplicative and g.multiplicative)


def mobius_invert(f: ArithTable) -> ArithTable:
    """g(n) = sum_{d | n} f(d) mu(n/d), the inverse of summatory convolution with 1."""
    mu = sieve("mu", f.n_max)
    return ArithTable(f"inv({f.kind})", dirichlet_array(f.values, mu.values), f.multiplicative)


def generalized_mobius(alpha, n_max: int) -> ArithTable:
    """mu_alpha: multiplicative with mu_alpha(p^k) = (-1)^k binom(alpha, k).

    Integer and rational ``alpha`` give exact tables; anything else is complex.
    """
    n_max = _check_n(n_max)
    kmax = max(1, n_max.bit_length())
    exact = isinstance(alpha, (Rational, np.integer))
    if exact:
        alpha = Fraction(alpha)
        coeffs = [Fraction(1)]
        for j in range(1, kmax + 1):
            coeffs.append(-coeffs[-1] * (alpha - j + 1) / j)
        if all(c.denominator == 1 for c in coeffs):
            coeffs = [int(c) for c in coeffs]
    else:
        alpha = complex(alpha)
        coeffs = [1 + 0j]
        for j in range(1, kmax + 1):
            coeffs.append(-coeffs[-1] * (alpha - j + 1) / j)
    lut = np.array(coeffs, dtype=object if exact else np.complex128)
    dtype = object if exact else np.complex128
    vals = _multiplicative(n_max, lambda p, e: lut[e], dtype)
    vals[0] = 0
    if exact and all(isinstance(v, int) for v in vals.tolist()):
        vals = _pack(vals.tolist())
    return ArithTable(f"mu_alpha({alpha})", vals, True, {"alpha": alpha})


def divisor_count_k(n_max: int, k: int) -> ArithTable:
    """d(n, k): ordered factorizations of n into k factors."""
    if k < 1:
        raise InvalidArgument("k must be >= 1")
    t = ones(n_max)
    one = ones(n_max)
    for _ in range(k - 1):
        t = dirichlet_convolve(t, one)
    return ArithTable(f"d(.,{k})", t.values, True, {"k": k})


def dprime_count_k(n_max: int, k: int) -> ArithTable:
    """d'(n, k): Dirichlet coefficients of zeta(s)^(-k)."""
    if k < 2:
        raise InvalidArgument("k must be >= 2")
    mu = sieve("mu", n_max)
    t = dirichlet_convolve(mu, mu)
    for _ in range(k - 2):
        t = dirichlet_convolve(t, mu)
    return ArithTable(f"d'(.,{k})", t.values, True, {"k": k})


# --- scalar helpers ----------------------------------------------------------------

def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (fine for n below ~1e12)."""
    if n < 1:
        raise InvalidArgument("factorize needs n >= 1")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    ds = [1]
    for p, e in factorize(n).items():
        ds = [d * p**i for d in ds for i in range(e + 1)]
    return sorted(ds)


def mobius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def totient(n: int) -> int:
    r = n
    for p in factorize(n):
        r -= r // p
    return r


def jordan(n: int, k: int) -> int:
    r = n**k
    for p in factorize(n):
        r -= r // p**k
    return r


def n_simple(n: int) -> int:
    """Number of primes p with p | n and p^2 not dividing n."""
    return sum(1 for e in factorize(n).values() if e == 1)


def ramanujan_sum(q: int, n: int) -> int:
    """c_q(n) via the closed form mu(q/g) phi(q) / phi(q/g), g = gcd(q, n)."""
    if q < 1 or n < 1:
        raise InvalidArgument("ramanujan_sum needs q, n >= 1")
    m = q // math.gcd(q, n)
    return mobius(m) * totient(q) // totient(m)


def ramanujan_sum_brute(q: int, n: int) -> complex:
    """c_q(n) as the raw exponential sum over reduced residues a mod q."""
    return sum(cmath.exp(2j * math.pi * a * n / q) for a in range(1, q + 1)
               if math.gcd(a, q) == 1)


def ramanujan_table(q: int, n_max: int) -> RamanujanTable:
    """c_q(1..n_max); one period is computed and then tiled."""
    n_max = _check_n(n_max)
    period = np.array([ramanujan_sum(q, r) for r in range(1, q + 1)], dtype=np.int64)
    vals = np.zeros(n_max + 1, dtype=np.int64)
    idx = np.arange(1, n_max + 1)
    vals[1:] = period[(idx - 1) % q]
    return RamanujanTable(q, vals)


@lru_cache(maxsize=4)
def _mu_cached(n: int) -> np.ndarray:
    return sieve("mu", n).values


def ramanujan_column(n: int, q_max: int) -> np.ndarray:
    """c_q(n) for q = 1..q_max at fixed n (padded, 1-based).

    Uses c_q(n) = sum_{d | gcd(q, n)} d mu(q/d).
    """
    mu = _mu_cached(max(q_max, 1))
    out = np.zeros(q_max + 1, dtype=np.int64)
    for d in divisors(n):
        if d > q_max:
            break
        m = q_max // d
        out[d::d] += d * mu[1 : m + 1]
    return out


def ramanujan_period_average(r: int, s: int, h: int = 0) -> Fraction:
    """Exact mean of c_r(n) c_s(n + h) over one full period lcm(r, s)."""
    L = r * s // math.gcd(r, s)
    cr = [ramanujan_sum(r, n) for n in range(1, r + 1)]
    cs = [ramanujan_sum(s, n) for n in range(1, s + 1)]
    total = sum(cr[(n - 1) % r] * cs[(n + h - 1) % s] for n in range(1, L + 1))
    return Fraction(total, L)


def romanoff_check(n: int, k: int, f) -> object:
    """sum_{d | n} mu(n/d) f(gcd(d, k)); vanishes whenever k < n.

    ``f`` is a callable or a 1-based indexable (``f[m]`` for m = 1..n).
    """
    if not 1 <= k < n:
        raise PreconditionViolation(f"need 1 <= k < n, got k={k}, n={n}")
    fn = f if callable(f) else (lambda m: f[m])
    return sum(mobius(n // d) * fn(math.gcd(d, k)) for d in divisors(n))
