"""Truncated power series sum_{n>=1} a_n z^n under the Dirichlet product.

``A (x) B`` has coefficients (a * b)_n, the Dirichlet convolution of the
coefficient sequences; its identity is e(z) = z.  Truncation at order N is
exact for this product: coefficient n only ever involves divisors of n.

Coefficients live in a padded 1-based array (``coeffs[0] == 0``; series in
this module have no constant term).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Integral, Rational

import numpy as np

from . import arith
from .errors import InvalidArgument, NotInvertible


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: np.ndarray
    label: str = ""

    def __post_init__(self):
        if self.coeffs.ndim != 1 or len(self.coeffs) < 2:
            raise InvalidArgument("series needs order >= 1")
        if self.coeffs[0] != 0:
            raise InvalidArgument("constant term must vanish")
        self.coeffs.flags.writeable = False

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def scalar_kind(self) -> str:
        return "exact" if self.coeffs.dtype.kind in "iuO" else "float"

    def __getitem__(self, n):
        return self.coeffs[n]

    def tolist(self) -> list:
        return self.coeffs[1:].tolist()

    def equals(self, other: "TruncatedSeries") -> bool:
        return self.order == other.order and all(
            a == b for a, b in zip(self.tolist(), other.tolist()))

    def allclose(self, other: "TruncatedSeries", atol=1e-12, rtol=1e-12) -> bool:
        return self.order == other.order and np.allclose(
            self.coeffs.astype(np.complex128), other.coeffs.astype(np.complex128),
            atol=atol, rtol=rtol)

    def __call__(self, z) -> complex:
        """Evaluate the polynomial sum_{n<=N} a_n z^n (Horner)."""
        c = self.coeffs.astype(np.complex128)
        acc = 0j
        for a in c[:0:-1]:
            acc = (acc + a) * z
        return acc


def from_coeffs(values, label: str = "") -> TruncatedSeries:
    """Series with a_1..a_N given in order."""
    return TruncatedSeries(arith._pack([0] + list(values)), label)


def from_table(t: arith.ArithTable, label: str | None = None) -> TruncatedSeries:
    return TruncatedSeries(t.values.copy(), label or t.kind)


def identity(order: int) -> TruncatedSeries:
    """e(z) = z."""
    return TruncatedSeries(arith.unit(order).values.copy(), "e")


def _is_exact_exponent(s) -> bool:
    if isinstance(s, (Integral, np.integer)):
        return True
    return isinstance(s, Rational) and Fraction(s).denominator == 1


def power_weights(order: int, s) -> np.ndarray:
    """n^{-s} for n = 1..order (padded).

    Integer ``s`` gives exact values (Fractions or ints); anything else gives
    complex floats computed as exp(-s log n).
    """
    if _is_exact_exponent(s):
        s = int(s)
        out = np.zeros(order + 1, dtype=object)
        if s >= 0:
            out[1:] = [Fraction(1, n**s) for n in range(1, order + 1)]
        else:
            out[1:] = [n ** (-s) for n in range(1, order + 1)]
        return out
    s = complex(s)
    out = np.zeros(order + 1, dtype=np.complex128)
    out[1:] = np.exp(-s * np.log(np.arange(1, order + 1, dtype=np.float64)))
    return out


def _weighted(values: np.ndarray, s, label: str) -> TruncatedSeries:
    w = power_weights(len(values) - 1, s)
    if w.dtype == object and values.dtype.kind in "iuO":
        c = values.astype(object) * w
    else:
        c = values.astype(np.complex128) * w.astype(np.complex128)
    c[0] = 0
    return TruncatedSeries(c, label)


def polylog_coeffs(s, order: int) -> TruncatedSeries:
    """Coefficients 1/n^s of the polylogarithm."""
    return _weighted(arith.ones(order).values, s, f"L_{s}")


def mobius_coeffs(s, order: int) -> TruncatedSeries:
    """Coefficients mu(n)/n^s."""
    return _weighted(arith.sieve("mu", order).values, s, f"M_{s}")


def liouville_coeffs(s, order: int) -> TruncatedSeries:
    """Coefficients lambda(n)/n^s."""
    return _weighted(arith.sieve("lambda", order).values, s, f"N_{s}")


def ramanujan_coeffs(s, l: int, order: int) -> TruncatedSeries:
    """Coefficients c_n(l)/n^s."""
    return _weighted(arith.ramanujan_column(l, order), s, f"C_{s},{l}")


def estermann_coeffs(s, a, order: int) -> TruncatedSeries:
    """Coefficients sigma_a(n)/n^s."""
    return _weighted(arith.sigma_table(a, order).values, s, f"E_{s},{a}")


def _same_order(A: TruncatedSeries, B: TruncatedSeries):
    if A.order != B.order:
        raise InvalidArgument(f"order mismatch: {A.order} vs {B.order}")


def otimes(A: TruncatedSeries, B: TruncatedSeries) -> TruncatedSeries:
    """Dirichlet product of power series."""
    _same_order(A, B)
    return TruncatedSeries(arith.dirichlet_array(A.coeffs, B.coeffs), f"({A.label}(x){B.label})")


def otimes_power(A: TruncatedSeries, k: int) -> TruncatedSeries:
    if k < 1:
        raise InvalidArgument("k must be >= 1")
    out = A
    for _ in range(k - 1):
        out = otimes(out, A)
    return out


def otimes_inverse(A: TruncatedSeries) -> TruncatedSeries:
    """B with A (x) B = e up to the truncation order."""
    a = A.coeffs
    if a[1] == 0:
        raise NotInvertible("leading coefficient a_1 is zero")
    n = A.order
    exact = a.dtype.kind in "iuO"
    if exact:
        a = a.astype(object)
        a1 = Fraction(a[1]) if not isinstance(a[1], Fraction) else a[1]
        b = np.zeros(n + 1, dtype=object)
        acc = np.zeros(n + 1, dtype=object)
        b[:] = 0
        acc[:] = 0
    else:
        a1 = a[1]
        b = np.zeros(n + 1, dtype=a.dtype)
        acc = np.zeros(n + 1, dtype=a.dtype)
    for m in range(1, n + 1):
        bm = ((1 if m == 1 else 0) - acc[m]) / a1
        if exact and isinstance(bm, Fraction) and bm.denominator == 1:
            bm = int(bm)
        b[m] = bm
        if bm != 0 and 2 * m <= n:
            acc[2 * m :: m] += a[2 : n // m + 1] * bm
    return TruncatedSeries(b, f"inv({A.label})")


def boxtimes(A: TruncatedSeries, B: TruncatedSeries) -> TruncatedSeries:
    """Unitary product: coprime factor pairs only."""
    _same_order(A, B)
    return TruncatedSeries(arith.unitary_array(A.coeffs, B.coeffs), f"({A.label}[x]{B.label})")


def lambert_resum(G2: TruncatedSeries) -> TruncatedSeries:
    """sum_n G2(z^n): coefficient n becomes sum_{d | n} g_d."""
    one = arith.ones(G2.order).values
    return TruncatedSeries(arith.dirichlet_array(G2.coeffs, one), f"lambert({G2.label})")


def multiplier_apply(phi: TruncatedSeries, f: TruncatedSeries) -> TruncatedSeries:
    """Action f -> phi (x) f of a Dirichlet-product multiplier."""
    return otimes(phi, f)


def boole(A: TruncatedSeries) -> TruncatedSeries:
    """z d/dz at the coefficient level: a_n -> n a_n."""
    n = np.arange(A.order + 1)
    c = A.coeffs.astype(object) * n.astype(object) if A.coeffs.dtype == object else A.coeffs * n
    return TruncatedSeries(c, f"boole({A.label})")


def dilate(A: TruncatedSeries, m: int) -> TruncatedSeries:
    """A(z^m) truncated at the same order."""
    c = np.zeros_like(A.coeffs)
    if c.dtype == object:
        c[:] = 0
    k = A.order // m
    c[m::m] = A.coeffs[1 : k + 1]
    return TruncatedSeries(c, f"{A.label}(z^{m})")


def inner(A: TruncatedSeries, B: TruncatedSeries):
    """Coefficient pairing sum a_n conj(b_n)."""
    _same_order(A, B)
    if A.coeffs.dtype == object and B.coeffs.dtype == object or (
            A.coeffs.dtype.kind in "iuO" and B.coeffs.dtype.kind in "iuO"):
        return sum((a * b for a, b in zip(A.tolist(), B.tolist())), Fraction(0))
    return complex(np.sum(A.coeffs.astype(np.complex128) * np.conj(B.coeffs.astype(np.complex128))))
