"""Figure data for f1(t) = sum mu(n)/n cos(2 pi n t) and f2(t) = sum lambda(n)/n cos(2 pi n t).

Samples come from the truncation at N terms.  The footer rows hold
sum_{h=1}^{k} f_N(h/k) (one full period of k-th roots of unity), computed
exactly in the cyclotomic field and checked against k sum_j a_{jk}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import arith
from .errors import InvalidArgument
from .identities import root_sum_cyclotomic

FIGURES = {"fig1": "mu", "fig2": "lambda"}


@dataclass
class FooterRow:
    k: int
    value: float
    identity_value: float
    sampled_value: float
    exact_match: bool


@dataclass
class FigureData:
    which: str
    n_terms: int
    t: np.ndarray
    values: np.ndarray
    footer: list


def coefficients(which: str, n_terms: int) -> np.ndarray:
    """mu(n) or lambda(n) as int64, padded."""
    if which not in FIGURES:
        raise InvalidArgument(f"unknown figure {which!r}")
    return np.asarray(arith.sieve(FIGURES[which], n_terms).values, dtype=np.int64)


def cosine_samples(signs: np.ndarray, grid_points: int, chunk: int = 1 << 22) -> tuple[np.ndarray, np.ndarray]:
    """sum_n signs[n]/n cos(2 pi n t) at t = i/(G-1), with phases reduced exactly mod G-1."""
    if grid_points < 2:
        raise InvalidArgument("grid_points must be >= 2")
    G1 = grid_points - 1
    N = len(signs) - 1
    n = np.nonzero(signs[1:])[0] + 1
    w = signs[n] / n.astype(np.float64)
    cos_table = np.cos(2 * np.pi * np.arange(G1) / G1)
    out = np.empty(grid_points)
    rows = max(1, chunk // max(1, len(n)))
    nm = n % G1
    for i0 in range(0, grid_points, rows):
        i = np.arange(i0, min(grid_points, i0 + rows))
        idx = (i[:, None] * nm[None, :]) % G1
        out[i] = cos_table[idx] @ w
    return np.arange(grid_points) / G1, out


def lcm_upto(N: int) -> int:
    """lcm(1..N) = prod of p over prime powers p^m <= N."""
    lam = arith.sieve("mangoldt", N).values[1:].astype(np.float64)
    ps = np.rint(np.exp(lam[lam > 0])).astype(np.int64)
    return math.prod(int(p) for p in ps)


def footer_rows(signs: np.ndarray, ks=range(2, 11)) -> list[FooterRow]:
    N = len(signs) - 1
    L = lcm_upto(N)
    scaled = [0] + [int(signs[n]) * (L // n) for n in range(1, N + 1)]
    M = math.lcm(*ks)
    res = [0] * M
    for n in range(1, N + 1):
        if scaled[n]:
            res[n % M] += scaled[n]
    rows = []
    for k in ks:
        buckets = [sum(res[r::k]) for r in range(k)]
        rem = root_sum_cyclotomic(buckets, k)
        direct_exact = not any(rem[1:])
        direct = Fraction(rem[0], L)
        identity = Fraction(k * sum(scaled[k::k]), L)
        h = np.arange(1, k + 1)
        n = np.arange(1, N + 1)
        ph = (h[:, None] * n[None, :]) % k
        sampled = float(np.sum(np.cos(2 * np.pi * ph / k) @ (signs[1:] / n)))
        rows.append(FooterRow(k, float(direct), float(identity), sampled,
                              direct_exact and direct == identity))
    return rows


def figure_data(which: str, n_terms: int = 100_000, grid_points: int = 2000, footer: bool = True) -> FigureData:
    signs = coefficients(which, n_terms)
    t, v = cosine_samples(signs, grid_points)
    rows = footer_rows(signs) if footer else []
    return FigureData(which, n_terms, t, v, rows)
