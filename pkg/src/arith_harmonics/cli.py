"""Command-line entry point: ``arith-harmonics <subcommand> [flags]``.

Subcommands: sieve, verify, figure, scan, fit.  Output goes to stdout or
``--out`` in one write.  Exit codes: 0 pass, 1 fail, 2 usage, 3 heuristic-only.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import warnings
from fractions import Fraction
from typing import Callable

import numpy as np

from . import __version__, analytic, arith, asympt, figures, gram, identities, series
from .analytic import ComplexParam
from .errors import DomainError, InvalidArgument, PreconditionViolation
from .identities import FAIL, HFAIL, HPASS, PASS, IdentityReport, _exact_report, _float_report

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_HEURISTIC = 0, 1, 2, 3


class UsageError(Exception):
    pass


# --- argument parsing helpers ------------------------------------------------------------

def int_list(text: str) -> list[int]:
    """'4', '1-30' or '2,3,5' (ranges allowed inside lists)."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "-" in part[1:]:
            i = part.index("-", 1)
            lo, hi = int(part[:i]), int(part[i + 1 :])
            out.extend(range(lo, hi + 1))
        else:
            out.append(int(part))
    if not out:
        raise argparse.ArgumentTypeError(f"empty integer list {text!r}")
    return out


def _narrow(z: complex):
    """Plain int or float for real parameters so exact routes stay available."""
    if z.imag != 0:
        return z
    if float(z.real).is_integer():
        return int(z.real)
    return float(z.real)


def complex_list(text: str) -> list:
    try:
        return [_narrow(complex(ComplexParam.parse(p))) for p in text.split(",") if p.strip()]
    except Exception as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def float_list(text: str) -> list[float]:
    try:
        return [float(p) for p in text.split(",") if p.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def positive_int(text: str) -> int:
    v = int(float(text))
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _pick(args, name, default):
    v = getattr(args, name, None)
    return default if v is None else v


def _random_poly(rng: np.random.Generator, deg: int) -> series.TruncatedSeries:
    c = rng.normal(size=deg) + 1j * rng.normal(size=deg)
    return series.from_coeffs(c / np.arange(1, deg + 1))


# --- verify runners -------------------------------------------------------------------------

def v_franel_sawtooth(a):
    R = _pick(a, "r_max", 50)
    return [_exact_report("franel-sawtooth", identities.franel_sawtooth(r, s),
                          identities.franel_closed_form(r, s), {"r": r, "s": s})
            for r in range(1, R + 1) for s in range(1, R + 1)]


def v_franel_logsin(a):
    R = _pick(a, "r_max", 12)
    tol = _pick(a, "tol", 1e-6)
    return [identities.franel_logsin(r, s, tol=tol) for r in range(1, R + 1) for s in range(1, R + 1)]


def v_mikolas(a):
    R = _pick(a, "r_max", 4)
    tol = _pick(a, "tol", 1e-4)
    return [identities.mikolas_integral(x, y, s, tol=tol)
            for s in _pick(a, "s", [1.5]) for x in range(1, R + 1) for y in range(1, R + 1)]


def v_ramanujan_point(a):
    ks = _pick(a, "k", list(range(2, 11)))
    kw = {"n_terms": a.n_terms} if a.n_terms else {"n_terms": 10**5}
    if a.tol is not None:
        kw["tol"] = a.tol
    return [identities.ramanujan_point_formula(k, s, **kw) for s in _pick(a, "s", [2]) for k in ks]


def v_ramanujan_dual(a):
    ms = _pick(a, "m", list(range(1, 11)))
    kw = {"n_terms": a.n_terms} if a.n_terms else {}
    if a.tol is not None:
        kw["tol"] = a.tol
    return [identities.ramanujan_dual_formula(m, s, **kw) for s in _pick(a, "s", [2]) for m in ms]


def v_delange(a):
    out = []
    for s in _pick(a, "s", [2]):
        for z in _pick(a, "z", [0.5]):
            g = identities.polylog_weight(z, s)
            q = _pick(a, "q", [500])[0]
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", RuntimeWarning)
                res = identities.delange_expand(g, q, 200, tol=_pick(a, "tol", 1e-4))
            rep = res.report
            rep.parameters.update({"s": s, "z": z})
            out.append(rep)
    return out


def v_lucht(a):
    kw = {"n_terms": a.n_terms} if a.n_terms else {}
    return [identities.lucht_check(identities.polylog_weight(z, s), l, tol=_pick(a, "tol", 1e-8), **kw)
            for s in _pick(a, "s", [2]) for z in _pick(a, "z", [0.5]) for l in _pick(a, "k", [1, 2, 6, 12])]


def v_mu_subseries(a):
    kw = {"n_terms": a.n_terms} if a.n_terms else {}
    return [identities.mu_subseries(q, s, tol=_pick(a, "tol", 1e-6), **kw)
            for s in _pick(a, "s", [2]) for q in _pick(a, "q", list(range(1, 13)))]


def v_musq_coprime(a):
    kw = {"n_terms": a.n_terms} if a.n_terms else {}
    return [identities.musq_coprime_series(n, s, tol=_pick(a, "tol", 1e-6), **kw)
            for s in _pick(a, "s", [2]) for n in _pick(a, "n", list(range(1, 13)))]


def v_besicovitch(a):
    kw = {"n_terms": a.n_terms} if a.n_terms else {}
    return [identities.besicovitch_sum(k, s, kind=kind, tol=a.tol, **kw)
            for kind in _pick(a, "kind", "mu").split(",")
            for s in _pick(a, "s", [2]) for k in _pick(a, "k", list(range(1, 31)))]


def v_liouville_alt(a):
    kw = {"n_terms": a.n_terms} if a.n_terms else {}
    return [identities.liouville_alternating(s, tol=_pick(a, "tol", 1e-6), **kw) for s in _pick(a, "s", [2, 3])]


def v_mu_tail_bound(a):
    taus = _pick(a, "tau", [1.01, 1.1, 1.3])
    return [identities.mu_tail_bound_check(D, tau) for D in _pick(a, "d", [1, 2, 6, 30, 2310]) for tau in taus]


def v_smith_det(a):
    N = _pick(a, "n", [64])[-1]
    out = []
    for r in _pick(a, "r", [1, 2, 3]):
        minors = gram.bareiss_leading_minors(gram.gcd_power_matrix(r, N))
        for n in range(1, N + 1):
            out.append(_exact_report("smith-det", minors[n - 1], gram.smith_det(r, n), {"r": r, "N": n}))
    return out


def v_gram_det(a):
    tol = _pick(a, "tol", 1e-8)
    out = []
    for s in _pick(a, "s", [1, 1.5, 2]):
        for N in _pick(a, "n", [10, 50, 100, 200]):
            det = gram.gram_matrix(s, N).det
            closed = complex(gram.gram_det_closed(s, N))
            rep = _float_report("gram-det", det, closed, tol * abs(closed), {"s": s, "N": N, "rel_tol": tol})
            rep.parameters["rel_error"] = rep.abs_error / abs(closed)
            out.append(rep)
    return out


def v_gram_eigs(a):
    slack = _pick(a, "tol", 1e-9)
    out = []
    for s in _pick(a, "s", [1.1, 1.5, 2, 3]):
        lo, hi = gram.eig_bounds(s)
        for N in _pick(a, "n", [10, 50, 100, 200]):
            lmin, lmax = gram.gram_extreme_eigs(gram.gram_matrix(s, N))
            viol = max(0.0, lo - lmin, lmax - hi)
            ok = lmin >= lo - slack and lmax <= hi + slack
            out.append(IdentityReport("gram-eigs", lmin, lo, viol,
                                      {"s": s, "N": N, "lambda_max": lmax, "upper_bound": hi, "tol": slack},
                                      PASS if ok else FAIL))
    return out


def v_biorth(a):
    N = _pick(a, "n", [64])[-1]
    out = []
    for s in _pick(a, "s", [2]):
        psis = [gram.biorth_psi(n, s).as_series(N) for n in range(1, N + 1)]
        bad = 0
        for m in range(1, N + 1):
            Lm = gram.dilated_polylog(m, s, N)
            for n, p in enumerate(psis, 1):
                v = series.inner(Lm, p)
                bad += (v != (1 if m == n else 0)) if Lm.scalar_kind == "exact" else (
                    abs(v - (1 if m == n else 0)) > 1e-12)
        out.append(IdentityReport("biorth", bad, 0, float(bad), {"s": s, "N": N, "tol": 0}, PASS if bad == 0 else FAIL))
    return out


def v_flett(a):
    xs = _pick(a, "x", list(np.linspace(0, 10, 101)))
    tol = _pick(a, "tol", 1e-9)
    return [_float_report("flett", asympt.cos_sum(x), asympt.cos_sum_taylor(x)[0], tol, {"x": x}) for x in xs]


def v_chp(a):
    K = _pick(a, "k", [20])[-1]
    coeffs = asympt.cos_minus_one_coeffs(K)
    return [asympt.chp_transform(coeffs, s, z, tol=_pick(a, "tol", 1e-8))
            for s in _pick(a, "s", [1]) for z in _pick(a, "z", [1.0])]


def v_t_semigroup(a):
    rng = np.random.default_rng(a.seed)
    tol = _pick(a, "tol", 1e-8)
    out = []
    f = _random_poly(rng, 30)
    for z in _pick(a, "z", [0.3]):
        for s in _pick(a, "s", [0.5, 1.5, 2 + 1j]):
            q = asympt.t_semigroup_quadrature(f, s, z)
            c = asympt.t_semigroup_coeff(f, s)(z)
            out.append(_float_report("t-semigroup", q, c, tol, {"s": s, "z": z, "degree": 30}))
        q = asympt.t_semigroup_compose_quadrature(f, 0.7, 0.8, z)
        c = asympt.t_semigroup_coeff(f, 1.5)(z)
        out.append(_float_report("t-semigroup", q, c, max(tol, 1e-7), {"s": "0.7 o 0.8", "z": z, "degree": 30}))
    return out


def v_lerch(a):
    tol = _pick(a, "tol", 1e-6)
    out = []
    for s in _pick(a, "s", [0.5]):
        for x in _pick(a, "x", [0.2, 0.3, 0.5]):
            lhs, rhs = analytic.lerch_sides(s, x)
            out.append(_float_report("lerch", lhs, rhs, tol, {"s": s, "x": x}))
    return out


def v_kubert_logsin(a):
    tol = _pick(a, "tol", 1e-12)
    return [_float_report("kubert-logsin", *analytic.kubert_logsin_sides(n, x), tol, {"n": n, "x": x})
            for n in _pick(a, "n", [2, 3, 4, 7]) for x in _pick(a, "x", [0.13, 0.37])]


def v_kubert_hurwitz(a):
    tol = _pick(a, "tol", 1e-9)
    out = []
    for s in _pick(a, "s", [2.5]):
        for m in _pick(a, "m", [2, 3, 5]):
            for x in _pick(a, "x", [0.1, 0.37]):
                lhs, rhs = analytic.kubert_hurwitz_sides(s, x, m)
                out.append(_float_report("kubert-hurwitz", lhs, rhs, tol * max(1.0, abs(rhs)),
                                         {"s": s, "m": m, "x": x}))
    return out


REGISTRY: dict[str, tuple[Callable, str]] = {
    "franel-sawtooth": (v_franel_sawtooth, "int_0^1 {rx}{sx} dx = gcd(r,s)^2/(12rs), exact rationals"),
    "franel-logsin": (v_franel_logsin, "int_0^1 log|2sin pi rx| log|2sin pi sx| dx = (pi^2/12) gcd(r,s)^2/(rs)"),
    "mikolas": (v_mikolas, "int_0^1 zeta(1-s,{ax}) zeta(1-s,{bx}) dx = 2Gamma(s)^2 zeta(2s)/(2pi)^{2s} (gcd/lcm)^s"),
    "ramanujan-point": (v_ramanujan_point, "sum_m c_k(m)/m^s = sigma_{1-s}(k)/zeta(s); -Lambda(k) at s=1"),
    "ramanujan-dual": (v_ramanujan_dual, "sum_k c_k(m)/k^s = sigma_{1-s}(m)/zeta(s); 0 at s=1"),
    "delange": (v_delange, "f = g*1 recovered as sum_q fhat(q) c_q(n), fhat(q) = sum_m g(qm)/(qm)"),
    "lucht": (v_lucht, "ghat(l) = sum_n c_n(l) g(n) for g(n) = z^n/n^s"),
    "mu-subseries": (v_mu_subseries, "sum_n mu(qn)/n^s = mu(q)/(zeta(s) prod_{p|q}(1-p^{-s}))"),
    "musq-coprime": (v_musq_coprime, "sum_{(k,n)=1} mu(k)^2/k^s = zeta(s)/(zeta(2s) prod_{p|n}(1+p^{-s}))"),
    "besicovitch": (v_besicovitch, "sum_{h=1}^k M_s(e^{2pi i h/k}) in closed form; zero at s=1"),
    "liouville-alt": (v_liouville_alt, "sum_n (-1)^n lambda(n)/n^s against its zeta closed form"),
    "mu-tail-bound": (v_mu_tail_bound, "|sum_j mu(jD)/j^tau| <= e(tau-1)/zeta(tau), 1 < tau < 3/2"),
    "smith-det": (v_smith_det, "det(gcd(m,n)^r)_{m,n<=N} = prod_{k<=N} J_r(k)"),
    "gram-det": (v_gram_det, "det(gcd(m,n)^{2s}/(mn)^s) = prod_k prod_{p|k}(1-p^{-2s})"),
    "gram-eigs": (v_gram_eigs, "spectrum of M_{s,N} inside [zeta(2s)/zeta(s)^2, zeta(s)^2/zeta(2s)]"),
    "biorth": (v_biorth, "(L_s(z^m) | psi_n) = [m=n], psi_n = n^{-s} sum_{d|n} mu(n/d) d^s z^d"),
    "flett": (v_flett, "sum_j (cos(x/j)-1) = sum_k (-1)^k zeta(2k) x^{2k}/(2k)!"),
    "chp": (v_chp, "sum_n f(z/n^s) = sum_k a_k zeta(ks) z^k, f = cos-1 truncated"),
    "t-semigroup": (v_t_semigroup, "T_s f(z) = Gamma(s)^{-1} int f(e^{-t}z) t^{s-1} dt = sum a_n n^{-s} z^n"),
    "lerch": (v_lerch, "L_s(e^{2pi ix}) = A_s zeta(1-s,x) + B_s zeta(1-s,1-x), 0 < Re s < 1"),
    "kubert-logsin": (v_kubert_logsin, "sum_{k<n} log|2sin pi(x+k/n)| = log|2sin pi nx|"),
    "kubert-hurwitz": (v_kubert_hurwitz, "sum_{k<m} zeta(s,(x+k)/m) = m^s zeta(s,x)"),
}


def exit_code(verdicts) -> int:
    verdicts = list(verdicts)
    if any(v in (FAIL, HFAIL) for v in verdicts):
        return EXIT_FAIL
    if any(v == HPASS for v in verdicts):
        return EXIT_HEURISTIC
    return EXIT_PASS


# --- output ---------------------------------------------------------------------------------

def fmt(v) -> str:
    """17 significant digits for floats; exact forms for integers and rationals."""
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, (complex, np.complexfloating)):
        v = complex(v)
        if v.imag == 0:
            return f"{v.real:.17g}"
        return f"{v.real:.17g}{v.imag:+.17g}j"
    if isinstance(v, (float, np.floating)):
        return f"{float(v):.17g}"
    return str(v)


def _config(args, sub: str) -> dict:
    d = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "out", "format")}
    d["subcommand"] = sub
    d["format"] = args.format
    d["version"] = __version__
    return json.loads(json.dumps(d, default=identities._param_json))


def _csv_text(config: dict, header: list[str], rows: list[list], extra_blocks=()) -> str:
    buf = io.StringIO()
    for k, v in config.items():
        buf.write(f"# {k}={json.dumps(v, sort_keys=True)}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows([[fmt(x) for x in r] for r in rows])
    for hdr, blk in extra_blocks:
        buf.write("\n")
        w.writerow(hdr)
        w.writerows([[fmt(x) for x in r] for r in blk])
    return buf.getvalue()


def _table_text(header: list[str], rows: list[list]) -> str:
    cells = [header] + [[fmt(x) for x in r] for r in rows]
    widths = [max(len(c[i]) for c in cells) for i in range(len(header))]
    return "\n".join("  ".join(c[i].ljust(widths[i]) for i in range(len(header))).rstrip() for c in cells) + "\n"


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _emit(text: str, args):
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --- subcommands ----------------------------------------------------------------------------

SIEVE_KINDS = ("mu", "mu_abs", "lambda", "phi", "jordan", "sigma", "mangoldt", "theta", "n_simple", "omega")


def cmd_sieve(args) -> int:
    if args.kind == "jordan" and args.k is None:
        raise UsageError("--k is required for jordan")
    if args.kind == "sigma" and args.a is None:
        raise UsageError("--a is required for sigma")
    k = args.k[-1] if args.k else None
    a = args.a[0] if args.a else None
    t = arith.sieve(args.kind, args.n_max, k=k, a=a)
    rows = [[n, v] for n, v in enumerate(t.values.tolist()[1:], 1)]
    cfg = _config(args, "sieve")
    if args.format == "json":
        text = _json_text({"config": cfg, "rows": [{"n": n, "value": identities._scalar_json(v)} for n, v in rows]})
    elif args.format == "table":
        text = _table_text(["n", "value"], rows)
    else:
        text = _csv_text(cfg, ["n", "value"], rows)
    _emit(text, args)
    return EXIT_PASS


def cmd_verify(args) -> int:
    runner, _ = REGISTRY[args.identity]
    reports = runner(args)
    cfg = _config(args, "verify")
    header = ["name", "params", "lhs", "rhs", "abs_error", "verdict", "n_terms"]
    rows = [[r.name, json.dumps(r.to_dict()["params"], sort_keys=True), r.lhs, r.rhs, r.abs_error, r.verdict,
             "" if r.n_terms is None else r.n_terms] for r in reports]
    if args.format == "json":
        text = _json_text({"config": cfg, "reports": [r.to_dict() for r in reports]})
    elif args.format == "table":
        text = _table_text(header, rows)
    else:
        text = _csv_text(cfg, header, rows)
    _emit(text, args)
    return exit_code(r.verdict for r in reports)


def cmd_figure(args) -> int:
    if args.grid_points < 2:
        raise UsageError("--grid-points must be >= 2")
    data = figures.figure_data(args.which, args.n_terms, args.grid_points)
    cfg = _config(args, "figure")
    rows = [[t, v] for t, v in zip(data.t.tolist(), data.values.tolist())]
    foot = [[r.k, r.value, r.identity_value, r.sampled_value, r.exact_match] for r in data.footer]
    fhead = ["k", "root_sum", "identity", "sampled", "exact_match"]
    if args.format == "json":
        text = _json_text({"config": cfg, "samples": [{"t": t, "value": v} for t, v in rows],
                           "footer": [dict(zip(fhead, r)) for r in foot]})
    elif args.format == "table":
        text = _table_text(["t", "value"], rows) + "\n" + _table_text(fhead, foot)
    else:
        text = _csv_text(cfg, ["t", "value"], rows, [(fhead, foot)])
    _emit(text, args)
    return EXIT_PASS if all(r.exact_match for r in data.footer) else EXIT_FAIL


def cmd_scan(args) -> int:
    exps = args.exponents or [1] * len(args.shifts)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        sc = identities.chowla_correlation_scan(args.kind, args.shifts, exps, args.m, args.checkpoints)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    cfg = _config(args, "scan")
    rows = [[int(M), float(v)] for M, v in zip(sc.checkpoints, sc.normalized)]
    if args.format == "json":
        text = _json_text({"config": cfg, "trend": [{"M": M, "S_over_M": v} for M, v in rows],
                           "summary": sc.trend()})
    elif args.format == "table":
        text = _table_text(["M", "S/M"], rows)
    else:
        text = _csv_text(cfg, ["M", "S/M"], rows)
    _emit(text, args)
    return EXIT_PASS


def cmd_fit(args) -> int:
    fit = asympt.linear_term_and_remainder(args.x_max, args.points, seed=args.seed)
    cfg = _config(args, "fit")
    rows = [[x, v] for x, v in zip(fit.x_grid.tolist(), fit.values.tolist())]
    if args.format == "json":
        text = _json_text({"config": cfg, "fit": fit.to_dict()})
    elif args.format == "table":
        text = _table_text(list(fit.to_dict()), [list(fit.to_dict().values())])
    else:
        text = _csv_text(cfg, ["x", "F"], rows)
    _emit(text, args)
    return EXIT_PASS if fit.remainder_exponent < 1 else EXIT_FAIL


# --- parser ---------------------------------------------------------------------------------

def _common(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("csv", "json", "table"), default="csv")
    p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized inputs")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arith-harmonics", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("sieve", help="dump an arithmetic function table",
                       description="Values f(1..n_max) from a smallest-prime-factor sieve.")
    p.add_argument("--kind", choices=SIEVE_KINDS, required=True)
    p.add_argument("--n-max", type=positive_int, required=True)
    p.add_argument("--k", type=int_list, help="order for jordan")
    p.add_argument("--a", type=complex_list, help="exponent for sigma")
    _common(p)
    p.set_defaults(func=cmd_sieve)

    epilog = "identities:\n" + "\n".join(f"  {k:16s} {d}" for k, (_, d) in REGISTRY.items())
    p = sub.add_parser("verify", help="check an identity both ways and report",
                       description="Compute both sides of an identity and compare.",
                       epilog=epilog, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("identity", choices=sorted(REGISTRY), metavar="IDENTITY")
    p.add_argument("--s", type=complex_list, help="complex parameter(s), e.g. 2 or 0.5+14.1i or 1.5,2")
    p.add_argument("--k", type=int_list)
    p.add_argument("--q", type=int_list)
    p.add_argument("--m", type=int_list)
    p.add_argument("--n", type=int_list)
    p.add_argument("--r", type=int_list)
    p.add_argument("--d", type=int_list, help="D for mu-tail-bound")
    p.add_argument("--r-max", type=positive_int)
    p.add_argument("--n-max", type=positive_int)
    p.add_argument("--x", type=float_list)
    p.add_argument("--z", type=complex_list)
    p.add_argument("--tau", type=float_list)
    p.add_argument("--kind", help="mu, lambda or mu,lambda")
    p.add_argument("--tol", type=float)
    p.add_argument("--n-terms", type=positive_int)
    _common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("figure", help="samples of sum a_n/n cos(2 pi n t)",
                       description="fig1: a_n = mu(n); fig2: a_n = lambda(n).  Footer: sum_{h=1}^k f_N(h/k) "
                                   "exactly, against k sum_j a_{jk}.")
    p.add_argument("which", choices=sorted(figures.FIGURES))
    p.add_argument("--n-terms", type=positive_int, default=100_000)
    p.add_argument("--grid-points", type=int, default=2000)
    _common(p)
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("scan", help="correlation scan S(M)/M",
                       description="S(M) = sum_{m<=M} prod_i f(m + n_i)^{e_i} with f = mu or lambda.")
    p.add_argument("--kind", choices=("mu", "lambda"), default="mu")
    p.add_argument("--shifts", type=int_list, default=[0])
    p.add_argument("--exponents", type=int_list)
    p.add_argument("--m", type=positive_int, default=10**6)
    p.add_argument("--checkpoints", type=positive_int, default=10)
    _common(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("fit", help="linear term and remainder of sum_j (cos(x/j)-1)",
                       description="F(x) = sum_j (cos(x/j)-1) on a geometric grid; c1 from F/x over the top "
                                   "decade, remainder exponent from an LAD fit of log|F - c1 x|.")
    p.add_argument("--x-max", type=float, default=1e5)
    p.add_argument("--points", type=positive_int, default=120)
    _common(p)
    p.set_defaults(func=cmd_fit)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, InvalidArgument, DomainError, PreconditionViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
