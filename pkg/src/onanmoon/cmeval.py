"""Numerical evaluation of hauptmoduln at CM points, with adaptive
precision and rational recognition.

Evaluation points are CM points tau = (-b + i sqrt(D)) / (2a) coming from
Heegner forms [a, b, c].  Each hauptmodul is evaluated through its defining
expression (eta quotients via the pentagonal series, E2/E4 and cusp-form
q-expansions via Horner) rather than through its own weakly holomorphic
q-series, whose coefficients grow like e^(4 pi sqrt(n)) and would cancel
catastrophically at low imaginary part.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
from gmpy2 import mpq

from .eisenstein import sigma_table
from .hauptmodul import (
    ETA_HAUPTMODUL,
    SYM_PLUS_HAUPTMODUL,
    PLUS_E2_HAUPTMODUL,
    PLUS_ETA_HAUPTMODUL,
)

__all__ = [
    "PrecisionPolicy",
    "InsufficientPrecision",
    "CMPoint",
    "eval_hauptmodul",
    "eval_eta",
    "recognize_rational",
]


class InsufficientPrecision(Exception):
    """Raised when the precision ladder or the shipped series order is
    exhausted before two consecutive evaluations agree."""


@dataclass(frozen=True)
class PrecisionPolicy:
    rel_target: float = 1e-20  # agreement between consecutive precisions
    start_bits: int = 128
    max_bits: int = 4096
    residual: float = 1e-6  # rational recognition tolerance


@dataclass(frozen=True)
class CMPoint:
    """tau = (-b + i sqrt(D)) / (2a)."""

    a: int
    b: int
    D: int

    def tau(self, mp) -> "mpmath.mpc":
        return mpmath.mpc(-self.b, mpmath.sqrt(mpmath.mpf(self.D))) / (2 * self.a)


# ------------------------------------------------------- series evaluation


def eval_eta(tau, mp) -> "mpmath.mpc":
    """eta(tau) by the pentagonal number series (O(sqrt(prec)) terms)."""
    q = mpmath.exp(2j * mpmath.pi * tau)
    aq = abs(q)
    if aq >= 1:
        raise ValueError("tau not in the upper half-plane")
    nmax = int((mp.prec + 12) * math.log(2) / (-math.log(aq))) + 1
    s = mpmath.mpc(1)
    k = 1
    while True:
        e1 = k * (3 * k - 1) // 2
        e2 = k * (3 * k + 1) // 2
        if e1 > nmax and e2 > nmax:
            break
        sign = 1 if k % 2 == 0 else -1
        if e1 <= nmax:
            s += sign * q**e1
        if e2 <= nmax:
            s += sign * q**e2
        k += 1
    return mpmath.exp(2j * mpmath.pi * tau / 24) * s


def _eval_eta_quotient(factors, tau, mp):
    out = mpmath.mpc(1)
    for d, r in factors.items():
        out *= eval_eta(d * tau, mp) ** r
    return out


def _terms_needed(absq: float, bits: int, poly_deg: int) -> int:
    """Terms of sum c_n q^n with |c_n| <= C n^poly_deg for a 2^-bits tail."""
    L = -math.log(absq)
    target = (bits + 12) * math.log(2)
    n = max(8, int(target / L))
    for _ in range(60):
        n = int((target + poly_deg * math.log(n + 1)) / L) + 1
    return n + 1


def _horner(coeffs, val, q):
    """sum coeffs[i] q^(val+i) with exact rational coefficients."""
    s = mpmath.mpc(0)
    for c in reversed(coeffs):
        s = s * q
        if c:
            s += mpmath.mpf(c.numerator) / mpmath.mpf(c.denominator)
    return s * q**val


# dynamically extensible integer coefficient tables
_SIGMA1: list = []
_SIGMA3: list = []


def _sigma(which: int, n_needed: int) -> list:
    global _SIGMA1, _SIGMA3
    tab = _SIGMA1 if which == 1 else _SIGMA3
    if len(tab) < n_needed:
        new = sigma_table(which, max(n_needed, 2 * len(tab), 256))
        if which == 1:
            _SIGMA1 = new
            tab = _SIGMA1
        else:
            _SIGMA3 = new
            tab = _SIGMA3
    return tab


_WH_COEFFS: dict = {}


def _wh_terms_needed(absq: float, bits: int, N: int) -> int:
    """Terms of the weakly holomorphic series, |c_n| ~ e^(4 pi sqrt(n/N)),
    for a 2^-bits tail:  solve L n - g sqrt(n) = (bits+12) ln 2."""
    L = -math.log(absq)
    g = 4 * math.pi / math.sqrt(N)
    target = (bits + 12) * math.log(2)
    r = (g + math.sqrt(g * g + 4 * L * target)) / (2 * L)
    return max(8, int(r * r) + 2)


def _wh_coeffs(N: int, n_needed: int) -> list:
    """Exact coefficients [c(-1), c(0), ..., c(prec-1)] of the plus
    hauptmodul at level N, extended (and disk-cached) on demand."""
    tab = _WH_COEFFS.get(N)
    if tab is None or len(tab) < n_needed + 2:
        from .cache import JsonCache
        from .hauptmodul import hauptmodul_series

        cache = JsonCache(f"hauptmodul_{N}p.json")
        hit = cache.get("coeffs")
        if hit is None or len(hit) < n_needed + 2:
            prec = max(n_needed + 4, 1024, 2 * (len(tab) - 2) if tab else 0)
            s = hauptmodul_series(N, True, prec)
            hit = [str(s.coefficient(n)) for n in range(-1, s.prec)]
            cache.put("coeffs", hit)
        tab = [mpq(c) for c in hit]
        _WH_COEFFS[N] = tab
    return tab[: n_needed + 2]


def _eval_E2(tau, mp):
    q = mpmath.exp(2j * mpmath.pi * tau)
    n = _terms_needed(abs(q), mp.prec, 2)
    sig = _sigma(1, n + 1)
    s = mpmath.mpc(0)
    for m in range(n, 0, -1):
        s = s * q + int(sig[m])
    return 1 - 24 * s * q


def _eval_E4(tau, mp):
    q = mpmath.exp(2j * mpmath.pi * tau)
    n = _terms_needed(abs(q), mp.prec, 4)
    sig = _sigma(3, n + 1)
    s = mpmath.mpc(0)
    for m in range(n, 0, -1):
        s = s * q + int(sig[m])
    return 1 + 240 * s * q


def _eval_hauptmodul_at(N: int, plus: bool, tau, mp):
    if not plus:
        if N == 1:
            e4 = _eval_E4(tau, mp)
            return e4**3 / eval_eta(tau, mp) ** 24 - 744
        factors, const = ETA_HAUPTMODUL[N]
        return _eval_eta_quotient(factors, tau, mp) + const
    if N in PLUS_ETA_HAUPTMODUL:
        factors, const = PLUS_ETA_HAUPTMODUL[N]
        return _eval_eta_quotient(factors, tau, mp) + const
    if N in PLUS_E2_HAUPTMODUL:
        weights, etas, scale, const = PLUS_E2_HAUPTMODUL[N]
        num = mpmath.mpc(0)
        for d, w in weights.items():
            num += w * _eval_E2(d * tau, mp)
        den = scale * _eval_eta_quotient(etas, tau, mp)
        return -num / den + mpmath.mpf(const.numerator) / mpmath.mpf(const.denominator)
    if N in SYM_PLUS_HAUPTMODUL:
        terms, const = SYM_PLUS_HAUPTMODUL[N]
        val = mpmath.mpc(const)
        for factors, mult in terms:
            val += mult * _eval_eta_quotient(factors, tau, mp)
        return val
    if N in (19, 31):
        # E2/cusp-form quotient expressions are 0/0 at the order-3 elliptic
        # points (weight-2 forms vanish there), so these two levels are
        # evaluated through their own weakly holomorphic q-series.  The
        # coefficients grow like e^(4 pi sqrt(n/N)), which at the
        # worst-reduced Heegner points (Im tau ~ sqrt(3)/(2N)) still gives
        # a convergent sum with O(1) peak term size.
        q = mpmath.exp(2j * mpmath.pi * tau)
        n = _wh_terms_needed(abs(q), mp.prec, N)
        return _horner(_wh_coeffs(N, n), -1, q)
    raise ValueError(f"no hauptmodul evaluator for level {N} (plus={plus})")


def eval_hauptmodul_raw(N: int, plus: bool, point: CMPoint) -> "mpmath.mpc":
    """Evaluate the hauptmodul at the current mpmath working precision."""
    return _eval_hauptmodul_at(N, plus, point.tau(mpmath.mp), mpmath.mp)


def eval_hauptmodul(
    N: int,
    plus: bool,
    point: CMPoint,
    policy: PrecisionPolicy = PrecisionPolicy(),
) -> "mpmath.mpc":
    """Evaluate the hauptmodul at a CM point with the precision ladder:
    double the working precision until two consecutive values agree to the
    policy's relative target (and to ~1e-9 absolutely, so that downstream
    rational recognition is meaningful even for huge values)."""
    bits = policy.start_bits
    prev = None
    while bits <= policy.max_bits:
        with mpmath.workprec(bits):
            val = _eval_hauptmodul_at(N, plus, point.tau(mpmath.mp), mpmath.mp)
        if prev is not None:
            scale = max(abs(prev), 1)
            diff = abs(val - prev)
            if diff <= policy.rel_target * scale and diff <= 1e-3 * policy.residual:
                return val
        prev = val
        bits *= 2
    raise InsufficientPrecision(
        f"no convergence for level {N} (plus={plus}) at {point} "
        f"within {policy.max_bits} bits"
    )


def recognize_rational(x, policy: PrecisionPolicy = PrecisionPolicy()):
    """Round a numeric value to the nearest multiple of 1/24; accept only if
    the residual (and any imaginary part) is below the policy tolerance.

    The rounding is done with enough working precision for the magnitude of
    x, so values of arbitrary size are recognized faithfully.
    """
    mag_bits = 16
    try:
        mag_bits += max(0, int(mpmath.mag(x)))
    except (TypeError, ValueError):
        pass
    with mpmath.workprec(max(mpmath.mp.prec, mag_bits + 64)):
        im = abs(mpmath.im(x))
        if im > policy.residual:
            raise InsufficientPrecision(f"imaginary part {im} too large")
        r = mpmath.re(x) * 24
        m = int(mpmath.nint(r))
        if abs(r - m) > 24 * policy.residual:
            raise InsufficientPrecision(f"residual {abs(r - m) / 24} too large")
    return mpq(m, 24)
