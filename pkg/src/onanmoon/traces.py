"""Traces of singular moduli and the discriminant -4 trace generating
functions.

For a Heegner form Q = [a, b, c] (N | a) with root tau_Q, and a modular
function f for Gamma_0(N),

    Tr_D^(N)(f) = sum over Q in the orbit space of f(tau_Q) / omega(Q).

The principal-part-q^-4 combinations are

    Tr4^(N)(D)   = 1/2 ( Tr_D^(N)(J2^(N)) - Tr_D^(N/d)(J^(N/d)) )
    Tr4^(N,+)(D) = 1/2 ( 2^-w(N) Tr_D^(N)(J2^(N,+))
                         - 2^-w(N/d) Tr_D^(N/d)(J^(N/d,+)) )

with d = gcd(N, 2) and w the number of distinct prime factors.  The
generating series T^(N) = -q^-4 + sum Tr4^(N)(D) q^D has integer
coefficients; T^(N,+) has coefficients in alpha_N Z.
"""

from __future__ import annotations

import math
from functools import lru_cache

import mpmath
from gmpy2 import mpq

from .cache import JsonCache
from .cmeval import CMPoint, InsufficientPrecision, PrecisionPolicy, eval_hauptmodul_raw
from .hauptmodul import hauptmodul_series, index2_constants
from .quadforms import class_number, heegner_orbits
from .qseries import QSeries

__all__ = [
    "trace_singular_moduli",
    "trace_pair",
    "trace4",
    "trace4_plus",
    "trace_series",
    "TRACE_ALPHA",
]

# integrality constants of T^(N,+): coefficients lie in alpha_N * Z
TRACE_ALPHA = {11: mpq(1), 15: mpq(1), 19: mpq(1), 31: mpq(1), 14: mpq(1, 6), 28: mpq(1, 4)}


@lru_cache(maxsize=None)
def _index2_exact(N: int, plus: bool) -> tuple[mpq, mpq]:
    return index2_constants(hauptmodul_series(N, plus, 4))


def _eval_points(N: int, plus: bool, D: int) -> list[tuple[CMPoint, int]]:
    """CM points and weights for the orbits; at plus levels the better of
    the representative and its Fricke image [Nc, -b, a/N] is used (the
    function is W_N-invariant), which keeps Im tau as large as possible."""
    pts = []
    for o in heegner_orbits(N, D):
        a, b, c = o.a, o.b, o.c
        if plus and N * c < a:
            a, b, c = N * c, -b, a // N
        pts.append((CMPoint(a, b, D), o.omega))
    return pts


def _trace_pair_at(N: int, plus: bool, D: int) -> tuple:
    """(sum J/omega, sum J2/omega) at the current working precision."""
    c1, c0 = _index2_exact(N, plus)
    c1f = mpmath.mpf(c1.numerator) / mpmath.mpf(c1.denominator)
    c0f = mpmath.mpf(c0.numerator) / mpmath.mpf(c0.denominator)
    s1 = mpmath.mpc(0)
    s2 = mpmath.mpc(0)
    for point, omega in _eval_points(N, plus, D):
        j = eval_hauptmodul_raw(N, plus, point)
        s1 += j / omega
        s2 += (j * j - c1f * j - c0f) / omega
    return s1, s2


def _recognize(x, policy: PrecisionPolicy) -> mpq | None:
    if abs(mpmath.im(x)) > policy.residual:
        return None
    r = mpmath.re(x) * 24
    m = int(mpmath.nint(r))
    if abs(r - m) > 24 * policy.residual:
        return None
    return mpq(m, 24)


_CACHES: dict = {}


def _cache(N: int, plus: bool) -> JsonCache:
    key = (N, plus)
    if key not in _CACHES:
        _CACHES[key] = JsonCache(f"traces_{N}{'p' if plus else ''}.json")
    return _CACHES[key]


def trace_pair(
    N: int, D: int, plus: bool = False, policy: PrecisionPolicy = PrecisionPolicy()
) -> tuple[mpq, mpq]:
    """(Tr_D^(N)(J), Tr_D^(N)(J2)) as exact rationals (denominators | 6).

    Evaluated on a doubling precision ladder; a value is accepted when two
    consecutive rungs recognize the same rational on the 1/24 grid.
    """
    cache = _cache(N, plus)
    key = str(D)
    hit = cache.get(key)
    if hit is not None:
        return mpq(hit[0]), mpq(hit[1])
    pts = _eval_points(N, plus, D)
    if not pts:
        result = (mpq(0), mpq(0))
    else:
        # initial precision: enough bits for the magnitude of J2 ~ q^-2
        mag = max(4 * math.pi * math.sqrt(D) / (2 * p.a) for p, _ in pts)
        bits = policy.start_bits + int(mag / math.log(2))
        prev = None
        result = None
        while bits <= policy.max_bits + int(mag / math.log(2)):
            with mpmath.workprec(bits):
                s1, s2 = _trace_pair_at(N, plus, D)
                r1, r2 = _recognize(s1, policy), _recognize(s2, policy)
            if r1 is not None and r2 is not None:
                if prev == (r1, r2):
                    result = (r1, r2)
                    break
                prev = (r1, r2)
            else:
                prev = None
            bits *= 2
        if result is None:
            raise InsufficientPrecision(
                f"trace recognition failed for N={N}, plus={plus}, D={D}"
            )
    cache.put(key, [str(result[0]), str(result[1])])
    return result


def trace_singular_moduli(
    N: int,
    D: int,
    func: str = "hauptmodul",
    plus: bool = False,
    policy: PrecisionPolicy = PrecisionPolicy(),
) -> mpq:
    """Tr_D^(N)(f) for f the hauptmodul or its index-2 companion."""
    t1, t2 = trace_pair(N, D, plus, policy)
    if func == "hauptmodul":
        return t1
    if func == "index2":
        return t2
    raise ValueError("func must be 'hauptmodul' or 'index2'")


def _omega_primes(N: int) -> int:
    return len({p for p in range(2, N + 1) if N % p == 0 and _is_prime(p)})


def _is_prime(p: int) -> bool:
    return p > 1 and all(p % q for q in range(2, int(math.isqrt(p)) + 1))


def trace4(N: int, D: int) -> mpq:
    """Tr4^(N)(D) for the (non-plus) genus-zero levels."""
    d = math.gcd(N, 2)
    t_j2 = trace_singular_moduli(N, D, "index2")
    t_j = trace_singular_moduli(N // d, D, "hauptmodul")
    return (t_j2 - t_j) / 2


# The inner trace at level N/d is taken of the bare Atkin-Lehner
# symmetrization sum_Q J^(N/d)|W_Q, whose constant term need not vanish;
# these constants shift it back from the const-0 normalization used here.
INNER_PLUS_CONST = {7: mpq(4), 10: mpq(0)}


def trace4_plus(N: int, D: int) -> mpq:
    """Tr4^(N,+)(D) for the plus genus-zero levels."""
    d = math.gcd(N, 2)
    w1 = _omega_primes(N)
    w2 = _omega_primes(N // d)
    t_j2 = trace_singular_moduli(N, D, "index2", plus=True)
    t_j = trace_singular_moduli(N // d, D, "hauptmodul", plus=True)
    c = INNER_PLUS_CONST.get(N // d)
    if c:
        t_j += c * class_number(N // d, D)
    return (mpq(t_j2, 2**w1) - mpq(t_j, 2**w2)) / 2


def trace_series(N: int, plus: bool = False, prec: int = 64) -> QSeries:
    """T^(N) (or T^(N,+)) = -q^-4 + sum_{D>0} Tr4(D) q^D, with the
    integrality of the coefficients verified."""
    d = {-4: mpq(-1)}
    # trace coefficients live on a coarse rational grid: alpha*Z at the
    # plus levels with a known alpha, 1/24-integers otherwise (omega <= 3
    # and the halving in Tr4 bound the denominators)
    alpha = TRACE_ALPHA.get(N, mpq(1, 24)) if plus else mpq(1, 24)
    for D in range(3, prec):
        if D % 4 not in (0, 3):
            continue
        t = trace4_plus(N, D) if plus else trace4(N, D)
        if (t / alpha).denominator != 1:
            raise ArithmeticError(
                f"trace coefficient Tr4({D}) = {t} violates {alpha}*Z "
                f"integrality at level {N} (plus={plus})"
            )
        if t:
            d[D] = t
    for cache in _CACHES.values():
        cache.flush()
    return QSeries.from_dict(d, prec)
