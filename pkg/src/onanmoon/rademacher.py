"""Rademacher sums of weight 3/2: an independent numeric cross-check of
the exact series.

The weight-3/2 Kloosterman sum, for 4 | c, is

    K(m, n, c) = sum*_{d mod c} (c/d) eps_d^3 e((m dbar + n d)/c),

with eps_d = 1 for d = 1 mod 4 and i for d = 3 mod 4, (c/d) the Jacobi
symbol, and dbar the inverse of d mod c.  The Fourier coefficients of the
Rademacher sums R^[mu] of level 4N are infinite sums of K(mu, n, c) over
c = 0 mod 4N weighted by I-Bessel factors; the combination

    -R^[-4] + 2 R^[0]        (projected to the plus space for N odd)

has the same principal part -q^-4 + 2 as the exact series, so its
coefficients must agree with them.  The tails oscillate, so partial sums
are Cesaro-averaged over the last quarter of the c-range.

Two evaluators are provided: an exact single-query one (gmpy2 + mpmath,
used as the oracle) and a vectorized numpy engine that computes K(mu, n, c)
for all moduli up to c_max in bulk (Jacobi symbols and modular inverses are
evaluated elementwise on flat (c, d) arrays; per-sum results come out of
segment reductions).
"""

from __future__ import annotations

import math
from functools import lru_cache

import mpmath
import numpy as np
from gmpy2 import gcd, invert, jacobi

__all__ = [
    "kloosterman_exact",
    "kloosterman_bulk",
    "rademacher_coefficients",
    "rademacher_f_coefficients",
    "rademacher_zero_series",
    "bessel_i_half",
]


# ------------------------------------------------------ exact single query


def kloosterman_exact(m: int, n: int, c: int, dps: int | None = None):
    """K(m, n, c) as an mpmath complex number, evaluated with enough
    precision for the worst-case cancellation (~64 + log2 c bits)."""
    if c % 4:
        raise ValueError("modulus must be divisible by 4")
    bits = 64 + c.bit_length() if dps is None else int(dps * 3.33)
    with mpmath.workprec(bits):
        s = mpmath.mpc(0)
        for d in range(1, c, 2):
            if gcd(d, c) != 1:
                continue
            db = int(invert(d, c))
            e3 = mpmath.mpc(1) if d % 4 == 1 else mpmath.mpc(0, -1)
            s += (
                int(jacobi(c, d))
                * e3
                * mpmath.expjpi(mpmath.mpf(2 * ((m * db + n * d) % c)) / c)
            )
        return +s


# --------------------------------------------------------- numpy bulk path


def _phi_sieve(limit: int) -> np.ndarray:
    phi = np.arange(limit + 1, dtype=np.int64)
    for p in range(2, limit + 1):
        if phi[p] == p:  # p prime
            phi[p::p] -= phi[p::p] // p
    return phi


def _jacobi_vec(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Jacobi symbols (a/b) elementwise, b odd positive."""
    a = np.mod(a, b)
    t = np.ones(a.shape, dtype=np.int64)
    b = b.copy()
    active = a != 0
    while np.any(active):
        # strip factors of two from a
        even = active & (a % 2 == 0)
        while np.any(even):
            a[even] //= 2
            r = b[even] % 8
            t[even] = np.where((r == 3) | (r == 5), -t[even], t[even])
            even = active & (a % 2 == 0)
        # reciprocity and reduction
        swap = active
        flip = swap & (a % 4 == 3) & (b % 4 == 3)
        t[flip] = -t[flip]
        a2 = b.copy()
        b2 = a.copy()
        a[swap] = a2[swap] % b2[swap]
        b[swap] = b2[swap]
        active = (a != 0) & active
    return np.where(b == 1, t, 0)


def _inverse_vec(d: np.ndarray, c: np.ndarray, phi: np.ndarray) -> np.ndarray:
    """d^-1 mod c elementwise via Euler (d^(phi(c)-1)); values < 2^31 so
    intermediate products fit in int64."""
    e = phi - 1
    result = np.ones(d.shape, dtype=np.int64)
    base = d.copy()
    emax = int(e.max()) if e.size else 0
    while emax > 0:
        odd = (e & 1).astype(bool)
        result[odd] = result[odd] * base[odd] % c[odd]
        e >>= 1
        emax >>= 1
        if emax:
            base = base * base % c
    return result


def kloosterman_bulk(mu: int, ns, moduli, chunk_elems: int = 8_000_000):
    """K(mu, n, c) for every n in ns and every c in moduli (all 4 | c),
    returned as a complex array of shape (len(moduli), len(ns))."""
    moduli = np.asarray(moduli, dtype=np.int64)
    ns = np.asarray(ns, dtype=np.int64)
    if np.any(moduli % 4):
        raise ValueError("all moduli must be divisible by 4")
    phi_tab = _phi_sieve(int(moduli.max())) if moduli.size else None
    out = np.zeros((len(moduli), len(ns)), dtype=np.complex128)
    start = 0
    while start < len(moduli):
        stop = start
        total = 0
        while stop < len(moduli) and total + moduli[stop] <= chunk_elems:
            total += int(moduli[stop])
            stop += 1
        stop = max(stop, start + 1)
        cs_chunk = moduli[start:stop]
        # flat (c, d) arrays over odd d in [1, c)
        counts = (cs_chunk // 2).astype(np.int64)
        seg = np.repeat(np.arange(len(cs_chunk)), counts)
        c = cs_chunk[seg]
        offs = np.concatenate(([0], np.cumsum(counts)))[:-1]
        d = 2 * (np.arange(len(seg)) - offs[seg]) + 1
        keep = np.gcd(d, c) == 1
        seg, c, d = seg[keep], c[keep], d[keep]
        jac = _jacobi_vec(c.copy(), d.copy())
        dbar = _inverse_vec(d, c, phi_tab[c])
        # eps_d^3: 1 for d=1 mod 4, -i for d=3 mod 4
        w = jac * np.where(d % 4 == 1, 1, -1j)
        w = w * np.exp((2j * np.pi) * (mu * dbar % c) / c)
        z = np.exp((2j * np.pi) * d / c)
        nseg = len(cs_chunk)
        zp = z ** int(ns[0])
        for i, n in enumerate(ns):
            if i:
                zp = zp * z ** int(ns[i] - ns[i - 1])
            term = w * zp
            out[start:stop, i] = np.bincount(
                seg, weights=term.real, minlength=nseg
            ) + 1j * np.bincount(seg, weights=term.imag, minlength=nseg)
        start = stop
    return out


# ------------------------------------------------------- Fourier expansion


def bessel_i_half(x: float) -> float:
    """I_{1/2}(x) = sqrt(2/(pi x)) sinh(x), exactly."""
    return math.sqrt(2.0 / (math.pi * x)) * math.sinh(x)


def _cesaro_tail(partial: np.ndarray) -> float:
    """Average of the last quarter of the partial sums."""
    k = max(1, len(partial) // 4)
    return float(np.mean(partial[-k:]))


@lru_cache(maxsize=None)
def _bulk_cached(mu: int, ns: tuple, level: int, c_max: int):
    from .cache import JsonCache

    cs = np.arange(level, c_max + 1, level, dtype=np.int64)
    cache = JsonCache(f"kloosterman_{level}_{mu}.json")
    key = f"{c_max}:{','.join(map(str, ns))}"
    hit = cache.get(key)
    if hit is not None:
        K = np.array(hit[0]) + 1j * np.array(hit[1])
    else:
        K = kloosterman_bulk(mu, list(ns), cs)
        cache.put(key, [K.real.tolist(), K.imag.tolist()])
        cache.flush()
    return cs, K


def rademacher_coefficients(
    N: int, ns, mu: int = -4, c_max: int = 100_000
) -> dict[int, float]:
    """Cesaro-averaged coefficients of R^[mu] at level 4N.

    For odd N this is the plus-space projection (extra cusp contributions
    enter with the factor 1 + delta_odd(Nc)); for even N the Rademacher sum
    lies in the plus space on its own and the plain expansion applies.
    """
    ns = tuple(sorted(ns))
    cs, K = _bulk_cached(mu, ns, 4 * N, c_max)
    out = {}
    for i, n in enumerate(ns):
        pref = 2 * math.pi * complex(
            math.cos(-0.75 * math.pi), math.sin(-0.75 * math.pi)
        )
        if mu == 0:
            pref *= math.sqrt(2 * math.pi * n) / math.gamma(1.5)
            terms = cs.astype(np.float64) ** -1.5
        else:
            pref *= (n / abs(mu)) ** 0.25
            x = 4 * math.pi * math.sqrt(abs(mu) * n) / cs
            terms = np.sqrt(2.0 / (np.pi * x)) * np.sinh(x) / cs
        if N % 2:  # plus-space projection doubles the odd-(c/4) terms
            terms = terms * np.where((cs // 4) % 2 == 1, 2.0, 1.0)
        partial = np.cumsum((pref * K[:, i] * terms).real)
        out[n] = _cesaro_tail(partial)
    return out


def rademacher_f_coefficients(
    N: int, ns, c_max: int = 100_000
) -> dict[int, float]:
    """Numeric coefficients of -R^[-4] + 2 R^[0] at level 4N: the
    Rademacher approximation to the exact weight-3/2 series for a class
    of order N."""
    ns = tuple(sorted(ns))
    c4 = rademacher_coefficients(N, ns, mu=-4, c_max=c_max)
    c0 = rademacher_coefficients(N, ns, mu=0, c_max=c_max)
    return {n: -c4[n] + 2 * c0[n] for n in ns}


def rademacher_zero_series(N: int, ns, c_max: int = 100_000) -> dict[int, float]:
    """Coefficients of R^[0] at level 4N (whose exact values are a rational
    combination of generalized class numbers)."""
    return rademacher_coefficients(N, tuple(sorted(ns)), mu=0, c_max=c_max)
