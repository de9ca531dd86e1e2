"""Positive-definite binary quadratic forms, Hurwitz class numbers, and
Gamma_0(N)-orbits of Heegner forms.

Forms [a,b,c] represent a x^2 + b xy + c y^2 with discriminant b^2-4ac = -D.
Hurwitz weights: a class counts 1/3 if it is a multiple of x^2+xy+y^2,
1/2 for a multiple of x^2+y^2, else 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from gmpy2 import mpq

from .qseries import QSeries

__all__ = [
    "reduce_form",
    "reduced_forms",
    "automorphism_group",
    "hurwitz_class_number",
    "index_gamma0",
    "HeegnerOrbit",
    "heegner_orbits",
    "class_number",
    "class_number_series",
    "class_number_bound",
    "bound_constant",
]


def reduce_form(a: int, b: int, c: int) -> tuple[int, int, int]:
    """SL2(Z)-reduce a positive definite form: |b| <= a <= c, and b >= 0
    whenever |b| == a or a == c."""
    if a <= 0 or b * b - 4 * a * c >= 0:
        raise ValueError(f"not positive definite: [{a},{b},{c}]")
    while True:
        if not (-a < b <= a):
            k = (a - b) // (2 * a)
            b2 = b + 2 * a * k
            c = c + k * (b + a * k)
            b = b2
        if a > c:
            a, b, c = c, -b, a
            continue
        if a == c and b < 0:
            b = -b
        return a, b, c


def reduced_forms(D: int) -> list[tuple[int, int, int]]:
    """All SL2(Z)-reduced forms of discriminant -D (D > 0, D = 0,3 mod 4),
    including imprimitive ones, sorted."""
    if D <= 0:
        raise ValueError("D must be positive")
    if D % 4 not in (0, 3):
        return []
    forms = []
    b = D % 2
    while b * b <= D:
        m = D + b * b
        a = max(b, 1)
        while 4 * a * a <= m:
            if m % (4 * a) == 0:
                c = m // (4 * a)
                if c >= a:
                    forms.append((a, b, c))
                    if 0 < b < a < c:
                        forms.append((a, -b, c))
            a += 1
        b += 2
    forms.sort()
    return forms


def automorphism_group(a: int, b: int, c: int) -> list[tuple[int, int, int, int]]:
    """Aut(Q) < SL2(Z) fixing the form, including -I: order 6 for multiples
    of x^2+xy+y^2, 4 for multiples of x^2+y^2, else {+-I}.  Matrices are
    returned row-major (p, q, r, s)."""
    mats = []
    lam_min = _lambda_min(a, b, c)
    B = int(math.isqrt(int(max(a, c) / lam_min))) + 2
    for p in range(-B, B + 1):
        for r in range(-B, B + 1):
            if a * p * p + b * p * r + c * r * r != a:
                continue
            qs = _second_column(a, b, c, p, r, b, c)
            if qs is not None:
                mats.append((p, qs[0], r, qs[1]))
    return mats


def _lambda_min(a: int, b: int, c: int) -> float:
    """Smallest eigenvalue of the Gram matrix [[a, b/2], [b/2, c]]."""
    return (a + c - math.sqrt((a - c) * (a - c) + b * b)) / 2.0


def _second_column(a, b, c, p, r, target_b, target_c):
    """Given the first column (p, r) of gamma, solve for (q, s) with
    det = 1 and (Q o gamma) having middle/last coefficients target_b/c."""
    A11 = 2 * a * p + b * r
    A12 = b * p + 2 * c * r
    det = A11 * p + A12 * r  # = 2 * Q(p, r)
    if det == 0:
        return None
    qn = target_b * p - A12
    sn = A11 + target_b * r
    if qn % det or sn % det:
        return None
    q, s = qn // det, sn // det
    if p * s - q * r != 1:
        return None
    if a * q * q + b * q * s + c * s * s != target_c:
        return None
    return q, s


def _hurwitz_weight(a: int, b: int, c: int) -> int:
    if a == b == c:
        return 3
    if b == 0 and a == c:
        return 2
    return 1


@lru_cache(maxsize=None)
def hurwitz_class_number(D: int) -> mpq:
    """Hurwitz class number H(D) for discriminant -D; H(0) = -1/12."""
    if D == 0:
        return mpq(-1, 12)
    if D < 0 or D % 4 in (1, 2):
        return mpq(0)
    total = mpq(0)
    for a, b, c in reduced_forms(D):
        total += mpq(1, _hurwitz_weight(a, b, c))
    return total


def _prime_divisors(N: int) -> list[int]:
    ps = []
    n, p = N, 2
    while p * p <= n:
        if n % p == 0:
            ps.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        ps.append(n)
    return ps


def index_gamma0(N: int) -> int:
    """Index of Gamma_0(N) in SL2(Z): N prod_{p|N} (1 + 1/p)."""
    mu = N
    for p in _prime_divisors(N):
        mu = mu // p * (p + 1)
    return mu


# ----------------------------------------------------------- Heegner orbits


@dataclass(frozen=True)
class HeegnerOrbit:
    """A Gamma_0(N)-orbit of forms [a,b,c] with N | a, disc -D; omega in
    {1,2,3} is the orbit's stabilizer order (the orbit counts 1/omega)."""

    a: int
    b: int
    c: int
    omega: int


def _p1_points(N: int) -> list[tuple[int, int]]:
    if N == 1:
        return [(0, 1)]
    pts, seen = [], set()
    for u in range(N):
        for v in range(N):
            if math.gcd(math.gcd(u, v), N) != 1:
                continue
            key = _p1_normalize(u, v, N)
            if key not in seen:
                seen.add(key)
                pts.append(key)
    return pts


@lru_cache(maxsize=None)
def _units(N: int) -> tuple[int, ...]:
    return tuple(t for t in range(1, N + 1) if math.gcd(t, N) == 1)


def _p1_normalize(u: int, v: int, N: int) -> tuple[int, int]:
    if N == 1:
        return (0, 1)
    u %= N
    v %= N
    return min(((u * t) % N, (v * t) % N) for t in _units(N))


def gamma0_equivalent(
    f1: tuple[int, int, int], f2: tuple[int, int, int], N: int
) -> bool:
    """Whether gamma in Gamma_0(N) exists with f1 o gamma = f2."""
    a1, b1, c1 = f1
    a2, b2, c2 = f2
    if b1 * b1 - 4 * a1 * c1 != b2 * b2 - 4 * a2 * c2:
        return False
    # first column (p, r) of gamma satisfies f1(p, r) = a2, N | r
    lam = max(_lambda_min(a1, b1, c1), 1e-9)
    rmax = int(math.sqrt(a2 / lam)) + 1
    for rr in range(0, rmax + 1, N):
        for r in {rr, -rr}:
            # a1 p^2 + (b1 r) p + (c1 r^2 - a2) = 0
            disc = b1 * b1 * r * r - 4 * a1 * (c1 * r * r - a2)
            if disc < 0:
                continue
            sq = math.isqrt(disc)
            if sq * sq != disc:
                continue
            for sgn in (sq, -sq):
                num = -b1 * r + sgn
                if num % (2 * a1):
                    continue
                p = num // (2 * a1)
                if math.gcd(p, r) != 1:
                    continue
                if _second_column(a1, b1, c1, p, r, b2, c2) is not None:
                    return True
    return False


def _form_at_column(a: int, b: int, c: int, p: int, r: int) -> tuple[int, int, int]:
    """(Q o gamma) for any gamma in SL2(Z) with first column (p, r)."""
    g, x, y = _gcdext(p, r)
    assert g == 1
    q, s = -y, x
    fa = a * p * p + b * p * r + c * r * r
    fb = 2 * a * p * q + b * (p * s + q * r) + 2 * c * r * s
    fc = a * q * q + b * q * s + c * s * s
    return fa, fb, fc


def _gcdext(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_s, s = s, old_s - qt * s
        old_t, t = t, old_t - qt * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _translate_normalize(a: int, b: int, c: int) -> tuple[int, int, int]:
    """Normalize b into (-a, a] by tau -> tau + k (always in Gamma_0(N))."""
    k = (a - b) // (2 * a)
    return a, b + 2 * a * k, c + k * (b + a * k)


def _canonical_representative(
    rep: tuple[int, int, int], N: int, D: int
) -> tuple[int, int, int]:
    """Deterministic representative of the Gamma_0(N)-orbit of `rep`:
    smallest leading coefficient (a multiple of N), then smallest b in
    (-a, a]."""
    rep = _translate_normalize(*rep)
    best = rep
    a = N
    while a <= best[0]:
        for b in range(-a + 1, a + 1):
            m = b * b + D
            if m % (4 * a):
                continue
            cand = (a, b, m // (4 * a))
            if gamma0_equivalent(rep, cand, N):
                if (cand[0], cand[1]) < (best[0], best[1]):
                    best = cand
                break
        else:
            a += N
            continue
        break
    return best


@lru_cache(maxsize=None)
def heegner_orbits(N: int, D: int) -> tuple[HeegnerOrbit, ...]:
    """Gamma_0(N)-orbit representatives of forms [a,b,c], N | a, disc -D.

    Within one SL2(Z)-class Q, the Gamma_0(N)-orbits correspond to the
    orbits of Aut(Q) acting on the points (p : r) of P^1(Z/N) with
    Q(p, r) = 0 mod N; omega is the point stabilizer order in Aut(Q)/{+-1}.
    """
    if D <= 0 or D % 4 in (1, 2):
        return ()
    out = []
    p1 = _p1_points(N)
    for (a, b, c) in reduced_forms(D):
        aut = automorphism_group(a, b, c)
        pts = [(u, v) for (u, v) in p1 if (a * u * u + b * u * v + c * v * v) % N == 0]
        remaining = set(pts)
        while remaining:
            seed = min(remaining)
            orbit = set()
            stack = [seed]
            while stack:
                u, v = stack.pop()
                key = _p1_normalize(u, v, N)
                if key in orbit:
                    continue
                orbit.add(key)
                for (mp, mq, mr, ms) in aut:
                    stack.append(((mp * u + mq * v) % N, (mr * u + ms * v) % N))
            remaining -= orbit
            half_aut = len(aut) // 2
            if half_aut % len(orbit):
                raise RuntimeError("automorphism orbit size inconsistency")
            omega = half_aut // len(orbit)
            u, v = _lift_point(seed, N, (a, b, c))
            fa, fb, fc = _form_at_column(a, b, c, u, v)
            if fa % N or fa <= 0:
                raise RuntimeError("lifted representative is not a Heegner form")
            out.append(HeegnerOrbit(*_canonical_representative((fa, fb, fc), N, D), omega))
    out.sort(key=lambda o: (o.a, o.b, o.c))
    return tuple(out)


def _lift_point(pt: tuple[int, int], N: int, form: tuple[int, int, int]) -> tuple[int, int]:
    """Lift (u:v) in P^1(Z/N) to coprime integers with Q(u, v) = 0 mod N."""
    a, b, c = form
    u0, v0 = pt
    for du in range(0, 2 * N + 2):
        for dv in range(0, 2 * N + 2):
            u, v = u0 + du * N, v0 + dv * N
            if math.gcd(u, v) == 1 and (a * u * u + b * u * v + c * v * v) % N == 0:
                return u, v
    raise RuntimeError("failed to lift projective point")


def class_number(N: int, D: int) -> mpq:
    """Generalized class number H^(N)(D) = sum over Heegner orbits of
    1/omega; H^(N)(0) = -[SL2(Z):Gamma_0(N)]/12."""
    if D == 0:
        return mpq(-index_gamma0(N), 12)
    if N == 1:
        return hurwitz_class_number(D)
    if D < 0 or D % 4 in (1, 2):
        return mpq(0)
    return sum((mpq(1, o.omega) for o in heegner_orbits(N, D)), mpq(0))


def class_number_series(N: int, prec: int) -> QSeries:
    """H^(N) = H^(N)(0) + sum_{D>0} H^(N)(D) q^D to O(q^prec)."""
    d = {0: class_number(N, 0)}
    for D in range(3, prec):
        if D % 4 in (0, 3):
            h = class_number(N, D)
            if h:
                d[D] = h
    return QSeries.from_dict(d, prec)


def class_number_bound(N: int, D: int, eps: float = 0.125) -> float:
    """Explicit bound H^(N)(D) <= index * c_eps * D^eps * (sqrt(D)/2pi)
    * (1 + log(D)/2)."""
    return (
        index_gamma0(N)
        * bound_constant(eps)
        * D**eps
        * (math.sqrt(D) / (2 * math.pi))
        * (1 + math.log(D) / 2)
    )


def bound_constant(eps: float = 0.125) -> float:
    """c_eps = prod_{p < e^(1/(2 eps))} (2 eps p^(1/log p - 2 eps) log p)^(-1)."""
    cutoff = math.exp(1 / (2 * eps))
    c = 1.0
    p = 2
    while p < cutoff:
        if all(p % q for q in range(2, int(math.isqrt(p)) + 1)):
            c /= 2 * eps * p ** (1 / math.log(p) - 2 * eps) * math.log(p)
        p += 1
    return c
