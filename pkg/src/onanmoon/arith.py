"""Arithmetic consequences of the exact series: linear congruences between
the F series, class-number congruences for the graded dimensions, and the
twisted class-number columns attached to the conductor-14 and -15 curves.

Everything here is exact (gmpy2 rationals); functions either return residue
data for inspection or raise AssertionError with the first offending
exponent, so they double as test oracles.
"""

from __future__ import annotations

import math

from gmpy2 import kronecker, mpq

from .chartable import character_value
from .mtseries import mt_coefficient_at, mt_series
from .quadforms import hurwitz_class_number, class_number

__all__ = [
    "CONGRUENCES",
    "verify_congruences",
    "verify_theta_congruence",
    "is_fundamental",
    "class_number_congruence_scan",
    "twisted_class_number",
    "twist_column",
    "monster_dimension_identity",
]

# (label, {series key: integer coefficient}, modulus[, residues]); each
# combination is congruent to 0 at every exponent (principal part and
# constant included), or — when a residue tuple is given — at every
# exponent in those classes mod 4.  The order-7/14 sum is the one case
# with a genuine parity split: it is divisible by 8 on the odd part of
# the support grid (n = 3 mod 4) but only even on the other (n = 0 mod 4,
# including the principal part, where it equals -2).
CONGRUENCES = [
    ("31", {"F1A": 1, "F31AB": -1}, 31),
    ("19", {"F1A": 1, "F19ABC": -1}, 19),
    ("11", {"F1A": 1, "F11A": -1}, 11),
    ("7a", {"F1A": 1, "F7AB": -1}, 7**3),
    ("7b", {"F2A": 1, "F14A": -1}, 7),
    ("7c", {"F4AB": 1, "F28AB": -1}, 7),
    ("5a", {"F1A": 1, "F5A": -1}, 5**3),
    ("5b", {"F2A": 1, "F10A": -1}, 5),
    ("5c", {"F3A": 1, "F15AB": -1}, 5),
    ("5d", {"F4AB": 1, "F20AB": -1}, 5),
    ("3a", {"F1A": 1, "F3A": -1}, 3**5),
    ("3b", {"F2A": 1, "F6A": -1}, 3**2),
    ("3c", {"F4AB": 1, "F12A": -1}, 3**2),
    ("3d", {"F5A": 1, "F15AB": -1}, 3**2),
    (
        "2a",
        {"F1A": 1, "F2A": 303, "F4AB": 3024, "F8AB": 4864, "F16ABCD": 57344},
        2**16,
    ),
    ("2b", {"F2A": 1, "F4AB": 7, "F8AB": 8, "F16ABCD": 112}, 2**7),
    ("2c", {"F3A": 1, "F6A": 1, "F12A": 6}, 2**3),
    ("2d", {"F4AB": 1, "F8AB": 1, "F16ABCD": 14}, 2**4),
    ("2e", {"F5A": 1, "F10A": 1, "F20AB": 6}, 2**3),
    ("2f", {"F6A": 1, "F12A": 1}, 2),
    ("2g", {"F7AB": 1, "F14A": 1}, 2**3, (3,)),
    ("2g0", {"F7AB": 1, "F14A": 1}, 2, (0,)),
    ("2h", {"F8AB": 1, "F16ABCD": 7}, 2**3),
    ("2i", {"F10A": 1, "F20AB": 1}, 2),
    ("2j", {"F14A": 1, "F28AB": 1}, 2),
]


def verify_congruences(n_max: int = 250) -> dict[str, int]:
    """Check every linear congruence at all exponents -4 <= n <= n_max.
    Returns {label: modulus}; raises on the first violation."""
    prec = n_max + 1
    series = {}
    for entry in CONGRUENCES:
        for key in entry[1]:
            if key not in series:
                series[key] = mt_series(key, prec)
    checked = {}
    for entry in CONGRUENCES:
        label, combo, modulus = entry[0], entry[1], entry[2]
        residues = entry[3] if len(entry) > 3 else (0, 3)
        for n in range(-4, n_max + 1):
            if n % 4 not in residues:
                continue
            total = sum(c * series[key].coefficient(n) for key, c in combo.items())
            assert total.denominator == 1
            if int(total) % modulus:
                raise AssertionError(
                    f"congruence {label} fails at q^{n}: "
                    f"{int(total)} != 0 mod {modulus}"
                )
        checked[label] = modulus
    return checked


def _r3(n: int) -> int:
    """Number of representations of n as a sum of three squares."""
    count = 0
    b = math.isqrt(n)
    for x in range(-b, b + 1):
        r = n - x * x
        bx = math.isqrt(r)
        for y in range(-bx, bx + 1):
            s = r - y * y
            z = math.isqrt(s)
            if z * z == s:
                count += 2 if z else 1
    return count


def verify_theta_congruence(n_max: int = 1000) -> None:
    """4 H(n/4) = r_3(n/16) = [n/16 is a square] (mod 4) coefficientwise:
    the generating-function congruence that controls the power-of-two
    congruences involving the order-16 series."""
    for n in range(n_max + 1):
        a = 4 * hurwitz_class_number(n // 4) if n % 4 == 0 else mpq(0)
        # the constant term -1/3 is a 2-adic integer; reduce mod 4 as such
        ra = int(a.numerator) * pow(int(a.denominator), -1, 4) % 4
        b = _r3(n // 16) if n % 16 == 0 else 0
        if n % 16 == 0 and math.isqrt(n // 16) ** 2 == n // 16:
            c = 1 if n == 0 else 2
        else:
            c = 0
        if (ra - b) % 4 or (b - c) % 4:
            raise AssertionError(
                f"theta congruence fails at q^{n}: {ra}, {b}, {c} mod 4"
            )


def is_fundamental(minus_d: int) -> bool:
    """True if minus_d < 0 is a fundamental discriminant."""
    if minus_d >= 0:
        return False
    d = -minus_d
    if d % 4 == 3:
        m = d
    elif d % 4 == 0 and (d // 4) % 4 in (1, 2):
        m = d // 4
    else:
        return False
    return all(m % (p * p) for p in range(2, math.isqrt(m) + 1))


def class_number_congruence_scan(d_max: int = 500) -> dict[int, list[int]]:
    """Scan fundamental -D with D <= d_max for the class-number congruences:

      * D even, D > 8:  dim W_D = tr(g_2|W_D) = -24 H(D) = 0  (mod 16)
      * (-D/p) = -1, p in {3,5,7}:  dim W_D = tr(g_p|W_D) = -24 H(D)
        modulo 9 for p = 3 and modulo p for p = 5, 7
      * (-D/13) = -1:  dim W_D = -24 H(D)  (mod 13)

    Returns {p: [list of D checked]}; raises on any violation."""
    prec = d_max + 1
    dims = mt_series("F1A", prec)
    tr = {p: mt_series(k, prec) for p, k in
          ((2, "F2A"), (3, "F3A"), (5, "F5A"), (7, "F7AB"))}
    checked: dict[int, list[int]] = {2: [], 3: [], 5: [], 7: [], 13: []}
    for D in range(3, d_max + 1):
        if not is_fundamental(-D):
            continue
        dim = int(dims.coefficient(D))
        h24 = -24 * hurwitz_class_number(D)
        assert h24.denominator == 1
        h24 = int(h24)
        if D % 2 == 0 and D > 8:
            t = int(tr[2].coefficient(D))
            if (dim - t) % 16 or (t - h24) % 16 or h24 % 16:
                raise AssertionError(f"mod-16 congruence fails at D={D}")
            checked[2].append(D)
        for p in (3, 5, 7):
            if kronecker(-D, p) == -1:
                m = 9 if p == 3 else p
                t = int(tr[p].coefficient(D))
                if (dim - t) % m or (t - h24) % m:
                    raise AssertionError(f"mod-{m} congruence fails at D={D}")
                checked[p].append(D)
        if kronecker(-D, 13) == -1:
            if (dim - h24) % 13:
                raise AssertionError(f"mod-13 congruence fails at D={D}")
            checked[13].append(D)
    return checked


def twisted_class_number(N: int, D: int) -> mpq:
    """The twisted class-number combination attached to the conductor-N
    curve (N = 14 or 15): delta_p (H(D) - delta_p H^(p')(D)) with p the
    prime >= 5 dividing N, p' = N/p and delta_p = (p-1)/2."""
    p = max(q for q in (5, 7) if N % q == 0)
    pp = N // p
    dp = (p - 1) // 2
    return dp * (hurwitz_class_number(D) - dp * class_number(pp, D))


def twist_column(N: int, D: int) -> tuple[int, int, int]:
    """(tr(g_p'|W_D), twisted class number, difference mod p) for the
    conductor-N curve rows, computed exactly at the single exponent D."""
    p = max(q for q in (5, 7) if N % q == 0)
    pp = N // p
    tr = int(mt_coefficient_at(f"{pp}A", D))
    h = twisted_class_number(N, D)
    assert h.denominator == 1
    return tr, int(h), (tr - int(h)) % p


def monster_dimension_identity() -> bool:
    """McKay-style numerology: the first coefficient of the elliptic
    modular invariant decomposes against the degrees of the smallest
    irreducibles as 196884 = 5*1 + 2*26752 + 58311 + 85064, with all four
    degrees read off the character table."""
    degrees = {
        int(character_value(i, "1A").as_rational()) for i in range(1, 31)
    }
    return (
        {1, 26752, 58311, 85064} <= degrees
        and 5 * 1 + 2 * 26752 + 58311 + 85064 == 196884
    )
