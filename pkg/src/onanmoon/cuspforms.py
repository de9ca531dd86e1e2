"""Cusp-form q-expansions: rational newforms from elliptic-curve point
counts, and the shipped weight-3/2 data files.

The six weight-3/2 forms (g11, g14, g15, g19, g28, g31) and the level-31
weight-2 eigenform f31 over Q(sqrt5) are loaded from
``data/cuspforms.json`` (regenerated by ``tools/generate_cuspforms.py``).
"""

from __future__ import annotations

import hashlib
import json
from functools import lru_cache
from importlib import resources

from gmpy2 import mpq

from .qseries import QSeries

__all__ = [
    "curve_ap",
    "newform_coefficients",
    "newform_series",
    "CURVES",
    "load_cuspform_data",
    "cusp_form",
    "f31_components",
]

# Weierstrass coefficients [a1, a2, a3, a4, a6] of the rational newform
# carriers used here, keyed by conductor.
CURVES = {
    11: (0, -1, 1, -10, -20),
    14: (1, 0, 1, 4, -6),
    15: (1, 1, 1, -10, -10),
    19: (0, 1, 1, -9, -15),
}


def curve_ap(ainvs: tuple[int, int, int, int, int], p: int) -> int:
    """Trace of Frobenius a_p = p + 1 - #E(F_p) by direct counting.

    Counting the projective points of the (possibly singular) Weierstrass
    model also gives the correct a_p = +-1 at primes of multiplicative
    reduction, so this is valid for all p when the conductor is squarefree.
    """
    a1, a2, a3, a4, a6 = ainvs
    if p <= 3:
        n = 1  # point at infinity
        for x in range(p):
            for y in range(p):
                if (
                    y * y + a1 * x * y + a3 * y - (x**3 + a2 * x * x + a4 * x + a6)
                ) % p == 0:
                    n += 1
        return p + 1 - n
    # complete the square: (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    chi = bytearray(p)  # chi[v] = legendre(v, p) + 1 in {0,1,2}
    for t in range(1, (p + 1) // 2):
        chi[(t * t) % p] = 2
    chi[0] = 1
    s = 0
    for x in range(p):
        v = (4 * x**3 + b2 * x * x + 2 * b4 * x + b6) % p
        s += chi[v] - 1
    return -s


@lru_cache(maxsize=None)
def _ap_cache(conductor: int, p: int) -> int:
    return curve_ap(CURVES[conductor], p)


def newform_coefficients(conductor: int, prec: int) -> list[int]:
    """[a_0 = 0, a_1 = 1, ..., a_{prec-1}] of the weight-2 newform attached
    to the curve of the given conductor, via Hecke multiplicativity."""
    a = [0] * max(prec, 2)
    a[1] = 1
    # smallest prime factor sieve
    spf = list(range(prec))
    for p in range(2, prec):
        if spf[p] == p:
            for m in range(p * p, prec, p):
                if spf[m] == m:
                    spf[m] = p
    for n in range(2, prec):
        p = spf[n]
        m, k = n, 0
        while m % p == 0:
            m //= p
            k += 1
        if m > 1:
            a[n] = a[m] * a[n // m]
            continue
        ap = _ap_cache(conductor, p)
        if conductor % p == 0:
            a[n] = ap**k
        elif k == 1:
            a[n] = ap
        else:
            a[n] = ap * a[n // p] - p * a[n // (p * p)]
    return a[:prec]


def newform_series(conductor: int, prec: int) -> QSeries:
    return QSeries(1, newform_coefficients(conductor, prec)[1:], prec)


# -------------------------------------------------------- shipped data file


def _data_path():
    return resources.files("onanmoon.data").joinpath("cuspforms.json")


@lru_cache(maxsize=1)
def load_cuspform_data() -> dict:
    """Load and integrity-check the cusp-form data file."""
    raw = _data_path().read_text()
    doc = json.loads(raw)
    if doc.get("schema_version") != 1:
        raise ValueError("unsupported cuspforms.json schema")
    payload = json.dumps(doc["forms"], sort_keys=True, separators=(",", ":"))
    digest = hashlib.sha256(payload.encode()).hexdigest()
    if digest != doc["sha256"]:
        raise ValueError("cuspforms.json failed its integrity check")
    return doc


def cusp_form(name: str, prec: int) -> QSeries:
    """A rational-coefficient cusp form from the data file (g11, g14, g15,
    g19, g28, g31), truncated to O(q^prec)."""
    doc = load_cuspform_data()
    rec = doc["forms"][name]
    if prec > rec["prec"]:
        raise ValueError(
            f"{name} is shipped to O(q^{rec['prec']}); requested O(q^{prec})."
            " Regenerate data with tools/generate_cuspforms.py."
        )
    d = {n: mpq(num, den) for n, num, den in rec["coeffs"] if n < prec}
    return QSeries.from_dict(d, prec)


def f31_components(prec: int) -> tuple[QSeries, QSeries]:
    """The level-31 weight-2 eigenform f = A + B*sqrt5 over Q(sqrt5),
    returned as the rational series (A, B) = ((f+f^s)/2, (f-f^s)/(2 sqrt5))."""
    doc = load_cuspform_data()
    rec = doc["forms"]["f31"]
    if prec > rec["prec"]:
        raise ValueError(
            f"f31 is shipped to O(q^{rec['prec']}); requested O(q^{prec})."
            " Regenerate data with tools/generate_cuspforms.py."
        )
    da, db = {}, {}
    for n, rn, rd, sn, sd in rec["coeffs"]:
        if n < prec:
            da[n] = mpq(rn, rd)
            db[n] = mpq(sn, sd)
    return QSeries.from_dict(da, prec), QSeries.from_dict(db, prec)
