"""Eisenstein series E2, E4, E6 and divisor-sum coefficient tables."""

from __future__ import annotations

from gmpy2 import mpz

from .qseries import QSeries

__all__ = ["sigma_table", "eisenstein", "E2", "E4", "E6", "delta_series"]


def sigma_table(k: int, prec: int) -> list:
    """[sigma_k(0)=0, sigma_k(1), ..., sigma_k(prec-1)] by sieving."""
    s = [mpz(0)] * max(prec, 1)
    for d in range(1, prec):
        dk = mpz(d) ** k
        for n in range(d, prec, d):
            s[n] += dk
    return s


# normalized E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n
_EIS_FACTOR = {2: -24, 4: 240, 6: -504}


def eisenstein(k: int, prec: int) -> QSeries:
    if k not in _EIS_FACTOR:
        raise ValueError("only E2, E4, E6 are provided")
    f = _EIS_FACTOR[k]
    sig = sigma_table(k - 1, prec)
    d = {0: 1}
    for n in range(1, prec):
        d[n] = f * sig[n]
    return QSeries.from_dict(d, prec)


def E2(prec: int) -> QSeries:
    return eisenstein(2, prec)


def E4(prec: int) -> QSeries:
    return eisenstein(4, prec)


def E6(prec: int) -> QSeries:
    return eisenstein(6, prec)


def delta_series(prec: int) -> QSeries:
    """The discriminant cusp form Delta = eta^24 = (E4^3 - E6^2)/1728."""
    from .eta import eta_quotient

    return eta_quotient({1: 24}, prec)
