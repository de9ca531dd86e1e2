"""Exact q-expansions of Dedekind eta quotients.

eta(tau) = q^(1/24) * prod_{n>=1} (1 - q^n).  An eta quotient
prod_d eta(d*tau)^{r_d} is an honest q-series whenever
sum_d d*r_d = 0 (mod 24); this module only builds those.
"""

from __future__ import annotations

from typing import Mapping

from .qseries import QSeries

__all__ = ["euler_product", "eta_quotient", "theta_weight_half"]


def euler_product(prec: int) -> QSeries:
    """prod_{n>=1} (1 - q^n) via Euler's pentagonal number theorem."""
    d = {0: 1}
    k = 1
    while True:
        e1 = k * (3 * k - 1) // 2
        e2 = k * (3 * k + 1) // 2
        if e1 >= prec and e2 >= prec:
            break
        s = 1 if k % 2 == 0 else -1
        if e1 < prec:
            d[e1] = s
        if e2 < prec:
            d[e2] = s
        k += 1
    return QSeries.from_dict(d, prec)


def eta_quotient(factors: Mapping[int, int], prec: int) -> QSeries:
    """Exact expansion of prod_d eta(d*tau)^{r_d} to O(q^prec).

    `factors` maps the dilation d to the exponent r_d.  The total
    q^(sum d*r_d/24) prefactor must be an integer power of q.
    """
    e24 = sum(d * r for d, r in factors.items())
    if e24 % 24 != 0:
        raise ValueError(f"eta quotient has fractional leading exponent {e24}/24")
    shift = e24 // 24
    # work to enough internal precision that the final shifted series
    # is correct to O(q^prec)
    inner_prec = prec - shift
    if inner_prec <= 0:
        return QSeries.zero(prec)
    result = QSeries.one(inner_prec)
    for d, r in sorted(factors.items()):
        if r == 0:
            continue
        need = (inner_prec + d - 1) // d
        p = euler_product(need).dilate(d).truncate(inner_prec)
        result = result * p**r
    return result.shift(shift)


def theta_weight_half(prec: int) -> QSeries:
    """The weight-1/2 theta series sum_{n in Z} q^(n^2).

    Equal to the eta quotient eta(2t)^5 / (eta(t)^2 eta(4t)^2); the direct
    sum is used and the identity is exercised in tests.
    """
    d = {}
    n = 0
    while n * n < prec:
        d[n * n] = 1 if n == 0 else 2
        n += 1
    return QSeries.from_dict(d, prec)
