"""Hauptmoduln of the genus-zero groups Gamma_0(N) and Gamma_0(N)+,
normalized to q^-1 + 0 + O(q), and their index-2 companions.

Every hauptmodul is described by one of four recipes:
  * an eta quotient plus a constant                      (most levels)
  * E4^3/Delta - 744                                     (level 1)
  * -(combination of E2(d tau)) / (c * eta product) + k  (11+, 14+, 15+, 19+)
  * a ratio built from the level-31 eigenform over Q(sqrt5)   (31+)
For 7+ and 10+ (needed as sub-levels of 14+ and 20+) the hauptmodul is the
symmetrization sum_Q J|W_Q over all Atkin-Lehner involutions W_Q,
normalized; each W_Q image of a weight-0 eta quotient is again an eta
quotient (divisors d -> dQ/gcd(d,Q)^2) times a rational multiplier.
"""

from __future__ import annotations

from functools import lru_cache

from gmpy2 import mpq

from .eisenstein import E2, eisenstein
from .eta import eta_quotient
from .qseries import QSeries

__all__ = [
    "ETA_HAUPTMODUL",
    "PLUS_ETA_HAUPTMODUL",
    "PLUS_E2_HAUPTMODUL",
    "SYM_PLUS_HAUPTMODUL",
    "GENUS_ZERO_LEVELS",
    "PLUS_LEVELS",
    "hauptmodul_series",
    "index2_constants",
    "index2_series",
]

# level -> (eta exponents {d: r_d}, additive constant)
ETA_HAUPTMODUL = {
    2: ({1: 24, 2: -24}, 24),
    3: ({1: 12, 3: -12}, 12),
    4: ({1: 8, 4: -8}, 8),
    5: ({1: 6, 5: -6}, 6),
    6: ({1: 5, 3: 1, 2: -1, 6: -5}, 5),
    7: ({1: 4, 7: -4}, 4),
    8: ({1: 4, 4: 2, 2: -2, 8: -4}, 4),
    10: ({1: 3, 5: 1, 2: -1, 10: -3}, 3),
    12: ({1: 3, 4: 1, 6: 2, 2: -2, 3: -1, 12: -3}, 3),
    16: ({1: 2, 8: 1, 2: -1, 16: -2}, 2),
}

# plus levels given directly by eta quotients
PLUS_ETA_HAUPTMODUL = {
    20: ({2: 8, 10: 8, 1: -4, 4: -4, 5: -4, 20: -4}, -4),
    28: ({2: 6, 14: 6, 1: -3, 4: -3, 7: -3, 28: -3}, -3),
}

# plus levels of the form -(sum w_d E2(d tau)) / (scale * eta product) + k
PLUS_E2_HAUPTMODUL = {
    11: ({1: 1, 11: -11}, {1: 2, 11: 2}, 10, mpq(-22, 5)),
    14: ({1: 1, 2: 2, 7: -7, 14: -14}, {1: 1, 2: 1, 7: 1, 14: 1}, 18, mpq(-7, 3)),
    15: ({1: 1, 3: 3, 5: -5, 15: -15}, {1: 1, 3: 1, 5: 1, 15: 1}, 16, mpq(-5, 2)),
}

# plus levels built as sum over all Atkin-Lehner images of the non-plus
# eta quotient: list of (eta exponents, multiplier), plus a normalizing
# constant.  The paper-side symmetrization sum_Q J^(N)|W_Q differs from the
# normalized hauptmodul by INNER constants recorded in traces.py.
SYM_PLUS_HAUPTMODUL = {
    7: ([({1: 4, 7: -4}, 1), ({7: 4, 1: -4}, 49)], 4),
    10: (
        [
            ({1: 3, 5: 1, 2: -1, 10: -3}, 1),
            ({2: 3, 10: 1, 1: -1, 5: -3}, -4),
            ({5: 3, 1: 1, 10: -1, 2: -3}, -5),
            ({10: 3, 2: 1, 5: -1, 1: -3}, 20),
        ],
        12,
    ),
}

GENUS_ZERO_LEVELS = (1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 16)
PLUS_LEVELS = (7, 10, 11, 14, 15, 19, 20, 28, 31)


@lru_cache(maxsize=None)
def hauptmodul_series(N: int, plus: bool = False, prec: int = 64) -> QSeries:
    """Exact q-expansion of the hauptmodul, normalized q^-1 + 0 + O(q).

    Always returns a series that is exact to O(q^prec): the division-based
    recipes are rebuilt with extra working terms until the truncation order
    of the result reaches the request.
    """
    J = _hauptmodul_build(N, plus, prec)
    pad = 4
    while J.prec < prec:
        J = _hauptmodul_build(N, plus, prec + pad)
        pad *= 2
    J = J.truncate(prec)
    if J.coefficient(-1) != 1 or J.coefficient(0) != 0:
        raise AssertionError(f"hauptmodul at level {N} (plus={plus}) mis-normalized")
    return J


def _hauptmodul_build(N: int, plus: bool, prec: int) -> QSeries:
    if not plus:
        if N == 1:
            J = eisenstein(4, prec + 1) ** 3 / eta_quotient({1: 24}, prec + 1) - 744
        elif N in ETA_HAUPTMODUL:
            factors, const = ETA_HAUPTMODUL[N]
            J = eta_quotient(factors, prec) + const
        else:
            raise ValueError(f"Gamma_0({N}) is not genus zero here")
    elif N in PLUS_ETA_HAUPTMODUL:
        factors, const = PLUS_ETA_HAUPTMODUL[N]
        J = eta_quotient(factors, prec) + const
    elif N in PLUS_E2_HAUPTMODUL:
        weights, etas, scale, const = PLUS_E2_HAUPTMODUL[N]
        num = QSeries.zero(prec + 1)
        for d, w in weights.items():
            num = num + w * E2((prec + 1 + d - 1) // d).dilate(d).truncate(prec + 1)
        den = scale * eta_quotient(etas, prec + 1)
        J = -(num / den) + const
    elif N in SYM_PLUS_HAUPTMODUL:
        terms, const = SYM_PLUS_HAUPTMODUL[N]
        J = QSeries.from_dict({0: mpq(const)}, prec)
        for factors, mult in terms:
            J = J + mult * eta_quotient(factors, prec)
    elif N == 19:
        from .cuspforms import newform_series

        num = E2(prec + 1) - 19 * E2((prec + 19) // 19).dilate(19).truncate(prec + 1)
        J = -(num / (18 * newform_series(19, prec + 1))) + mpq(-4, 3)
    elif N == 31:
        from .cuspforms import f31_components

        A, B = f31_components(prec + 3)
        # J = (f + f^s) / (2 (f - f^s)/sqrt5) - 5/2 = A / (2B) - 5/2
        J = A / (2 * B) - mpq(5, 2)
    else:
        raise ValueError(f"no plus hauptmodul at level {N}")
    return J if J.prec <= prec else J.truncate(prec)


def index2_constants(J: QSeries) -> tuple[mpq, mpq]:
    """(c1, c0) with J2 = J^2 - c1 J - c0 = q^-2 + 0 q^-1 + 0 + O(q)."""
    J2 = J * J
    c1 = J2.coefficient(-1)
    c0 = J2.coefficient(0) - c1 * J.coefficient(0)
    return c1, c0


def index2_series(J: QSeries) -> QSeries:
    c1, c0 = index2_constants(J)
    return J * J - c1 * J - c0
