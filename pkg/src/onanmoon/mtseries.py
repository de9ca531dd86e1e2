"""The thirty weight-3/2 McKay-Thompson series F_[g].

Each series is built from three exact ingredients:
  * the trace part T^(N) (or T^(N,+)) from traces of singular moduli,
  * a rational combination of the generalized class-number series H^(N),
  * for six classes, a shipped weight-3/2 cusp form g^(N).

The result has principal part -q^-4, constant term 2, and integer
coefficients for D > 0 (assembly raises if integrality fails, which makes
the rational recipe itself a strong consistency check).
"""

from __future__ import annotations

from gmpy2 import mpq

from .cuspforms import cusp_form
from .qseries import QSeries
from .quadforms import class_number_series
from .traces import trace_series

__all__ = [
    "RECIPES",
    "CLASS_TO_FUNCTION",
    "CLASS_NAMES",
    "mt_series",
    "mt_series_for_class",
    "mt_coefficient",
    "mt_coefficient_at",
]

# function key -> (trace level, plus?, {class-number level: coefficient},
#                  cusp form name or None, cusp form coefficient)
RECIPES = {
    "F1A": (1, False, {}, None, 0),
    "F2A": (2, False, {1: mpq(12), 2: mpq(-12)}, None, 0),
    "F3A": (3, False, {1: mpq(12), 3: mpq(-12)}, None, 0),
    "F4AB": (4, False, {2: mpq(12), 4: mpq(-12)}, None, 0),
    "F5A": (5, False, {1: mpq(6), 5: mpq(-6)}, None, 0),
    "F6A": (
        6,
        False,
        {1: mpq(-12), 2: mpq(8), 3: mpq(21, 2), 6: mpq(-13, 2)},
        None,
        0,
    ),
    "F7AB": (7, False, {1: mpq(4), 7: mpq(-4)}, None, 0),
    "F8AB": (8, False, {4: mpq(4), 8: mpq(-4)}, None, 0),
    "F10A": (
        10,
        False,
        {1: mpq(-6), 2: mpq(4), 5: mpq(11, 2), 10: mpq(-7, 2)},
        None,
        0,
    ),
    "F11A": (11, True, {1: mpq(12, 5), 11: mpq(-6, 5)}, "g11", mpq(-4, 5)),
    "F12A": (
        12,
        False,
        {2: mpq(-4), 4: mpq(4), 6: mpq(5, 2), 12: mpq(-5, 2)},
        None,
        0,
    ),
    "F14A": (
        14,
        True,
        {1: mpq(-4), 2: mpq(8, 3), 7: mpq(15, 4), 14: mpq(-41, 24)},
        "g14",
        mpq(8, 3),
    ),
    "F15AB": (
        15,
        True,
        {1: mpq(-3), 3: mpq(9, 4), 5: mpq(5, 2), 15: mpq(-13, 8)},
        "g15",
        mpq(9, 4),
    ),
    "F16ABCD": (16, False, {8: mpq(2), 16: mpq(-2)}, None, 0),
    "F19ABC": (19, True, {1: mpq(4, 3), 19: mpq(-2, 3)}, "g19", mpq(4, 3)),
    "F20AB": (
        20,
        True,
        {2: mpq(-2), 4: mpq(2), 10: mpq(3, 2), 20: mpq(-3, 2)},
        None,
        0,
    ),
    "F28AB": (
        28,
        True,
        {2: mpq(-4, 3), 4: mpq(4, 3), 14: mpq(25, 24), 28: mpq(-25, 24)},
        "g28",
        mpq(8, 3),
    ),
    "F31AB": (31, True, {1: mpq(4, 5), 31: mpq(-2, 5)}, "g31", mpq(3, 5)),
}

CLASS_NAMES = (
    "1A 2A 3A 4A 4B 5A 6A 7A 7B 8A 8B 10A 11A 12A 14A 15A 15B "
    "16A 16B 16C 16D 19A 19B 19C 20A 20B 28A 28B 31A 31B"
).split()


def _function_for_class(name: str) -> str:
    order = "".join(ch for ch in name if ch.isdigit())
    label = name[len(order):]
    for key in RECIPES:
        korder = "".join(ch for ch in key[1:] if ch.isdigit())
        if order == korder and label in key[1 + len(korder):]:
            return key
    raise KeyError(name)


CLASS_TO_FUNCTION = {name: _function_for_class(name) for name in CLASS_NAMES}

_CACHE: dict[tuple[str, int], QSeries] = {}


def mt_series(key: str, prec: int) -> QSeries:
    """F series for a function key ('F1A', ..., 'F31AB') to O(q^prec)."""
    cached = _CACHE.get(key)
    if cached is not None and cached.prec >= prec:
        return cached.truncate(prec)
    level, plus, hcoeffs, gname, gcoeff = RECIPES[key]
    f = trace_series(level, plus=plus, prec=prec)
    for hlevel, c in hcoeffs.items():
        f = f + class_number_series(hlevel, prec) * QSeries.from_dict({0: c}, prec)
    if gname is not None:
        f = f + cusp_form(gname, prec) * QSeries.from_dict({0: gcoeff}, prec)
    # the class-number recipe is an identity away from q^0; set a(0) = 2
    d = {}
    for n, c in f.items():
        if n == 0:
            continue
        if c.denominator != 1:
            raise ArithmeticError(
                f"{key}: coefficient a({n}) = {c} is not an integer"
            )
        if n > 0 and n % 4 in (1, 2):
            raise ArithmeticError(f"{key}: a({n}) = {c} violates plus-space support")
        if c:
            d[n] = c
    d[0] = mpq(2)
    assert d.get(-4) == -1 and all(n >= -4 for n in d)
    out = QSeries.from_dict(d, prec)
    _CACHE[key] = out
    return out


def mt_series_for_class(name: str, prec: int) -> QSeries:
    """F_[g] for a conjugacy class name ('1A', ..., '31B')."""
    return mt_series(CLASS_TO_FUNCTION[name], prec)


def mt_coefficient(name: str, n: int):
    """Coefficient a_[g](n) of F_[g] for a conjugacy class name."""
    return mt_series_for_class(name, n + 1).coefficient(n)


def mt_coefficient_at(name: str, n: int):
    """a_[g](n) computed from the recipe at the single exponent n, without
    building the whole series; much cheaper for large isolated n."""
    from .quadforms import class_number
    from .traces import trace4, trace4_plus

    if n == 0:
        return mpq(2)
    if n < 0:
        return mpq(-1) if n == -4 else mpq(0)
    if n % 4 in (1, 2):
        return mpq(0)
    key = CLASS_TO_FUNCTION[name]
    level, plus, hcoeffs, gname, gcoeff = RECIPES[key]
    a = trace4_plus(level, n) if plus else trace4(level, n)
    for hlevel, c in hcoeffs.items():
        a += c * class_number(hlevel, n)
    if gname is not None:
        a += gcoeff * cusp_form(gname, n + 1).coefficient(n)
    if a.denominator != 1:
        raise ArithmeticError(f"{key}: a({n}) = {a} is not an integer")
    return a
