"""The 30x30 character table of the sporadic simple group O'Nan and the
decomposition of the graded module behind the weight-3/2 series into
irreducibles.

The table is self-certifying: centralizer orders are *derived* from the
second (column) orthogonality relation and then the first (row)
orthogonality relation is verified exactly, so any transcription error in
data/character_table.json is caught without reference to external data.
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from gmpy2 import mpq

from .algebraic import AlgebraicValue, parse_token

__all__ = [
    "GROUP_ORDER",
    "character_table",
    "class_names",
    "class_order",
    "centralizer_orders",
    "verify_column_orthogonality",
    "verify_row_orthogonality",
    "character_value",
    "decompose",
    "multiplicities_table",
]

GROUP_ORDER = 460815505920  # = 2^9 3^4 5 7^3 11 19 31


@lru_cache(maxsize=1)
def _table_doc() -> dict:
    path = resources.files("onanmoon.data").joinpath("character_table.json")
    doc = json.loads(path.read_text())
    if doc["group_order"] != GROUP_ORDER:
        raise ValueError("character table data has unexpected group order")
    return doc


@lru_cache(maxsize=1)
def character_table() -> tuple:
    """30 rows of 30 exact AlgebraicValue entries."""
    doc = _table_doc()
    rows = tuple(tuple(parse_token(t) for t in row) for row in doc["rows"])
    if len(rows) != 30 or any(len(r) != 30 for r in rows):
        raise ValueError("character table is not 30x30")
    return rows


def class_names() -> tuple:
    return tuple(_table_doc()["classes"])


def class_order(name: str) -> int:
    """The element order, read off the class name (e.g. '16B' -> 16)."""
    return int("".join(ch for ch in name if ch.isdigit()))


@lru_cache(maxsize=1)
def centralizer_orders() -> tuple:
    """|C(g)| per class, from column orthogonality:
    sum_i |chi_i(g)|^2 = |C(g)|.  Verified to be positive integers whose
    class equation sums to the group order."""
    rows = character_table()
    orders = []
    for c in range(30):
        s = AlgebraicValue.rational(0)
        for i in range(30):
            x = rows[i][c]
            s = s + x * x.conjugate()
        v = s.as_rational()
        if v.denominator != 1 or v <= 0:
            raise ArithmeticError(f"column norm {v} at class index {c}")
        orders.append(int(v))
    if sum(GROUP_ORDER // n for n in orders) != GROUP_ORDER:
        raise ArithmeticError("class equation does not sum to the group order")
    if any(GROUP_ORDER % n for n in orders):
        raise ArithmeticError("centralizer order does not divide the group order")
    return tuple(orders)


def verify_column_orthogonality() -> bool:
    """sum_i chi_i(g) conj(chi_i(h)) = 0 for distinct classes g, h."""
    rows = character_table()
    for c1 in range(30):
        for c2 in range(c1 + 1, 30):
            s = AlgebraicValue.rational(0)
            for i in range(30):
                s = s + rows[i][c1] * rows[i][c2].conjugate()
            if s != AlgebraicValue.rational(0):
                raise ArithmeticError(
                    f"columns {c1}, {c2} are not orthogonal: {s}"
                )
    return True


def verify_row_orthogonality() -> bool:
    """sum_g chi_i(g) conj(chi_j(g)) / |C(g)| = delta_ij."""
    rows = character_table()
    cent = centralizer_orders()
    for i in range(30):
        for j in range(i, 30):
            s = AlgebraicValue.rational(0)
            for c in range(30):
                s = s + (rows[i][c] * rows[j][c].conjugate()).scale(
                    mpq(1, cent[c])
                )
            want = AlgebraicValue.rational(1 if i == j else 0)
            if s != want:
                raise ArithmeticError(f"rows {i}, {j}: inner product {s}")
    return True


def character_value(i: int, class_name: str) -> AlgebraicValue:
    """chi_i at the named class (i is 1-based, as in chi_1 ... chi_30)."""
    return character_table()[i - 1][class_names().index(class_name)]


def _series_coefficients(m: int) -> list:
    from .mtseries import mt_coefficient

    return [mt_coefficient(name, m) for name in class_names()]


def decompose(m: int) -> list[int]:
    """Multiplicities (possibly negative) of the 30 irreducibles in the
    degree-m graded piece, from the traces a_[g](m) by orthogonality:

        mult_i = sum_g a_[g](m) conj(chi_i(g)) / |C(g)|.

    Raises if any multiplicity fails to be a rational integer (which would
    mean the traces are not the character of a virtual module)."""
    rows = character_table()
    cent = centralizer_orders()
    traces = _series_coefficients(m)
    mults = []
    for i in range(30):
        s = AlgebraicValue.rational(0)
        for c in range(30):
            if traces[c]:
                s = s + rows[i][c].conjugate().scale(mpq(traces[c], cent[c]))
        v = s.as_rational()
        if v.denominator != 1:
            raise ArithmeticError(f"multiplicity of chi_{i+1} at m={m} is {v}")
        mults.append(int(v))
    return mults


def multiplicities_table(ms) -> dict[int, list[int]]:
    """decompose() over a list of degrees, as {m: [30 multiplicities]}."""
    return {m: decompose(m) for m in ms}
