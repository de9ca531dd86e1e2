"""Character table: self-certification, known degrees, and exact
arithmetic in the 8-dimensional coordinate basis."""

import pytest
from gmpy2 import mpq
from hypothesis import given, strategies as st

from onanmoon.algebraic import AlgebraicValue, TOKEN_VALUES, parse_token
from onanmoon.chartable import (
    GROUP_ORDER,
    centralizer_orders,
    character_table,
    character_value,
    class_names,
    class_order,
    verify_column_orthogonality,
    verify_row_orthogonality,
)

# ---------------------------------------------------------------- table shape


def test_class_names_and_orders():
    names = class_names()
    assert len(names) == 30
    assert names[0] == "1A"
    assert class_order("16B") == 16
    assert class_order("1A") == 1
    # element orders divide the group order
    for n in names:
        assert GROUP_ORDER % class_order(n) == 0


def test_group_order_factors():
    assert GROUP_ORDER == 2**9 * 3**4 * 5 * 7**3 * 11 * 19 * 31


def test_trivial_character_row():
    for name in class_names():
        assert character_value(1, name).as_rational() == 1


def test_known_degrees():
    # the degree column chi_i(1A): smallest degrees of the simple group
    degrees = sorted(
        int(character_value(i, "1A").as_rational()) for i in range(1, 31)
    )
    assert degrees[0] == 1
    assert 10944 in degrees
    assert degrees.count(13376) == 2
    assert 26752 in degrees
    assert 58311 in degrees
    assert 85064 in degrees


# ------------------------------------------------------- self-certification


def test_column_orthogonality():
    assert verify_column_orthogonality()


def test_row_orthogonality():
    assert verify_row_orthogonality()


def test_centralizer_orders_class_equation():
    cent = centralizer_orders()
    assert cent[0] == GROUP_ORDER
    assert all(GROUP_ORDER % c == 0 for c in cent)
    assert sum(GROUP_ORDER // c for c in cent) == GROUP_ORDER


def test_sum_of_squared_degrees_is_group_order():
    rows = character_table()
    total = sum(int(row[0].as_rational()) ** 2 for row in rows)
    assert total == GROUP_ORDER


# --------------------------------------------------------- exact arithmetic


def test_quadratic_tokens_multiply_to_their_norms():
    T = TOKEN_VALUES
    assert (T["B"] * T["B"]).as_rational() == 2
    assert (T["F"] * T["F"]).as_rational() == -5
    assert (T["G"] * T["G"]).as_rational() == 7
    # A = (1+3sqrt5)/2 and its conjugate: product (1-45)/4 = -11, sum 1
    assert (T["A"] * T["Abar"]).as_rational() == -11
    assert (T["A"] + T["Abar"]).as_rational() == 1
    # H = (-1+i sqrt31)/2: |H|^2 = 8, H + Hbar = -1
    assert (T["H"] * T["Hbar"]).as_rational() == 8
    assert (T["H"] + T["Hbar"]).as_rational() == -1


def test_cubic_tokens_are_the_conjugate_roots():
    # C, D, E are the roots of x^3 - x^2 - 6x + 7
    C, D, E = TOKEN_VALUES["C"], TOKEN_VALUES["D"], TOKEN_VALUES["E"]
    assert (C + D + E).as_rational() == 1
    assert (C * D + C * E + D * E).as_rational() == -6
    assert (C * D * E).as_rational() == -7
    # each satisfies the minimal polynomial
    for x in (C, D, E):
        val = x * x * x - x * x - x.scale(6) + AlgebraicValue.rational(7)
        assert val == AlgebraicValue.rational(0)


def test_cross_family_product_raises():
    with pytest.raises(ArithmeticError):
        TOKEN_VALUES["B"] * TOKEN_VALUES["G"]


def test_parse_token_roundtrip():
    assert parse_token(3) == AlgebraicValue.rational(3)
    assert parse_token("-17") == AlgebraicValue.rational(-17)
    assert parse_token("-H") == -TOKEN_VALUES["H"]


_tokens = st.sampled_from(sorted(TOKEN_VALUES))
_rationals = st.fractions(
    min_value=-50, max_value=50, max_denominator=8
).map(lambda f: mpq(f.numerator, f.denominator))


@given(_tokens, _rationals, _rationals)
def test_conjugation_is_an_involution_and_additive(tok, r, s):
    x = TOKEN_VALUES[tok].scale(r) + AlgebraicValue.rational(s)
    assert x.conjugate().conjugate() == x
    y = TOKEN_VALUES[tok].scale(s)
    assert (x + y).conjugate() == x.conjugate() + y.conjugate()


@given(_tokens, _rationals, _rationals)
def test_conjugation_is_multiplicative_within_a_family(tok, r, s):
    x = TOKEN_VALUES[tok].scale(r) + AlgebraicValue.rational(1)
    y = TOKEN_VALUES[tok].scale(s) - AlgebraicValue.rational(2)
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()


def test_numeric_embedding_matches_exact_relations():
    import mpmath

    C = TOKEN_VALUES["C"].to_complex(mpmath)
    assert abs(C**3 - C**2 - 6 * C + 7) < 1e-12
    H = TOKEN_VALUES["H"].to_complex(mpmath)
    assert abs(H - mpmath.mpc(-0.5, mpmath.sqrt(31) / 2)) < 1e-12
