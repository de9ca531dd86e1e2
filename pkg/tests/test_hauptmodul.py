"""Eta quotients, Eisenstein series, hauptmoduln (classical q-expansion
oracles) and CM-point evaluation (classical special values)."""

import mpmath
import pytest
from gmpy2 import mpq

from onanmoon.cmeval import (
    CMPoint,
    InsufficientPrecision,
    eval_eta,
    eval_hauptmodul,
    recognize_rational,
)
from onanmoon.eisenstein import E2, E4, E6, delta_series
from onanmoon.eta import eta_quotient, euler_product, theta_weight_half
from onanmoon.hauptmodul import (
    GENUS_ZERO_LEVELS,
    PLUS_LEVELS,
    hauptmodul_series,
    index2_constants,
    index2_series,
)

# ------------------------------------------------------------- eta/Eisenstein

RAMANUJAN_TAU = [1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643]


def test_delta_is_the_ramanujan_series():
    d = delta_series(12)
    for n, t in enumerate(RAMANUJAN_TAU, start=1):
        assert d.coefficient(n) == t


def test_euler_product_pentagonal_signs():
    p = euler_product(30)
    assert [int(p.coefficient(n)) for n in range(8)] == [1, -1, -1, 0, 0, 1, 0, 1]


def test_eisenstein_leading_coefficients():
    assert [int(E2(4).coefficient(n)) for n in range(4)] == [1, -24, -72, -96]
    assert [int(E4(4).coefficient(n)) for n in range(4)] == [1, 240, 2160, 6720]
    assert [int(E6(4).coefficient(n)) for n in range(4)] == [1, -504, -16632, -122976]


def test_discriminant_from_eisenstein_identity():
    prec = 24
    lhs = (E4(prec) ** 3 - E6(prec) ** 2) / 1728
    rhs = delta_series(prec)
    for n in range(prec):
        assert lhs.coefficient(n) == rhs.coefficient(n)


def test_theta_equals_its_eta_quotient():
    prec = 200
    t = theta_weight_half(prec)
    e = eta_quotient({2: 5, 1: -2, 4: -2}, prec)
    for n in range(prec):
        assert t.coefficient(n) == e.coefficient(n)


def test_eta_quotient_rejects_fractional_exponent():
    with pytest.raises(ValueError):
        eta_quotient({1: 1}, 10)


# --------------------------------------------------------------- hauptmoduln


def test_level_one_hauptmodul_is_j_minus_744():
    J = hauptmodul_series(1, False, 4)
    assert J.coefficient(-1) == 1
    assert J.coefficient(0) == 0
    assert J.coefficient(1) == 196884
    assert J.coefficient(2) == 21493760
    assert J.coefficient(3) == 864299970


def test_level_two_hauptmodul_expansion():
    J = hauptmodul_series(2, False, 5)
    assert [int(J.coefficient(n)) for n in (1, 2, 3, 4)] == [
        276,
        -2048,
        11202,
        -49152,
    ]


def test_all_hauptmoduln_normalized():
    for N in GENUS_ZERO_LEVELS:
        J = hauptmodul_series(N, False, 8)
        assert J.coefficient(-1) == 1 and J.coefficient(0) == 0, N
    for N in PLUS_LEVELS:
        J = hauptmodul_series(N, True, 8)
        assert J.coefficient(-1) == 1 and J.coefficient(0) == 0, N


def test_index2_series_shape():
    for N, plus in [(1, False), (2, False), (7, True), (11, True)]:
        J = hauptmodul_series(N, plus, 8)
        J2 = index2_series(J)
        assert J2.coefficient(-2) == 1
        assert J2.coefficient(-1) == 0
        assert J2.coefficient(0) == 0


def test_index2_constants_level_one():
    # J2 = J^2 - 2*196884 q^0 - ... : c1 = 0 (no q^-1 in J^2 beyond 2*a0*q^-1)
    J = hauptmodul_series(1, False, 4)
    c1, c0 = index2_constants(J)
    assert c1 == 0
    assert c0 == 2 * 196884


# ---------------------------------------------------------- CM evaluation


def test_eval_eta_at_i_is_the_gamma_quarter_value():
    with mpmath.workprec(120):
        got = eval_eta(mpmath.mpc(0, 1), mpmath.mp)
        want = mpmath.gamma(mpq(1, 4)) / (2 * mpmath.pi ** mpq(3, 4))
        assert abs(got - want) < mpmath.mpf(2) ** -100


def test_hauptmodul_at_classical_cm_points():
    # j(i) = 1728 and j((1+i sqrt3)/2) = 0, so J = j - 744 takes 984, -744
    v1 = eval_hauptmodul(1, False, CMPoint(1, 0, 4))
    assert recognize_rational(v1) == 984
    v2 = eval_hauptmodul(1, False, CMPoint(1, -1, 3))
    assert recognize_rational(v2) == -744


def test_hauptmodul_at_d7_cm_point():
    # j((1+i sqrt7)/2) = -3375, so J = -4119
    v = eval_hauptmodul(1, False, CMPoint(1, -1, 7))
    assert recognize_rational(v) == -4119


def test_recognize_rational_rejects_noise():
    with pytest.raises(InsufficientPrecision):
        recognize_rational(mpmath.mpf("0.02"))
    with pytest.raises(InsufficientPrecision):
        recognize_rational(mpmath.mpc(1, "0.5"))


def test_recognize_rational_on_the_24_grid():
    assert recognize_rational(mpmath.mpf(1) / 24) == mpq(1, 24)
    assert recognize_rational(mpmath.mpf(-7)) == -7
