"""Weight-2 newforms from point counts, checked against the classical
eta-product expressions at levels 11, 14, 15 (an independent construction),
and the shipped weight-3/2 data file."""

import pytest
from gmpy2 import mpq

from onanmoon.cuspforms import (
    CURVES,
    curve_ap,
    cusp_form,
    f31_components,
    load_cuspform_data,
    newform_coefficients,
    newform_series,
)
from onanmoon.eta import eta_quotient

PREC = 120

# the unique newforms of levels 11, 14, 15 are eta products
ETA_NEWFORM = {
    11: {1: 2, 11: 2},
    14: {1: 1, 2: 1, 7: 1, 14: 1},
    15: {1: 1, 3: 1, 5: 1, 15: 1},
}


@pytest.mark.parametrize("conductor", [11, 14, 15])
def test_newform_matches_eta_product(conductor):
    got = newform_coefficients(conductor, PREC)
    eta = eta_quotient(ETA_NEWFORM[conductor], PREC)
    for n in range(1, PREC):
        assert got[n] == eta.coefficient(n), (conductor, n)


def test_newform_level19_point_counts_cross_checked():
    """Independent naive O(p^2) point count vs the quadratic-character
    count, plus the Hasse bound and multiplicative reduction at p = 19."""
    a1, a2, a3, a4, a6 = CURVES[19]
    for p in [5, 7, 11, 13, 17, 19, 23, 29, 31, 37]:
        npts = 1
        for x in range(p):
            for y in range(p):
                lhs = y * y + a1 * x * y + a3 * y
                rhs = x**3 + a2 * x * x + a4 * x + a6
                if (lhs - rhs) % p == 0:
                    npts += 1
        assert curve_ap(CURVES[19], p) == p + 1 - npts
    assert curve_ap(CURVES[19], 19) in (1, -1)
    for p in [5, 7, 11, 13, 17, 23]:
        assert curve_ap(CURVES[19], p) ** 2 <= 4 * p


def test_hecke_multiplicativity():
    a = newform_coefficients(19, PREC)
    assert a[1] == 1
    assert a[6] == a[2] * a[3]
    assert a[35] == a[5] * a[7]
    assert a[4] == a[2] * a[2] - 2  # a_{p^2} = a_p^2 - p away from the level
    assert a[9] == a[3] * a[3] - 3


def test_newform_series_normalization():
    s = newform_series(11, 10)
    assert s.coefficient(1) == 1
    assert s.coefficient(0) == 0


# ------------------------------------------------------------- shipped data


def test_data_file_integrity():
    doc = load_cuspform_data()
    assert set(doc["forms"]) == {"g11", "g14", "g15", "g19", "g28", "g31", "f31"}


@pytest.mark.parametrize("name", ["g11", "g14", "g15", "g19", "g28", "g31"])
def test_weight_three_halves_forms_have_plus_support(name):
    s = cusp_form(name, 200)
    for n, c in s.items():
        assert n > 0 and n % 4 in (0, 3), (name, n)
        assert c != 0


def test_cusp_form_prec_limit_raises():
    with pytest.raises(ValueError):
        cusp_form("g11", 10**9)


def test_f31_is_a_normalized_eigenform_over_the_quadratic_field():
    A, B = f31_components(80)
    # a_1 = 1: rational part 1, irrational part 0
    assert A.coefficient(1) == 1 and B.coefficient(1) == 0
    # Hecke at split primes away from 31: a_2 a_3 = a_6 in Z[(1+sqrt5)/2]
    def coeff(n):
        return (A.coefficient(n), B.coefficient(n))

    a2, b2 = coeff(2)
    a3, b3 = coeff(3)
    a6, b6 = coeff(6)
    assert a2 * a3 + 5 * b2 * b3 == a6
    assert a2 * b3 + b2 * a3 == b6
    # a_4 = a_2^2 - 2
    a4, b4 = coeff(4)
    assert a2 * a2 + 5 * b2 * b2 - 2 == a4
    assert 2 * a2 * b2 == b4
