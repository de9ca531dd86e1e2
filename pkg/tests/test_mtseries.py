"""Assembly of the thirty weight-3/2 series: recipes, class map, support,
and agreement between the full-series and single-coefficient paths."""

import pytest
from gmpy2 import mpq

from onanmoon.mtseries import (
    CLASS_NAMES,
    CLASS_TO_FUNCTION,
    RECIPES,
    mt_coefficient,
    mt_coefficient_at,
    mt_series,
    mt_series_for_class,
)

PREC = 40


def test_class_map_is_total_and_consistent():
    assert len(CLASS_NAMES) == 30
    assert set(CLASS_TO_FUNCTION.values()) == set(RECIPES)
    for name, key in CLASS_TO_FUNCTION.items():
        order = "".join(ch for ch in name if ch.isdigit())
        assert key.startswith("F" + order)


@pytest.mark.parametrize("key", sorted(RECIPES))
def test_series_shape(key):
    s = mt_series(key, PREC)
    assert s.coefficient(-4) == -1
    assert s.coefficient(0) == 2
    for n in range(-4, PREC):
        c = s.coefficient(n)
        if n % 4 in (1, 2) or (n < 0 and n != -4):
            assert c == 0, (key, n)
        assert c.denominator == 1, (key, n)


def test_headline_series_coefficients():
    s = mt_series("F1A", 12)
    assert s.coefficient(3) == 26752
    assert s.coefficient(4) == 143376
    assert s.coefficient(7) == 8288256
    assert s.coefficient(8) == 26124256
    assert s.coefficient(11) == 561346944


def test_series_for_class_dispatch():
    a = mt_series_for_class("16C", PREC)
    b = mt_series("F16ABCD", PREC)
    for n in range(-4, PREC):
        assert a.coefficient(n) == b.coefficient(n)


@pytest.mark.parametrize("name", ["1A", "2A", "4B", "7A", "12A", "16D", "31B"])
def test_single_coefficient_path_matches_series(name):
    s = mt_series_for_class(name, PREC)
    for n in (-5, -4, -1, 0, 3, 5, 6, 12, 23, 31, 36):
        assert mt_coefficient_at(name, n) == s.coefficient(n), (name, n)


def test_single_coefficient_trivial_values():
    assert mt_coefficient_at("11A", 0) == 2
    assert mt_coefficient_at("11A", -4) == -1
    assert mt_coefficient_at("11A", -8) == 0
    assert mt_coefficient_at("11A", 5) == 0


def test_mt_coefficient_wrapper():
    assert mt_coefficient("1A", 3) == 26752
