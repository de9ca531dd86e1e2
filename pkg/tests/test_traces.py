"""Traces of singular moduli: the classical level-1 trace values, and the
rational-grid/shape invariants of the Tr4 combinations."""

import pytest
from gmpy2 import mpq

from onanmoon.traces import trace4, trace4_plus, trace_singular_moduli

# classical Hurwitz-weighted traces of j - 744 at level 1:
#   D=3:  j(zeta) = 0, weight 1/3            ->  -248
#   D=4:  j(i) = 1728, weight 1/2            ->   492
#   D=7:  j((1+i sqrt7)/2) = -3375           -> -4119
#   D=8:  j(i sqrt2) = 8000                  ->   7256
#   D=11: j((1+i sqrt11)/2) = -32768         -> -33512
#   D=12: j(i sqrt3) = 54000, plus the
#         weight-1/3 imprimitive zeta orbit  ->  53008
LEVEL1_TRACES = {
    3: mpq(-248),
    4: mpq(492),
    7: mpq(-4119),
    8: mpq(7256),
    11: mpq(-33512),
    12: mpq(53008),
}


@pytest.mark.parametrize("D,want", sorted(LEVEL1_TRACES.items()))
def test_level_one_traces_are_the_classical_singular_moduli(D, want):
    assert trace_singular_moduli(1, D) == want


def test_index2_trace_at_d3_by_hand():
    # J2 = J^2 - 2*196884 at level 1; at D=3 the only orbit has J = -744,
    # weight 1/3: Tr = ((-744)^2 - 393768)/3 = 53256
    assert trace_singular_moduli(1, 3, "index2") == mpq(159768, 3)


def test_trace4_level_one_from_its_parts():
    t = (trace_singular_moduli(1, 3, "index2") - trace_singular_moduli(1, 3)) / 2
    assert trace4(1, 3) == t == 26752


def test_trace4_vanishes_off_the_grid():
    assert trace4(1, 5) == 0
    assert trace4(2, 6) == 0
    assert trace4_plus(11, 9) == 0


def test_trace4_is_integral_on_small_grid():
    for N in (1, 2, 3, 4, 5):
        for D in (3, 4, 7, 8, 11, 12, 15, 16, 19, 20):
            t = trace4(N, D)
            assert t.denominator == 1, (N, D, t)


def test_trace4_plus_integrality_constants():
    from onanmoon.traces import TRACE_ALPHA

    for N in (11, 19):
        for D in (3, 4, 7, 8, 11, 12):
            t = trace4_plus(N, D)
            assert (t / TRACE_ALPHA[N]).denominator == 1, (N, D, t)
    for D in (3, 4, 7, 8):
        t = trace4_plus(14, D)
        assert (t / TRACE_ALPHA[14]).denominator == 1, (14, D, t)


def test_unknown_function_name_raises():
    with pytest.raises(ValueError):
        trace_singular_moduli(1, 3, "cube")
