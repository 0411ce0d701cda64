from fractions import Fraction
from pathlib import Path

import pytest

from knotweights.alexander import (alexander_by_skein, alexander_poly,
                                   conway_skein)
from knotweights.errors import (ArcCountError, MultiComponentError,
                                NonUnitConstantTerm, ParseError)
from knotweights.pd import format_pd, parse_pd
from knotweights.series import (LaurentPolynomial, PowerSeries,
                                conway_series, exp_substitute, zbcr_series)

FIXTURES = Path(__file__).parent / "fixtures"

CORPUS = ["unknot", "3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3", "7_1"]

DELTAS = {
    "unknot": {0: 1},
    "3_1": {1: 1, 0: -1, -1: 1},
    "4_1": {1: -1, 0: 3, -1: -1},
    "5_1": {2: 1, 1: -1, 0: 1, -1: -1, -2: 1},
    "5_2": {1: 2, 0: -3, -1: 2},
    "6_1": {1: -2, 0: 5, -1: -2},
    "6_2": {2: -1, 1: 3, 0: -3, -1: 3, -2: -1},
    "6_3": {2: 1, 1: -3, 0: 5, -1: -3, -2: 1},
    "7_1": {3: 1, 2: -1, 1: 1, 0: -1, -1: 1, -2: -1, -3: 1},
}

NABLAS = {
    "unknot": {0: 1},
    "3_1": {0: 1, 2: 1},
    "4_1": {0: 1, 2: -1},
    "5_1": {0: 1, 2: 3, 4: 1},
    "5_2": {0: 1, 2: 2},
    "6_1": {0: 1, 2: -2},
    "6_2": {0: 1, 2: -1, 4: -1},
    "6_3": {0: 1, 2: 1, 4: 1},
    "7_1": {0: 1, 2: 6, 4: 5, 6: 1},
}


def load(name):
    return parse_pd((FIXTURES / f"{name}.pd").read_text())


def test_parse_empty_is_unknot():
    pd = parse_pd("# nothing here\n\n")
    assert len(pd) == 0
    assert alexander_poly(pd) == LaurentPolynomial.one()


def test_parse_round_trip():
    pd = load("3_1")
    again = parse_pd(format_pd(pd))
    assert again.crossings == pd.crossings


def test_parse_rejects_malformed_line():
    with pytest.raises(ParseError):
        parse_pd("X(1,2,3)\n")


def test_arc_count_error():
    with pytest.raises(ArcCountError):
        parse_pd("X(1,2,1,3) +\nX(1,3,2,2) +\n")


def test_multi_component_rejected():
    # a two-component link: every arc label twice, two traversal cycles
    with pytest.raises(MultiComponentError):
        parse_pd("X(1,3,2,4) +\nX(2,4,1,3) +\n")


def test_alexander_values():
    for name in CORPUS:
        assert alexander_poly(load(name)) == LaurentPolynomial(DELTAS[name])


def test_skein_oracle_agrees():
    for name in CORPUS:
        pd = load(name)
        assert alexander_poly(pd) == alexander_by_skein(pd)
        assert conway_skein(pd) == NABLAS[name]


def test_symmetry_and_normalization():
    for name in CORPUS:
        p = alexander_poly(load(name))
        assert p == p.invert_variable()
        assert p(1) == 1


def test_mirror_invariance():
    for name in CORPUS:
        pd = load(name)
        assert alexander_poly(pd.mirror()) == alexander_poly(pd)


def test_exp_substitute_basics():
    one = LaurentPolynomial.one()
    assert exp_substitute(one, 5) == PowerSeries(5, [1])
    t = LaurentPolynomial.t_power(1)
    s = exp_substitute(t, 4)
    assert [s[i] for i in range(5)] == [1, 1, Fraction(1, 2),
                                        Fraction(1, 6), Fraction(1, 24)]


def test_trefoil_series():
    p = alexander_poly(load("3_1"))
    s = exp_substitute(p, 4)
    assert [s[i] for i in range(5)] == [1, 0, 1, 0, Fraction(1, 12)]
    z = zbcr_series(p, 4)
    assert z == {2: Fraction(-1), 3: Fraction(0), 4: Fraction(5, 12)}
    c = conway_series(p, 4)
    assert c[0] == 1 and c[2] == 1 and c[4] == Fraction(1, 12)


def test_unknot_series_vanish():
    p = alexander_poly(load("unknot"))
    assert all(v == 0 for v in zbcr_series(p, 6).values())
    c = conway_series(p, 6)
    assert c[0] == 1 and all(c[k] == 0 for k in range(1, 7))


def test_odd_log_coefficients_vanish():
    for name in CORPUS:
        z = zbcr_series(alexander_poly(load(name)), 7)
        for k in (3, 5, 7):
            assert z[k] == 0


def test_series_identity_through_degree_six():
    for name in CORPUS:
        p = alexander_poly(load(name))
        z = zbcr_series(p, 6)
        minus = PowerSeries(6, [0, 0] + [-z[k] for k in range(2, 7)])
        lhs = minus.exp()
        c = conway_series(p, 6)
        assert all(lhs[k] == c[k] for k in range(7))


def test_non_unit_constant_term_rejected():
    with pytest.raises(NonUnitConstantTerm):
        zbcr_series(LaurentPolynomial({0: 2}), 4)


def test_power_series_log_exp_roundtrip():
    s = PowerSeries(6, [1, 0, 1, 0, Fraction(1, 12)])
    assert s.log().exp() == s
    with pytest.raises(NonUnitConstantTerm):
        PowerSeries(3, [0, 1]).log()
    with pytest.raises(NonUnitConstantTerm):
        PowerSeries(3, [1, 1]).exp()
