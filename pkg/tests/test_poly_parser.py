from fractions import Fraction

import pytest

from src.lib.error_handling import ParseError, VarSetMismatch
from src.lib.poly_parser import infer_varset, parse_form, parse_poly, tokenize
from src.lib.polyring import INCIDENCE, PARAMETER, PLUECKER, POINT, MultiPoly, to_string


def test_parse_zero():
    assert parse_poly("0").is_zero()


def test_parse_klein_quadric(Q):
    assert parse_poly("p01*p23 - p02*p13 + p03*p12") == Q


def test_parse_quadric_form(quadric):
    assert parse_poly("(p01+p23)^2 + 4*p03*p12") == quadric
    assert parse_poly("(p01 + p23)**2 + 4 * p03 * p12") == quadric


def test_parse_rational_coefficients(p):
    f = parse_poly("-1/3*p01 + 2/4")
    assert f == p[0] * Fraction(-1, 3) + Fraction(1, 2)


def test_roundtrip_fixtures(Q, quadric, skew, chain, conic, cubic, cubic_printed):
    for f in (Q, quadric, skew, chain, conic, cubic, cubic_printed, skew - Q / 3):
        assert parse_form(to_string(f)) == f


def test_infer_varset():
    assert infer_varset(['p01']) == PLUECKER
    assert infer_varset(['x0', 'x3']) == POINT
    assert infer_varset(['x0', 'p12']) == INCIDENCE
    assert infer_varset(['t']) == PARAMETER
    assert infer_varset([]) == PLUECKER


def test_parse_point_and_parameter():
    assert parse_poly("x0*x2 - x1^2").varset == POINT
    assert parse_poly("t^3 - 1").varset == PARAMETER
    assert parse_poly("0", PARAMETER) == MultiPoly.zero(PARAMETER)


def test_unknown_variable_reports_position():
    with pytest.raises(ParseError) as info:
        parse_poly("p01 + q7")
    assert info.value.line == 1
    assert info.value.column == 7
    assert info.value.error_code == 2


def test_mixed_parameter_rejected():
    with pytest.raises(ParseError):
        parse_poly("t*p01")


def test_syntax_errors():
    for text in ("p01 +", "(p01", "p01 ^ p02", "3/0", "p01 $ p02", ""):
        with pytest.raises(ParseError):
            parse_poly(text)


def test_multiline_position():
    with pytest.raises(ParseError) as info:
        parse_poly("p01 +\n  )")
    assert info.value.line == 2
    assert info.value.column == 3


def test_parse_form_rejects_points():
    with pytest.raises(VarSetMismatch):
        parse_form("x0*x1")


def test_tokenize_power_operator():
    kinds = [(tok.kind, tok.text) for tok in tokenize("p01**2")]
    assert kinds[:3] == [('NAME', 'p01'), ('OP', '**'), ('INT', '2')]
    assert kinds[-1][0] == 'END'
