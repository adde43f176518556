from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from src.lib.error_handling import (
    DivisionByZero,
    NotDivisible,
    NotHomogeneous,
    UnknownVariable,
    ValidationError,
    VarSetMismatch,
)
from src.lib.klein import klein_quadric
from src.lib.poly_parser import parse_poly
from src.lib.polyring import (
    INCIDENCE,
    PARAMETER,
    PLUECKER,
    POINT,
    MultiPoly,
    VarSet,
    add,
    exact_divide,
    mul,
    partial,
    substitute,
    to_string,
    variables,
)


monomials = st.tuples(*[st.integers(min_value=0, max_value=2) for _ in range(6)])
coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=4)
polys = st.dictionaries(monomials, coefficients, max_size=4).map(
    lambda terms: MultiPoly.from_terms(terms, PLUECKER))
names = st.sampled_from(PLUECKER.names)


@settings(max_examples=40, deadline=None)
@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    """Addition and multiplication are associative, commutative and distributive."""
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@settings(max_examples=40, deadline=None)
@given(polys, names, names)
def test_partials_commute(f, u, v):
    assert partial(partial(f, u), v) == partial(partial(f, v), u)


@settings(max_examples=40, deadline=None)
@given(polys, polys, names)
def test_leibniz_rule(f, g, v):
    assert partial(f * g, v) == partial(f, v) * g + f * partial(g, v)


@settings(max_examples=40, deadline=None)
@given(polys)
def test_to_string_parses_back(f):
    assert parse_poly(to_string(f), PLUECKER) == f


def test_additive_inverse(p):
    p01 = p[0]
    assert (p01 + (-p01)).is_zero()


def test_quadric_from_terms(p, Q):
    p01, p02, p03, p12, p13, p23 = p
    assert add(p01 * p23, -p02 * p13 + p03 * p12) == Q


def test_mul_degree_and_identity(p, Q, quadric):
    p01, p02, p03, p12, p13, p23 = p
    assert mul(MultiPoly.one(PLUECKER), quadric) == quadric
    assert mul(Q, Q).degree == 4
    assert mul(p01 * p02, p23).degree == 3


def test_q_squared_term_count(Q):
    """Q^2 expands to 3 squares and 3 cross products."""
    square = Q * Q
    squares = [m for m in square.terms() if all(e in (0, 2) for e in m)]
    assert len(squares) == 3
    assert len(square) == 6


def test_partial_examples(p, Q):
    p01, p02, p03, p12, p13, p23 = p
    assert partial(Q, 'p01') == p23
    assert partial((p01 + p23) ** 2, 'p01') == (p01 + p23) * 2
    assert partial(p02 ** 2 + p01 * p12 * 4, 'p03').is_zero()


def test_partial_unknown_variable(Q):
    with pytest.raises(UnknownVariable):
        partial(Q, 'x0')


def test_substitute_identity_and_polarity(p, Q):
    p01, p02, p03, p12, p13, p23 = p
    assert substitute(Q, {}) == Q
    polarity = {'p01': p23, 'p23': p01, 'p02': -p13, 'p13': -p02, 'p03': p12, 'p12': p03}
    assert substitute(Q, polarity) == Q


def test_substitute_mixed_images_fails(p):
    x0 = MultiPoly.variable('x0', POINT)
    with pytest.raises(VarSetMismatch):
        substitute(p[0] + p[1], {'p01': x0, 'p02': p[2]})


def test_exact_divide_examples(p, quadric):
    p01, p02, p03, p12, p13, p23 = p
    assert exact_divide(quadric * 8, quadric) == 8
    chain = p01 * p02 * p23
    assert exact_divide(chain * p02 * 2, chain) == p02 * 2
    with pytest.raises(NotDivisible):
        exact_divide(p01, p02)
    with pytest.raises(DivisionByZero):
        exact_divide(p01, MultiPoly.zero(PLUECKER))


def test_exact_divide_varset_mismatch(p):
    with pytest.raises(VarSetMismatch):
        exact_divide(p[0], MultiPoly.variable('x0', POINT))


def test_add_varset_mismatch(p):
    with pytest.raises(VarSetMismatch):
        p[0] + MultiPoly.variable('x0', POINT)


def test_to_string_examples(p, Q):
    assert to_string(MultiPoly.zero(PLUECKER)) == "0"
    assert to_string(Q) == "p01*p23 - p02*p13 + p03*p12"
    assert to_string(p[0] * p[5] - Q / 3) == "2/3*p01*p23 + 1/3*p02*p13 - 1/3*p03*p12"
    assert to_string(-Q / 3) == "-1/3*p01*p23 + 1/3*p02*p13 - 1/3*p03*p12"


def test_to_string_is_graded_lex(p):
    p01, p02, p03, p12, p13, p23 = p
    assert to_string(p23 ** 2 + p01 * p13 + p02) == "p01*p13 + p23^2 + p02"
    assert to_string(p13 ** 2 + p03 * p23 * 4) == "4*p03*p23 + p13^2"


def test_homogeneity(p, Q):
    assert Q.homogeneous_degree() == 2
    assert not (Q + p[0]).is_homogeneous()
    with pytest.raises(NotHomogeneous):
        (Q + p[0]).homogeneous_degree()
    with pytest.raises(NotHomogeneous):
        MultiPoly.zero(PLUECKER).homogeneous_degree()


def test_coefficient_and_leading_term(p, Q):
    assert Q.coefficient({'p02': 1, 'p13': 1}) == -1
    lead = Q.leading_term()
    assert len(lead) == 1
    assert Q.leading_coefficient() == 1


def test_evaluate_and_to_varset(Q):
    value = Q.evaluate({'p01': 1, 'p23': 2, 'p02': 3, 'p13': 1, 'p03': 0, 'p12': 5})
    assert value.constant_value() == Fraction(-1)
    lifted = Q.to_varset(INCIDENCE)
    assert lifted.varset == INCIDENCE
    assert lifted.to_varset(PLUECKER) == Q
    with pytest.raises(VarSetMismatch):
        Q.to_varset(POINT)


def test_varset_validation():
    with pytest.raises(ValidationError):
        VarSet(('p01', 'p01'))
    with pytest.raises(ValidationError):
        VarSet(('p02', 'p01'))
    assert INCIDENCE.with_block(['x0', 'x1', 'x2', 'x3']).block == 4
    moved = INCIDENCE.with_block(['x2'])
    assert moved.names[0] == 'x2'
    assert moved.block == 1
    assert INCIDENCE.without(['x0', 'x1', 'x2', 'x3']) == PLUECKER


def test_scalar_division_is_exact(p):
    assert (p[0] / 3) * 3 == p[0]
    assert to_string(p[0] / 3) == "1/3*p01"


def test_parameter_variables():
    (t,) = variables(PARAMETER)
    assert partial(t ** 3, 't') == t ** 2 * 3
