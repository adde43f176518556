import random
from fractions import Fraction

import pytest

from src.lib.cayley_forms import tangential_quadric_form
from src.lib.error_handling import ValidationError, VarSetMismatch
from src.lib.klein import (
    PlueckerVector,
    apply_polarity,
    bracket,
    determinant,
    dot,
    euler_check,
    gradient,
    hessian,
    hessian_apply,
    is_decomposable,
    laplacian,
    pairing,
    plane_covector,
    polarity,
    product_rule_check,
    proportional,
    quadric_value,
    scalar_ratio,
    wedge,
    wedge3,
)
from src.lib.polyring import PLUECKER, POINT, MultiPoly, random_form


def test_pairing_is_twice_quadric():
    v = PlueckerVector.symbolic()
    assert pairing(v, v) == quadric_value(v) * 2


def test_pairing_of_lines():
    e = [[1 if j == i else 0 for j in range(4)] for i in range(4)]
    l01 = wedge(e[0], e[1])
    l23 = wedge(e[2], e[3])
    l02 = wedge(e[0], e[2])
    assert pairing(l01, l23) == 1
    # coplanar lines pair to zero
    assert pairing(l01, l02).is_zero()


def test_wedge_is_decomposable():
    rng = random.Random(7)
    for _ in range(10):
        u = [rng.randint(-4, 4) for _ in range(4)]
        v = [rng.randint(-4, 4) for _ in range(4)]
        assert is_decomposable(wedge(u, v))


def test_non_decomposable_vector():
    assert not is_decomposable(PlueckerVector.from_scalars([1, 0, 0, 0, 0, 1]))


def test_euler_formula_random_forms():
    """{F,Q} = deg(F) * F for homogeneous F of degree 1 to 6."""
    rng = random.Random(11)
    for _ in range(200):
        F = random_form(rng, rng.randint(1, 6), terms=3)
        assert euler_check(F).is_zero()


def test_bracket_examples(p, Q, skew, quadric):
    assert bracket(skew, skew) == skew * 2
    assert bracket(quadric, quadric) == quadric * 8
    assert bracket(Q, Q) == Q * 2
    assert bracket(p[0], p[5]) == 1


def test_bracket_is_symmetric(p):
    rng = random.Random(3)
    F = random_form(rng, 2)
    G = random_form(rng, 3)
    assert bracket(F, G) == bracket(G, F)


def test_product_rule():
    rng = random.Random(5)
    for _ in range(10):
        assert product_rule_check(random_form(rng, 2), random_form(rng, 3)).is_zero()


def test_laplacian_examples(p, Q, skew, chain):
    p01, p02, p03, p12, p13, p23 = p
    assert laplacian(Q) == 3
    assert laplacian(skew) == 1
    assert laplacian(chain) == p02
    assert laplacian(p01 ** 2).is_zero()


def test_laplacian_of_q_powers():
    """Delta(G Q^i) = i(m + 2 - i) G Q^(i-1) for harmonic G."""
    v = PlueckerVector.symbolic()
    Q = quadric_value(v)
    p01, p02, p03, p12, p13, p23 = v.entries
    for G in (p01, p01 * p02, p02 ** 2 + p01 * p12 * 4, p01 ** 3):
        assert laplacian(G).is_zero()
        g = G.homogeneous_degree()
        for i in range(1, 4):
            m = g + 2 * i
            assert laplacian(G * Q ** i) == G * Q ** (i - 1) * (i * (m + 2 - i))


def test_diagonal_quadric():
    F = tangential_quadric_form((1, 2, 3, 5))
    assert laplacian(F).is_zero()
    assert bracket(F, F) == quadric_value(PlueckerVector.symbolic()) * 240


def test_gradient_of_quadric_is_identity(Q):
    v = PlueckerVector.symbolic()
    assert gradient(Q) == v


def test_polarity_is_involution():
    v = PlueckerVector.from_scalars([1, 2, 3, 4, 5, 6])
    assert polarity(v).to_list() == ["6", "-5", "4", "3", "-2", "1"]
    assert polarity(polarity(v)) == v


def test_polarity_preserves_q_and_is_involution(Q, cubic, cubic_printed, conic, conic_printed):
    assert apply_polarity(Q) == Q
    assert apply_polarity(cubic) == cubic_printed
    assert apply_polarity(conic_printed) == conic
    assert apply_polarity(apply_polarity(cubic)) == cubic


def test_polarity_preserves_bracket():
    rng = random.Random(13)
    F = random_form(rng, 2)
    G = random_form(rng, 2)
    assert bracket(apply_polarity(F), apply_polarity(G)) == apply_polarity(bracket(F, G))


def test_hessian_euler_relation(quadric, chain):
    """H(F)(p, p) = m(m - 1) F."""
    v = PlueckerVector.symbolic()
    for F in (quadric, chain):
        m = F.homogeneous_degree()
        assert hessian_apply(hessian(F), v, v) == F * (m * (m - 1))


def test_hessian_entries(p, skew):
    H = hessian(skew)
    assert H.entry('p01', 'p23') == 1
    assert H.entry(0, 0).is_zero()
    assert H.entry(5, 0) == H.entry(0, 5)


def test_hessian_varset_mismatch(skew):
    v = PlueckerVector(tuple(MultiPoly.zero(POINT) for _ in range(6)))
    with pytest.raises(VarSetMismatch):
        hessian_apply(hessian(skew), v, v)


def test_determinant_and_wedge3():
    assert determinant([[1, 2], [3, 4]]) == -2
    assert determinant([[2, 0, 0], [0, 3, 0], [0, 0, 4]]) == 24
    with pytest.raises(ValidationError):
        determinant([[1, 2, 3], [4, 5, 6]])
    e = [[1 if j == i else 0 for j in range(4)] for i in range(4)]
    assert list(wedge3(e[0], e[1], e[2])) == [1, 0, 0, 0]


def test_plane_covector_annihilates_spanning_points():
    u, v, w = [1, 2, 0, 1], [0, 1, 1, 3], [2, 0, 1, 1]
    h = plane_covector(wedge3(u, v, w))
    for x in (u, v, w):
        assert dot(h, x).is_zero()
    assert any(not c.is_zero() for c in h)


def test_proportional_and_ratio():
    a = PlueckerVector.from_scalars([1, 2, 0, 0, 1, 3])
    b = a.scale(Fraction(-2, 3))
    assert proportional(a.entries, b.entries)
    assert scalar_ratio(b.entries, a.entries) == Fraction(-2, 3)
    assert not proportional(a.entries, PlueckerVector.from_scalars([1, 0, 0, 0, 0, 0]).entries)


def test_vector_access_by_name():
    v = PlueckerVector.symbolic()
    assert v['p13'] == v[4]
    assert v.varset == PLUECKER
    with pytest.raises(ValidationError):
        PlueckerVector((1, 2, 3))
