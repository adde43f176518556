import random

import pytest

from src.lib.cayley_forms import (
    associated_curve,
    coordinate_line,
    curve_derivative,
    dualize,
    evaluate_on_line,
    incidence_forms,
    line_form,
    osculating_determinant,
    point_on_curve,
    schubert_third_line,
    segre_dual,
    segre_duality,
    tangential_quadric_form,
    twisted_cubic_curve,
)
from src.lib.error_handling import (
    DegenerateCurve,
    DegenerateQuadric,
    DegenerateSpan,
    NotALine,
    ValidationError,
    VarSetMismatch,
)
from src.lib.klein import (
    PlueckerVector,
    dot,
    is_decomposable,
    pairing,
    polarity,
    proportional,
    wedge,
)
from src.lib.polyring import INCIDENCE, PARAMETER, PLUECKER, MultiPoly, substitute, variables


def _conic_curve():
    (t,) = variables(PARAMETER)
    return (MultiPoly.one(PARAMETER), t * 2, -t ** 2, MultiPoly.zero(PARAMETER))


def test_line_forms_of_coordinate_lines(p):
    p01, p02, p03, p12, p13, p23 = p
    assert line_form(coordinate_line(2, 3)) == p01
    assert line_form(coordinate_line(0, 1)) == p23
    assert line_form(coordinate_line(1, 3)) == -p02


def test_named_line_forms(p, skew, chain):
    p01, p02, p03, p12, p13, p23 = p
    assert skew == p01 * p23
    assert chain == p01 * p02 * p23


def test_line_form_errors():
    with pytest.raises(ValidationError):
        line_form(PlueckerVector.symbolic())
    with pytest.raises(NotALine):
        line_form(PlueckerVector.from_scalars([1, 0, 0, 0, 0, 1]))
    with pytest.raises(NotALine):
        line_form(PlueckerVector.from_scalars([0] * 6))


def test_tangential_quadric_errors():
    with pytest.raises(ValidationError):
        tangential_quadric_form((1, 2, 3))
    with pytest.raises(DegenerateQuadric):
        tangential_quadric_form((1, 0, 2, 3))


def test_dualize_is_involution(chain, cubic):
    for F in (chain, cubic):
        assert dualize(dualize(F)) == F


def test_forms_vanish_on_lines_meeting_the_curve(cubic, conic):
    rng = random.Random(23)
    cases = ((cubic, twisted_cubic_curve()), (conic, _conic_curve()))
    for F, gamma in cases:
        for _ in range(5):
            s = rng.randint(-4, 4)
            u = [rng.randint(-5, 5) for _ in range(4)]
            line = wedge(point_on_curve(gamma, s), u)
            assert evaluate_on_line(F, line).is_zero()


def test_cubic_form_nonzero_on_a_missing_line(cubic):
    assert not evaluate_on_line(cubic, coordinate_line(1, 2)).is_zero()


def test_incidence_forms_vanish_on_point_of_line():
    u = [2, -1, 3, 1]
    v = [0, 1, 1, 4]
    line = wedge(u, v)
    point = [a * 3 - b for a, b in zip(u, v)]
    assignment = dict(zip(('x0', 'x1', 'x2', 'x3'), point))
    assignment.update(zip(('p01', 'p02', 'p03', 'p12', 'p13', 'p23'),
                          (e.constant_value() for e in line)))
    for form in incidence_forms():
        assert substitute(form, assignment).is_zero()
    assignment.update(x0=1, x1=0, x2=0, x3=0)
    assert any(not substitute(form, assignment).is_zero() for form in incidence_forms())


def test_schubert_third_line_for_coordinate_lines():
    L = coordinate_line(0, 1)
    Lp = coordinate_line(0, 2)
    third = schubert_third_line(L, Lp)
    assert proportional(third.entries, coordinate_line(0, 3).entries)
    assert pairing(third, L).is_zero()
    assert pairing(third, Lp).is_zero()


def test_schubert_third_line_meets_both_lines():
    rng = random.Random(29)
    for _ in range(5):
        L = wedge(*[[rng.randint(-3, 3) for _ in range(4)] for _ in range(2)])
        Lp = wedge(*[[rng.randint(-3, 3) for _ in range(4)] for _ in range(2)])
        if L.is_zero() or Lp.is_zero() or proportional(L.entries, Lp.entries):
            continue
        third = schubert_third_line(L, Lp)
        assert is_decomposable(third)
        assert not third.is_zero()
        assert pairing(third, L).is_zero()
        assert pairing(third, Lp).is_zero()


def test_schubert_third_line_symbolic():
    p = PlueckerVector.symbolic()
    third = schubert_third_line(p, coordinate_line(0, 1))
    assert pairing(third, p).is_zero()
    assert pairing(third, coordinate_line(0, 1)).is_zero()


def test_schubert_third_line_errors():
    with pytest.raises(DegenerateSpan):
        schubert_third_line(coordinate_line(0, 1), coordinate_line(0, 1))
    with pytest.raises(VarSetMismatch):
        schubert_third_line(PlueckerVector.symbolic(), PlueckerVector.symbolic(INCIDENCE))


def test_tangent_lines_of_twisted_cubic():
    (t,) = variables(PARAMETER)
    tangent = associated_curve(twisted_cubic_curve(), 1)
    one = MultiPoly.one(PARAMETER)
    assert tangent.coordinates == (one, t * 2, t ** 2 * 3, t ** 2, t ** 3 * 2, t ** 4)
    assert is_decomposable(PlueckerVector(tangent.coordinates))
    assert tangent.to_dict()['coordinates']['p23'] == "t^4"


def test_osculating_planes_annihilate_the_curve():
    gamma = twisted_cubic_curve()
    h = segre_dual(gamma)
    for k in range(3):
        assert dot(h, curve_derivative(gamma, k)).is_zero()
    assert not dot(h, curve_derivative(gamma, 3)).is_zero()


def test_biduality():
    gamma = twisted_cubic_curve()
    h = segre_dual(gamma)
    assert proportional(segre_dual(h), gamma)


def test_dual_tangent_lines_match_under_polarity():
    gamma = twisted_cubic_curve()
    h = segre_dual(gamma)
    dual_tangent = wedge(h, curve_derivative(h, 1))
    assert proportional(polarity(dual_tangent).entries, associated_curve(gamma, 1).coordinates)


def test_segre_duality_of_twisted_cubic():
    checks = segre_duality(twisted_cubic_curve())
    assert checks == {'osculating': True, 'bidual': True, 'tangents': True}


def test_segre_duality_rejects_plane_curve():
    (t,) = variables(PARAMETER)
    with pytest.raises(DegenerateCurve):
        segre_duality((MultiPoly.one(PARAMETER), t, t * t, MultiPoly.zero(PARAMETER)))


def test_associated_curve_levels():
    gamma = twisted_cubic_curve()
    assert associated_curve(gamma, 0).coordinates == gamma
    assert len(associated_curve(gamma, 2).coordinates) == 4
    assert osculating_determinant(gamma) == 12


def test_associated_curve_errors():
    with pytest.raises(DegenerateCurve):
        associated_curve(_conic_curve(), 1)
    with pytest.raises(ValidationError):
        associated_curve(twisted_cubic_curve(), 3)
    with pytest.raises(ValidationError):
        associated_curve(twisted_cubic_curve()[:3], 1)
    with pytest.raises(VarSetMismatch):
        associated_curve(tuple(variables(PLUECKER)[:4]), 1)
