import pytest

from src.lib.cayley_forms import dualize, tangential_quadric_form
from src.lib.error_handling import EmptyCurve, MultipleOfQ, NotACurve, NotHomogeneous, NotWeaklyCayley
from src.lib.file_utils import load_curve
from src.lib.polyring import POINT, MultiPoly
from src.models.curve_ideal import CurveIdeal
from src.services.chow_service import WITNESS_NAMES


def test_weak_cayley_certificate(service, chain, Q, p):
    nf = service.weak_cayley_certificate(chain)
    assert nf.is_zero
    cofactor_f, cofactor_q = nf.generator_cofactors
    assert cofactor_f * chain + cofactor_q * Q == chain * p[1] * 2


def test_weak_cayley_test(service, skew, quadric, cubic, conic, control):
    for F in (skew, quadric, cubic, conic):
        assert service.weak_cayley_test(F)
    assert not service.weak_cayley_test(control)


def test_weak_test_rejects_bad_input(service, Q, p):
    with pytest.raises(MultipleOfQ):
        service.weak_cayley_test(Q * p[0])
    with pytest.raises(NotHomogeneous):
        service.weak_cayley_test(Q + p[0])


@pytest.mark.parametrize("name, weak, honest", [
    ("quadric", True, False),
    ("skew", True, True),
    ("chain", True, True),
    ("cubic", True, True),
    ("conic", True, True),
    ("cubic_printed", True, False),
    ("conic_printed", True, False),
    ("control", False, False),
])
def test_classification_table(service, request, name, weak, honest):
    report = service.classify(request.getfixturevalue(name))
    assert report.weak_cayley == weak
    assert report.honest == honest


def test_printed_forms_are_dual_honest(service, cubic, cubic_printed, conic, conic_printed):
    for F in (cubic_printed, conic_printed):
        assert service.classify(F).dual_honest
    for F in (cubic, conic):
        assert not service.classify(F).dual_honest


def test_self_dual_skew_lines_carry_both_flags(service, skew):
    assert dualize(skew) == skew
    report = service.classify(skew)
    assert report.label == 'honest+dual-honest'


def test_tangential_quadric_is_neither(service):
    report = service.classify(tangential_quadric_form((1, 1, 1, 1)))
    assert report.weak_cayley
    assert not report.honest
    assert not report.dual_honest
    assert report.label == 'tangential'


def test_dual_honest_test_matches_honest_test_of_dual(service, cubic):
    assert service.dual_honest_test(dualize(cubic))[0] == service.honest_test(cubic)[0]


def test_control_report_has_remainder(service, control):
    report = service.classify(control)
    assert report.label == 'not-cayley'
    assert report.canonical_rep is None
    assert not report.weak_remainder.is_zero()
    with pytest.raises(NotWeaklyCayley):
        service.honest_test(control)


def test_chain_witnesses(service, chain):
    """All three lie in (Q, F); the last is not a multiple of Q."""
    witnesses = service.honest_witnesses(chain)
    assert [w.name for w in witnesses] == list(WITNESS_NAMES)
    assert all(w.member_qf for w in witnesses)
    assert not witnesses[2].member_q
    for w in witnesses:
        cofactor_f, cofactor_q = w.cofactors
        assert cofactor_f * chain + cofactor_q * service.quadric_ideal.generators[0] == w.value


def test_chain_last_witness_modulo_q(service, chain, p):
    """The third line carries a base-point factor p23, hence the extra p23^2."""
    p01, p02, p03, p12, p13, p23 = p
    last = service.honest_witnesses(chain)[2]
    expected = service.quadric_ideal.normal_form(-(p23 ** 2) * p12 ** 2 * chain).remainder
    assert last.normal_form_q == expected
    assert last.normal_form_q == -(p01 * p02 * p12 ** 2 * p23 ** 3)


def test_report_serialization(service, chain):
    data = service.classify(chain).to_dict(certificate=True)
    assert data['form'] == "p01*p02*p23"
    assert set(data['weak_certificate']) == {'cofactor_f', 'cofactor_q'}
    assert data['canonical_rep']['f1'] == "-1/12*p02"
    assert data['canonical_rep']['cofactor_b'] == "2*p02"
    assert len(data['honest_witnesses']) == 3
    assert 'cofactors' in data['honest_witnesses'][0]


def test_chow_form_of_skew_lines(service, fixtures_dir, skew):
    curve = load_curve(str(fixtures_dir / "skew_lines.json"))
    assert service.chow_form_of_curve(curve) == skew


def test_chow_form_of_chain(service, fixtures_dir, chain):
    curve = load_curve(str(fixtures_dir / "chain.json"))
    assert service.chow_form_of_curve(curve) == chain


def test_chow_form_of_conic(service, fixtures_dir, conic):
    curve = load_curve(str(fixtures_dir / "conic.json"))
    assert service.chow_form_of_curve(curve) == conic


def test_chow_form_of_twisted_cubic(service, fixtures_dir, cubic):
    curve = load_curve(str(fixtures_dir / "twisted_cubic.json"))
    expected = service.quadric_ideal.normal_form(cubic).remainder.monic()
    assert service.chow_form_of_curve(curve) == expected


def test_chow_form_of_single_line(service, p):
    x0, x1, x2, x3 = [MultiPoly.variable(name, POINT) for name in POINT.names]
    F = service.chow_form_of_curve(CurveIdeal(generators=(x2, x3)))
    assert F.homogeneous_degree() == 1
    assert F == p[5]


def test_chow_form_of_point_is_rejected(service, fixtures_dir):
    curve = load_curve(str(fixtures_dir / "point.json"))
    with pytest.raises(NotACurve):
        service.chow_form_of_curve(curve)


def test_chow_form_of_empty_set(service):
    x = [MultiPoly.variable(name, POINT) for name in POINT.names]
    with pytest.raises(EmptyCurve):
        service.chow_form_of_curve(CurveIdeal(generators=tuple(x)))
