"""
Selftest Command Handler

Handles the 'selftest' command: the Euler and product-rule identities and
the worked fixtures (quadric surface, diagonal quadric, conic, skew lines,
twisted cubic, chain of lines), optionally in a process pool.
"""

import argparse
import concurrent.futures
import random
from fractions import Fraction
from pathlib import Path
from typing import Callable, List, Tuple

from ..lib.cayley_forms import (
    associated_curve,
    chain_of_lines_form,
    conic_hyperplane_form,
    evaluate_on_line,
    point_on_curve,
    quadric_surface_form,
    skew_lines_form,
    tangential_quadric_form,
    twisted_cubic_curve,
    twisted_cubic_form,
    twisted_cubic_hyperplane_form,
)
from ..lib.error_handling import CayleyError, describe_error, print_info
from ..lib.harmonic import (
    canonical_rep,
    decompose,
    harmonic_project,
    quadratic_equation_check,
    strong_representative_search,
)
from ..lib.klein import (
    PlueckerVector,
    bracket,
    euler_check,
    is_decomposable,
    klein_quadric,
    laplacian,
    product_rule_check,
    wedge,
)
from ..lib.output import publish
from ..lib.polyring import PLUECKER, MultiPoly, random_form, variables
from ..lib.settings import load_budget
from ..services.chow_service import ChowService


CheckResult = Tuple[str, bool, str]

SEED = 20240521


def _expect(name: str, pairs: List[Tuple[str, MultiPoly, MultiPoly]]) -> CheckResult:
    for label, got, want in pairs:
        if got != want:
            return name, False, f"{label}: got {got}, expected {want}"
    return name, True, ""


def check_euler() -> CheckResult:
    rng = random.Random(SEED)
    for _ in range(40):
        F = random_form(rng, rng.randint(1, 6))
        if F and not euler_check(F).is_zero():
            return 'euler', False, f"{{F,Q}} != deg(F)*F for {F}"
    return 'euler', True, ""


def check_product_rule() -> CheckResult:
    rng = random.Random(SEED + 1)
    for _ in range(20):
        A = random_form(rng, rng.randint(1, 3))
        B = random_form(rng, rng.randint(1, 3))
        if not product_rule_check(A, B).is_zero():
            return 'product_rule', False, f"Leibniz rule fails for {A} and {B}"
    return 'product_rule', True, ""


def check_quadric_surface() -> CheckResult:
    F = quadric_surface_form()
    Q = klein_quadric()
    rep = canonical_rep(F)
    return _expect('quadric_surface', [
        ('{F,F}', bracket(F, F), F * 8),
        ('F2', rep.f2, F - Q * 2),
        ('Delta(F2)', laplacian(rep.f2), MultiPoly.zero(PLUECKER)),
        ('{F2,F2}', bracket(rep.f2, rep.f2), Q * 8),
    ])


def check_diagonal_quadric() -> CheckResult:
    F = tangential_quadric_form((1, 2, 3, 5))
    return _expect('diagonal_quadric', [
        ('{F,F}', bracket(F, F), klein_quadric() * 240),
        ('Delta(F)', laplacian(F), MultiPoly.zero(PLUECKER)),
    ])


def check_conic() -> CheckResult:
    F = conic_hyperplane_form()
    zero = MultiPoly.zero(PLUECKER)
    return _expect('conic', [('Delta(F)', laplacian(F), zero), ('{F,F}', bracket(F, F), zero)])


def check_skew_lines() -> CheckResult:
    F = skew_lines_form()
    Q = klein_quadric()
    rep = canonical_rep(F)
    name, ok, detail = _expect('skew_lines', [
        ('Delta(F)', laplacian(F), MultiPoly.one(PLUECKER)),
        ('{F,F}', bracket(F, F), F * 2),
        ('h0', harmonic_project(F), F - Q / 3),
        ('F2', rep.f2, F - Q / 2),
        ('{F2,F2}', bracket(rep.f2, rep.f2), Q / 2),
    ])
    if ok and strong_representative_search(F):
        return name, False, "some F + cQ satisfies the strong equation"
    return name, ok, detail


def check_twisted_cubic() -> CheckResult:
    p01, p02, p03, p12, p13, p23 = variables(PLUECKER)
    F = twisted_cubic_hyperplane_form()
    components = decompose(F).components
    return _expect('twisted_cubic', [
        ('Delta(F)', laplacian(F), p12 - p03 * 3),
        ('4*F1', components[1] * 4, laplacian(F)),
    ])


def check_chain() -> CheckResult:
    p01, p02, p03, p12, p13, p23 = variables(PLUECKER)
    F = chain_of_lines_form()
    Q = klein_quadric()
    rep = canonical_rep(F)
    return _expect('chain', [
        ('{F,F}', bracket(F, F), F * p02 * 2),
        ('F2', rep.f2, F - p02 * Q / 3),
        ('{F2,F2}', bracket(rep.f2, rep.f2), Q * p02 ** 2 * Fraction(4, 9)),
        ('Delta(F2)', laplacian(rep.f2), -p02 / 3),
    ])


def check_quadratic_equation() -> CheckResult:
    for label, F in (('quadric', quadric_surface_form()), ('skew', skew_lines_form()),
                     ('cubic', twisted_cubic_form()), ('chain', chain_of_lines_form())):
        rep = canonical_rep(F)
        if not quadratic_equation_check(rep.f0, rep.f1).is_zero():
            return 'quadratic_equation', False, f"h_(2m-2)({{F2,F2}}) != 0 for {label}"
    p01, p02, p03, p12, p13, p23 = variables(PLUECKER)
    control = p01 ** 2 + p02 * p13
    if harmonic_project(bracket(control, control), 2).is_zero():
        return 'quadratic_equation', False, "control form passes the quadratic equation"
    return 'quadratic_equation', True, ""


def check_classification() -> CheckResult:
    service = ChowService(load_budget())
    expected = (
        ('quadric', quadric_surface_form(), False),
        ('skew', skew_lines_form(), True),
        ('chain', chain_of_lines_form(), True),
        ('cubic', twisted_cubic_form(), True),
    )
    for label, F, honest in expected:
        report = service.classify(F)
        if not report.weak_cayley or report.honest != honest:
            return 'classification', False, f"{label}: {report.label}"
    p01, p02, p03, p12, p13, p23 = variables(PLUECKER)
    if service.weak_cayley_test(p01 ** 2 + p02 * p13):
        return 'classification', False, "control form is weakly Cayley"
    return 'classification', True, ""


def check_segre_incidence() -> CheckResult:
    gamma = twisted_cubic_curve()
    tangents = PlueckerVector(associated_curve(gamma, 1).coordinates)
    if not is_decomposable(tangents):
        return 'segre_incidence', False, "Q(gamma[1]) != 0"
    F = twisted_cubic_form()
    rng = random.Random(SEED + 2)
    for _ in range(50):
        s = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        v = [rng.randint(-5, 5) for _ in range(4)]
        line = wedge(point_on_curve(gamma, s), v)
        if line.is_zero():
            continue
        if not evaluate_on_line(F, line).is_zero():
            return 'segre_incidence', False, f"F(gamma({s}) ^ {v}) != 0"
    return 'segre_incidence', True, ""


CHECKS: List[Callable[[], CheckResult]] = [
    check_euler,
    check_product_rule,
    check_quadric_surface,
    check_diagonal_quadric,
    check_conic,
    check_skew_lines,
    check_twisted_cubic,
    check_chain,
    check_quadratic_equation,
    check_classification,
    check_segre_incidence,
]


def run_check(index: int) -> CheckResult:
    """Run CHECKS[index]; library errors count as failures."""
    check = CHECKS[index]
    try:
        return check()
    except CayleyError as e:
        return check.__name__[len('check_'):], False, describe_error(e)


def run_checks(parallel: bool = False, workers: int = 1) -> List[CheckResult]:
    """All checks, in CHECKS order regardless of completion order."""
    indices = range(len(CHECKS))
    if parallel and workers > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
            return list(executor.map(run_check, indices))
    results = []
    for i in indices:
        print_info(f"Running {CHECKS[i].__name__}")
        results.append(run_check(i))
    return results


def run_selftest_command(args: argparse.Namespace, project_root: Path) -> int:
    """
    Execute the selftest command.

    Args:
        args: Parsed command line arguments
        project_root: Project root directory

    Returns:
        0 when every check passes, 1 otherwise
    """
    results = run_checks(args.parallel, args.workers)
    lines = []
    for name, ok, detail in results:
        lines.append(f"PASS {name}" if ok else f"FAIL {name}: {detail}")
    passed = sum(1 for _, ok, _ in results if ok)
    lines.append(f"{passed}/{len(results)} checks passed")

    payload = {
        'passed': passed,
        'total': len(results),
        'checks': [{'name': name, 'passed': ok, 'detail': detail} for name, ok, detail in results],
    }
    publish(args, payload, "\n".join(lines))
    return 0 if passed == len(results) else 1
