"""
Harmonic Decomposition

Every form of degree m splits uniquely as F = sum_i Q^i h_i with h_i
harmonic of degree m - 2i. The components are peeled off recursively from
Delta(F) using Delta(G Q^i) = i(m + 2 - i) G Q^(i-1) for harmonic G.
On top of this sit the canonical Cayley representative F2 and the
quadratic equation h_{2m-2}({F2,F2}) = 0.
"""

from fractions import Fraction
from typing import List, Optional

from sympy import Poly, Rational, S, Symbol, linsolve, symbols

from ..models.harmonic_decomposition import CanonicalCayleyRep, HarmonicDecomposition
from .error_handling import (
    CertificateError,
    DegreeMismatch,
    MultipleOfQ,
    NotDivisible,
    NotHarmonic,
    NotHomogeneous,
    NotWeaklyCayley,
    print_info,
)
from .groebner import IdealBasis
from .klein import bracket, klein_quadric, laplacian
from .polyring import MultiPoly, exact_divide, variables
from .settings import GroebnerBudget


def peeling_constant(i: int, m: int) -> int:
    """Delta(G Q^i) = peeling_constant(i, m) * G Q^(i-1) for harmonic G, deg(G Q^i) = m."""
    return i * (m + 2 - i)


def _components(F: MultiPoly, m: int) -> List[MultiPoly]:
    if m <= 1:
        return [F]
    lower = _components(laplacian(F), m - 2)
    higher = [g / peeling_constant(j + 1, m) for j, g in enumerate(lower)]
    Q = klein_quadric(F.varset)
    h0 = F
    power = Q
    for h in higher:
        h0 = h0 - power * h
        power = power * Q
    return [h0] + higher


def decompose(F: MultiPoly, degree: Optional[int] = None) -> HarmonicDecomposition:
    """
    Harmonic decomposition F = sum_i Q^i h_i.

    Args:
        F: Homogeneous form in the Pluecker variables
        degree: Degree to use; required when F is zero

    Returns:
        HarmonicDecomposition with components h0..h_{m//2}

    Raises:
        NotHomogeneous: If F is not homogeneous, or zero without a degree
        DegreeMismatch: If `degree` disagrees with the degree of F
    """
    if F.is_zero():
        if degree is None:
            raise NotHomogeneous("The zero polynomial needs an explicit degree")
        m = degree
    else:
        m = F.homogeneous_degree()
        if degree is not None and degree != m:
            raise DegreeMismatch(f"Form has degree {m}, expected {degree}")
    return HarmonicDecomposition(degree=m, components=tuple(_components(F, m)))


def reconstruct(decomposition: HarmonicDecomposition) -> MultiPoly:
    """sum_i Q^i h_i."""
    components = decomposition.components
    Q = klein_quadric(components[0].varset)
    result = MultiPoly.zero(components[0].varset)
    power = MultiPoly.one(components[0].varset)
    for h in components:
        result = result + power * h
        power = power * Q
    return result


def harmonic_project(F: MultiPoly, degree: Optional[int] = None) -> MultiPoly:
    """The harmonic top component h0 of F."""
    return decompose(F, degree).components[0]


def is_multiple_of_q(F: MultiPoly) -> bool:
    try:
        exact_divide(F, klein_quadric(F.varset))
        return True
    except NotDivisible:
        return False


def _rational(q) -> Rational:
    return Rational(q.numerator, q.denominator)


def degree_forced_cofactor(F: MultiPoly, ff: MultiPoly) -> MultiPoly:
    """
    The B of degree m - 2 with {F,F} - B*F divisible by Q, by linear algebra.

    Two such B differ by a multiple of Q, so B is unique while m <= 3.

    Raises:
        CertificateError: If no B exists or it is not unique
    """
    m = F.homogeneous_degree()
    Q = klein_quadric(F.varset)
    modulo_q = IdealBasis([Q], groebner=[Q], track_cofactors=False)
    basis = [MultiPoly.one(F.varset)]
    for _ in range(m - 2):
        basis = sorted({b * v for b in basis for v in variables(F.varset)}, key=str)

    unknowns = symbols(f'b0:{len(basis)}')
    columns = [modulo_q.normal_form(b * F).remainder.terms() for b in basis]
    target = modulo_q.normal_form(ff).remainder.terms()
    equations = []
    for monom in set(target).union(*columns):
        lhs = sum(_rational(col.get(monom, 0)) * c for col, c in zip(columns, unknowns))
        equations.append(lhs - _rational(target.get(monom, 0)))

    solutions = linsolve(equations, unknowns)
    if solutions == S.EmptySet:
        raise CertificateError(f"No B of degree {m - 2} solves {{F,F}} = A*Q + B*F")
    (values,) = solutions
    if any(value.free_symbols for value in values):
        raise CertificateError(f"B of degree {m - 2} is not unique")
    result = MultiPoly.zero(F.varset)
    for b, value in zip(basis, values):
        result = result + b * Fraction(int(value.p), int(value.q))
    return result


def canonical_rep(F: MultiPoly, budget: Optional[GroebnerBudget] = None) -> CanonicalCayleyRep:
    """
    The canonical representative F2 = F0 + Q*F1 of a weakly Cayley form.

    Writes {F,F} = A*Q + B*F from a tracked normal form modulo (F, Q),
    moves to F - B/(2m) * Q, and keeps the h0 + Q*h1 part of its
    decomposition.

    Args:
        F: Homogeneous form of degree m >= 1
        budget: Optional Groebner budget

    Returns:
        CanonicalCayleyRep with F2, F0, F1 and the cofactors A, B

    Raises:
        NotHomogeneous: If F is not homogeneous
        MultipleOfQ: If Q divides F
        NotWeaklyCayley: If {F,F} is not in (Q, F), or {F2,F2} is not in (Q)
        CertificateError: If the cofactors fail to reconstruct {F,F}
    """
    m = F.homogeneous_degree()
    if m < 1:
        raise DegreeMismatch("Canonical representatives need degree >= 1")
    if is_multiple_of_q(F):
        raise MultipleOfQ(f"Q divides {F}")

    Q = klein_quadric(F.varset)
    ff = bracket(F, F)
    nf = IdealBasis([F, Q], budget=budget).normal_form(ff, verify=True)
    if not nf.is_zero:
        raise NotWeaklyCayley(f"{{F,F}} reduces to {nf.remainder} modulo (Q, F)")

    cofactor_b, cofactor_a = nf.generator_cofactors
    cofactor_a = cofactor_a.homogeneous_part(2 * m - 4)
    cofactor_b = cofactor_b.homogeneous_part(m - 2)
    if cofactor_a * Q + cofactor_b * F != ff:
        raise CertificateError("{F,F} = A*Q + B*F does not hold for the homogeneous cofactors")
    if 2 <= m <= 3 and cofactor_b != degree_forced_cofactor(F, ff):
        raise CertificateError(f"Reduction gave B = {cofactor_b}, degree count forces another B")

    shifted = F - cofactor_b * Q * Fraction(1, 2 * m)
    components = decompose(shifted, m).components
    f0 = components[0]
    f1 = components[1] if len(components) > 1 else MultiPoly.zero(F.varset)
    f2 = f0 + Q * f1

    try:
        exact_divide(bracket(f2, f2), Q)
    except NotDivisible:
        raise NotWeaklyCayley(f"{{F2,F2}} is not divisible by Q for F2 = {f2}")

    print_info(f"Canonical representative of degree {m}: B = {cofactor_b}")
    return CanonicalCayleyRep(
        degree=m, f2=f2, f0=f0, f1=f1, cofactor_a=cofactor_a, cofactor_b=cofactor_b)


def quadratic_equation_check(F0: MultiPoly, F1: MultiPoly) -> MultiPoly:
    """
    h_{2m-2}({F0 + Q F1, F0 + Q F1}); zero exactly for points of the Cayley locus.

    Raises:
        NotHarmonic: If F0 or F1 has nonzero Laplacian
        DegreeMismatch: If deg F1 != deg F0 - 2
    """
    for label, h in (('F0', F0), ('F1', F1)):
        if not laplacian(h).is_zero():
            raise NotHarmonic(f"{label} is not harmonic: {h}")
    m = F0.homogeneous_degree()
    if not F1.is_zero() and F1.homogeneous_degree() != m - 2:
        raise DegreeMismatch(f"F1 must have degree {m - 2}, got {F1.homogeneous_degree()}")
    f2 = F0 + klein_quadric(F0.varset) * F1
    return harmonic_project(bracket(f2, f2), 2 * m - 2)


def strong_representative_search(F: MultiPoly) -> List[Fraction]:
    """
    All rational c with {F + cQ, F + cQ} = 0 identically, for a quadratic form F.

    Raises:
        DegreeMismatch: If F is not quadratic
    """
    if F.homogeneous_degree() != 2:
        raise DegreeMismatch("The exhaustive search covers quadratic forms only")
    Q = klein_quadric(F.varset)
    # {F + cQ, F + cQ} = x0 + c*x1 + c^2*x2
    x0 = bracket(F, F).terms()
    x1 = (bracket(F, Q) * 2).terms()
    x2 = bracket(Q, Q).terms()

    c = Symbol('c')
    candidates = None
    for monom in sorted(set(x0) | set(x1) | set(x2)):
        coeffs = [x2.get(monom, Fraction(0)), x1.get(monom, Fraction(0)), x0.get(monom, Fraction(0))]
        if not any(coeffs):
            continue
        equation = Poly([Rational(q.numerator, q.denominator) for q in coeffs], c)
        roots = {Fraction(int(r.p), int(r.q)) for r in equation.ground_roots()}
        candidates = roots if candidates is None else candidates & roots
    return sorted(candidates or ())
