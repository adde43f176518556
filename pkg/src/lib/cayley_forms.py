"""
Cayley Form Constructors

Honest and tangential Cayley forms of lines, conics, quadrics and the
twisted cubic, the polarity dualization, the incidence forms of a point and
a line, the third line of a Schubert pencil, and associated curves.

Pluecker coordinates are point coordinates: the line through u and v has
p_ij = u_i v_j - u_j v_i. The *_hyperplane_form variants are the same forms
written in hyperplane coordinates, i.e. their polarity images.
"""

from typing import Dict, List, Sequence, Tuple

from ..models.associated_curve import AssociatedCurve
from .error_handling import (
    DegenerateCurve,
    DegenerateQuadric,
    DegenerateSpan,
    NotALine,
    ValidationError,
    VarSetMismatch,
)
from .klein import (
    PAIRS,
    TRIPLES,
    Entry,
    PlueckerVector,
    apply_polarity,
    determinant,
    dot,
    pairing,
    plane_covector,
    polarity,
    proportional,
    quadric_value,
    wedge,
    wedge3,
)
from .polyring import (
    INCIDENCE,
    PARAMETER,
    PARAMETER_NAME,
    PLUECKER,
    PLUECKER_NAMES,
    POINT_NAMES,
    MultiPoly,
    Scalar,
    VarSet,
    partial,
    substitute,
    variables,
)


def basis_point(i: int, varset: VarSet = PLUECKER) -> Tuple[MultiPoly, ...]:
    """The coordinate point e_i."""
    return tuple(MultiPoly.constant(1 if j == i else 0, varset) for j in range(4))


def coordinate_line(i: int, j: int) -> PlueckerVector:
    """e_i ^ e_j."""
    return wedge(basis_point(i), basis_point(j))


def normalize_form(F: MultiPoly) -> MultiPoly:
    """Scale to leading coefficient 1 in the ring order."""
    return F.monic() if F else F


def line_form(L0: PlueckerVector) -> MultiPoly:
    """
    The linear form pairing(p, L0), vanishing on lines that meet L0.

    Raises:
        ValidationError: If L0 has non-constant entries
        NotALine: If Q(L0) != 0 or L0 = 0
    """
    if any(not e.is_constant() for e in L0):
        raise ValidationError("line_form needs a line with scalar coordinates", str(L0.to_list()))
    fixed = PlueckerVector(tuple(MultiPoly.constant(e.constant_value(), PLUECKER) for e in L0))
    if fixed.is_zero() or not quadric_value(fixed).is_zero():
        raise NotALine(f"Not a line: {fixed.to_list()}")
    return pairing(PlueckerVector.symbolic(), fixed)


def skew_lines_form() -> MultiPoly:
    """Lines meeting e2^e3 and e0^e1: p01*p23."""
    return normalize_form(line_form(coordinate_line(2, 3)) * line_form(coordinate_line(0, 1)))


def chain_of_lines_form() -> MultiPoly:
    """Lines meeting the chain e2^e3, e1^e3, e0^e1: p01*p02*p23."""
    form = line_form(coordinate_line(2, 3)) * line_form(coordinate_line(1, 3)) * line_form(coordinate_line(0, 1))
    return normalize_form(form)


def quadric_surface_form() -> MultiPoly:
    p01, p02, p03, p12, p13, p23 = variables(PLUECKER)
    return (p01 + p23) ** 2 + p03 * p12 * 4


def tangential_quadric_form(a: Sequence[Scalar]) -> MultiPoly:
    """
    sum_{i<j} a_i a_j p_ij^2, the tangent lines of the diagonal quadric.

    Raises:
        DegenerateQuadric: If some a_i is zero
    """
    if len(a) != 4:
        raise ValidationError(f"A diagonal quadric has 4 coefficients, got {len(a)}")
    if any(value == 0 for value in a):
        raise DegenerateQuadric(f"Quadric with coefficients {list(a)} is singular")
    p = variables(PLUECKER)
    result = MultiPoly.zero(PLUECKER)
    for (i, j), pij in zip(PAIRS, p):
        result = result + pij ** 2 * (a[i] * a[j])
    return result


def twisted_cubic_form() -> MultiPoly:
    """Chow form of gamma(t) = (1, t, t^2, t^3)."""
    p01, p02, p03, p12, p13, p23 = variables(PLUECKER)
    return determinant([
        [p23, -p13, p12],
        [-p13, p03 + p12, -p02],
        [p12, -p02, p01],
    ])


def twisted_cubic_hyperplane_form() -> MultiPoly:
    """det [[p01, p02, p03], [p02, p12 + p03, p13], [p03, p13, p23]]."""
    p01, p02, p03, p12, p13, p23 = variables(PLUECKER)
    return determinant([
        [p01, p02, p03],
        [p02, p12 + p03, p13],
        [p03, p13, p23],
    ])


def conic_form() -> MultiPoly:
    """Chow form of the conic x3 = 0, x1^2 + 4 x0 x2 = 0."""
    p01, p02, p03, p12, p13, p23 = variables(PLUECKER)
    return p13 ** 2 + p03 * p23 * 4


def conic_hyperplane_form() -> MultiPoly:
    p01, p02, p03, p12, p13, p23 = variables(PLUECKER)
    return p02 ** 2 + p01 * p12 * 4


def dualize(F: MultiPoly) -> MultiPoly:
    """F composed with the polarity; an involution."""
    return apply_polarity(F)


def incidence_forms(varset: VarSet = INCIDENCE) -> List[MultiPoly]:
    """The four coordinates of x ^ p: x_i p_jk - x_j p_ik + x_k p_ij for i < j < k."""
    x = [MultiPoly.variable(name, varset) for name in POINT_NAMES]
    p = {pair: MultiPoly.variable(f"p{pair[0]}{pair[1]}", varset) for pair in PAIRS}
    return [x[i] * p[(j, k)] - x[j] * p[(i, k)] + x[k] * p[(i, j)] for i, j, k in TRIPLES]


def _cross(r: Sequence[MultiPoly], s: Sequence[MultiPoly]) -> Tuple[MultiPoly, ...]:
    return (
        r[1] * s[2] - r[2] * s[1],
        r[2] * s[0] - r[0] * s[2],
        r[0] * s[1] - r[1] * s[0],
    )


def schubert_third_line(L: PlueckerVector, Lp: PlueckerVector, modulo=None) -> PlueckerVector:
    """
    A line e_b ^ y meeting both L and Lp.

    y solves pairing(e_b ^ y, L) = pairing(e_b ^ y, Lp) = 0 as the cross
    product of the two coefficient rows. The base point e_b is the first of
    e0..e3 giving a nonzero y.

    Args:
        L, Lp: Pluecker vectors over one variable set
        modulo: Optional ideal; y counts as zero when all its entries are members

    Raises:
        DegenerateSpan: If every base point gives y = 0
    """
    if L.varset != Lp.varset:
        raise VarSetMismatch("Both lines must live in one variable set")
    varset = L.varset
    for b in range(4):
        base = basis_point(b, varset)
        others = [j for j in range(4) if j != b]
        rows = []
        for line in (L, Lp):
            rows.append([pairing(wedge(base, basis_point(j, varset)), line) for j in others])
        y = _cross(rows[0], rows[1])
        if all(c.is_zero() or (modulo is not None and modulo.member(c)) for c in y):
            continue
        point = [MultiPoly.zero(varset)] * 4
        for j, value in zip(others, y):
            point[j] = value
        return wedge(base, point)
    raise DegenerateSpan("No base point e0..e3 gives a third line")


def twisted_cubic_curve() -> Tuple[MultiPoly, ...]:
    """gamma(t) = (1, t, t^2, t^3)."""
    (t,) = variables(PARAMETER)
    return (MultiPoly.one(PARAMETER), t, t ** 2, t ** 3)


def _as_curve(gamma: Sequence[Entry]) -> Tuple[MultiPoly, ...]:
    if len(gamma) != 4:
        raise ValidationError(f"A curve in P^3 has 4 coordinates, got {len(gamma)}")
    lifted = []
    for c in gamma:
        if isinstance(c, MultiPoly):
            if c.varset != PARAMETER:
                raise VarSetMismatch(f"Curve coordinates must be polynomials in t: {c}")
            lifted.append(c)
        else:
            lifted.append(MultiPoly.constant(c, PARAMETER))
    return tuple(lifted)


def curve_derivative(gamma: Sequence[MultiPoly], order: int = 1) -> Tuple[MultiPoly, ...]:
    result = _as_curve(gamma)
    for _ in range(order):
        result = tuple(partial(c, PARAMETER_NAME) for c in result)
    return result


def osculating_determinant(gamma: Sequence[Entry]) -> MultiPoly:
    """det(gamma, gamma', gamma'', gamma''') as a polynomial in t."""
    gamma = _as_curve(gamma)
    columns = [curve_derivative(gamma, k) for k in range(4)]
    return determinant([[columns[k][i] for k in range(4)] for i in range(4)])


def associated_curve(gamma: Sequence[Entry], k: int) -> AssociatedCurve:
    """
    gamma[k] = gamma ^ gamma' ^ ... ^ gamma^(k) for k = 0, 1, 2.

    k = 1 gives the tangent lines in Pluecker coordinates, k = 2 the
    osculating planes as (w012, w013, w023, w123).

    Raises:
        ValidationError: If k is not 0, 1 or 2
        DegenerateCurve: If gamma lies in a plane
    """
    if k not in (0, 1, 2):
        raise ValidationError(f"k must be 0, 1 or 2, got {k}", str(k))
    gamma = _as_curve(gamma)
    if osculating_determinant(gamma).is_zero():
        raise DegenerateCurve("The curve lies in a plane")
    if k == 0:
        return AssociatedCurve(k=0, coordinates=gamma)
    first = curve_derivative(gamma, 1)
    if k == 1:
        return AssociatedCurve(k=1, coordinates=wedge(gamma, first).entries)
    second = curve_derivative(gamma, 2)
    return AssociatedCurve(k=2, coordinates=wedge3(gamma, first, second))


def segre_dual(gamma: Sequence[Entry]) -> Tuple[MultiPoly, ...]:
    """The dual curve: the osculating plane of gamma at t, as a covector."""
    return plane_covector(associated_curve(gamma, 2).coordinates)


def point_on_curve(gamma: Sequence[Entry], s: Scalar) -> Tuple[MultiPoly, ...]:
    """gamma(s) as constants in the Pluecker variable set."""
    return tuple(MultiPoly.constant(c.evaluate({PARAMETER_NAME: s}).constant_value(), PLUECKER)
                 for c in _as_curve(gamma))


def segre_duality(gamma: Sequence[Entry]) -> Dict[str, bool]:
    """
    Duality checks between a space curve and its dual curve h = segre_dual(gamma).

    osculating: h(t) contains gamma, gamma' and gamma''
    bidual: the dual of h is gamma up to scalar
    tangents: the polarity maps the tangent lines h ^ h' onto gamma[1]

    Raises:
        DegenerateCurve: If gamma or its dual lies in a plane
    """
    gamma = _as_curve(gamma)
    h = segre_dual(gamma)
    dual_tangents = wedge(h, curve_derivative(h, 1))
    return {
        'osculating': all(dot(h, curve_derivative(gamma, k)).is_zero() for k in range(3)),
        'bidual': proportional(segre_dual(h), gamma),
        'tangents': proportional(polarity(dual_tangents).entries, associated_curve(gamma, 1).coordinates),
    }


def evaluate_on_line(F: MultiPoly, line: PlueckerVector) -> MultiPoly:
    """F(line) for a line with scalar or polynomial entries."""
    return substitute(F, dict(zip(PLUECKER_NAMES, line.entries)), target=line.varset)
