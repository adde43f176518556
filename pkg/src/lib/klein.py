"""
Klein Quadric Algebra

Pluecker coordinates of lines in P^3: the Klein quadric Q, the pairing,
the twisted gradient and Cayley bracket, the Laplacian, the polarity and
the Hessian form. Coordinates are always ordered (p01, p02, p03, p12, p13, p23).
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from .error_handling import ValidationError, VarSetMismatch
from .polyring import (
    PLUECKER,
    PLUECKER_NAMES,
    MultiPoly,
    Scalar,
    VarSet,
    partial,
    substitute,
)


# pairing(a, b) = sum_i SIGNS[i] * a[i] * b[5 - i]
SIGNS = (1, -1, 1, 1, -1, 1)
PAIRS = tuple(combinations(range(4), 2))
TRIPLES = tuple(combinations(range(4), 3))

Entry = Union[MultiPoly, Scalar]


def _lift(entries: Sequence[Entry], varset: Optional[VarSet] = None) -> Tuple[MultiPoly, ...]:
    sets = {e.varset for e in entries if isinstance(e, MultiPoly)}
    if varset is not None:
        sets.add(varset)
    if len(sets) > 1:
        raise VarSetMismatch("Vector entries live in different variable sets")
    target = sets.pop() if sets else PLUECKER
    return tuple(e if isinstance(e, MultiPoly) else MultiPoly.constant(e, target) for e in entries)


@dataclass(frozen=True)
class PlueckerVector:
    """Six entries in the order (p01, p02, p03, p12, p13, p23)."""

    entries: Tuple[MultiPoly, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        if len(entries) != 6:
            raise ValidationError(f"A Pluecker vector has 6 entries, got {len(entries)}")
        object.__setattr__(self, 'entries', _lift(entries))

    @classmethod
    def symbolic(cls, varset: VarSet = PLUECKER) -> 'PlueckerVector':
        """The generic point p = (p01, ..., p23)."""
        return cls(tuple(MultiPoly.variable(name, varset) for name in PLUECKER_NAMES))

    @classmethod
    def from_scalars(cls, values: Sequence[Scalar], varset: VarSet = PLUECKER) -> 'PlueckerVector':
        return cls(_lift(values, varset))

    @property
    def varset(self) -> VarSet:
        return self.entries[0].varset

    def __getitem__(self, key: Union[int, str]) -> MultiPoly:
        if isinstance(key, str):
            key = PLUECKER_NAMES.index(key)
        return self.entries[key]

    def __iter__(self) -> Iterator[MultiPoly]:
        return iter(self.entries)

    def __len__(self) -> int:
        return 6

    def scale(self, factor: Entry) -> 'PlueckerVector':
        return PlueckerVector(tuple(e * factor for e in self.entries))

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def to_list(self) -> List[str]:
        return [str(e) for e in self.entries]


def klein_quadric(varset: VarSet = PLUECKER) -> MultiPoly:
    """Q = p01*p23 - p02*p13 + p03*p12."""
    return quadric_value(PlueckerVector.symbolic(varset))


def pairing(a: PlueckerVector, b: PlueckerVector) -> MultiPoly:
    """
    The symmetric bilinear form with pairing(p, p) = 2Q(p).

    Raises:
        VarSetMismatch: If the vectors live in different variable sets
    """
    if a.varset != b.varset:
        raise VarSetMismatch("Pluecker vectors live in different variable sets")
    result = MultiPoly.zero(a.varset)
    for i, sign in enumerate(SIGNS):
        result = result + a[i] * b[5 - i] * sign
    return result


def quadric_value(v: PlueckerVector) -> MultiPoly:
    """Q evaluated on a vector."""
    return v[0] * v[5] - v[1] * v[4] + v[2] * v[3]


def is_decomposable(v: PlueckerVector) -> bool:
    """True when Q vanishes on v, i.e. v is a line."""
    return quadric_value(v).is_zero()


def _pluecker_partials(F: MultiPoly) -> List[MultiPoly]:
    return [partial(F, name) for name in PLUECKER_NAMES]


def gradient(F: MultiPoly) -> PlueckerVector:
    """
    Twisted gradient (dF/dp23, -dF/dp13, dF/dp12, dF/dp03, -dF/dp02, dF/dp01).

    pairing(gradient(F), v) is the ordinary differential of F applied to v.
    """
    d = _pluecker_partials(F)
    return PlueckerVector(tuple(d[5 - i] * SIGNS[i] for i in range(6)))


def bracket(F: MultiPoly, G: MultiPoly) -> MultiPoly:
    """Cayley bracket {F,G} = pairing(gradient(F), gradient(G))."""
    return pairing(gradient(F), gradient(G))


def euler_check(F: MultiPoly) -> MultiPoly:
    """
    {F,Q} - m*F for F homogeneous of degree m; zero for every valid input.

    Raises:
        NotHomogeneous: If F is not homogeneous
    """
    if F.is_zero():
        return F
    m = F.homogeneous_degree()
    return bracket(F, klein_quadric(F.varset)) - F * m


def laplacian(F: MultiPoly) -> MultiPoly:
    """d01 d23 - d02 d13 + d03 d12 applied to F."""
    result = MultiPoly.zero(F.varset)
    for i in range(3):
        result = result + partial(partial(F, PLUECKER_NAMES[i]), PLUECKER_NAMES[5 - i]) * SIGNS[i]
    return result


def product_rule_check(A: MultiPoly, B: MultiPoly) -> MultiPoly:
    """Delta(AB) - Delta(A)B - A Delta(B) - {A,B}; zero for every valid input."""
    return laplacian(A * B) - laplacian(A) * B - A * laplacian(B) - bracket(A, B)


def polarity(v: PlueckerVector) -> PlueckerVector:
    """(p01, ..., p23) -> (p23, -p13, p12, p03, -p02, p01)."""
    return PlueckerVector(tuple(v[5 - i] * SIGNS[i] for i in range(6)))


def polarity_assignment(varset: VarSet = PLUECKER) -> dict:
    """The polarity as a substitution map on the Pluecker variables of `varset`."""
    image = polarity(PlueckerVector.symbolic(varset))
    return {name: image[i] for i, name in enumerate(PLUECKER_NAMES)}


def apply_polarity(F: MultiPoly) -> MultiPoly:
    """F composed with the polarity."""
    return substitute(F, polarity_assignment(F.varset), target=F.varset)


@dataclass(frozen=True)
class HessianForm:
    """Second partials of F with respect to the raw Pluecker variables."""

    base: MultiPoly
    matrix: Tuple[Tuple[MultiPoly, ...], ...]

    def __post_init__(self):
        if len(self.matrix) != 6 or any(len(row) != 6 for row in self.matrix):
            raise ValidationError("A Hessian form is a 6x6 matrix")

    def entry(self, i: Union[int, str], j: Union[int, str]) -> MultiPoly:
        if isinstance(i, str):
            i = PLUECKER_NAMES.index(i)
        if isinstance(j, str):
            j = PLUECKER_NAMES.index(j)
        return self.matrix[i][j]


def hessian(F: MultiPoly) -> HessianForm:
    first = _pluecker_partials(F)
    rows = []
    for i in range(6):
        rows.append(tuple(partial(first[i], PLUECKER_NAMES[j]) if j >= i else None for j in range(6)))
    matrix = tuple(
        tuple(rows[i][j] if j >= i else rows[j][i] for j in range(6))
        for i in range(6)
    )
    return HessianForm(base=F, matrix=matrix)


def hessian_apply(H: HessianForm, u: PlueckerVector, v: PlueckerVector) -> MultiPoly:
    """sum_ij H_ij u_i v_j."""
    varset = H.base.varset
    if u.varset != varset or v.varset != varset:
        raise VarSetMismatch("Hessian and vectors live in different variable sets")
    result = MultiPoly.zero(varset)
    for i in range(6):
        if u[i].is_zero():
            continue
        row = MultiPoly.zero(varset)
        for j in range(6):
            if not H.matrix[i][j].is_zero() and not v[j].is_zero():
                row = row + H.matrix[i][j] * v[j]
        result = result + u[i] * row
    return result


def determinant(rows: Sequence[Sequence[Entry]]) -> MultiPoly:
    """Determinant of a small square matrix by cofactor expansion."""
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValidationError("Determinant needs a square matrix")
    lifted = _lift([e for row in rows for e in row])
    return _expand([list(lifted[i * n:(i + 1) * n]) for i in range(n)])


def _expand(matrix: List[List[MultiPoly]]) -> MultiPoly:
    if len(matrix) == 1:
        return matrix[0][0]
    result = MultiPoly.zero(matrix[0][0].varset)
    for col, entry in enumerate(matrix[0]):
        if entry.is_zero():
            continue
        minor = [row[:col] + row[col + 1:] for row in matrix[1:]]
        term = entry * _expand(minor)
        result = result - term if col % 2 else result + term
    return result


def wedge(u: Sequence[Entry], v: Sequence[Entry]) -> PlueckerVector:
    """Pluecker vector of the line through points u and v: p_ij = u_i v_j - u_j v_i."""
    if len(u) != 4 or len(v) != 4:
        raise ValidationError("wedge takes two points of P^3")
    lifted = _lift(tuple(u) + tuple(v))
    lu, lv = lifted[:4], lifted[4:]
    return PlueckerVector(tuple(lu[i] * lv[j] - lu[j] * lv[i] for i, j in PAIRS))


def wedge3(u: Sequence[Entry], v: Sequence[Entry], w: Sequence[Entry]) -> Tuple[MultiPoly, ...]:
    """Lambda^3 coordinates (w012, w013, w023, w123) of three points."""
    if len(u) != 4 or len(v) != 4 or len(w) != 4:
        raise ValidationError("wedge3 takes three points of P^3")
    cols = _lift(tuple(u) + tuple(v) + tuple(w))
    lu, lv, lw = cols[:4], cols[4:8], cols[8:]
    return tuple(
        determinant([[lu[i], lv[i], lw[i]] for i in triple])
        for triple in TRIPLES
    )


def plane_covector(w: Sequence[MultiPoly]) -> Tuple[MultiPoly, ...]:
    """
    Hyperplane coefficients h of a Lambda^3 vector w = u^v^w.

    h . x = det(x, u, v, w) for every point x.
    """
    w012, w013, w023, w123 = w
    return (w123, -w023, w013, -w012)


def dot(h: Sequence[Entry], x: Sequence[Entry]) -> MultiPoly:
    """sum_i h_i x_i."""
    lifted = _lift(tuple(h) + tuple(x))
    n = len(h)
    result = MultiPoly.zero(lifted[0].varset)
    for i in range(n):
        result = result + lifted[i] * lifted[n + i]
    return result


def proportional(u: Sequence[MultiPoly], v: Sequence[MultiPoly], modulo=None) -> bool:
    """
    True when all 2x2 minors u_i v_j - u_j v_i vanish.

    Args:
        u, v: Vectors of equal length over one variable set
        modulo: Optional ideal (anything with a `member` method) to test the minors in
    """
    if len(u) != len(v):
        return False
    lifted = _lift(tuple(u) + tuple(v))
    lu, lv = lifted[:len(u)], lifted[len(u):]
    for i, j in combinations(range(len(lu)), 2):
        minor = lu[i] * lv[j] - lu[j] * lv[i]
        if minor.is_zero():
            continue
        if modulo is None or not modulo.member(minor):
            return False
    return True


def scalar_ratio(u: Sequence[MultiPoly], v: Sequence[MultiPoly]) -> Optional[Fraction]:
    """The scalar c with u = c*v, if there is one."""
    if not proportional(u, v):
        return None
    for a, b in zip(u, v):
        if not b.is_zero():
            for monom, coeff in b.terms().items():
                return a.terms().get(monom, Fraction(0)) / coeff
    return None
