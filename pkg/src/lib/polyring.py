"""
Polynomial Ring

Exact sparse multivariate polynomials over the rationals, built on sympy's
PolyRing. Every other module in the toolkit works with MultiPoly values.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from operator import itemgetter
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.orderings import ProductOrder, grevlex
from sympy.polys.rings import PolyElement, PolyRing

from .error_handling import (
    DegreeMismatch,
    DivisionByZero,
    NotDivisible,
    NotHomogeneous,
    UnknownVariable,
    ValidationError,
    VarSetMismatch,
)


PLUECKER_NAMES = ('p01', 'p02', 'p03', 'p12', 'p13', 'p23')
POINT_NAMES = ('x0', 'x1', 'x2', 'x3')
PARAMETER_NAME = 't'

Monomial = Tuple[int, ...]
Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class VarSet:
    """Ordered variable names; the first `block` names form the elimination block."""

    names: Tuple[str, ...]
    block: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'names', tuple(self.names))
        if not self.names:
            raise ValidationError("Variable set cannot be empty")
        if len(set(self.names)) != len(self.names):
            raise ValidationError("Variable names must be unique", ",".join(self.names))
        present = [name for name in self.names if name in PLUECKER_NAMES]
        if present != [name for name in PLUECKER_NAMES if name in present]:
            raise ValidationError("Pluecker variables must appear in the order p01,p02,p03,p12,p13,p23",
                                  ",".join(self.names))
        if not 0 <= self.block <= len(self.names):
            raise ValidationError(f"Block size {self.block} out of range", ",".join(self.names))

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: object) -> bool:
        return name in self.names

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownVariable(f"Unknown variable '{name}' in ({', '.join(self.names)})", name)

    def with_block(self, drop: Iterable[str]) -> 'VarSet':
        """Move `drop` to the front and make it the elimination block."""
        drop = set(drop)
        for name in drop:
            self.index(name)
        head = tuple(name for name in self.names if name in drop)
        tail = tuple(name for name in self.names if name not in drop)
        return VarSet(head + tail, block=len(head) if tail else 0)

    def without(self, drop: Iterable[str]) -> 'VarSet':
        """Drop names; the remaining part of the old block stays a block."""
        drop = set(drop)
        kept = tuple(name for name in self.names if name not in drop)
        kept_block = sum(1 for name in self.names[:self.block] if name not in drop)
        return VarSet(kept, block=kept_block if kept_block < len(kept) else 0)

    def fresh_name(self, stem: str) -> str:
        name = stem
        while name in self.names:
            name += '_'
        return name


PLUECKER = VarSet(PLUECKER_NAMES)
POINT = VarSet(POINT_NAMES)
INCIDENCE = VarSet(POINT_NAMES + PLUECKER_NAMES, block=len(POINT_NAMES))
PARAMETER = VarSet((PARAMETER_NAME,))


@lru_cache(maxsize=None)
def ring_for(varset: VarSet) -> PolyRing:
    """The sympy ring of a variable set: grevlex, or a block order when a block is set."""
    n = len(varset.names)
    k = varset.block
    if 0 < k < n:
        order = ProductOrder(
            (grevlex, itemgetter(slice(0, k))),
            (grevlex, itemgetter(slice(k, n))),
        )
    else:
        order = grevlex
    return PolyRing(','.join(varset.names), QQ, order)


def exact(value) -> 'QQ.dtype':
    """Convert an int, Fraction or QQ element to a QQ element."""
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, bool):
        raise ValidationError("Booleans are not scalars", str(value))
    if isinstance(value, int):
        return QQ(value)
    return QQ.convert(value)


def to_fraction(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def format_scalar(value) -> str:
    """Integer or a/b text for an exact scalar."""
    q = value if isinstance(value, Fraction) else to_fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class MultiPoly:
    """Immutable polynomial over QQ in a declared variable set."""

    __slots__ = ('_varset', '_poly')

    def __init__(self, varset: VarSet, poly: PolyElement):
        self._varset = varset
        self._poly = poly

    # construction

    @classmethod
    def zero(cls, varset: VarSet) -> 'MultiPoly':
        return cls(varset, ring_for(varset).zero)

    @classmethod
    def one(cls, varset: VarSet) -> 'MultiPoly':
        return cls(varset, ring_for(varset).one)

    @classmethod
    def constant(cls, value, varset: VarSet) -> 'MultiPoly':
        return cls(varset, ring_for(varset).ground_new(exact(value)))

    @classmethod
    def variable(cls, name: str, varset: VarSet) -> 'MultiPoly':
        return cls(varset, ring_for(varset).gens[varset.index(name)])

    @classmethod
    def from_terms(cls, terms: Mapping[Monomial, Scalar], varset: VarSet) -> 'MultiPoly':
        for monom in terms:
            if len(monom) != len(varset):
                raise ValidationError(f"Exponent vector {monom} does not match {len(varset)} variables")
            if any(e < 0 for e in monom):
                raise ValidationError(f"Negative exponent in {monom}")
        ring = ring_for(varset)
        return cls(varset, ring.from_dict({tuple(m): exact(c) for m, c in terms.items()}))

    # accessors

    @property
    def varset(self) -> VarSet:
        return self._varset

    @property
    def poly(self) -> PolyElement:
        return self._poly

    @property
    def ring(self) -> PolyRing:
        return self._poly.ring

    def terms(self) -> Dict[Monomial, Fraction]:
        return {monom: to_fraction(coeff) for monom, coeff in self._poly.items()}

    def is_zero(self) -> bool:
        return not self._poly

    def __bool__(self) -> bool:
        return bool(self._poly)

    def __len__(self) -> int:
        return len(self._poly)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._poly:
            return -1
        return max(sum(monom) for monom in self._poly.itermonoms())

    def is_homogeneous(self) -> bool:
        return len({sum(monom) for monom in self._poly.itermonoms()}) <= 1

    def homogeneous_degree(self) -> int:
        """
        Degree of a nonzero homogeneous polynomial.

        Raises:
            NotHomogeneous: For the zero polynomial or mixed degrees
        """
        degrees = {sum(monom) for monom in self._poly.itermonoms()}
        if len(degrees) != 1:
            raise NotHomogeneous(f"Polynomial is not homogeneous: {self}")
        return degrees.pop()

    def homogeneous_part(self, degree: int) -> 'MultiPoly':
        ring = self.ring
        return MultiPoly(self._varset, ring.from_dict(
            {m: c for m, c in self._poly.items() if sum(m) == degree}))

    def is_constant(self) -> bool:
        return self.degree <= 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise DegreeMismatch(f"Polynomial is not constant: {self}")
        return to_fraction(self._poly.get(self.ring.zero_monom, QQ.zero))

    def coefficient(self, exponents: Mapping[str, int]) -> Fraction:
        monom = [0] * len(self._varset)
        for name, e in exponents.items():
            monom[self._varset.index(name)] = e
        return to_fraction(self._poly.get(tuple(monom), QQ.zero))

    def variables(self) -> Tuple[str, ...]:
        used = set()
        for monom in self._poly.itermonoms():
            used.update(i for i, e in enumerate(monom) if e)
        return tuple(self._varset.names[i] for i in sorted(used))

    def leading_coefficient(self) -> Fraction:
        return to_fraction(self._poly.LC)

    def leading_term(self) -> 'MultiPoly':
        if not self._poly:
            return self
        monom, coeff = self._poly.LT
        return MultiPoly(self._varset, self.ring.from_dict({monom: coeff}))

    def monic(self) -> 'MultiPoly':
        return MultiPoly(self._varset, self._poly.monic())

    # arithmetic

    def _coerce(self, other) -> Optional[PolyElement]:
        if isinstance(other, MultiPoly):
            if other._varset != self._varset:
                raise VarSetMismatch(
                    f"Variable sets differ: ({', '.join(self._varset.names)}) vs ({', '.join(other._varset.names)})")
            return other._poly
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.ring.ground_new(exact(other))
        return None

    def __add__(self, other):
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        return MultiPoly(self._varset, self._poly + p)

    __radd__ = __add__

    def __sub__(self, other):
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        return MultiPoly(self._varset, self._poly - p)

    def __rsub__(self, other):
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        return MultiPoly(self._varset, p - self._poly)

    def __mul__(self, other):
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        return MultiPoly(self._varset, self._poly * p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise DivisionByZero("Division by zero scalar")
            return MultiPoly(self._varset, self._poly.quo_ground(exact(other)))
        if isinstance(other, MultiPoly):
            return exact_divide(self, other)
        return NotImplemented

    def __neg__(self):
        return MultiPoly(self._varset, -self._poly)

    def __pos__(self):
        return self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        return MultiPoly(self._varset, self._poly ** exponent)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self._varset == other._varset and dict.__eq__(self._poly, other._poly)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        return hash((self._varset, frozenset(self._poly.items())))

    def __str__(self):
        return to_string(self)

    def __repr__(self):
        return f"MultiPoly({to_string(self)!r})"

    # conversions

    def to_varset(self, target: VarSet) -> 'MultiPoly':
        """
        Re-express the polynomial over another variable set, matching by name.

        Raises:
            VarSetMismatch: If a variable in use is missing from the target
        """
        if target == self._varset:
            return self
        positions = []
        for name in self._varset.names:
            positions.append(target.names.index(name) if name in target.names else None)
        terms = {}
        width = len(target)
        for monom, coeff in self._poly.items():
            image = [0] * width
            for i, e in enumerate(monom):
                if not e:
                    continue
                if positions[i] is None:
                    raise VarSetMismatch(
                        f"Variable '{self._varset.names[i]}' is not in ({', '.join(target.names)})")
                image[positions[i]] = e
            terms[tuple(image)] = coeff
        return MultiPoly(target, ring_for(target).from_dict(terms))

    def evaluate(self, point: Mapping[str, Scalar]) -> 'MultiPoly':
        """Substitute scalar values for some of the variables."""
        return substitute(self, {name: MultiPoly.constant(value, self._varset)
                                 for name, value in point.items()})


def variables(varset: VarSet) -> Tuple[MultiPoly, ...]:
    """The generators of a variable set, in order."""
    ring = ring_for(varset)
    return tuple(MultiPoly(varset, g) for g in ring.gens)


def add(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a + b


def mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a * b


def partial(f: MultiPoly, name: str) -> MultiPoly:
    """
    Formal partial derivative.

    Raises:
        UnknownVariable: If `name` is not in the variable set
    """
    i = f.varset.index(name)
    return MultiPoly(f.varset, f.poly.diff(f.ring.gens[i]))


def substitute(f: MultiPoly, assignment: Mapping[str, Union[MultiPoly, Scalar]],
               target: Optional[VarSet] = None) -> MultiPoly:
    """
    Compose f with an assignment of polynomials to variables.

    Unassigned variables map to the variable of the same name in the target
    variable set.

    Args:
        f: Polynomial to substitute into
        assignment: Variable name to image polynomial (or scalar)
        target: Variable set of the result (defaults to the images' common set)

    Returns:
        The composed polynomial

    Raises:
        UnknownVariable: If an assigned name is not a variable of f
        VarSetMismatch: If images disagree on their variable set
    """
    for name in assignment:
        f.varset.index(name)

    image_sets = {img.varset for img in assignment.values() if isinstance(img, MultiPoly)}
    if target is None:
        if len(image_sets) > 1:
            raise VarSetMismatch("Substitution images live in different variable sets")
        target = image_sets.pop() if image_sets else f.varset
    elif image_sets - {target}:
        raise VarSetMismatch("Substitution images do not live in the target variable set")

    ring = ring_for(target)
    images = []
    used = set(f.variables())
    for name in f.varset.names:
        if name in assignment:
            img = assignment[name]
            images.append(img.poly if isinstance(img, MultiPoly) else ring.ground_new(exact(img)))
        elif name in target.names:
            images.append(ring.gens[target.index(name)])
        elif name in used:
            raise VarSetMismatch(f"Variable '{name}' has no image in ({', '.join(target.names)})")
        else:
            images.append(ring.zero)

    powers: Dict[Tuple[int, int], PolyElement] = {}

    def power(i: int, e: int) -> PolyElement:
        key = (i, e)
        if key not in powers:
            powers[key] = images[i] ** e
        return powers[key]

    result = ring.zero
    for monom, coeff in f.poly.items():
        term = ring.ground_new(coeff)
        for i, e in enumerate(monom):
            if e:
                term = term * power(i, e)
        result += term
    return MultiPoly(target, result)


def exact_divide(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """
    Exact quotient f / g.

    Raises:
        DivisionByZero: If g is zero
        NotDivisible: If g does not divide f
        VarSetMismatch: If f and g live in different variable sets
    """
    if f.varset != g.varset:
        raise VarSetMismatch("Cannot divide polynomials from different variable sets")
    if g.is_zero():
        raise DivisionByZero("Division by the zero polynomial")
    if f.is_zero():
        return MultiPoly.zero(f.varset)
    quotient, remainder = f.poly.div(g.poly)
    if remainder:
        raise NotDivisible(f"{g} does not divide {f}")
    return MultiPoly(f.varset, quotient)


def print_key(monom: Monomial) -> Tuple[int, Monomial]:
    """Graded lexicographic key used for printing; Groebner work uses grevlex."""
    return sum(monom), monom


def to_string(f: MultiPoly) -> str:
    """
    Canonical text: graded-lex terms, integer or a/b coefficients, `*` and `^`.

    Unit coefficients are omitted on non-constant terms.
    """
    if f.is_zero():
        return "0"
    names = f.varset.names
    pieces = []
    for monom in sorted(f.poly.itermonoms(), key=print_key, reverse=True):
        coeff = to_fraction(f.poly[monom])
        factors = []
        for name, e in zip(names, monom):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        magnitude = abs(coeff)
        if not factors:
            body = format_scalar(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = format_scalar(magnitude) + "*" + "*".join(factors)
        if not pieces:
            pieces.append(("-" if coeff < 0 else "") + body)
        else:
            pieces.append((" - " if coeff < 0 else " + ") + body)
    return "".join(pieces)


def common_varset(polys: Sequence[MultiPoly]) -> VarSet:
    """The shared variable set of a non-empty sequence."""
    sets = {p.varset for p in polys}
    if len(sets) != 1:
        raise VarSetMismatch("Polynomials live in different variable sets")
    return sets.pop()


def random_form(rng: random.Random, degree: int, varset: VarSet = PLUECKER,
                terms: int = 4, bound: int = 5) -> MultiPoly:
    """A homogeneous form of the given degree with up to `terms` random monomials."""
    n = len(varset)
    coefficients = {}
    for _ in range(terms):
        monom = [0] * n
        for _ in range(degree):
            monom[rng.randrange(n)] += 1
        coefficients[tuple(monom)] = rng.randint(-bound, bound)
    return MultiPoly.from_terms(coefficients, varset)
