"""
Harmonic Decomposition Models

F = sum_i Q^i h_i with harmonic h_i, and the canonical Cayley representative
F2 = F0 + Q*F1 of a weakly Cayley form.
"""

from dataclasses import dataclass
from typing import Tuple

from ..lib.error_handling import ValidationError
from ..lib.poly_parser import parse_form
from ..lib.polyring import MultiPoly, to_string


@dataclass(frozen=True)
class HarmonicDecomposition:
    """Components (h0, h1, ..., hk), h_i harmonic of degree m - 2i, k = m // 2."""

    degree: int
    components: Tuple[MultiPoly, ...]

    def __post_init__(self):
        object.__setattr__(self, 'components', tuple(self.components))
        if self.degree < 0:
            raise ValidationError(f"Degree must be non-negative: {self.degree}", str(self.degree))
        if len(self.components) != self.degree // 2 + 1:
            raise ValidationError(
                f"Degree {self.degree} needs {self.degree // 2 + 1} components, got {len(self.components)}")
        for i, h in enumerate(self.components):
            if not h.is_zero() and h.homogeneous_degree() != self.degree - 2 * i:
                raise ValidationError(f"Component h{i} must have degree {self.degree - 2 * i}", str(h))

    def component(self, i: int) -> MultiPoly:
        return self.components[i]

    def to_dict(self) -> dict:
        return {
            'degree': self.degree,
            'components': [to_string(h) for h in self.components],
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'HarmonicDecomposition':
        return cls(
            degree=data['degree'],
            components=tuple(parse_form(text) for text in data['components']),
        )


@dataclass(frozen=True)
class CanonicalCayleyRep:
    """F2 = F0 + Q*F1 with F0, F1 harmonic, and {F,F} = A*Q + B*F for the input F."""

    degree: int
    f2: MultiPoly
    f0: MultiPoly
    f1: MultiPoly
    cofactor_a: MultiPoly
    cofactor_b: MultiPoly

    def __post_init__(self):
        if self.degree < 1:
            raise ValidationError(f"Canonical representatives need degree >= 1, got {self.degree}")

    def to_dict(self) -> dict:
        return {
            'degree': self.degree,
            'f2': to_string(self.f2),
            'f0': to_string(self.f0),
            'f1': to_string(self.f1),
            'cofactor_a': to_string(self.cofactor_a),
            'cofactor_b': to_string(self.cofactor_b),
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'CanonicalCayleyRep':
        return cls(
            degree=data['degree'],
            f2=parse_form(data['f2']),
            f0=parse_form(data['f0']),
            f1=parse_form(data['f1']),
            cofactor_a=parse_form(data['cofactor_a']),
            cofactor_b=parse_form(data['cofactor_b']),
        )
