"""
Associated Curve Model

The k-th associated curve gamma[k] = gamma ^ gamma' ^ ... ^ gamma^(k).
"""

from dataclasses import dataclass
from typing import Tuple

from ..lib.error_handling import ValidationError
from ..lib.polyring import MultiPoly, to_string


LABELS = {
    0: ('x0', 'x1', 'x2', 'x3'),
    1: ('p01', 'p02', 'p03', 'p12', 'p13', 'p23'),
    2: ('w012', 'w013', 'w023', 'w123'),
}


@dataclass(frozen=True)
class AssociatedCurve:
    k: int
    coordinates: Tuple[MultiPoly, ...]

    def __post_init__(self):
        if self.k not in LABELS:
            raise ValidationError(f"k must be 0, 1 or 2, got {self.k}", str(self.k))
        object.__setattr__(self, 'coordinates', tuple(self.coordinates))
        if len(self.coordinates) != len(LABELS[self.k]):
            raise ValidationError(f"gamma[{self.k}] has {len(LABELS[self.k])} coordinates")

    @property
    def labels(self) -> Tuple[str, ...]:
        return LABELS[self.k]

    def to_dict(self) -> dict:
        return {
            'k': self.k,
            'coordinates': {label: to_string(c) for label, c in zip(self.labels, self.coordinates)},
        }
