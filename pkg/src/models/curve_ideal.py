"""
Curve Ideal Model

A space curve C in P^3: homogeneous generators in x0..x3, an optional
rational parametrization in t, and an optional chart form for saturation.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from ..lib.error_handling import ValidationError
from ..lib.poly_parser import parse_poly
from ..lib.polyring import PARAMETER, POINT, POINT_NAMES, MultiPoly, substitute, to_string


@dataclass(frozen=True)
class CurveIdeal:
    """Generators of a curve, with an optional parametrization gamma(t)."""

    generators: Tuple[MultiPoly, ...]
    param: Optional[Tuple[MultiPoly, ...]] = None
    chart: Optional[MultiPoly] = None  # linear form used to saturate away x = 0
    name: str = ""

    def __post_init__(self):
        """Validate curve data."""
        object.__setattr__(self, 'generators', tuple(self.generators))
        if not self.generators:
            raise ValidationError("A curve needs at least one generator", self.name)
        for g in self.generators:
            if g.varset != POINT:
                raise ValidationError(f"Curve generators must use x0..x3 only: {g}", str(g))
            if g.is_zero() or not g.is_homogeneous():
                raise ValidationError(f"Curve generators must be nonzero and homogeneous: {g}", str(g))
        if self.chart is not None:
            if self.chart.varset != POINT or self.chart.degree != 1 or not self.chart.is_homogeneous():
                raise ValidationError(f"Chart must be a linear form in x0..x3: {self.chart}", str(self.chart))
        if self.param is not None:
            object.__setattr__(self, 'param', tuple(self.param))
            if len(self.param) != 4:
                raise ValidationError(f"A parametrization has 4 coordinates, got {len(self.param)}")
            if any(c.varset != PARAMETER for c in self.param):
                raise ValidationError("Parametrization coordinates must be polynomials in t")
            for g in self.generators:
                image = substitute(g, dict(zip(POINT_NAMES, self.param)), target=PARAMETER)
                if not image.is_zero():
                    raise ValidationError(f"Parametrization does not satisfy generator {g}", str(g))

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON serialization."""
        data = {'generators': [to_string(g) for g in self.generators]}
        if self.name:
            data['name'] = self.name
        if self.param is not None:
            data['param'] = [to_string(c) for c in self.param]
        if self.chart is not None:
            data['chart'] = to_string(self.chart)
        return data

    @classmethod
    def from_dict(cls, data: dict) -> 'CurveIdeal':
        """
        Create CurveIdeal from dictionary.

        Raises:
            ValidationError: If required keys are missing
            ParseError: If a polynomial string is malformed
        """
        if not isinstance(data, dict) or 'generators' not in data:
            raise ValidationError("Curve file must be a JSON object with a 'generators' list")
        generators = tuple(parse_poly(text, POINT) for text in data['generators'])
        param = None
        if data.get('param') is not None:
            param = tuple(parse_poly(text, PARAMETER) for text in data['param'])
        chart = None
        if data.get('chart') is not None:
            chart = parse_poly(data['chart'], POINT)
        return cls(generators=generators, param=param, chart=chart, name=data.get('name', ''))
