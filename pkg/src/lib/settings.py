"""
Runtime Settings

Optional Groebner budget caps, read from the environment (and a local .env).
"""

import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

from .error_handling import ValidationError


MAX_DEGREE_ENV = 'CAYLEY_MAX_DEGREE'
MAX_STEPS_ENV = 'CAYLEY_MAX_STEPS'


@dataclass(frozen=True)
class GroebnerBudget:
    """Caps on a single Buchberger run. None means unbounded."""

    max_degree: Optional[int] = None  # largest S-pair lcm degree allowed
    max_steps: Optional[int] = None  # largest number of processed S-pairs

    def __post_init__(self):
        for label, value in (('max_degree', self.max_degree), ('max_steps', self.max_steps)):
            if value is not None and value < 1:
                raise ValidationError(f"{label} must be a positive integer", str(value))

    def to_dict(self) -> dict:
        return {'max_degree': self.max_degree, 'max_steps': self.max_steps}


def _read_int(name: str) -> Optional[int]:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValidationError(f"{name} must be an integer", raw)


def load_budget(max_degree: Optional[int] = None, max_steps: Optional[int] = None) -> GroebnerBudget:
    """
    Build the Groebner budget from the environment.

    Explicit arguments (e.g. from --max-degree) take precedence over
    CAYLEY_MAX_DEGREE / CAYLEY_MAX_STEPS.

    Args:
        max_degree: Override for the degree cap
        max_steps: Override for the step cap

    Returns:
        The effective GroebnerBudget

    Raises:
        ValidationError: If an environment value is not a positive integer
    """
    load_dotenv()
    return GroebnerBudget(
        max_degree=max_degree if max_degree is not None else _read_int(MAX_DEGREE_ENV),
        max_steps=max_steps if max_steps is not None else _read_int(MAX_STEPS_ENV),
    )
