"""
Classification Report Model

Outcome of the weak Cayley, honest and dual honest tests for one form.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from ..lib.error_handling import ValidationError
from ..lib.polyring import MultiPoly, to_string
from .harmonic_decomposition import CanonicalCayleyRep


@dataclass(frozen=True)
class HonestWitness:
    """One of the three second-derivative polynomials and its normal forms."""

    name: str  # hessian_l2_l | hessian_l2_l1 | hessian_l2_l2
    value: MultiPoly
    normal_form_qf: MultiPoly  # remainder modulo (Q, F)
    normal_form_q: MultiPoly  # remainder modulo (Q)
    cofactors: Optional[Tuple[MultiPoly, ...]] = None  # over (F, Q) when member_qf

    @property
    def member_qf(self) -> bool:
        return self.normal_form_qf.is_zero()

    @property
    def member_q(self) -> bool:
        return self.normal_form_q.is_zero()

    def to_dict(self, certificate: bool = False) -> dict:
        data = {
            'name': self.name,
            'value': to_string(self.value),
            'normal_form_qf': to_string(self.normal_form_qf),
            'member_qf': self.member_qf,
            'normal_form_q': to_string(self.normal_form_q),
            'member_q': self.member_q,
        }
        if certificate and self.cofactors is not None:
            data['cofactors'] = {'f': to_string(self.cofactors[0]), 'q': to_string(self.cofactors[1])}
        return data


@dataclass
class ClassificationReport:
    """Flags and evidence for a Cayley form candidate."""

    form: MultiPoly
    degree: int
    weak_cayley: bool
    honest: bool = False
    dual_honest: bool = False
    canonical_rep: Optional[CanonicalCayleyRep] = None
    weak_remainder: Optional[MultiPoly] = None  # {F,F} modulo (Q, F)
    weak_cofactors: Optional[Tuple[MultiPoly, MultiPoly]] = None  # (B, A) with {F,F} = B*F + A*Q
    honest_witnesses: List[HonestWitness] = field(default_factory=list)
    dual_honest_witnesses: List[HonestWitness] = field(default_factory=list)

    def __post_init__(self):
        """Validate report consistency."""
        if self.honest and not self.weak_cayley:
            raise ValidationError("An honest form must be weakly Cayley")
        if self.dual_honest and not self.weak_cayley:
            raise ValidationError("A dual honest form must be weakly Cayley")
        if self.weak_cayley and self.canonical_rep is None:
            raise ValidationError("A weakly Cayley report needs its canonical representative")

    @property
    def label(self) -> str:
        """Short description; both flags can hold for degenerate self-dual forms."""
        if not self.weak_cayley:
            return 'not-cayley'
        if self.honest and self.dual_honest:
            return 'honest+dual-honest'
        if self.honest:
            return 'honest'
        if self.dual_honest:
            return 'dual-honest'
        return 'tangential'

    def to_dict(self, certificate: bool = False) -> dict:
        """Convert to dictionary for JSON serialization."""
        data = {
            'form': to_string(self.form),
            'degree': self.degree,
            'weak_cayley': self.weak_cayley,
            'honest': self.honest,
            'dual_honest': self.dual_honest,
            'label': self.label,
            'canonical_rep': self.canonical_rep.to_dict() if self.canonical_rep else None,
            'honest_witnesses': [w.to_dict(certificate) for w in self.honest_witnesses],
            'dual_honest_witnesses': [w.to_dict(certificate) for w in self.dual_honest_witnesses],
        }
        if self.weak_remainder is not None:
            data['weak_remainder'] = to_string(self.weak_remainder)
        if certificate and self.weak_cofactors is not None:
            data['weak_certificate'] = {
                'cofactor_f': to_string(self.weak_cofactors[0]),
                'cofactor_q': to_string(self.weak_cofactors[1]),
            }
        return data
