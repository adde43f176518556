"""
Chow Service

Decides whether a form on G(1,3) is weakly Cayley, honest or dual honest,
and computes the Chow form of a space curve by elimination.
"""

from typing import List, Optional, Tuple

from ..lib.cayley_forms import dualize, incidence_forms, schubert_third_line
from ..lib.error_handling import (
    EmptyCurve,
    MultipleOfQ,
    NotACurve,
    print_info,
)
from ..lib.groebner import IdealBasis, NormalForm, saturate
from ..lib.harmonic import canonical_rep, is_multiple_of_q
from ..lib.klein import PlueckerVector, bracket, gradient, hessian, hessian_apply, klein_quadric
from ..lib.polyring import INCIDENCE, PLUECKER, POINT, POINT_NAMES, MultiPoly, variables
from ..lib.settings import GroebnerBudget, load_budget
from ..models.classification_report import ClassificationReport, HonestWitness
from ..models.curve_ideal import CurveIdeal
from ..models.harmonic_decomposition import CanonicalCayleyRep


WITNESS_NAMES = ('hessian_l2_l', 'hessian_l2_l1', 'hessian_l2_l2')


class ChowService:
    """Cayley form tests and curve elimination sharing one Groebner budget."""

    def __init__(self, budget: Optional[GroebnerBudget] = None):
        """
        Args:
            budget: Groebner budget; read from the environment when omitted
        """
        self.budget = budget if budget is not None else load_budget()
        self._quadric_ideal: Optional[IdealBasis] = None

    @property
    def quadric_ideal(self) -> IdealBasis:
        """(Q), whose one generator is already a Groebner basis."""
        if self._quadric_ideal is None:
            Q = klein_quadric(PLUECKER)
            self._quadric_ideal = IdealBasis([Q], budget=self.budget, groebner=[Q])
        return self._quadric_ideal

    def cayley_ideal(self, F: MultiPoly) -> IdealBasis:
        """(F, Q)."""
        return IdealBasis([F, klein_quadric(F.varset)], budget=self.budget)

    def _check_form(self, F: MultiPoly) -> int:
        m = F.homogeneous_degree()
        if is_multiple_of_q(F):
            raise MultipleOfQ(f"Q divides {F}")
        return m

    def weak_cayley_certificate(self, F: MultiPoly) -> NormalForm:
        """
        Normal form of {F,F} modulo (F, Q), with verified cofactors.

        Raises:
            NotHomogeneous: If F is not homogeneous
            MultipleOfQ: If Q divides F
        """
        self._check_form(F)
        return self.cayley_ideal(F).normal_form(bracket(F, F), verify=True)

    def weak_cayley_test(self, F: MultiPoly) -> bool:
        return self.weak_cayley_certificate(F).is_zero

    def honest_witnesses(self, F: MultiPoly, rep: Optional[CanonicalCayleyRep] = None) -> List[HonestWitness]:
        """
        The three Hessian pairings of L'' with L, L' and L''.

        L is the generic line, L' = grad F2 and L'' the third line meeting
        both. Each value is reduced modulo (Q, F) and modulo (Q).

        Raises:
            NotWeaklyCayley: If F is not weakly Cayley
        """
        rep = rep or canonical_rep(F, self.budget)
        qf = self.cayley_ideal(F)
        line = PlueckerVector.symbolic(F.varset)
        conormal = gradient(rep.f2)
        third = schubert_third_line(line, conormal, modulo=qf)
        H = hessian(F)
        witnesses = []
        for name, other in zip(WITNESS_NAMES, (line, conormal, third)):
            value = hessian_apply(H, third, other) / 2
            nf_qf = qf.normal_form(value)
            nf_q = self.quadric_ideal.normal_form(value)
            witnesses.append(HonestWitness(
                name=name,
                value=value,
                normal_form_qf=nf_qf.remainder,
                normal_form_q=nf_q.remainder,
                cofactors=nf_qf.generator_cofactors if nf_qf.is_zero else None,
            ))
        return witnesses

    def honest_test(self, F: MultiPoly, rep: Optional[CanonicalCayleyRep] = None) -> Tuple[bool, List[HonestWitness]]:
        """
        True when all three witnesses lie in (Q, F).

        Raises:
            NotWeaklyCayley: If F is not weakly Cayley
        """
        witnesses = self.honest_witnesses(F, rep)
        return all(w.member_qf for w in witnesses), witnesses

    def dual_honest_test(self, F: MultiPoly) -> Tuple[bool, List[HonestWitness]]:
        """honest_test applied to the polarity image of F."""
        canonical_rep(F, self.budget)
        return self.honest_test(dualize(F))

    def classify(self, F: MultiPoly) -> ClassificationReport:
        """
        Run the weak, honest and dual honest tests on F.

        Raises:
            NotHomogeneous: If F is not homogeneous
            MultipleOfQ: If Q divides F
        """
        m = self._check_form(F)
        nf = self.weak_cayley_certificate(F)
        if not nf.is_zero:
            print_info(f"{{F,F}} reduces to {nf.remainder}")
            return ClassificationReport(form=F, degree=m, weak_cayley=False, weak_remainder=nf.remainder)

        rep = canonical_rep(F, self.budget)
        honest, witnesses = self.honest_test(F, rep)
        dual_honest, dual_witnesses = self.honest_test(dualize(F))
        return ClassificationReport(
            form=F,
            degree=m,
            weak_cayley=True,
            honest=honest,
            dual_honest=dual_honest,
            canonical_rep=rep,
            weak_remainder=nf.remainder,
            weak_cofactors=nf.generator_cofactors,
            honest_witnesses=witnesses,
            dual_honest_witnesses=dual_witnesses,
        )

    def chow_form_of_curve(self, curve: CurveIdeal) -> MultiPoly:
        """
        The Chow form of a curve: the lines meeting it, modulo Q, monic.

        Adds the incidence equations x ^ p = 0 to the curve equations,
        saturates by the chart form and eliminates x0..x3.

        Raises:
            EmptyCurve: If the generators have no common zero off the chart plane
            NotACurve: If the lines meeting the zero set are not cut out by Q and one form
            GroebnerBudgetExceeded: If the elimination exceeds the budget
        """
        point_ideal = IdealBasis(curve.generators, track_cofactors=False, budget=self.budget)
        if point_ideal.is_unit():
            raise EmptyCurve(f"{curve.name or 'Curve'} has no points")

        gens = [g.to_varset(INCIDENCE) for g in curve.generators] + incidence_forms(INCIDENCE)
        chart = curve.chart
        if chart is None:
            chart = sum(variables(POINT)[1:], variables(POINT)[0])
        print_info(f"Eliminating {', '.join(POINT_NAMES)} from {len(gens)} equations")
        lines = saturate(IdealBasis(gens, track_cofactors=False, budget=self.budget),
                         chart.to_varset(INCIDENCE), drop=POINT_NAMES, budget=self.budget)
        if lines.is_unit():
            raise EmptyCurve(f"{curve.name or 'Curve'} has no points off the chart plane")

        candidates = []
        for g in lines.groebner:
            reduced = self.quadric_ideal.normal_form(g.to_varset(PLUECKER)).remainder
            if reduced:
                candidates.append(reduced)
        if not candidates:
            raise NotACurve("Every line meets the zero set: it is a surface")
        F = min(candidates, key=lambda c: c.degree).monic()

        closure = self.cayley_ideal(F)
        for g in lines.groebner:
            if not closure.member(g.to_varset(PLUECKER)):
                raise NotACurve("The lines meeting the zero set need more than one equation")
        return F
