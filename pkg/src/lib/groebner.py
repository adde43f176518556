"""
Groebner Bases

Buchberger's algorithm over QQ with Gebauer-Moeller pair pruning and
optional cofactor tracking, normal forms with certificates, ideal
membership, elimination and saturation.

Internal helpers (spoly, select, update) work on sympy PolyElements;
the public surface works on MultiPoly and IdealBasis.
"""

import threading
from dataclasses import dataclass
from typing import List, Optional, Sequence, Set, Tuple

from sympy.polys.rings import PolyElement

from .error_handling import CertificateError, GroebnerBudgetExceeded, ValidationError, print_info
from .polyring import MultiPoly, VarSet, common_varset, ring_for, to_string
from .settings import GroebnerBudget


Pair = Tuple[int, int]
Rep = List[PolyElement]


@dataclass(frozen=True)
class MonomialOrder:
    """grevlex, or a block order with the first `split` variables eliminated first."""

    kind: str = 'grevlex'  # grevlex | block
    split: int = 0

    def __post_init__(self):
        if self.kind not in ('grevlex', 'block'):
            raise ValidationError(f"Unknown monomial order: {self.kind}", self.kind)
        if self.kind == 'block' and self.split < 1:
            raise ValidationError("A block order needs a positive split index", str(self.split))

    @classmethod
    def of(cls, varset: VarSet) -> 'MonomialOrder':
        if 0 < varset.block < len(varset):
            return cls('block', varset.block)
        return cls('grevlex')

    def apply(self, varset: VarSet) -> VarSet:
        if self.kind == 'block':
            return VarSet(varset.names, block=self.split)
        return VarSet(varset.names)

    def to_dict(self) -> dict:
        return {'kind': self.kind, 'split': self.split}


@dataclass(frozen=True)
class NormalForm:
    """f = sum(basis_cofactors[k] * basis[k]) + remainder, and likewise over the generators."""

    remainder: MultiPoly
    basis_cofactors: Tuple[MultiPoly, ...]
    generator_cofactors: Optional[Tuple[MultiPoly, ...]] = None

    @property
    def is_zero(self) -> bool:
        return self.remainder.is_zero()

    def to_dict(self) -> dict:
        return {
            'remainder': to_string(self.remainder),
            'basis_cofactors': [to_string(c) for c in self.basis_cofactors],
            'generator_cofactors': (None if self.generator_cofactors is None
                                    else [to_string(c) for c in self.generator_cofactors]),
        }


def spoly(f: PolyElement, g: PolyElement):
    """S-polynomial of monic f and g, with the two monomial multipliers."""
    R = f.ring
    lcm = R.monomial_lcm(f.LM, g.LM)
    mf = R.monomial_div(lcm, f.LM)
    mg = R.monomial_div(lcm, g.LM)
    return f.mul_monom(mf) - g.mul_monom(mg), mf, mg


def select(G: Sequence[PolyElement], P: Set[Pair], strategy: str = 'normal') -> Pair:
    """Pick the next pair: smallest lcm in the ring order ('normal') or by degree first ('degree')."""
    R = G[0].ring

    def key(p: Pair):
        lcm = R.monomial_lcm(G[p[0]].LM, G[p[1]].LM)
        if strategy == 'degree':
            return sum(lcm), R.order(lcm), p
        if strategy == 'normal':
            return R.order(lcm), p
        raise ValidationError(f"Unknown selection strategy: {strategy}", strategy)

    return min(P, key=key)


def update(G: List[PolyElement], P: Set[Pair], f: PolyElement, lmG: List[tuple]):
    """New basis list and pair set after adding f (Gebauer-Moeller criteria)."""
    lmf = f.LM
    R = f.ring
    lcm = R.monomial_lcm
    mul = R.monomial_mul
    div = R.monomial_div

    P = {p for p in P if (not div(lcm(lmG[p[0]], lmG[p[1]]), lmf) or
                          lcm(lmG[p[0]], lmG[p[1]]) == lcm(lmG[p[0]], lmf) or
                          lcm(lmG[p[0]], lmG[p[1]]) == lcm(lmG[p[1]], lmf))}
    lcm_dict = {}
    for i in range(len(G)):
        lcm_dict.setdefault(lcm(lmG[i], lmf), []).append(i)
    minimalized_lcms = []
    for L in sorted(lcm_dict.keys(), key=R.order):
        if all(not div(L, L_) for L_ in minimalized_lcms):
            minimalized_lcms.append(L)
    P_ = set()
    for L in minimalized_lcms:
        if not any(lcm(lmG[i], lmf) == mul(lmG[i], lmf) for i in lcm_dict[L]):
            P_.add((min(lcm_dict[L]), len(G)))

    return G + [f], P | P_


def _divide(s: PolyElement, G: Sequence[PolyElement]):
    if not s:
        return [s.ring.zero for _ in G], s
    return s.div(list(G))


def _reduce(s: PolyElement, rep: Optional[Rep], G: Sequence[PolyElement], reps: Optional[List[Rep]]):
    quotients, r = _divide(s, G)
    if rep is None:
        return r, None
    rep = list(rep)
    for q, rep_g in zip(quotients, reps):
        if q:
            rep = [a - q * b for a, b in zip(rep, rep_g)]
    return r, rep


def _make_monic(f: PolyElement, rep: Optional[Rep]):
    c = f.LC
    if rep is not None:
        rep = [a.quo_ground(c) for a in rep]
    return f.quo_ground(c), rep


def run_buchberger(F: Sequence[PolyElement], reps: Optional[List[Rep]] = None,
                   budget: Optional[GroebnerBudget] = None, selection: str = 'normal'):
    """
    Reduced Groebner basis of nonzero polynomials F.

    Args:
        F: Nonzero generators in one sympy ring
        reps: Optional representation of each generator over the original
            generators; tracked through every step when given
        budget: Optional degree and step caps
        selection: Pair selection strategy

    Returns:
        (basis, reps) with basis sorted by leading monomial, reps None when untracked

    Raises:
        GroebnerBudgetExceeded: If the budget is exhausted
    """
    budget = budget or GroebnerBudget()
    R = F[0].ring
    tracking = reps is not None

    G: List[PolyElement] = []
    GR: List[Rep] = []
    lmG: List[tuple] = []
    P: Set[Pair] = set()
    for k, f in enumerate(F):
        g, rep = _make_monic(f, reps[k] if tracking else None)
        G, P = update(G, P, g, lmG)
        lmG.append(g.LM)
        GR.append(rep)

    steps = 0
    while P:
        i, j = select(G, P, strategy=selection)
        P.remove((i, j))
        degree = sum(R.monomial_lcm(lmG[i], lmG[j]))
        if budget.max_degree is not None and degree > budget.max_degree:
            raise GroebnerBudgetExceeded(
                f"S-pair degree {degree} exceeds the cap of {budget.max_degree}", degree=degree, steps=steps)
        steps += 1
        if budget.max_steps is not None and steps > budget.max_steps:
            raise GroebnerBudgetExceeded(
                f"More than {budget.max_steps} S-pairs processed", degree=degree, steps=steps)
        s, mi, mj = spoly(G[i], G[j])
        rep_s = None
        if tracking:
            rep_s = [a.mul_monom(mi) - b.mul_monom(mj) for a, b in zip(GR[i], GR[j])]
        r, rep_r = _reduce(s, rep_s, G, GR if tracking else None)
        if r:
            r, rep_r = _make_monic(r, rep_r)
            G, P = update(G, P, r, lmG)
            lmG.append(r.LM)
            GR.append(rep_r)

    print_info(f"Buchberger: {len(G)} polynomials after {steps} S-pairs")

    # minimalize
    keep: List[int] = []
    for k in sorted(range(len(G)), key=lambda k: R.order(lmG[k])):
        if all(not R.monomial_div(lmG[k], lmG[m]) for m in keep):
            keep.append(k)

    # interreduce
    basis: List[PolyElement] = []
    basis_reps: List[Rep] = []
    for k in keep:
        others = [G[m] for m in keep if m != k]
        other_reps = [GR[m] for m in keep if m != k] if tracking else None
        if others:
            g, rep = _reduce(G[k], GR[k], others, other_reps)
        else:
            g, rep = G[k], GR[k]
        g, rep = _make_monic(g, rep)
        basis.append(g)
        basis_reps.append(rep)

    return basis, (basis_reps if tracking else None)


class IdealBasis:
    """
    An ideal given by generators, with a lazily computed reduced Groebner basis.

    With cofactor tracking on, every basis element carries its expression in
    the generators, so normal forms also certify membership over the
    generators. A finished basis is read-only.
    """

    def __init__(self, generators: Sequence[MultiPoly], order: Optional[MonomialOrder] = None,
                 track_cofactors: bool = True, budget: Optional[GroebnerBudget] = None,
                 groebner: Optional[Sequence[MultiPoly]] = None):
        gens = list(generators)
        if not gens:
            raise ValidationError("An ideal needs at least one generator")
        varset = common_varset(gens)
        if order is not None:
            varset = order.apply(varset)
            gens = [g.to_varset(varset) for g in gens]
        self.varset = varset
        self.order = MonomialOrder.of(varset)
        self.generators: Tuple[MultiPoly, ...] = tuple(gens)
        self.track_cofactors = track_cofactors
        self.budget = budget or GroebnerBudget()
        self._lock = threading.Lock()
        self._basis: Optional[Tuple[MultiPoly, ...]] = None
        self._cofactors: Optional[Tuple[Tuple[MultiPoly, ...], ...]] = None
        if groebner is not None:
            self._seed(groebner)

    def _seed(self, groebner: Sequence[MultiPoly]) -> None:
        basis = tuple(g.to_varset(self.varset) for g in groebner)
        self._basis = basis
        if self.track_cofactors and basis == self.generators:
            n = len(basis)
            one = MultiPoly.one(self.varset)
            zero = MultiPoly.zero(self.varset)
            self._cofactors = tuple(tuple(one if i == k else zero for i in range(n)) for k in range(n))
        else:
            self.track_cofactors = False

    def _compute(self) -> None:
        ring = ring_for(self.varset)
        n = len(self.generators)
        nonzero = [k for k, g in enumerate(self.generators) if g]
        if not nonzero:
            self._basis = ()
            self._cofactors = ()
            return
        polys = [self.generators[k].poly for k in nonzero]
        reps = None
        if self.track_cofactors:
            reps = [[ring.one if i == k else ring.zero for i in range(n)] for k in nonzero]
        basis, basis_reps = run_buchberger(polys, reps, self.budget)
        self._basis = tuple(MultiPoly(self.varset, g) for g in basis)
        if basis_reps is not None:
            self._cofactors = tuple(tuple(MultiPoly(self.varset, a) for a in rep) for rep in basis_reps)

    @property
    def groebner(self) -> Tuple[MultiPoly, ...]:
        """The reduced Groebner basis, sorted by leading monomial."""
        if self._basis is None:
            with self._lock:
                if self._basis is None:
                    self._compute()
        return self._basis

    @property
    def cofactor_matrix(self) -> Optional[Tuple[Tuple[MultiPoly, ...], ...]]:
        """Row k expresses groebner[k] over the generators."""
        self.groebner
        return self._cofactors

    def is_unit(self) -> bool:
        basis = self.groebner
        return len(basis) == 1 and basis[0].is_constant() and not basis[0].is_zero()

    def normal_form(self, f: MultiPoly, verify: bool = False) -> NormalForm:
        """
        Reduce f by the Groebner basis.

        Args:
            f: Polynomial over this ideal's variables (or a subset of them)
            verify: Re-multiply the cofactors and compare with f

        Returns:
            NormalForm with remainder and cofactors

        Raises:
            CertificateError: If verification fails
        """
        f = f.to_varset(self.varset)
        basis = self.groebner
        zero = MultiPoly.zero(self.varset)
        if not basis:
            result = NormalForm(f, (), tuple(zero for _ in self.generators) if self.track_cofactors else None)
        else:
            quotients, r = _divide(f.poly, [b.poly for b in basis])
            basis_cofactors = tuple(MultiPoly(self.varset, q) for q in quotients)
            generator_cofactors = None
            if self._cofactors is not None:
                combined = [zero] * len(self.generators)
                for q, row in zip(basis_cofactors, self._cofactors):
                    if q:
                        combined = [c + q * a for c, a in zip(combined, row)]
                generator_cofactors = tuple(combined)
            result = NormalForm(MultiPoly(self.varset, r), basis_cofactors, generator_cofactors)
        if verify:
            self.verify(f, result)
        return result

    def verify(self, f: MultiPoly, nf: NormalForm) -> None:
        total = nf.remainder
        for q, b in zip(nf.basis_cofactors, self.groebner):
            total = total + q * b
        if total != f:
            raise CertificateError(f"Basis cofactors do not reconstruct {f}")
        if nf.generator_cofactors is not None:
            total = nf.remainder
            for c, g in zip(nf.generator_cofactors, self.generators):
                total = total + c * g
            if total != f:
                raise CertificateError(f"Generator cofactors do not reconstruct {f}")

    def member(self, f: MultiPoly) -> bool:
        return self.normal_form(f).is_zero

    def certificate(self, f: MultiPoly) -> Optional[Tuple[MultiPoly, ...]]:
        """Generator cofactors proving f is in the ideal, or None if it is not."""
        nf = self.normal_form(f)
        if not nf.is_zero:
            return None
        return nf.generator_cofactors

    def contains(self, other: 'IdealBasis') -> bool:
        return all(self.member(g) for g in other.generators)

    def to_dict(self) -> dict:
        data = {
            'generators': [to_string(g) for g in self.generators],
            'variables': list(self.varset.names),
            'order': self.order.to_dict(),
        }
        if self._basis is not None:
            data['groebner'] = [to_string(g) for g in self._basis]
        return data

    def __repr__(self):
        return f"IdealBasis({[to_string(g) for g in self.generators]})"


def buchberger(gens: Sequence[MultiPoly], order: Optional[MonomialOrder] = None,
               track_cofactors: bool = True, budget: Optional[GroebnerBudget] = None) -> IdealBasis:
    """Compute the reduced Groebner basis of the generators now."""
    ideal = IdealBasis(gens, order=order, track_cofactors=track_cofactors, budget=budget)
    ideal.groebner
    return ideal


def normal_form(f: MultiPoly, ideal: IdealBasis, verify: bool = False) -> NormalForm:
    return ideal.normal_form(f, verify=verify)


def member(f: MultiPoly, ideal: IdealBasis) -> bool:
    return ideal.member(f)


def ideal_equal(a: IdealBasis, b: IdealBasis) -> bool:
    return a.contains(b) and b.contains(a)


def _free_of_block(f: MultiPoly, k: int) -> bool:
    return all(not any(monom[:k]) for monom in f.poly.itermonoms())


def _restricted(work: IdealBasis, kept: VarSet, budget: Optional[GroebnerBudget]) -> IdealBasis:
    k = work.varset.block
    retained = [g.to_varset(kept) for g in work.groebner if _free_of_block(g, k)]
    if not retained:
        return IdealBasis([MultiPoly.zero(kept)], track_cofactors=False, budget=budget)
    seeded = retained if kept.block == 0 else None
    return IdealBasis(retained, track_cofactors=False, budget=budget, groebner=seeded)


def eliminate(ideal: IdealBasis, drop: Sequence[str], budget: Optional[GroebnerBudget] = None) -> IdealBasis:
    """
    Generators of the ideal intersected with the ring of the remaining variables.

    Args:
        ideal: The ideal
        drop: Names of the variables to eliminate
        budget: Optional Groebner budget (defaults to the ideal's)

    Returns:
        IdealBasis over the remaining variables

    Raises:
        UnknownVariable: If a dropped name is not a variable of the ideal
        ValidationError: If every variable would be eliminated
    """
    budget = budget or ideal.budget
    drop = tuple(drop)
    block_varset = ideal.varset.with_block(drop)
    if len(drop) >= len(ideal.varset):
        raise ValidationError("Cannot eliminate every variable")
    kept = ideal.varset.without(drop)
    work = IdealBasis([g.to_varset(block_varset) for g in ideal.generators],
                      track_cofactors=False, budget=budget)
    return _restricted(work, kept, budget)


def saturate(ideal: IdealBasis, g: MultiPoly, drop: Sequence[str] = (),
             budget: Optional[GroebnerBudget] = None) -> IdealBasis:
    """
    The saturation ideal : g^infinity, optionally eliminating `drop` in the same run.

    Adjoins an auxiliary variable u with 1 - u*g and eliminates u
    (together with `drop`).

    Raises:
        ValidationError: If g is zero
    """
    if g.is_zero():
        raise ValidationError("Saturation needs a nonzero polynomial")
    budget = budget or ideal.budget
    drop = tuple(drop)
    for name in drop:
        ideal.varset.index(name)
    aux = ideal.varset.fresh_name('u_sat')
    extended = VarSet((aux,) + ideal.varset.names).with_block((aux,) + drop)
    u = MultiPoly.variable(aux, extended)
    gens = [h.to_varset(extended) for h in ideal.generators]
    gens.append(1 - u * g.to_varset(extended))
    work = IdealBasis(gens, track_cofactors=False, budget=budget)
    return _restricted(work, ideal.varset.without(drop), budget)
