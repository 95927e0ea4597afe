"""Enlarged symmetry group from (pi1(G), H2(g, R)).

Two yes/no questions decide the case: is G simply connected, and does the
Lie algebra have nonvanishing second cohomology.  The four outcomes are

    pi1 trivial,     H2 = 0   ->  Identity                 (G_enl = G)
    pi1 nontrivial,  H2 = 0   ->  UniversalCover           (G_enl = cover of G)
    pi1 trivial,     H2 != 0  ->  CentralExtension         (R^m extension of G)
    pi1 nontrivial,  H2 != 0  ->  CentralExtensionOfCover  (R^m extension of the cover)

with m = dim H2.  The cover has the same Lie algebra, so the algebra of the
enlarged group is either g itself or g extended by every H2 representative.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from . import cohomology, lie, registry
from .cohomology import CohomologyBasis
from .extensions import ExtendedAlgebra, central_extend, fingerprint
from .lie import LieAlgebra
from .registry import GroupDescriptor, Pi1Descriptor


class Case(str, enum.Enum):
    IDENTITY = "Identity"
    UNIVERSAL_COVER = "UniversalCover"
    CENTRAL_EXTENSION = "CentralExtension"
    CENTRAL_EXTENSION_OF_COVER = "CentralExtensionOfCover"


def case_for(pi1_trivial: bool, h2_vanishes: bool) -> Case:
    if pi1_trivial:
        return Case.IDENTITY if h2_vanishes else Case.CENTRAL_EXTENSION
    return Case.UNIVERSAL_COVER if h2_vanishes else Case.CENTRAL_EXTENSION_OF_COVER


@dataclass(frozen=True)
class EnlargementVerdict:
    group: str
    case_id: Case
    h2: CohomologyBasis
    pi1: Pi1Descriptor
    enl_algebra: ExtendedAlgebra | LieAlgebra
    enl_description: str
    cover_name: str | None
    named_match: str | None

    @property
    def enlarged_lie_algebra(self) -> LieAlgebra:
        if isinstance(self.enl_algebra, ExtendedAlgebra):
            return self.enl_algebra.algebra
        return self.enl_algebra


def _named_match(L: LieAlgebra) -> str | None:
    """First simply connected registry group with the same fingerprint.

    A candidate match only: equal fingerprints do not prove isomorphism.
    """
    target = fingerprint(L)
    for cand in registry.candidates_of_dim(L.dim):
        if cand.simply_connected and fingerprint(cand.algebra) == target:
            return cand.name
    return None


def classify_algebra(L: LieAlgebra, pi1: Pi1Descriptor, group_name: str | None = None,
                     cover_name: str | None = None) -> EnlargementVerdict:
    L = lie.validate(L)
    group_name = group_name or L.name
    h = cohomology.h2(L)
    case = case_for(pi1.trivial, h.dim_H2 == 0)
    if h.dim_H2:
        enl = central_extend(L, h.representatives, name=f"{L.name}~")
        enl_lie = lie.validate(enl.algebra)
        enl = ExtendedAlgebra(enl_lie, enl.base_dim, enl.central_indices, enl.cocycles)
    else:
        enl = enl_lie = L
    m = h.dim_H2
    base = cover_name or (group_name if pi1.trivial else f"cover({group_name})")
    if case in (Case.IDENTITY, Case.UNIVERSAL_COVER):
        desc = base
    else:
        shown = f"({base})" if " " in base else base
        desc = f"ℝ{'' if m == 1 else registry._superscript(m)} ⊕_ω {shown}"
    return EnlargementVerdict(
        group=group_name, case_id=case, h2=h, pi1=pi1, enl_algebra=enl,
        enl_description=desc, cover_name=cover_name, named_match=_named_match(enl_lie))


def classify(G: GroupDescriptor) -> EnlargementVerdict:
    return classify_algebra(G.algebra, G.pi1, group_name=G.name, cover_name=G.universal_cover_name)


def _central_terms(v: EnlargementVerdict) -> str:
    if not isinstance(v.enl_algebra, ExtendedAlgebra):
        return ""
    L = v.enl_algebra.algebra
    central = set(v.enl_algebra.central_indices)
    terms = []
    for (i, j), vec in L.brackets.items():
        for k, c in vec.items():
            if k in central:
                coeff = "" if c == 1 else ("-" if c == -1 else f"{c}·")
                terms.append(f"[{L.basis[i]}, {L.basis[j]}] ∋ {coeff}{L.basis[k]}")
    shown = ", ".join(terms[:6]) + (", ..." if len(terms) > 6 else "")
    return f" The central charge{'s' if len(central) > 1 else ''} enter{'' if len(central) > 1 else 's'} as: {shown}."


def explain(v: EnlargementVerdict) -> str:
    """Deterministic narrative naming the theorem that applies."""
    m = v.h2.dim_H2
    head = f"{v.group}: pi1 = {v.pi1}, dim H2(g, R) = {m}."
    if v.case_id is Case.IDENTITY:
        body = ("No topological and no algebraic obstruction. By Bargmann's theorem every projective "
                "unitary representation has a lift to a unitary representation of the group itself: "
                f"G_enl = {v.enl_description}.")
    elif v.case_id is Case.UNIVERSAL_COVER:
        body = ("Topological obstruction only. The universal cover G~ is simply connected and shares the "
                "Lie algebra, so H²_{es,gr}(G̃,U(1)) ≅ H²(𝔤̃,ℝ) = 0 and every projective representation "
                f"corresponds to a unitary representation of the universal cover: G_enl = {v.enl_description}.")
    elif v.case_id is Case.CENTRAL_EXTENSION:
        body = ("Algebraic obstruction only (simply connected group, nonvanishing Lie algebra cohomology). "
                f"Projective representations correspond to unitary representations of a central extension "
                f"of the group by ℝ{registry._superscript(m)}: G_enl = {v.enl_description}.")
    else:
        body = ("Both obstructions are present. By Cassinelli's theorem projective representations "
                f"correspond to unitary representations of a central extension of the universal cover G̃ "
                f"by ℝ{registry._superscript(m)}: G_enl = {v.enl_description}.")
    tail = _central_terms(v)
    if v.case_id in (Case.CENTRAL_EXTENSION, Case.CENTRAL_EXTENSION_OF_COVER):
        tail += (" Extensions are reported by ℝ^m; the corresponding U(1)-extension variant is the "
                 "quotient by a lattice in the centre.")
        if v.group.startswith("galilei"):
            tail += (" The central charge is the mass; distinct masses give inequivalent extensions "
                     "(Bargmann superselection rule).")
    if v.named_match:
        tail += f" Candidate match for the enlarged algebra (fingerprint only): {v.named_match}."
    return f"{head} {body}{tail}"
