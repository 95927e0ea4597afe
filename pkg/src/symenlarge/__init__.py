"""Enlarged symmetry groups for projective unitary representations.

Exact second Lie algebra cohomology, central extensions, and the four-way
classification of the enlarged group by (pi1(G), H2(g, R)).
"""
from .classifier import Case, EnlargementVerdict, classify, classify_algebra, explain
from .cohomology import CohomologyBasis, OneCochain, TwoCochain, h2, is_coboundary, is_cocycle
from .extensions import central_extend, fingerprint
from .lie import LieAlgebra, bracket, jacobi_check, validate
from .registry import GroupDescriptor, Pi1Descriptor, build

__all__ = [
    "Case", "CohomologyBasis", "EnlargementVerdict", "GroupDescriptor", "LieAlgebra", "OneCochain",
    "Pi1Descriptor", "TwoCochain", "bracket", "build", "central_extend", "classify", "classify_algebra",
    "explain", "fingerprint", "h2", "is_coboundary", "is_cocycle", "jacobi_check", "validate",
]
__version__ = "0.1.0"
