"""Primitive idempotents of degenerate cyclotomic Hecke algebras by fusion."""

from .combinat import (
    Node, StandardTableau, enumerate_multipartitions, enumerate_standard_tableaux,
    residue, residue_sequence,
)
from .errors import (
    HeckeFusionError, InvariantBreach, NonAdmissibleDivisor, PoleAtEvaluationPoint,
    SeparationViolated, SpectralCollision,
)
from .exact import GenericScalar, Parameters, RatFun, separation_value
from .fusion import FusionTrace, fused_idempotent, jm_idempotent, phi
from .rep import AlgebraElement, SeminormalRep
from .weights import theta_multipartition, theta_tableau

__version__ = "0.1.0"

__all__ = [
    "Node", "StandardTableau", "enumerate_multipartitions", "enumerate_standard_tableaux",
    "residue", "residue_sequence", "HeckeFusionError", "InvariantBreach",
    "NonAdmissibleDivisor", "PoleAtEvaluationPoint", "SeparationViolated",
    "SpectralCollision", "GenericScalar", "Parameters", "RatFun", "separation_value",
    "FusionTrace", "fused_idempotent", "jm_idempotent", "phi", "AlgebraElement",
    "SeminormalRep", "theta_multipartition", "theta_tableau",
]
