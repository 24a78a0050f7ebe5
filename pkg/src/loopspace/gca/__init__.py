"""Exact engine for free graded skew-commutative differential algebras."""

from .algebra import (
    AlgebraElement,
    DgaModel,
    GcaError,
    Generator,
    MixedDegreeError,
    Monomial,
    UnknownGeneratorError,
    apply_differential,
    multiply,
)
from .cohomology import (
    DEFAULT_BASIS_LIMIT,
    DEFAULT_MAX_DEGREE,
    BasisLimitError,
    BettiTable,
    CheckResult,
    ComplexData,
    ModelReport,
    RingPresentation,
    RingReport,
    check_model,
    cochain_complex,
    cohomology,
    quotient_ring_dims,
    verify_ring_presentation,
)

__all__ = [
    "AlgebraElement",
    "BasisLimitError",
    "BettiTable",
    "CheckResult",
    "ComplexData",
    "DEFAULT_BASIS_LIMIT",
    "DEFAULT_MAX_DEGREE",
    "DgaModel",
    "GcaError",
    "Generator",
    "MixedDegreeError",
    "ModelReport",
    "Monomial",
    "RingPresentation",
    "RingReport",
    "UnknownGeneratorError",
    "apply_differential",
    "check_model",
    "cochain_complex",
    "cohomology",
    "multiply",
    "quotient_ring_dims",
    "verify_ring_presentation",
]
