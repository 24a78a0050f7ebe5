"""Exact rational computations on free-loop spaces of spherical space forms.

Four pieces: a graded skew-commutative algebra engine with degree-truncated
cohomology (:mod:`loopspace.gca`), homotopy and minimal-model tables for
space forms and their circle quotients (:mod:`loopspace.spaceforms`), Bott
index iteration with geodesic-multiplicity certificates
(:mod:`loopspace.bott`), and a small text DSL with a command-line front end
(:mod:`loopspace.dsl`, :mod:`loopspace.cli`).
"""

from .gca import (
    AlgebraElement,
    BettiTable,
    DgaModel,
    Generator,
    Monomial,
    RingPresentation,
    apply_differential,
    check_model,
    cohomology,
    multiply,
    verify_ring_presentation,
)
from .spaceforms import (
    ActionData,
    ActionEntry,
    GysinInput,
    HomotopyTable,
    SpaceFormSpec,
    classify_order4_extension,
    gysin_check,
    loop_space_dims,
    sphere_rational_homotopy,
    theorem1_table,
    theorem2_table,
    theorem3_model,
)
from .bott import (
    BottFunction,
    Certificate,
    IndexSequence,
    bott_index,
    certify_theorem4,
    certify_theorem5,
    index_parity,
    is_nondegenerate,
    morse_matches_betti,
    parity_distinct,
    quarter_turn_function,
    schwarz_even,
)

__version__ = "0.1.0"
