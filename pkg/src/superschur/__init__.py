"""Exact Schur multipliers of finite-dimensional Lie superalgebras and pairs."""

from .exactla import RatMatrix, nullspace, rank, rref
from .core import (
    ActionTable,
    GradedSubspace,
    Parity,
    SuperAlgebra,
    ValidationReport,
    bracket,
    center,
    centralizer,
    commutator_subspace,
    direct_sum,
    is_graded_ideal,
    is_subalgebra,
    lower_central_series,
    nilpotency_class,
    pair_center,
    quotient,
    semidirect,
    validate,
    validate_action,
)
from .homology import BoundaryMaps, MultiplierReport, build_d2, build_d3, multiplier_dim
from .pairs import (
    PairPresentation,
    RelativeCentralExtension,
    UnsupportedPair,
    find_complement,
    is_cover_candidate,
    pair_multiplier_dim,
    validate_rce,
    verify_complement,
)
from . import catalog

__version__ = "0.1.0"
