"""Bound quiver algebras, degree 0 and 1 Hochschild cohomology, and
partial relation extensions, all over exact arithmetic."""

from .exactla import QQ, Field, FieldError, Matrix, PrimeField, Subspace, field_from_spec
from .quiver import Arrow, Path, Quiver, compose, enumerate_paths, is_acyclic
from .qdsl import AlgebraBlock, ParseError, PresentationFile, parse, serialize
from .algebra import (
    AlgebraBuildError,
    AlgebraElement,
    BoundQuiverAlgebra,
    NotFiniteDimensionalError,
    build,
    center,
    is_triangular,
    quotient_by_arrows,
)
from .repmod import ext2_dimension, gldim_at_most
from .bimod import (
    Bimodule,
    arrow_ideal_bimodule,
    curly_E_dimension,
    direct_sum_check,
    end_enveloping,
    regular_bimodule,
)
from .hochschild import CohomologySpace, bar_h, cup_product, h0, h1, is_coboundary
from .extensions import (
    ExtensionPoset,
    LiftWitness,
    SplitError,
    SplitPresentation,
    TheoremReport,
    build_split,
    hochschild_projection,
    lift_derivation,
    poset,
    split_presentation,
    verify_theorem,
)

__all__ = [
    "QQ",
    "Field",
    "FieldError",
    "Matrix",
    "PrimeField",
    "Subspace",
    "field_from_spec",
    "Arrow",
    "Path",
    "Quiver",
    "compose",
    "enumerate_paths",
    "is_acyclic",
    "AlgebraBlock",
    "ParseError",
    "PresentationFile",
    "parse",
    "serialize",
    "AlgebraBuildError",
    "AlgebraElement",
    "BoundQuiverAlgebra",
    "NotFiniteDimensionalError",
    "build",
    "center",
    "is_triangular",
    "quotient_by_arrows",
    "ext2_dimension",
    "gldim_at_most",
    "Bimodule",
    "arrow_ideal_bimodule",
    "curly_E_dimension",
    "direct_sum_check",
    "end_enveloping",
    "regular_bimodule",
    "CohomologySpace",
    "bar_h",
    "cup_product",
    "h0",
    "h1",
    "is_coboundary",
    "ExtensionPoset",
    "LiftWitness",
    "SplitError",
    "SplitPresentation",
    "TheoremReport",
    "build_split",
    "hochschild_projection",
    "lift_derivation",
    "poset",
    "split_presentation",
    "verify_theorem",
]

__version__ = "0.1.0"
