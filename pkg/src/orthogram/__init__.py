"""orthogram: exact tools for orthogonal point configurations.

Gram matrices and stability certificates, determinantal-term
combinatorics, invariant evaluation, and the sphere dictionary — all in
exact rational arithmetic.
"""

from .config import DEFAULT_CAPS, CapExceeded, EnumerationCaps
from .graphs import (
    DeterminantalClass,
    Multigraph,
    determinantal_term_counts,
    enumerate_determinantal_classes,
    enumerate_regular_multigraphs,
    factor_avoiding,
    two_factorization,
)
from .invariants import (
    GraphPolynomial,
    LowRankTest,
    counterexample_matrix,
    counterexample_relation,
    determinant_polynomial,
    entry_cofactor_relations,
    eval_monomial,
    minor_polynomial,
    multidegree,
    plucker_bracket,
    plucker_syzygy,
    vanishes_on_low_rank,
)
from .linalg import (
    Matrix,
    PointConfiguration,
    SymmetricMatrix,
    bilinear,
    cayley_orthogonal,
    euclidean_configuration,
    gram_matrix,
    identity,
    parse_scalar,
    scalar_to_str,
)
from .spheres import (
    AT_INFINITY,
    AtInfinity,
    HyperbolicPairing,
    LiftedPoint,
    NormalizationError,
    Sphere,
    are_orthogonal,
    are_tangent,
    common_point,
    cyclic_cosine_invariant,
    fundamental_form,
    hyperbolic_pair,
    is_singular,
    lift,
    pairing,
    quadric_value,
    recover_isometry,
    reflection,
    unlift,
)
from .stability import (
    STABLE,
    STRICTLY_SEMISTABLE,
    UNSTABLE,
    StabilityVerdict,
    classify,
    classify_configuration,
    max_zero_block,
    one_ps_oracle,
    semistable_witness,
)

__version__ = "0.1.0"

__all__ = [
    "AT_INFINITY",
    "AtInfinity",
    "CapExceeded",
    "DEFAULT_CAPS",
    "DeterminantalClass",
    "EnumerationCaps",
    "GraphPolynomial",
    "HyperbolicPairing",
    "LiftedPoint",
    "LowRankTest",
    "Matrix",
    "Multigraph",
    "NormalizationError",
    "PointConfiguration",
    "STABLE",
    "STRICTLY_SEMISTABLE",
    "Sphere",
    "StabilityVerdict",
    "SymmetricMatrix",
    "UNSTABLE",
    "are_orthogonal",
    "are_tangent",
    "bilinear",
    "cayley_orthogonal",
    "classify",
    "classify_configuration",
    "common_point",
    "counterexample_matrix",
    "counterexample_relation",
    "cyclic_cosine_invariant",
    "determinant_polynomial",
    "determinantal_term_counts",
    "entry_cofactor_relations",
    "enumerate_determinantal_classes",
    "enumerate_regular_multigraphs",
    "euclidean_configuration",
    "eval_monomial",
    "factor_avoiding",
    "fundamental_form",
    "gram_matrix",
    "hyperbolic_pair",
    "identity",
    "is_singular",
    "lift",
    "max_zero_block",
    "minor_polynomial",
    "multidegree",
    "one_ps_oracle",
    "pairing",
    "parse_scalar",
    "plucker_bracket",
    "plucker_syzygy",
    "quadric_value",
    "recover_isometry",
    "reflection",
    "scalar_to_str",
    "semistable_witness",
    "two_factorization",
    "unlift",
    "vanishes_on_low_rank",
]
