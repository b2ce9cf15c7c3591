"""Approximate Schauder frames on finite-dimensional l^p spaces.

Construct and validate frame pairs, compute canonical and parameterized
duals, decide similarity and orthogonality through operator criteria,
and synthesize Parseval frames by interpolation.
"""

from .errors import (
    ConsistencyError,
    ContractViolated,
    DimensionMismatch,
    FrameFormatError,
    GateSingular,
    GenerationFailed,
    InsufficientCoordinates,
    MixedExponents,
    NonSquare,
    NotAFrame,
    NotDual,
    NotInvertible,
    NotInvertibleWitness,
    NotOrthogonal,
    NotParseval,
    NotSimilar,
    PasfError,
    RequiresSquare,
    Singular,
    SpaceMismatch,
)
from .spaces import (
    DEFAULT_TOL,
    INF,
    LinearMap,
    NormBound,
    PNormSpace,
    Vector,
    apply,
    compose,
    identity,
    invert,
    invert_with_rcond,
    operator_norm,
    rank,
    vector_norm,
)
from .frames import (
    FramePair,
    FrameReport,
    analysis_operator,
    basis_factorization,
    factorize,
    frame_operator,
    from_factorization,
    projection,
    reconstruct,
    synthesis_operator,
    validate,
)
from .fileio import dumps_frame, frame_from_dict, frame_to_dict, load_frame, loads_frame, save_frame
from .duality import (
    DualCandidate,
    canonical_dual,
    canonical_dual_bounds,
    dual_from_parameters,
    has_unique_dual,
    is_dual,
    left_inverse_from,
    parameters_from_dual,
    right_inverse_from,
)
from .similarity import (
    SimilarityWitness,
    apply_similarity,
    are_similar,
    parseval_transfer_check,
    parsevalize,
    witness_from_frames,
)
from .orthogonality import (
    InterpolationOperators,
    interpolate,
    is_orthogonal,
    mixed_pair_degeneracy_check,
    scalar_interpolate,
)
from .generators import (
    PortableRng,
    Seed,
    random_dual,
    random_frame,
    random_orthogonal_parseval_pair,
    reconstruction_oracle,
)

__version__ = "0.1.0"
