"""Exact jet-bundle transition matrices and splitting types on P^N.

The package constructs the two transition cocycles of the order-k jet
bundle of O(d) on the projective line, recovers Birkhoff-Grothendieck
splitting types by two independent exact algorithms, tabulates the
relevant sheaf cohomology in closed form, and verifies torus-weight
classifications of jet fibers, all over the rationals with no floating
point anywhere.
"""

from .birkhoff import BirkhoffWitness, birkhoff_factorize, poly_divmod
from .cohomology import (
    CohomologyTable,
    LineBundle,
    TwistedIdeal,
    h0_line_bundle,
    jet_c1,
    jet_rank,
    line_bundle_cohomology,
    parse_sheaf,
    restriction_sequence_balance,
    sheaf_cohomology,
    twisted_ideal_cohomology,
)
from .equivariant import (
    FiberReport,
    SumExpr,
    SymL,
    SymV,
    TensorExpr,
    Weight,
    WeightModule,
    direct_sum,
    fiber_oracle,
    ideal_cohomology_weights,
    line_cohomology_weights,
    predicted_fiber,
    realize,
    tensor,
    verify_fiber,
)
from .errors import (
    InternalInconsistencyError,
    NotACocycleError,
    UnsupportedCaseError,
)
from .jets import (
    JetSpec,
    Side,
    binomial,
    build_left_matrix,
    build_matrix,
    build_right_matrix,
    expected_det_exponent,
    truncation_check,
    verify_cocycle,
)
from .laurent import LaurentPoly
from .matrices import GLClass, LaurentMatrix
from .sections import (
    SectionProfile,
    certified_profile,
    default_section_bound,
    h0_nullity,
)
from .splitting import (
    SplittingType,
    h0_of_twisted_cocycle,
    predicted_splitting,
    splitting_from_h0,
)
from .verify import CellResult, VerifyReport, run_verification, worker_count

__version__ = "0.1.0"

__all__ = [
    "BirkhoffWitness",
    "CellResult",
    "CohomologyTable",
    "FiberReport",
    "GLClass",
    "InternalInconsistencyError",
    "JetSpec",
    "LaurentMatrix",
    "LaurentPoly",
    "LineBundle",
    "NotACocycleError",
    "SectionProfile",
    "Side",
    "SplittingType",
    "SumExpr",
    "SymL",
    "SymV",
    "TensorExpr",
    "TwistedIdeal",
    "UnsupportedCaseError",
    "VerifyReport",
    "Weight",
    "WeightModule",
    "binomial",
    "birkhoff_factorize",
    "build_left_matrix",
    "build_matrix",
    "build_right_matrix",
    "certified_profile",
    "default_section_bound",
    "direct_sum",
    "expected_det_exponent",
    "fiber_oracle",
    "h0_line_bundle",
    "h0_nullity",
    "h0_of_twisted_cocycle",
    "ideal_cohomology_weights",
    "jet_c1",
    "jet_rank",
    "line_bundle_cohomology",
    "line_cohomology_weights",
    "parse_sheaf",
    "poly_divmod",
    "predicted_fiber",
    "predicted_splitting",
    "realize",
    "restriction_sequence_balance",
    "run_verification",
    "sheaf_cohomology",
    "splitting_from_h0",
    "tensor",
    "truncation_check",
    "twisted_ideal_cohomology",
    "verify_cocycle",
    "verify_fiber",
    "worker_count",
]
