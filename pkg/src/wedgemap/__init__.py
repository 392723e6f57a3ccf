"""wedgemap: qudit states as antisymmetric two-fermion states.

Embeds a d-level quantum state into the wedge (antisymmetric) subspace of
two d-dimensional fermions and measures the entanglement the embedding
carries: negativity, logarithmic negativity, and entropy of entanglement,
plus the closed-form cubic analysis for diagonal qutrit states.
"""

from wedgemap._kernels import BACKEND
from wedgemap.config import DEFAULTS, Tolerances
from wedgemap.embedding import (
    TwoFermionState,
    WedgeBasis,
    embed,
    embed_via_isometry,
    extract,
    reduced_fermion_state,
    two_fermion_state,
    wedge_basis,
    wedge_isometry,
)
from wedgemap.entanglement import (
    CubicAnalysis,
    MonotoneReport,
    convexity_check,
    diagonal_cubic_analysis,
    entanglement_entropy,
    negativity,
)
from wedgemap.errors import (
    DimensionMismatch,
    DimensionTooSmall,
    NoConvergence,
    NotAntisymmetric,
    NotHermitian,
    NotPositive,
    NotPure,
    ShapeMismatch,
    StateFileError,
    TraceNotOne,
    WedgemapError,
)
from wedgemap.linalg import (
    EigenDecomposition,
    hermitian_eigendecompose,
    is_hermitian,
    tensor_product,
    trace_norm,
)
from wedgemap.reductions import (
    BipartiteShape,
    partial_trace,
    partial_trace_naive,
    partial_transpose,
)
from wedgemap.states import (
    DensityMatrix,
    DiagonalDistribution,
    PureState,
    density_from_diagonal,
    density_from_matrix,
    density_from_pure,
    diagonal_distribution,
    pure_state,
    random_diagonal,
    random_mixed,
    random_pure,
    random_unitary,
)

__version__ = "0.1.0"
