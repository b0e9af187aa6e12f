from .kernels import (
    Tolerance,
    DEFAULT_TOLERANCE,
    CesaroResult,
    as_complex_matrix,
    max_modulus,
    is_hermitian_projection,
    cesaro_projector,
    eigenone_multiplicity_kernel,
    numeric_rank,
    operator_norm_estimate,
)
