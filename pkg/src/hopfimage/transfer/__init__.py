from .transfer_matrix import (
    Word,
    TransferMatrix,
    MultiplicityResult,
    DEFAULT_CAP,
    DEFAULT_MAX_LEVEL,
    all_words,
    encode,
    decode,
    check_capacity,
    build_transfer,
    state_value,
    check_contractive,
    multiplicity_of,
    multiplicity_one,
    convolution_power_eval,
    convolve_explicit,
    idempotent_projector,
    idempotent_eval,
    fixed_vector_defect,
)
