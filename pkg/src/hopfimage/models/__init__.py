from .permutation import Permutation, as_permutations
from .magic_unitary import MagicUnitaryModel, validate_magic_unitary
from .builders import (
    from_permutations,
    from_hadamard,
    from_unitaries,
    fourier_matrix,
    fourier_tensor,
    dita_matrix,
    check_hadamard,
)
from .codec import model_to_dict, model_from_dict, model_digest, canonical_json, encode_matrix, decode_matrix
from .model_builders import build_model, ModelBuilderFactory
