# random_models.py

from typing import List, Optional

import numpy as np

from .builders import from_permutations, from_hadamard, fourier_matrix, fourier_tensor, dita_matrix
from .magic_unitary import MagicUnitaryModel
from .permutation import Permutation


def random_permutation(n: int, rng: np.random.Generator) -> Permutation:
    return Permutation(rng.permutation(n) + 1)


def random_permutation_model(n: int, points: int, rng: np.random.Generator) -> MagicUnitaryModel:
    return from_permutations(n, [random_permutation(n, rng) for _ in range(points)])


def random_phases(size: int, rng: np.random.Generator) -> np.ndarray:
    return np.exp(2j * np.pi * rng.random(size))


def random_hadamard(rng: np.random.Generator, n: Optional[int] = None) -> np.ndarray:
    """
    A complex Hadamard matrix with random row and column phases. Without ``n``
    picks among F_2..F_5, F_2⊗F_2 and the 4×4 affine family with a random parameter.
    """
    if n is not None:
        H = fourier_matrix(n)
    else:
        choice = int(rng.integers(0, 6))
        if choice < 4:
            H = fourier_matrix(choice + 2)
        elif choice == 4:
            H = fourier_tensor([2, 2])
        else:
            H = dita_matrix(random_phases(1, rng)[0])
    size = H.shape[0]
    return random_phases(size, rng)[:, None] * H * random_phases(size, rng)[None, :]


def random_hadamard_model(rng: np.random.Generator, n: Optional[int] = None) -> MagicUnitaryModel:
    return from_hadamard(random_hadamard(rng, n))


def random_models(count: int, seed: int = 0, max_n: int = 4) -> List[MagicUnitaryModel]:
    """Alternates Hadamard-derived and permutation-derived models, reproducibly."""
    rng = np.random.default_rng(seed)
    models = []
    for index in range(count):
        if index % 2 == 0:
            models.append(random_hadamard_model(rng))
        else:
            n = int(rng.integers(2, max_n + 1))
            models.append(random_permutation_model(n, int(rng.integers(1, 4)), rng))
    return models
