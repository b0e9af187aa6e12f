import json
from itertools import permutations

import numpy as np
import pytest

from hopfimage.models import from_hadamard, from_permutations, fourier_matrix
from hopfimage.models import Permutation
from hopfimage.moments import ClassicalPermutationGroup


def symmetric_group(n):
    return [Permutation(p) for p in permutations(range(1, n + 1))]


def write_json(path, document):
    path.write_text(json.dumps(document), encoding='utf-8')
    return str(path)


@pytest.fixture
def f2_model():
    return from_hadamard(fourier_matrix(2))


@pytest.fixture
def transposition_model():
    return from_permutations(3, [[2, 1, 3]])


@pytest.fixture
def s3_model():
    return from_permutations(3, symmetric_group(3))


@pytest.fixture
def trivial_model():
    return from_permutations(1, [[1]])


@pytest.fixture
def s2_oracle():
    return ClassicalPermutationGroup.full_symmetric(2)


@pytest.fixture
def s3_oracle():
    return ClassicalPermutationGroup.full_symmetric(3)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
