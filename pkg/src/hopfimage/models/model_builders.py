# model_builders.py

import logging
from typing import Any, Dict

from hopfimage.core.exceptions import InvalidInputError
from hopfimage.linalg import Tolerance, DEFAULT_TOLERANCE
from .builders import from_permutations, from_hadamard, from_unitaries, fourier_tensor, dita_matrix
from .codec import decode_matrix
from .magic_unitary import MagicUnitaryModel
from .permutation import Permutation


class IModelBuilder:
    def build(self, document: Dict[str, Any], tol: Tolerance) -> MagicUnitaryModel:
        raise NotImplementedError("This method should be implemented by subclass")


class PermutationModelBuilder(IModelBuilder):
    """{"n": 3, "points": [[2, 1, 3], "(1 2 3)"]}: image lists or cycle strings."""

    def build(self, document: Dict[str, Any], tol: Tolerance) -> MagicUnitaryModel:
        n = int(document['n'])
        points = [Permutation.from_cycles(n, p) if isinstance(p, str) else Permutation(p)
                  for p in document['points']]
        return from_permutations(n, points)


class HadamardModelBuilder(IModelBuilder):
    """{"H": [[[re, im], ...], ...]} or {"fourier": n}, {"fourier": [n1, n2]}, {"dita": [re, im]}."""

    def build(self, document: Dict[str, Any], tol: Tolerance) -> MagicUnitaryModel:
        if 'fourier' in document:
            sizes = document['fourier']
            H = fourier_tensor(sizes if isinstance(sizes, list) else [sizes])
        elif 'dita' in document:
            q = document['dita']
            H = dita_matrix(complex(q[0], q[1]) if isinstance(q, list) else complex(q))
        else:
            H = decode_matrix(document['H'])
        return from_hadamard(H, tol)


class UnitaryModelBuilder(IModelBuilder):
    """{"U": [M_1, M_2, ...], "allow_non_involutive": false}."""

    def build(self, document: Dict[str, Any], tol: Tolerance) -> MagicUnitaryModel:
        mats = [decode_matrix(u) for u in document['U']]
        return from_unitaries(mats, tol, allow_non_involutive=bool(document.get('allow_non_involutive', False)))


class ModelBuilderFactory:
    _builders_registry = {
        'permutations': PermutationModelBuilder,
        'hadamard': HadamardModelBuilder,
        'unitaries': UnitaryModelBuilder,
    }

    # keys that identify the kind when "kind" is omitted
    _detection_patterns = {
        'permutations': ['points'],
        'hadamard': ['H', 'fourier', 'dita'],
        'unitaries': ['U'],
    }

    @staticmethod
    def detect_kind(document: Dict[str, Any]) -> str:
        if 'kind' in document:
            return document['kind']
        for kind, keys in ModelBuilderFactory._detection_patterns.items():
            if any(key in document for key in keys):
                return kind
        raise InvalidInputError("cannot tell the model kind; set \"kind\" to permutations, hadamard or unitaries")

    @staticmethod
    def create_builder(kind: str) -> IModelBuilder:
        builder_class = ModelBuilderFactory._builders_registry.get(kind)
        if builder_class is None:
            raise InvalidInputError(f"Unsupported model kind: {kind}")
        return builder_class()


def build_model(document: Dict[str, Any], tol: Tolerance = DEFAULT_TOLERANCE) -> MagicUnitaryModel:
    """Builds a model from a generator document (see the builder classes for the layouts)."""
    if not isinstance(document, dict):
        raise InvalidInputError("model generator document must be a JSON object")
    kind = ModelBuilderFactory.detect_kind(document)
    logging.info(f"Building {kind} model")
    try:
        return ModelBuilderFactory.create_builder(kind).build(document, tol)
    except KeyError as e:
        raise InvalidInputError(f"{kind} generator document lacks field {e}") from e
