"""
Model JSON format
-----------------

    {"n": int, "d": int, "diagonal": bool, "P": [[ M_11, M_12, ... ], ...]}

``P[i][j]`` is the d×d matrix π(u_{i+1, j+1}) written row-major as a list of rows
of ``[re, im]`` pairs. Indices in the file are 0-based; everywhere else they are
1-based. An optional ``"unsafe": true`` marks diagonal models built from
non-involutive unitaries.
"""

import hashlib
import json
from typing import Any, Dict

import numpy as np
from pydantic import ValidationError

from hopfimage.core.exceptions import ProcessingError
from .magic_unitary import MagicUnitaryModel


def encode_matrix(M: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(M)]


def decode_matrix(rows: Any) -> np.ndarray:
    """Reads a row-major list of [re, im] pairs (bare reals are accepted too)."""
    arr = np.array(rows, dtype=np.float64)
    if arr.ndim == 2:
        return arr.astype(np.complex128)
    if arr.ndim == 3 and arr.shape[2] == 2:
        return arr[..., 0] + 1j * arr[..., 1]
    raise ValueError(f"matrix must be a list of rows of [re, im] pairs, got array of shape {arr.shape}")


def model_to_dict(model: MagicUnitaryModel) -> Dict[str, Any]:
    document = {
        'n': model.n,
        'd': model.d,
        'diagonal': model.diagonal,
        'P': [[encode_matrix(model.P[i, j]) for j in range(model.n)] for i in range(model.n)],
    }
    if model.unsafe:
        document['unsafe'] = True
    return document


def model_from_dict(document: Any, source: str = '<model>') -> MagicUnitaryModel:
    """Builds a model from its JSON document; any schema problem becomes a ProcessingError."""
    if not isinstance(document, dict):
        raise ProcessingError(f"{source}:1: model document must be a JSON object")
    missing = [key for key in ('n', 'd', 'P') if key not in document]
    if missing:
        raise ProcessingError(f"{source}:1: model document lacks {', '.join(missing)}")
    try:
        grid = [[decode_matrix(cell) for cell in row] for row in document['P']]
        return MagicUnitaryModel(
            n=document['n'],
            d=document['d'],
            P=np.array(grid, dtype=np.complex128),
            diagonal=bool(document.get('diagonal', False)),
            unsafe=bool(document.get('unsafe', False)),
        )
    except (ValueError, TypeError, ValidationError) as e:
        raise ProcessingError(f"{source}:1: invalid model: {e}") from e


def canonical_json(document: Any) -> str:
    return json.dumps(document, sort_keys=True, separators=(',', ':'), ensure_ascii=True)


def model_digest(model: MagicUnitaryModel) -> str:
    return hashlib.sha256(canonical_json(model_to_dict(model)).encode('utf-8')).hexdigest()
