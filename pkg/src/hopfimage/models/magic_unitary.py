import logging
from typing import List

import numpy as np
from pydantic import BaseModel, validator, root_validator

from hopfimage.linalg import Tolerance, DEFAULT_TOLERANCE, is_hermitian_projection, max_modulus


class MagicUnitaryModel(BaseModel):
    """
    A matrix model π(u_ij) = P_ij of size d, stored as a (n, n, d, d) complex array.

    ``diagonal`` marks group-dual models u = diag(U_1..U_n): P_ii = U_i and
    P_ij = 0 off the diagonal. Those are unitary, not magic, and are validated
    accordingly. ``unsafe`` records that non-involutive unitaries were allowed.
    """
    n: int
    d: int
    P: np.ndarray
    diagonal: bool = False
    unsafe: bool = False

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @validator('P', pre=True)
    def validate_grid(cls, v):
        grid = np.array(v, dtype=np.complex128)
        if grid.ndim != 4 or grid.shape[0] != grid.shape[1] or grid.shape[2] != grid.shape[3]:
            raise ValueError(f"P must have shape (n, n, d, d), got {grid.shape}")
        if grid.shape[0] < 1 or grid.shape[2] < 1:
            raise ValueError("P must be non-empty")
        if not np.all(np.isfinite(grid)):
            raise ValueError("P has NaN or infinite entries")
        grid.setflags(write=False)
        return grid

    @root_validator(skip_on_failure=True)
    def validate_sizes(cls, values):
        grid = values['P']
        if grid.shape[0] != values['n'] or grid.shape[2] != values['d']:
            raise ValueError(f"P has shape {grid.shape}, expected n={values['n']}, d={values['d']}")
        return values

    def entry(self, i: int, j: int) -> np.ndarray:
        """P_ij with 1-indexed i, j."""
        return self.P[i - 1, j - 1]

    def state_level_one(self) -> np.ndarray:
        """The n×n matrix of φ(u_ij) = tr(P_ij) under the normalized trace."""
        return np.trace(self.P, axis1=2, axis2=3) / self.d


def validate_magic_unitary(model: MagicUnitaryModel, tol: Tolerance = DEFAULT_TOLERANCE) -> List[str]:
    """
    Lists the violated model constraints; an empty list means the model is valid.
    Magic models: every P_ij a projection, rows and columns summing to I_d.
    Diagonal models: every U_i unitary (and involutive unless unsafe), zeros off the diagonal.
    """
    if model.diagonal:
        return _validate_diagonal(model, tol)

    violations = []
    identity = np.eye(model.d)
    sum_thr = tol.eps * model.n
    for i in range(model.n):
        for j in range(model.n):
            if not is_hermitian_projection(model.P[i, j], tol):
                violations.append(f"P_{i + 1}{j + 1} not a projection")
    for i in range(model.n):
        if max_modulus(model.P[i].sum(axis=0) - identity) > sum_thr:
            violations.append(f"row {i + 1} does not sum to the identity")
    for j in range(model.n):
        if max_modulus(model.P[:, j].sum(axis=0) - identity) > sum_thr:
            violations.append(f"column {j + 1} does not sum to the identity")
    if violations:
        logging.info(f"Model validation found {len(violations)} violation(s)")
    return violations


def _validate_diagonal(model: MagicUnitaryModel, tol: Tolerance) -> List[str]:
    violations = []
    identity = np.eye(model.d)
    for i in range(model.n):
        for j in range(model.n):
            if i != j and max_modulus(model.P[i, j]) > tol.eps:
                violations.append(f"P_{i + 1}{j + 1} must vanish in a diagonal model")
        U = model.P[i, i]
        if max_modulus(U @ U.conj().T - identity) > tol.eps * model.d:
            violations.append(f"U_{i + 1} not unitary")
        if not model.unsafe and max_modulus(U @ U - identity) > tol.eps * model.d:
            violations.append(f"U_{i + 1} not an involution")
    return violations
