"""Constructors for matrix models: permutation points, complex Hadamard matrices, unitary tuples."""

import logging
from functools import reduce
from typing import Sequence

import numpy as np

from hopfimage.core.exceptions import DimensionError, InvalidInputError
from hopfimage.linalg import Tolerance, DEFAULT_TOLERANCE, as_complex_matrix, max_modulus
from .magic_unitary import MagicUnitaryModel
from .permutation import Permutation, as_permutations


def from_permutations(n: int, points: Sequence) -> MagicUnitaryModel:
    """
    Evaluation of C(S_n) at the points g_1..g_m: d = m and P_ij is diagonal with
    t-th entry 1 iff g_t(j) = i. The Hopf image is C(<g_1..g_m>).
    """
    if n < 1:
        raise DimensionError("n must be positive")
    if not points:
        raise InvalidInputError("at least one permutation is required")
    perms = as_permutations(points, n)
    d = len(perms)
    grid = np.zeros((n, n, d, d), dtype=np.complex128)
    for t, g in enumerate(perms):
        for j in range(1, n + 1):
            grid[g(j) - 1, j - 1, t, t] = 1.0
    return MagicUnitaryModel(n=n, d=d, P=grid)


def fourier_matrix(n: int) -> np.ndarray:
    """F_n with entries exp(2πi·ab/n), a, b = 0..n−1."""
    if n < 1:
        raise DimensionError("Fourier matrix size must be positive")
    a = np.arange(n)
    return np.exp(2j * np.pi * np.outer(a, a) / n)


def fourier_tensor(sizes: Sequence[int]) -> np.ndarray:
    """Kronecker product F_{n1} ⊗ F_{n2} ⊗ ... ."""
    if not sizes:
        raise InvalidInputError("at least one Fourier size is required")
    return reduce(np.kron, (fourier_matrix(int(s)) for s in sizes))


def dita_matrix(q: complex) -> np.ndarray:
    """The affine 4×4 complex Hadamard family with one unimodular parameter q."""
    return np.array([
        [1, 1, 1, 1],
        [1, -1, q, -q],
        [1, 1, -1, -1],
        [1, -1, -q, q],
    ], dtype=np.complex128)


def check_hadamard(H: np.ndarray, tol: Tolerance = DEFAULT_TOLERANCE) -> None:
    """Raises InvalidInputError unless |H_ij| = 1 and H·H* = n·I within tolerance."""
    n = H.shape[0]
    if H.shape != (n, n):
        raise DimensionError(f"a Hadamard matrix must be square, got shape {H.shape}")
    if max_modulus(np.abs(H) - 1.0) > tol.eps * n:
        raise InvalidInputError("Hadamard check failed: |H_ij| ≠ 1")
    if max_modulus(H @ H.conj().T - n * np.eye(n)) > tol.eps * n * n:
        raise InvalidInputError("Hadamard check failed: H·H* ≠ nI")


def from_hadamard(H, tol: Tolerance = DEFAULT_TOLERANCE) -> MagicUnitaryModel:
    """
    d = n and P_ij is the rank-1 projection onto ξ_ij = (H_ia / H_ja)_a / sqrt(n).
    Accepts unnormalized (not dephased) matrices; row and column phases do not
    change the model.
    """
    H = as_complex_matrix(H)
    check_hadamard(H, tol)
    n = H.shape[0]
    ratios = H[:, None, :] / H[None, :, :]
    grid = np.einsum('ija,ijb->ijab', ratios, ratios.conj()) / n
    logging.debug(f"Built Hadamard model with n=d={n}")
    return MagicUnitaryModel(n=n, d=n, P=grid)


def from_unitaries(U: Sequence, tol: Tolerance = DEFAULT_TOLERANCE,
                   allow_non_involutive: bool = False) -> MagicUnitaryModel:
    """
    Group-dual model u = diag(U_1..U_n): P_ii = U_i, P_ij = 0 for i ≠ j, flagged diagonal.
    Each U_i must be unitary and, unless ``allow_non_involutive``, satisfy U_i² = I.
    """
    if not U:
        raise InvalidInputError("at least one unitary is required")
    mats = [as_complex_matrix(u) for u in U]
    d = mats[0].shape[0]
    identity = np.eye(d)
    for idx, u in enumerate(mats, start=1):
        if u.shape != (d, d):
            raise DimensionError(f"U_{idx} has shape {u.shape}, expected ({d}, {d})")
        if max_modulus(u @ u.conj().T - identity) > tol.eps * d:
            raise InvalidInputError(f"U_{idx} is not unitary")
        if not allow_non_involutive and max_modulus(u @ u - identity) > tol.eps * d:
            raise InvalidInputError(f"U_{idx} is not an involution (U² ≠ I)")
    if allow_non_involutive:
        logging.warning("Non-involutive unitaries accepted; the transfer-matrix criterion is not established for them")
    n = len(mats)
    grid = np.zeros((n, n, d, d), dtype=np.complex128)
    for i, u in enumerate(mats):
        grid[i, i] = u
    return MagicUnitaryModel(n=n, d=d, P=grid, diagonal=True, unsafe=allow_non_involutive)
