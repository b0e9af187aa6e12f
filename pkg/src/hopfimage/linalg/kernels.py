"""
Dense complex kernels
=====================

Every matrix in hopfimage is a 2-D ``numpy.complex128`` array. This module holds
the few spectral kernels the certifier needs:

- is_hermitian_projection      Check M = M* = M² entrywise.
- cesaro_projector             Limit of (1/N) Σ T^r for a power-bounded T.
- eigenone_multiplicity_kernel dim ker(T − I) from singular values.
- numeric_rank                 Rank at the same tolerance, with marginal flag.
- operator_norm_estimate       Power iteration on T*T.

Thresholds are ``eps · dim`` unless a function says otherwise.
"""

import logging
from typing import NamedTuple, Tuple, Union

import numpy as np
from pydantic import BaseModel, validator
from scipy import linalg as sla

from hopfimage.core.exceptions import DimensionError, InvalidInputError, NonConvergenceError

# singular values in [thr, MARGINAL_FACTOR * thr] make a rank decision marginal
MARGINAL_FACTOR = 100.0


class Tolerance(BaseModel):
    eps: float = 1e-9

    class Config:
        allow_mutation = False

    @validator('eps')
    def validate_eps(cls, v):
        if not 0 < v < 1:
            raise ValueError('eps must lie strictly between 0 and 1')
        return v

    def threshold(self, dim: int) -> float:
        return self.eps * max(int(dim), 1)


DEFAULT_TOLERANCE = Tolerance()


class CesaroResult(NamedTuple):
    P: np.ndarray
    rounds: int
    residual: float


def as_complex_matrix(data) -> np.ndarray:
    """Copies ``data`` into a read-only complex128 matrix after shape and finiteness checks."""
    M = np.array(data, dtype=np.complex128)
    if M.ndim != 2 or M.shape[0] < 1 or M.shape[1] < 1:
        raise DimensionError(f"expected a non-empty 2-D matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise InvalidInputError("matrix has NaN or infinite entries")
    M.setflags(write=False)
    return M


def max_modulus(M: np.ndarray) -> float:
    return float(np.max(np.abs(M))) if M.size else 0.0


def _require_square(M: np.ndarray) -> int:
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {M.shape}")
    return M.shape[0]


def is_hermitian_projection(M: np.ndarray, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """True iff ||M − M*||_max ≤ eps and ||M² − M||_max ≤ eps (unscaled eps)."""
    M = np.asarray(M, dtype=np.complex128)
    _require_square(M)
    return (max_modulus(M - M.conj().T) <= tol.eps
            and max_modulus(M @ M - M) <= tol.eps)


def cesaro_projector(T: np.ndarray, tol: Tolerance = DEFAULT_TOLERANCE,
                     max_rounds: int = 64) -> CesaroResult:
    """
    Approximates lim_N (1/N) Σ_{r=1..N} T^r for a power-bounded square T.

    The average is taken over the lazy matrix L = (I + T)/2, which has the same
    Cesàro limit (same fixed space, same complementary invariant range) and no
    peripheral eigenvalue other than 1. N doubles every round; the partial means
    A_N are kept and the returned estimate is the window mean
    (1/N) Σ_{r=N+1..2N} L^r = L^N · A_N, which converges geometrically.

    Stops when the estimate moved by at most eps·dim since the previous round and
    ||P·T − P||_max ≤ eps·dim.
    """
    T = np.asarray(T, dtype=np.complex128)
    dim = _require_square(T)
    if max_rounds < 1:
        raise ValueError("max_rounds must be at least 1")
    thr = tol.threshold(dim)

    lazy = 0.5 * (np.eye(dim, dtype=np.complex128) + T)
    power = lazy.copy()
    mean = lazy.copy()
    estimate = power @ mean
    residual = float('inf')

    for rounds in range(1, max_rounds + 1):
        mean = 0.5 * (mean + estimate)
        power = power @ power
        new_estimate = power @ mean
        change = max_modulus(new_estimate - estimate)
        residual = max_modulus(new_estimate @ T - new_estimate)
        estimate = new_estimate
        logging.debug(f"Cesàro round {rounds}: N=2^{rounds}, change={change:.3e}, residual={residual:.3e}")
        if change <= thr and residual <= thr:
            return CesaroResult(P=estimate, rounds=rounds, residual=residual)

    raise NonConvergenceError(residual=residual, rounds=max_rounds)


def _band_decision(singular_values: np.ndarray, thr: float) -> Tuple[int, bool]:
    small = int(np.count_nonzero(singular_values < thr))
    marginal = bool(np.any((singular_values >= thr) & (singular_values <= MARGINAL_FACTOR * thr)))
    return small, marginal


def eigenone_multiplicity_kernel(T: np.ndarray, tol: Tolerance = DEFAULT_TOLERANCE,
                                 full_output: bool = False) -> Union[int, Tuple[int, bool]]:
    """
    dim ker(T − I), counted as the singular values of T − I below eps·dim.

    With ``full_output`` returns ``(count, marginal)`` where marginal means some
    singular value fell in the ambiguous band [eps·dim, 100·eps·dim].
    """
    T = np.asarray(T, dtype=np.complex128)
    dim = _require_square(T)
    sv = sla.svdvals(T - np.eye(dim, dtype=np.complex128))
    count, marginal = _band_decision(sv, tol.threshold(dim))
    if marginal:
        logging.warning(f"Eigenvalue-1 multiplicity {count} is numerically marginal (dim={dim})")
    return (count, marginal) if full_output else count


def numeric_rank(M: np.ndarray, tol: Tolerance = DEFAULT_TOLERANCE,
                 full_output: bool = False) -> Union[int, Tuple[int, bool]]:
    """Number of singular values of M at or above eps·dim, same marginal band as the kernel count."""
    M = np.asarray(M, dtype=np.complex128)
    dim = _require_square(M)
    sv = sla.svdvals(M)
    small, marginal = _band_decision(sv, tol.threshold(dim))
    rank = dim - small
    if marginal:
        logging.warning(f"Numeric rank {rank} is marginal (dim={dim})")
    return (rank, marginal) if full_output else rank


def _seed_vector(dim: int) -> np.ndarray:
    x = 1.0 / np.arange(1, dim + 1, dtype=np.float64)
    return (x / np.linalg.norm(x)).astype(np.complex128)


def operator_norm_estimate(T: np.ndarray, iters: int = 200) -> float:
    """
    Power iteration on T*T from the fixed start vector (1, 1/2, 1/3, ...);
    returns sqrt of the largest Rayleigh quotient seen, a lower bound for ||T||.
    """
    T = np.asarray(T, dtype=np.complex128)
    dim = _require_square(T)
    x = _seed_vector(dim)
    best = 0.0
    for _ in range(iters):
        y = T.conj().T @ (T @ x)
        best = max(best, float(np.real(np.vdot(x, y))))
        norm = np.linalg.norm(y)
        if norm == 0.0:
            break
        x = y / norm
    return float(np.sqrt(best))
