"""
Transfer matrices T_k = (tr(P_{i1j1}···P_{ikjk}))_{I,J} and the states they encode.

Tuples I = (i_1..i_k) over {1..n} are encoded big-endian:
encode(I) = Σ_t (i_t − 1)·n^{k−t}. Traces are normalized, tr(I_d) = 1.
"""

import logging
import re
from itertools import product
from typing import Iterable, List, NamedTuple, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, validator

from hopfimage.core.exceptions import (
    CapacityError, DimensionError, InconsistencyError, InvalidInputError, NumericalError,
)
from hopfimage.linalg import (
    Tolerance,
    DEFAULT_TOLERANCE,
    cesaro_projector,
    eigenone_multiplicity_kernel,
    numeric_rank,
    operator_norm_estimate,
    max_modulus,
)
from hopfimage.models import MagicUnitaryModel

DEFAULT_CAP = 65536
DEFAULT_MAX_LEVEL = 12


class Word(BaseModel):
    """A monomial u_{i1j1}···u_{ikjk}, stored as its 1-indexed (i, j) pairs."""
    pairs: Tuple[Tuple[int, int], ...]

    class Config:
        frozen = True

    @validator('pairs')
    def validate_pairs(cls, v):
        if not v:
            raise ValueError('a word needs at least one letter')
        for i, j in v:
            if i < 1 or j < 1:
                raise ValueError(f'indices are 1-based, got ({i}, {j})')
        return v

    @classmethod
    def of(cls, pairs: Iterable[Sequence[int]]) -> 'Word':
        return cls(pairs=tuple((int(i), int(j)) for i, j in pairs))

    @classmethod
    def parse(cls, text: str) -> 'Word':
        """Reads ``"(1,1)(2,2)"`` or ``"1,1;2,2"``."""
        numbers = [int(x) for x in re.findall(r"-?\d+", text)]
        if not numbers or len(numbers) % 2:
            raise InvalidInputError(f"cannot read a word from '{text}'")
        return cls.of(zip(numbers[0::2], numbers[1::2]))

    @property
    def k(self) -> int:
        return len(self.pairs)

    @property
    def rows(self) -> Tuple[int, ...]:
        return tuple(i for i, _ in self.pairs)

    @property
    def cols(self) -> Tuple[int, ...]:
        return tuple(j for _, j in self.pairs)

    def check_range(self, n: int) -> None:
        for i, j in self.pairs:
            if i > n or j > n:
                raise InvalidInputError(f"word letter ({i}, {j}) outside 1..{n}")

    def __str__(self):
        return ''.join(f"({i},{j})" for i, j in self.pairs)


def all_words(n: int, k: int) -> List[Word]:
    """Every word of length k, ordered by (encode(I), encode(J))."""
    tuples = list(product(range(1, n + 1), repeat=k))
    return [Word.of(zip(I, J)) for I in tuples for J in tuples]


def encode(indices: Sequence[int], n: int) -> int:
    code = 0
    for i in indices:
        if not 1 <= i <= n:
            raise InvalidInputError(f"index {i} outside 1..{n}")
        code = code * n + (i - 1)
    return code


def decode(code: int, n: int, k: int) -> Tuple[int, ...]:
    digits = []
    for _ in range(k):
        code, r = divmod(code, n)
        digits.append(r + 1)
    return tuple(reversed(digits))


class TransferMatrix(BaseModel):
    k: int
    n: int
    data: np.ndarray

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @property
    def size(self) -> int:
        return self.data.shape[0]

    def entry(self, word: Word) -> complex:
        return complex(self.data[encode(word.rows, self.n), encode(word.cols, self.n)])


class MultiplicityResult(NamedTuple):
    m_k: int
    marginal: bool


def check_capacity(n: int, k: int, cap: int = DEFAULT_CAP, max_level: int = DEFAULT_MAX_LEVEL) -> int:
    if k < 1:
        raise DimensionError("level k must be positive")
    required = n ** k
    if required > cap or k > max_level:
        raise CapacityError(required=required, cap=cap, level=k, max_level=max_level)
    return required


def _prefix_tables(P: np.ndarray, depth: int) -> List[np.ndarray]:
    """tables[t][I, J] = P_{i1j1}···P_{itjt}, t = 0..depth; each product is formed once."""
    n, d = P.shape[0], P.shape[2]
    tables = [np.eye(d, dtype=np.complex128).reshape(1, 1, d, d)]
    for t in range(depth):
        prev = tables[-1]
        size = prev.shape[0]
        nxt = np.einsum('IJab,ijbc->IiJjac', prev, P, optimize=True)
        tables.append(nxt.reshape(size * n, size * n, d, d))
    return tables


def _diagonal_tables(U: np.ndarray, depth: int) -> List[np.ndarray]:
    """tables[t][I] = U_{i1}···U_{it} for the diagonal of a group-dual model."""
    n, d = U.shape[0], U.shape[1]
    tables = [np.eye(d, dtype=np.complex128).reshape(1, d, d)]
    for t in range(depth):
        prev = tables[-1]
        nxt = np.einsum('Iab,ibc->Iiac', prev, U, optimize=True)
        tables.append(nxt.reshape(prev.shape[0] * n, d, d))
    return tables


def build_transfer(model: MagicUnitaryModel, k: int, cap: int = DEFAULT_CAP,
                   max_level: int = DEFAULT_MAX_LEVEL) -> TransferMatrix:
    """
    T_k with entry (encode(I), encode(J)) = (1/d)·Tr(P_{i1j1}···P_{ikjk}).

    Prefix products are tabulated up to the half level s = ⌈k/2⌉ and the two
    halves are joined by one trace contraction:
    T[(I1 I2), (J1 J2)] = (1/d) Σ_ab W_s[I1, J1]_ab · W_{k−s}[I2, J2]_ba.
    """
    n, d = model.n, model.d
    size = check_capacity(n, k, cap, max_level)
    s = (k + 1) // 2

    if model.diagonal:
        U = np.stack([model.P[i, i] for i in range(n)])
        tables = _diagonal_tables(U, s)
        head, tail = tables[s], tables[k - s]
        values = np.einsum('Iab,Kba->IK', head, tail, optimize=True).reshape(size) / d
        data = np.diag(values)
    else:
        tables = _prefix_tables(model.P, s)
        head, tail = tables[s], tables[k - s]
        n1, n2 = head.shape[0], tail.shape[0]
        joined = head.reshape(n1 * n1, d * d) @ tail.transpose(3, 2, 0, 1).reshape(d * d, n2 * n2)
        data = joined.reshape(n1, n1, n2, n2).transpose(0, 2, 1, 3).reshape(size, size)
        data /= d

    data.setflags(write=False)
    logging.debug(f"Built T_{k} of size {size}x{size} (n={n}, d={d}, diagonal={model.diagonal})")
    return TransferMatrix(k=k, n=n, data=data)


def state_value(model: MagicUnitaryModel, word: Word) -> complex:
    """φ(u_{i1j1}···u_{ikjk}) = tr(P_{i1j1}···P_{ikjk}), by direct multiplication."""
    word.check_range(model.n)
    product_ = np.eye(model.d, dtype=np.complex128)
    for i, j in word.pairs:
        product_ = product_ @ model.P[i - 1, j - 1]
    return complex(np.trace(product_) / model.d)


def check_contractive(transfer: TransferMatrix, tol: Tolerance = DEFAULT_TOLERANCE, iters: int = 200) -> float:
    """Returns the norm estimate of T_k, warning when it exceeds 1 + eps·dim."""
    estimate = operator_norm_estimate(transfer.data, iters)
    if estimate > 1.0 + tol.threshold(transfer.size):
        logging.warning(f"||T_{transfer.k}|| estimate {estimate:.12g} exceeds 1; Cesàro averaging may not converge")
    return estimate


def multiplicity_of(transfer: TransferMatrix, method: str = 'both', tol: Tolerance = DEFAULT_TOLERANCE,
                    max_rounds: int = 64) -> MultiplicityResult:
    """#(1 ∈ T_k) by kernel rank, by Cesàro projector rank, or both (which must agree)."""
    if method not in ('kernel', 'cesaro', 'both'):
        raise InvalidInputError(f"unknown multiplicity method '{method}'")
    kernel = cesaro = None
    marginal = False
    try:
        if method in ('kernel', 'both'):
            kernel, flag = eigenone_multiplicity_kernel(transfer.data, tol, full_output=True)
            marginal = marginal or flag
        if method in ('cesaro', 'both'):
            projector = cesaro_projector(transfer.data, tol, max_rounds).P
            cesaro, flag = numeric_rank(projector, tol, full_output=True)
            marginal = marginal or flag
    except np.linalg.LinAlgError as e:
        logging.error(f"Linear algebra failed on T_{transfer.k}: {e}")
        raise NumericalError(f"linear algebra failed on T_{transfer.k} ({transfer.size}×{transfer.size}): {e}") from e
    if method == 'both' and kernel != cesaro:
        raise InconsistencyError(kernel=kernel, cesaro=cesaro, level=transfer.k)
    m_k = kernel if kernel is not None else cesaro
    logging.debug(f"m_{transfer.k} = {m_k} (method={method}, marginal={marginal})")
    return MultiplicityResult(m_k=m_k, marginal=marginal)


def multiplicity_one(model: MagicUnitaryModel, k: int, method: str = 'both', tol: Tolerance = DEFAULT_TOLERANCE,
                     cap: int = DEFAULT_CAP, max_level: int = DEFAULT_MAX_LEVEL,
                     max_rounds: int = 64) -> MultiplicityResult:
    transfer = build_transfer(model, k, cap, max_level)
    return multiplicity_of(transfer, method, tol, max_rounds)


def convolution_power_eval(model: MagicUnitaryModel, word: Word, r: int, cap: int = DEFAULT_CAP,
                           max_level: int = DEFAULT_MAX_LEVEL) -> complex:
    """φ^{*r}(u_{i1j1}···u_{ikjk}) = ((T_k)^r)_{I,J}."""
    if r < 1:
        raise InvalidInputError("convolution power r must be positive")
    word.check_range(model.n)
    transfer = build_transfer(model, word.k, cap, max_level)
    row = transfer.data[encode(word.rows, model.n)]
    for _ in range(r - 1):
        row = row @ transfer.data
    return complex(row[encode(word.cols, model.n)])


def convolve_explicit(model: MagicUnitaryModel, word: Word, r: int) -> complex:
    """
    φ^{*r} on a monomial by the coproduct Δ(u_ij) = Σ_l u_il ⊗ u_lj:
    φ^{*r}(u_{I,J}) = Σ_L φ^{*(r−1)}(u_{I,L})·φ(u_{L,J}), each φ by direct trace.
    """
    if r < 1:
        raise InvalidInputError("convolution power r must be positive")
    word.check_range(model.n)
    rows, cols, n = word.rows, word.cols, model.n
    middles = list(product(range(1, n + 1), repeat=word.k))
    current = {L: state_value(model, Word.of(zip(rows, L))) for L in middles}
    for _ in range(r - 1):
        current = {
            M: sum(current[L] * state_value(model, Word.of(zip(L, M))) for L in middles)
            for M in middles
        }
    return current[cols]


def idempotent_projector(model: MagicUnitaryModel, k: int, tol: Tolerance = DEFAULT_TOLERANCE,
                         cap: int = DEFAULT_CAP, max_level: int = DEFAULT_MAX_LEVEL,
                         max_rounds: int = 64) -> np.ndarray:
    """The Cesàro projector of T_k; its entries are φ̃ on the length-k monomials."""
    transfer = build_transfer(model, k, cap, max_level)
    return cesaro_projector(transfer.data, tol, max_rounds).P


def idempotent_eval(model: MagicUnitaryModel, word: Word, tol: Tolerance = DEFAULT_TOLERANCE,
                    cap: int = DEFAULT_CAP, max_level: int = DEFAULT_MAX_LEVEL,
                    max_rounds: int = 64) -> complex:
    """φ̃(u_{i1j1}···u_{ikjk}): the Hopf image's Haar state pulled back to the monomial."""
    word.check_range(model.n)
    projector = idempotent_projector(model, word.k, tol, cap, max_level, max_rounds)
    return complex(projector[encode(word.rows, model.n), encode(word.cols, model.n)])


def fixed_vector_defect(transfer: TransferMatrix, vectors: np.ndarray) -> float:
    """max ||T·ξ − ξ||_max over the columns ξ of ``vectors``; zero when they are 1-eigenvectors."""
    vectors = np.asarray(vectors, dtype=np.complex128)
    if vectors.size == 0:
        return 0.0
    if vectors.shape[0] != transfer.size:
        raise DimensionError(f"fixed vectors have length {vectors.shape[0]}, T_{transfer.k} has size {transfer.size}")
    return max_modulus(transfer.data @ vectors - vectors)
