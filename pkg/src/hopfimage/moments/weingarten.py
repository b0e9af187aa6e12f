"""
Exact Weingarten calculus for S_n⁺ (n ≥ 4) over non-crossing partitions.

G(p, q) = n^{|p ∨ q|} is the Gram matrix of the partition vectors δ_p, and
W = G^{-1}. Everything is kept in ``fractions.Fraction``.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import List, NamedTuple, Sequence

import numpy as np

from hopfimage.core.exceptions import DomainError, HopfImageError, SizeGuardError
from .partitions import SetPartition, enumerate_nc

DEFAULT_WEINGARTEN_GUARD = 6


class Weingarten(NamedTuple):
    partitions: List[SetPartition]
    gram: np.ndarray
    matrix: np.ndarray


def identity_matrix(n: int) -> np.ndarray:
    return np.array([[Fraction(int(i == j)) for j in range(n)] for i in range(n)], dtype=object)


def inverse_matrix(X: np.ndarray) -> np.ndarray:
    """Gauss–Jordan inverse over the rationals."""
    n = X.shape[0]
    assert X.shape == (n, n)

    X = np.array([[Fraction(x) for x in row] for row in X], dtype=object)
    Y = identity_matrix(n)

    # downward elimination: unit diagonal, zeros below
    for i in range(n):
        for j in range(i, n):
            if X[j, i] != 0:
                if i != j:
                    X[[i, j]] = X[[j, i]]
                    Y[[i, j]] = Y[[j, i]]
                break
        else:
            raise HopfImageError("Gram matrix is singular")

        pivot = X[i, i]
        Y[i, :] /= pivot
        X[i, :] /= pivot

        for j in range(i + 1, n):
            factor = X[j, i]
            if factor != 0:
                Y[j, :] -= factor * Y[i, :]
                X[j, :] -= factor * X[i, :]

    # upward elimination
    for j in range(n - 2, -1, -1):
        for i in range(j + 1, n):
            factor = X[j, i]
            if factor != 0:
                Y[j, :] -= factor * Y[i, :]
                X[j, :] -= factor * X[i, :]

    return Y


def check_free_symmetric_domain(n: int) -> None:
    if n < 4:
        raise DomainError(
            f"S_{n}⁺ = S_{n} for n < 4; use the classical oracle of the full symmetric group instead"
        )


def gram_matrix(n: int, partitions: Sequence[SetPartition]) -> np.ndarray:
    size = len(partitions)
    G = np.empty((size, size), dtype=object)
    for a, p in enumerate(partitions):
        for b in range(a, size):
            G[a, b] = G[b, a] = Fraction(n) ** len(p.join(partitions[b]))
    return G


@lru_cache(maxsize=64)
def weingarten_matrix(n: int, k: int, guard: int = DEFAULT_WEINGARTEN_GUARD) -> Weingarten:
    """W = G^{-1} indexed by NC(k) (finest partition first); exact."""
    check_free_symmetric_domain(n)
    if k > guard:
        raise SizeGuardError(f"Weingarten matrix for k={k} exceeds the guard k ≤ {guard}; raise the "
                             "weingarten_guard profile setting (HOPFIMAGE_WEINGARTEN_GUARD) to allow longer words",
                             limit=guard)
    partitions = enumerate_nc(k)
    G = gram_matrix(n, partitions)
    W = inverse_matrix(G)
    logging.debug(f"Weingarten matrix for n={n}, k={k}: {len(partitions)} partitions")
    return Weingarten(partitions=partitions, gram=G, matrix=W)


def snplus_haar_monomial(n: int, rows: Sequence[int], cols: Sequence[int],
                         guard: int = DEFAULT_WEINGARTEN_GUARD) -> Fraction:
    """h(u_{i1j1}···u_{ikjk}) on C(S_n⁺) = Σ_{p,q ∈ NC(k)} δ_p(i)·δ_q(j)·W(p, q)."""
    weingarten = weingarten_matrix(n, len(rows), guard)
    row_hits = [a for a, p in enumerate(weingarten.partitions) if p.constant_on(rows)]
    col_hits = [b for b, q in enumerate(weingarten.partitions) if q.constant_on(cols)]
    return sum((weingarten.matrix[a, b] for a in row_hits for b in col_hits), Fraction(0))
