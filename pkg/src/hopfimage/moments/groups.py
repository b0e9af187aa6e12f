"""Permutation groups: closure of generators, Burnside counts and Haar monomials of C(G)."""

import logging
from collections import deque
from fractions import Fraction
from itertools import product
from typing import List, Sequence

from hopfimage.core.exceptions import HopfImageError, InvalidInputError, SizeGuardError
from hopfimage.models import Permutation, as_permutations
from hopfimage.utils import find_orbits

DEFAULT_GROUP_GUARD = 10 ** 6
# orbit enumeration on {1..n}^k cross-checks Burnside up to this many tuples
ORBIT_CHECK_LIMIT = 4096


def generate_group(generators: Sequence, size_guard: int = DEFAULT_GROUP_GUARD) -> List[Permutation]:
    """All elements of <generators>, identity first, in breadth-first order."""
    gens = as_permutations(generators)
    if not gens:
        raise InvalidInputError("at least one generator is required")
    identity = Permutation.identity(gens[0].n)
    elements = [identity]
    seen = {identity}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = g * x
            if y not in seen:
                if len(elements) >= size_guard:
                    raise SizeGuardError(f"group generated by {len(gens)} permutation(s) exceeds {size_guard} elements",
                                         limit=size_guard)
                seen.add(y)
                elements.append(y)
                queue.append(y)
    logging.debug(f"Generated group of order {len(elements)} on {identity.n} points")
    return elements


def burnside_count(elements: Sequence[Permutation], k: int) -> Fraction:
    """(1/|G|)·Σ_g fix(g)^k, the number of orbits of G on {1..n}^k."""
    return Fraction(sum(g.fixed_points() ** k for g in elements), len(elements))


def orbit_count(generators: Sequence[Permutation], n: int, k: int) -> int:
    """Orbits of <generators> on {1..n}^k by direct enumeration."""
    space = product(range(1, n + 1), repeat=k)
    return len(find_orbits(generators, space, lambda g, x: tuple(g(i) for i in x)))


def classical_character_moment(elements: Sequence[Permutation], k: int,
                               generators: Sequence[Permutation] = None,
                               check_limit: int = ORBIT_CHECK_LIMIT) -> Fraction:
    """
    h(χ^k) for C(G) by Burnside. When generators are given and n^k ≤ check_limit
    the value is cross-checked against direct orbit enumeration.
    """
    value = burnside_count(elements, k)
    n = elements[0].n
    if generators is not None and n ** k <= check_limit:
        direct = orbit_count(generators, n, k)
        if value != direct:
            logging.error(f"Burnside count {value} differs from orbit enumeration {direct} (n={n}, k={k})")
            raise HopfImageError(f"Burnside count {value} disagrees with orbit enumeration {direct}")
    return value


def classical_haar_monomial(elements: Sequence[Permutation], rows: Sequence[int], cols: Sequence[int]) -> Fraction:
    """h(u_{i1j1}···u_{ikjk}) = (1/|G|)·#{g : g(j_t) = i_t for all t}."""
    hits = sum(1 for g in elements if all(g(j) == i for i, j in zip(rows, cols)))
    return Fraction(hits, len(elements))
