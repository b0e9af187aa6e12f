import re
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from hopfimage.core.exceptions import DimensionError, InvalidInputError

_CYCLE_NOTATION = re.compile(r"\s*(?:\(\s*(?:\d+(?:[\s,]+\d+)*)?[\s,]*\)\s*)+")


class Permutation:
    """
    A bijection of {1..n}, stored as its 1-indexed image tuple:
    ``images[j - 1]`` is g(j).

    ``g * h`` is the composition g∘h (apply h first).
    """

    __slots__ = ('_images',)

    def __init__(self, images: Iterable[int]):
        self._images = tuple(int(i) for i in images)
        if not self._images:
            raise DimensionError("a permutation needs at least one point")
        if sorted(self._images) != list(range(1, len(self._images) + 1)):
            raise InvalidInputError(f"{list(self._images)} is not a bijection of 1..{len(self._images)}")

    @classmethod
    def identity(cls, n: int) -> 'Permutation':
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, n: int, cycles: str) -> 'Permutation':
        """Parses disjoint cycle notation such as ``"(1 2)(3 4 5)"``; fixed points may be omitted."""
        if not _CYCLE_NOTATION.fullmatch(cycles):
            raise InvalidInputError(f"{cycles!r} is not cycle notation such as '(1 2)(3 4 5)'")
        images = list(range(1, n + 1))
        seen = set()
        for cycle in re.findall(r"\(([^()]*)\)", cycles):
            points = [int(p) for p in re.split(r"[\s,]+", cycle.strip()) if p]
            for a in points:
                if not 1 <= a <= n:
                    raise InvalidInputError(f"cycle point {a} outside 1..{n}")
                if a in seen:
                    raise InvalidInputError(f"point {a} repeated in {cycles!r}")
                seen.add(a)
            for a, b in zip(points, points[1:] + points[:1]):
                images[a - 1] = b
        return cls(images)

    @property
    def n(self) -> int:
        return len(self._images)

    @property
    def images(self) -> Tuple[int, ...]:
        return self._images

    def __call__(self, j: int) -> int:
        return self._images[j - 1]

    def __mul__(self, other: 'Permutation') -> 'Permutation':
        if other.n != self.n:
            raise DimensionError(f"cannot compose permutations of {self.n} and {other.n} points")
        return Permutation(self._images[j - 1] for j in other._images)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._images == other._images

    def __hash__(self):
        return hash(self._images)

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"Permutation({list(self._images)})"

    def inverse(self) -> 'Permutation':
        inv = [0] * self.n
        for j, i in enumerate(self._images, start=1):
            inv[i - 1] = j
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(i == j for j, i in enumerate(self._images, start=1))

    def fixed_points(self) -> int:
        return sum(1 for j, i in enumerate(self._images, start=1) if i == j)

    def matrix(self) -> np.ndarray:
        """0/1 matrix M with M[i-1, j-1] = 1 iff g(j) = i."""
        M = np.zeros((self.n, self.n))
        for j, i in enumerate(self._images):
            M[i - 1, j] = 1.0
        return M


def as_permutations(points: Sequence, n: int = None) -> List[Permutation]:
    """Accepts Permutation objects or image lists; checks they all act on the same n points."""
    perms = [p if isinstance(p, Permutation) else Permutation(p) for p in points]
    if n is None and perms:
        n = perms[0].n
    for p in perms:
        if p.n != n:
            raise DimensionError(f"permutation {list(p.images)} acts on {p.n} points, expected {n}")
    return perms
