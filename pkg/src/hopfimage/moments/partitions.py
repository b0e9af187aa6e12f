"""Set partitions of {1..k}, the non-crossing ones, and their lattice join."""

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, List, Sequence, Tuple

from hopfimage.core.exceptions import InvalidInputError, SizeGuardError
from hopfimage.utils import UnionFind

DEFAULT_NC_GUARD = 14


class SetPartition:
    """
    A partition of {1..k}. Blocks are stored sorted, each block ascending, so that
    equal partitions compare and hash equal.
    """

    __slots__ = ('_blocks', '_k')

    def __init__(self, blocks: Iterable[Iterable[int]]):
        normalized = sorted(tuple(sorted(block)) for block in blocks)
        points = [x for block in normalized for x in block]
        k = len(points)
        if any(not block for block in normalized):
            raise InvalidInputError("blocks must be non-empty")
        if sorted(points) != list(range(1, k + 1)):
            raise InvalidInputError(f"blocks {normalized} do not partition 1..{k}")
        self._blocks = tuple(normalized)
        self._k = k

    @classmethod
    def from_labels(cls, labels: Sequence) -> 'SetPartition':
        """Groups positions 1..k by equal label, e.g. the kernel of a tuple."""
        blocks = {}
        for position, label in enumerate(labels, start=1):
            blocks.setdefault(label, []).append(position)
        return cls(blocks.values())

    @property
    def blocks(self) -> Tuple[Tuple[int, ...], ...]:
        return self._blocks

    @property
    def k(self) -> int:
        return self._k

    def __len__(self):
        return len(self._blocks)

    def __eq__(self, other):
        return isinstance(other, SetPartition) and self._blocks == other._blocks

    def __hash__(self):
        return hash(self._blocks)

    def __repr__(self):
        return ''.join('{' + ','.join(str(x) for x in block) + '}' for block in self._blocks)

    def labels(self) -> Tuple[int, ...]:
        """Restricted growth string: position -> block number, blocks numbered by first element."""
        labels = [0] * self._k
        for number, block in enumerate(self._blocks):
            for x in block:
                labels[x - 1] = number
        return tuple(labels)

    def sort_key(self):
        return -len(self._blocks), self.labels()

    def is_noncrossing(self) -> bool:
        """No a < b < c < d with a, c in one block and b, d in another."""
        labels = self.labels()
        for a, b, c, d in combinations(range(self._k), 4):
            if labels[a] == labels[c] and labels[b] == labels[d] and labels[a] != labels[b]:
                return False
        return True

    def join(self, other: 'SetPartition') -> 'SetPartition':
        """p ∨ q in the lattice of all partitions: the finest partition coarser than both."""
        if other.k != self._k:
            raise InvalidInputError(f"cannot join partitions of {self._k} and {other.k} points")
        uf = UnionFind(range(1, self._k + 1))
        for block in self._blocks + other.blocks:
            for x in block[1:]:
                uf.union(block[0], x)
        return SetPartition.from_labels([uf.find(x) for x in range(1, self._k + 1)])

    def constant_on(self, indices: Sequence[int]) -> bool:
        """δ_p(i): whether the tuple i takes one value on every block."""
        return all(len({indices[x - 1] for x in block}) == 1 for block in self._blocks)


@lru_cache(maxsize=None)
def _nc_blocks(start: int, stop: int) -> Tuple[Tuple[Tuple[int, ...], ...], ...]:
    """Non-crossing block lists of the interval start..stop−1."""
    if start >= stop:
        return ((),)
    return tuple(_grow_block((start,), start + 1, stop))


def _grow_block(block: Tuple[int, ...], nxt: int, stop: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    # close the block: everything from nxt on is partitioned independently
    for tail in _nc_blocks(nxt, stop):
        yield (block,) + tail
    # or add m to the block: the gap nxt..m−1 nests inside it
    for m in range(nxt, stop):
        for inner in _nc_blocks(nxt, m):
            for rest in _grow_block(block + (m,), m + 1, stop):
                yield rest + inner


def enumerate_nc(k: int, guard: int = DEFAULT_NC_GUARD) -> List[SetPartition]:
    """All non-crossing partitions of {1..k} (Catalan many), finest first."""
    if k < 1:
        raise InvalidInputError("k must be positive")
    if k > guard:
        raise SizeGuardError(f"NC({k}) exceeds the enumeration guard k ≤ {guard}", limit=guard)
    partitions = [SetPartition(blocks) for blocks in _nc_blocks(1, k + 1)]
    return sorted(partitions, key=SetPartition.sort_key)


def catalan(k: int) -> int:
    """C_k by the recurrence C_k = Σ C_i·C_{k−1−i}."""
    values = [1]
    for m in range(1, k + 1):
        values.append(sum(values[i] * values[m - 1 - i] for i in range(m)))
    return values[k]
