from typing import Callable, Dict, Hashable, Iterable, List, Set


class UnionFind:
    def __init__(self, X: Iterable[Hashable]):
        self.parent = {x: x for x in X}
        self.rank = {x: 0 for x in self.parent}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        del self.rank[y]

    def reps(self) -> Set:
        return set(self.rank)

    def __len__(self):
        return len(self.rank)


def find_orbits(gens: Iterable, space: Iterable, action: Callable) -> Dict[Hashable, List]:
    """Orbits of the group generated by ``gens``, keyed by representative, members in input order."""
    space = list(space)
    uf = UnionFind(space)
    for g in gens:
        for x in space:
            uf.union(x, action(g, x))
    orbits = {rep: [] for rep in uf.reps()}
    for x in space:
        orbits[uf.find(x)].append(x)
    return orbits
