"""
Moment oracles
==============

An oracle describes the ambient quantum group a model is checked against and
answers, exactly, the two questions the certifier asks of it:

- character_moment(k)    h(χ^k) = dim Fix(u^{⊗k})
- haar_monomial(word)    h(u_{i1j1}···u_{ikjk})

and supplies a spanning set of Fix(u^{⊗k}) for the inclusion check.

Oracle JSON format::

    {"kind": "classical", "n": 3, "generators": [[2, 1, 3], "(1 2 3)"]}
    {"kind": "classical", "n": 4, "symmetric": true}
    {"kind": "free_symmetric", "n": 4}
    {"kind": "group_dual", "table": [[0, 1], [1, 0]], "generators": [1]}
    {"kind": "explicit", "values": [1, 2, 5, "14"]}

Group-dual tables are 0-based: ``table[a][b]`` is the index of the product a·b.
"""

import hashlib
import logging
from fractions import Fraction
from itertools import product
from typing import Any, Dict, List, Literal, Optional, Union

import numpy as np
from pydantic import BaseModel, PrivateAttr, ValidationError, root_validator, validator

from hopfimage.core.exceptions import DomainError, InvalidInputError, ProcessingError, SizeGuardError
from hopfimage.models import MagicUnitaryModel, Permutation, as_permutations, canonical_json
from hopfimage.transfer import Word
from hopfimage.utils import find_orbits
from .groups import DEFAULT_GROUP_GUARD, generate_group, classical_character_moment, classical_haar_monomial
from .partitions import DEFAULT_NC_GUARD, enumerate_nc
from .weingarten import DEFAULT_WEINGARTEN_GUARD, check_free_symmetric_domain, snplus_haar_monomial

DEFAULT_DUAL_TABLE_GUARD = 4096
# associativity of a multiplication table is verified up to this order
ASSOCIATIVITY_CHECK_LIMIT = 64

# fields that tune enumeration limits; they are not part of an oracle's identity
GUARD_FIELDS = {'size_guard', 'nc_guard', 'weingarten_guard', 'table_guard'}


def _tuples(n: int, k: int) -> List[tuple]:
    """{1..n}^k in big-endian order, i.e. position equals the transfer-matrix index."""
    return list(product(range(1, n + 1), repeat=k))


class ClassicalPermutationGroup(BaseModel):
    """C(G) for G = <generators> ≤ S_n; ``symmetric`` stands for the whole of S_n."""
    kind: Literal['classical'] = 'classical'
    n: int
    generators: List[Union[str, List[int]]] = []
    symmetric: bool = False
    size_guard: int = DEFAULT_GROUP_GUARD

    _permutations: List[Permutation] = PrivateAttr(default=None)
    _elements: Optional[List[Permutation]] = PrivateAttr(default=None)

    @validator('n')
    def validate_n(cls, v):
        if v < 1:
            raise ValueError('n must be positive')
        return v

    @root_validator(skip_on_failure=True)
    def validate_generators(cls, values):
        if values['symmetric']:
            return values
        if not values['generators']:
            raise ValueError('either generators or "symmetric": true is required')
        cls._parse(values['n'], values['generators'])
        return values

    @staticmethod
    def _parse(n: int, generators: List[Union[str, List[int]]]) -> List[Permutation]:
        perms = [Permutation.from_cycles(n, g) if isinstance(g, str) else Permutation(g) for g in generators]
        return as_permutations(perms, n)

    @classmethod
    def full_symmetric(cls, n: int, size_guard: int = DEFAULT_GROUP_GUARD) -> 'ClassicalPermutationGroup':
        return cls(n=n, symmetric=True, size_guard=size_guard)

    @classmethod
    def from_model(cls, model: MagicUnitaryModel, size_guard: int = DEFAULT_GROUP_GUARD) -> 'ClassicalPermutationGroup':
        """
        The Hopf image of a permutation model: C(<g_1..g_m>) for the points read
        back from the diagonal 0/1 pattern of P.
        """
        if model.diagonal:
            raise InvalidInputError("a group-dual model is not a permutation model")
        diagonals = np.einsum('ijtt->ijt', model.P)
        rebuilt = np.zeros_like(model.P)
        for t in range(model.d):
            rebuilt[:, :, t, t] = diagonals[:, :, t]
        if not np.array_equal(rebuilt, model.P):
            raise InvalidInputError("model is not a permutation model: some P_ij is not diagonal")
        points = []
        for t in range(model.d):
            pattern = diagonals[:, :, t]
            images = [int(np.argmax(np.abs(pattern[:, j]))) + 1 for j in range(model.n)]
            try:
                expected = Permutation(images).matrix()
            except InvalidInputError:
                raise InvalidInputError(f"model is not a permutation model: point {t + 1} is not a bijection")
            if not np.array_equal(pattern, expected):
                raise InvalidInputError(f"model is not a permutation model: point {t + 1} is not a 0/1 pattern")
            points.append(images)
        unique = sorted(set(map(tuple, points)))
        return cls(n=model.n, generators=[list(g) for g in unique], size_guard=size_guard)

    def permutations(self) -> List[Permutation]:
        if self._permutations is None:
            if self.symmetric:
                gens = [Permutation.identity(self.n)]
                if self.n >= 2:
                    gens = [Permutation.from_cycles(self.n, "(1 2)"),
                            Permutation.from_cycles(self.n, "(" + " ".join(map(str, range(1, self.n + 1))) + ")")]
                self._permutations = gens
            else:
                self._permutations = self._parse(self.n, self.generators)
        return self._permutations

    def elements(self) -> List[Permutation]:
        if self._elements is None:
            self._elements = generate_group(self.permutations(), self.size_guard)
        return self._elements

    def character_moment(self, k: int) -> Fraction:
        return classical_character_moment(self.elements(), k, generators=self.permutations())

    def haar_monomial(self, word: Word) -> Fraction:
        word.check_range(self.n)
        return classical_haar_monomial(self.elements(), word.rows, word.cols)

    def fixed_vectors(self, k: int) -> np.ndarray:
        """Indicator vectors of the orbits of G on {1..n}^k, one column per orbit."""
        space = _tuples(self.n, k)
        index = {x: pos for pos, x in enumerate(space)}
        orbits = find_orbits(self.permutations(), space, lambda g, x: tuple(g(i) for i in x))
        vectors = np.zeros((len(space), len(orbits)))
        for column, members in enumerate(orbits.values()):
            for x in members:
                vectors[index[x], column] = 1.0
        return vectors


class FreeSymmetric(BaseModel):
    """C(S_n⁺), n ≥ 4."""
    kind: Literal['free_symmetric'] = 'free_symmetric'
    n: int
    nc_guard: int = DEFAULT_NC_GUARD
    weingarten_guard: int = DEFAULT_WEINGARTEN_GUARD

    @validator('n')
    def validate_n(cls, v):
        check_free_symmetric_domain(v)
        return v

    def character_moment(self, k: int) -> Fraction:
        return Fraction(len(enumerate_nc(k, self.nc_guard)))

    def haar_monomial(self, word: Word) -> Fraction:
        word.check_range(self.n)
        return snplus_haar_monomial(self.n, word.rows, word.cols, self.weingarten_guard)

    def fixed_vectors(self, k: int) -> np.ndarray:
        """The partition vectors δ_p, p ∈ NC(k)."""
        partitions = enumerate_nc(k, self.nc_guard)
        space = _tuples(self.n, k)
        return np.array([[float(p.constant_on(x)) for p in partitions] for x in space])


class GroupDual(BaseModel):
    """C*(Γ) with u = diag(g_1..g_n) for a finite group Γ given by its multiplication table."""
    kind: Literal['group_dual'] = 'group_dual'
    table: List[List[int]]
    generators: List[int]
    table_guard: int = DEFAULT_DUAL_TABLE_GUARD

    _identity: Optional[int] = PrivateAttr(default=None)

    @root_validator(skip_on_failure=True)
    def validate_table(cls, values):
        table, generators = values['table'], values['generators']
        order = len(table)
        if order < 1:
            raise ValueError('the multiplication table is empty')
        if order > values['table_guard']:
            raise SizeGuardError(f"group of order {order} exceeds the table guard {values['table_guard']}",
                                 limit=values['table_guard'])
        expected = list(range(order))
        for a, row in enumerate(table):
            if sorted(row) != expected:
                raise ValueError(f'row {a} of the multiplication table is not a permutation of 0..{order - 1}')
        for b in range(order):
            if sorted(row[b] for row in table) != expected:
                raise ValueError(f'column {b} of the multiplication table is not a permutation of 0..{order - 1}')
        if cls._find_identity(table) is None:
            raise ValueError('the multiplication table has no identity element')
        if order <= ASSOCIATIVITY_CHECK_LIMIT:
            for a, b, c in product(range(order), repeat=3):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise ValueError(f'the multiplication table is not associative at ({a}, {b}, {c})')
        if not generators:
            raise ValueError('at least one generator is required')
        for g in generators:
            if not 0 <= g < order:
                raise ValueError(f'generator {g} is not an element index 0..{order - 1}')
        return values

    @staticmethod
    def _find_identity(table: List[List[int]]) -> Optional[int]:
        order = len(table)
        for e in range(order):
            if all(table[e][x] == x and table[x][e] == x for x in range(order)):
                return e
        return None

    @property
    def n(self) -> int:
        return len(self.generators)

    @property
    def identity(self) -> int:
        if self._identity is None:
            self._identity = self._find_identity(self.table)
        return self._identity

    def word_product(self, letters) -> int:
        """g_{i1}···g_{ik} for 1-based generator positions, multiplied left to right."""
        value = self.identity
        for i in letters:
            value = self.table[value][self.generators[i - 1]]
        return value

    def identity_word_counts(self, k: int) -> List[int]:
        """counts[x] = number of length-k generator words with product x."""
        counts = [0] * len(self.table)
        counts[self.identity] = 1
        for _ in range(k):
            step = [0] * len(self.table)
            for x, c in enumerate(counts):
                if c:
                    for g in self.generators:
                        step[self.table[x][g]] += c
            counts = step
        return counts

    def character_moment(self, k: int) -> Fraction:
        if k < 1:
            raise InvalidInputError("level k must be positive")
        return Fraction(self.identity_word_counts(k)[self.identity])

    def haar_monomial(self, word: Word) -> Fraction:
        """u_ij = δ_ij g_i and h(g) = δ_{g,e}."""
        word.check_range(self.n)
        if word.rows != word.cols:
            return Fraction(0)
        return Fraction(int(self.word_product(word.rows) == self.identity))

    def fixed_vectors(self, k: int) -> np.ndarray:
        """Basis vectors e_I of the words I with g_I = e."""
        space = _tuples(self.n, k)
        hits = [pos for pos, x in enumerate(space) if self.word_product(x) == self.identity]
        vectors = np.zeros((len(space), len(hits)))
        for column, pos in enumerate(hits):
            vectors[pos, column] = 1.0
        return vectors


class ExplicitSequence(BaseModel):
    """A user-supplied moment sequence c_1, c_2, ...; values must be nonnegative integers."""
    kind: Literal['explicit'] = 'explicit'
    values: List[Fraction]

    class Config:
        arbitrary_types_allowed = True
        json_encoders = {Fraction: str}

    @validator('values', pre=True)
    def validate_values(cls, v):
        if not isinstance(v, list) or not v:
            raise ValueError('values must be a non-empty list')
        parsed = []
        for position, value in enumerate(v, start=1):
            try:
                c = Fraction(value) if not isinstance(value, str) else Fraction(value.strip())
            except (ValueError, TypeError, ZeroDivisionError):
                raise ValueError(f'c_{position} = {value!r} is not a rational number')
            if c.denominator != 1 or c < 0:
                raise ValueError(f'c_{position} = {c} is not a nonnegative integer')
            parsed.append(c)
        return parsed

    def character_moment(self, k: int) -> Fraction:
        if not 1 <= k <= len(self.values):
            raise DomainError(f"the explicit sequence has values for k = 1..{len(self.values)}, not k = {k}")
        return self.values[k - 1]

    def haar_monomial(self, word: Word) -> Fraction:
        raise DomainError("an explicit moment sequence has no monomial Haar values")

    def fixed_vectors(self, k: int) -> Optional[np.ndarray]:
        return None


MomentOracle = Union[ClassicalPermutationGroup, FreeSymmetric, GroupDual, ExplicitSequence]

ORACLE_KINDS = {
    'classical': ClassicalPermutationGroup,
    'free_symmetric': FreeSymmetric,
    'group_dual': GroupDual,
    'explicit': ExplicitSequence,
}


def oracle_from_dict(document: Any, source: str = '<oracle>',
                     guards: Optional[Dict[str, int]] = None) -> MomentOracle:
    """
    Builds an oracle from its JSON descriptor. ``guards`` supplies enumeration
    limits (``size_guard``, ``nc_guard``, ...) for the fields the kind declares,
    unless the document sets them itself.
    """
    if not isinstance(document, dict):
        raise ProcessingError(f"{source}:1: oracle document must be a JSON object")
    kind = document.get('kind')
    oracle_class = ORACLE_KINDS.get(kind)
    if oracle_class is None:
        raise ProcessingError(f"{source}:1: kind: expected one of {', '.join(ORACLE_KINDS)}, got {kind!r}")
    fields = {name: value for name, value in (guards or {}).items() if name in oracle_class.__fields__}
    fields.update(document)
    try:
        oracle = oracle_class(**fields)
    except (ValidationError, ValueError, TypeError) as e:
        raise ProcessingError(f"{source}:1: invalid {kind} oracle: {e}") from e
    logging.debug(f"Loaded {kind} oracle from {source}")
    return oracle


def oracle_to_dict(oracle: MomentOracle) -> Dict[str, Any]:
    document = oracle.dict(exclude=GUARD_FIELDS)
    if isinstance(oracle, ExplicitSequence):
        document['values'] = [str(c) for c in oracle.values]
    return document


def oracle_digest(oracle: MomentOracle) -> str:
    return hashlib.sha256(canonical_json(oracle_to_dict(oracle)).encode('utf-8')).hexdigest()


def character_moment(oracle: MomentOracle, k: int) -> Fraction:
    """c_k = h(χ^k) for any oracle kind."""
    return oracle.character_moment(k)


def haar_monomial(oracle: MomentOracle, word: Word) -> Fraction:
    return oracle.haar_monomial(word)
