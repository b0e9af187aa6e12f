from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from pydantic import ValidationError

from hopfimage.core.exceptions import DomainError, HopfImageError, InvalidInputError, ProcessingError, SizeGuardError
from hopfimage.models import Permutation, from_hadamard, from_unitaries, fourier_matrix
from hopfimage.moments import (
    ClassicalPermutationGroup,
    ExplicitSequence,
    FreeSymmetric,
    GroupDual,
    SetPartition,
    burnside_count,
    catalan,
    character_moment,
    classical_character_moment,
    classical_haar_monomial,
    enumerate_nc,
    generate_group,
    gram_matrix,
    haar_monomial,
    inverse_matrix,
    oracle_digest,
    oracle_from_dict,
    oracle_to_dict,
    orbit_count,
    snplus_haar_monomial,
    weingarten_matrix,
)
from hopfimage.moments.weingarten import identity_matrix
from hopfimage.transfer import Word

from conftest import symmetric_group


def multiplication_table(elements):
    index = {g: a for a, g in enumerate(elements)}
    return [[index[a * b] for b in elements] for a in elements]


# -- permutation groups --------------------------------------------------------

@pytest.mark.parametrize("generators, order", [
    ([[2, 1, 3]], 2),
    ([[2, 3, 1]], 3),
    ([[2, 1, 3], [2, 3, 1]], 6),
    ([[2, 1, 3, 4], [1, 2, 4, 3]], 4),
    ([[2, 3, 4, 1], [4, 3, 2, 1]], 8),
])
def test_generated_group_orders(generators, order):
    elements = generate_group(generators)
    assert len(elements) == order
    assert elements[0].is_identity()
    assert len(set(elements)) == order


def test_group_generation_respects_the_size_guard():
    with pytest.raises(SizeGuardError):
        generate_group([[2, 3, 4, 1], [2, 1, 3, 4]], size_guard=10)


@pytest.mark.parametrize("k, expected", [(1, 1), (2, 2), (3, 5), (4, 14)])
def test_burnside_moments_of_s3(k, expected):
    assert burnside_count(symmetric_group(3), k) == expected
    assert ClassicalPermutationGroup.full_symmetric(3).character_moment(k) == expected


@pytest.mark.parametrize("generators", [
    [[1, 2, 3, 4]],
    [[2, 1, 3, 4]],
    [[2, 3, 4, 1]],
    [[2, 1, 4, 3], [3, 4, 1, 2]],
    [[2, 3, 4, 1], [2, 1, 3, 4]],
])
@pytest.mark.parametrize("k", range(1, 6))
def test_burnside_agrees_with_orbit_enumeration(generators, k):
    elements = generate_group(generators)
    assert burnside_count(elements, k) == orbit_count([Permutation(g) for g in generators], 4, k)


@pytest.mark.parametrize("generators", [[[1, 2, 3]], [[2, 1, 3]], [[2, 3, 1]], [[2, 1, 3], [2, 3, 1]]])
@pytest.mark.parametrize("k", range(1, 6))
def test_burnside_agrees_with_orbit_enumeration_on_three_points(generators, k):
    elements = generate_group(generators)
    assert burnside_count(elements, k) == orbit_count([Permutation(g) for g in generators], 3, k)


@pytest.mark.parametrize("k", range(1, 5))
def test_classical_moments_do_not_increase_along_a_subgroup_chain(k):
    chain = [
        [[1, 2, 3, 4]],
        [[2, 1, 4, 3]],
        [[2, 1, 4, 3], [3, 4, 1, 2]],
        [[2, 3, 4, 1], [4, 3, 2, 1]],
        [[2, 3, 4, 1], [2, 1, 3, 4]],
    ]
    groups = [generate_group(generators) for generators in chain]
    for smaller, larger in zip(groups, groups[1:]):
        assert set(smaller) <= set(larger)
    moments = [classical_character_moment(elements, k) for elements in groups]
    assert moments == sorted(moments, reverse=True)
    assert moments[0] == 4 ** k


def test_orbit_cross_check_detects_mismatched_generators():
    with pytest.raises(HopfImageError):
        classical_character_moment(symmetric_group(3), 1, generators=[Permutation([2, 1, 3])])


def test_classical_haar_monomials():
    s3 = symmetric_group(3)
    assert classical_haar_monomial(s3, (1,), (1,)) == Fraction(1, 3)
    assert classical_haar_monomial(s3, (1, 2), (1, 2)) == Fraction(1, 6)
    assert classical_haar_monomial(s3, (1, 1), (2, 3)) == 0
    assert classical_haar_monomial(generate_group([[2, 3, 1]]), (2,), (1,)) == Fraction(1, 3)


def test_classical_haar_row_sums():
    oracle = ClassicalPermutationGroup(n=4, generators=[[2, 1, 3, 4], [1, 2, 4, 3]])
    for i in range(1, 5):
        assert sum(oracle.haar_monomial(Word.of([(i, j)])) for j in range(1, 5)) == 1


def test_classical_oracle_accepts_cycle_notation():
    oracle = ClassicalPermutationGroup(n=3, generators=["(1 2 3)"])
    assert len(oracle.elements()) == 3
    assert oracle.character_moment(1) == 1
    assert oracle.character_moment(2) == 3


def test_classical_fixed_vectors_are_orbit_indicators(s3_oracle):
    vectors = s3_oracle.fixed_vectors(2)
    assert vectors.shape == (9, 2)
    np.testing.assert_array_equal(vectors.sum(axis=1), np.ones(9))
    assert sorted(vectors.sum(axis=0)) == [3, 6]


def test_hopf_image_of_permutation_models(s3_model, transposition_model):
    assert len(ClassicalPermutationGroup.from_model(s3_model).elements()) == 6
    image = ClassicalPermutationGroup.from_model(transposition_model)
    assert image.generators == [[2, 1, 3]]
    assert len(image.elements()) == 2


def test_hopf_image_needs_a_permutation_model():
    with pytest.raises(InvalidInputError):
        ClassicalPermutationGroup.from_model(from_hadamard(fourier_matrix(3)))
    with pytest.raises(InvalidInputError):
        ClassicalPermutationGroup.from_model(from_unitaries([np.diag([1, -1])]))


# -- partitions ----------------------------------------------------------------

@pytest.mark.parametrize("k", range(1, 9))
def test_noncrossing_partitions_are_counted_by_catalan(k):
    partitions = enumerate_nc(k)
    assert len(partitions) == catalan(k)
    assert len(set(partitions)) == len(partitions)
    assert all(p.is_noncrossing() for p in partitions)


@pytest.mark.parametrize("k", range(1, 7))
def test_noncrossing_enumeration_matches_filtering_all_partitions(k):
    every = {SetPartition.from_labels(labels) for labels in product(range(k), repeat=k)}
    assert set(enumerate_nc(k)) == {p for p in every if p.is_noncrossing()}


def test_catalan_numbers():
    assert [catalan(k) for k in range(9)] == [1, 1, 2, 5, 14, 42, 132, 429, 1430]


def test_noncrossing_order_is_finest_first():
    partitions = enumerate_nc(4)
    assert len(partitions[0]) == 4
    assert partitions[-1] == SetPartition([[1, 2, 3, 4]])


def test_crossing_partition():
    assert not SetPartition([[1, 3], [2, 4]]).is_noncrossing()
    assert SetPartition([[1, 4], [2, 3]]).is_noncrossing()


def test_partition_join_and_kernels():
    p = SetPartition([[1, 2], [3], [4]])
    q = SetPartition([[1], [2, 3], [4]])
    assert p.join(q) == SetPartition([[1, 2, 3], [4]])
    assert SetPartition.from_labels([7, 5, 7]) == SetPartition([[1, 3], [2]])
    assert p.constant_on((2, 2, 1, 3))
    assert not p.constant_on((1, 2, 1, 1))
    with pytest.raises(InvalidInputError):
        p.join(SetPartition([[1, 2, 3]]))


def test_invalid_partitions():
    with pytest.raises(InvalidInputError):
        SetPartition([[1], [3]])
    with pytest.raises(InvalidInputError):
        enumerate_nc(0)
    with pytest.raises(SizeGuardError):
        enumerate_nc(15)


# -- Weingarten calculus -------------------------------------------------------

def test_gram_and_weingarten_at_level_two():
    weingarten = weingarten_matrix(4, 2)
    assert weingarten.partitions == [SetPartition([[1], [2]]), SetPartition([[1, 2]])]
    assert weingarten.gram.tolist() == [[16, 4], [4, 4]]
    assert weingarten.matrix.tolist() == [
        [Fraction(1, 12), Fraction(-1, 12)],
        [Fraction(-1, 12), Fraction(1, 3)],
    ]


@pytest.mark.parametrize("n", [4, 5])
@pytest.mark.parametrize("k", range(1, 6))
def test_weingarten_inverts_the_gram_matrix(n, k):
    weingarten = weingarten_matrix(n, k)
    size = len(weingarten.partitions)
    assert np.array_equal(weingarten.matrix.dot(weingarten.gram), identity_matrix(size))
    assert np.array_equal(weingarten.matrix, weingarten.matrix.T)


def test_inverse_of_a_singular_matrix():
    with pytest.raises(HopfImageError):
        inverse_matrix(np.array([[1, 2], [2, 4]], dtype=object))


def test_gram_entries_count_join_blocks():
    partitions = enumerate_nc(3)
    G = gram_matrix(5, partitions)
    assert G[0, 0] == 125
    assert G[0, -1] == 5


def test_free_symmetric_haar_values():
    assert snplus_haar_monomial(4, (1,), (1,)) == Fraction(1, 4)
    assert snplus_haar_monomial(4, (1, 2), (1, 2)) == Fraction(1, 12)
    assert snplus_haar_monomial(4, (1, 1), (1, 1)) == Fraction(1, 4)
    assert snplus_haar_monomial(4, (1, 2), (1, 1)) == 0


def test_free_and_classical_haar_agree_on_short_words():
    free = FreeSymmetric(n=4)
    classical = ClassicalPermutationGroup.full_symmetric(4)
    for word in (Word.parse("(1,1)(2,2)"), Word.parse("(1,2)(2,1)"), Word.parse("(3,1)")):
        assert free.haar_monomial(word) == classical.haar_monomial(word)


def test_free_symmetric_row_sums():
    oracle = FreeSymmetric(n=4)
    assert sum(oracle.haar_monomial(Word.of([(1, 1), (2, j)])) for j in range(1, 5)) == Fraction(1, 4)


@pytest.mark.parametrize("n", [4, 5])
def test_free_symmetric_rows_sum_to_one(n):
    for i in range(1, n + 1):
        assert sum(snplus_haar_monomial(n, (i,), (j,)) for j in range(1, n + 1)) == 1
        assert sum(snplus_haar_monomial(n, (j,), (i,)) for j in range(1, n + 1)) == 1


def test_free_symmetric_moments_are_catalan():
    oracle = FreeSymmetric(n=4)
    assert [oracle.character_moment(k) for k in range(1, 6)] == [1, 2, 5, 14, 42]
    assert ClassicalPermutationGroup.full_symmetric(4).character_moment(4) == 15


def test_free_symmetric_domain():
    with pytest.raises(DomainError):
        weingarten_matrix(3, 2)
    with pytest.raises(ValidationError):
        FreeSymmetric(n=3)
    with pytest.raises(SizeGuardError, match="weingarten_guard profile setting"):
        weingarten_matrix(4, 7)
    with pytest.raises(SizeGuardError, match="weingarten_guard"):
        FreeSymmetric(n=4).haar_monomial(Word.of([(1, 1)] * 7))


def test_free_symmetric_fixed_vectors():
    vectors = FreeSymmetric(n=4).fixed_vectors(2)
    assert vectors.shape == (16, 2)
    assert vectors[:, 0].sum() == 16
    assert vectors[:, 1].sum() == 4


# -- group duals ---------------------------------------------------------------

def test_cyclic_group_dual():
    oracle = GroupDual(table=[[0, 1], [1, 0]], generators=[1])
    assert oracle.n == 1
    assert [oracle.character_moment(k) for k in range(1, 5)] == [0, 1, 0, 1]
    assert oracle.haar_monomial(Word.parse("(1,1)(1,1)")) == 1
    assert oracle.haar_monomial(Word.parse("(1,1)")) == 0
    assert oracle.fixed_vectors(2).shape == (1, 1)


def identity_word_count(table, generators, identity, k):
    count = 0
    for letters in product(generators, repeat=k):
        value = identity
        for g in letters:
            value = table[value][g]
        count += value == identity
    return count


def s3_transpositions():
    elements = symmetric_group(3)
    generators = [elements.index(Permutation([2, 1, 3])), elements.index(Permutation([1, 3, 2]))]
    return multiplication_table(elements), generators, elements.index(Permutation.identity(3))


@pytest.mark.parametrize("group", [
    pytest.param(lambda: ([[0, 1], [1, 0]], [1], 0), id="z2"),
    pytest.param(s3_transpositions, id="s3"),
])
@pytest.mark.parametrize("k", range(1, 7))
def test_group_dual_moments_count_identity_words(group, k):
    table, generators, identity = group()
    oracle = GroupDual(table=table, generators=generators)
    assert oracle.character_moment(k) == identity_word_count(table, generators, identity, k)


def test_group_dual_monomials_need_equal_rows_and_columns():
    elements = symmetric_group(3)
    oracle = GroupDual(table=multiplication_table(elements), generators=[1, 2])
    assert oracle.haar_monomial(Word.parse("(1,2)")) == 0


@pytest.mark.parametrize("table, generators", [
    ([[0, 0], [1, 1]], [1]),
    ([[0, 2, 1], [2, 1, 0], [1, 0, 2]], [1]),
    ([[0, 1], [1, 0]], [2]),
    ([[0, 1], [1, 0]], []),
    ([], [0]),
])
def test_invalid_group_tables(table, generators):
    with pytest.raises(ValidationError):
        GroupDual(table=table, generators=generators)


def test_group_table_guard():
    with pytest.raises(SizeGuardError):
        GroupDual(table=[[0, 1], [1, 0]], generators=[1], table_guard=1)


# -- explicit sequences --------------------------------------------------------

def test_explicit_sequence():
    oracle = ExplicitSequence(values=[1, 2, "5", "14"])
    assert [character_moment(oracle, k) for k in range(1, 5)] == [1, 2, 5, 14]
    assert oracle.fixed_vectors(1) is None
    with pytest.raises(DomainError):
        oracle.character_moment(5)
    with pytest.raises(DomainError):
        haar_monomial(oracle, Word.parse("(1,1)"))


@pytest.mark.parametrize("values", [[1, "1/2"], [-1], [], ["two"]])
def test_explicit_sequence_rejects_non_integers(values):
    with pytest.raises(ValidationError):
        ExplicitSequence(values=values)


# -- descriptors ---------------------------------------------------------------

@pytest.mark.parametrize("document, kind", [
    ({"kind": "classical", "n": 3, "generators": [[2, 1, 3], "(1 2 3)"]}, 'classical'),
    ({"kind": "classical", "n": 4, "symmetric": True}, 'classical'),
    ({"kind": "free_symmetric", "n": 4}, 'free_symmetric'),
    ({"kind": "group_dual", "table": [[0, 1], [1, 0]], "generators": [1]}, 'group_dual'),
    ({"kind": "explicit", "values": [1, 2, 5, "14"]}, 'explicit'),
])
def test_oracle_descriptors(document, kind):
    assert oracle_from_dict(document).kind == kind


@pytest.mark.parametrize("document", [
    [1, 2],
    {"kind": "quantum"},
    {"kind": "classical", "n": 3},
    {"kind": "free_symmetric", "n": 2},
    {"kind": "explicit", "values": ["x"]},
    {"kind": "classical", "n": 3, "generators": ["(1 2 3"]},
    {"kind": "classical", "n": 3, "generators": ["2 3 1"]},
])
def test_invalid_oracle_descriptors(document):
    with pytest.raises(ProcessingError, match="oracle.json:1:"):
        oracle_from_dict(document, source='oracle.json')


def test_guards_are_passed_to_the_oracle():
    oracle = oracle_from_dict({"kind": "free_symmetric", "n": 4}, guards={'nc_guard': 3, 'size_guard': 5})
    assert oracle.nc_guard == 3
    with pytest.raises(SizeGuardError):
        oracle.character_moment(4)


def test_digest_ignores_guards():
    a = ClassicalPermutationGroup(n=3, generators=[[2, 1, 3]])
    b = ClassicalPermutationGroup(n=3, generators=[[2, 1, 3]], size_guard=10)
    assert oracle_digest(a) == oracle_digest(b)
    assert 'size_guard' not in oracle_to_dict(a)
    assert oracle_digest(a) != oracle_digest(ClassicalPermutationGroup(n=3, generators=[[1, 3, 2]]))
    assert oracle_to_dict(ExplicitSequence(values=[1, 2]))['values'] == ['1', '2']
