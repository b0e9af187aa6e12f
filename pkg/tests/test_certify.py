from fractions import Fraction
from itertools import combinations_with_replacement

import numpy as np
import pytest

from hopfimage.certify import CertificateReport, certify, compare_idempotent_to_haar
from hopfimage.core.exceptions import CertificationError, DimensionError, InvalidInputError
from hopfimage.models import from_hadamard, from_permutations, from_unitaries, fourier_matrix
from hopfimage.models.random_models import random_models
from hopfimage.moments import (
    ClassicalPermutationGroup,
    ExplicitSequence,
    FreeSymmetric,
    GroupDual,
    burnside_count,
    generate_group,
)
from hopfimage.transfer import Word, all_words, multiplicity_one

from conftest import symmetric_group


def distinct_subgroups(n):
    """Every subgroup of S_n generated by at most two elements, each once, with its generators."""
    seen = {}
    for a, b in combinations_with_replacement(symmetric_group(n), 2):
        elements = frozenset(generate_group([a, b]))
        seen.setdefault(elements, [list(a.images), list(b.images)])
    return list(seen.values())


def matrix_group_table(generators):
    """Closes a finite set of unitaries under products; returns the table and the generator indices."""
    def key(M):
        return tuple(np.round(M, 8).flatten())
    d = generators[0].shape[0]
    elements = [np.eye(d)]
    index = {key(elements[0]): 0}
    position = 0
    while position < len(elements):
        for g in generators:
            product_ = elements[position] @ g
            if key(product_) not in index:
                index[key(product_)] = len(elements)
                elements.append(product_)
        position += 1
    table = [[index[key(a @ b)] for b in elements] for a in elements]
    return table, [index[key(g)] for g in generators]


def test_full_symmetric_model_is_confirmed(s3_model, s3_oracle):
    report = certify(s3_model, s3_oracle, 4)
    assert report.verdict.label == "ConfirmedUpTo(4)"
    assert [r.m_k for r in report.levels] == [1, 2, 5, 14]
    assert [r.c_k for r in report.levels] == [1, 2, 5, 14]
    assert all(r.fixed_defect <= 1e-12 for r in report.levels)


def test_transposition_model_is_refuted_at_level_one(transposition_model, s3_oracle):
    report = certify(transposition_model, s3_oracle, 4)
    assert report.verdict.label == "RefutedAt(1)"
    assert len(report.levels) == 1
    assert (report.levels[0].m_k, report.levels[0].c_k) == (2, 1)


def test_fourier_two_model_against_s2(f2_model, s2_oracle):
    report = certify(f2_model, s2_oracle, 3)
    assert report.verdict.status == 'confirmed'
    assert [r.m_k for r in report.levels] == [1, 2, 4]


@pytest.mark.parametrize("n", [3, 4])
def test_permutation_models_certify_their_generated_group(n):
    for generators in distinct_subgroups(n):
        model = from_permutations(n, generators)
        image = ClassicalPermutationGroup(n=n, generators=generators)
        report = certify(model, image, 4)
        assert report.verdict.label == "ConfirmedUpTo(4)", generators


@pytest.mark.parametrize("n", [3, 4])
def test_proper_subgroups_are_refuted_against_the_symmetric_group(n):
    ambient = ClassicalPermutationGroup.full_symmetric(n)
    for generators in distinct_subgroups(n):
        elements = generate_group(generators)
        report = certify(from_permutations(n, generators), ambient, 4)
        proper = len(elements) < len(ambient.elements())
        assert report.verdict.status == ('refuted' if proper else 'confirmed'), generators
        for record in report.levels:
            assert record.m_k == burnside_count(elements, record.k)
        if proper:
            record = report.levels[-1]
            assert record.m_k > record.c_k


@pytest.mark.parametrize("generators", [
    [[2, 1, 4, 3], [3, 4, 1, 2]],
    [[2, 1, 3, 4]],
    [[2, 3, 4, 1], [4, 3, 2, 1]],
])
def test_verdicts_are_monotone_in_k_max(generators):
    model = from_permutations(4, generators)
    ambient = ClassicalPermutationGroup.full_symmetric(4)
    verdicts = [certify(model, ambient, k_max).verdict for k_max in range(1, 5)]
    refuted = [v.level for v in verdicts if v.status == 'refuted']
    assert refuted
    first = verdicts.index(next(v for v in verdicts if v.status == 'refuted'))
    assert all(v.status == 'confirmed' and v.level == k for k, v in enumerate(verdicts[:first], start=1))
    assert all(v.status == 'refuted' and v.level == refuted[0] for v in verdicts[first:])


def test_klein_four_is_confirmed_at_level_one_then_refuted_at_two():
    model = from_permutations(4, [[2, 1, 4, 3], [3, 4, 1, 2]])
    ambient = ClassicalPermutationGroup.full_symmetric(4)
    labels = [certify(model, ambient, k_max).verdict.label for k_max in range(1, 5)]
    assert labels == ["ConfirmedUpTo(1)", "RefutedAt(2)", "RefutedAt(2)", "RefutedAt(2)"]


@pytest.mark.parametrize("n", [3, 4])
def test_idempotent_state_is_the_haar_state_of_the_generated_group(n):
    words = all_words(n, 1) + all_words(n, 2)
    for generators in distinct_subgroups(n):
        model = from_permutations(n, generators)
        image = ClassicalPermutationGroup(n=n, generators=generators)
        rows = compare_idempotent_to_haar(model, image, words)
        assert max(r.difference for r in rows) <= 1e-8, generators


def test_fourier_four_model_is_not_inner_faithful_for_the_free_group():
    report = certify(from_hadamard(fourier_matrix(4)), FreeSymmetric(n=4), 4)
    assert report.verdict.label == "RefutedAt(2)"
    assert report.levels[-1].m_k == 4
    assert report.levels[-1].c_k == 2


def test_explicit_sequences(f2_model):
    assert certify(f2_model, ExplicitSequence(values=[1, 2, 4]), 3).verdict.label == "ConfirmedUpTo(3)"
    assert certify(f2_model, ExplicitSequence(values=[1, 1]), 2).verdict.label == "RefutedAt(2)"
    report = certify(f2_model, ExplicitSequence(values=[1, 3]), 2)
    assert report.verdict.label == "Inconsistent(2)"
    assert report.levels[-1].fixed_defect is None


def test_explicit_sequence_too_short_is_a_certification_error(f2_model):
    with pytest.raises(CertificationError) as info:
        certify(f2_model, ExplicitSequence(values=[1, 2]), 3)
    assert len(info.value.partial_report.levels) == 2


def test_capacity_failure_keeps_the_completed_levels(f2_model, s2_oracle):
    with pytest.raises(CertificationError) as info:
        certify(f2_model, s2_oracle, 4, cap=4)
    partial = info.value.partial_report
    assert isinstance(partial, CertificateReport)
    assert [r.k for r in partial.levels] == [1, 2]
    assert partial.verdict is None


def test_size_mismatch(f2_model, s3_oracle):
    with pytest.raises(DimensionError):
        certify(f2_model, s3_oracle, 2)
    with pytest.raises(InvalidInputError):
        certify(f2_model, ClassicalPermutationGroup.full_symmetric(2), 0)


def test_certification_is_deterministic(s3_model, s3_oracle):
    first = certify(s3_model, s3_oracle, 3)
    second = certify(s3_model, s3_oracle, 3)
    assert first.dict() == second.dict()
    assert len(first.model_digest) == 64


@pytest.mark.parametrize("method", ['kernel', 'cesaro'])
def test_single_method_certification(s3_model, s3_oracle, method):
    report = certify(s3_model, s3_oracle, 3, method=method)
    assert report.verdict.label == "ConfirmedUpTo(3)"
    assert report.method == method


def test_multiplicities_do_not_decrease():
    for model in random_models(6, seed=3):
        values = [multiplicity_one(model, k).m_k for k in (1, 2, 3)]
        assert values[0] >= 1
        assert values == sorted(values)


def test_zero_moments_are_refuted_at_level_one():
    report = certify(from_hadamard(fourier_matrix(3)), ExplicitSequence(values=[0, 0]), 2)
    assert report.verdict.label == "RefutedAt(1)"


def test_wrong_ambient_group_is_reported_as_a_warning(transposition_model):
    wrong = ClassicalPermutationGroup(n=3, generators=[[1, 3, 2]])
    report = certify(transposition_model, wrong, 2)
    assert any("not fixed by T_" in w for w in report.warnings)


# -- group duals ---------------------------------------------------------------

def test_faithful_cyclic_group_dual_is_confirmed():
    model = from_unitaries([np.diag([1, -1])])
    oracle = GroupDual(table=[[0, 1], [1, 0]], generators=[1])
    report = certify(model, oracle, 4)
    assert report.verdict.label == "ConfirmedUpTo(4)"
    assert [r.m_k for r in report.levels] == [0, 1, 0, 1]


def test_trivial_representation_of_a_group_dual_is_refuted():
    model = from_unitaries([np.eye(1)])
    oracle = GroupDual(table=[[0, 1], [1, 0]], generators=[1])
    assert certify(model, oracle, 2).verdict.label == "RefutedAt(1)"


def test_dihedral_group_from_pauli_matrices():
    X = np.array([[0, 1], [1, 0]])
    Z = np.diag([1, -1])
    table, generators = matrix_group_table([X, Z])
    assert len(table) == 8
    oracle = GroupDual(table=table, generators=generators)
    report = certify(from_unitaries([X, Z]), oracle, 4)
    assert report.verdict.label == "ConfirmedUpTo(4)"


# -- idempotent state ----------------------------------------------------------

def test_idempotent_against_the_ambient_group(transposition_model, s3_oracle):
    rows = compare_idempotent_to_haar(transposition_model, s3_oracle, [Word.parse("(1,1)"), Word.parse("(3,3)")])
    assert rows[0].idempotent == pytest.approx(0.5, abs=1e-9)
    assert rows[0].haar == Fraction(1, 3)
    assert rows[0].difference == pytest.approx(1 / 6, abs=1e-9)
    assert rows[1].difference == pytest.approx(2 / 3, abs=1e-9)


def test_idempotent_matches_the_hopf_image(transposition_model):
    image = ClassicalPermutationGroup.from_model(transposition_model)
    words = [Word.of([(i, j)]) for i in range(1, 4) for j in range(1, 4)]
    words += [Word.parse("(1,2)(2,1)"), Word.parse("(1,1)(2,2)")]
    rows = compare_idempotent_to_haar(transposition_model, image, words)
    assert max(r.difference for r in rows) <= 1e-8


def test_idempotent_against_the_free_symmetric_group():
    model = from_hadamard(fourier_matrix(4))
    rows = compare_idempotent_to_haar(model, FreeSymmetric(n=4), [Word.parse("(1,1)"), Word.parse("(1,2)(2,1)")])
    assert rows[0].difference == pytest.approx(0.0, abs=1e-9)
    assert rows[1].difference > 1e-3


def test_idempotent_word_outside_the_model(f2_model, s2_oracle):
    with pytest.raises(InvalidInputError):
        compare_idempotent_to_haar(f2_model, s2_oracle, [Word.parse("(1,3)")])
