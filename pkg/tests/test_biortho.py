import dataclasses
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from holoembed.biortho.echelon import EchelonBasis, prefix_span_certificate, rank, span_equal
from holoembed.biortho.models import DenseFamilyPair, FamilyKind
from holoembed.biortho.operations import (
    biorthogonalize,
    build_system,
    check_norm_from_functionals,
    equality_witness,
    generate_dense_family,
    normalize,
    pairing_table,
    verify_lemma_conditions,
)
from holoembed.biortho.schemas import SystemSchema
from holoembed.contrib.exceptions import ExhaustedWithoutPivot, InvalidParameter, StageMismatch, WindowExceeded
from holoembed.contrib.random import STREAM_FAMILY, make_rng, random_rational
from holoembed.contrib.rationals import ComplexRational
from holoembed.space.models import SparseFunctional, SparseVector
from holoembed.space.operations import dual_bound, make_kothe, pair


def deltas(cls, count):
    return tuple(cls.delta(n) for n in range(count))


def test_canonical_family():
    family = generate_dense_family('canonical', 123, 3, 9)
    assert family.vectors == deltas(SparseVector, 3)
    assert family.functionals == deltas(SparseFunctional, 3)


def test_triangular_family_replays_the_generator():
    family = generate_dense_family(FamilyKind.TRIANGULAR, 1, 2, 9)
    c0 = random_rational(make_rng(1, STREAM_FAMILY), 9)
    assert family.vectors[0] == SparseVector.delta(0)
    assert family.vectors[1] == SparseVector({0: c0, 1: 1})


def test_triangular_family_has_full_rank():
    family = generate_dense_family(FamilyKind.TRIANGULAR, 1, 64, 9)
    assert rank(family.vectors) == 64
    assert rank(family.functionals) == 64


@pytest.mark.parametrize('kind, stage, bound', [('nope', 3, 9), ('canonical', 0, 9), ('triangular', 3, 0)])
def test_generate_dense_family_rejects_bad_input(kind, stage, bound):
    with pytest.raises(InvalidParameter):
        generate_dense_family(kind, 1, stage, bound)


def test_echelon_rank_and_membership():
    basis = EchelonBasis()
    assert basis.insert(SparseVector.delta(0))
    assert not basis.insert(SparseVector.delta(0, 3))
    assert basis.insert(SparseVector({0: ComplexRational(0, 1), 1: Fraction(1, 2)}))
    assert basis.contains(SparseVector({0: 5, 1: ComplexRational(2, -1)}))
    assert not basis.contains(SparseVector.delta(2))
    assert basis.rank == 2


def test_span_certificates():
    first = [SparseVector.delta(0), SparseVector.delta(1)]
    second = [SparseVector({0: 1, 1: 1}), SparseVector.delta(1)]
    assert span_equal(first, second)
    assert prefix_span_certificate(first, second) == (False, 1)
    assert prefix_span_certificate(first, [SparseVector.delta(0) * 2, first[0] + first[1]]) == (True, None)
    assert not span_equal(first, [SparseVector.delta(0), SparseVector.delta(2)])


def test_biorthogonalize_canonical():
    raw = biorthogonalize(generate_dense_family('canonical', 0, 3, 9), 3)
    assert raw.x_vectors == deltas(SparseVector, 3)
    assert raw.x_functionals == deltas(SparseFunctional, 3)


def test_biorthogonalize_two_by_two():
    family = DenseFamilyPair(
        vectors=(SparseVector.delta(0), SparseVector({0: 1, 1: 1})),
        functionals=deltas(SparseFunctional, 2),
        seed=0,
        kind=FamilyKind.CANONICAL,
        bound=1,
    )
    raw = biorthogonalize(family, 2)
    assert raw.x_vectors == deltas(SparseVector, 2)
    assert raw.x_functionals == deltas(SparseFunctional, 2)


def test_biorthogonalize_skips_dependent_pairs():
    family = DenseFamilyPair(
        vectors=(SparseVector.delta(1), SparseVector.delta(0)),
        functionals=(SparseFunctional.delta(0), SparseFunctional.delta(1)),
        seed=0,
        kind=FamilyKind.CANONICAL,
        bound=1,
    )
    raw = biorthogonalize(family, 2)
    assert raw.consumed_y == (0, 1)
    assert raw.consumed_v == (1, 0)


def test_biorthogonalize_errors():
    family = generate_dense_family('canonical', 0, 2, 9)
    with pytest.raises(StageMismatch):
        biorthogonalize(family, 3)
    dependent = DenseFamilyPair(
        vectors=(SparseVector.delta(0), SparseVector.delta(0, 2)),
        functionals=deltas(SparseFunctional, 2),
        seed=0,
        kind=FamilyKind.CANONICAL,
        bound=1,
    )
    with pytest.raises(ExhaustedWithoutPivot):
        biorthogonalize(dependent, 2)


def test_triangular_biorthogonality_at_stage_32():
    family = generate_dense_family(FamilyKind.TRIANGULAR, 7, 32, 9)
    raw = biorthogonalize(family, 32)
    for n, x in enumerate(raw.x_vectors):
        for m, xp in enumerate(raw.x_functionals):
            assert pair(x, xp) == (1 if n == m else 0)


def test_normalize_canonical_on_rapid_decrease(canonical):
    for n in range(canonical.stage):
        assert canonical.m_constants[n] == Fraction(1, n + 1)
        assert canonical.e_functionals[n] == SparseFunctional.delta(n, n + 1)
        assert canonical.e_vectors[n] == SparseVector.delta(n, Fraction(1, n + 1))


def test_normalize_canonical_on_disc_type(disc):
    _, system = build_system('canonical', 0, 8, 9, disc)
    assert system.m_constants == tuple(Fraction(2**n) for n in range(8))


def test_normalized_functionals_have_unit_dual_bound(triangular_pair, rapid):
    _, system = triangular_pair
    assert all(dual_bound(rapid, u) == 1 for u in system.e_functionals)
    assert all(pair(e, u) == 1 for e, u in zip(system.e_vectors, system.e_functionals))


def test_lemma_conditions_canonical(canonical, rapid):
    family = generate_dense_family('canonical', 0, 16, 9)
    report = verify_lemma_conditions(canonical, family, rapid, 100, 7)
    assert report.passed
    assert report.witnesses == []
    assert report.norm_grade == 0
    assert report.equality_witnesses == list(range(16))


def test_lemma_conditions_triangular(triangular_pair, rapid):
    family, system = triangular_pair
    report = verify_lemma_conditions(system, family, rapid, 200, 7)
    assert report.conditions.model_dump() == {'i': True, 'ii': True, 'iii': True, 'iv': True}
    assert report.m_constants == [f'1/{n + 1}' for n in range(16)]


def test_lemma_conditions_detect_doubled_functional(canonical, rapid):
    family = generate_dense_family('canonical', 0, 16, 9)
    functionals = list(canonical.e_functionals)
    functionals[0] = functionals[0] * 2
    broken = dataclasses.replace(canonical, e_functionals=tuple(functionals))
    report = verify_lemma_conditions(broken, family, rapid, 50, 7)
    assert not report.conditions.ii
    assert not report.conditions.iv
    assert any(w.condition == 'iv' and w.indices == [0, 0] for w in report.witnesses)
    assert not report.passed


def test_equality_witness(canonical, rapid):
    assert equality_witness(canonical, rapid, 3) == 3


def test_pairing_table_is_identity(triangular_pair):
    _, system = triangular_pair
    table = pairing_table(system)
    assert all(table[n][m] == (1 if n == m else 0) for n in range(16) for m in range(16))


def test_norm_from_functionals(canonical, triangular_pair, rapid):
    assert check_norm_from_functionals(canonical, rapid, 50, 7)
    assert check_norm_from_functionals(triangular_pair[1], rapid, 50, 7)


def test_random_family_is_biorthogonalized(rapid):
    family, system = build_system(FamilyKind.RANDOM, 3, 6, 5, rapid)
    assert all(pair(system.e_vectors[n], system.e_functionals[m]) == (1 if n == m else 0)
               for n in range(6) for m in range(6))
    assert verify_lemma_conditions(system, family, rapid, 50, 3).passed


def test_system_schema_round_trip(triangular_pair):
    _, system = triangular_pair
    restored = SystemSchema.model_validate_json(SystemSchema.from_system(system).model_dump_json()).to_system()
    assert restored == system


def test_normalize_rejects_vectors_outside_window():
    small = make_kothe('rapid_decrease', grades=1, window=2)
    raw = biorthogonalize(generate_dense_family('canonical', 0, 3, 9), 3)
    with pytest.raises(WindowExceeded):
        normalize(raw, small)


@pytest.mark.parametrize('field', ['e_vectors', 'e_functionals', 'm_constants', 'consumed_y'])
def test_system_schema_rejects_lists_off_the_stage(canonical, field):
    data = SystemSchema.from_system(canonical).model_dump(mode='json')
    data['stage'] = 8
    for name in ('e_vectors', 'e_functionals', 'm_constants', 'consumed_y', 'consumed_v'):
        data[name] = data[name][:8]
    SystemSchema.model_validate(data)
    data[field] = data[field][:3]
    with pytest.raises(ValidationError, match=field):
        SystemSchema.model_validate(data)


@pytest.mark.parametrize('bound', [1, 3, 9, 50])
def test_lemma_conditions_hold_for_every_coefficient_bound(bound):
    matrix = make_kothe('rapid_decrease', grades=2, window=12)
    family, system = build_system('triangular', 5, 12, bound, matrix)
    report = verify_lemma_conditions(system, family, matrix, 20, 5)
    assert report.conditions.model_dump() == {'i': True, 'ii': True, 'iii': True, 'iv': True}


@settings(max_examples=25, deadline=None, derandomize=True)
@given(seed=st.integers(0, 2**32 - 1), kind=st.sampled_from(['canonical', 'triangular']))
def test_pivots_are_consumed_in_order(seed, kind):
    matrix = make_kothe('rapid_decrease', grades=2, window=10)
    _, system = build_system(kind, seed, 10, 9, matrix)
    assert system.consumed_y == system.consumed_v == tuple(range(10))
