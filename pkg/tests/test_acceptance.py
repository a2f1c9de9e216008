"""
Desk-scale acceptance runs at stage 64

Slow; skip with `pytest -m 'not slow'`.
"""

import pytest

from holoembed.biortho.echelon import prefix_span_certificate
from holoembed.biortho.models import FamilyKind
from holoembed.biortho.operations import build_system, equality_witness, pairing_table, verify_lemma_conditions
from holoembed.contrib.documents import dump_model
from holoembed.contrib.random import STREAM_EMBEDDING, make_rng, random_int
from holoembed.embedding.models import WeightFamily
from holoembed.embedding.operations import embed, make_weights, reconstruct, verify_continuity
from holoembed.space.models import KotheFamily, SparseVector
from holoembed.space.operations import make_kothe
from holoembed.space.sampling import random_span_element
from holoembed.verification.schemas import RunConfig
from holoembed.verification.suite import check_monomials, check_polynomials, run_suite

pytestmark = pytest.mark.slow

STAGE = 64
SEEDS = [1, 7, 42]


@pytest.fixture(scope='module')
def space():
    return make_kothe(KotheFamily.RAPID_DECREASE, grades=2, window=STAGE)


@pytest.fixture(scope='module')
def weights():
    return make_weights(WeightFamily.INVERSE_FACTORIAL, window=STAGE)


@pytest.fixture(scope='module', params=SEEDS)
def triangular(request, space):
    return build_system(FamilyKind.TRIANGULAR, request.param, STAGE, 9, space)


def test_pairing_table_is_exactly_the_identity(triangular):
    _, system = triangular
    table = pairing_table(system)
    assert all(table[n][m] == (1 if n == m else 0) for n in range(STAGE) for m in range(STAGE))


def test_equicontinuity_and_span_certificates(triangular, space):
    family, system = triangular
    report = verify_lemma_conditions(system, family, space, 1000, family.seed)
    assert report.passed, report.witnesses
    assert system.consumed_y == system.consumed_v == tuple(range(STAGE))
    assert prefix_span_certificate(system.e_vectors, family.vectors) == (True, None)
    assert prefix_span_certificate(system.e_functionals, family.functionals) == (True, None)


def test_canonical_bound_is_attained(space):
    _, system = build_system(FamilyKind.CANONICAL, 0, STAGE, 9, space)
    assert [equality_witness(system, space, n) for n in range(STAGE)] == list(range(STAGE))


def test_monomial_identity(triangular, weights):
    assert check_monomials(triangular[1], weights)


@pytest.mark.parametrize('k', [1, 2, 4])
def test_continuity_estimate(triangular, weights, space, k):
    family, system = triangular
    check = verify_continuity(system, weights, space, k, 200, family.seed)
    assert check.holds
    assert check.max_ratio <= 1


def test_reconstruction_on_finite_spans(triangular, weights):
    family, system = triangular
    rng = make_rng(family.seed, STREAM_EMBEDDING, 3)
    zero_image = embed(SparseVector(), system, weights)
    assert not any(zero_image.coefficients)
    for _ in range(500):
        span = random_int(rng, 1, 48)
        _, x = random_span_element(rng, system.e_vectors[:span])
        image = embed(x, system, weights)
        assert any(image.coefficients)
        assert reconstruct(image, system, weights, span) == x


def test_polynomial_round_trip(triangular, weights):
    family, system = triangular
    assert check_polynomials(system, weights, 200, family.seed)


def test_reports_are_byte_identical():
    cfg = RunConfig.model_validate(
        {
            'space': {'family': 'rapid_decrease', 'grades': 2, 'window': STAGE},
            'family': {'kind': 'triangular', 'seed': 42, 'bound': 9},
            'weights': {'family': 'inverse_factorial'},
            'stage': STAGE,
            'verification': {
                'samples': 50,
                'seed': 42,
                'k_list': ['1', '2', '4'],
                'reconstructions': 20,
                'polynomials': 20,
                'table_stages': [16, 32, 64],
            },
        }
    )
    first = run_suite(cfg)
    assert first.passed
    assert dump_model(first) == dump_model(run_suite(cfg))
