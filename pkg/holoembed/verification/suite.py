"""
Certificate Suite

run_suite executes the whole construction at the configured stage:

    space -> dense families -> biorthogonalize -> normalize
          -> lemma conditions -> embedding checks -> continuity table

and collects every certificate into one CertificateReport. Randomness comes
only from the seeds in the config, so identical configs give identical
reports (timings are left out unless REPORT_TIMINGS is set).
"""

import logging
import time
from contextlib import contextmanager
from fractions import Fraction
from typing import Iterator

import numpy as np

import holoembed
from holoembed.biortho.models import BiorthogonalSystem
from holoembed.biortho.operations import build_system, check_norm_from_functionals, verify_lemma_conditions
from holoembed.configs.settings import settings
from holoembed.contrib.exceptions import HoloEmbedError, StageMismatch
from holoembed.contrib.random import (
    GENERATOR_NAME,
    STREAM_EMBEDDING,
    STREAM_POLYNOMIAL,
    make_rng,
    random_complex,
    random_int,
)
from holoembed.contrib.rationals import ONE, ZERO, format_decimal, format_rational
from holoembed.contrib.schemas import to_fraction
from holoembed.embedding.models import Domain, WeightSequence
from holoembed.embedding.operations import (
    check_norm_from_embedding,
    check_radius,
    coefficient_ratios,
    continuity_constant,
    continuity_table,
    embed,
    eval_at,
    polynomial_preimage,
    random_point,
    reconstruct,
    require_certified,
    truncate,
    verify_continuity,
)
from holoembed.embedding.schemas import ContinuityRowSchema, domain_from_wire
from holoembed.space.models import KotheMatrix, SparseVector
from holoembed.space.operations import check_continuous_norm
from holoembed.space.sampling import random_span_element, random_sparse_vector
from holoembed.verification.schemas import (
    CertificateReport,
    ContinuityResult,
    EnvironmentInfo,
    RunConfig,
    SpaceChecks,
    TheoremReport,
)

logger = logging.getLogger(__name__)


@contextmanager
def config_section(path: str) -> Iterator[None]:
    """Attach the config path to errors raised inside the block"""
    try:
        yield
    except HoloEmbedError as exc:
        raise exc.at(path)


class _Stopwatch:
    def __init__(self):
        self.timings: dict[str, float] = {}
        self._last = time.perf_counter()

    def lap(self, name: str) -> None:
        now = time.perf_counter()
        self.timings[name] = round(now - self._last, 6)
        self._last = now


def check_monomials(system: BiorthogonalSystem, weights: WeightSequence) -> bool:
    """embed(α_n^{-1}·e_n) is the n-th unit coefficient vector for every n < N"""
    for n in range(system.stage):
        x = system.e_vectors[n] / weights.values[n]
        image = embed(x, system, weights)
        expected = [ONE if m == n else ZERO for m in range(system.stage)]
        if list(image.coefficients) != expected:
            logger.warning('monomial identity fails at n=%d', n)
            return False
    return True


def check_polynomials(system: BiorthogonalSystem, weights: WeightSequence, count: int, seed: int) -> bool:
    """embed(polynomial_preimage(P)) reproduces the coefficients of P"""
    rng = make_rng(seed, STREAM_POLYNOMIAL)
    for trial in range(count):
        degree = random_int(rng, 0, system.stage - 1)
        coefficients = [random_complex(rng, 9) for _ in range(degree + 1)]
        image = embed(polynomial_preimage(coefficients, system, weights), system, weights)
        padded = coefficients + [ZERO] * (system.stage - len(coefficients))
        if list(image.coefficients) != padded:
            logger.warning('polynomial round trip fails for sample %d', trial)
            return False
    return True


def check_reconstruction(
    system: BiorthogonalSystem, weights: WeightSequence, count: int, seed: int
) -> tuple[bool, bool]:
    """
    Injectivity and exact recovery on finite spans

    Returns:
        tuple: (embed(x) = 0 only for x = 0, reconstruct(embed(x), M) = x)
    """
    injective = True
    recovered = True
    zero_image = embed(SparseVector(), system, weights)
    if any(zero_image.coefficients) or not reconstruct(zero_image, system, weights).is_zero():
        injective = recovered = False
    rng = make_rng(seed, STREAM_EMBEDDING, 1)
    for trial in range(count):
        span = random_int(rng, 1, system.stage)
        _, x = random_span_element(rng, system.e_vectors[:span])
        image = embed(x, system, weights)
        if x.is_zero() == any(image.coefficients):
            injective = False
        if reconstruct(image, system, weights, span) != x:
            logger.warning('sample %d is not recovered from %d coefficients', trial, span)
            recovered = False
        if not (injective and recovered):
            break
    return injective, recovered


def check_tails(
    system: BiorthogonalSystem,
    weights: WeightSequence,
    matrix: KotheMatrix,
    k_values: list[Fraction],
    domain: Domain,
    samples: int,
    seed: int,
) -> tuple[bool, bool]:
    """
    Tail soundness under refinement and the coefficient bound

    Returns:
        tuple: (|eval at N1 - eval at N|_1 <= tail(N1) for N1 < N,
                |c_n|_1 <= α_n·p(x) for every n)
    """
    sound = True
    bounded = True
    rng = make_rng(seed, STREAM_EMBEDDING, 2)
    for k in k_values:
        valid = [n for n in range(1, system.stage) if weights.tail_valid(n - 1, k)]
        for _ in range(samples):
            x = random_sparse_vector(rng, matrix.window)
            image = embed(x, system, weights, domain)
            if any(ratio > 1 for ratio in coefficient_ratios(image)):
                bounded = False
            if not valid:
                continue
            z = random_point(rng, k)
            coarse_stage = valid[random_int(rng, 0, len(valid) - 1)]
            fine, _ = eval_at(image, z, k)
            coarse, tail = eval_at(truncate(image, coarse_stage), z, k)
            if (fine - coarse).abs1() > tail:
                sound = False
    return sound, bounded


def run_suite(cfg: RunConfig) -> CertificateReport:
    """
    Build the system described by cfg and certify it

    Raises:
        HoloEmbedError: Any module error, with the config path of its section
    """
    watch = _Stopwatch()
    verification = cfg.verification
    k_values = [to_fraction(k) for k in verification.k_list]
    logger.info('suite started: stage %d, family %s', cfg.stage, cfg.family.kind.value)

    with config_section('space'):
        matrix = cfg.space.to_matrix()
    continuous = check_continuous_norm(matrix)
    with config_section('weights'):
        weights = cfg.weights.to_weights(cfg.stage)
        if weights.window < cfg.stage:
            raise StageMismatch(f'weights cover {weights.window} indices, the run needs {cfg.stage}')
    with config_section('domain'):
        domain = domain_from_wire(cfg.domain)
        for k in k_values:
            check_radius(domain, k)
    with config_section('verification'):
        require_certified(weights, cfg.stage, k_values)
    table_stages = verification.table_stages or [cfg.stage]
    with config_section('verification.table_stages'):
        rows = continuity_table(weights, k_values, table_stages)
    watch.lap('setup')

    with config_section('family'):
        family, system = build_system(cfg.family.kind, cfg.family.seed, cfg.stage, cfg.family.bound, matrix)
    watch.lap('construction')

    lemma = verify_lemma_conditions(system, family, matrix, verification.samples, verification.seed)
    norm_from_functionals = check_norm_from_functionals(system, matrix, verification.trials, verification.seed)
    watch.lap('lemma')

    continuity = []
    for k in k_values:
        check = verify_continuity(system, weights, matrix, k, verification.samples, verification.seed, domain)
        continuity.append(
            ContinuityResult(
                k=format_rational(k),
                C_k=format_rational(continuity_constant(weights, k, cfg.stage)),
                holds=check.holds,
                max_ratio=format_rational(check.max_ratio),
                max_ratio_decimal=format_decimal(check.max_ratio, settings.DECIMAL_DIGITS),
                witness=check.witness,
            )
        )
    injective, recovered = check_reconstruction(system, weights, verification.reconstructions, verification.seed)
    sound, bounded = check_tails(system, weights, matrix, k_values, domain, verification.samples, verification.seed)
    positive_k = next((k for k in k_values if k > 0), Fraction(1))
    theorem = TheoremReport(
        continuity=continuity,
        injectivity=injective,
        monomial_roundtrip=check_monomials(system, weights),
        density_reconstruction=recovered,
        polynomial_roundtrip=check_polynomials(system, weights, verification.polynomials, verification.seed),
        tail_soundness=sound,
        coefficient_bound=bounded,
        evaluation_norm=check_norm_from_embedding(system, weights, positive_k, verification.trials, verification.seed),
        continuity_table=[ContinuityRowSchema.from_row(row) for row in rows],
    )
    watch.lap('theorem')

    environment = EnvironmentInfo(
        generator=GENERATOR_NAME,
        seeds={'family': cfg.family.seed, 'verification': verification.seed},
        versions={settings.APP_NAME: holoembed.__version__, 'numpy': np.__version__},
        timings=watch.timings if settings.REPORT_TIMINGS else None,
    )
    report = CertificateReport(
        stage=cfg.stage,
        passed=False,
        space=SpaceChecks(
            continuous_norm=continuous.holds,
            continuous_norm_witness=continuous.witness,
            norm_from_functionals=norm_from_functionals,
        ),
        lemma=lemma,
        theorem=theorem,
        environment=environment,
    )
    report.passed = all(report.certificates().values())
    logger.info('suite finished: %s', 'all certificates hold' if report.passed else 'some certificate failed')
    return report

