"""
Embedding Operator

T(x)(z) = Σ_n α_n·e'_n(x)·z^n, truncated at the stage of the biorthogonal
system, with certified bounds for everything that was cut off.

Certification works in the |.|_1 calculus: |c_n|_1 <= α_n·p(x) because the
normalized functionals satisfy |pair(x, e'_n)|_1 <= p(x), and |z^n|_1 <= k^n
whenever |z|_1 <= k. Hence the omitted part of the series is bounded by
p(x)·tail_majorant(N-1, k) and the whole value by C_k·p(x).
"""

import logging
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from holoembed.biortho.models import BiorthogonalSystem
from holoembed.contrib.exceptions import (
    CertificationUnavailable,
    InvalidParameter,
    OutsideDomain,
    StageMismatch,
)
from holoembed.contrib.random import (
    STREAM_CONTINUITY,
    STREAM_EMBEDDING,
    make_rng,
    random_int,
    random_unit_fraction,
)
from holoembed.contrib.rationals import ZERO, ComplexRational, RationalLike, parse_rational
from holoembed.embedding.models import (
    PLANE,
    ContinuityCheck,
    ContinuityRow,
    Domain,
    DomainKind,
    EmbeddedImage,
    Evaluation,
    WeightFamily,
    WeightSequence,
)
from holoembed.space.models import KotheMatrix, SparseVector
from holoembed.space.operations import norm, pair
from holoembed.space.sampling import random_span_element, random_sparse_vector

logger = logging.getLogger(__name__)


def make_weights(
    family: WeightFamily | str,
    params: Optional[Mapping[str, RationalLike]] = None,
    window: int = 1,
    values: Optional[Sequence[RationalLike]] = None,
) -> WeightSequence:
    """
    Build a weight sequence on [0, window)

    Args:
        family: inverse_factorial (α_n = 1/n!), gaussian (α_n = q^{n^2}) or custom
        params: gaussian needs q with 0 < q < 1; custom needs decay_ratio r > 0
        window: Number of materialized weights
        values: Explicit weights, custom only

    Raises:
        InvalidParameter: Parameters out of range
        CertificationUnavailable: Custom weights without a declared decay ratio

    Example:
        make_weights('gaussian', {'q': '1/2'}, 3).values
        # (Fraction(1, 1), Fraction(1, 2), Fraction(1, 16))
    """
    try:
        family = WeightFamily(family)
    except ValueError:
        raise InvalidParameter(f'unknown weight family {family!r}') from None
    if window < 1:
        raise InvalidParameter(f'window must be >= 1, got {window}')
    try:
        parsed = {key: parse_rational(value) for key, value in (params or {}).items()}
    except ValueError as exc:
        raise InvalidParameter(f'params: {exc}') from None
    if values is not None and family is not WeightFamily.CUSTOM:
        raise InvalidParameter(f'explicit values are only accepted for custom weights, not {family.value}')

    if family is WeightFamily.INVERSE_FACTORIAL:
        if parsed:
            raise InvalidParameter(f'inverse_factorial takes no parameters, got {sorted(parsed)}')
        table = tuple(Fraction(1, factorial(n)) for n in range(window))
    elif family is WeightFamily.GAUSSIAN:
        q = parsed.get('q')
        if q is None or not 0 < q < 1 or set(parsed) != {'q'}:
            raise InvalidParameter(f'gaussian weights need exactly one parameter q with 0 < q < 1, got {parsed}')
        table = tuple(q ** (n * n) for n in range(window))
    else:
        table = _custom_values(parsed, window, values)

    logger.debug('built %s weights on window %d', family.value, window)
    return WeightSequence(family=family, window=window, values=table, params=parsed)


def _custom_values(
    params: Mapping[str, Fraction], window: int, values: Optional[Sequence[RationalLike]]
) -> tuple[Fraction, ...]:
    ratio = params.get('decay_ratio')
    if ratio is None:
        raise CertificationUnavailable('custom weights need a declared "decay_ratio" to certify their tail')
    if ratio <= 0:
        raise InvalidParameter(f'decay_ratio must be positive, got {ratio}')
    if values is None or len(values) != window:
        raise InvalidParameter(f'custom weights need exactly {window} values')
    try:
        table = tuple(parse_rational(v) for v in values)
    except ValueError as exc:
        raise InvalidParameter(f'values: {exc}') from None
    for n, value in enumerate(table):
        if value <= 0:
            raise InvalidParameter(f'α_{n} = {value} is not positive')
        if n and value > ratio * table[n - 1]:
            raise InvalidParameter(f'α_{n} / α_{n - 1} exceeds the declared decay_ratio {ratio}')
    return table


def _check_stage(system: BiorthogonalSystem, weights: WeightSequence) -> None:
    if weights.window < system.stage:
        raise StageMismatch(f'weights cover {weights.window} indices but the system has stage {system.stage}')


def embed(
    x: SparseVector,
    system: BiorthogonalSystem,
    weights: WeightSequence,
    domain: Domain = PLANE,
) -> EmbeddedImage:
    """
    Coefficients c_n = α_n·pair(x, e'_n) for n < stage

    Raises:
        StageMismatch: If the weights do not cover the stage
        WindowExceeded: If x has support outside the window of the space
    """
    _check_stage(system, weights)
    p = norm(system.space, x)
    coefficients = tuple(weights.values[n] * pair(x, u) for n, u in enumerate(system.e_functionals))
    return EmbeddedImage(
        coefficients=coefficients,
        stage=system.stage,
        p_norm=p,
        weights=weights,
        domain=domain,
    )


def horner(coefficients: Sequence[ComplexRational], z: ComplexRational) -> ComplexRational:
    """Σ c_n z^n by Horner's recurrence"""
    value = ZERO
    for c in reversed(coefficients):
        value = value * z + c
    return value


def check_radius(domain: Domain, k: Fraction) -> None:
    """Raise OutsideDomain unless the compact {|z| <= k} lies in the domain"""
    if k < 0:
        raise InvalidParameter(f'radius k must be non-negative, got {k}')
    if domain.kind is DomainKind.DISC and k >= domain.radius:
        raise OutsideDomain(f'k = {k} does not stay inside the disc of radius {domain.radius}')


def eval_at(image: EmbeddedImage, z: ComplexRational, k: RationalLike) -> Evaluation:
    """
    Certified value of T(x)(z)

    Returns:
        Evaluation: (Σ_{n<N} c_n z^n exactly, p(x)·tail_majorant(N-1, k))

    Raises:
        OutsideDomain: If |z|_1 > k or, on a disc of radius R, k >= R
        CertificationUnavailable: If the tail majorant is not valid at (N-1, k)
    """
    k = parse_rational(k)
    z = ComplexRational.of(z)
    check_radius(image.domain, k)
    if z.abs1() > k:
        raise OutsideDomain(f'|z|_1 = {z.abs1()} exceeds k = {k}')
    tail = image.p_norm * image.weights.tail_majorant(image.stage - 1, k)
    return Evaluation(horner(image.coefficients, z), tail)


def partial_sum(weights: WeightSequence, k: RationalLike, stage: int) -> Fraction:
    """Σ_{n<stage} α_n k^n"""
    k = parse_rational(k)
    return sum((weights.alpha(n) * k**n for n in range(stage)), Fraction(0))


def continuity_row(weights: WeightSequence, k: RationalLike, stage: int) -> ContinuityRow:
    k = parse_rational(k)
    if stage < 1:
        raise InvalidParameter(f'stage must be >= 1, got {stage}')
    head = partial_sum(weights, k, stage)
    tail = weights.tail_majorant(stage - 1, k)
    return ContinuityRow(k=k, stage=stage, partial_sum=head, tail_bound=tail, constant=head + tail)


def continuity_constant(weights: WeightSequence, k: RationalLike, stage: int) -> Fraction:
    """
    C_k = Σ_{n<N} α_n k^n + tail_majorant(N-1, k), an exact upper bound of Σ α_n k^n

    Raises:
        CertificationUnavailable: If the tail majorant is not valid at (N-1, k)
    """
    return continuity_row(weights, k, stage).constant


def continuity_table(
    weights: WeightSequence, k_values: Iterable[RationalLike], stages: Iterable[int]
) -> list[ContinuityRow]:
    stages = list(stages)
    return [continuity_row(weights, k, stage) for k in k_values for stage in stages]


def random_point(rng: np.random.Generator, k: Fraction, bound: int = 16) -> ComplexRational:
    """Point z with |z|_1 <= k"""
    t = random_unit_fraction(rng, bound)
    u = random_unit_fraction(rng, bound)
    re = k * t * u
    im = k * t * (1 - u)
    if random_int(rng, 0, 1):
        re = -re
    if random_int(rng, 0, 1):
        im = -im
    return ComplexRational(re, im)


def verify_continuity(
    system: BiorthogonalSystem,
    weights: WeightSequence,
    matrix: KotheMatrix,
    k: RationalLike,
    samples: int,
    seed: int,
    domain: Domain = PLANE,
) -> ContinuityCheck:
    """
    |value|_1 + tail <= C_k·p(x) for seeded (x, z) with |z|_1 <= k

    Returns:
        ContinuityCheck: holds, largest ratio (|value|_1 + tail) / (C_k·p(x)),
        index of the first violating sample
    """
    k = parse_rational(k)
    constant = continuity_constant(weights, k, system.stage)
    rng = make_rng(seed, STREAM_CONTINUITY)
    max_ratio = Fraction(0)
    witness = None
    for s in range(samples):
        x = random_sparse_vector(rng, matrix.window)
        z = random_point(rng, k)
        value, tail = eval_at(embed(x, system, weights, domain), z, k)
        lhs = value.abs1() + tail
        rhs = constant * norm(matrix, x)
        if lhs > rhs and witness is None:
            witness = s
        if rhs:
            max_ratio = max(max_ratio, lhs / rhs)
    logger.info('continuity at k=%s: max ratio %s', k, float(max_ratio))
    return ContinuityCheck(holds=witness is None, max_ratio=max_ratio, witness=witness)


def polynomial_preimage(
    coefficients: Sequence[RationalLike | ComplexRational],
    system: BiorthogonalSystem,
    weights: WeightSequence,
) -> SparseVector:
    """
    x_P = Σ_{n<=s} a_n·α_n^{-1}·e_n, so that T(x_P) = P

    Raises:
        StageMismatch: If the degree s reaches the stage
    """
    _check_stage(system, weights)
    if len(coefficients) > system.stage:
        raise StageMismatch(f'degree {len(coefficients) - 1} needs stage > {len(coefficients) - 1}, have {system.stage}')
    return SparseVector.linear_combination(
        (ComplexRational.of(a) / weights.values[n], system.e_vectors[n]) for n, a in enumerate(coefficients)
    )


def reconstruct(
    image: EmbeddedImage,
    system: BiorthogonalSystem,
    weights: WeightSequence,
    upto: Optional[int] = None,
) -> SparseVector:
    """
    x_N = Σ_{n<N} c_n·α_n^{-1}·e_n, the preimage of the truncated polynomial

    Recovers x exactly whenever x ∈ span{e_0..e_{M-1}} and N >= M.

    Raises:
        StageMismatch: If N exceeds the stage of the image or of the system, or the
            weights are shorter than the system
    """
    _check_stage(system, weights)
    upto = image.stage if upto is None else upto
    if not 0 <= upto <= image.stage or upto > system.stage:
        raise StageMismatch(f'cannot reconstruct {upto} terms from an image of stage {image.stage}')
    return SparseVector.linear_combination(
        (image.coefficients[n] / weights.values[n], system.e_vectors[n]) for n in range(upto)
    )


def truncate(image: EmbeddedImage, stage: int) -> EmbeddedImage:
    """The same image cut down to its first `stage` coefficients"""
    if not 1 <= stage <= image.stage:
        raise StageMismatch(f'cannot truncate an image of stage {image.stage} to {stage}')
    return EmbeddedImage(
        coefficients=image.coefficients[:stage],
        stage=stage,
        p_norm=image.p_norm,
        weights=image.weights,
        domain=image.domain,
    )


def coefficient_ratios(image: EmbeddedImage) -> list[Fraction]:
    """|c_n|_1 / (α_n·p(x)); every entry is at most 1"""
    if not image.p_norm:
        return [Fraction(0)] * image.stage
    return [c.abs1() / (image.weights.values[n] * image.p_norm) for n, c in enumerate(image.coefficients)]


def check_norm_from_embedding(
    system: BiorthogonalSystem,
    weights: WeightSequence,
    k: RationalLike,
    trials: int,
    seed: int,
) -> bool:
    """
    Nonzero x in the span never maps to a polynomial vanishing on [0, k]

    The truncated T(x) has degree < N, so it cannot vanish at the N distinct
    points k·i/N, i < N, unless all its coefficients vanish.
    """
    k = parse_rational(k)
    if k <= 0:
        raise InvalidParameter(f'k must be positive, got {k}')
    points = [ComplexRational(k * i / system.stage) for i in range(system.stage)]
    rng = make_rng(seed, STREAM_EMBEDDING)
    for trial in range(trials):
        _, x = random_span_element(rng, system.e_vectors)
        if x.is_zero():
            continue
        image = embed(x, system, weights)
        if not any(horner(image.coefficients, z) for z in points):
            logger.warning('image of sample %d vanishes on every sample point', trial)
            return False
    return True


def require_certified(weights: WeightSequence, stage: int, k_values: Iterable[RationalLike]) -> None:
    """Raise CertificationUnavailable naming the first k without a valid tail at stage-1"""
    for index, k in enumerate(k_values):
        k = parse_rational(k)
        if not weights.tail_valid(stage - 1, k):
            raise CertificationUnavailable(
                f'k = {k} has no certified tail at stage {stage}', path=f'k_list[{index}]'
            )
