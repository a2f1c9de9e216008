"""
Biorthogonal System Construction

Pipeline: generate_dense_family -> biorthogonalize -> normalize, then the
finite-stage checks verify_lemma_conditions and check_norm_from_functionals.

All arithmetic is exact; pairings are compared with 0 and 1 without tolerance.
"""

import logging
from fractions import Fraction
from typing import Optional

from holoembed.biortho.echelon import prefix_span_certificate, span_equal
from holoembed.biortho.models import BiorthogonalSystem, DenseFamilyPair, FamilyKind, RawBiorthogonal
from holoembed.biortho.schemas import LemmaConditions, LemmaReport, Witness
from holoembed.contrib.exceptions import ExhaustedWithoutPivot, InvalidParameter, StageMismatch
from holoembed.contrib.random import STREAM_FAMILY, STREAM_LEMMA, STREAM_NORM, make_rng, random_complex, random_rational
from holoembed.contrib.rationals import ONE, ComplexRational, format_rational
from holoembed.space.models import KotheMatrix, SparseFunctional, SparseVector
from holoembed.space.operations import check_window, dual_bound, dual_bound_argmax, norm, pair
from holoembed.space.sampling import random_sparse_vector, random_span_element

logger = logging.getLogger(__name__)


def generate_dense_family(kind: FamilyKind | str, seed: int, stage: int, bound: int) -> DenseFamilyPair:
    """
    Seeded families y_0..y_{N-1} and v_0..v_{N-1}

    Kinds:
        canonical: y_n = v_n = δ_n
        triangular: y_n = δ_n + Σ_{k<n} c_k δ_k, v_n = δ_n + Σ_{k<n} d_k δ_k with
            rational c_k, d_k whose numerators and denominators are bounded by B
        random: dense complex coefficients on [0, N), no general-position guarantee

    Raises:
        InvalidParameter: If N < 1, B < 1 or the kind is unknown
    """
    try:
        kind = FamilyKind(kind)
    except ValueError:
        raise InvalidParameter(f'unknown family kind {kind!r}') from None
    if stage < 1:
        raise InvalidParameter(f'stage must be >= 1, got {stage}')
    if bound < 1:
        raise InvalidParameter(f'coefficient bound must be >= 1, got {bound}')

    if kind is FamilyKind.CANONICAL:
        vectors = tuple(SparseVector.delta(n) for n in range(stage))
        functionals = tuple(SparseFunctional.delta(n) for n in range(stage))
    else:
        rng = make_rng(seed, STREAM_FAMILY)
        vectors, functionals = [], []
        for n in range(stage):
            if kind is FamilyKind.TRIANGULAR:
                y = {k: random_rational(rng, bound) for k in range(n)}
                v = {k: random_rational(rng, bound) for k in range(n)}
                y[n] = v[n] = ONE
            else:
                y = {k: random_complex(rng, bound) for k in range(stage)}
                v = {k: random_complex(rng, bound) for k in range(stage)}
            vectors.append(SparseVector(y))
            functionals.append(SparseFunctional(v))
        vectors, functionals = tuple(vectors), tuple(functionals)

    logger.debug('generated %s family, seed=%d, N=%d, B=%d', kind.value, seed, stage, bound)
    return DenseFamilyPair(vectors=vectors, functionals=functionals, seed=seed, kind=kind, bound=bound)


def _vector_residual(y: SparseVector, xs: list[SparseVector], xps: list[SparseFunctional]) -> SparseVector:
    terms = [(ONE, y)]
    terms.extend((-pair(y, xp), x) for x, xp in zip(xs, xps))
    return SparseVector.linear_combination(terms)


def _functional_residual(v: SparseFunctional, xs: list[SparseVector], xps: list[SparseFunctional]) -> SparseFunctional:
    terms = [(ONE, v)]
    terms.extend((-pair(x, v), xp) for x, xp in zip(xs, xps))
    return SparseFunctional.linear_combination(terms)


def biorthogonalize(family: DenseFamilyPair, stage: int) -> RawBiorthogonal:
    """
    Two-sided elimination with lexicographic pivot search

    At step n the remaining pairs (i, j) are scanned in lexicographic order. The
    residuals ŷ = y_i - Σ_{k<n} pair(y_i, x'_k)·x_k and
    v̂ = v_j - Σ_{k<n} pair(x_k, v_j)·x'_k are formed and the first pair with
    pair(ŷ, v̂) != 0 is accepted: x_n = ŷ, x'_n = v̂ / pair(ŷ, v̂).

    Raises:
        StageMismatch: If either family is shorter than the stage
        ExhaustedWithoutPivot: If some step finds no pair with nonzero pairing
    """
    if stage > len(family.vectors) or stage > len(family.functionals):
        raise StageMismatch(
            f'stage {stage} exceeds the family lengths ({len(family.vectors)}, {len(family.functionals)})'
        )
    xs: list[SparseVector] = []
    xps: list[SparseFunctional] = []
    remaining_y = list(range(len(family.vectors)))
    remaining_v = list(range(len(family.functionals)))
    consumed_y: list[int] = []
    consumed_v: list[int] = []

    for n in range(stage):
        functional_residuals: dict[int, SparseFunctional] = {}
        pivot = None
        for i in remaining_y:
            y_hat = _vector_residual(family.vectors[i], xs, xps)
            if y_hat.is_zero():
                continue
            for j in remaining_v:
                if j not in functional_residuals:
                    functional_residuals[j] = _functional_residual(family.functionals[j], xs, xps)
                v_hat = functional_residuals[j]
                value = pair(y_hat, v_hat)
                if value:
                    pivot = (i, j, y_hat, v_hat, value)
                    break
            if pivot:
                break
        if pivot is None:
            raise ExhaustedWithoutPivot(
                f'no remaining pair has a nonzero residual pairing at step {n} of {stage}'
            )
        i, j, y_hat, v_hat, value = pivot
        logger.debug('step %d: pivot (y_%d, v_%d), pairing %s', n, i, j, value)
        xs.append(y_hat)
        xps.append(v_hat / value)
        remaining_y.remove(i)
        remaining_v.remove(j)
        consumed_y.append(i)
        consumed_v.append(j)

    return RawBiorthogonal(
        x_vectors=tuple(xs),
        x_functionals=tuple(xps),
        consumed_y=tuple(consumed_y),
        consumed_v=tuple(consumed_v),
    )


def normalize(raw: RawBiorthogonal, matrix: KotheMatrix) -> BiorthogonalSystem:
    """
    e'_n = m(n)^{-1}·x'_n and e_n = m(n)·x_n with m(n) = dual_bound(x'_n)

    Raises:
        ZeroFunctional: If some x'_n vanishes
        WindowExceeded: If some x_n or x'_n leaves the window
    """
    e_vectors, e_functionals, constants = [], [], []
    for x, xp in zip(raw.x_vectors, raw.x_functionals):
        check_window(matrix, x)
        m = dual_bound(matrix, xp)
        constants.append(m)
        e_vectors.append(x * m)
        e_functionals.append(xp / m)
    return BiorthogonalSystem(
        e_vectors=tuple(e_vectors),
        e_functionals=tuple(e_functionals),
        m_constants=tuple(constants),
        stage=len(constants),
        space=matrix,
        consumed_y=raw.consumed_y,
        consumed_v=raw.consumed_v,
    )


def build_system(
    kind: FamilyKind | str, seed: int, stage: int, bound: int, matrix: KotheMatrix
) -> tuple[DenseFamilyPair, BiorthogonalSystem]:
    """generate_dense_family -> biorthogonalize -> normalize"""
    family = generate_dense_family(kind, seed, stage, bound)
    raw = biorthogonalize(family, stage)
    return family, normalize(raw, matrix)


def functional_sup(system: BiorthogonalSystem, x: SparseVector) -> Fraction:
    """sup_n |pair(x, e'_n)|_1 over the stage"""
    return max((pair(x, u).abs1() for u in system.e_functionals), default=Fraction(0))


def equality_witness(system: BiorthogonalSystem, matrix: KotheMatrix, n: int) -> Optional[int]:
    """
    Coordinate j where |pair(δ_j, e'_n)|_1 = p(δ_j), if any

    Because the dual bound of a normalized e'_n is exactly 1, the coordinate
    attaining that bound realizes equality in condition (ii).
    """
    functional = system.e_functionals[n]
    if functional.is_zero():
        return None
    j = dual_bound_argmax(matrix, functional)
    delta = SparseVector.delta(j)
    if pair(delta, functional).abs1() == norm(matrix, delta):
        return j
    return None


def pairing_table(system: BiorthogonalSystem) -> list[list[ComplexRational]]:
    """[[pair(e_n, e'_m)]_m]_n"""
    return [[pair(e, u) for u in system.e_functionals] for e in system.e_vectors]


def verify_lemma_conditions(
    system: BiorthogonalSystem,
    family: DenseFamilyPair,
    matrix: KotheMatrix,
    samples: int,
    seed: int,
) -> LemmaReport:
    """
    Finite-stage certificate of conditions (i)-(iv)

    (i)   span{e_n} = span{y_n}, at every prefix (consumption order) and in full
    (ii)  |pair(x, e'_n)|_1 <= p(x): dual bound of every e'_n is <= 1, and
          `samples` seeded random x satisfy the inequality for every n
    (iii) span{e'_n} = span{v_n}, at every prefix and in full
    (iv)  pair(e_n, e'_m) = δ_{n,m} for the whole N×N table

    Failures are reported through witnesses, never raised.
    """
    stage = system.stage
    witnesses: list[Witness] = []

    ys = [family.vectors[i] for i in system.consumed_y] or list(family.vectors[:stage])
    prefix_ok, failed_at = prefix_span_certificate(system.e_vectors, ys)
    condition_i = prefix_ok and span_equal(system.e_vectors, family.vectors[:stage])
    if not condition_i:
        witnesses.append(Witness(condition='i', indices=[failed_at or stage], detail='span{e} != span{y}'))

    condition_ii = True
    for n, functional in enumerate(system.e_functionals):
        if functional.is_zero():
            continue
        bound = dual_bound(matrix, functional)
        if bound > 1:
            condition_ii = False
            witnesses.append(
                Witness(condition='ii', indices=[n], detail=f"dual bound of e'_{n} is {format_rational(bound)} > 1")
            )
            break
    rng = make_rng(seed, STREAM_LEMMA)
    for s in range(samples):
        x = random_sparse_vector(rng, matrix.window)
        p = norm(matrix, x)
        violation = next(
            (n for n, u in enumerate(system.e_functionals) if pair(x, u).abs1() > p),
            None,
        )
        if violation is not None:
            condition_ii = False
            value = pair(x, system.e_functionals[violation]).abs1()
            witnesses.append(
                Witness(
                    condition='ii',
                    indices=[s, violation],
                    detail=f"|pair(x, e'_{violation})|_1 = {format_rational(value)} > p(x) = {format_rational(p)}",
                )
            )
            break

    vs = [family.functionals[j] for j in system.consumed_v] or list(family.functionals[:stage])
    prefix_ok, failed_at = prefix_span_certificate(system.e_functionals, vs)
    condition_iii = prefix_ok and span_equal(system.e_functionals, family.functionals[:stage])
    if not condition_iii:
        witnesses.append(Witness(condition='iii', indices=[failed_at or stage], detail="span{e'} != span{v}"))

    condition_iv = True
    for n, e in enumerate(system.e_vectors):
        for m, u in enumerate(system.e_functionals):
            value = pair(e, u)
            if value != (1 if n == m else 0):
                condition_iv = False
                witnesses.append(Witness(condition='iv', indices=[n, m], detail=f"pair(e_{n}, e'_{m}) = {value}"))
                break
        if not condition_iv:
            break

    equality = [equality_witness(system, matrix, n) for n in range(stage)]
    conditions = LemmaConditions(i=condition_i, ii=condition_ii, iii=condition_iii, iv=condition_iv)
    logger.info('lemma conditions at stage %d: %s', stage, conditions.model_dump())
    return LemmaReport(
        stage=stage,
        conditions=conditions,
        witnesses=witnesses,
        m_constants=[format_rational(m) for m in system.m_constants],
        equality_witnesses=equality,
        samples=samples,
        seed=seed,
    )


def check_norm_from_functionals(system: BiorthogonalSystem, matrix: KotheMatrix, trials: int, seed: int) -> bool:
    """
    The functional-sup seminorm is a norm on span{e_0..e_{N-1}}

    For `trials` seeded random nonzero x in the span: 0 < sup_n |pair(x, e'_n)|_1 <= p(x).
    """
    rng = make_rng(seed, STREAM_NORM)
    for trial in range(trials):
        _, x = random_span_element(rng, system.e_vectors)
        if x.is_zero():
            continue
        sup = functional_sup(system, x)
        if not 0 < sup <= norm(matrix, x):
            logger.warning('functional sup %s fails to separate sample %d', sup, trial)
            return False
    return True
