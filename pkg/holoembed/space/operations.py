"""
Space Operations

Construction of Köthe matrices and the exact quantities attached to them:
seminorms, the duality bracket, dual bounds of functionals and the continuous
norm check. Every result is an exact rational.

Seminorms use the ℓ1-type sum p_j(x) = Σ a(j,n)·|x_n|_1 with the majorant
modulus |c|_1 = |Re c| + |Im c|. Since |ab|_1 <= |a|_1·|b|_1, the dual bound
m_1(u) = max |u_n|_1 / a(0,n) satisfies |pair(x,u)|_1 <= m_1(u)·p_0(x) for
every x, and no smaller constant does.
"""

import logging
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from holoembed.contrib.exceptions import (
    InvalidParameter,
    LadderViolation,
    NonPositiveWeight,
    WindowExceeded,
    ZeroFunctional,
)
from holoembed.contrib.rationals import ComplexRational, RationalLike, parse_rational
from holoembed.space.models import (
    ContinuousNormCheck,
    KotheFamily,
    KotheMatrix,
    SparseFunctional,
    SparseVector,
    _SparseSequence,
)

logger = logging.getLogger(__name__)


def make_kothe(
    family: KotheFamily | str,
    params: Optional[Mapping[str, RationalLike]] = None,
    grades: Optional[int] = None,
    window: Optional[int] = None,
    rows: Optional[Sequence[Sequence[RationalLike]]] = None,
    *,
    strict: bool = True,
) -> KotheMatrix:
    """
    Build and validate a Köthe matrix

    Args:
        family: rapid_decrease, disc_type or custom
        params: disc_type accepts radius R (default 1)
        grades: J >= 1 (custom: defaults to the number of rows)
        window: N >= 1 (custom: defaults to the row length)
        rows: Explicit weights, custom only
        strict: Require every weight to be positive. With strict=False weights
            may vanish (grades beyond the materialized ones are assumed to
            separate points); such matrices describe spaces whose grade 0 is
            not a norm.

    Returns:
        KotheMatrix: rows[j][n] = a(j,n)

    Raises:
        InvalidParameter: Bad sizes or parameters
        NonPositiveWeight: Some a(j,n) <= 0 (strict) or < 0
        LadderViolation: Some a(j,n) > a(j+1,n)

    Example:
        make_kothe('rapid_decrease', grades=2, window=3).rows
        # ((1, 2, 3), (1, 4, 9))
    """
    try:
        family = KotheFamily(family)
    except ValueError:
        raise InvalidParameter(f'unknown Köthe family {family!r}') from None
    try:
        parsed = {key: parse_rational(value) for key, value in (params or {}).items()}
    except ValueError as exc:
        raise InvalidParameter(f'params: {exc}') from None

    if family is KotheFamily.CUSTOM:
        table = _custom_rows(rows, grades, window)
        grades, window = len(table), len(table[0])
    else:
        if rows is not None:
            raise InvalidParameter(f'explicit rows are only accepted for the custom family, not {family.value}')
        _check_sizes(grades, window)
        table = _closed_form_rows(family, parsed, grades, window)

    matrix = KotheMatrix(
        family=family,
        grades=grades,
        window=window,
        rows=table,
        params=parsed,
        strict=strict,
    )
    _validate(matrix)
    logger.debug('built %s Köthe matrix with J=%d, N=%d', family.value, grades, window)
    return matrix


def _check_sizes(grades: Optional[int], window: Optional[int]) -> None:
    if grades is None or grades < 1:
        raise InvalidParameter(f'grades must be >= 1, got {grades}')
    if window is None or window < 1:
        raise InvalidParameter(f'window must be >= 1, got {window}')


def _closed_form_rows(
    family: KotheFamily, params: Mapping[str, Fraction], grades: int, window: int
) -> tuple[tuple[Fraction, ...], ...]:
    if family is KotheFamily.RAPID_DECREASE:
        if params:
            raise InvalidParameter(f'rapid_decrease takes no parameters, got {sorted(params)}')
        return tuple(
            tuple(Fraction((n + 1) ** (j + 1)) for n in range(window)) for j in range(grades)
        )

    unknown = set(params) - {'radius'}
    if unknown:
        raise InvalidParameter(f'disc_type accepts only "radius", got {sorted(unknown)}')
    radius = params.get('radius', Fraction(1))
    if radius <= 0:
        raise InvalidParameter(f'disc_type radius must be positive, got {radius}')
    rows = []
    for j in range(grades):
        ratio = radius * Fraction(j + 1, j + 2)
        rows.append(tuple(ratio**n for n in range(window)))
    return tuple(rows)


def _custom_rows(
    rows: Optional[Sequence[Sequence[RationalLike]]], grades: Optional[int], window: Optional[int]
) -> tuple[tuple[Fraction, ...], ...]:
    if not rows or not rows[0]:
        raise InvalidParameter('the custom family needs non-empty explicit rows')
    try:
        table = tuple(tuple(parse_rational(value) for value in row) for row in rows)
    except ValueError as exc:
        raise InvalidParameter(f'rows: {exc}') from None
    if any(len(row) != len(table[0]) for row in table):
        raise InvalidParameter('custom rows must all have the same length')
    if grades is not None and grades != len(table):
        raise InvalidParameter(f'grades={grades} but {len(table)} rows were given')
    if window is not None and window != len(table[0]):
        raise InvalidParameter(f'window={window} but rows have length {len(table[0])}')
    return table


def _validate(matrix: KotheMatrix) -> None:
    for j, row in enumerate(matrix.rows):
        for n, weight in enumerate(row):
            if weight < 0 or (matrix.strict and weight == 0):
                raise NonPositiveWeight(f'a({j},{n}) = {weight} is not positive')
    for j in range(matrix.grades - 1):
        for n in range(matrix.window):
            if matrix.rows[j][n] > matrix.rows[j + 1][n]:
                raise LadderViolation(
                    f'a({j},{n}) = {matrix.rows[j][n]} exceeds a({j + 1},{n}) = {matrix.rows[j + 1][n]}'
                )


def check_window(matrix: KotheMatrix, sequence: _SparseSequence) -> None:
    """Raise WindowExceeded unless support(sequence) ⊆ [0, window)"""
    if sequence.max_index() >= matrix.window:
        raise WindowExceeded(
            f'coordinate {sequence.max_index()} lies outside the window [0, {matrix.window})'
        )


def seminorm(matrix: KotheMatrix, j: int, x: SparseVector) -> Fraction:
    """
    p_j(x) = Σ_n a(j,n)·|x_n|_1, exact

    Raises:
        InvalidParameter: If j is not a materialized grade
        WindowExceeded: If x has support outside the window
    """
    if not 0 <= j < matrix.grades:
        raise InvalidParameter(f'grade {j} outside [0, {matrix.grades})')
    check_window(matrix, x)
    row = matrix.rows[j]
    return sum((row[n] * value.abs1() for n, value in x.items()), Fraction(0))


def norm(matrix: KotheMatrix, x: SparseVector) -> Fraction:
    """The continuous norm p = p_0"""
    return seminorm(matrix, 0, x)


def seminorm_ladder(matrix: KotheMatrix, x: SparseVector) -> tuple[Fraction, ...]:
    """(p_0(x), ..., p_{J-1}(x))"""
    return tuple(seminorm(matrix, j, x) for j in range(matrix.grades))


def pair(x: SparseVector, u: SparseFunctional) -> ComplexRational:
    """
    Duality bracket Σ_n x_n·u_n over the common support

    Example:
        pair(SparseVector.delta(0) + SparseVector.delta(1), SparseFunctional.delta(1, 2))
        # ComplexRational(2, 0)
    """
    small, large = (x, u) if len(x) <= len(u) else (u, x)
    re = Fraction(0)
    im = Fraction(0)
    for n, a in small.items():
        b = large[n]
        if b:
            re += a.re * b.re - a.im * b.im
            im += a.re * b.im + a.im * b.re
    return ComplexRational(re, im)


def dual_bound(matrix: KotheMatrix, u: SparseFunctional) -> Fraction:
    """
    m_1(u) = max_n |u_n|_1 / a(0,n)

    The smallest constant with |pair(x,u)|_1 <= m_1(u)·p_0(x) for every x.

    Raises:
        ZeroFunctional: If u = 0
        WindowExceeded: If u has support outside the window
        NonPositiveWeight: If u charges a coordinate where p_0 vanishes
    """
    if u.is_zero():
        raise ZeroFunctional('the zero functional has no positive dual bound')
    check_window(matrix, u)
    bound = Fraction(0)
    for n, value in u.items():
        weight = matrix.rows[0][n]
        if weight <= 0:
            raise NonPositiveWeight(f'u charges coordinate {n} where a(0,{n}) = {weight}; p_0 does not control u')
        bound = max(bound, value.abs1() / weight)
    return bound


def dual_bound_argmax(matrix: KotheMatrix, u: SparseFunctional) -> int:
    """Smallest coordinate n at which the dual bound of u is attained"""
    bound = dual_bound(matrix, u)
    return next(n for n, value in u.items() if value.abs1() / matrix.rows[0][n] == bound)


def check_continuous_norm(matrix: KotheMatrix) -> ContinuousNormCheck:
    """
    Whether grade 0 is a norm on the window

    Returns:
        ContinuousNormCheck: holds, plus the first index n with a(0,n) <= 0
    """
    for n, weight in enumerate(matrix.norm_row):
        if weight <= 0:
            return ContinuousNormCheck(False, n)
    return ContinuousNormCheck(True, None)
