"""
Exact Scalars

ComplexRational is the scalar field of every space in the package: a pair of
arbitrary-precision rationals with exact arithmetic. Moduli are measured with
the majorant |c|_1 = |re| + |im|, which is rational and satisfies
|c| <= |c|_1 <= sqrt(2)|c|.

Rationals travel on the wire as reduced "p/q" strings. Decimal renderings are
produced here for reports only and are never parsed back.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from mpmath import mp

_RATIONAL_PATTERN = re.compile(r'^\s*[+-]?\d+(\s*/\s*\d+)?\s*$')

RationalLike = Union[Fraction, int, str]


def parse_rational(value: RationalLike) -> Fraction:
    """
    Parse an integer or a "p/q" string into a Fraction

    Floats and decimal strings are rejected so that every input is exact.

    Raises:
        ValueError: If the value is not an exact rational literal
    """
    if isinstance(value, bool):
        raise ValueError(f'not a rational: {value!r}')
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL_PATTERN.match(value):
        try:
            return Fraction(value.replace(' ', ''))
        except ZeroDivisionError:
            raise ValueError(f'zero denominator in {value!r}') from None
    raise ValueError(f'expected an integer or a "p/q" string, got {value!r}')


def format_rational(value: Fraction) -> str:
    """Canonical wire form: reduced, positive denominator, always "p/q" """
    value = Fraction(value)
    return f'{value.numerator}/{value.denominator}'


def format_decimal(value: Fraction, digits: int = 17) -> str:
    """Render a rational with exactly `digits` significant digits (annotation only)"""
    value = Fraction(value)
    with mp.workdps(digits + 10):
        return mp.nstr(mp.mpf(value.numerator) / value.denominator, digits, strip_zeros=False)


@dataclass(frozen=True, slots=True, eq=False)
class ComplexRational:
    """
    Exact complex number re + i*im with rational parts

    Example:
        z = ComplexRational(Fraction(1, 2), 1)
        z * z == ComplexRational(Fraction(-3, 4), 1)
    """

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, 're', parse_rational(self.re))
        object.__setattr__(self, 'im', parse_rational(self.im))

    @classmethod
    def of(cls, value: Union['ComplexRational', RationalLike]) -> 'ComplexRational':
        if isinstance(value, ComplexRational):
            return value
        return cls(parse_rational(value), Fraction(0))

    # Field operations

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return ComplexRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return ComplexRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return ComplexRational(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, (Fraction, int)) and not isinstance(other, bool):
            return ComplexRational(self.re * other, self.im * other)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return ComplexRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (Fraction, int)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError('division of a complex rational by zero')
            return ComplexRational(self.re / other, self.im / other)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def inverse(self) -> 'ComplexRational':
        norm = self.re * self.re + self.im * self.im
        if norm == 0:
            raise ZeroDivisionError('inverse of zero')
        return ComplexRational(self.re / norm, -self.im / norm)

    # Moduli

    def abs1(self) -> Fraction:
        """Majorant modulus |re| + |im|"""
        return abs(self.re) + abs(self.im)

    def is_real(self) -> bool:
        return self.im == 0

    # Comparison

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f'ComplexRational({self.re}, {self.im})'

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        sign = '+' if self.im >= 0 else '-'
        return f'{self.re}{sign}{abs(self.im)}i'


def _coerce(value):
    if isinstance(value, ComplexRational):
        return value
    if isinstance(value, (Fraction, int)) and not isinstance(value, bool):
        return ComplexRational(Fraction(value), Fraction(0))
    return NotImplemented


ZERO = ComplexRational(0, 0)
ONE = ComplexRational(1, 0)
I = ComplexRational(0, 1)
