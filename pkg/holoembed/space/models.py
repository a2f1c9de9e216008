"""
Space Models

Immutable domain objects for concrete Fréchet sequence spaces:

- KotheMatrix: the weights a(j,n) of a Köthe echelon space of order 1,
  materialized on grades 0..J-1 and coordinates 0..N-1. Grade 0 is the
  continuous norm p.
- SparseVector / SparseFunctional: finite-support sequences with exact complex
  coefficients. They share the same storage but are distinct types, so a
  vector is never paired with a vector.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, NamedTuple, Optional, Union

from holoembed.contrib.rationals import ONE, ZERO, ComplexRational, RationalLike

Scalar = Union[ComplexRational, Fraction, int]


class KotheFamily(str, Enum):
    RAPID_DECREASE = 'rapid_decrease'
    DISC_TYPE = 'disc_type'
    CUSTOM = 'custom'


@dataclass(frozen=True)
class KotheMatrix:
    """
    Köthe matrix on a finite window

    Attributes:
        family: Which closed form produced the rows
        params: Family parameters as given (rationals)
        grades: J, number of materialized seminorms
        window: N, number of materialized coordinates
        rows: rows[j][n] = a(j,n)
        strict: Whether every weight was required to be positive
    """

    family: KotheFamily
    grades: int
    window: int
    rows: tuple[tuple[Fraction, ...], ...]
    params: Mapping[str, Fraction] = field(default_factory=dict, hash=False)
    strict: bool = True

    def weight(self, j: int, n: int) -> Fraction:
        return self.rows[j][n]

    @property
    def norm_row(self) -> tuple[Fraction, ...]:
        """Weights of the continuous norm p = p_0"""
        return self.rows[0]


class ContinuousNormCheck(NamedTuple):
    holds: bool
    witness: Optional[int] = None


class _SparseSequence:
    """
    Finite map coordinate -> ComplexRational with no stored zeros

    Construction merges repeated indices and drops zero sums, so every
    operation preserves the no-explicit-zero invariant.
    """

    __slots__ = ('_entries',)

    def __init__(
        self,
        entries: Union[Mapping[int, Union[ComplexRational, RationalLike]], Iterable[tuple[int, Scalar]]] = (),
    ):
        items = entries.items() if isinstance(entries, Mapping) else entries
        data: dict[int, ComplexRational] = {}
        for index, value in items:
            if isinstance(index, bool) or not isinstance(index, int) or index < 0:
                raise ValueError(f'coordinate index must be a non-negative integer, got {index!r}')
            total = data.get(index, ZERO) + ComplexRational.of(value)
            if total:
                data[index] = total
            else:
                data.pop(index, None)
        self._entries = dict(sorted(data.items()))

    @classmethod
    def delta(cls, n: int, value: Scalar = ONE):
        """Unit sequence δ_n scaled by value"""
        return cls({n: value})

    @classmethod
    def linear_combination(cls, terms: Iterable[tuple[Scalar, '_SparseSequence']]):
        """Σ coef·seq computed in one pass"""
        re: dict[int, Fraction] = {}
        im: dict[int, Fraction] = {}
        for coef, seq in terms:
            coef = ComplexRational.of(coef)
            if not coef:
                continue
            for index, value in seq._entries.items():
                product = coef * value
                re[index] = re.get(index, 0) + product.re
                im[index] = im.get(index, 0) + product.im
        return cls((index, ComplexRational(re[index], im[index])) for index in re)

    @property
    def entries(self) -> Mapping[int, ComplexRational]:
        return MappingProxyType(self._entries)

    def items(self):
        return self._entries.items()

    def support(self) -> tuple[int, ...]:
        return tuple(self._entries)

    def max_index(self) -> int:
        """Largest stored index, -1 for the zero sequence"""
        return next(reversed(self._entries), -1)

    def is_zero(self) -> bool:
        return not self._entries

    def __getitem__(self, n: int) -> ComplexRational:
        return self._entries.get(n, ZERO)

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self._entries)

    def __bool__(self) -> bool:
        return bool(self._entries)

    # Vector space operations

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self).linear_combination(((ONE, self), (ONE, other)))

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self).linear_combination(((ONE, self), (-ONE, other)))

    def __neg__(self):
        return type(self)((k, -v) for k, v in self._entries.items())

    def __mul__(self, scalar):
        if not isinstance(scalar, (ComplexRational, Fraction, int)) or isinstance(scalar, bool):
            return NotImplemented
        scalar = ComplexRational.of(scalar)
        if not scalar:
            return type(self)()
        return type(self)((k, v * scalar) for k, v in self._entries.items())

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if not isinstance(scalar, (ComplexRational, Fraction, int)) or isinstance(scalar, bool):
            return NotImplemented
        return self * ComplexRational.of(scalar).inverse()

    def __eq__(self, other) -> bool:
        return type(other) is type(self) and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((type(self).__name__, tuple(self._entries.items())))

    def __repr__(self) -> str:
        body = ', '.join(f'{k}: {v}' for k, v in self._entries.items())
        return f'{type(self).__name__}({{{body}}})'


class SparseVector(_SparseSequence):
    """Element x of the space, finitely supported"""

    __slots__ = ()


class SparseFunctional(_SparseSequence):
    """Continuous functional u acting by pair(x, u) = Σ x_n·u_n"""

    __slots__ = ()
