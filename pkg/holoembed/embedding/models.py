"""
Embedding Models

- WeightSequence: the positive weights α_n together with a closed-form,
  exactly computable majorant of the tail Σ_{n>N} α_n k^n
- Domain: the plane or an origin-centred disc of rational radius
- EmbeddedImage: truncated coefficients c_n = α_n·pair(x, e'_n) of T(x)
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import factorial
from typing import Mapping, NamedTuple, Optional

from holoembed.contrib.exceptions import CertificationUnavailable, InvalidParameter
from holoembed.contrib.rationals import ComplexRational


class WeightFamily(str, Enum):
    INVERSE_FACTORIAL = 'inverse_factorial'
    GAUSSIAN = 'gaussian'
    CUSTOM = 'custom'


class DomainKind(str, Enum):
    PLANE = 'plane'
    DISC = 'disc'


@dataclass(frozen=True)
class Domain:
    kind: DomainKind = DomainKind.PLANE
    radius: Optional[Fraction] = None

    def __post_init__(self):
        if self.kind is DomainKind.DISC and (self.radius is None or self.radius <= 0):
            raise InvalidParameter(f'a disc domain needs a positive radius, got {self.radius}')
        if self.kind is DomainKind.PLANE and self.radius is not None:
            raise InvalidParameter('the plane takes no radius')


PLANE = Domain()


@dataclass(frozen=True)
class WeightSequence:
    """
    Weights α_0..α_{W-1} with a certified tail majorant

    Tail majorants (N is the last summed index, k >= 0 the radius):
        inverse_factorial: α_{N+1} k^{N+1} / (1 - k/(N+2)),           valid for N+2 > k
        gaussian:          q^{(N+1)^2} k^{N+1} / (1 - q^{2N+3} k),      valid for q^{2N+3} k < 1
        custom:            α̅_{N+1} k^{N+1} / (1 - r k),                valid for r k < 1
    where r is the declared decay ratio α_{n+1} <= r·α_n of a custom family and
    α̅ extends the given values geometrically beyond the window.
    """

    family: WeightFamily
    window: int
    values: tuple[Fraction, ...]
    params: Mapping[str, Fraction] = field(default_factory=dict, hash=False)

    def alpha(self, n: int) -> Fraction:
        if n < self.window:
            return self.values[n]
        if self.family is WeightFamily.INVERSE_FACTORIAL:
            return Fraction(1, factorial(n))
        if self.family is WeightFamily.GAUSSIAN:
            return self.params['q'] ** (n * n)
        # custom: only a majorant is known beyond the window
        return self.values[-1] * self.params['decay_ratio'] ** (n - self.window + 1)

    def tail_ratio(self, last: int, k: Fraction) -> Fraction:
        """Geometric ratio bounding α_{n+1}k^{n+1} / (α_n k^n) for n > last"""
        if self.family is WeightFamily.INVERSE_FACTORIAL:
            return Fraction(k) / (last + 2)
        if self.family is WeightFamily.GAUSSIAN:
            return self.params['q'] ** (2 * last + 3) * k
        return self.params['decay_ratio'] * k

    def tail_valid(self, last: int, k: Fraction) -> bool:
        return k >= 0 and last >= 0 and self.tail_ratio(last, k) < 1

    def tail_majorant(self, last: int, k: Fraction) -> Fraction:
        """
        Exact upper bound for Σ_{n>last} α_n k^n

        Raises:
            CertificationUnavailable: If the validity predicate fails at (last, k)
        """
        k = Fraction(k)
        if not self.tail_valid(last, k):
            raise CertificationUnavailable(
                f'no certified tail for {self.family.value} weights at N={last}, k={k}; raise the stage'
            )
        ratio = self.tail_ratio(last, k)
        return self.alpha(last + 1) * k ** (last + 1) / (1 - ratio)


@dataclass(frozen=True)
class EmbeddedImage:
    """
    T(x) truncated at stage N

    Attributes:
        coefficients: c_0..c_{N-1}
        stage: N
        p_norm: p(x), exact
        weights: Weight sequence used for the coefficients
        domain: Domain G carrying the functions
    """

    coefficients: tuple[ComplexRational, ...]
    stage: int
    p_norm: Fraction
    weights: WeightSequence
    domain: Domain = PLANE


class Evaluation(NamedTuple):
    value: ComplexRational
    tail: Fraction


class ContinuityCheck(NamedTuple):
    holds: bool
    max_ratio: Fraction
    witness: Optional[int] = None


class ContinuityRow(NamedTuple):
    k: Fraction
    stage: int
    partial_sum: Fraction
    tail_bound: Fraction
    constant: Fraction
