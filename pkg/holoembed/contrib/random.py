"""
Seeded Randomness

Every random choice in the package is drawn from numpy's PCG64 bit generator,
seeded from a 64-bit integer plus a stream label. Reports name the generator
so that certificates can be replayed anywhere.
"""

from fractions import Fraction
from typing import Sequence

import numpy as np

from holoembed.contrib.rationals import ComplexRational

GENERATOR_NAME = 'numpy.random.PCG64'

# Stream labels keep independent sample loops from sharing draws.
STREAM_FAMILY = 0
STREAM_LEMMA = 1
STREAM_NORM = 2
STREAM_CONTINUITY = 3
STREAM_EMBEDDING = 4
STREAM_POLYNOMIAL = 5


def make_rng(seed: int, *streams: int) -> np.random.Generator:
    """Generator for `seed`, split deterministically by the stream labels"""
    sequence = np.random.SeedSequence(int(seed), spawn_key=tuple(int(s) for s in streams))
    return np.random.Generator(np.random.PCG64(sequence))


def random_int(rng: np.random.Generator, low: int, high: int) -> int:
    """Uniform integer in the closed range [low, high]"""
    return int(rng.integers(low, high, endpoint=True))


def random_rational(rng: np.random.Generator, bound: int, *, nonzero: bool = False) -> Fraction:
    """Rational p/q with |p| <= bound and 1 <= q <= bound"""
    low = 1 if nonzero else 0
    numerator = random_int(rng, low, bound)
    if random_int(rng, 0, 1):
        numerator = -numerator
    return Fraction(numerator, random_int(rng, 1, bound))


def random_complex(rng: np.random.Generator, bound: int, *, nonzero: bool = False) -> ComplexRational:
    """Complex rational with both parts drawn by random_rational"""
    while True:
        value = ComplexRational(random_rational(rng, bound), random_rational(rng, bound))
        if value or not nonzero:
            return value


def random_unit_fraction(rng: np.random.Generator, bound: int) -> Fraction:
    """Rational in the closed interval [0, 1]"""
    denominator = random_int(rng, 1, bound)
    return Fraction(random_int(rng, 0, denominator), denominator)


def random_subset(rng: np.random.Generator, population: int, size: int) -> Sequence[int]:
    """Sorted sample of `size` distinct integers from range(population)"""
    size = min(size, population)
    chosen = rng.choice(population, size=size, replace=False)
    return sorted(int(i) for i in chosen)
