"""
Random Elements

Seeded samplers used by every verification loop.
"""

from typing import Sequence

import numpy as np

from holoembed.contrib.random import random_complex, random_int, random_subset
from holoembed.contrib.rationals import ComplexRational
from holoembed.space.models import SparseVector


def random_sparse_vector(
    rng: np.random.Generator,
    window: int,
    *,
    max_support: int = 4,
    bound: int = 9,
    nonzero: bool = True,
) -> SparseVector:
    """Vector with 1..max_support random coordinates in [0, window)"""
    size = random_int(rng, 1, max(1, min(max_support, window)))
    coordinates = random_subset(rng, window, size)
    return SparseVector({n: random_complex(rng, bound, nonzero=nonzero) for n in coordinates})


def random_coefficients(
    rng: np.random.Generator, count: int, *, bound: int = 9, nonzero: bool = True
) -> list[ComplexRational]:
    """Coefficient list of length count, not all zero when nonzero=True"""
    while True:
        coefficients = [random_complex(rng, bound) for _ in range(count)]
        if any(coefficients) or not nonzero or count == 0:
            return coefficients


def random_span_element(
    rng: np.random.Generator,
    basis: Sequence[SparseVector],
    *,
    bound: int = 9,
    nonzero: bool = True,
) -> tuple[list[ComplexRational], SparseVector]:
    """
    Random combination Σ b_n·basis[n]

    Returns:
        tuple: (b_0..b_{M-1}, vector)
    """
    coefficients = random_coefficients(rng, len(basis), bound=bound, nonzero=nonzero)
    return coefficients, SparseVector.linear_combination(zip(coefficients, basis))
