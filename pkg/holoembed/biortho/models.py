"""
Biorthogonal System Models

- DenseFamilyPair: the families (y_n) ⊂ F and (v_n) ⊂ F' to be biorthogonalized
- RawBiorthogonal: (x_n, x'_n) with pair(x_n, x'_m) = δ_{n,m}
- BiorthogonalSystem: the normalized (e_n, e'_n) with e_n = m(n)·x_n and
  e'_n = m(n)^{-1}·x'_n, where m(n) is the exact dual bound of x'_n
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from holoembed.space.models import KotheMatrix, SparseFunctional, SparseVector


class FamilyKind(str, Enum):
    CANONICAL = 'canonical'
    TRIANGULAR = 'triangular'
    RANDOM = 'random'


@dataclass(frozen=True)
class DenseFamilyPair:
    vectors: tuple[SparseVector, ...]
    functionals: tuple[SparseFunctional, ...]
    seed: int
    kind: FamilyKind
    bound: int

    @property
    def stage(self) -> int:
        return min(len(self.vectors), len(self.functionals))


@dataclass(frozen=True)
class RawBiorthogonal:
    x_vectors: tuple[SparseVector, ...]
    x_functionals: tuple[SparseFunctional, ...]
    consumed_y: tuple[int, ...]
    consumed_v: tuple[int, ...]


@dataclass(frozen=True)
class BiorthogonalSystem:
    """
    Normalized biorthogonal system at stage N

    Attributes:
        e_vectors: e_0..e_{N-1}
        e_functionals: e'_0..e'_{N-1}
        m_constants: m(0)..m(N-1)
        stage: N
        space: Köthe matrix whose grade 0 normalized the functionals
        consumed_y: Order in which the y family was consumed
        consumed_v: Order in which the v family was consumed
    """

    e_vectors: tuple[SparseVector, ...]
    e_functionals: tuple[SparseFunctional, ...]
    m_constants: tuple[Fraction, ...]
    stage: int
    space: KotheMatrix
    consumed_y: tuple[int, ...] = ()
    consumed_v: tuple[int, ...] = ()
