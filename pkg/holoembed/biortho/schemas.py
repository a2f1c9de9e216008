"""
Biorthogonal System Pydantic Schemas

FamilySpec selects the dense families, SystemSchema is the document emitted by
`holoembed build` and read back by `holoembed embed`, and LemmaReport carries the
four finite-stage conditions with their witnesses.
"""

from typing import Annotated, Optional

from pydantic import Field, model_validator

from holoembed.biortho.models import BiorthogonalSystem, FamilyKind
from holoembed.configs.settings import settings
from holoembed.contrib.rationals import format_rational
from holoembed.contrib.schemas import BaseSchema, RationalStr, to_fraction
from holoembed.space.schemas import SpaceSpec, SparseSchema

SURROGATE_NOTES = [
    'condition i: density of span{e_n} in F is certified as span equality with the y family at every prefix of the stage',
    'condition ii: equicontinuity is certified in the |.|_1 calculus (dual bound of each e\'_n <= 1) and by sampling',
    'condition iii: weak* density of span{e\'_n} is certified as span equality with the v family at every prefix of the stage',
    'condition iv: the full pairing table is compared with the identity exactly',
]


class FamilySpec(BaseSchema):
    """Dense family selection"""

    kind: Annotated[FamilyKind, Field(default=FamilyKind.TRIANGULAR, description='Family kind')]
    seed: Annotated[
        int,
        Field(default_factory=lambda: settings.DEFAULT_SEED, ge=0, lt=2**64, description='64-bit generator seed'),
    ]
    bound: Annotated[int, Field(default=9, ge=1, description='Numerator/denominator bound B')]


class SystemSchema(BaseSchema):
    """Serialized BiorthogonalSystem"""

    stage: Annotated[int, Field(ge=1, description='Stage N')]
    space: Annotated[SpaceSpec, Field(description='Space the system was normalized on')]
    m_constants: Annotated[list[RationalStr], Field(description='m(0)..m(N-1)')]
    e_vectors: Annotated[list[SparseSchema], Field(description='e_0..e_{N-1}')]
    e_functionals: Annotated[list[SparseSchema], Field(description="e'_0..e'_{N-1}")]
    consumed_y: Annotated[list[int], Field(default_factory=list)]
    consumed_v: Annotated[list[int], Field(default_factory=list)]

    @model_validator(mode='after')
    def lists_match_stage(self) -> 'SystemSchema':
        for name in ('m_constants', 'e_vectors', 'e_functionals'):
            length = len(getattr(self, name))
            if length != self.stage:
                raise ValueError(f'{name} has {length} entries but stage is {self.stage}')
        for name in ('consumed_y', 'consumed_v'):
            length = len(getattr(self, name))
            if length not in (0, self.stage):
                raise ValueError(f'{name} has {length} entries but stage is {self.stage}')
        return self

    def to_system(self) -> BiorthogonalSystem:
        return BiorthogonalSystem(
            e_vectors=tuple(entry.to_vector() for entry in self.e_vectors),
            e_functionals=tuple(entry.to_functional() for entry in self.e_functionals),
            m_constants=tuple(to_fraction(m) for m in self.m_constants),
            stage=self.stage,
            space=self.space.to_matrix(),
            consumed_y=tuple(self.consumed_y),
            consumed_v=tuple(self.consumed_v),
        )

    @classmethod
    def from_system(cls, system: BiorthogonalSystem) -> 'SystemSchema':
        return cls(
            stage=system.stage,
            space=SpaceSpec.from_matrix(system.space),
            m_constants=[format_rational(m) for m in system.m_constants],
            e_vectors=[SparseSchema.from_sequence(e) for e in system.e_vectors],
            e_functionals=[SparseSchema.from_sequence(e) for e in system.e_functionals],
            consumed_y=list(system.consumed_y),
            consumed_v=list(system.consumed_v),
        )


class Witness(BaseSchema):
    """Where a condition failed (or, for equality witnesses, where a bound is attained)"""

    condition: Annotated[str, Field(description='Condition label')]
    indices: Annotated[list[int], Field(description='Indices locating the witness')]
    detail: Annotated[str, Field(description='Exact values involved')]


class LemmaConditions(BaseSchema):
    i: bool
    ii: bool
    iii: bool
    iv: bool


class LemmaReport(BaseSchema):
    """Finite-stage certificate of the four biorthogonal system conditions"""

    stage: int
    conditions: LemmaConditions
    witnesses: Annotated[list[Witness], Field(default_factory=list)]
    m_constants: Annotated[list[RationalStr], Field(default_factory=list)]
    equality_witnesses: Annotated[
        list[Optional[int]],
        Field(default_factory=list, description="Coordinate j with |pair(δ_j, e'_n)|_1 = p(δ_j), per n"),
    ]
    norm_grade: Annotated[int, Field(default=0, description='Grade used as the continuous norm p')]
    samples: int = 0
    seed: int = 0
    notes: Annotated[list[str], Field(default_factory=lambda: list(SURROGATE_NOTES))]

    @property
    def passed(self) -> bool:
        c = self.conditions
        return c.i and c.ii and c.iii and c.iv
