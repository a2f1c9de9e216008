"""
Space Pydantic Schemas

Wire formats for the space description and for sparse sequences.

Space document:
    {"family": "rapid_decrease" | "disc_type" | "custom",
     "params": {...}, "grades": J, "window": N, "rows": [[...]]}

Sparse sequence document (keys are coordinate indices):
    {"entries": {"0": {"re": "1/1", "im": "0/1"}, "3": {"re": "-1/2", "im": "1/1"}}}
"""

from typing import Annotated, Optional

from pydantic import Field, NonNegativeInt, model_validator

from holoembed.contrib.rationals import format_rational
from holoembed.contrib.schemas import BaseSchema, ComplexSchema, RationalStr, to_fraction
from holoembed.space.models import KotheFamily, KotheMatrix, SparseFunctional, SparseVector, _SparseSequence
from holoembed.space.operations import make_kothe


class SpaceSpec(BaseSchema):
    """Concrete Fréchet space given by its Köthe matrix"""

    family: Annotated[KotheFamily, Field(description='Weight family')]

    params: Annotated[
        dict[str, RationalStr],
        Field(default_factory=dict, description='Family parameters (disc_type: radius)'),
    ]

    grades: Annotated[int, Field(ge=1, description='Number of seminorms J')]

    window: Annotated[int, Field(ge=1, description='Number of coordinates N')]

    rows: Annotated[
        Optional[list[list[RationalStr]]],
        Field(None, description='Explicit weights, custom family only'),
    ]

    strict: Annotated[bool, Field(default=True, description='Require positive weights')]

    @model_validator(mode='after')
    def rows_only_for_custom(self) -> 'SpaceSpec':
        if (self.family is KotheFamily.CUSTOM) != (self.rows is not None):
            raise ValueError('"rows" must be given exactly when family is "custom"')
        return self

    def to_matrix(self) -> KotheMatrix:
        return make_kothe(
            self.family,
            {key: to_fraction(value) for key, value in self.params.items()},
            self.grades,
            self.window,
            [[to_fraction(value) for value in row] for row in self.rows] if self.rows else None,
            strict=self.strict,
        )

    @classmethod
    def from_matrix(cls, matrix: KotheMatrix) -> 'SpaceSpec':
        custom = matrix.family is KotheFamily.CUSTOM
        return cls(
            family=matrix.family,
            params={key: format_rational(value) for key, value in matrix.params.items()},
            grades=matrix.grades,
            window=matrix.window,
            rows=[[format_rational(w) for w in row] for row in matrix.rows] if custom else None,
            strict=matrix.strict,
        )


class SparseSchema(BaseSchema):
    """Finite-support coefficient sequence"""

    entries: Annotated[
        dict[NonNegativeInt, ComplexSchema],
        Field(default_factory=dict, description='Coordinate index -> coefficient'),
    ]

    def to_vector(self) -> SparseVector:
        return SparseVector({n: value.to_complex() for n, value in self.entries.items()})

    def to_functional(self) -> SparseFunctional:
        return SparseFunctional({n: value.to_complex() for n, value in self.entries.items()})

    @classmethod
    def from_sequence(cls, sequence: _SparseSequence) -> 'SparseSchema':
        return cls(entries={n: ComplexSchema.from_complex(value) for n, value in sequence.items()})
