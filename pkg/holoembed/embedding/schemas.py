"""
Embedding Pydantic Schemas

Image document (written by `holoembed embed`, read by `holoembed eval`):
    {"stage": N, "coefficients": [{"re", "im"}, ...], "p_norm": "p/q",
     "weights": {...}, "domain": "plane" | {"disc": "R"}}

Continuity tables are CSV with header k,stage,partial_sum,tail_bound,C_k; each
cell holds the exact rational followed by a decimal annotation in parentheses.
"""

import csv
import io
from typing import Annotated, Iterable, Literal, Optional, Union

from pydantic import Field, model_validator

from holoembed.contrib.rationals import format_decimal, format_rational
from holoembed.contrib.schemas import BaseSchema, ComplexSchema, RationalStr, to_fraction
from holoembed.embedding.models import (
    PLANE,
    ContinuityRow,
    Domain,
    DomainKind,
    EmbeddedImage,
    WeightFamily,
    WeightSequence,
)
from holoembed.embedding.operations import make_weights

CSV_HEADER = ['k', 'stage', 'partial_sum', 'tail_bound', 'C_k']


class WeightSpec(BaseSchema):
    """Weight sequence selection"""

    family: Annotated[WeightFamily, Field(default=WeightFamily.INVERSE_FACTORIAL, description='Weight family')]

    params: Annotated[
        dict[str, RationalStr],
        Field(default_factory=dict, description='gaussian: q; custom: decay_ratio'),
    ]

    values: Annotated[
        Optional[list[RationalStr]],
        Field(None, description='Explicit weights, custom family only'),
    ]

    window: Annotated[
        Optional[int],
        Field(None, ge=1, description='Materialized length; defaults to the stage'),
    ]

    @model_validator(mode='after')
    def values_only_for_custom(self) -> 'WeightSpec':
        if self.values is not None and self.family is not WeightFamily.CUSTOM:
            raise ValueError('"values" is only accepted for custom weights')
        return self

    def to_weights(self, window: Optional[int] = None) -> WeightSequence:
        if self.values is not None:
            window = len(self.values)
        else:
            window = self.window or window or 1
        return make_weights(
            self.family,
            {key: to_fraction(value) for key, value in self.params.items()},
            window,
            [to_fraction(v) for v in self.values] if self.values is not None else None,
        )

    @classmethod
    def from_weights(cls, weights: WeightSequence) -> 'WeightSpec':
        custom = weights.family is WeightFamily.CUSTOM
        return cls(
            family=weights.family,
            params={key: format_rational(value) for key, value in weights.params.items()},
            values=[format_rational(v) for v in weights.values] if custom else None,
            window=weights.window,
        )


class DiscSpec(BaseSchema):
    disc: RationalStr


DomainWire = Union[Literal['plane'], DiscSpec]


def domain_from_wire(wire: DomainWire) -> Domain:
    if isinstance(wire, DiscSpec):
        return Domain(DomainKind.DISC, to_fraction(wire.disc))
    return PLANE


def domain_to_wire(domain: Domain) -> DomainWire:
    if domain.kind is DomainKind.DISC:
        return DiscSpec(disc=format_rational(domain.radius))
    return 'plane'


class ImageSchema(BaseSchema):
    """Serialized EmbeddedImage"""

    stage: Annotated[int, Field(ge=1)]
    coefficients: list[ComplexSchema]
    p_norm: RationalStr
    weights: WeightSpec
    domain: DomainWire = 'plane'

    @model_validator(mode='after')
    def coefficients_match_stage(self) -> 'ImageSchema':
        if len(self.coefficients) != self.stage:
            raise ValueError(f'coefficients has {len(self.coefficients)} entries but stage is {self.stage}')
        return self

    def to_image(self) -> EmbeddedImage:
        return EmbeddedImage(
            coefficients=tuple(c.to_complex() for c in self.coefficients),
            stage=self.stage,
            p_norm=to_fraction(self.p_norm),
            weights=self.weights.to_weights(self.stage),
            domain=domain_from_wire(self.domain),
        )

    @classmethod
    def from_image(cls, image: EmbeddedImage) -> 'ImageSchema':
        return cls(
            stage=image.stage,
            coefficients=[ComplexSchema.from_complex(c) for c in image.coefficients],
            p_norm=format_rational(image.p_norm),
            weights=WeightSpec.from_weights(image.weights),
            domain=domain_to_wire(image.domain),
        )


class EvaluationSchema(BaseSchema):
    """Certified point value: |T(x)(z) - value| <= tail"""

    z: ComplexSchema
    k: RationalStr
    stage: int
    value: ComplexSchema
    tail: RationalStr
    value_decimal: Annotated[list[str], Field(description='[re, im] as decimals, annotation only')]
    tail_decimal: str


class ContinuityRowSchema(BaseSchema):
    k: RationalStr
    stage: int
    partial_sum: RationalStr
    tail_bound: RationalStr
    C_k: RationalStr

    @classmethod
    def from_row(cls, row: ContinuityRow) -> 'ContinuityRowSchema':
        return cls(
            k=format_rational(row.k),
            stage=row.stage,
            partial_sum=format_rational(row.partial_sum),
            tail_bound=format_rational(row.tail_bound),
            C_k=format_rational(row.constant),
        )


def rows_to_csv(rows: Iterable[ContinuityRow], digits: int = 17) -> str:
    """CSV rendering; rationals appear exactly and as decimals"""

    def cell(value) -> str:
        return f'{format_rational(value)} ({format_decimal(value, digits)})'

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow([cell(row.k), row.stage, cell(row.partial_sum), cell(row.tail_bound), cell(row.constant)])
    return buffer.getvalue()
