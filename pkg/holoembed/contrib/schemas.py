"""
Base Pydantic Schemas

Wire formats for every document the package reads or writes. All schemas
inherit from BaseSchema; exact scalars use the RationalStr and ComplexSchema
types defined here.

Rationals on the wire:
- RationalStr accepts an integer or a "p/q" string and always serializes as the
  reduced "p/q" form, so identical values give identical bytes.
- ComplexSchema is {"re": "p/q", "im": "p/q"}.
"""

from fractions import Fraction
from typing import Annotated, Any

from pydantic import BaseModel as PydanticBaseModel, BeforeValidator, ConfigDict, Field

from holoembed.contrib.rationals import ComplexRational, format_rational, parse_rational


def _canonical_rational(value: Any) -> str:
    return format_rational(parse_rational(value))


RationalStr = Annotated[
    str,
    BeforeValidator(_canonical_rational),
    Field(description='Exact rational as a reduced "p/q" string', examples=['3/4']),
]


def to_fraction(value: str) -> Fraction:
    """Inverse of the RationalStr serialization"""
    return parse_rational(value)


class BaseSchema(PydanticBaseModel):
    """
    Base Pydantic schema for all documents

    Configuration:
    - extra='forbid': Reject any fields not defined in the schema
    - str_strip_whitespace=True: Strip whitespace from strings
    - validate_assignment=True: Validate on attribute assignment
    """

    model_config = ConfigDict(
        extra='forbid',
        str_strip_whitespace=True,
        validate_assignment=True,
    )


class ComplexSchema(BaseSchema):
    """Exact complex scalar"""

    re: RationalStr = '0/1'
    im: RationalStr = '0/1'

    def to_complex(self) -> ComplexRational:
        return ComplexRational(to_fraction(self.re), to_fraction(self.im))

    @classmethod
    def from_complex(cls, value: ComplexRational) -> 'ComplexSchema':
        return cls(re=format_rational(value.re), im=format_rational(value.im))
