"""
Verification Pydantic Schemas

RunConfig is the single input document of `holoembed verify` (and supplies
space, family and weights to the other commands). CertificateReport is the
output: every boolean in it is a certificate, and the process exits 0 exactly
when all of them hold.

Example RunConfig:
    {
        "space": {"family": "rapid_decrease", "grades": 3, "window": 16},
        "family": {"kind": "canonical", "seed": 7, "bound": 9},
        "weights": {"family": "inverse_factorial"},
        "stage": 16,
        "verification": {"samples": 200, "seed": 7, "k_list": ["1", "2", "4"]}
    }
"""

from typing import Annotated, Literal, Optional

from pydantic import Field, model_validator

from holoembed.biortho.schemas import FamilySpec, LemmaReport
from holoembed.configs.settings import settings
from holoembed.contrib.schemas import BaseSchema, RationalStr, to_fraction
from holoembed.embedding.schemas import ContinuityRowSchema, DomainWire, WeightSpec
from holoembed.space.schemas import SpaceSpec


class VerificationSpec(BaseSchema):
    """Sample sizes, seed and radii of the certificate suite"""

    samples: Annotated[
        int,
        Field(default_factory=lambda: settings.DEFAULT_SAMPLES, ge=0, description='Random x per sampled check'),
    ]
    seed: Annotated[
        int,
        Field(default_factory=lambda: settings.DEFAULT_SEED, ge=0, lt=2**64, description='Seed of the verification loops'),
    ]
    k_list: Annotated[list[RationalStr], Field(default_factory=lambda: ['1/1'], min_length=1)]
    trials: Annotated[int, Field(default=20, ge=0, description='Samples of the norm checks')]
    reconstructions: Annotated[int, Field(default=50, ge=0, description='Samples of the injectivity/density check')]
    polynomials: Annotated[int, Field(default=50, ge=0, description='Random polynomial round trips')]
    table_stages: Annotated[
        Optional[list[Annotated[int, Field(ge=1)]]],
        Field(None, description='Stages of the continuity table; defaults to the run stage'),
    ]

    @model_validator(mode='after')
    def radii_non_negative(self) -> 'VerificationSpec':
        for index, k in enumerate(self.k_list):
            if to_fraction(k) < 0:
                raise ValueError(f'k_list[{index}] must be non-negative')
        return self


class OutputSpec(BaseSchema):
    path: Annotated[Optional[str], Field(None, description='Output file; stdout when absent')]
    format: Annotated[Literal['json', 'csv'], Field(default='json')]


class RunConfig(BaseSchema):
    """Everything one certificate run needs"""

    space: SpaceSpec
    family: Annotated[FamilySpec, Field(default_factory=FamilySpec)]
    weights: Annotated[WeightSpec, Field(default_factory=WeightSpec)]
    domain: DomainWire = 'plane'
    stage: Annotated[int, Field(ge=1, description='Stage N')]
    verification: Annotated[VerificationSpec, Field(default_factory=VerificationSpec)]
    output: Annotated[OutputSpec, Field(default_factory=OutputSpec)]

    @model_validator(mode='after')
    def stage_within_window(self) -> 'RunConfig':
        if self.stage > self.space.window:
            raise ValueError(f'stage {self.stage} exceeds the space window {self.space.window}')
        return self


class ContinuityResult(BaseSchema):
    k: RationalStr
    C_k: RationalStr
    holds: bool
    max_ratio: RationalStr
    max_ratio_decimal: str
    witness: Optional[int] = None


class SpaceChecks(BaseSchema):
    continuous_norm: bool
    continuous_norm_witness: Optional[int] = None
    norm_from_functionals: bool


class TheoremReport(BaseSchema):
    continuity: list[ContinuityResult]
    injectivity: bool
    monomial_roundtrip: bool
    density_reconstruction: bool
    polynomial_roundtrip: bool
    tail_soundness: bool
    coefficient_bound: bool
    evaluation_norm: bool
    continuity_table: list[ContinuityRowSchema]


class EnvironmentInfo(BaseSchema):
    generator: str
    seeds: dict[str, int]
    versions: dict[str, str]
    timings: Optional[dict[str, float]] = None


class CertificateReport(BaseSchema):
    stage: int
    passed: bool
    space: SpaceChecks
    lemma: LemmaReport
    theorem: TheoremReport
    environment: EnvironmentInfo

    def certificates(self) -> dict[str, bool]:
        """Every certificate by name"""
        theorem = self.theorem
        checks = {
            'space.continuous_norm': self.space.continuous_norm,
            'space.norm_from_functionals': self.space.norm_from_functionals,
            **{f'lemma.{name}': value for name, value in self.lemma.conditions.model_dump().items()},
            'theorem.injectivity': theorem.injectivity,
            'theorem.monomial_roundtrip': theorem.monomial_roundtrip,
            'theorem.density_reconstruction': theorem.density_reconstruction,
            'theorem.polynomial_roundtrip': theorem.polynomial_roundtrip,
            'theorem.tail_soundness': theorem.tail_soundness,
            'theorem.coefficient_bound': theorem.coefficient_bound,
            'theorem.evaluation_norm': theorem.evaluation_norm,
        }
        for result in theorem.continuity:
            checks[f'theorem.continuity[k={result.k}]'] = result.holds
        return checks
