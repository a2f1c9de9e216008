"""
Application Settings

Process-level configuration using Pydantic Settings. Values come from the
environment (prefix HOLOEMBED_) and from a .env file in the working directory.
Run-level choices (space, family, weights, stage) live in the RunConfig
document instead; see holoembed/verification/schemas.py.

Example .env file:
    HOLOEMBED_LOG_LEVEL=INFO
    HOLOEMBED_DEFAULT_SEED=42
    HOLOEMBED_REPORT_TIMINGS=false
"""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Settings loaded from environment variables

    Attributes:
        APP_NAME: Name written into report environments
        DEBUG: Forces DEBUG logging
        LOG_LEVEL: Logging level name
        DEFAULT_SEED: Seed used when neither config nor --seed gives one
        DEFAULT_SAMPLES: Sample count used when a config omits it
        DECIMAL_DIGITS: Significant digits of decimal annotations
        REPORT_TIMINGS: Include wall-clock timings in certificate reports
    """

    APP_NAME: str = Field(default='holoembed', description='Application name')

    DEBUG: bool = Field(default=False, description='Debug mode')

    LOG_LEVEL: str = Field(default='WARNING', description='Logging level')

    DEFAULT_SEED: int = Field(default=7, ge=0, lt=2**64, description='Fallback seed')

    DEFAULT_SAMPLES: int = Field(default=200, ge=1, description='Fallback sample count')

    DECIMAL_DIGITS: int = Field(default=17, ge=1, le=60, description='Digits of decimal annotations')

    REPORT_TIMINGS: bool = Field(
        default=False,
        description='Add timings to reports (reports are then no longer byte-identical)',
    )

    model_config = SettingsConfigDict(
        env_prefix='HOLOEMBED_',
        env_file='.env',
        env_file_encoding='utf-8',
        case_sensitive=True,
        extra='ignore',
    )


settings = Settings()
