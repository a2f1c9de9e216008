"""
Logging Configuration

Records go to stderr so that stdout carries only JSON or CSV output.
"""

import logging
import sys

from holoembed.configs.settings import settings

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


def configure_logging(level: str | None = None) -> None:
    """Install the root handler; DEBUG in settings overrides the level"""
    if settings.DEBUG:
        level = 'DEBUG'
    level = (level or settings.LOG_LEVEL).upper()
    logging.basicConfig(stream=sys.stderr, level=level, format=LOG_FORMAT, force=True)
