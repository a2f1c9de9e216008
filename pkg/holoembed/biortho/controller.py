"""
Biorthogonal System Commands

build: RunConfig (--config) -> BiorthogonalSystem JSON

Example:
    holoembed build --config demo/demo.json --seed 42 --out system.json
"""

import argparse
import logging

from holoembed.biortho.operations import build_system
from holoembed.biortho.schemas import SystemSchema
from holoembed.contrib.dependencies import output_format, run_config
from holoembed.contrib.documents import dump_model, emit
from holoembed.contrib.exceptions import EXIT_OK, UsageError
from holoembed.contrib.routing import CommandRouter
from holoembed.verification.suite import config_section

logger = logging.getLogger(__name__)

router = CommandRouter()


@router.command('build', help='Construct the normalized biorthogonal system of a config')
def build(args: argparse.Namespace) -> int:
    """
    Build e_n, e'_n for the space and dense families of --config

    Returns:
        int: EXIT_OK; construction errors propagate as HoloEmbedError
    """
    if output_format(args, 'json') != 'json':
        raise UsageError('--format', 'build writes JSON only')
    cfg = run_config(args)
    with config_section('space'):
        matrix = cfg.space.to_matrix()
    with config_section('family'):
        _, system = build_system(cfg.family.kind, cfg.family.seed, cfg.stage, cfg.family.bound, matrix)
    logger.info('built a system of stage %d', system.stage)
    emit(dump_model(SystemSchema.from_system(system)), args.out)
    return EXIT_OK
