"""
Command Line Entry Point

Builds the argparse parser from the registered command routers, configures
logging and maps errors to exit statuses (see holoembed/contrib/exceptions.py).

Usage:
    holoembed verify --config demo/demo.json
    python -m holoembed.main table --weights inverse_factorial --k 1 --stages 4..12
"""

import argparse
import logging
import sys
from typing import Optional, Sequence

from holoembed import __version__
from holoembed.configs.logging import configure_logging
from holoembed.configs.settings import settings
from holoembed.contrib.dependencies import positive_int, seed_int
from holoembed.contrib.exceptions import EXIT_USAGE, HoloEmbedError
from holoembed.routers import cli_router

logger = logging.getLogger(__name__)


def common_options() -> argparse.ArgumentParser:
    """Flags accepted by every subcommand"""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument('--config', metavar='PATH', help='RunConfig JSON document')
    parser.add_argument('--seed', type=seed_int, help='Override family.seed of the config')
    parser.add_argument('--stage', type=positive_int, help='Override the stage N of the config')
    parser.add_argument('--out', metavar='PATH', help='Output file (default: stdout)')
    parser.add_argument('--format', choices=['json', 'csv'], help='Output format')
    parser.add_argument('--log-level', metavar='LEVEL', help=f'Logging level (default: {settings.LOG_LEVEL})')
    return parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=settings.APP_NAME,
        description='Exact biorthogonal systems and holomorphic embeddings of Köthe echelon spaces',
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND', required=True)
    cli_router.install(subparsers, parents=[common_options()])
    return parser


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command and return its exit status

    Returns:
        int: 0 all certificates hold, 1 a certificate failed, 2 usage error,
        3 domain error, 4 invalid config
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        configure_logging(args.log_level)
    except ValueError:
        print(f'{settings.APP_NAME}: --log-level: unknown level {args.log_level!r}', file=sys.stderr)
        return EXIT_USAGE

    logger.debug('running %s', args.command)
    try:
        return args.handler(args)
    except HoloEmbedError as exc:
        logger.debug('%s failed', args.command, exc_info=True)
        print(f'{settings.APP_NAME}: {type(exc).__name__}: {exc}', file=sys.stderr)
        return exc.exit_status


def main() -> None:
    sys.exit(cli_main())


if __name__ == '__main__':
    main()
