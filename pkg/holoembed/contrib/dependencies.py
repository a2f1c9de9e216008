"""
Shared Command Dependencies

Helpers the command handlers use to obtain their inputs from the parsed
command line: the RunConfig behind --config with --seed/--stage applied, the
required flags of a command, and the output format.

Usage:
    def build(args: argparse.Namespace) -> int:
        cfg = run_config(args)
        ...
"""

import argparse
from typing import Any, Optional

from pydantic import ValidationError

from holoembed.contrib.documents import error_location, load_document
from holoembed.contrib.exceptions import UsageError
from holoembed.verification.schemas import RunConfig


def positive_int(text: str) -> int:
    """argparse type for stages and counts"""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected an integer, got {text!r}') from None
    if value < 1:
        raise argparse.ArgumentTypeError(f'expected a positive integer, got {value}')
    return value


def seed_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected an integer seed, got {text!r}') from None
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f'seed must lie in [0, 2^64), got {value}')
    return value


def require(args: argparse.Namespace, name: str) -> Any:
    """Value of a flag the command cannot run without"""
    value = getattr(args, name, None)
    if value is None:
        raise UsageError('--' + name.replace('_', '-'), 'is required for this command')
    return value


def run_config(args: argparse.Namespace) -> RunConfig:
    """
    RunConfig from --config, with command line overrides applied

    Raises:
        UsageError: If --config is missing or an override makes the config invalid
        ConfigError: If the document cannot be read or validated
    """
    cfg = load_document(require(args, 'config'), RunConfig, '--config')
    return apply_overrides(cfg, seed=args.seed, stage=args.stage)


def apply_overrides(cfg: RunConfig, *, seed: Optional[int] = None, stage: Optional[int] = None) -> RunConfig:
    if seed is None and stage is None:
        return cfg
    data = cfg.model_dump(mode='json')
    if seed is not None:
        data['family']['seed'] = seed
    if stage is not None:
        data['stage'] = stage
    try:
        return RunConfig.model_validate(data)
    except ValidationError as exc:
        flag = '--stage' if stage is not None else '--seed'
        location = error_location(exc)
        raise UsageError(flag, f'{location + ": " if location else ""}{exc.errors()[0]["msg"]}') from None


def output_format(args: argparse.Namespace, default: str) -> str:
    return args.format or default
