"""
Embedding Commands

- embed: system (--system) + sparse x (--vector) -> EmbeddedImage JSON
- eval:  image (--image) + point (--z) + radius (--k) -> certified value
- table: weights + radii + stages -> continuity table (CSV, or JSON)

Weights and domain for `embed` come from --config when given, otherwise the
inverse factorial weights on the plane are used.

Examples:
    holoembed embed --system system.json --vector x.json --out image.json
    holoembed eval --image image.json --z 1/2,-1/3 --k 1
    holoembed table --weights inverse_factorial --k 1 --stages 4..12
"""

import argparse
import json
import logging
from fractions import Fraction

from holoembed.biortho.schemas import SystemSchema
from holoembed.configs.settings import settings
from holoembed.contrib.dependencies import output_format, require, run_config
from holoembed.contrib.documents import dump_model, emit, load_document
from holoembed.contrib.exceptions import EXIT_OK, UsageError
from holoembed.contrib.rationals import ComplexRational, format_decimal, format_rational, parse_rational
from holoembed.contrib.routing import CommandRouter, argument
from holoembed.contrib.schemas import ComplexSchema
from holoembed.embedding.models import WeightFamily
from holoembed.embedding.operations import continuity_table, embed, eval_at
from holoembed.embedding.schemas import (
    ContinuityRowSchema,
    EvaluationSchema,
    ImageSchema,
    WeightSpec,
    domain_from_wire,
    rows_to_csv,
)
from holoembed.space.schemas import SparseSchema

logger = logging.getLogger(__name__)

router = CommandRouter()


def parse_point(text: str) -> ComplexRational:
    """'re,im' or a single real rational"""
    parts = [part.strip() for part in text.split(',')]
    if len(parts) > 2:
        raise UsageError('--z', f'expected "re,im", got {text!r}')
    try:
        return ComplexRational(*(parse_rational(part) for part in parts))
    except ValueError as exc:
        raise UsageError('--z', str(exc)) from None


def parse_radius(text: str, flag: str = '--k') -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise UsageError(flag, str(exc)) from None


def parse_stages(text: str) -> list[int]:
    """'4..12' (inclusive range) or a comma separated list '4,8,16'"""
    try:
        if '..' in text:
            first, last = (int(part) for part in text.split('..', 1))
            stages = list(range(first, last + 1))
        else:
            stages = [int(part) for part in text.split(',')]
    except ValueError:
        raise UsageError('--stages', f'expected "a..b" or "a,b,c", got {text!r}') from None
    if not stages or min(stages) < 1:
        raise UsageError('--stages', f'stages must be positive integers, got {text!r}')
    return stages


@router.command(
    'embed',
    help='Compute the truncated image T(x) of a sparse vector',
    arguments=[
        argument('--system', metavar='PATH', help='BiorthogonalSystem JSON written by build'),
        argument('--vector', metavar='PATH', help='Sparse vector JSON'),
    ],
)
def embed_command(args: argparse.Namespace) -> int:
    if output_format(args, 'json') != 'json':
        raise UsageError('--format', 'embed writes JSON only')
    system = load_document(require(args, 'system'), SystemSchema, '--system').to_system()
    x = load_document(require(args, 'vector'), SparseSchema, '--vector').to_vector()
    if args.config:
        cfg = run_config(args)
        weight_spec, domain_wire = cfg.weights, cfg.domain
    else:
        weight_spec, domain_wire = WeightSpec(), 'plane'
    image = embed(x, system, weight_spec.to_weights(system.stage), domain_from_wire(domain_wire))
    emit(dump_model(ImageSchema.from_image(image)), args.out)
    return EXIT_OK


@router.command(
    'eval',
    help='Evaluate an image at z with a certified tail bound',
    arguments=[
        argument('--image', metavar='PATH', help='EmbeddedImage JSON written by embed'),
        argument('--z', metavar='RE,IM', help='Evaluation point, e.g. 1/2,-1/3'),
        argument('--k', metavar='RATIONAL', help='Radius with |z|_1 <= k'),
    ],
)
def eval_command(args: argparse.Namespace) -> int:
    if output_format(args, 'json') != 'json':
        raise UsageError('--format', 'eval writes JSON only')
    image = load_document(require(args, 'image'), ImageSchema, '--image').to_image()
    z = parse_point(require(args, 'z'))
    k = parse_radius(require(args, 'k'))
    value, tail = eval_at(image, z, k)
    digits = settings.DECIMAL_DIGITS
    result = EvaluationSchema(
        z=ComplexSchema.from_complex(z),
        k=format_rational(k),
        stage=image.stage,
        value=ComplexSchema.from_complex(value),
        tail=format_rational(tail),
        value_decimal=[format_decimal(value.re, digits), format_decimal(value.im, digits)],
        tail_decimal=format_decimal(tail, digits),
    )
    emit(dump_model(result), args.out)
    return EXIT_OK


@router.command(
    'table',
    help='Tabulate continuity constants C_k with their certified tails',
    arguments=[
        argument(
            '--weights',
            choices=[family.value for family in WeightFamily if family is not WeightFamily.CUSTOM],
            help='Weight family (custom weights need --config)',
        ),
        argument('--q', metavar='RATIONAL', help='Parameter q of gaussian weights'),
        argument('--k', metavar='RATIONAL', action='append', help='Radius; repeat for several'),
        argument('--stages', metavar='A..B', help='Stages, as a range "4..12" or a list "4,8,16"'),
    ],
)
def table_command(args: argparse.Namespace) -> int:
    if args.config:
        cfg = run_config(args)
        weight_spec = cfg.weights
        k_values = [parse_rational(k) for k in cfg.verification.k_list]
        stages = cfg.verification.table_stages or [cfg.stage]
    else:
        family = WeightFamily(require(args, 'weights'))
        if family is WeightFamily.GAUSSIAN and args.q is None:
            raise UsageError('--q', 'gaussian weights need q')
        params = {'q': format_rational(parse_radius(args.q, '--q'))} if args.q is not None else {}
        weight_spec = WeightSpec(family=family, params=params)
        k_values = [Fraction(1)]
        stages = [args.stage or 16]
    if args.k:
        k_values = [parse_radius(k) for k in args.k]
    if args.stages:
        stages = parse_stages(args.stages)
    weights = weight_spec.to_weights(max(stages))
    rows = continuity_table(weights, k_values, stages)
    if output_format(args, 'csv') == 'csv':
        emit(rows_to_csv(rows, settings.DECIMAL_DIGITS), args.out)
    else:
        emit(json.dumps([ContinuityRowSchema.from_row(row).model_dump() for row in rows], indent=2) + '\n', args.out)
    return EXIT_OK

