"""
Verification Command

verify: RunConfig (--config) -> CertificateReport JSON

The exit status is 0 exactly when every certificate in the report holds and
1 otherwise; the report is written in both cases. With --format csv only the
continuity table is written.

Example:
    holoembed verify --config demo/demo.json --out report.json
"""

import argparse
import logging

from holoembed.configs.settings import settings
from holoembed.contrib.dependencies import run_config
from holoembed.contrib.documents import dump_model, emit
from holoembed.contrib.exceptions import EXIT_CERTIFICATE_FAILED, EXIT_OK
from holoembed.contrib.routing import CommandRouter
from holoembed.contrib.schemas import to_fraction
from holoembed.embedding.models import ContinuityRow
from holoembed.embedding.schemas import rows_to_csv
from holoembed.verification.schemas import CertificateReport
from holoembed.verification.suite import run_suite

logger = logging.getLogger(__name__)

router = CommandRouter()


def report_rows(report: CertificateReport) -> list[ContinuityRow]:
    return [
        ContinuityRow(
            k=to_fraction(row.k),
            stage=row.stage,
            partial_sum=to_fraction(row.partial_sum),
            tail_bound=to_fraction(row.tail_bound),
            constant=to_fraction(row.C_k),
        )
        for row in report.theorem.continuity_table
    ]


@router.command('verify', help='Run the certificate suite on a config')
def verify(args: argparse.Namespace) -> int:
    cfg = run_config(args)
    report = run_suite(cfg)
    out = args.out or cfg.output.path
    if (args.format or cfg.output.format) == 'csv':
        emit(rows_to_csv(report_rows(report), settings.DECIMAL_DIGITS), out)
    else:
        emit(dump_model(report), out)
    failed = [name for name, holds in report.certificates().items() if not holds]
    if failed:
        logger.error('certificates failed: %s', ', '.join(failed))
        return EXIT_CERTIFICATE_FAILED
    return EXIT_OK
