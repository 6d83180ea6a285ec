import json
import logging

import click
from rich.console import Console
from rich.table import Table

from csecs.commands.options import emit
from csecs.errors import VerificationFailed
from csecs.models.fock_oracle import DEFAULT_QUAD_ORDER
from csecs.sweeps.grid import NumericSettings
from csecs.sweeps.verification import verify


logger = logging.getLogger(__name__)


def render_report(report, console=None):
    console = console or Console(stderr=True)
    table = Table(title=f'closed form vs oracle (tolerance {report.tolerance:.1e})')
    table.add_column('check')
    table.add_column('cases', justify='right')
    table.add_column('max error', justify='right')
    table.add_column('status')
    for check in report.checks:
        status = '[green]pass[/green]' if check.passed(report.tolerance) else '[red]FAIL[/red]'
        table.add_row(check.name, str(check.cases), f'{check.max_error:.3e}', status)
    console.print(table)
    for check in report.checks:
        for failure in check.failures:
            console.print(f'[red]{check.name}[/red] {failure}')


@click.command('verify')
@click.option('--tolerance', type=float, default=None,
              help='Largest accepted relative discrepancy. Defaults to CSECS_VERIFY_TOLERANCE.')
@click.option('--n-max', type=click.IntRange(min=4), default=None, help='Fock cutoff for the oracle.')
@click.option('--quad-order', type=click.IntRange(min=20), default=None,
              help=f'Gauss-Hermite order per axis (default {DEFAULT_QUAD_ORDER}).')
@click.option('--seed', type=int, default=0, show_default=True, help='Seed for the random CF points.')
@click.option('--out', type=click.Path(dir_okay=False, writable=True), default=None,
              help='Also write the JSON report to this file.')
@click.pass_obj
def verify_command(cfg, tolerance, n_max, quad_order, seed, out):
    """Check every closed form against the truncated Fock-space oracle."""
    tolerance = cfg.VERIFY_TOLERANCE if tolerance is None else tolerance
    report = verify(tolerance, NumericSettings.from_config(cfg, n_max, quad_order), seed)
    render_report(report)
    if out:
        emit(json.dumps(report.to_dict(), indent=2) + '\n', out)
    if not report.passed:
        raise VerificationFailed(
            f'{len(report.failed_checks())} check(s) failed at tolerance {tolerance:.1e}',
            failed=report.failed_checks()
        )
