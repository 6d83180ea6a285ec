import logging
import math

import click

from csecs.commands.options import emit_table, output_options
from csecs.models import entanglement
from csecs.models.state_model import CsEcsParams
from csecs.sweeps.grid import ResultTable


logger = logging.getLogger(__name__)

HEADER = ['curve', 't', 'alpha_star', 'residual', 'error']


def threshold_table(ts=()):
    """
    One row for the even entangled coherent state and one per t for the
    m = n = 1 superposition state.
    """
    alpha_star = entanglement.sv_threshold()
    x = alpha_star ** 2
    rows = [['EECS', None, alpha_star, 2 * x * (math.tanh(2 * x) + 1) - 1, None]]
    for t in ts:
        crossing = entanglement.cs_sv_crossing(t)
        if crossing is None:
            logger.warning('no S+ sign change for t=%s', t)
            rows.append([f't={t}', t, None, None, 'no sign change in scan window'])
        else:
            r = math.sqrt(max(0.0, 1.0 - t * t))
            residual = entanglement.sv_statistic(
                CsEcsParams(crossing, 1, 1, t, r, t, r)
            ).s_plus
            rows.append([f't={t}', t, crossing, residual, None])
    return ResultTable(header=list(HEADER), rows=rows)


@click.command('threshold')
@click.option('--t', 'ts', type=click.FloatRange(0.0, 1.0), multiple=True,
              help='Also locate the S+ zero crossing of the m = n = 1 state at this t. Repeatable.')
@output_options
@click.pass_obj
def threshold_command(cfg, ts, out, output_format):
    """Amplitude above which the SV statistic turns negative."""
    emit_table(threshold_table(ts), cfg, out, output_format)
