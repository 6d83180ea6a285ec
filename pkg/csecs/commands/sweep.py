import logging

import click

from csecs.commands.options import emit_table, oracle_options, output_options, state_options
from csecs.sweeps.grid import AXES, GridAxis, Quantity, SweepSpec, run_sweep


logger = logging.getLogger(__name__)


@click.command('sweep')
@click.option('--quantity', type=click.Choice([q.value for q in Quantity], case_sensitive=False),
              required=True, help='Quantity evaluated on the grid.')
@click.option('--grid', 'grids', type=(click.Choice(AXES), float, float, int), multiple=True,
              metavar='AXIS START STOP COUNT',
              help='Grid axis; repeat for a Cartesian product. r and t are exclusive.')
@state_options
@oracle_options
@output_options
@click.option('--workers', type=click.IntRange(min=1), default=None,
              help='Worker processes. Defaults to CSECS_WORKERS.')
@click.pass_obj
def sweep_command(cfg, quantity, grids, alpha_re, alpha_im, m, n, r_a, r_b, parity,
                  oracle_check, n_max, out, output_format, workers):
    """Evaluate a quantity over a Cartesian parameter grid."""
    axes = {name: GridAxis(start, stop, count) for name, start, stop, count in grids}
    axes.setdefault('alpha_re', GridAxis.fixed(alpha_re))
    axes.setdefault('alpha_im', GridAxis.fixed(alpha_im))
    spec = SweepSpec(
        quantity=quantity, axes=axes, m=m, n=n, r_a=r_a, r_b=r_b, parity=parity,
        oracle_check=oracle_check, n_max=n_max or cfg.N_MAX, output_path=out,
        tau_switch=cfg.TAU_SWITCH, tail_tol=cfg.TAIL_TOL, quad_order=cfg.QUAD_ORDER
    )
    table = run_sweep(spec, workers=workers or cfg.WORKERS)
    emit_table(table, cfg, out, output_format)
