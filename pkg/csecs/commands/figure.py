import click

from csecs.commands.options import emit_table, output_options
from csecs.sweeps.figures import FIGURES, run_figure
from csecs.sweeps.grid import NumericSettings


@click.command('figure')
@click.argument('figure_id', type=click.Choice(FIGURES, case_sensitive=False))
@output_options
@click.pass_obj
def figure_command(cfg, figure_id, out, output_format):
    """Emit the pre-configured grid for one figure."""
    emit_table(run_figure(figure_id, NumericSettings.from_config(cfg)), cfg, out, output_format)
