"""
Options shared by the subcommands and the helpers that turn them into records.
"""
import functools
import math
from pathlib import Path

import click

from csecs.models.state_model import CsEcsParams, Parity
from csecs.utils.serializers import FORMATS, render_table


def state_options(fn):
    """--alpha-re, --alpha-im, --m, --n, --r-a, --r-b and --parity."""
    decorators = [
        click.option('--alpha-re', type=float, default=1.0, show_default=True, help='Real part of alpha.'),
        click.option('--alpha-im', type=float, default=0.0, show_default=True, help='Imaginary part of alpha.'),
        click.option('--m', 'm', type=click.IntRange(min=0), default=1, show_default=True,
                     help='Operation order on mode a.'),
        click.option('--n', 'n', type=click.IntRange(min=0), default=1, show_default=True,
                     help='Operation order on mode b.'),
        click.option('--r-a', type=click.FloatRange(0.0, 1.0), default=1 / math.sqrt(2),
                     help='Creation weight on mode a (t = sqrt(1 - r^2)). Default 1/sqrt(2).'),
        click.option('--r-b', type=click.FloatRange(0.0, 1.0), default=None,
                     help='Creation weight on mode b. Defaults to --r-a.'),
        click.option('--parity', type=click.Choice([p.value for p in Parity], case_sensitive=False),
                     default='even', show_default=True),
    ]
    return functools.reduce(lambda f, decorate: decorate(f), reversed(decorators), fn)


def output_options(fn):
    decorators = [
        click.option('--out', type=click.Path(dir_okay=False, writable=True), default=None,
                     help='Write to this file instead of stdout.'),
        click.option('--format', 'output_format', type=click.Choice(FORMATS), default=None,
                     help='Output format. Defaults to CSECS_OUTPUT_FORMAT.'),
    ]
    return functools.reduce(lambda f, decorate: decorate(f), reversed(decorators), fn)


def oracle_options(fn):
    decorators = [
        click.option('--oracle-check', is_flag=True, default=False,
                     help='Compare against the truncated Fock-space oracle.'),
        click.option('--n-max', type=click.IntRange(min=4), default=None,
                     help='Fock cutoff for the oracle. Defaults to CSECS_NMAX or an |alpha|-based heuristic.'),
    ]
    return functools.reduce(lambda f, decorate: decorate(f), reversed(decorators), fn)


def params_from_options(alpha_re, alpha_im, m, n, r_a, r_b, parity):
    return CsEcsParams.from_r(complex(alpha_re, alpha_im), m, n, r_a, r_b, parity)


def emit(text, out=None):
    if out:
        Path(out).write_text(text, encoding='utf-8')
    else:
        click.echo(text, nl=False)


def emit_table(table, cfg, out=None, output_format=None):
    emit(render_table(table, output_format or cfg.OUTPUT_FORMAT), out)
