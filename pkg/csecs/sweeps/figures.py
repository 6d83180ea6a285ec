"""
Pre-configured grids for the seven published figures, emitted in long
format: one row per (curve, grid point).
"""
import logging
import math

import numpy as np

from csecs.errors import CsEcsError, InvalidSpec
from csecs.models import entanglement, teleportation
from csecs.models.state_model import CsEcsParams
from csecs.sweeps.grid import NumericSettings, ResultTable


logger = logging.getLogger(__name__)

FIGURES = ('Fig1', 'Fig2', 'Fig3', 'Fig4', 'Fig5', 'Fig6', 'Fig7')
HEADER = ['figure', 'curve', 'quantity', 'alpha_re', 'alpha_im', 'm', 'n', 'r_a', 'r_b', 'value', 'error']

INV_SQRT2 = 1 / math.sqrt(2)
FIG7_R = 0.195


def _alphas(lo, hi, count):
    return [float(a) for a in np.linspace(lo, hi, count)]


def _row(figure, curve, quantity, params, evaluate, settings):
    try:
        value, error = evaluate(params, settings), None
    except (CsEcsError, ArithmeticError) as e:
        logger.warning('%s %s failed at %r: %s', figure, curve, params, e)
        value, error = None, f'{type(e).__name__}: {e}'
    return [
        figure, curve, quantity, params.alpha.real, params.alpha.imag,
        params.m, params.n, params.r_a, params.r_b, value, error
    ]


def _sv(params, settings):
    return entanglement.sv_statistic(params, settings.truncation(params.alpha)).s_plus


def _eecs_sv(params, settings):
    return entanglement.eecs_sv(params.alpha)


def _concurrence(params, settings):
    return entanglement.concurrence_closed(params, settings.tau_switch).c


def _fidelity(params, settings):
    return teleportation.fidelity_closed(params, settings.tau_switch).f


def _fidelity_gain(params, settings):
    return teleportation.fidelity_difference(params, settings.tau_switch)


def _fig1(settings):
    rows = []
    for alpha in _alphas(0.0, 1.5, 61):
        rows.append(_row('Fig1', 'EECS', 'sv', CsEcsParams.eecs(alpha), _eecs_sv, settings))
        for t in (0.0, 0.2, 0.6, 0.9):
            r = math.sqrt(1 - t * t)
            rows.append(_row('Fig1', f't={t}', 'sv', CsEcsParams(alpha, 1, 1, t, r, t, r), _sv, settings))
    return rows


def _fig2(settings):
    rows = []
    for m in (1, 2):
        for alpha in _alphas(0.05, 2.0, 40):
            for r in _alphas(0.0, 1.0, 21):
                params = CsEcsParams.from_r(alpha, m, m, r)
                rows.append(_row('Fig2', f'm=n={m}', 'concurrence', params, _concurrence, settings))
    return rows


def _fig3(settings):
    rows = []
    for label, (m, n) in (('(a) m=n=1', (1, 1)), ('(a) m=n=2', (2, 2)), ('(a) m=n=3', (3, 3)),
                          ('(b) m=1,n=2', (1, 2)), ('(b) m=1,n=3', (1, 3)), ('(b) m=2,n=1', (2, 1))):
        for alpha in _alphas(0.05, 2.0, 40):
            params = CsEcsParams.from_r(alpha, m, n, INV_SQRT2)
            rows.append(_row('Fig3', label, 'concurrence', params, _concurrence, settings))
    return rows


FIG4_CURVES = (
    ('ECSs |Psi+(alpha,0,0)>', lambda a: CsEcsParams.eecs(a)),
    ('single-photon excited ECSs a^+|Psi+(alpha,0,0)>', lambda a: CsEcsParams.excited(a, 1, 0)),
    ('single-mode CS-ECSs |Psi+(alpha,1,0)> r=1/sqrt(2)', lambda a: CsEcsParams.from_r(a, 1, 0, INV_SQRT2)),
    ('single-mode CS-ECSs |Psi+(alpha,1,0)> r=0.6', lambda a: CsEcsParams.from_r(a, 1, 0, 0.6)),
    ('two-mode excited CESs a^+b^+|Psi+(alpha,0,0)>', lambda a: CsEcsParams.excited(a, 1, 1)),
    ('two-mode CS-CESs |Psi+(alpha,1,1)> r=1/sqrt(2)', lambda a: CsEcsParams.from_r(a, 1, 1, INV_SQRT2)),
    ('two-mode CS-CESs |Psi+(alpha,1,1)> r=0.4', lambda a: CsEcsParams.from_r(a, 1, 1, 0.4)),
)


def _fig4(settings):
    rows = []
    for label, build in FIG4_CURVES:
        for alpha in _alphas(0.05, 2.0, 40):
            rows.append(_row('Fig4', label, 'concurrence', build(alpha), _concurrence, settings))
    return rows


def _fig5(settings):
    rows = []
    for q in _alphas(-2.5, 2.5, 41):
        for p in _alphas(-2.5, 2.5, 41):
            rows.append(_row('Fig5', 'F00', 'fidelity', CsEcsParams.eecs(complex(q, p)), _fidelity, settings))
    return rows


def _fig6(settings):
    rows = []
    for alpha in _alphas(0.05, 2.5, 50):
        for r in _alphas(0.0, 0.9, 19):
            params = CsEcsParams.from_r(alpha, 1, 1, r)
            rows.append(_row('Fig6', '(a) F11', 'fidelity', params, _fidelity, settings))
            rows.append(_row('Fig6', '(b) F11-F00', 'fidelity_difference', params, _fidelity_gain, settings))
    return rows


def _fig7(settings):
    rows = []
    for label, (m, n) in (('(a) m=n=1', (1, 1)), ('(a) m=n=2', (2, 2)), ('(a) m=n=3', (3, 3)),
                          ('(b) m=1,n=2', (1, 2)), ('(b) m=1,n=3', (1, 3)), ('(b) m=2,n=3', (2, 3))):
        for alpha in _alphas(0.01, 1.5, 75):
            params = CsEcsParams.from_r(alpha, m, n, FIG7_R)
            rows.append(_row('Fig7', label, 'fidelity', params, _fidelity, settings))
    return rows


_BUILDERS = {
    'Fig1': _fig1, 'Fig2': _fig2, 'Fig3': _fig3, 'Fig4': _fig4,
    'Fig5': _fig5, 'Fig6': _fig6, 'Fig7': _fig7,
}


def parse_figure(figure_id):
    key = str(figure_id).strip().lower().replace('fig', '').replace('.', '')
    name = f'Fig{key}'
    if name not in _BUILDERS:
        raise InvalidSpec(f"Unknown figure '{figure_id}'. Use one of: {', '.join(FIGURES)}.")
    return name


def run_figure(figure_id, settings=NumericSettings()):
    name = parse_figure(figure_id)
    logger.info('building %s', name)
    rows = _BUILDERS[name](settings)
    return ResultTable(header=list(HEADER), rows=rows)