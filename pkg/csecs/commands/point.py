import json
import logging

import click

from csecs.commands.options import emit, oracle_options, params_from_options, state_options
from csecs.errors import CsEcsError
from csecs.models import entanglement, fock_oracle, teleportation
from csecs.models.state_model import normalization, overlap_quartet


logger = logging.getLogger(__name__)


def _safe(fn):
    """Run one quantity; a library error becomes an error entry instead of aborting the point."""
    try:
        return fn()
    except (CsEcsError, ArithmeticError) as e:
        logger.warning('%s', e)
        return {'error': type(e).__name__, 'message': str(e)}


def evaluate_point(params, cfg, oracle_check=False, n_max=None):
    norm = normalization(params, cfg.TAU_SWITCH)
    truncation = fock_oracle.default_truncation(params.alpha, n_max or cfg.N_MAX, cfg.TAIL_TOL)
    result = {
        'params': params.to_dict(),
        'quartet': overlap_quartet(params, cfg.TAU_SWITCH).to_dict(),
        'normalization': norm.to_dict(),
        'sv': _safe(lambda: entanglement.sv_statistic(params, truncation).to_dict()),
        'concurrence': _safe(lambda: entanglement.concurrence_closed(params, cfg.TAU_SWITCH).to_dict()),
        'fidelity': _safe(lambda: teleportation.fidelity_closed(params, cfg.TAU_SWITCH).to_dict()),
    }
    if oracle_check:
        state = fock_oracle.build_cs_eecs(params, truncation)
        result['oracle'] = {
            'truncation': truncation.to_dict(),
            'tail': fock_oracle.truncation_tail(state),
            'inv_square': state.raw_norm_squared,
            'sv': entanglement.sv_from_state(state).to_dict(),
            'concurrence': fock_oracle.concurrence_oracle(state),
            'fidelity': _safe(lambda: fock_oracle.fidelity_by_quadrature(state, cfg.QUAD_ORDER)),
        }
    return result


@click.command('point')
@state_options
@oracle_options
@click.option('--out', type=click.Path(dir_okay=False, writable=True), default=None)
@click.pass_obj
def point_command(cfg, alpha_re, alpha_im, m, n, r_a, r_b, parity, oracle_check, n_max, out):
    """Evaluate every closed form at a single parameter point (JSON)."""
    params = params_from_options(alpha_re, alpha_im, m, n, r_a, r_b, parity)
    logger.info('evaluating %r', params)
    result = evaluate_point(params, cfg, oracle_check, n_max)
    emit(json.dumps(result, indent=2, default=str) + '\n', out)
