"""
Cartesian parameter sweeps over the closed forms, with an optional
per-row comparison against the truncated Fock-space oracle.
"""
import enum
import itertools
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial

import numpy as np

from csecs.errors import CsEcsError, InvalidSpec
from csecs.models import entanglement, fock_oracle, teleportation
from csecs.models.fock_oracle import DEFAULT_QUAD_ORDER, DEFAULT_TAIL_TOL
from csecs.models.special_functions import TAU_SWITCH
from csecs.models.state_model import CsEcsParams, Parity, normalization
from csecs.utils.validators import validate_grid_axis


logger = logging.getLogger(__name__)

AXES = ('alpha_re', 'alpha_im', 'r', 't')
INPUT_COLUMNS = ['alpha_re', 'alpha_im', 'm', 'n', 't_a', 'r_a', 't_b', 'r_b', 'parity']


class Quantity(enum.Enum):
    SV = 'sv'
    CONCURRENCE = 'concurrence'
    FIDELITY = 'fidelity'
    NORMALIZATION = 'normalization'

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        aliases = {'svstatistic': 'sv', 'sv_statistic': 'sv'}
        key = str(value).lower()
        try:
            return cls(aliases.get(key, key))
        except ValueError:
            choices = ', '.join(q.value for q in cls)
            raise InvalidSpec(f"Unknown quantity '{value}'. Use one of: {choices}.") from None


OUTPUT_COLUMNS = {
    Quantity.SV: ['s_plus', 'n_a', 'n_b', 'ab_re', 'ab_im', 'entangled'],
    Quantity.CONCURRENCE: ['c', 'p1', 'p2'],
    Quantity.FIDELITY: ['f', 'above_classical'],
    Quantity.NORMALIZATION: ['n_factor', 'inv_square'],
}


@dataclass(frozen=True)
class NumericSettings:
    """
    Branch switch, oracle cutoff and quadrature order shared by every
    closed-form and oracle evaluation of a sweep, figure or verification run.
    """
    tau_switch: float = TAU_SWITCH
    tail_tol: float = DEFAULT_TAIL_TOL
    quad_order: int = DEFAULT_QUAD_ORDER
    n_max: int = None

    @classmethod
    def from_config(cls, cfg, n_max=None, quad_order=None):
        return cls(
            tau_switch=cfg.TAU_SWITCH,
            tail_tol=cfg.TAIL_TOL,
            quad_order=quad_order or cfg.QUAD_ORDER,
            n_max=n_max or cfg.N_MAX
        )

    def truncation(self, alpha):
        return fock_oracle.default_truncation(alpha, self.n_max, self.tail_tol)


@dataclass(frozen=True)
class GridAxis:
    start: float
    stop: float
    count: int = 1

    def __post_init__(self):
        if not validate_grid_axis(self.start, self.stop, self.count):
            raise InvalidSpec(
                f'Invalid grid axis start={self.start} stop={self.stop} count={self.count}; '
                'need finite start <= stop and count >= 1'
            )
        if self.count == 1 and self.start != self.stop:
            raise InvalidSpec(f'A single-point axis needs start == stop, got {self.start} and {self.stop}')

    @classmethod
    def fixed(cls, value):
        return cls(float(value), float(value), 1)

    def values(self):
        return [float(v) for v in np.linspace(self.start, self.stop, self.count)]


@dataclass(frozen=True)
class SweepSpec:
    """
    A grid over any of alpha_re, alpha_im, r or t (r and t are exclusive;
    t = sqrt(1 - r^2) is derived), with the remaining parameters fixed.
    """
    quantity: Quantity
    axes: dict = field(default_factory=dict)
    m: int = 1
    n: int = 1
    r_a: float = 1 / math.sqrt(2)
    r_b: float = None
    parity: Parity = Parity.EVEN
    oracle_check: bool = False
    n_max: int = None
    output_path: str = None
    tau_switch: float = TAU_SWITCH
    tail_tol: float = DEFAULT_TAIL_TOL
    quad_order: int = DEFAULT_QUAD_ORDER

    def __post_init__(self):
        object.__setattr__(self, 'quantity', Quantity.parse(self.quantity))
        object.__setattr__(self, 'parity', Parity.parse(self.parity))
        unknown = set(self.axes) - set(AXES)
        if unknown:
            raise InvalidSpec(f"Unknown grid axes {sorted(unknown)}. Use {', '.join(AXES)}.")
        if 'r' in self.axes and 't' in self.axes:
            raise InvalidSpec('r and t grids are mutually exclusive')
        for name, axis in self.axes.items():
            if not isinstance(axis, GridAxis):
                raise InvalidSpec(f'Axis {name} must be a GridAxis, got {axis!r}')
        for name in ('r', 't'):
            axis = self.axes.get(name)
            if axis and not (0.0 <= axis.start and axis.stop <= 1.0):
                raise InvalidSpec(f'{name} grid must lie in [0, 1]')

    @property
    def settings(self):
        return NumericSettings(self.tau_switch, self.tail_tol, self.quad_order, self.n_max)

    @property
    def size(self):
        return math.prod(axis.count for axis in self.axes.values())

    def header(self):
        columns = INPUT_COLUMNS + OUTPUT_COLUMNS[self.quantity]
        if self.oracle_check:
            columns = columns + ['oracle_delta']
        return columns + ['error']

    def points(self):
        """Parameter records in grid order (alpha_re slowest, then alpha_im, then r or t)."""
        r_b = self.r_a if self.r_b is None else self.r_b
        grids = [
            self.axes[name].values() if name in self.axes else [None]
            for name in AXES
        ]
        for alpha_re, alpha_im, r, t in itertools.product(*grids):
            alpha = complex(alpha_re or 0.0, alpha_im or 0.0)
            if r is not None:
                yield CsEcsParams.from_r(alpha, self.m, self.n, r, parity=self.parity)
            elif t is not None:
                r_t = math.sqrt(max(0.0, 1.0 - t * t))
                yield CsEcsParams(alpha, self.m, self.n, t, r_t, t, r_t, self.parity)
            else:
                yield CsEcsParams.from_r(alpha, self.m, self.n, self.r_a, r_b, self.parity)


@dataclass(frozen=True)
class ResultTable:
    header: list
    rows: list

    def __post_init__(self):
        width = len(self.header)
        for index, row in enumerate(self.rows):
            if len(row) != width:
                raise ValueError(f'row {index} has {len(row)} cells, header has {width}')

    def __len__(self):
        return len(self.rows)

    def column(self, name):
        index = self.header.index(name)
        return [row[index] for row in self.rows]

    def to_dicts(self):
        return [dict(zip(self.header, row)) for row in self.rows]


def closed_value(quantity, params, settings=NumericSettings()):
    """Closed-form outputs of one grid point plus the scalar compared against the oracle."""
    if quantity is Quantity.SV:
        report = entanglement.sv_statistic(params, settings.truncation(params.alpha))
        return report.to_dict(), report.s_plus
    if quantity is Quantity.CONCURRENCE:
        report = entanglement.concurrence_closed(params, settings.tau_switch)
        return report.to_dict(), report.c
    if quantity is Quantity.FIDELITY:
        report = teleportation.fidelity_closed(params, settings.tau_switch)
        return {'f': report.f, 'above_classical': report.above_classical}, report.f
    result = normalization(params, settings.tau_switch)
    return result.to_dict(), result.inv_square


def oracle_value(quantity, params, settings=NumericSettings()):
    cfg = settings.truncation(params.alpha)
    if quantity is Quantity.SV:
        return entanglement.sv_statistic_oracle(params, cfg).s_plus
    state = fock_oracle.build_cs_eecs(params, cfg)
    if quantity is Quantity.CONCURRENCE:
        return fock_oracle.concurrence_oracle(state)
    if quantity is Quantity.FIDELITY:
        return fock_oracle.fidelity_by_quadrature(state, settings.quad_order)
    return state.raw_norm_squared


def evaluate_point(params, quantity, oracle_check=False, settings=NumericSettings()):
    """
    One table row. Library errors leave the output cells empty and fill the
    error column; the row itself is kept.
    """
    inputs = [
        params.alpha.real, params.alpha.imag, params.m, params.n,
        params.t_a, params.r_a, params.t_b, params.r_b, params.parity.value
    ]
    columns = OUTPUT_COLUMNS[quantity]
    try:
        outputs, scalar = closed_value(quantity, params, settings)
        cells = [outputs[name] for name in columns]
        if oracle_check:
            cells.append(abs(scalar - oracle_value(quantity, params, settings)))
        error = None
    except (CsEcsError, ArithmeticError) as e:
        logger.warning('row %r failed: %s', params, e)
        cells = [None] * (len(columns) + (1 if oracle_check else 0))
        error = f'{type(e).__name__}: {e}'
    return inputs + cells + [error]


def run_sweep(spec, workers=1):
    logger.info('sweeping %s over %d points with %d worker(s)', spec.quantity.value, spec.size, workers)
    evaluate = partial(
        evaluate_point, quantity=spec.quantity, oracle_check=spec.oracle_check, settings=spec.settings
    )
    points = list(spec.points())
    if workers > 1 and len(points) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            # map keeps submission order
            rows = list(pool.map(evaluate, points, chunksize=max(1, len(points) // (4 * workers))))
    else:
        rows = [evaluate(point) for point in points]
    failed = sum(1 for row in rows if row[-1] is not None)
    if failed:
        logger.warning('%d of %d rows failed', failed, len(rows))
    return ResultTable(header=spec.header(), rows=rows)
