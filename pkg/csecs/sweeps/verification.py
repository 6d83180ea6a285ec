"""
Closed form versus oracle equivalence suite.

Each named check evaluates a closed form and an independent route to the same
number over a fixed grid and records the worst discrepancy. A check passes
when that discrepancy is within the requested tolerance.
"""
import itertools
import logging
import math
from dataclasses import dataclass, field

import numpy as np

from csecs.errors import CsEcsError, InvalidParams
from csecs.models import entanglement, fock_oracle, teleportation
from csecs.models.state_model import (
    CsEcsParams, Parity, excited_normalization, normalization, overlap_quartet
)
from csecs.sweeps.grid import NumericSettings
from csecs.utils.validators import validate_tolerance


logger = logging.getLogger(__name__)

ALPHAS = (0.3, 1.0, 1.7)
ORDERS = (0, 1, 2)
TS = (0.0, 0.3, 1 / math.sqrt(2), 0.9, 1.0)
FIDELITY_ALPHAS = (0.1, 0.5, 1.0)
FIDELITY_RS = (0.05, 0.195, 1 / math.sqrt(2))
CF_POINTS = 10
THRESHOLD_WINDOW = (0.562, 0.572)


@dataclass
class CheckResult:
    name: str
    max_error: float = 0.0
    cases: int = 0
    worst: str = None
    failures: list = field(default_factory=list)

    def record(self, closed, reference, label):
        error = abs(closed - reference) / max(1.0, abs(reference))
        self.cases += 1
        if error > self.max_error:
            self.max_error = error
            self.worst = label
        return error

    def fail(self, label, exc):
        self.cases += 1
        self.failures.append(f'{label}: {type(exc).__name__}: {exc}')

    def passed(self, tolerance):
        return not self.failures and self.cases > 0 and self.max_error <= tolerance

    def to_dict(self, tolerance):
        return {
            'check': self.name, 'cases': self.cases, 'max_error': self.max_error,
            'passed': self.passed(tolerance), 'worst': self.worst,
            'failures': list(self.failures)
        }


@dataclass
class VerificationReport:
    tolerance: float
    checks: list

    @property
    def passed(self):
        return all(check.passed(self.tolerance) for check in self.checks)

    def failed_checks(self):
        return [check.name for check in self.checks if not check.passed(self.tolerance)]

    def to_dict(self):
        return {
            'tolerance': self.tolerance, 'passed': self.passed,
            'checks': [check.to_dict(self.tolerance) for check in self.checks]
        }


def _state_grid(parities=(Parity.EVEN, Parity.ODD)):
    for alpha, m, n, t, parity in itertools.product(ALPHAS, ORDERS, ORDERS, TS, parities):
        r = math.sqrt(max(0.0, 1.0 - t * t))
        yield CsEcsParams(alpha, m, n, t, r, t, r, parity)


def check_quartet(settings=NumericSettings()):
    result = CheckResult('quartet')
    for alpha, order, t in itertools.product(ALPHAS, ORDERS, TS):
        r = math.sqrt(max(0.0, 1.0 - t * t))
        params = CsEcsParams(alpha, order, order, t, r, t, r)
        label = f'alpha={alpha} k={order} t={t:.4f}'
        try:
            quartet = overlap_quartet(params, settings.tau_switch)
            diag, cross = fock_oracle.mode_overlaps_oracle(alpha, order, t, r, settings.truncation(alpha))
            result.record(quartet.a1, diag, label)
            result.record(quartet.a2, cross, label)
        except (CsEcsError, ArithmeticError) as e:
            result.fail(label, e)
    return result


def check_normalization(settings=NumericSettings()):
    result = CheckResult('normalization')
    for params in _state_grid():
        try:
            closed = normalization(params, settings.tau_switch).inv_square
            oracle = fock_oracle.build_cs_eecs(params, settings.truncation(params.alpha)).raw_norm_squared
            result.record(closed, oracle, repr(params))
        except (CsEcsError, ArithmeticError) as e:
            result.fail(repr(params), e)
    return result


def check_excited_normalization(settings=NumericSettings()):
    result = CheckResult('excited_normalization')
    for alpha, m, n in itertools.product(ALPHAS, ORDERS, ORDERS):
        closed = excited_normalization(alpha, m, n)
        general = normalization(CsEcsParams.excited(alpha, m, n), settings.tau_switch).inv_square
        result.record(closed, general, f'alpha={alpha} m={m} n={n}')
    return result


def check_sv(settings=NumericSettings()):
    result = CheckResult('sv')
    for alpha, t, parity in itertools.product(ALPHAS, TS, (Parity.EVEN, Parity.ODD)):
        r = math.sqrt(max(0.0, 1.0 - t * t))
        params = CsEcsParams(alpha, 1, 1, t, r, t, r, parity)
        try:
            closed = entanglement.sv_statistic_closed(params).s_plus
            oracle = entanglement.sv_statistic_oracle(params, settings.truncation(alpha)).s_plus
            result.record(closed, oracle, repr(params))
        except (CsEcsError, ArithmeticError) as e:
            result.fail(repr(params), e)
    return result


def check_sv_eecs(settings=NumericSettings()):
    result = CheckResult('sv_eecs')
    for alpha in ALPHAS:
        params = CsEcsParams.eecs(alpha)
        oracle = entanglement.sv_statistic_oracle(params, settings.truncation(alpha)).s_plus
        result.record(entanglement.eecs_sv(alpha), oracle, f'alpha={alpha}')
    return result


def check_concurrence(settings=NumericSettings()):
    result = CheckResult('concurrence')
    for params in _state_grid():
        try:
            closed = entanglement.concurrence_closed(params, settings.tau_switch).c
            oracle = entanglement.concurrence_oracle_for(params, settings.truncation(params.alpha))
            result.record(closed, oracle, repr(params))
        except (CsEcsError, ArithmeticError) as e:
            result.fail(repr(params), e)
    return result


def check_excited_concurrence(settings=NumericSettings()):
    result = CheckResult('excited_concurrence')
    for alpha, m, n in itertools.product(ALPHAS, ORDERS, ORDERS):
        closed = entanglement.concurrence_excited(alpha, m, n)
        general = entanglement.concurrence_closed(CsEcsParams.excited(alpha, m, n), settings.tau_switch).c
        result.record(closed, general, f'alpha={alpha} m={m} n={n}')
    return result


def check_subtraction_parity(settings=NumericSettings()):
    """
    Photon subtraction keeps the even state for even m + n and turns it into
    the odd state (concurrence 1) otherwise.
    """
    result = CheckResult('subtraction_parity')
    for alpha, m, n in itertools.product((0.5, 1.0, 1.5), ORDERS, ORDERS):
        expected = math.tanh(2 * alpha ** 2) if (m + n) % 2 == 0 else 1.0
        params = CsEcsParams.subtracted(alpha, m, n)
        closed = entanglement.concurrence_closed(params, settings.tau_switch).c
        result.record(closed, expected, f'alpha={alpha} m={m} n={n}')
    return result


def check_eigenstate():
    result = CheckResult('eigenstate')
    alpha = 1.0
    state = fock_oracle.build_cs_eecs(CsEcsParams.eecs(alpha), fock_oracle.TruncationConfig(n_max=40))
    residual = fock_oracle.pair_annihilate(state) - alpha ** 2 * state.coeffs
    result.record(float(np.linalg.norm(residual)), 0.0, 'alpha=1 n_max=40')
    return result


def check_characteristic_function(settings=NumericSettings(), seed=0):
    result = CheckResult('characteristic_function')
    rng = np.random.default_rng(seed)
    grid = itertools.product((0.3, 1.0), ((0, 0), (1, 1), (1, 2), (2, 2)), (0.3, 1 / math.sqrt(2), 1.0))
    for alpha, (m, n), t in grid:
        r = math.sqrt(max(0.0, 1.0 - t * t))
        params = CsEcsParams(alpha, m, n, t, r, t, r)
        try:
            state = fock_oracle.build_cs_eecs(params, settings.truncation(alpha))
            for _ in range(CF_POINTS):
                eta, gamma = rng.uniform(-0.7, 0.7, 2) + 1j * rng.uniform(-0.7, 0.7, 2)
                label = f'{params!r} eta={eta:.3f} gamma={gamma:.3f}'
                result.record(
                    teleportation.cf_closed(params, eta, gamma, settings.tau_switch),
                    fock_oracle.char_function(state, eta, gamma),
                    label
                )
        except (CsEcsError, ArithmeticError) as e:
            result.fail(repr(params), e)
    return result


def check_fidelity(settings=NumericSettings()):
    result = CheckResult('fidelity')
    for alpha, order, r in itertools.product(FIDELITY_ALPHAS, ORDERS, FIDELITY_RS):
        params = CsEcsParams.from_r(alpha, order, order, r)
        try:
            closed = teleportation.fidelity_closed(params, settings.tau_switch).f
            state = fock_oracle.build_cs_eecs(params, settings.truncation(alpha))
            result.record(closed, fock_oracle.fidelity_by_quadrature(state, settings.quad_order), repr(params))
        except (CsEcsError, ArithmeticError) as e:
            result.fail(repr(params), e)
    params = CsEcsParams.from_r(0.5, 1, 1, 0.195)
    label = f'{params!r} via closed characteristic function'
    try:
        result.record(
            teleportation.fidelity_closed(params, settings.tau_switch).f,
            teleportation.fidelity_by_cf_quadrature(params, settings.quad_order, settings.tau_switch),
            label
        )
    except (CsEcsError, ArithmeticError) as e:
        result.fail(label, e)
    return result


def check_threshold():
    result = CheckResult('threshold')
    alpha_star = entanglement.sv_threshold()
    x = alpha_star ** 2
    result.record(2 * x * (math.tanh(2 * x) + 1), 1.0, 'root residual')
    crossing = entanglement.sv_zero_crossing(entanglement.eecs_sv)
    if crossing is None:
        result.fail('EECS crossing', ValueError('no sign change found'))
    else:
        result.record(crossing, alpha_star, 'EECS scan crossing')
    lo, hi = THRESHOLD_WINDOW
    if not lo <= alpha_star <= hi:
        result.fail('threshold window', ValueError(f'alpha*={alpha_star:.6f} outside [{lo}, {hi}]'))
    return result


def verify(tolerance, settings=NumericSettings(), seed=0):
    if not validate_tolerance(tolerance):
        raise InvalidParams(f'tolerance must be a positive finite number, got {tolerance}')
    runners = (
        lambda: check_quartet(settings),
        lambda: check_normalization(settings),
        lambda: check_excited_normalization(settings),
        lambda: check_sv(settings),
        lambda: check_sv_eecs(settings),
        lambda: check_concurrence(settings),
        lambda: check_excited_concurrence(settings),
        lambda: check_subtraction_parity(settings),
        check_eigenstate,
        lambda: check_characteristic_function(settings, seed),
        lambda: check_fidelity(settings),
        check_threshold,
    )
    checks = []
    for run in runners:
        check = run()
        logger.info('%-24s cases=%-4d max_error=%.3e', check.name, check.cases, check.max_error)
        checks.append(check)
    report = VerificationReport(tolerance=tolerance, checks=checks)
    if not report.passed:
        logger.warning('verification failed at tolerance %.1e: %s', tolerance, ', '.join(report.failed_checks()))
    return report
