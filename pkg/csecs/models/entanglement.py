"""
Shchukin-Vogel inseparability statistic and concurrence of the CS-EECS.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import bisect

from csecs.errors import DegenerateState
from csecs.models import fock_oracle
from csecs.models.special_functions import TAU_SWITCH, laguerre
from csecs.models.state_model import DEGENERATE_FLOOR, CsEcsParams, overlap_quartet
from csecs.utils.guards import closed_form_orders


logger = logging.getLogger(__name__)

ALPHA_TOL = 1e-9
CLAMP_TOL = 1e-12


@dataclass(frozen=True)
class SvMoments:
    o1_a: float
    o2_a: float
    o1_b: float
    o2_b: float
    r1_a: complex
    r2_a: complex
    r1_b: complex
    r2_b: complex


@dataclass(frozen=True)
class SvReport:
    s_plus: float
    n_a: float
    n_b: float
    ab: complex

    @property
    def entangled_flag(self):
        return self.s_plus < 0

    def to_dict(self):
        return {
            's_plus': self.s_plus, 'n_a': self.n_a, 'n_b': self.n_b,
            'ab_re': self.ab.real, 'ab_im': self.ab.imag,
            'entangled': self.entangled_flag
        }


@dataclass(frozen=True)
class ConcurrenceReport:
    c: float
    p1: float
    p2: float

    def to_dict(self):
        return {'c': self.c, 'p1': self.p1, 'p2': self.p2}


def sv_value(n_a, n_b, ab):
    """S+ = <a^+a - 1/2><b^+b - 1/2> - <a^+b^+><ab>, with <a^+b^+> = <ab>*."""
    return (n_a - 0.5) * (n_b - 0.5) - abs(ab) ** 2


def _mode_sv_moments(alpha, t, r):
    """
    O1 = <alpha|O^+ a^+a O|alpha>, O2 = <-alpha|O^+ a^+a O|alpha>,
    R1 = <alpha|O^+ a O|alpha>, R2 = <-alpha|O^+ a O|alpha> for O = r a^+ + t a.
    """
    conj = alpha.conjugate()
    x = abs(alpha) ** 2
    damping = math.exp(-2 * x)
    mixed = t * r * 2 * (alpha * alpha).real
    o1 = x * x + r * r * (1 + 3 * x) + mixed * (1 + x)
    o2 = damping * (x * x + r * r * (1 - 3 * x) + mixed * (1 - x))
    r1 = x * alpha + t * r * (alpha ** 3 + x * conj + conj) + 2 * r * r * alpha
    r2 = damping * (-x * alpha + t * r * (alpha ** 3 + x * conj - conj) + 2 * r * r * alpha)
    return o1, o2, r1, r2


def sv_moments(params):
    o1_a, o2_a, r1_a, r2_a = _mode_sv_moments(params.alpha, params.t_a, params.r_a)
    o1_b, o2_b, r1_b, r2_b = _mode_sv_moments(params.alpha, params.t_b, params.r_b)
    return SvMoments(o1_a, o2_a, o1_b, o2_b, r1_a, r2_a, r1_b, r2_b)


@closed_form_orders(1, 1)
def sv_statistic_closed(params):
    """
    S+ for m = n = 1 from the single-excitation moments; the odd state flips
    the sign of every cross term.
    """
    quartet = overlap_quartet(params)
    moments = sv_moments(params)
    sign = params.parity.sign
    denominator = quartet.a1 * quartet.b1 + sign * quartet.a2 * quartet.b2
    if abs(denominator) <= DEGENERATE_FLOOR:
        raise DegenerateState(f'State vanishes identically for {params!r}')
    n_a = (moments.o1_a * quartet.b1 + sign * moments.o2_a * quartet.b2) / denominator
    n_b = (moments.o1_b * quartet.a1 + sign * moments.o2_b * quartet.a2) / denominator
    ab = (moments.r1_a * moments.r1_b + sign * moments.r2_a * moments.r2_b) / denominator
    return SvReport(s_plus=sv_value(n_a, n_b, ab), n_a=n_a, n_b=n_b, ab=complex(ab))


def sv_from_state(s):
    moments = fock_oracle.mode_moments(s)
    return SvReport(
        s_plus=sv_value(moments.n_a, moments.n_b, moments.ab),
        n_a=moments.n_a, n_b=moments.n_b, ab=moments.ab
    )


def sv_statistic_oracle(params, cfg=None):
    cfg = cfg or fock_oracle.default_truncation(params.alpha)
    return sv_from_state(fock_oracle.build_cs_eecs(params, cfg))


def sv_statistic(params, cfg=None):
    """Closed form where it exists, oracle otherwise."""
    if (params.m, params.n) == (1, 1):
        return sv_statistic_closed(params)
    return sv_statistic_oracle(params, cfg)


def eecs_sv(alpha):
    x = abs(complex(alpha)) ** 2
    return (x * math.tanh(2 * x) - 0.5) ** 2 - x * x


def _threshold_condition(x):
    return 2 * x * (math.tanh(2 * x) + 1) - 1


def sv_threshold():
    """
    Amplitude above which the even entangled coherent state violates the SV
    condition: root of 2x(tanh 2x + 1) = 1 in x = |alpha|^2.
    """
    # bisect tolerances are on x; alpha = sqrt(x) needs |dx| <= 2 alpha * 1e-9
    root = bisect(_threshold_condition, 0.01, 1.0, xtol=1e-12, rtol=1e-15)
    return math.sqrt(root)


def sv_zero_crossing(statistic, lo=0.01, hi=1.5, points=150):
    """
    First alpha in [lo, hi] where statistic(alpha) changes sign, refined by
    bisection. Returns None if the scan finds no crossing.
    """
    grid = np.linspace(lo, hi, points)
    values = [statistic(float(a)) for a in grid]
    for left, right, f_left, f_right in zip(grid[:-1], grid[1:], values[:-1], values[1:]):
        if f_left == 0.0:
            return float(left)
        if f_left * f_right < 0:
            return float(bisect(statistic, left, right, xtol=ALPHA_TOL))
    return None


def cs_sv_crossing(t, m=1, n=1, lo=0.01, hi=1.5):
    """Zero crossing of S+ for the symmetric state with t_A = t_B = t and real alpha."""
    r = math.sqrt(max(0.0, 1.0 - t * t))
    base = CsEcsParams(0.0, m, n, t, r, t, r)

    def statistic(alpha):
        return sv_statistic(base.with_alpha(alpha)).s_plus

    return sv_zero_crossing(statistic, lo, hi)


def _clamp_unit(value, label):
    if value < -CLAMP_TOL or value > 1 + CLAMP_TOL:
        logger.warning('%s=%.15f outside [0, 1] beyond round-off', label, value)
    return min(1.0, max(0.0, value))


def concurrence_from_quartet(quartet, parity):
    """
    C = sqrt((A1^2 - A2^2)(B1^2 - B2^2)) / (A1 B1 +/- A2 B2).
    """
    denominator = quartet.a1 * quartet.b1 + parity.sign * quartet.a2 * quartet.b2
    if abs(denominator) < DEGENERATE_FLOOR:
        raise DegenerateState(f'concurrence denominator vanishes ({denominator:.3e})')
    product = max(0.0, quartet.a1 ** 2 - quartet.a2 ** 2) * max(0.0, quartet.b1 ** 2 - quartet.b2 ** 2)
    return math.sqrt(product) / denominator


def concurrence_closed(params, tau_switch=TAU_SWITCH):
    quartet = overlap_quartet(params, tau_switch)
    if quartet.a1 <= DEGENERATE_FLOOR or quartet.b1 <= DEGENERATE_FLOOR:
        raise DegenerateState(f'A local operation annihilates the state for {params!r}')
    c = concurrence_from_quartet(quartet, params.parity)
    return ConcurrenceReport(
        c=_clamp_unit(c, 'concurrence'),
        p1=quartet.a2 / quartet.a1,
        p2=quartet.b2 / quartet.b1
    )


def concurrence_oracle_for(params, cfg=None):
    cfg = cfg or fock_oracle.default_truncation(params.alpha)
    return fock_oracle.concurrence_oracle(fock_oracle.build_cs_eecs(params, cfg))


def concurrence_excited(alpha, m, n):
    """
    Concurrence of a^+m b^+n (|alpha, alpha> + |-alpha, -alpha>) from Laguerre polynomials.
    """
    x = abs(complex(alpha)) ** 2
    damping = math.exp(-4 * x)

    def factor(order):
        return math.sqrt(max(0.0, laguerre(order, -x) ** 2 - damping * laguerre(order, x) ** 2))

    denominator = laguerre(m, -x) * laguerre(n, -x) + damping * laguerre(m, x) * laguerre(n, x)
    return _clamp_unit(factor(m) * factor(n) / denominator, 'concurrence')
