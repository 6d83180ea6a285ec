"""
The coherent-superposition even/odd entangled coherent state

    |Psi(alpha, m, n)> ~ (r_A a^+ + t_A a)^m (r_B b^+ + t_B b)^n (|alpha, alpha> +/- |-alpha, -alpha>)

with its overlap quartet A1, A2, B1, B2 and normalization factor.
"""
import cmath
import enum
import logging
import math
from dataclasses import asdict, dataclass, replace

from csecs.errors import DegenerateState, InvalidParams
from csecs.models.special_functions import (
    TAU_SWITCH, bilinear_derivative, laguerre, ln_factorial
)
from csecs.utils.validators import validate_coefficients, validate_order


logger = logging.getLogger(__name__)

DEGENERATE_FLOOR = 1e-300
IMAG_RESIDUE_TOL = 1e-10


class Parity(enum.Enum):
    EVEN = 'even'
    ODD = 'odd'

    @property
    def sign(self):
        return 1 if self is Parity.EVEN else -1

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise InvalidParams(f"Invalid parity '{value}'. Use even or odd.") from None


@dataclass(frozen=True)
class CsEcsParams:
    """
    Full parameter set of |Psi(alpha, m, n)>.
    t and r are the real annihilation and creation weights of each mode's operation.
    """
    alpha: complex
    m: int
    n: int
    t_a: float
    r_a: float
    t_b: float
    r_b: float
    parity: Parity = Parity.EVEN

    def __post_init__(self):
        object.__setattr__(self, 'alpha', complex(self.alpha))
        object.__setattr__(self, 'parity', Parity.parse(self.parity))
        if not (validate_order(self.m) and validate_order(self.n)):
            raise InvalidParams(f'Operation orders must be non-negative integers, got m={self.m}, n={self.n}')
        if not cmath.isfinite(self.alpha):
            raise InvalidParams(f'alpha must be finite, got {self.alpha}')
        for mode, t, r in (('a', self.t_a, self.r_a), ('b', self.t_b, self.r_b)):
            if not validate_coefficients(t, r):
                raise InvalidParams(
                    f'Mode {mode} coefficients must be real in [0, 1] with t^2 + r^2 = 1, got t={t}, r={r}'
                )

    def __repr__(self):
        return (f'<CsEcsParams alpha={self.alpha} m={self.m} n={self.n} '
                f'r_a={self.r_a} r_b={self.r_b} {self.parity.value}>')

    @classmethod
    def from_r(cls, alpha, m, n, r_a, r_b=None, parity=Parity.EVEN):
        """t = sqrt(1 - r^2) per mode; r_b defaults to r_a (the symmetric state)."""
        r_b = r_a if r_b is None else r_b
        return cls(alpha, m, n, math.sqrt(max(0.0, 1.0 - r_a * r_a)), r_a,
                   math.sqrt(max(0.0, 1.0 - r_b * r_b)), r_b, parity)

    @classmethod
    def excited(cls, alpha, m, n, parity=Parity.EVEN):
        """Photon-added limit a^+m b^+n."""
        return cls(alpha, m, n, 0.0, 1.0, 0.0, 1.0, parity)

    @classmethod
    def subtracted(cls, alpha, m, n, parity=Parity.EVEN):
        """Photon-subtracted limit a^m b^n."""
        return cls(alpha, m, n, 1.0, 0.0, 1.0, 0.0, parity)

    @classmethod
    def eecs(cls, alpha, parity=Parity.EVEN):
        return cls(alpha, 0, 0, 1.0, 0.0, 1.0, 0.0, parity)

    def with_orders(self, m, n):
        return replace(self, m=m, n=n)

    def with_alpha(self, alpha):
        return replace(self, alpha=alpha)

    def swapped(self):
        """Exchange the roles of the two modes."""
        return replace(self, m=self.n, n=self.m, t_a=self.t_b, r_a=self.r_b, t_b=self.t_a, r_b=self.r_a)

    def to_dict(self):
        data = asdict(self)
        data['alpha'] = [self.alpha.real, self.alpha.imag]
        data['parity'] = self.parity.value
        return data


@dataclass(frozen=True)
class OverlapQuartet:
    """
    a1 = <alpha|A^+m A^m|alpha>, a2 = <-alpha|A^+m A^m|alpha>, and the b analogues.
    The scaled Hermite arguments are nan where t*r is below the branch switch.
    """
    a1: float
    a2: float
    b1: float
    b2: float
    scaled_arg_a: complex
    scaled_arg_cross_a: complex
    scaled_arg_b: complex
    scaled_arg_cross_b: complex

    def to_dict(self):
        return {
            'a1': self.a1, 'a2': self.a2, 'b1': self.b1, 'b2': self.b2,
            'scaled_arg_a': [self.scaled_arg_a.real, self.scaled_arg_a.imag],
            'scaled_arg_cross_a': [self.scaled_arg_cross_a.real, self.scaled_arg_cross_a.imag],
            'scaled_arg_b': [self.scaled_arg_b.real, self.scaled_arg_b.imag],
            'scaled_arg_cross_b': [self.scaled_arg_cross_b.real, self.scaled_arg_cross_b.imag],
        }


@dataclass(frozen=True)
class NormalizationResult:
    n_factor: float
    inv_square: float

    def to_dict(self):
        return {'n_factor': self.n_factor, 'inv_square': self.inv_square}


def scaled_arguments(alpha, t, r):
    """
    Hermite arguments (t alpha + r alpha*)/(i sqrt(2tr)) and (r alpha - t alpha*)/(i sqrt(2tr)).
    """
    if t * r <= 0.0:
        nan = complex(math.nan, math.nan)
        return nan, nan
    scale = 1j * math.sqrt(2 * t * r)
    conj = alpha.conjugate()
    return (t * alpha + r * conj) / scale, (r * alpha - t * conj) / scale


def _real_part(value, scale, label):
    if abs(value.imag) > IMAG_RESIDUE_TOL * max(scale, 1.0):
        raise ArithmeticError(f'{label} has imaginary residue {value.imag:.3e} (scale {scale:.3e})')
    return value.real


def mode_overlaps(alpha, order, t, r, tau_switch=TAU_SWITCH):
    """
    Diagonal and cross overlaps of one mode: (<alpha|O^+k O^k|alpha>, <-alpha|O^+k O^k|alpha>)
    with O = r a^+ + t a and k = order.
    """
    alpha = complex(alpha)
    intensity = abs(alpha) ** 2
    damping = math.exp(-2 * intensity)

    if order == 0:
        return 1.0, damping
    if t == 0.0:
        # a^k a^+k on coherent states
        weight = math.exp(ln_factorial(order))
        return weight * laguerre(order, -intensity), weight * damping * laguerre(order, intensity)
    if r == 0.0:
        # a|+-alpha> = +-alpha|+-alpha>
        power = intensity ** order
        return power, (-1) ** order * power * damping

    if t * r < tau_switch:
        logger.debug('series branch for t*r=%.3e below switch %.1e', t * r, tau_switch)
    conj = alpha.conjugate()
    diag = bilinear_derivative(t * alpha + r * conj, t * conj + r * alpha, r * r, t * r / 2, order, tau_switch)
    cross = damping * bilinear_derivative(t * alpha - r * conj, r * alpha - t * conj, r * r, t * r / 2, order, tau_switch)
    scale = abs(diag)
    return _real_part(diag, scale, 'diagonal overlap'), _real_part(cross, scale, 'cross overlap')


def overlap_quartet(params, tau_switch=TAU_SWITCH):
    a1, a2 = mode_overlaps(params.alpha, params.m, params.t_a, params.r_a, tau_switch)
    b1, b2 = mode_overlaps(params.alpha, params.n, params.t_b, params.r_b, tau_switch)
    arg_a, arg_cross_a = scaled_arguments(params.alpha, params.t_a, params.r_a)
    arg_b, arg_cross_b = scaled_arguments(params.alpha, params.t_b, params.r_b)
    return OverlapQuartet(a1, a2, b1, b2, arg_a, arg_cross_a, arg_b, arg_cross_b)


def inverse_square_norm(quartet, parity):
    """N^-2 = 2(A1 B1 +/- A2 B2)."""
    return 2 * (quartet.a1 * quartet.b1 + parity.sign * quartet.a2 * quartet.b2)


def normalization(params, tau_switch=TAU_SWITCH, quartet=None):
    quartet = quartet or overlap_quartet(params, tau_switch)
    inv_square = inverse_square_norm(quartet, params.parity)
    if not inv_square > DEGENERATE_FLOOR:
        raise DegenerateState(
            f'State vanishes identically for {params!r} (N^-2 = {inv_square:.3e})',
            inv_square=inv_square
        )
    return NormalizationResult(n_factor=inv_square ** -0.5, inv_square=inv_square)


def excited_normalization(alpha, m, n):
    """
    N^-2 of the photon-added state a^+m b^+n (|alpha, alpha> + |-alpha, -alpha>) from Laguerre polynomials.
    """
    if not (validate_order(m) and validate_order(n)):
        raise InvalidParams(f'Operation orders must be non-negative integers, got m={m}, n={n}')
    x = abs(complex(alpha)) ** 2
    weight = math.exp(ln_factorial(m) + ln_factorial(n))
    return 2 * weight * (
        laguerre(m, -x) * laguerre(n, -x)
        + math.exp(-4 * x) * laguerre(m, x) * laguerre(n, x)
    )
