"""
Brute-force engine over truncated Fock spaces.

States are built by literally applying (r a^+ + t a) to truncated coherent
expansions, and every figure of merit is computed from the resulting
coefficient matrix with plain linear algebra. Nothing here uses the closed
forms, so it serves as the oracle they are checked against.
"""
import logging
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import gammainc, gammaln

from csecs.errors import (
    ConvergenceError, DegenerateState, HeadroomError, InvalidParams, TruncationError
)
from csecs.models.special_functions import assoc_laguerre, ln_factorial


logger = logging.getLogger(__name__)

DEFAULT_N_MAX = 40
DEFAULT_TAIL_TOL = 1e-10
DEFAULT_QUAD_ORDER = 40
CF_TAIL_TOL = 1e-8
QUAD_CONVERGENCE_TOL = 1e-6
QUAD_IMAG_TOL = 1e-8
_QUAD_CHUNK = 256


@dataclass(frozen=True)
class TruncationConfig:
    n_max: int = DEFAULT_N_MAX
    tail_tol: float = DEFAULT_TAIL_TOL

    def __post_init__(self):
        if not isinstance(self.n_max, (int, np.integer)) or self.n_max < 4:
            raise InvalidParams(f'Fock cutoff must be an integer >= 4, got {self.n_max}')
        if not self.tail_tol > 0:
            raise InvalidParams(f'tail_tol must be positive, got {self.tail_tol}')

    def to_dict(self):
        return {'n_max': int(self.n_max), 'tail_tol': self.tail_tol}


def default_truncation(alpha, n_max=None, tail_tol=DEFAULT_TAIL_TOL):
    """
    n_max = ceil(|alpha|^2 + 8|alpha| + 20) unless an explicit cutoff is given.
    """
    if n_max is None:
        amplitude = abs(complex(alpha))
        n_max = max(4, math.ceil(amplitude ** 2 + 8 * amplitude + 20))
    return TruncationConfig(n_max=int(n_max), tail_tol=tail_tol)


@dataclass(frozen=True)
class FockVector:
    coeffs: np.ndarray

    @property
    def dim(self):
        return self.coeffs.shape[0]

    @property
    def norm_squared(self):
        return float(np.vdot(self.coeffs, self.coeffs).real)

    @property
    def tail(self):
        """Relative weight of the last retained level."""
        norm = self.norm_squared
        return abs(self.coeffs[-1]) ** 2 / norm if norm > 0 else 0.0


@dataclass(frozen=True)
class TwoModeFockState:
    """
    coeffs[j, k] is the amplitude of |j>_a |k>_b. raw_norm_squared keeps the
    squared norm before normalization (twice A1 B1 +/- A2 B2 for built states).
    """
    coeffs: np.ndarray
    raw_norm_squared: float = 1.0

    @property
    def dim(self):
        return self.coeffs.shape[0]

    def __repr__(self):
        return f'<TwoModeFockState dim={self.coeffs.shape} tail={truncation_tail(self):.2e}>'


@dataclass(frozen=True)
class ModeMoments:
    n_a: float
    n_b: float
    ab: complex
    adbd: complex

    def to_dict(self):
        return {'n_a': self.n_a, 'n_b': self.n_b,
                'ab': [self.ab.real, self.ab.imag], 'adbd': [self.adbd.real, self.adbd.imag]}


def coherent_vector(alpha, cfg, padding=0):
    """
    Truncated |alpha> with c_k = exp(-|alpha|^2/2) alpha^k / sqrt(k!), k <= n_max,
    followed by `padding` zero entries of headroom.
    """
    alpha = complex(alpha)
    intensity = abs(alpha) ** 2
    # Poisson mass above n_max
    tail = float(gammainc(cfg.n_max + 1, intensity)) if intensity > 0 else 0.0
    if tail > cfg.tail_tol:
        raise TruncationError(
            f'|alpha|^2={intensity:.3f} leaves tail mass {tail:.2e} above n_max={cfg.n_max}',
            n_max=cfg.n_max, tail=tail
        )
    coeffs = np.zeros(cfg.n_max + 1 + padding, dtype=complex)
    coeffs[0] = math.exp(-intensity / 2)
    for k in range(1, cfg.n_max + 1):
        coeffs[k] = coeffs[k - 1] * alpha / math.sqrt(k)
    return FockVector(coeffs)


def apply_superposition_op(v, t, r, order):
    """
    Apply (r a^+ + t a) `order` times; the result is not normalized.
    """
    coeffs = np.array(v.coeffs, dtype=complex)
    levels = np.arange(coeffs.shape[0])
    for step in range(order):
        if r != 0.0 and coeffs[-1] != 0:
            raise HeadroomError(
                f'creation step {step + 1} of {order} would leave the {coeffs.shape[0]}-level space',
                order=order
            )
        raised = np.zeros_like(coeffs)
        raised[1:] = r * np.sqrt(levels[1:]) * coeffs[:-1]
        lowered = np.zeros_like(coeffs)
        lowered[:-1] = t * np.sqrt(levels[1:]) * coeffs[1:]
        coeffs = raised + lowered
    return FockVector(coeffs)


def build_cs_eecs(params, cfg):
    """
    Normalized A_m B_n (|alpha, alpha> +/- |-alpha, -alpha>) as a coefficient matrix.
    """
    padding = params.m + params.n
    modes = {}
    for sign in (1, -1):
        coherent = coherent_vector(sign * params.alpha, cfg, padding)
        modes[sign] = (
            apply_superposition_op(coherent, params.t_a, params.r_a, params.m).coeffs,
            apply_superposition_op(coherent, params.t_b, params.r_b, params.n).coeffs,
        )
    coeffs = np.outer(*modes[1]) + params.parity.sign * np.outer(*modes[-1])
    raw = float(np.vdot(coeffs, coeffs).real)
    if math.sqrt(raw) < 1e-150:
        raise DegenerateState(f'Oracle state vanishes for {params!r}', raw_norm_squared=raw)
    logger.debug('built %r on %d levels, raw norm^2 %.6e', params, coeffs.shape[0], raw)
    return TwoModeFockState(coeffs / math.sqrt(raw), raw)


def truncation_tail(s):
    """Relative mass in the last row and column."""
    weights = np.abs(s.coeffs) ** 2
    total = weights.sum()
    edge = weights[-1, :].sum() + weights[:, -1].sum() - weights[-1, -1]
    return float(edge / total) if total > 0 else 0.0


def mode_moments(s):
    coeffs = s.coeffs
    weights = np.abs(coeffs) ** 2
    levels = np.arange(s.dim)
    n_a = float(weights.sum(axis=1) @ levels)
    n_b = float(weights.sum(axis=0) @ levels)
    lowered = pair_annihilate(s)
    ab = complex(np.vdot(coeffs, lowered))
    raised = np.zeros_like(coeffs)
    root = np.sqrt(levels[1:])
    raised[1:, 1:] = np.outer(root, root) * coeffs[:-1, :-1]
    adbd = complex(np.vdot(coeffs, raised))
    assert abs(adbd - ab.conjugate()) <= 1e-10 * max(1.0, abs(ab)), 'pair moments are not adjoint'
    return ModeMoments(n_a=n_a, n_b=n_b, ab=ab, adbd=adbd)


def pair_annihilate(s):
    """Coefficients of ab|psi> on the same truncated grid."""
    coeffs = s.coeffs
    root = np.sqrt(np.arange(1, s.dim))
    lowered = np.zeros_like(coeffs)
    lowered[:-1, :-1] = np.outer(root, root) * coeffs[1:, 1:]
    return lowered


def reduced_density(s):
    return s.coeffs @ s.coeffs.conj().T


def concurrence_oracle(s):
    rho_a = reduced_density(s)
    purity = float(np.real(np.sum(rho_a * rho_a.T)))
    return math.sqrt(max(0.0, 2 * (1 - purity)))


def displacement_element(row, col, eta):
    """
    <row|D(eta)|col> = sqrt(col!/row!) eta^(row-col) exp(-|eta|^2/2) L_col^(row-col)(|eta|^2) for row >= col.
    """
    eta = complex(eta)
    if row < col:
        return displacement_element(col, row, -eta).conjugate()
    x = abs(eta) ** 2
    magnitude = math.exp(0.5 * (ln_factorial(col) - ln_factorial(row)) - x / 2)
    return magnitude * eta ** (row - col) * assoc_laguerre(col, row - col, x)


def displacement_matrices(etas, dim):
    """
    Stack of truncated D(eta) matrices, shape (len(etas), dim, dim).
    """
    etas = np.atleast_1d(np.asarray(etas, dtype=complex))
    x = np.abs(etas) ** 2
    offsets = np.arange(dim)

    powers = np.ones((etas.size, dim), dtype=complex)
    flipped = np.ones((etas.size, dim), dtype=complex)
    for p in range(1, dim):
        powers[:, p] = powers[:, p - 1] * etas
        flipped[:, p] = flipped[:, p - 1] * -etas.conj()

    matrices = np.zeros((etas.size, dim, dim), dtype=complex)
    previous = np.zeros((etas.size, dim))
    current = np.ones((etas.size, dim))
    for k in range(dim):
        ps = offsets[:dim - k]
        log_weight = 0.5 * (gammaln(k + 1) - gammaln(k + ps + 1))
        table = np.exp(log_weight[None, :] - x[:, None] / 2) * current[:, :dim - k]
        matrices[:, k + ps, k] = powers[:, ps] * table
        matrices[:, k, k + ps] = flipped[:, ps] * table
        # L_{k+1}^p from L_k^p and L_{k-1}^p
        previous, current = current, (
            (2 * k + 1 + offsets[None, :] - x[:, None]) * current - (k + offsets[None, :]) * previous
        ) / (k + 1)
    return matrices


def _char_values(s, etas, gammas):
    coeffs = s.coeffs
    displaced_a = displacement_matrices(etas, s.dim)
    displaced_b = displacement_matrices(gammas, s.dim)
    shifted = displaced_a @ coeffs @ np.transpose(displaced_b, (0, 2, 1))
    values = np.einsum('ij,bij->b', coeffs.conj(), shifted)
    norms = np.einsum('bij,bij->b', shifted.conj(), shifted).real
    return values, norms


def char_function(s, eta, gamma, check_tail=True, tail_tol=CF_TAIL_TOL):
    """
    chi(eta, gamma) = <psi|D_a(eta) D_b(gamma)|psi>.
    """
    values, norms = _char_values(s, [eta], [gamma])
    tail = 1.0 - float(norms[0])
    if check_tail and tail > tail_tol:
        raise TruncationError(
            f'displacement by ({eta}, {gamma}) pushes {tail:.2e} of the state past the cutoff',
            eta=eta, gamma=gamma, tail=tail
        )
    return complex(values[0])


@lru_cache(maxsize=8)
def quadrature_grid(order):
    nodes, weights = np.polynomial.hermite.hermgauss(order)
    x, y = np.meshgrid(nodes, nodes, indexing='ij')
    z = ((x + 1j * y) / math.sqrt(2)).ravel()
    w = np.outer(weights, weights).ravel()
    return z, w


def _fidelity_at_order(s, order):
    z, w = quadrature_grid(order)
    total = 0j
    for start in range(0, z.size, _QUAD_CHUNK):
        chunk = z[start:start + _QUAD_CHUNK]
        values, _ = _char_values(s, -chunk.conj(), -chunk)
        total += np.sum(w[start:start + _QUAD_CHUNK] * np.exp(np.abs(chunk) ** 2) * values)
    return total / (2 * math.pi)


def fidelity_by_quadrature(s, quad_order=DEFAULT_QUAD_ORDER):
    """
    F = int d^2z/pi exp(-|z|^2) chi_E(-z*, -z), vacuum input, by 2-D Gauss-Hermite
    quadrature in z = u/sqrt(2) so that the weight matches exp(-2|z|^2).
    """
    if quad_order < 20:
        raise InvalidParams(f'quadrature order must be at least 20, got {quad_order}')
    value = _fidelity_at_order(s, quad_order)
    refined = _fidelity_at_order(s, 2 * quad_order)
    logger.debug('quadrature fidelity %d: %.12f, %d: %.12f', quad_order, value.real, 2 * quad_order, refined.real)
    if abs(refined - value) > QUAD_CONVERGENCE_TOL:
        raise ConvergenceError(
            f'fidelity quadrature moved by {abs(refined - value):.2e} when doubling the order',
            quad_order=quad_order
        )
    if abs(refined.imag) > QUAD_IMAG_TOL:
        raise ConvergenceError(f'fidelity integral has imaginary residue {refined.imag:.2e}')
    return float(refined.real)


def mode_overlaps_oracle(alpha, order, t, r, cfg):
    """
    (<alpha|O^+k O^k|alpha>, <-alpha|O^+k O^k|alpha>) from explicit vectors.
    """
    plus = apply_superposition_op(coherent_vector(alpha, cfg, order), t, r, order).coeffs
    minus = apply_superposition_op(coherent_vector(-complex(alpha), cfg, order), t, r, order).coeffs
    return float(np.vdot(plus, plus).real), complex(np.vdot(minus, plus))
