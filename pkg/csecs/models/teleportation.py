"""
Coherent-state teleportation through the CS-EECS channel.

The channel enters through its characteristic function

    chi(eta, gamma) = <Psi|D_a(eta) D_b(gamma)|Psi>

and the fidelity for a coherent input is

    F = int d^2z/pi exp(-|z|^2) chi(-z*, -z)

which does not depend on the input amplitude, so the vacuum input is used
throughout. Each of the four (bra, ket) coherent components of the channel
contributes one term; the Gaussian integral over z is done analytically and
what is left is a finite sum of gaussian_coefficient products.
"""
import cmath
import logging
import math
from dataclasses import dataclass

import numpy as np

from csecs.errors import ConvergenceError, DegenerateState, InvalidParams
from csecs.models.fock_oracle import (
    DEFAULT_QUAD_ORDER, QUAD_CONVERGENCE_TOL, QUAD_IMAG_TOL, quadrature_grid
)
from csecs.models.special_functions import (
    TAU_SWITCH, bilinear_derivative, gaussian_coefficient, ln_factorial
)
from csecs.models.state_model import CsEcsParams, Parity, normalization


logger = logging.getLogger(__name__)

CLASSICAL_LIMIT = 0.5
IMAG_RESIDUE_TOL = 1e-8

__all__ = [
    'CLASSICAL_LIMIT', 'FidelityReport', 'FidelityTermArgs', 'bilinear_derivative',
    'cf_closed', 'fidelity_by_cf_quadrature', 'fidelity_closed', 'fidelity_difference',
    'fidelity_eecs', 'fidelity_term', 'fidelity_term_args'
]


@dataclass(frozen=True)
class FidelityTermArgs:
    """
    Hermite arguments of one fidelity term: n1, n2 for mode a and m1, m2 for
    mode b. nan at the endpoints t*r = 0.
    """
    n1: complex
    n2: complex
    m1: complex
    m2: complex

    def to_dict(self):
        return {
            name: None if cmath.isnan(value) else [value.real, value.imag]
            for name, value in (('n1', self.n1), ('n2', self.n2), ('m1', self.m1), ('m2', self.m2))
        }


@dataclass(frozen=True)
class FidelityReport:
    f: float
    components: tuple
    above_classical: bool
    term_args: tuple = ()

    def to_dict(self):
        labels = ('aa', 'mm', 'am', 'ma')
        data = {'f': self.f, 'above_classical': self.above_classical}
        for label, value in zip(labels, self.components):
            data[f'{label}_re'] = value.real
            data[f'{label}_im'] = value.imag
        if self.term_args:
            data['term_args'] = dict(zip(labels, (args.to_dict() for args in self.term_args)))
        return data


def _overlap(bra, ket):
    """<bra|ket> for coherent states."""
    return cmath.exp(-abs(bra) ** 2 / 2 - abs(ket) ** 2 / 2 + bra.conjugate() * ket)


def _components(alpha):
    """(bra, ket, weight index) for the four terms; index 1 marks the cross terms."""
    return ((alpha, alpha, 0), (-alpha, -alpha, 0), (alpha, -alpha, 1), (-alpha, alpha, 1))


def _mode_cf(bra, ket, eta, t, r, order, tau_switch):
    """
    <bra|(O^+)^k D(eta) O^k|ket> for O = r a^+ + t a.
    """
    conj_bra = bra.conjugate()
    prefactor = _overlap(bra, ket) * cmath.exp(
        -abs(eta) ** 2 / 2 + eta * conj_bra - eta.conjugate() * ket
    )
    if order == 0:
        return prefactor
    return prefactor * bilinear_derivative(
        t * ket + r * (conj_bra - eta.conjugate()),
        t * conj_bra + r * (ket + eta),
        r * r, t * r / 2, order, tau_switch
    )


def cf_closed(params, eta, gamma, tau_switch=TAU_SWITCH):
    norm = normalization(params, tau_switch)
    eta, gamma = complex(eta), complex(gamma)
    signs = (1, params.parity.sign)
    total = 0j
    for bra, ket, cross in _components(params.alpha):
        total += signs[cross] * (
            _mode_cf(bra, ket, eta, params.t_a, params.r_a, params.m, tau_switch)
            * _mode_cf(bra, ket, gamma, params.t_b, params.r_b, params.n, tau_switch)
        )
    return total / norm.inv_square


def fidelity_term_args(params, bra, ket):
    """
    Hermite arguments of the term (bra, ket): the linear coefficients of each
    mode divided by 2i sqrt(t r / 2).
    """
    mid = (ket + bra.conjugate()) / 2

    def scaled(t, r, linear):
        if t * r <= 0.0:
            return complex(math.nan, math.nan)
        return linear / (1j * math.sqrt(2 * t * r))

    return FidelityTermArgs(
        n1=scaled(params.t_a, params.r_a, params.t_a * ket + params.r_a * mid),
        n2=scaled(params.t_a, params.r_a, params.t_a * bra.conjugate() + params.r_a * mid),
        m1=scaled(params.t_b, params.r_b, params.t_b * ket + params.r_b * mid),
        m2=scaled(params.t_b, params.r_b, params.t_b * bra.conjugate() + params.r_b * mid),
    )


def fidelity_term(params, bra, ket, tau_switch=TAU_SWITCH):
    """
    Contribution of the (bra, ket) component pair, not normalized:

        <bra|ket>^2 exp((ket - bra*)^2 / 2) / 2 * (m!)^2 (n!)^2
        * sum_{l,f,k,j} (r_a^2/2)^l/l! (r_b^2/2)^f/f! (r_a r_b/2)^(k+j)/(k! j!)
          g(s_a, m-l-k) g(tau_a, m-l-j) g(s_b, n-f-k) g(tau_b, n-f-j)
    """
    bra, ket = complex(bra), complex(ket)
    m, n = params.m, params.n
    t_a, r_a, t_b, r_b = params.t_a, params.r_a, params.t_b, params.r_b
    mid = (ket + bra.conjugate()) / 2
    s_a, tau_a = t_a * ket + r_a * mid, t_a * bra.conjugate() + r_a * mid
    s_b, tau_b = t_b * ket + r_b * mid, t_b * bra.conjugate() + r_b * mid
    d_a, d_b = t_a * r_a / 2, t_b * r_b / 2

    def g(a, d, p):
        return gaussian_coefficient(a, d, p, tau_switch)

    # g depends only on (argument, order); cache per call
    coeff_a = {p: (g(s_a, d_a, p), g(tau_a, d_a, p)) for p in range(m + 1)}
    coeff_b = {p: (g(s_b, d_b, p), g(tau_b, d_b, p)) for p in range(n + 1)}
    self_a, self_b, cross = r_a * r_a / 2, r_b * r_b / 2, r_a * r_b / 2

    total = 0j
    for l in range(m + 1):
        for f in range(n + 1):
            weight_lf = self_a ** l * self_b ** f * math.exp(-ln_factorial(l) - ln_factorial(f))
            bound = min(m - l, n - f)
            for k in range(bound + 1):
                for j in range(bound + 1):
                    weight = weight_lf * cross ** (k + j) * math.exp(-ln_factorial(k) - ln_factorial(j))
                    total += (
                        weight
                        * coeff_a[m - l - k][0] * coeff_a[m - l - j][1]
                        * coeff_b[n - f - k][0] * coeff_b[n - f - j][1]
                    )
    scale = math.exp(2 * ln_factorial(m) + 2 * ln_factorial(n))
    return _overlap(bra, ket) ** 2 * cmath.exp((ket - bra.conjugate()) ** 2 / 2) / 2 * scale * total


def fidelity_closed(params, tau_switch=TAU_SWITCH):
    norm = normalization(params, tau_switch)
    components = tuple(
        fidelity_term(params, bra, ket, tau_switch) for bra, ket, _ in _components(params.alpha)
    )
    sign = params.parity.sign
    value = (components[0] + components[1] + sign * (components[2] + components[3])) / norm.inv_square
    if abs(value.imag) > IMAG_RESIDUE_TOL * max(1.0, abs(value.real)):
        raise ArithmeticError(f'fidelity has imaginary residue {value.imag:.3e} for {params!r}')
    f = float(value.real)
    term_args = tuple(fidelity_term_args(params, bra, ket) for bra, ket, _ in _components(params.alpha))
    return FidelityReport(f=f, components=components, above_classical=f > CLASSICAL_LIMIT, term_args=term_args)


def fidelity_eecs(alpha, parity=Parity.EVEN):
    """
    Fidelity through the plain entangled coherent state (m = n = 0):

        [exp((a* - a)^2/2) +/- exp(-4|a|^2) exp((a* + a)^2/2)] / (2 (1 +/- exp(-4|a|^2)))
    """
    alpha = complex(alpha)
    sign = Parity.parse(parity).sign
    damping = math.exp(-4 * abs(alpha) ** 2)
    conj = alpha.conjugate()
    numerator = cmath.exp((conj - alpha) ** 2 / 2) + sign * damping * cmath.exp((conj + alpha) ** 2 / 2)
    denominator = 2 * (1 + sign * damping)
    if denominator <= 0:
        raise DegenerateState('the odd entangled coherent state vanishes at alpha = 0')
    value = numerator / denominator
    if abs(value.imag) > IMAG_RESIDUE_TOL:
        raise ArithmeticError(f'fidelity has imaginary residue {value.imag:.3e}')
    return float(value.real)


def _cf_quadrature_at_order(params, order, tau_switch):
    z, w = quadrature_grid(order)
    values = np.array([cf_closed(params, -node.conjugate(), -node, tau_switch) for node in z])
    return np.sum(w * np.exp(np.abs(z) ** 2) * values) / (2 * math.pi)


def fidelity_by_cf_quadrature(params, quad_order=DEFAULT_QUAD_ORDER, tau_switch=TAU_SWITCH):
    """
    Gauss-Hermite integration of cf_closed, independent of the term sum.
    """
    if quad_order < 20:
        raise InvalidParams(f'quadrature order must be at least 20, got {quad_order}')
    value = _cf_quadrature_at_order(params, quad_order, tau_switch)
    refined = _cf_quadrature_at_order(params, quad_order + 20, tau_switch)
    if abs(refined - value) > QUAD_CONVERGENCE_TOL:
        raise ConvergenceError(
            f'characteristic-function quadrature moved by {abs(refined - value):.2e}',
            quad_order=quad_order
        )
    if abs(refined.imag) > QUAD_IMAG_TOL:
        raise ConvergenceError(f'fidelity integral has imaginary residue {refined.imag:.2e}')
    return float(refined.real)


def fidelity_difference(params, tau_switch=TAU_SWITCH):
    """F(m, n) - F(0, 0) at the same alpha, coefficients and parity."""
    baseline = params.with_orders(0, 0)
    return fidelity_closed(params, tau_switch).f - fidelity_closed(baseline, tau_switch).f
