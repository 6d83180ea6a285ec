"""
Hermite and Laguerre polynomials evaluated by recurrence, log-domain
factorials, and the Gaussian generating-function coefficient every closed
form in the package is assembled from.
"""
import cmath
import math

from scipy.special import gammaln


# Switch on t*r below which Hermite arguments 1/sqrt(2 t r) are not used
TAU_SWITCH = 1e-6


def hermite(n, z):
    """
    Physicists' Hermite polynomial H_n(z) for complex z.

    H_{n+1} = 2z H_n - 2n H_{n-1}, H_0 = 1, H_1 = 2z.
    """
    if n < 0:
        raise ValueError(f'Hermite order must be non-negative, got {n}')
    z = complex(z)
    previous, current = 0j, 1 + 0j
    for k in range(n):
        previous, current = current, 2 * z * current - 2 * k * previous
    return current


def laguerre(n, x):
    """
    Laguerre polynomial L_n(x) via (k+1)L_{k+1} = (2k+1-x)L_k - k L_{k-1}.
    """
    return assoc_laguerre(n, 0, x)


def assoc_laguerre(n, k, x):
    """
    Associated Laguerre polynomial L_n^k(x).

    (j+1) L_{j+1}^k = (2j+1+k-x) L_j^k - (j+k) L_{j-1}^k
    """
    if n < 0 or k < 0:
        raise ValueError(f'Laguerre indices must be non-negative, got n={n}, k={k}')
    x = float(x)
    previous, current = 0.0, 1.0
    for j in range(n):
        previous, current = current, ((2 * j + 1 + k - x) * current - (j + k) * previous) / (j + 1)
    return current


def ln_factorial(n):
    """ln(n!)"""
    if n < 0:
        raise ValueError(f'factorial of negative number {n}')
    if n < 2:
        return 0.0
    return float(gammaln(n + 1))


def gaussian_coefficient(a, d, p, tau_switch=TAU_SWITCH):
    """
    Coefficient of x^p in exp(a*x + d*x^2).

    For |2d| >= tau_switch this is H_p(a/(2i sqrt d)) (i sqrt d)^p / p!;
    closer to d = 0 the finite series sum_k a^(p-2k) d^k / ((p-2k)! k!) is
    used instead. Both sides are independent of the branch of sqrt d.
    """
    if p < 0:
        return 0j
    a = complex(a)
    d = complex(d)
    if abs(2 * d) >= tau_switch:
        root = 1j * cmath.sqrt(d)
        return hermite(p, a / (2 * root)) * root ** p * math.exp(-ln_factorial(p))
    total = 0j
    for k in range(p // 2 + 1):
        weight = math.exp(-ln_factorial(p - 2 * k) - ln_factorial(k))
        total += weight * a ** (p - 2 * k) * d ** k
    return total


def bilinear_derivative(a_lin, b_lin, c_cross, d_quad, order, tau_switch=TAU_SWITCH):
    """
    d^order/ds^order d^order/dtau^order of
    exp[a*s + b*tau + c*tau*s + d*(tau^2 + s^2)] at s = tau = 0.

    Expanding exp(c*tau*s) leaves
    (order!)^2 sum_l c^l/l! g(a, d, order-l) g(b, d, order-l)
    with g the one-variable coefficient from gaussian_coefficient. In the
    Hermite branch g(a, d, p) g(b, d, p) carries (-d)^p H_p(a/(2i sqrt d)) H_p(b/(2i sqrt d)) / (p!)^2.
    """
    if order < 0:
        raise ValueError(f'derivative order must be non-negative, got {order}')
    c_cross = complex(c_cross)
    total = 0j
    for l in range(order + 1):
        p = order - l
        total += (
            c_cross ** l * math.exp(-ln_factorial(l))
            * gaussian_coefficient(a_lin, d_quad, p, tau_switch)
            * gaussian_coefficient(b_lin, d_quad, p, tau_switch)
        )
    return total * math.exp(2 * ln_factorial(order))
