"""Random instances for property checks.

All generators take a ``numpy.random.Generator`` so that a fixed seed gives a
reproducible stream.
"""

import numpy as np

from .circle import CircleFunction, conj_fn, multiply, shift
from .inner import FiniteBlaschke, compose_zk, to_circle_fn
from .operators import OperatorMatrix

__all__ = [
    "random_zeros",
    "random_blaschke",
    "random_trig_poly",
    "random_analytic_poly",
    "random_element",
    "random_matrix",
    "random_zero_symbol",
]


def _complex_normal(rng, size):
    return (rng.standard_normal(size) + 1j * rng.standard_normal(size)) / np.sqrt(2)


def random_zeros(rng, n, radius=0.6, origin_prob=0.0):
    """``n`` points in the disk of given radius (uniform in area).

    With probability ``origin_prob`` a point is placed at the origin, which
    exercises the monomial branch of the basis construction.
    """
    r = radius * np.sqrt(rng.uniform(0, 1, n))
    theta = rng.uniform(0, 2 * np.pi, n)
    z = r * np.exp(1j * theta)
    z[rng.uniform(0, 1, n) < origin_prob] = 0
    return tuple(complex(a) for a in z)


def random_blaschke(rng, degree, radius=0.6, origin_prob=0.0):
    """Finite Blaschke product with random zeros and constant."""
    c = np.exp(2j * np.pi * rng.uniform())
    return FiniteBlaschke(random_zeros(rng, degree, radius, origin_prob), c)


def random_trig_poly(rng, band, lo=-8, hi=8):
    """Random coefficients on frequencies ``lo..hi``, stored at ``band``."""
    n = hi - lo + 1
    return CircleFunction.from_terms(dict(zip(range(lo, hi + 1), _complex_normal(rng, n))),
                                     band)


def random_analytic_poly(rng, band, degree=3):
    return CircleFunction.from_analytic(_complex_normal(rng, degree + 1), band)


def random_element(rng, space):
    return space.element(_complex_normal(rng, space.dim))


def random_matrix(rng, dom, cod, k=1):
    return OperatorMatrix(dom, cod, _complex_normal(rng, (cod.dim, dom.dim)), k)


def random_zero_symbol(rng, alpha, beta, k, band, degree=3):
    """``conj(alpha h1) + conj(z)^{k-1} (W_k^* beta) h2`` with random polynomials ``h1, h2``."""
    h1 = random_analytic_poly(rng, band, degree)
    h2 = random_analytic_poly(rng, band, degree)
    a = to_circle_fn(alpha, band)
    wb = to_circle_fn(compose_zk(beta, k), band)
    return conj_fn(multiply(a, h1)) + shift(multiply(wb, h2), -(k - 1))


def _subset(rng, zeros, min_size=1):
    n = len(zeros)
    size = int(rng.integers(min_size, n + 1))
    idx = np.sort(rng.choice(n, size=size, replace=False))
    return tuple(zeros[i] for i in idx)


def analytic_chain(rng, k, m, radius=0.5, extra=1, origin_prob=0.25):
    """Inner functions with ``W_m^* gamma <= beta`` and ``W_k^* beta <= alpha``."""
    gamma = random_blaschke(rng, int(rng.integers(1, 3)), radius, origin_prob)
    beta = FiniteBlaschke(compose_zk(gamma, m).zeros
                          + random_zeros(rng, int(rng.integers(0, extra + 1)), radius))
    alpha = FiniteBlaschke(compose_zk(beta, k).zeros
                           + random_zeros(rng, int(rng.integers(0, extra + 1)), radius))
    return alpha, beta, gamma


def antianalytic_chain(rng, k, m, radius=0.5, origin_prob=0.25):
    """Inner functions with ``alpha <= W_k^* beta`` and ``beta <= W_m^* gamma``."""
    gamma = random_blaschke(rng, int(rng.integers(1, 3)), radius, origin_prob)
    beta = FiniteBlaschke(_subset(rng, compose_zk(gamma, m).zeros))
    alpha = FiniteBlaschke(_subset(rng, compose_zk(beta, k).zeros))
    return alpha, beta, gamma


def sharing_pair(rng, k, max_degree=4, radius=0.5):
    """``(alpha, beta)`` where ``gcd(alpha, W_k^* beta)`` has degree >= 1 and ``k <= dim K_alpha``."""
    beta = random_blaschke(rng, int(rng.integers(1, 3)), radius, origin_prob=0.2)
    shared = _subset(rng, compose_zk(beta, k).zeros)
    need = max(0, k - len(shared))
    extra = int(rng.integers(need, max(need, max_degree - len(shared)) + 1))
    return FiniteBlaschke(shared + random_zeros(rng, extra, radius)), beta
