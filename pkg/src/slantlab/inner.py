"""Finite Blaschke products and their arithmetic.

Inner functions are identified with a unimodular constant and a multiset of
zeros in the open disk.  Divisibility, gcd and lcm act on the zero multisets
only and treat the zeros as exact data (matched up to ``ZERO_TOL``).
"""

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .circle import DEFAULT_BAND, CircleFunction, convolve_full

__all__ = [
    "FiniteBlaschke",
    "ZERO_TOL",
    "evaluate",
    "to_circle_fn",
    "divides",
    "gcd_inner",
    "lcm_inner",
    "quotient",
    "compose_zk",
    "monomial_inner",
]

ZERO_TOL = 1e-10
SAFE_RADIUS = 0.95


def _as_complex_tuple(values):
    return tuple(complex(v) for v in values)


@dataclass(frozen=True)
class FiniteBlaschke:
    """``constant * prod_i b_{a_i}(z)`` with ``b_a = |a|/a (a - z)/(1 - conj(a) z)``.

    A zero at the origin contributes the factor ``z``.
    """

    zeros: tuple = ()
    constant: complex = field(default=1 + 0j)

    def __post_init__(self):
        zs = _as_complex_tuple(self.zeros)
        object.__setattr__(self, "zeros", zs)
        object.__setattr__(self, "constant", complex(self.constant))
        if abs(abs(self.constant) - 1.0) > 1e-12:
            raise ValueError(f"constant must be unimodular, got {self.constant}")
        for a in zs:
            if abs(a) >= 1.0:
                raise ValueError(f"zero {a} is not inside the unit disk")
        if any(abs(a) > SAFE_RADIUS for a in zs):
            warnings.warn(f"zeros beyond radius {SAFE_RADIUS} need a band larger "
                          f"than {DEFAULT_BAND} for accurate Fourier data",
                          stacklevel=3)

    @property
    def degree(self):
        return len(self.zeros)

    def is_constant(self):
        return not self.zeros

    def __call__(self, z):
        return evaluate(self, z)

    def to_dict(self):
        return {"constant": [self.constant.real, self.constant.imag],
                "zeros": [[a.real, a.imag] for a in self.zeros]}

    @classmethod
    def from_dict(cls, d):
        re, im = d.get("constant", [1.0, 0.0])
        return cls(tuple(complex(x, y) for x, y in d["zeros"]), complex(re, im))

    def __repr__(self):
        if all(a == 0 for a in self.zeros) and self.constant == 1:
            return f"FiniteBlaschke(z^{self.degree})"
        zs = ", ".join(f"{a:.4g}" for a in self.zeros)
        return f"FiniteBlaschke(zeros=[{zs}], constant={self.constant:.4g})"


def monomial_inner(n):
    """The inner function ``z**n``."""
    return FiniteBlaschke((0j,) * n)


def _factor(a, z):
    if a == 0:
        return z
    return (abs(a) / a) * (a - z) / (1 - np.conj(a) * z)


def evaluate(b, z):
    """Value of ``b`` at ``z`` (array or scalar)."""
    z = np.asarray(z, dtype=complex)
    for a in b.zeros:
        if a != 0 and np.any(np.abs(1 - np.conj(a) * z) < 1e-14):
            raise ValueError(f"z hits the pole 1/conj({a})")
    out = np.full(z.shape, b.constant, dtype=complex)
    for a in b.zeros:
        out = out * _factor(a, z)
    return out if out.ndim else complex(out)


def _factor_taylor(a, n):
    """Taylor coefficients 0..n-1 of a single Blaschke factor."""
    t = np.zeros(n, dtype=complex)
    if a == 0:
        if n > 1:
            t[1] = 1.0
        return t
    ca = np.conj(a)
    t[0] = a
    if n > 1:
        # a - z over 1 - conj(a) z  =  a + sum_{p>=1} conj(a)^{p-1} (|a|^2 - 1) z^p
        t[1:] = ca ** np.arange(n - 1) * (abs(a) ** 2 - 1)
    return t * (abs(a) / a)


def to_circle_fn(b, band=DEFAULT_BAND):
    """Fourier coefficients of ``b`` on ``0..band``.

    The L2 norm of the neglected Taylor tail is estimated and stored on the
    result's ``tail``.
    """
    n = band + 1
    t = np.zeros(n, dtype=complex)
    t[0] = b.constant
    for a in b.zeros:
        t = convolve_full(t, _factor_taylor(a, n))[:n]
    # |b| = 1 on the circle, so the tail energy is 1 - sum |t_p|^2
    tail = math.sqrt(max(0.0, 1.0 - float(np.sum(np.abs(t) ** 2))))
    return CircleFunction.from_analytic(t, band, tail=tail)


def _take_matching(pool, a):
    for i, c in enumerate(pool):
        if abs(c - a) <= ZERO_TOL:
            return i
    return None


def _intersection(xs, ys):
    pool = list(ys)
    out = []
    for a in xs:
        i = _take_matching(pool, a)
        if i is not None:
            out.append(a)
            pool.pop(i)
    return out


def _difference(xs, ys):
    """Multiset ``xs - ys``; ys must be contained in xs."""
    pool = list(xs)
    for a in ys:
        i = _take_matching(pool, a)
        if i is None:
            raise ValueError(f"zero {a} not present")
        pool.pop(i)
    return pool


def divides(beta, alpha):
    """True iff ``beta <= alpha``, i.e. the zeros of beta sit among those of alpha."""
    return len(_intersection(beta.zeros, alpha.zeros)) == beta.degree


def gcd_inner(alpha, beta):
    """Greatest common divisor, constant normalised to 1."""
    return FiniteBlaschke(tuple(_intersection(alpha.zeros, beta.zeros)))


def lcm_inner(alpha, beta):
    """Least common multiple, constant normalised to 1."""
    common = _intersection(alpha.zeros, beta.zeros)
    extra = _difference(beta.zeros, common)
    return FiniteBlaschke(tuple(alpha.zeros) + tuple(extra))


def quotient(alpha, beta):
    """``alpha / beta`` for ``beta <= alpha``; keeps the constant of alpha."""
    if not divides(beta, alpha):
        raise ValueError("quotient requires beta to divide alpha")
    return FiniteBlaschke(tuple(_difference(alpha.zeros, beta.zeros)), alpha.constant)


def compose_zk(beta, k):
    """The inner function ``beta(z**k)``, i.e. ``W_k^* beta``.

    Each zero ``a`` is replaced by its ``k`` distinct k-th roots and the
    constant is chosen so both sides agree at ``z = 1``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return beta
    zeros = []
    for a in beta.zeros:
        if a == 0:
            zeros.extend([0j] * k)
            continue
        r = abs(a) ** (1.0 / k)
        theta = np.angle(a) / k
        zeros.extend(r * np.exp(1j * (theta + 2 * np.pi * np.arange(k) / k)))
    draft = FiniteBlaschke(tuple(zeros))
    c = evaluate(beta, 1.0) / evaluate(draft, 1.0)
    c /= abs(c)
    return FiniteBlaschke(draft.zeros, c)
