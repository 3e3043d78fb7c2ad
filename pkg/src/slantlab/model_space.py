"""Finite-dimensional model spaces ``K_alpha = H^2 (-) alpha H^2``.

A :class:`ModelSpace` carries the Takenaka-Malmquist orthonormal basis built
from the zeros of ``alpha`` in stored order.  Elements are coordinate vectors
(:class:`SpaceElement`) relative to that basis.
"""

import functools
import hashlib
import json
import math

import numpy as np

from .circle import (DEFAULT_BAND, CircleFunction, conj_fn, multiply,
                     riesz_project, shift)
from .inner import FiniteBlaschke, to_circle_fn

__all__ = [
    "ModelSpace",
    "SpaceElement",
    "build",
    "project",
    "p_alpha",
    "kernel",
    "conjugation",
    "conjugation_fn",
    "conjugate_kernel",
]


class ModelSpace:
    """``K_alpha`` with an explicit orthonormal basis.

    Use :func:`build` rather than calling the constructor; it caches spaces so
    that identical ``(alpha, band)`` pairs share one basis.
    """

    def __init__(self, alpha, band=DEFAULT_BAND):
        if alpha.is_constant():
            raise ValueError("K_alpha = {0} for constant alpha")
        self.alpha = alpha
        self.band = int(band)
        self.dim = alpha.degree
        self._analytic = _takenaka_malmquist(alpha.zeros, self.band)
        self._analytic.setflags(write=False)
        self._analytic_conj = np.conj(self._analytic)

    @property
    def key(self):
        return (self.alpha.zeros, self.band)

    def __eq__(self, other):
        return isinstance(other, ModelSpace) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"ModelSpace({self.alpha!r}, dim={self.dim}, band={self.band})"

    @functools.cached_property
    def space_id(self):
        payload = json.dumps({"alpha": self.alpha.to_dict(), "band": self.band},
                             sort_keys=True)
        return hashlib.sha256(payload.encode()).hexdigest()[:16]

    @functools.cached_property
    def alpha_fn(self):
        return to_circle_fn(self.alpha, self.band)

    @property
    def basis_matrix(self):
        """Analytic coefficients of the basis, shape ``(dim, band + 1)``."""
        return self._analytic

    @functools.cached_property
    def basis(self):
        return [CircleFunction.from_analytic(row, self.band) for row in self._analytic]

    def gram(self):
        return self._analytic_conj @ self._analytic.T

    def element(self, coords):
        return SpaceElement(self, coords)

    def zero(self):
        return SpaceElement(self, np.zeros(self.dim, dtype=complex))

    def unit(self, j):
        c = np.zeros(self.dim, dtype=complex)
        c[j] = 1.0
        return SpaceElement(self, c)

    def coords_of(self, f):
        """Inner products ``<f, e_i>`` over the frequencies both sides store."""
        n = min(f.band, self.band) + 1
        a = f.coeffs[f.band:f.band + n]
        return self._analytic_conj[:, :n] @ a

    def function(self, coords, band=None):
        c = np.asarray(coords, dtype=complex) @ self._analytic
        f = CircleFunction.from_analytic(c, self.band)
        return f if band is None else f.with_band(band)

    @functools.cached_property
    def conjugation_matrix(self):
        """Matrix ``C`` with ``C_alpha x = C @ conj(x)`` in coordinates."""
        a = self.alpha_fn
        cols = [self.coords_of(multiply(a, shift(conj_fn(e), -1))) for e in self.basis]
        return np.column_stack(cols)


def _takenaka_malmquist(zeros, band):
    n = band + 1
    N = len(zeros)
    out = np.zeros((N, n), dtype=complex)
    if all(a == 0 for a in zeros):
        out[np.arange(N), np.arange(N)] = 1.0
        return out
    running = np.zeros(n, dtype=complex)
    running[0] = 1.0
    p = np.arange(n)
    for j, a in enumerate(zeros):
        ca = np.conj(a)
        if a == 0:
            head = np.zeros(n, dtype=complex)
            head[0] = 1.0
        else:
            head = math.sqrt(1 - abs(a) ** 2) * ca ** p
        out[j] = np.convolve(head, running)[:n]
        running = np.convolve(running, _factor_series(a, n))[:n]
    return out


def _factor_series(a, n):
    t = np.zeros(n, dtype=complex)
    if a == 0:
        t[1] = 1.0
        return t
    ca = np.conj(a)
    t[0] = a
    t[1:] = ca ** np.arange(n - 1) * (abs(a) ** 2 - 1)
    return t * (abs(a) / a)


@functools.lru_cache(maxsize=256)
def build(alpha, band=DEFAULT_BAND):
    """Model space ``K_alpha`` truncated at ``band``."""
    if not isinstance(alpha, FiniteBlaschke):
        raise TypeError("alpha must be a FiniteBlaschke")
    return ModelSpace(alpha, band)


class SpaceElement:
    """Vector of basis coordinates in a fixed model space."""

    __slots__ = ("space", "coords")

    def __init__(self, space, coords):
        c = np.array(coords, dtype=complex).reshape(-1)
        if c.size != space.dim:
            raise ValueError(f"expected {space.dim} coordinates, got {c.size}")
        self.space = space
        self.coords = c

    def to_function(self, band=None):
        return self.space.function(self.coords, band)

    def norm(self):
        return float(np.linalg.norm(self.coords))

    def inner(self, other):
        self._same(other)
        return complex(np.vdot(other.coords, self.coords))

    def _same(self, other):
        if self.space != other.space:
            raise ValueError("elements live in different model spaces")

    def __add__(self, other):
        self._same(other)
        return SpaceElement(self.space, self.coords + other.coords)

    def __sub__(self, other):
        self._same(other)
        return SpaceElement(self.space, self.coords - other.coords)

    def __neg__(self):
        return SpaceElement(self.space, -self.coords)

    def __mul__(self, scalar):
        return SpaceElement(self.space, self.coords * complex(scalar))

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return SpaceElement(self.space, self.coords / complex(scalar))

    def __repr__(self):
        return f"SpaceElement(dim={self.space.dim}, coords={np.round(self.coords, 6)})"

    def to_dict(self):
        return {"space_id": self.space.space_id,
                "coords": [[float(c.real), float(c.imag)] for c in self.coords]}

    @classmethod
    def from_dict(cls, d, space):
        if d["space_id"] != space.space_id:
            raise ValueError("space_id does not match the supplied model space")
        return cls(space, [complex(re, im) for re, im in d["coords"]])


def project(space, f):
    """Coordinates of ``P_alpha f``."""
    return SpaceElement(space, space.coords_of(f))


def p_alpha(alpha_fn, f):
    """``P f - alpha P(conj(alpha) f)`` evaluated on Fourier data.

    ``alpha_fn`` is the circle function of the inner function.  This route
    does not use any basis and serves as an independent check on
    :func:`project`.
    """
    if alpha_fn.band != f.band:
        alpha_fn = alpha_fn.with_band(f.band)
    inner_part = riesz_project(multiply(conj_fn(alpha_fn), f))
    return riesz_project(f) - multiply(alpha_fn, inner_part)


def _kernel_series(w, n, band):
    p = np.arange(band + 1 - n)
    cw = np.conj(w)
    # n! z^n / (1 - conj(w) z)^{n+1} = sum_p n! C(n+p, n) conj(w)^p z^{n+p}
    binom = np.ones(p.size)
    for i in range(1, n + 1):
        binom *= (p + i) / i
    t = np.zeros(band + 1, dtype=complex)
    t[n:] = math.factorial(n) * binom * cw ** p
    return CircleFunction.from_analytic(t, band)


def kernel(space, w, n=0):
    """``k_{w,n}^alpha = P_alpha k_{w,n}``: represents ``f -> f^{(n)}(w)``."""
    if abs(w) >= 1:
        raise ValueError("kernel point must lie in the open unit disk")
    if n < 0:
        raise ValueError("derivative order must be nonnegative")
    return project(space, _kernel_series(complex(w), n, space.band))


def conjugation_fn(alpha_fn, f):
    """``P_alpha(alpha * conj(z) * conj(f))`` on Fourier data."""
    if alpha_fn.band != f.band:
        alpha_fn = alpha_fn.with_band(f.band)
    g = multiply(alpha_fn, shift(conj_fn(f), -1))
    return p_alpha(alpha_fn, g)


def conjugation(space, f):
    """Antilinear conjugation ``C_alpha`` on a space element."""
    if f.space != space:
        raise ValueError("element does not belong to this space")
    return SpaceElement(space, space.conjugation_matrix @ np.conj(f.coords))


def conjugate_kernel(space, w, n=0):
    """``C_alpha k_{w,n}^alpha``."""
    return conjugation(space, kernel(space, w, n))
