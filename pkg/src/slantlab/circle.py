"""Functions on the unit circle stored as truncated Fourier series.

A :class:`CircleFunction` holds the coefficients ``a_n`` for ``-M <= n <= M``.
Frequency 0 sits at index ``M``.  Every operation is pure and returns a new
value; coefficients that fall outside the band are dropped and their L2 norm
is accumulated in :attr:`CircleFunction.tail` so callers can check that
truncation stayed negligible.
"""

import logging
import math

import numpy as np
from scipy.signal import fftconvolve

__all__ = [
    "BandError",
    "CircleFunction",
    "DEFAULT_BAND",
    "multiply",
    "riesz_project",
    "slant_w",
    "slant_w_adjoint",
    "inner_product",
    "conj_fn",
    "shift",
    "convolve_full",
]

log = logging.getLogger(__name__)

DEFAULT_BAND = 256

# below this length np.convolve beats the FFT path
_DIRECT_CONV_MAX = 600


class BandError(ValueError):
    """Raised when operands do not share a band or a band is too small."""


def convolve_full(a, b):
    """Full linear convolution of coefficient arrays (last axis)."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.ndim == 1 and b.ndim == 1 and min(a.size, b.size) <= _DIRECT_CONV_MAX:
        return np.convolve(a, b)
    if a.ndim == 1 and b.ndim == 1:
        return fftconvolve(a, b)
    return fftconvolve(np.atleast_2d(a), np.atleast_2d(b), axes=-1)


class CircleFunction:
    """Truncated two-sided Fourier series on the unit circle.

    Parameters
    ----------
    coeffs : array_like
        ``2*band + 1`` complex coefficients, lowest frequency first.
    band : int, optional
        Largest stored frequency ``M``.  Inferred from ``coeffs`` when omitted.
    tail : float
        L2 norm of coefficients discarded while producing this value.
    """

    __slots__ = ("_coeffs", "band", "tail")

    def __init__(self, coeffs, band=None, tail=0.0):
        c = np.array(coeffs, dtype=complex)
        if c.ndim != 1 or c.size % 2 != 1:
            raise BandError("coefficient array must be 1-D with odd length")
        if band is None:
            band = (c.size - 1) // 2
        if band < 1 or c.size != 2 * band + 1:
            raise BandError(f"expected {2 * band + 1} coefficients, got {c.size}")
        c.setflags(write=False)
        self._coeffs = c
        self.band = int(band)
        self.tail = float(tail)

    # -- constructors -------------------------------------------------
    @classmethod
    def zeros(cls, band=DEFAULT_BAND):
        return cls(np.zeros(2 * band + 1, dtype=complex), band)

    @classmethod
    def monomial(cls, n, band=DEFAULT_BAND, scale=1.0):
        """``scale * z**n`` (``n`` may be negative)."""
        if abs(n) > band:
            raise BandError(f"frequency {n} outside band {band}")
        c = np.zeros(2 * band + 1, dtype=complex)
        c[band + n] = scale
        return cls(c, band)

    @classmethod
    def from_terms(cls, terms, band=DEFAULT_BAND):
        """Build from a mapping ``{frequency: coefficient}``."""
        c = np.zeros(2 * band + 1, dtype=complex)
        for n, a in dict(terms).items():
            if abs(n) > band:
                raise BandError(f"frequency {n} outside band {band}")
            c[band + n] += a
        return cls(c, band)

    @classmethod
    def from_analytic(cls, taylor, band=DEFAULT_BAND, tail=0.0):
        """Place Taylor coefficients ``taylor[0], taylor[1], ...`` at n >= 0."""
        t = np.asarray(taylor, dtype=complex)
        c = np.zeros(2 * band + 1, dtype=complex)
        keep = min(t.size, band + 1)
        c[band:band + keep] = t[:keep]
        dropped = float(np.linalg.norm(t[keep:])) if t.size > keep else 0.0
        return cls(c, band, tail=math.hypot(tail, dropped))

    # -- basic access -------------------------------------------------
    @property
    def coeffs(self):
        return self._coeffs

    @property
    def frequencies(self):
        return np.arange(-self.band, self.band + 1)

    def coeff(self, n):
        if abs(n) > self.band:
            return 0j
        return complex(self._coeffs[self.band + n])

    @property
    def analytic_coeffs(self):
        """Coefficients at frequencies ``0..M``."""
        return self._coeffs[self.band:]

    def norm(self):
        return float(np.linalg.norm(self._coeffs))

    def is_analytic(self, tol=0.0):
        return float(np.linalg.norm(self._coeffs[:self.band])) <= tol

    def _nearly_analytic(self):
        return self.is_analytic(1e-12 * (1.0 + self.norm()))

    def with_band(self, band):
        """Zero-pad or truncate to a new band."""
        if band == self.band:
            return self
        c = np.zeros(2 * band + 1, dtype=complex)
        lo = min(band, self.band)
        c[band - lo:band + lo + 1] = self._coeffs[self.band - lo:self.band + lo + 1]
        dropped = 0.0
        if band < self.band:
            outer = np.concatenate([self._coeffs[:self.band - band],
                                    self._coeffs[self.band + band + 1:]])
            dropped = float(np.linalg.norm(outer))
        return CircleFunction(c, band, tail=math.hypot(self.tail, dropped))

    def __call__(self, z):
        """Evaluate the series at ``z``.

        On the circle all frequencies contribute.  Inside the disk only the
        analytic part is meaningful and the series must have no negative
        frequencies.
        """
        z = np.asarray(z, dtype=complex)
        if np.any(np.abs(z) < 1 - 1e-12) and not self._nearly_analytic():
            raise ValueError("cannot evaluate a non-analytic series inside the disk")
        if np.all(np.abs(z) < 1 - 1e-12):
            return np.polynomial.polynomial.polyval(z, self.analytic_coeffs)
        # negative powers on the circle: z^{-n} = conj(z)^n
        pos = np.polynomial.polynomial.polyval(z, self.analytic_coeffs)
        neg = np.polynomial.polynomial.polyval(
            np.conj(z), np.concatenate([[0], self._coeffs[:self.band][::-1]]))
        return pos + neg

    def derivative_at(self, w, n=0):
        """``f^{(n)}(w)`` for analytic ``f`` and ``|w| < 1``."""
        if not self._nearly_analytic():
            raise ValueError("derivative of a non-analytic series")
        a = self.analytic_coeffs
        if n:
            p = np.arange(a.size)
            falling = np.ones(a.size)
            for i in range(n):
                falling *= p - i
            a = (a * falling)[n:]
        return complex(np.polynomial.polynomial.polyval(w, a))

    # -- arithmetic ---------------------------------------------------
    def _check(self, other):
        if not isinstance(other, CircleFunction):
            return NotImplemented
        if other.band != self.band:
            raise BandError(f"band mismatch: {self.band} vs {other.band}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return CircleFunction(self._coeffs + other._coeffs, self.band,
                              tail=math.hypot(self.tail, other.tail))

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return CircleFunction(self._coeffs - other._coeffs, self.band,
                              tail=math.hypot(self.tail, other.tail))

    def __neg__(self):
        return CircleFunction(-self._coeffs, self.band, self.tail)

    def __mul__(self, scalar):
        if isinstance(scalar, CircleFunction):
            return multiply(self, scalar)
        return CircleFunction(self._coeffs * complex(scalar), self.band,
                              self.tail * abs(complex(scalar)))

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (1.0 / complex(scalar))

    def allclose(self, other, atol=1e-12):
        other = other.with_band(self.band) if other.band != self.band else other
        return float(np.max(np.abs(self._coeffs - other._coeffs))) <= atol

    def __repr__(self):
        nz = np.flatnonzero(np.abs(self._coeffs) > 1e-14)
        shown = ", ".join(f"{n - self.band}: {self._coeffs[n]:.4g}" for n in nz[:6])
        more = " ..." if nz.size > 6 else ""
        return f"CircleFunction(band={self.band}, {{{shown}{more}}})"

    # -- serialization ------------------------------------------------
    def to_dict(self):
        return {"band": self.band,
                "coeffs": [[float(c.real), float(c.imag)] for c in self._coeffs]}

    @classmethod
    def from_dict(cls, d):
        c = np.array([complex(re, im) for re, im in d["coeffs"]])
        return cls(c, int(d["band"]))


def multiply(f, g):
    """Product of two circle functions, truncated back to the common band.

    Discarded coefficients are reported through the ``tail`` attribute of the
    result and logged at debug level.
    """
    if not isinstance(f, CircleFunction) or not isinstance(g, CircleFunction):
        raise TypeError("multiply expects CircleFunction operands")
    if f.band != g.band:
        raise BandError(f"band mismatch: {f.band} vs {g.band}")
    M = f.band
    full = convolve_full(f.coeffs, g.coeffs)  # frequencies -2M..2M
    kept = full[M:3 * M + 1]
    dropped = float(np.sqrt(np.sum(np.abs(full[:M]) ** 2)
                            + np.sum(np.abs(full[3 * M + 1:]) ** 2)))
    if dropped > 1e-12:
        log.debug("multiply dropped energy %.3e at band %d", dropped, M)
    return CircleFunction(kept, M, tail=math.hypot(dropped, f.tail, g.tail))


def riesz_project(f):
    """Szegő projection: keep frequencies ``n >= 0``."""
    c = np.array(f.coeffs)
    c[:f.band] = 0
    return CircleFunction(c, f.band, f.tail)


def slant_w(f, k):
    """Decimation ``W_k``: ``z**(k*m) -> z**m``, other monomials to 0.

    The band is preserved; output frequencies ``|m| > M // k`` are zero.
    """
    if k < 1:
        raise ValueError("slant order k must be >= 1")
    M = f.band
    r = M // k
    m = np.arange(-r, r + 1)
    c = np.zeros(2 * M + 1, dtype=complex)
    c[M + m] = f.coeffs[M + k * m]
    return CircleFunction(c, M, f.tail)


def slant_w_adjoint(f, k, band=None):
    """Adjoint ``W_k^*``: ``z**n -> z**(k*n)``; an isometry.

    ``band`` is the output band and defaults to ``k * f.band``; it must be at
    least ``k * f.band``.  Truncate ``f`` with :meth:`CircleFunction.with_band`
    first when a smaller output is wanted.
    """
    if k < 1:
        raise ValueError("slant order k must be >= 1")
    if band is None:
        band = k * f.band
    if k * f.band > band:
        raise BandError(f"output band {band} too small for W_{k}^* of band {f.band}")
    c = np.zeros(2 * band + 1, dtype=complex)
    c[band - k * f.band:band + k * f.band + 1:k] = f.coeffs
    return CircleFunction(c, band, f.tail)


def inner_product(f, g):
    """L2 pairing ``<f, g> = sum a_n conj(b_n)``."""
    if f.band != g.band:
        raise BandError(f"band mismatch: {f.band} vs {g.band}")
    return complex(np.vdot(g.coeffs, f.coeffs))


def conj_fn(f):
    """Pointwise conjugate on the circle: ``a_n -> conj(a_{-n})``."""
    return CircleFunction(np.conj(f.coeffs[::-1]), f.band, f.tail)


def shift(f, n):
    """Multiply by ``z**n``; coefficients pushed past the band are dropped."""
    if n == 0:
        return f
    M = f.band
    c = np.zeros(2 * M + 1, dtype=complex)
    if abs(n) > 2 * M:
        return CircleFunction(c, M, math.hypot(f.tail, f.norm()))
    if n > 0:
        c[n:] = f.coeffs[:2 * M + 1 - n]
        dropped = f.coeffs[2 * M + 1 - n:]
    else:
        c[:n] = f.coeffs[-n:]
        dropped = f.coeffs[:-n]
    return CircleFunction(c, M, math.hypot(f.tail, float(np.linalg.norm(dropped))))
