"""Matrices of compressed slant Toeplitz operators between model spaces.

All matrices are taken relative to the orthonormal bases stored on the model
spaces, so adjoints are conjugate transposes and rank-one operators
``u (x) v : f -> <f, v> u`` are outer products ``u v^H``.
"""

import math

import numpy as np

from .circle import CircleFunction, convolve_full, shift
from .model_space import SpaceElement, conjugate_kernel, kernel, project

__all__ = [
    "OperatorMatrix",
    "slant_compression",
    "truncated_toeplitz",
    "compressed_shift",
    "compressed_shift_pow",
    "compressed_shift_adjoint_pow",
    "shift_pow_by_formula",
    "rank_one",
    "identity",
    "monomial_slant_matrix",
]


class OperatorMatrix:
    """Operator ``K_alpha -> K_beta`` stored as a dense complex matrix.

    ``k`` is an informational tag carrying the slant order the operator was
    built with; the matrix alone does not determine it.
    """

    __slots__ = ("domain", "codomain", "k", "entries")

    def __init__(self, domain, codomain, entries, k=1):
        e = np.array(entries, dtype=complex)
        if e.shape != (codomain.dim, domain.dim):
            raise ValueError(f"shape {e.shape} does not match "
                             f"({codomain.dim}, {domain.dim})")
        self.domain = domain
        self.codomain = codomain
        self.entries = e
        self.k = int(k)

    @property
    def shape(self):
        return self.entries.shape

    def apply(self, f):
        if f.space != self.domain:
            raise ValueError("element is not in the operator's domain")
        return SpaceElement(self.codomain, self.entries @ f.coords)

    def __call__(self, f):
        return self.apply(f)

    @property
    def H(self):
        return OperatorMatrix(self.codomain, self.domain, self.entries.conj().T, self.k)

    def norm(self):
        return float(np.linalg.norm(self.entries))

    def _compatible(self, other):
        if self.domain != other.domain or self.codomain != other.codomain:
            raise ValueError("operators act between different spaces")

    def __add__(self, other):
        self._compatible(other)
        return OperatorMatrix(self.domain, self.codomain,
                              self.entries + other.entries, self.k)

    def __sub__(self, other):
        self._compatible(other)
        return OperatorMatrix(self.domain, self.codomain,
                              self.entries - other.entries, self.k)

    def __neg__(self):
        return OperatorMatrix(self.domain, self.codomain, -self.entries, self.k)

    def __mul__(self, scalar):
        return OperatorMatrix(self.domain, self.codomain,
                              self.entries * complex(scalar), self.k)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, SpaceElement):
            return self.apply(other)
        if other.codomain != self.domain:
            raise ValueError("cannot compose: spaces do not chain")
        return OperatorMatrix(other.domain, self.codomain,
                              self.entries @ other.entries, self.k * other.k)

    def __pow__(self, n):
        if self.domain != self.codomain:
            raise ValueError("powers need domain == codomain")
        return OperatorMatrix(self.domain, self.domain,
                              np.linalg.matrix_power(self.entries, n), self.k ** n)

    def __repr__(self):
        return (f"OperatorMatrix({self.codomain.dim}x{self.domain.dim}, k={self.k})\n"
                f"{np.array2string(self.entries, precision=4, suppress_small=True)}")

    def to_dict(self):
        rows, cols = self.entries.shape
        return {"rows": rows, "cols": cols, "k": self.k,
                "entries": [[float(c.real), float(c.imag)]
                            for c in self.entries.reshape(-1)]}

    @classmethod
    def from_dict(cls, d, domain, codomain):
        e = np.array([complex(re, im) for re, im in d["entries"]])
        return cls(domain, codomain, e.reshape(d["rows"], d["cols"]), d["k"])


def identity(space):
    return OperatorMatrix(space, space, np.eye(space.dim))


def slant_compression(phi, dom, cod, k=1):
    """Matrix of ``f -> P_beta W_k(phi f)`` from ``dom = K_alpha`` to ``cod = K_beta``.

    The products ``phi * e_j`` are formed without truncation, so the only
    approximation is the band limit of the basis functions themselves.
    """
    if k < 1:
        raise ValueError("slant order k must be >= 1")
    if phi.band < max(dom.band, cod.band):
        raise ValueError(f"symbol band {phi.band} is smaller than the space bands")
    Mp = phi.band
    ncod = cod.band + 1
    m = np.arange(ncod)
    cols = []
    for row in dom.basis_matrix:
        prod = convolve_full(phi.coeffs, row)   # frequencies -Mp .. Mp + dom.band
        idx = k * m + Mp
        valid = idx < prod.size
        vals = np.zeros(ncod, dtype=complex)
        vals[valid] = prod[idx[valid]]
        cols.append(vals)
    W = np.column_stack(cols)
    entries = np.conj(cod.basis_matrix) @ W
    return OperatorMatrix(dom, cod, entries, k)


def truncated_toeplitz(phi, dom, cod):
    """``A_phi^{alpha,beta} f = P_beta(phi f)``: the ``k = 1`` compression."""
    return slant_compression(phi, dom, cod, 1)


def compressed_shift(space):
    """``S_alpha``, the compression of multiplication by ``z``."""
    return truncated_toeplitz(CircleFunction.monomial(1, space.band), space, space)


def compressed_shift_pow(space, m):
    """``S_alpha^m`` assembled directly as ``A_{z^m}``."""
    if m < 0:
        raise ValueError("power must be nonnegative")
    if m == 0:
        return identity(space)
    return truncated_toeplitz(CircleFunction.monomial(m, space.band), space, space)


def compressed_shift_adjoint_pow(space, m):
    """``(S_alpha^*)^m`` assembled directly as ``A_{conj(z)^m}``."""
    if m < 0:
        raise ValueError("power must be nonnegative")
    if m == 0:
        return identity(space)
    return truncated_toeplitz(CircleFunction.monomial(-m, space.band), space, space)


def shift_pow_by_formula(space, m, adjoint=False):
    """``S_alpha^m`` (or its adjoint power) from the explicit kernel correction.

    Forward:  ``z^m f - sum_j <f, kt_{0,j}> / j! * alpha z^{m-1-j}``.
    Adjoint:  ``conj(z)^m f - sum_j <f, k_{0,j}> / j! * conj(z)^{m-j}``.
    Each column is formed as a circle function and read back in coordinates.
    """
    M = space.band
    if adjoint:
        probes = [kernel(space, 0, j) for j in range(m)]
        corrections = [CircleFunction.monomial(-(m - j), M) for j in range(m)]
        lead = -m
    else:
        probes = [conjugate_kernel(space, 0, j) for j in range(m)]
        corrections = [shift(space.alpha_fn, m - 1 - j) for j in range(m)]
        lead = m
    cols = []
    for j in range(space.dim):
        e = space.unit(j)
        g = shift(space.basis[j], lead)
        for i in range(m):
            g = g - corrections[i] * (e.inner(probes[i]) / math.factorial(i))
        cols.append(project(space, g).coords)
    return OperatorMatrix(space, space, np.column_stack(cols))


def rank_one(u, v, domain=None, codomain=None):
    """``u (x) v : f -> <f, v> u`` with ``u`` in the codomain, ``v`` in the domain."""
    if domain is not None and v.space != domain:
        raise ValueError("v must belong to the domain space")
    if codomain is not None and u.space != codomain:
        raise ValueError("u must belong to the codomain space")
    return OperatorMatrix(v.space, u.space, np.outer(u.coords, np.conj(v.coords)))


def monomial_slant_matrix(coeff_of, k, rows, cols):
    """Reference matrix ``[a_{k i - j}]`` for ``0 <= i < rows``, ``0 <= j < cols``."""
    return np.array([[coeff_of(k * i - j) for j in range(cols)] for i in range(rows)],
                    dtype=complex)
