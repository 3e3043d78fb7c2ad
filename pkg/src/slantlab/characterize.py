"""Membership, symbol recovery and intertwining tests for slant compressions.

An operator ``U : K_alpha -> K_beta`` is a compressed ``k``-th order slant
Toeplitz operator exactly when its defect ``U - S_beta^* U S_alpha^k``
(variant ``"A"``) or ``U - S_beta U (S_alpha^*)^k`` (variant ``"B"``) is a sum
of rank-one terms built on reproducing or conjugate kernels at the origin.
The tests below decide this numerically with a relative threshold
``tol * (1 + ||U||_F)``.
"""

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from .circle import (CircleFunction, conj_fn, multiply, shift, slant_w,
                     slant_w_adjoint)
from .inner import compose_zk, gcd_inner, quotient, to_circle_fn
from .model_space import build, conjugate_kernel, kernel, project
from .operators import (compressed_shift, compressed_shift_adjoint_pow,
                        compressed_shift_pow, rank_one, slant_compression)

__all__ = [
    "DEFAULT_TOL",
    "SEPARATION",
    "NotAMemberError",
    "PreconditionError",
    "DefectDecomposition",
    "CanonicalSymbol",
    "shift_invariance_residual",
    "shift_invariance_test",
    "membership_test",
    "symbol_from_defect",
    "canonical_symbol",
    "zero_test",
    "zero_directions",
    "intertwine_coset_basis",
    "intertwine_residual",
    "intertwine_test",
    "commutator_formula_check",
    "verdict",
]

log = logging.getLogger(__name__)

DEFAULT_TOL = 1e-8
# negative cases must clear this relative residual
SEPARATION = 1e-4


class NotAMemberError(ValueError):
    """The operator's defect is not of the required rank-one form."""


class PreconditionError(ValueError):
    """A standing hypothesis (dimension bound, divisibility) is violated."""


def verdict(name, residual, tol, passed, witness=None):
    """Verdict record in the JSON layout used by reports."""
    out = {"test": name, "residual": float(residual), "tol": float(tol),
           "pass": bool(passed)}
    if witness is not None:
        out["witness"] = witness
    return out


def _threshold(U, tol):
    return tol * (1.0 + U.norm())


def _orthonormal_columns(vectors, rtol=1e-10):
    A = np.column_stack(vectors)
    u, s, _ = np.linalg.svd(A, full_matrices=False)
    if s.size == 0 or s[0] == 0:
        return u[:, :0]
    return u[:, :int(np.sum(s > rtol * s[0]))]


def _conj_kernels(space, count):
    return [conjugate_kernel(space, 0, j) for j in range(count)]


def _kernels(space, count):
    return [kernel(space, 0, j) for j in range(count)]


# -- shift invariance -----------------------------------------------------

def shift_invariance_residual(U, k):
    """``||P_{N-perp} T P_{M-perp}||_F`` with ``T = U - S_beta^* U S_alpha^k``.

    ``M`` is spanned by the conjugate kernels ``kt_{0,j}^alpha`` (``j < k``)
    and ``N`` by ``kt_0^beta``.  The projectors come from an SVD, so linearly
    dependent kernels are fine.
    """
    Ka, Kb = U.domain, U.codomain
    Sa_k = compressed_shift_pow(Ka, k).entries
    Sb = compressed_shift(Kb).entries
    T = U.entries - Sb.conj().T @ U.entries @ Sa_k
    Qm = _orthonormal_columns([v.coords for v in _conj_kernels(Ka, k)])
    Qn = _orthonormal_columns([conjugate_kernel(Kb, 0).coords])
    Pm = np.eye(Ka.dim) - Qm @ Qm.conj().T
    Pn = np.eye(Kb.dim) - Qn @ Qn.conj().T
    return float(np.linalg.norm(Pn @ T @ Pm))


def shift_invariance_test(U, k, tol=DEFAULT_TOL):
    """True iff ``<U S^k f, S g> = <U f, g>`` whenever both shifts stay in the spaces."""
    return shift_invariance_residual(U, k) <= _threshold(U, tol)


# -- defect decompositions ------------------------------------------------

@dataclass
class DefectDecomposition:
    """Least-squares split of a defect into kernel rank-one terms.

    Variant ``"A"``: ``U - S_b^* U S_a^k = kt_0^b (x) chi + sum_j psi_j (x) kt_{0,j}^a``.
    Variant ``"B"``: ``U - S_b U (S_a^*)^k = k_0^b (x) chi + sum_j psi_j (x) k_{0,j}^a``.
    """

    variant: str
    chi: object
    psis: list
    residual: float
    k: int
    tol: float = DEFAULT_TOL
    operator_norm: float = 0.0
    defect: object = field(default=None, repr=False)

    @property
    def threshold(self):
        return self.tol * (1.0 + self.operator_norm)

    @property
    def member(self):
        return self.residual <= self.threshold

    def reconstruction(self):
        """The rank-one sum, as an :class:`OperatorMatrix`."""
        Ka, Kb = self.chi.space, self.psis[0].space if self.psis else None
        if self.variant == "A":
            lead = conjugate_kernel(Kb, 0)
            tails = _conj_kernels(Ka, self.k)
        else:
            lead = kernel(Kb, 0)
            tails = _kernels(Ka, self.k)
        out = rank_one(lead, self.chi)
        for psi, t in zip(self.psis, tails):
            out = out + rank_one(psi, t)
        return out

    def to_dict(self):
        return {"variant": self.variant, "k": self.k,
                "residual": self.residual, "tol": self.tol,
                "chi": self.chi.to_dict(),
                "psis": [p.to_dict() for p in self.psis]}


def defect(U, k, variant="A"):
    """The defect matrix of ``U`` for the chosen variant."""
    Ka, Kb = U.domain, U.codomain
    Sb = compressed_shift(Kb).entries
    if variant == "A":
        return U.entries - Sb.conj().T @ U.entries @ compressed_shift_pow(Ka, k).entries
    if variant == "B":
        return U.entries - Sb @ U.entries @ compressed_shift_adjoint_pow(Ka, k).entries
    raise ValueError(f"unknown variant {variant!r}")


def _fit_rank_one_model(D, lead, tails):
    """Min-norm ``x, y_j`` with ``D ~ lead x^T + sum_j y_j conj(tails_j)^T``.

    Returns ``(x, [y_j], residual)``.  ``x`` is the conjugate of the
    right-hand vector ``chi`` of the rank-one term ``lead (x) chi``.
    """
    nb, na = D.shape
    blocks = [np.kron(lead.reshape(-1, 1), np.eye(na))]
    for t in tails:
        blocks.append(np.kron(np.eye(nb), np.conj(t).reshape(-1, 1)))
    G = np.hstack(blocks)
    d = D.reshape(-1)
    sol, *_ = np.linalg.lstsq(G, d, rcond=1e-10)
    residual = float(np.linalg.norm(G @ sol - d))
    x = sol[:na]
    ys = [sol[na + j * nb:na + (j + 1) * nb] for j in range(len(tails))]
    return x, ys, residual


def membership_test(U, k, variant="A", tol=DEFAULT_TOL):
    """Decide ``U in S_k(alpha, beta)`` by fitting the defect.

    Returns a :class:`DefectDecomposition`; its ``member`` flag is the verdict.
    The fit is the minimal-norm least-squares solution, so the returned
    ``chi`` and ``psis`` are one valid choice among many.
    """
    Ka, Kb = U.domain, U.codomain
    D = defect(U, k, variant)
    if variant == "A":
        lead = conjugate_kernel(Kb, 0).coords
        tails = [v.coords for v in _conj_kernels(Ka, k)]
    else:
        lead = kernel(Kb, 0).coords
        tails = [v.coords for v in _kernels(Ka, k)]
    x, ys, residual = _fit_rank_one_model(D, lead, tails)
    return DefectDecomposition(
        variant=variant,
        chi=Ka.element(np.conj(x)),
        psis=[Kb.element(y) for y in ys],
        residual=residual,
        k=k,
        tol=tol,
        operator_norm=U.norm(),
        defect=D,
    )


def symbol_from_defect(d, band=None):
    """A symbol ``phi`` with ``U_phi = U`` from a member decomposition.

    Variant B uses ``phi = conj(chi) + sum_j j! (W_k^* psi_j) conj(z)^j``;
    variant A uses
    ``phi = (W_k^* beta) conj(z)^k conj(chi) + conj(alpha) sum_j j! (W_k^* psi_j) z^{j+1}``.
    The symbol is returned at ``band`` (default ``k`` times the space band).
    """
    if not d.member:
        raise NotAMemberError(f"defect residual {d.residual:.3e} exceeds "
                              f"{d.threshold:.3e}; no symbol exists")
    k = d.k
    Ka = d.chi.space
    Kb = d.psis[0].space
    if band is None:
        band = k * max(Ka.band, Kb.band)
    chi_bar = conj_fn(d.chi.to_function(band))
    lifted = [slant_w_adjoint(p.to_function(), k, band) * math.factorial(j)
              for j, p in enumerate(d.psis)]
    if d.variant == "B":
        phi = chi_bar
        for j, g in enumerate(lifted):
            phi = phi + shift(g, -j)
        return phi
    wb = to_circle_fn(compose_zk(Kb.alpha, k), band)
    phi = multiply(wb, shift(chi_bar, -k))
    acc = CircleFunction.zeros(band)
    for j, g in enumerate(lifted):
        acc = acc + shift(g, j + 1)
    alpha_bar = conj_fn(to_circle_fn(Ka.alpha, band))
    return phi + multiply(alpha_bar, acc)


# -- canonical symbols ----------------------------------------------------

@dataclass
class CanonicalSymbol:
    """Orthogonal representative ``conj(phi_minus) + z chi_plus`` of a symbol.

    ``phi_minus`` lives in ``K_alpha``, ``chi_plus`` in ``K_{W_k^* beta}`` and
    ``parts[j-1] = W_k(conj(z)^{j-1} chi_plus)`` in ``K_beta`` for ``j = 1..k``.
    When ``reduced`` is set the component along the residual zero-symbol
    directions ``conj(z)^j W_k^* beta`` has been removed, which makes the
    representative unique for ``k <= dim K_alpha``.
    """

    phi_minus: object
    chi_plus: object
    parts: list
    k: int
    reduced: bool = False

    def symbol(self, band=None):
        band = band or self.chi_plus.space.band
        pm = conj_fn(self.phi_minus.to_function(band))
        return pm + shift(self.chi_plus.to_function(band), 1)

    def parts_norm(self):
        return math.hypot(self.phi_minus.norm(), self.chi_plus.norm())

    def chi_from_parts(self, band=None):
        """``sum_j z^{j-1} W_k^* phi_j`` rebuilt from the parts."""
        band = band or self.chi_plus.space.band
        k = self.k
        acc = CircleFunction.zeros(band)
        for j, p in enumerate(self.parts):
            f = p.to_function()
            f = f.with_band(band // k)
            acc = acc + shift(slant_w_adjoint(f, k, band), j)
        return acc

    def to_dict(self):
        return {"k": self.k, "reduced": self.reduced,
                "phi_minus": self.phi_minus.to_dict(),
                "chi_plus": self.chi_plus.to_dict(),
                "parts": [p.to_dict() for p in self.parts]}


def _canonical_coords(phi, Ka, Kw):
    c = np.array(phi.coeffs)
    c[phi.band + 1:] = 0
    nonpos = CircleFunction(c, phi.band)
    pos = phi - nonpos
    phi_minus = Ka.coords_of(conj_fn(nonpos))
    chi = Kw.coords_of(shift(pos, -1))
    return phi_minus, chi


def zero_directions(alpha, beta, k, band):
    """Canonical coordinates of ``conj(z)^j W_k^* beta`` for ``j < k``.

    Each vector is ``[conj(phi_minus), chi_plus]``: the symbol
    ``conj(phi_minus) + z chi_plus`` is complex-linear (and isometric) in
    these coordinates.  The vectors span the representatives that still give
    the zero operator.
    """
    Ka = build(alpha, band)
    wb_inner = compose_zk(beta, k)
    Kw = build(wb_inner, band)
    wb = to_circle_fn(wb_inner, band)
    out = []
    for j in range(k):
        pm, ch = _canonical_coords(shift(wb, -j), Ka, Kw)
        out.append(np.concatenate([np.conj(pm), ch]))
    return out


def canonical_symbol(phi, alpha, beta, k, band=None, reduce=False):
    """Split ``phi`` into ``(phi_minus, chi_plus, parts)``.

    ``phi_minus = P_alpha(conj of the nonpositive-frequency part)`` and
    ``chi_plus = P_{W_k^* beta}(conj(z) * positive-frequency part)``; the
    operator ``U_phi`` only depends on these two pieces.
    """
    band = band or min(phi.band, 256)
    Ka = build(alpha, band)
    Kb = build(beta, band)
    Kw = build(compose_zk(beta, k), band)
    pm, ch = _canonical_coords(phi, Ka, Kw)
    if reduce:
        Q = _orthonormal_columns(zero_directions(alpha, beta, k, band))
        v = np.concatenate([np.conj(pm), ch])
        v = v - Q @ (Q.conj().T @ v)
        pm, ch = np.conj(v[:Ka.dim]), v[Ka.dim:]
    chi = Kw.element(ch)
    chi_fn = chi.to_function()
    parts = [project(Kb, slant_w(shift(chi_fn, -(j - 1)), k)) for j in range(1, k + 1)]
    return CanonicalSymbol(Ka.element(pm), chi, parts, k, reduce)


def zero_test(phi, alpha, beta, k, tol=DEFAULT_TOL, band=None):
    """True iff ``U_phi^{alpha,beta} = 0`` at slant order ``k``.

    The verdict comes from the reduced canonical parts.  It is cross-checked
    against the Frobenius norm of the assembled operator and a mismatch is
    logged.
    """
    if k > alpha.degree:
        raise PreconditionError(f"zero-symbol law needs k <= dim K_alpha "
                                f"({k} > {alpha.degree})")
    band = band or min(phi.band, 256)
    scale = tol * (1.0 + phi.norm())
    cs = canonical_symbol(phi, alpha, beta, k, band, reduce=True)
    by_parts = cs.parts_norm() <= scale
    U = slant_compression(phi, build(alpha, band), build(beta, band), k)
    by_operator = U.norm() <= scale
    if by_parts != by_operator:
        log.warning("zero_test disagreement: parts %.3e, operator %.3e, threshold %.3e",
                    cs.parts_norm(), U.norm(), scale)
    return by_parts


# -- intertwining ---------------------------------------------------------

def intertwine_coset_basis(alpha, beta, k, direction="shift", band=256):
    """Spanning symbols for operators with ``S_b U = U S_a^k`` or ``S_b^* U = U (S_a^*)^k``.

    With ``g = gcd(alpha, W_k^* beta)`` and ``b`` running over a basis of
    ``K_g``: the shift direction gives ``conj(z)^{k-1} (W_k^* beta / g) b``,
    the backshift direction gives ``conj(alpha) z b``.  A constant gcd means
    only the zero operator intertwines and the list is empty.
    """
    if k > alpha.degree:
        raise PreconditionError(f"needs k <= dim K_alpha ({k} > {alpha.degree})")
    wb = compose_zk(beta, k)
    g = gcd_inner(alpha, wb)
    if g.is_constant():
        return []
    Kg = build(g, band)
    if direction == "shift":
        q = to_circle_fn(quotient(wb, g), band)
        return [shift(multiply(q, b), -(k - 1)) for b in Kg.basis]
    if direction == "backshift":
        abar = conj_fn(to_circle_fn(alpha, band))
        return [multiply(abar, shift(b, 1)) for b in Kg.basis]
    raise ValueError(f"unknown direction {direction!r}")


def intertwine_residual(U, k, direction="shift"):
    """Frobenius norm of ``S_b U - U S_a^k`` (or the backshift analogue)."""
    Ka, Kb = U.domain, U.codomain
    Sb = compressed_shift(Kb).entries
    if direction == "shift":
        r = Sb @ U.entries - U.entries @ compressed_shift_pow(Ka, k).entries
    elif direction == "backshift":
        r = Sb.conj().T @ U.entries - U.entries @ compressed_shift_adjoint_pow(Ka, k).entries
    else:
        raise ValueError(f"unknown direction {direction!r}")
    return float(np.linalg.norm(r))


def intertwine_test(U, k, direction="shift", tol=DEFAULT_TOL):
    return intertwine_residual(U, k, direction) <= _threshold(U, tol)


def commutator_formula_check(phi, alpha, beta, k, band=256):
    """Residuals of the two commutator identities for ``U = U_phi^{alpha,beta}``.

    (a) ``S_b U - U S_a^k = sum_j P_b W_k(alpha phi z^{k-1-j}) / j! (x) kt_{0,j}^a
    - k_0^b (x) P_a(conj(z)^k conj(phi))``

    (b) ``S_b^* U - U (S_a^*)^k = sum_j P_b W_k(phi conj(z)^{k-j}) / j! (x) k_{0,j}^a
    - kt_0^b (x) P_a(conj(phi) W_k^* beta)``

    Left sides come from operator matrices, right sides from circle-function
    arithmetic.  Returns ``(residual_a, residual_b)``.
    """
    Ka = build(alpha, band)
    Kb = build(beta, band)
    U = slant_compression(phi, Ka, Kb, k)
    Sb = compressed_shift(Kb).entries
    lhs_a = Sb @ U.entries - U.entries @ compressed_shift_pow(Ka, k).entries
    lhs_b = Sb.conj().T @ U.entries - U.entries @ compressed_shift_adjoint_pow(Ka, k).entries

    work = phi.band + k * band + k
    f = phi.with_band(work)
    fbar = conj_fn(f)
    alpha_phi = multiply(to_circle_fn(alpha, work), f)
    wb = to_circle_fn(compose_zk(beta, k), work)

    rhs_a = -rank_one(kernel(Kb, 0), project(Ka, shift(fbar, -k))).entries
    rhs_b = -rank_one(conjugate_kernel(Kb, 0), project(Ka, multiply(fbar, wb))).entries
    for j in range(k):
        c = 1.0 / math.factorial(j)
        ua = project(Kb, slant_w(shift(alpha_phi, k - 1 - j), k)) * c
        rhs_a = rhs_a + rank_one(ua, conjugate_kernel(Ka, 0, j)).entries
        ub = project(Kb, slant_w(shift(f, -(k - j)), k)) * c
        rhs_b = rhs_b + rank_one(ub, kernel(Ka, 0, j)).entries
    return float(np.linalg.norm(lhs_a - rhs_a)), float(np.linalg.norm(lhs_b - rhs_b))
