"""Products of compressed slant Toeplitz operators.

Two families of results are implemented.

* Analytic / co-analytic symbols under divisibility hypotheses: the product
  ``U_phi^{beta,gamma} U_psi^{alpha,beta}`` of orders ``m`` and ``k`` is a
  compression of order ``km`` and its symbol has several closed forms
  (:func:`product_analytic`, :func:`product_antianalytic`,
  :func:`product_mixed`).
* General ``L^2`` symbols: membership of ``AB`` is decided by whether a
  certain finite-rank operator ``L`` splits as
  ``k_0^gamma (x) upsilon + sum_p tau_p (x) k_{0,p}^alpha``; the symbol ``xi``
  is then assembled term by term (:func:`product_membership_L2`).

Every symbol is checked by rebuilding its compression and comparing with the
matrix product.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .characterize import (DEFAULT_TOL, PreconditionError, _fit_rank_one_model,
                           canonical_symbol, membership_test, symbol_from_defect)
from .circle import (CircleFunction, conj_fn, multiply, riesz_project, shift,
                     slant_w, slant_w_adjoint)
from .inner import compose_zk, divides, to_circle_fn
from .model_space import build, conjugate_kernel, kernel, project
from .operators import compressed_shift, slant_compression

__all__ = [
    "ProductReport",
    "product_analytic",
    "product_antianalytic",
    "product_mixed",
    "product_membership_L2",
    "product_corollary_special",
]


@dataclass
class ProductReport:
    """Outcome of a product computation.

    ``residuals[name]`` is the Frobenius distance between the compression of
    ``symbols[name]`` at order ``order`` and the matrix product (or, for
    entries without a symbol, the size of the quantity that should vanish).
    """

    member: bool
    order: int
    symbols: dict = field(default_factory=dict)
    residuals: dict = field(default_factory=dict)
    tol: float = DEFAULT_TOL
    product_norm: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def threshold(self):
        return self.tol * (1.0 + self.product_norm)

    def passed(self, name):
        return self.residuals[name] <= self.threshold

    def all_passed(self, names=None):
        names = self.symbols if names is None else names
        return all(self.passed(n) for n in names)

    def to_dict(self):
        return {"member": self.member, "order": self.order, "tol": self.tol,
                "residuals": {k: float(v) for k, v in self.residuals.items()},
                "symbols": {k: v.to_dict() for k, v in self.symbols.items()},
                "details": self.details}


def _require(cond, message):
    if not cond:
        raise PreconditionError(message)


def _require_analytic(f, name):
    if not f.is_analytic(1e-12 * (1.0 + f.norm())):
        raise PreconditionError(f"{name} must be analytic (no negative frequencies)")


def _reconstruction(symbols, U, Ka, Kc, order):
    return {name: (slant_compression(s, Ka, Kc, order) - U).norm()
            for name, s in symbols.items()}


def _spaces(alpha, beta, gamma, band):
    return build(alpha, band), build(beta, band), build(gamma, band)


# -- analytic symbols -----------------------------------------------------

def product_analytic(phi, psi, alpha, beta, gamma, k=1, m=1, band=256, tol=DEFAULT_TOL):
    """``U = U_phi^{beta,gamma} U_psi^{alpha,beta}`` for analytic ``phi, psi``.

    Requires ``W_m^* gamma <= beta`` and ``W_k^* beta <= alpha``.  The symbol
    ``eta`` of ``U`` at order ``km`` is computed three ways:

    ``eta_kernel_sum``
        ``sum_j (1/j!) (W_{km}^* U k_{0,j}^alpha) conj(z)^j``
    ``eta_projection_form``
        ``sum_j W_{km}^* W_{km} P_{W_{km}^* gamma}((W_k^* phi) P_{W_k^* beta}(psi z^j)) conj(z)^j``
    ``eta_cauchy_form``
        ``(W_{km}^* gamma) conj(z)^{km} conj(P(conj(psi) P_{W_k^* beta}(conj(W_k^* phi) conj(z)^{km} W_{km}^* gamma)))``
    """
    _require_analytic(phi, "phi")
    _require_analytic(psi, "psi")
    wg = compose_zk(gamma, m)
    wb = compose_zk(beta, k)
    _require(divides(wg, beta), "hypothesis W_m^* gamma <= beta fails")
    _require(divides(wb, alpha), "hypothesis W_k^* beta <= alpha fails")
    Ka, Kb, Kg = _spaces(alpha, beta, gamma, band)
    km = k * m
    N = km * band
    U = slant_compression(phi.with_band(max(phi.band, N)), Kb, Kg, m) @ \
        slant_compression(psi.with_band(max(psi.band, N)), Ka, Kb, k)

    # kernel-sum form
    eta1 = CircleFunction.zeros(N)
    for j in range(km):
        g = U.apply(kernel(Ka, 0, j)).to_function()
        eta1 = eta1 + shift(slant_w_adjoint(g, km, N), -j) / math.factorial(j)

    # projection form
    f1 = slant_w_adjoint(phi.with_band(N // k), k, N)
    psiN = psi.with_band(N)
    Kwb = build(wb, N)
    Kwg = build(compose_zk(gamma, km), N)
    eta2 = CircleFunction.zeros(N)
    for j in range(km):
        inner = Kwb.function(Kwb.coords_of(shift(psiN, j)))
        F = Kwg.function(Kwg.coords_of(multiply(f1, inner)))
        G = slant_w_adjoint(slant_w(F, km).with_band(band), km, N)
        eta2 = eta2 + shift(G, -j)

    # Cauchy form
    g_fn = to_circle_fn(compose_zk(gamma, km), N)
    h = multiply(conj_fn(f1), shift(g_fn, -km))
    h = Kwb.function(Kwb.coords_of(h))
    h = riesz_project(multiply(conj_fn(psiN), h))
    eta3 = multiply(g_fn, shift(conj_fn(h), -km))

    symbols = {"eta_kernel_sum": eta1, "eta_projection_form": eta2,
               "eta_cauchy_form": eta3}
    return ProductReport(
        member=membership_test(U, km, "B", tol).member,
        order=km, symbols=symbols,
        residuals=_reconstruction(symbols, U, Ka, Kg, km),
        tol=tol, product_norm=U.norm(),
        details={"k": k, "m": m})


def product_antianalytic(phi, psi, alpha, beta, gamma, k=1, m=1, band=256, tol=DEFAULT_TOL):
    """``U = U_{conj(phi)}^{beta,gamma} U_{conj(psi)}^{alpha,beta}`` for analytic ``phi, psi``.

    ``phi`` and ``psi`` are passed as the analytic functions; the operators
    use their conjugates.  Requires ``alpha <= W_k^* beta`` and
    ``beta <= W_m^* gamma``.  The symbol ``zeta`` is computed as

    ``zeta_kernel_sum``
        ``conj(alpha) sum_j (1/j!) (W_{km}^* U kt_{0,j}^alpha) z^{j+1}``
    ``zeta_projection_form``
        ``conj(alpha) sum_j W_{km}^* W_{km} P_{W_{km}^* gamma}(conj(W_k^* phi) conj(psi) P_alpha(alpha conj(z)^{j+1})) z^{j+1}``
    ``zeta_closed_form``
        ``conj(P_alpha(psi W_k^* phi))``
    """
    _require_analytic(phi, "phi")
    _require_analytic(psi, "psi")
    wb = compose_zk(beta, k)
    wg = compose_zk(gamma, m)
    _require(divides(alpha, wb), "hypothesis alpha <= W_k^* beta fails")
    _require(divides(beta, wg), "hypothesis beta <= W_m^* gamma fails")
    Ka, Kb, Kg = _spaces(alpha, beta, gamma, band)
    km = k * m
    N = km * band
    phiN, psiN = phi.with_band(N), psi.with_band(N)
    U = slant_compression(conj_fn(phiN), Kb, Kg, m) @ \
        slant_compression(conj_fn(psiN), Ka, Kb, k)
    alpha_fn = to_circle_fn(alpha, N)
    abar = conj_fn(alpha_fn)

    acc = CircleFunction.zeros(N)
    for j in range(km):
        g = U.apply(conjugate_kernel(Ka, 0, j)).to_function()
        acc = acc + shift(slant_w_adjoint(g, km, N), j + 1) / math.factorial(j)
    zeta1 = multiply(abar, acc)

    f1 = slant_w_adjoint(phi.with_band(N // k), k, N)
    KaN = build(alpha, N)
    Kwg = build(compose_zk(gamma, km), N)
    weight = multiply(conj_fn(f1), conj_fn(psiN))
    acc = CircleFunction.zeros(N)
    for j in range(km):
        pa = KaN.function(KaN.coords_of(shift(alpha_fn, -(j + 1))))
        F = Kwg.function(Kwg.coords_of(multiply(weight, pa)))
        G = slant_w_adjoint(slant_w(F, km).with_band(band), km, N)
        acc = acc + shift(G, j + 1)
    zeta2 = multiply(abar, acc)

    zeta3 = conj_fn(KaN.function(KaN.coords_of(multiply(psiN, f1))))

    symbols = {"zeta_kernel_sum": zeta1, "zeta_projection_form": zeta2,
               "zeta_closed_form": zeta3}
    return ProductReport(
        member=membership_test(U, km, "B", tol).member,
        order=km, symbols=symbols,
        residuals=_reconstruction(symbols, U, Ka, Kg, km),
        tol=tol, product_norm=U.norm(),
        details={"k": k, "m": m})


_MIXED_CASES = {
    # case: (family, truncated factor)
    "a": ("analytic", "left"),
    "b": ("analytic", "right"),
    "c": ("antianalytic", "left"),
    "d": ("antianalytic", "right"),
}


def product_mixed(case, phi, psi, alpha, beta, gamma, order, band=256, tol=DEFAULT_TOL):
    """Products where one factor is a truncated Toeplitz operator.

    ``case`` selects the configuration:

    * ``"a"``: ``A_phi^{beta,gamma} U_psi^{alpha,beta}``, needs ``gamma <= beta`` and ``W_k^* beta <= alpha``
    * ``"b"``: ``U_phi^{beta,gamma} A_psi^{alpha,beta}``, needs ``W_m^* gamma <= beta <= alpha``
    * ``"c"``: ``A_{conj phi} U_{conj psi}``, needs ``alpha <= W_k^* beta`` and ``beta <= gamma``
    * ``"d"``: ``U_{conj phi} A_{conj psi}``, needs ``alpha <= beta <= W_m^* gamma``

    ``order`` is the slant order of the non-Toeplitz factor; the product has
    that order.
    """
    if case not in _MIXED_CASES:
        raise ValueError(f"unknown case {case!r}; expected one of a, b, c, d")
    family, toeplitz_side = _MIXED_CASES[case]
    k, m = (order, 1) if toeplitz_side == "left" else (1, order)
    fn = product_analytic if family == "analytic" else product_antianalytic
    report = fn(phi, psi, alpha, beta, gamma, k=k, m=m, band=band, tol=tol)
    report.details["case"] = case
    return report


# -- general L^2 symbols --------------------------------------------------

def _ip(u, v):
    """``<u, v>`` for coordinate vectors."""
    return complex(np.vdot(v, u))


def _outer(u, v):
    return np.outer(u, np.conj(v))


def _canonical_from_operator(T, order):
    d = membership_test(T, order, "B")
    phi = symbol_from_defect(d)
    return canonical_symbol(phi, T.domain.alpha, T.codomain.alpha, order,
                            band=T.domain.band, reduce=True)


def product_membership_L2(A, B, canon_A=None, canon_B=None, tol=DEFAULT_TOL,
                          label="general"):
    """Decide ``AB in S_{km}(alpha, gamma)`` from the canonical symbols of ``A`` and ``B``.

    ``B : K_alpha -> K_beta`` has order ``k = B.k`` and ``A : K_beta -> K_gamma``
    has order ``m = A.k``.  Canonical symbols are derived from the operators
    when not supplied.

    The report contains:

    ``residuals["lhs_vs_defect"]``
        distance between the assembled operator ``L`` and the part of the
        defect ``AB - S_gamma AB (S_alpha^*)^{km}`` that is not already of
        kernel form (an independent check of ``L``).
    ``residuals["lhs_literal_vs_defect"]``
        the same with the Gram coefficients inside ``L`` left unconjugated.
    ``residuals["fit"]``
        least-squares residual of ``L ~ k_0^gamma (x) upsilon + sum_p tau_p (x) k_{0,p}^alpha``.
    ``residuals["xi"]`` / ``residuals["xi_from_defect"]``
        reconstruction errors of the assembled symbol and of the symbol
        read off from the defect of ``AB`` directly.
    """
    k, m = B.k, A.k
    Ka, Kb, Kg = B.domain, B.codomain, A.codomain
    _require(A.domain == Kb, "A's domain must be B's codomain")
    _require(k <= Ka.dim, f"needs k <= dim K_alpha ({k} > {Ka.dim})")
    _require(m <= Kb.dim, f"needs m <= dim K_beta ({m} > {Kb.dim})")
    km = k * m
    N = km * max(Ka.band, Kb.band, Kg.band)
    cA = canon_A or _canonical_from_operator(A, m)
    cB = canon_B or _canonical_from_operator(B, k)
    phi_m = cA.phi_minus.coords            # in K_beta
    psi_m = cB.phi_minus.coords            # in K_alpha
    chi_A = cA.chi_plus.to_function()      # phi_+ = z chi_A
    chi_B = cB.chi_plus.to_function()      # psi_+ = z chi_B

    AB = A @ B
    Ae, Be = A.entries, B.entries
    BH = Be.conj().T
    Sa = compressed_shift(Ka).entries
    Sb = compressed_shift(Kb).entries
    Sg = compressed_shift(Kg).entries
    Sa_pow = [np.linalg.matrix_power(Sa, p) for p in range(km + 1)]
    Sb_pow = [np.linalg.matrix_power(Sb, p) for p in range(m + 1)]

    k0b = kernel(Kb, 0).coords
    kb = [kernel(Kb, 0, j).coords for j in range(m)]
    ktb = [conjugate_kernel(Kb, 0, j).coords for j in range(m)]
    ka = [kernel(Ka, 0, p).coords for p in range(km)]
    k0g = kernel(Kg, 0).coords

    # Z_j = S_gamma P_gamma W_m(conj(z)^{m-j} phi_+)
    Z = [Sg @ project(Kg, slant_w(shift(chi_A, -(m - j - 1)), m)).coords
         for j in range(m)]
    # V_{n,l} = S_beta^{n+1} P_beta W_k(conj(z)^{k-l} psi_+)
    base = [project(Kb, slant_w(shift(chi_B, -(k - l - 1)), k)).coords for l in range(k)]
    V = {(n, l): Sb_pow[n + 1] @ base[l] for n in range(m) for l in range(k)}
    Sk0b = [Sb_pow[n] @ k0b for n in range(m)]
    S_psi = [Sa_pow[k * n] @ psi_m for n in range(m)]

    def lhs(conjugate_gram):
        L = np.zeros((Kg.dim, Ka.dim), dtype=complex)
        for n in range(m):
            L += _outer(Ae @ kb[n], S_psi[n]) / math.factorial(n)
        for j in range(m):
            L -= _outer(Sg @ Ae @ ktb[j], Sa_pow[km] @ BH @ ktb[j]) / math.factorial(j) ** 2
        for j in range(m):
            right = BH @ kb[j]
            for n in range(m):
                c = _ip(Sk0b[n], kb[j])
                right = right - (np.conj(c) if conjugate_gram else c) * S_psi[n]
            L += _outer(Z[j], right) / math.factorial(j)
        return L

    L = lhs(True)
    L_literal = lhs(False)

    # independent route: strip the kernel-form pieces from the defect
    D = AB.entries - Sg @ AB.entries @ Sa_pow[km].conj().T
    X = BH @ phi_m
    for n in range(m):
        X = X - _ip(phi_m, Sk0b[n]) * S_psi[n]
        for l in range(k):
            X = X - _ip(phi_m, V[n, l]) * (Sa_pow[k * n] @ ka[l]) / math.factorial(l)
    Y = {}
    for n in range(m):
        for l in range(k):
            p = k * n + l
            y = Ae @ V[n, l]
            for j in range(m):
                y = y - _ip(V[n, l], kb[j]) * Z[j] / math.factorial(j)
            Y[p] = y / math.factorial(p)
    L_oracle = D - _outer(k0g, X)
    for p in range(km):
        L_oracle -= _outer(Y[p], ka[p])

    x, taus, fit = _fit_rank_one_model(L, k0g, ka)
    upsilon = np.conj(x)
    scale = tol * (1.0 + AB.norm())
    member = fit <= scale
    direct = membership_test(AB, km, "B", tol)

    residuals = {
        "lhs_vs_defect": float(np.linalg.norm(L - L_oracle)),
        "lhs_literal_vs_defect": float(np.linalg.norm(L_literal - L_oracle)),
        "fit": fit,
    }
    symbols = {}
    details = {"k": k, "m": m, "label": label,
               "membership_test_agrees": bool(direct.member == member),
               "membership_test_residual": direct.residual}
    if member:
        xi = _assemble_xi(Ka, Kb, Kg, A, k, m, N, upsilon, taus, phi_m, psi_m,
                          BH, Sa_pow, Sk0b, S_psi, V, Z, ka, kb)
        symbols["xi"] = xi
        if direct.member:
            symbols["xi_from_defect"] = symbol_from_defect(direct, N)
        residuals.update(_reconstruction(symbols, AB, Ka, Kg, km))
        details["upsilon_norm"] = float(np.linalg.norm(upsilon))
        details["tau_norms"] = [float(np.linalg.norm(t)) for t in taus]
    return ProductReport(member=member, order=km, symbols=symbols,
                         residuals=residuals, tol=tol, product_norm=AB.norm(),
                         details=details)


def _assemble_xi(Ka, Kb, Kg, A, k, m, N, upsilon, taus, phi_m, psi_m, BH,
                 Sa_pow, Sk0b, S_psi, V, Z, ka, kb):
    """Symbol of ``AB`` term by term.

    ``xi = conj(upsilon) + conj(B^* phi_-) - sum_n <S^n k_0, phi_-> conj(S^{kn} psi_-)
    - sum_{n,l} (1/l!) <V_{n,l}, phi_-> conj(S^{kn} k_{0,l})
    + sum_p p! (W_{km}^* tau_p) conj(z)^p
    + sum_{n,l} (W_{km}^* A V_{n,l}) conj(z)^{kn+l}
    - sum_{n,l,j} (1/j!) <V_{n,l}, k_{0,j}> (W_{km}^* Z_j) conj(z)^{kn+l}``
    """
    km = k * m

    def fa(coords):
        return conj_fn(Ka.function(coords, N))

    def lift(space, coords):
        return slant_w_adjoint(space.function(coords), km, N)

    xi = fa(upsilon) + fa(BH @ phi_m)
    for n in range(m):
        xi = xi - fa(S_psi[n]) * _ip(Sk0b[n], phi_m)
        for l in range(k):
            xi = xi - fa(Sa_pow[k * n] @ ka[l]) * (_ip(V[n, l], phi_m) / math.factorial(l))
    for p, t in enumerate(taus):
        xi = xi + shift(lift(Kg, t), -p) * math.factorial(p)
    for n in range(m):
        for l in range(k):
            p = k * n + l
            term = lift(Kg, A.entries @ V[n, l])
            for j in range(m):
                term = term - lift(Kg, Z[j]) * (_ip(V[n, l], kb[j]) / math.factorial(j))
            xi = xi + shift(term, -p)
    return xi


def product_corollary_special(A, B, canon_A=None, canon_B=None, tol=DEFAULT_TOL):
    """The general ``L^2`` product test when one factor is truncated Toeplitz.

    Either ``A`` has order 1 (then ``AB`` has the order of ``B``) or ``B``
    has order 1.  The index ranges collapse accordingly.
    """
    if A.k != 1 and B.k != 1:
        raise PreconditionError("one factor must be truncated Toeplitz (order 1)")
    label = "left_toeplitz" if A.k == 1 else "right_toeplitz"
    return product_membership_L2(A, B, canon_A, canon_B, tol, label=label)
