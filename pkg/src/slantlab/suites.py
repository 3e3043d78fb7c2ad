"""Named verification suites.

Each property function draws random instances from a generator, checks one
identity or equivalence, and returns a list of records::

    {"suite": ..., "property": ..., "trial": i, "residual": r, "tol": t, "pass": bool, ...}

Suites group properties and are what ``slantlab verify`` runs; their names
are the command-line identifiers.  Every suite seeds its own generator from
``(seed, crc32(suite name))``, so a suite's output does not depend on which
other suites ran before it.  Trials run sequentially in index order.
"""

import math
import zlib
from dataclasses import dataclass

import numpy as np

from . import characterize as ch
from . import products as pr
from .circle import CircleFunction, conj_fn, shift
from .inner import FiniteBlaschke, compose_zk, gcd_inner, monomial_inner
from .model_space import build, conjugate_kernel, kernel
from .operators import (compressed_shift, compressed_shift_adjoint_pow,
                        compressed_shift_pow, identity, monomial_slant_matrix,
                        rank_one, slant_compression)
from .sampling import (analytic_chain, antianalytic_chain, random_analytic_poly,
                       random_blaschke, random_element, random_matrix,
                       random_trig_poly, random_zero_symbol, sharing_pair)

__all__ = ["SuiteConfig", "SUITES", "run_suite", "run_all"]

# the slant orders the randomised suites draw from
MAX_K = 3


@dataclass
class SuiteConfig:
    """Knobs shared by all suites."""

    seed: int = 0
    tol: float = 1e-8
    band: int = 256
    max_degree: int = 6
    trials: int = 50
    k: int = None

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.seed < 0:
            raise ValueError("seed must be a nonnegative integer")
        max_k = max(MAX_K, self.k or 1)
        if self.band < 4 * self.max_degree * max_k:
            raise ValueError(f"band must be >= 4 * max_degree * max_k = "
                             f"{4 * self.max_degree * max_k}")

    def rng(self, suite):
        return np.random.default_rng([self.seed, zlib.crc32(suite.encode())])


def _record(suite, prop, trial, residual, tol, passed=None, **extra):
    residual = float(residual)
    out = {"suite": suite, "property": prop, "trial": trial,
           "residual": residual, "tol": float(tol),
           "pass": bool(residual <= tol if passed is None else passed)}
    out.update(extra)
    return out


def _spaces(rng, max_degree, band, radius=0.6, min_alpha=1):
    a = random_blaschke(rng, int(rng.integers(min_alpha, max_degree + 1)), radius, 0.2)
    b = random_blaschke(rng, int(rng.integers(1, max_degree + 1)), radius, 0.2)
    return build(a, band), build(b, band)


# -- construction and shift identities ------------------------------------

def monomial_oracle(rng, trials=200, tol=1e-12, band=256, suite="thm21"):
    """``slant_compression`` on ``K_{z^P} -> K_{z^Q}`` equals ``[a_{ki-j}]``."""
    out = []
    for t in range(trials):
        P, Q = (int(x) for x in rng.integers(1, 13, 2))
        k = int(rng.integers(1, 5))
        lo = int(rng.integers(-16, 1))
        hi = int(rng.integers(0, 17))
        phi = random_trig_poly(rng, band, lo, hi)
        U = slant_compression(phi, build(monomial_inner(P), band),
                              build(monomial_inner(Q), band), k)
        ref = monomial_slant_matrix(phi.coeff, k, Q, P)
        out.append(_record(suite, "monomial_oracle", t,
                           np.max(np.abs(U.entries - ref)), tol, P=P, Q=Q, k=k))
    return out


def shift_power_formula(rng, trials=100, tol=1e-8, band=256, max_degree=5,
                        radius=0.8, max_m=3, suite="lemma22"):
    """Explicit formulas for ``S_alpha^m f`` and ``(S_alpha^*)^m f`` on the circle."""
    out = []
    for t in range(trials):
        alpha = random_blaschke(rng, int(rng.integers(1, max_degree + 1)), radius, 0.2)
        K = build(alpha, band)
        m = int(rng.integers(1, max_m + 1))
        f = random_element(rng, K)
        ff = f.to_function()
        lhs = (compressed_shift_pow(K, m) @ f).to_function()
        rhs = shift(ff, m)
        for j in range(m):
            c = f.inner(conjugate_kernel(K, 0, j)) / math.factorial(j)
            rhs = rhs - shift(K.alpha_fn, m - 1 - j) * c
        out.append(_record(suite, "forward", t, (lhs - rhs).norm(), tol, m=m, dim=K.dim))
        lhs = (compressed_shift_adjoint_pow(K, m) @ f).to_function()
        rhs = shift(ff, -m)
        for j in range(m):
            c = f.inner(kernel(K, 0, j)) / math.factorial(j)
            rhs = rhs - CircleFunction.monomial(-(m - j), band, c)
        out.append(_record(suite, "adjoint", t, (lhs - rhs).norm(), tol, m=m, dim=K.dim))
    return out


def defect_identities(rng, trials=50, tol=1e-9, base_tol=1e-10, band=256,
                      max_degree=6, max_m=4, suite="lemma41"):
    """``I - S^m S*^m`` and ``I - S*^m S^m`` as sums of kernel rank-one terms."""
    out = []
    for t in range(trials):
        alpha = random_blaschke(rng, int(rng.integers(1, max_degree + 1)), 0.7, 0.2)
        K = build(alpha, band)
        m = int(rng.integers(1, max_m + 1))
        I = identity(K).entries
        Sm = compressed_shift_pow(K, m).entries
        Sm_adj = compressed_shift_adjoint_pow(K, m).entries
        rhs = np.zeros_like(I)
        rhs_c = np.zeros_like(I)
        for j in range(m):
            w = 1.0 / math.factorial(j) ** 2
            rhs = rhs + w * rank_one(kernel(K, 0, j), kernel(K, 0, j)).entries
            kt = conjugate_kernel(K, 0, j)
            rhs_c = rhs_c + w * rank_one(kt, kt).entries
        out.append(_record(suite, "shift_defect", t,
                           np.linalg.norm(I - Sm @ Sm_adj - rhs), tol, m=m, dim=K.dim))
        out.append(_record(suite, "adjoint_defect", t,
                           np.linalg.norm(I - Sm_adj @ Sm - rhs_c), tol, m=m, dim=K.dim))
        S = compressed_shift(K).entries
        k0, kt0 = kernel(K, 0), conjugate_kernel(K, 0)
        out.append(_record(suite, "base_shift_defect", t,
                           np.linalg.norm(I - S @ S.conj().T - rank_one(k0, k0).entries),
                           base_tol, dim=K.dim))
        out.append(_record(suite, "base_adjoint_defect", t,
                           np.linalg.norm(I - S.conj().T @ S - rank_one(kt0, kt0).entries),
                           base_tol, dim=K.dim))
    return out


# -- characterisation -----------------------------------------------------

def _random_member(rng, Ka, Kb, k, band):
    phi = random_trig_poly(rng, k * band, -8, 8 * k)
    return phi, slant_compression(phi, Ka, Kb, k)


def constructed_shift_invariant(rng, trials=50, tol=1e-8, band=256, max_degree=6,
                                suite="thm21"):
    """Every ``U_phi`` with ``k < dim K_alpha`` passes the shift-invariance test."""
    out = []
    for t in range(trials):
        Ka, Kb = _spaces(rng, max_degree, band, min_alpha=2)
        k = int(rng.integers(1, min(MAX_K, Ka.dim - 1) + 1))
        _, U = _random_member(rng, Ka, Kb, k, band)
        r = ch.shift_invariance_residual(U, k)
        out.append(_record(suite, "constructed_shift_invariant", t, r,
                           tol * (1 + U.norm()), k=k))
    return out


def verdict_agreement(rng, trials=200, tol=1e-8, band=256, max_degree=6, suite="thm21"):
    """Shift invariance and both defect decompositions give the same verdict.

    Instances alternate between constructed members, generic random matrices
    and members perturbed by a small random matrix.  With ``k < dim K_alpha``
    the latter two are non-members unless ``dim K_beta = 1``, where the
    rank-one term ``kt_0^beta (x) chi`` alone already spans every operator.
    """
    out = []
    for t in range(trials):
        Ka, Kb = _spaces(rng, max_degree, band, min_alpha=2)
        k = int(rng.integers(1, min(MAX_K, Ka.dim - 1) + 1))
        kind = ("member", "random", "perturbed")[t % 3]
        if kind == "random":
            U = random_matrix(rng, Ka, Kb, k)
        else:
            _, U = _random_member(rng, Ka, Kb, k, band)
            if kind == "perturbed":
                U = U + random_matrix(rng, Ka, Kb, k) * 1e-3
        inv = ch.shift_invariance_test(U, k, tol)
        da = ch.membership_test(U, k, "A", tol)
        db = ch.membership_test(U, k, "B", tol)
        expected = kind == "member" or Kb.dim == 1
        agree = inv == da.member == db.member == expected
        out.append(_record(suite, "verdict_agreement", t, ch.shift_invariance_residual(U, k),
                           tol * (1 + U.norm()), passed=agree, kind=kind, k=k,
                           residual_A=da.residual, residual_B=db.residual))
    return out


def symbol_round_trip(rng, trials=50, tol=1e-6, band=256, max_degree=6, suite="thm21"):
    """Symbols read off either defect rebuild the operator."""
    out = []
    for t in range(trials):
        Ka, Kb = _spaces(rng, max_degree, band)
        k = int(rng.integers(1, MAX_K + 1))
        _, U = _random_member(rng, Ka, Kb, k, band)
        for variant in "AB":
            phi = ch.symbol_from_defect(ch.membership_test(U, k, variant))
            r = (slant_compression(phi, Ka, Kb, k) - U).norm()
            out.append(_record(suite, f"round_trip_{variant}", t, r, tol, k=k))
    return out


def small_domain_members(rng, trials=50, tol=1e-9, band=256, max_degree=6, suite="thm21"):
    """With ``dim K_alpha <= k`` every matrix is a compression."""
    out = []
    for t in range(trials):
        Ka, Kb = _spaces(rng, min(max_degree, 4), band)
        k = int(rng.integers(Ka.dim, Ka.dim + 3))
        U = random_matrix(rng, Ka, Kb, k)
        d = ch.membership_test(U, k, "A")
        out.append(_record(suite, "small_domain_member", t, d.residual, tol, k=k, dim=Ka.dim))
    return out


# -- intertwining ---------------------------------------------------------

def example_intertwiner(ks=(2, 3), tol=1e-12, band=256, suite="example3"):
    """``alpha = z^{2k}``, ``beta = z^2``, ``phi = conj(z)^{k-1}`` intertwines ``S_beta`` and ``S_alpha^k``."""
    out = []
    for t, k in enumerate(ks):
        Ka, Kb = build(monomial_inner(2 * k), band), build(monomial_inner(2), band)
        U = slant_compression(CircleFunction.monomial(-(k - 1), band), Ka, Kb, k)
        r = ch.intertwine_residual(U, k, "shift")
        out.append(_record(suite, "intertwine_shift", t, r, tol, k=k, norm=U.norm()))
    return out


def commutator_formulas(rng, trials=100, tol=1e-8, band=256, max_degree=6, suite="section3"):
    out = []
    for t in range(trials):
        alpha = random_blaschke(rng, int(rng.integers(1, max_degree + 1)), 0.6, 0.2)
        beta = random_blaschke(rng, int(rng.integers(1, max_degree + 1)), 0.6, 0.2)
        k = int(rng.integers(1, MAX_K + 1))
        phi = random_trig_poly(rng, k * band, -8, 8 * k)
        ra, rb = ch.commutator_formula_check(phi, alpha, beta, k, band)
        out.append(_record(suite, "commutator_shift", t, ra, tol, k=k))
        out.append(_record(suite, "commutator_backshift", t, rb, tol, k=k))
    return out


def zero_commutators(rng, trials=50, tol=1e-10, band=256, suite="section3"):
    """Analytic symbols intertwine when ``W_k^* beta <= alpha``; co-analytic ones
    intertwine the backward shifts when ``alpha <= W_k^* beta``."""
    out = []
    for t in range(trials):
        k = int(rng.integers(1, MAX_K + 1))
        beta = random_blaschke(rng, int(rng.integers(1, 3)), 0.5, 0.2)
        wb = compose_zk(beta, k)
        extra = random_blaschke(rng, int(rng.integers(0, 3)), 0.5)
        alpha = FiniteBlaschke(wb.zeros + extra.zeros)
        phi = random_analytic_poly(rng, k * band, 3)
        U = slant_compression(phi, build(alpha, band), build(beta, band), k)
        out.append(_record(suite, "analytic_intertwines_shift", t,
                           ch.intertwine_residual(U, k, "shift"), tol, k=k))
        sub = tuple(z for z, keep in zip(wb.zeros, rng.uniform(size=wb.degree) < 0.6) if keep)
        alpha2 = FiniteBlaschke(sub or wb.zeros[:1])
        U = slant_compression(conj_fn(phi), build(alpha2, band), build(beta, band), k)
        out.append(_record(suite, "coanalytic_intertwines_backshift", t,
                           ch.intertwine_residual(U, k, "backshift"), tol, k=k))
    return out


def _intertwine_case(rng, t, band):
    """Space pairs cycling through monomial and non-monomial configurations."""
    k = 1 + t % MAX_K
    if t % 4 == 0:
        P = int(rng.integers(max(k, 2), 7))
        Q = int(rng.integers(1, 4))
        return monomial_inner(P), monomial_inner(Q), k
    alpha, beta = sharing_pair(rng, k)
    return alpha, beta, k


def coset_intertwiners(rng, trials=30, tol=1e-8, band=256, suite="section3"):
    """Every coset-basis symbol gives an intertwiner, in both directions."""
    out = []
    for t in range(trials):
        alpha, beta, k = _intertwine_case(rng, t, band)
        Ka, Kb = build(alpha, band), build(beta, band)
        g = gcd_inner(alpha, compose_zk(beta, k))
        for direction in ("shift", "backshift"):
            syms = ch.intertwine_coset_basis(alpha, beta, k, direction, k * band)
            worst = max((ch.intertwine_residual(slant_compression(s, Ka, Kb, k), k, direction)
                         for s in syms), default=0.0)
            out.append(_record(suite, f"coset_{direction}", t, worst, tol, k=k,
                               gcd_degree=g.degree, basis_size=len(syms)))
    return out


def off_coset_symbols(rng, trials=30, tol=1e-4, band=256, suite="section3"):
    """Operators orthogonal to the coset span do not intertwine.

    A random symbol's operator has its component along the coset operators
    removed and is rescaled to unit Frobenius norm; the intertwining
    residual must then stay above ``tol``.  Instances where the coset span
    already exhausts the compressions (nothing orthogonal is left) are
    redrawn.
    """
    out = []
    for t in range(trials):
        for direction in ("shift", "backshift"):
            for _ in range(50):
                alpha, beta, k = _intertwine_case(rng, t, band)
                Ka, Kb = build(alpha, band), build(beta, band)
                syms = ch.intertwine_coset_basis(alpha, beta, k, direction, k * band)
                mats = [slant_compression(s, Ka, Kb, k).entries.reshape(-1) for s in syms]
                phi = random_trig_poly(rng, k * band, -8, 8 * k)
                U = slant_compression(phi, Ka, Kb, k)
                v = U.entries.reshape(-1)
                if mats:
                    q, _ = np.linalg.qr(np.column_stack(mats))
                    v = v - q @ (q.conj().T @ v)
                if np.linalg.norm(v) > 1e-3 * U.norm():
                    break
            else:
                raise RuntimeError("could not draw an instance with a non-intertwining part")
            v = v / np.linalg.norm(v)
            W = U.__class__(Ka, Kb, v.reshape(U.shape), k)
            r = ch.intertwine_residual(W, k, direction)
            out.append(_record(suite, f"off_coset_{direction}", t, r, tol,
                               passed=r >= tol, k=k, dim_alpha=Ka.dim, dim_beta=Kb.dim))
    return out


# -- products -------------------------------------------------------------

def _product_records(suite, prop, t, report, tol, zero_pairs):
    out = []
    for name, r in report.residuals.items():
        out.append(_record(suite, f"{prop}:{name}", t, r, tol, order=report.order))
    Ka = build(report.details["alpha"], report.details["band"])
    for a, b in zero_pairs:
        if report.order > Ka.dim:
            continue
        diff = report.symbols[a] - report.symbols[b]
        ok = ch.zero_test(diff, report.details["alpha"], report.details["gamma"],
                          report.order, tol, band=report.details["band"])
        out.append(_record(suite, f"{prop}:{a}~{b}", t, 0.0 if ok else 1.0, tol,
                           passed=ok, order=report.order))
    return out


def product_formulas(rng, trials=50, tol=1e-7, band=256, suite="section4"):
    """Symbol formulas for analytic / co-analytic products and the mixed cases."""
    out = []
    kinds = ("analytic", "antianalytic", "mixed_a", "mixed_b", "mixed_c", "mixed_d")
    for t in range(trials):
        kind = kinds[t % len(kinds)]
        k, m = (int(x) for x in rng.integers(1, 3, 2))
        if kind in ("mixed_a", "mixed_c"):
            m = 1
        elif kind in ("mixed_b", "mixed_d"):
            k = 1
        family = "analytic" if kind in ("analytic", "mixed_a", "mixed_b") else "antianalytic"
        chain = analytic_chain if family == "analytic" else antianalytic_chain
        alpha, beta, gamma = chain(rng, k, m)
        phi = random_analytic_poly(rng, band, int(rng.integers(0, 4)))
        psi = random_analytic_poly(rng, band, int(rng.integers(0, 4)))
        if kind.startswith("mixed"):
            rep = pr.product_mixed(kind[-1], phi, psi, alpha, beta, gamma,
                                   max(k, m), band, tol)
        elif family == "analytic":
            rep = pr.product_analytic(phi, psi, alpha, beta, gamma, k, m, band, tol)
        else:
            rep = pr.product_antianalytic(phi, psi, alpha, beta, gamma, k, m, band, tol)
        rep.details.update(alpha=alpha, gamma=gamma, band=band)
        names = list(rep.symbols)
        pairs = [(names[2], names[0])]
        out.extend(_product_records(suite, kind, t, rep, tol, pairs))
        out.append(_record(suite, f"{kind}:member", t, 0.0, tol, passed=rep.member))
    return out


def _l2_instance(rng, t, band):
    """Cycle: generic pair, analytic product under divisibility, large-order pair."""
    kind = ("generic", "analytic", "large_order")[t % 3]
    if kind == "analytic":
        k, m = (int(x) for x in rng.integers(1, 3, 2))
        alpha, beta, gamma = analytic_chain(rng, k, m, extra=1, origin_prob=0.3)
        Ka, Kb, Kg = build(alpha, band), build(beta, band), build(gamma, band)
        phi = random_analytic_poly(rng, m * band, 3)
        psi = random_analytic_poly(rng, k * band, 3)
        A = slant_compression(phi, Kb, Kg, m)
        B = slant_compression(psi, Ka, Kb, k)
        return kind, A, B, (phi, psi, alpha, beta, gamma)
    if kind == "generic":
        k, m = (int(x) for x in rng.integers(1, 3, 2))
        da = int(rng.integers(k * m + 1, k * m + 4))
    else:
        k, m = (int(x) for x in rng.integers(1, 3, 2))
        da = int(rng.integers(k, k * m + 1))
    alpha = random_blaschke(rng, da, 0.5, 0.2)
    beta = random_blaschke(rng, int(rng.integers(m, m + 3)), 0.5, 0.2)
    gamma = random_blaschke(rng, int(rng.integers(1, 4)), 0.5, 0.2)
    Ka, Kb, Kg = build(alpha, band), build(beta, band), build(gamma, band)
    B = slant_compression(random_trig_poly(rng, k * band, -6, 6 * k), Ka, Kb, k)
    A = slant_compression(random_trig_poly(rng, m * band, -6, 6 * m), Kb, Kg, m)
    return kind, A, B, None


def l2_products(rng, trials=100, tol=1e-8, xi_tol=1e-6, band=256, suite="section5"):
    """The ``(upsilon, tau_p)`` criterion against a direct membership test."""
    out = []
    for t in range(trials):
        kind, A, B, analytic = _l2_instance(rng, t, band)
        rep = pr.product_membership_L2(A, B, tol=tol)
        km = rep.order
        agree = rep.details["membership_test_agrees"]
        out.append(_record(suite, f"verdict_{kind}", t, rep.residuals["fit"], tol,
                           passed=agree and (rep.member or kind == "generic"),
                           member=rep.member, order=km, dim=B.domain.dim))
        out.append(_record(suite, "lhs_vs_defect", t, rep.residuals["lhs_vs_defect"],
                           tol * (1 + rep.product_norm)))
        if rep.member:
            out.append(_record(suite, "xi_reconstruction", t, rep.residuals["xi"], xi_tol,
                               order=km))
        if analytic is not None and rep.member:
            phi, psi, alpha, beta, gamma = analytic
            k, m = B.k, A.k
            ana = pr.product_analytic(phi, psi, alpha, beta, gamma, k, m, band, tol)
            diff = rep.symbols["xi"] - ana.symbols["eta_kernel_sum"]
            ok = ch.zero_test(diff, alpha, gamma, km, tol, band=band)
            out.append(_record(suite, "xi_matches_eta", t, 0.0 if ok else 1.0, tol, passed=ok))
    return out


def zero_symbol_law(rng, trials=50, tol=1e-8, band=256, max_degree=6, suite="section5"):
    """Symbols in ``conj(alpha H^2) + conj(z)^{k-1} (W_k^* beta) H^2`` give zero."""
    out = []
    for t in range(trials):
        alpha = random_blaschke(rng, int(rng.integers(1, max_degree + 1)), 0.5, 0.2)
        beta = random_blaschke(rng, int(rng.integers(1, 4)), 0.5, 0.2)
        k = int(rng.integers(1, min(MAX_K, alpha.degree) + 1))
        phi = random_zero_symbol(rng, alpha, beta, k, k * band)
        U = slant_compression(phi, build(alpha, band), build(beta, band), k)
        cs = ch.canonical_symbol(phi, alpha, beta, k, band, reduce=True)
        out.append(_record(suite, "operator_vanishes", t, U.norm(), tol, k=k))
        out.append(_record(suite, "canonical_parts_vanish", t, cs.parts_norm(), tol, k=k))
    return out


# -- suites ---------------------------------------------------------------

def _t(cfg, criterion):
    """A property's tolerance: its own criterion, tightened by ``cfg.tol``."""
    return min(cfg.tol, criterion)


def _suite_lemma22(cfg, rng):
    return shift_power_formula(rng, cfg.trials, _t(cfg, 1e-8), cfg.band, min(cfg.max_degree, 5))


def _suite_lemma41(cfg, rng):
    return defect_identities(rng, cfg.trials, _t(cfg, 1e-9), _t(cfg, 1e-10), cfg.band,
                             cfg.max_degree)


def _suite_thm21(cfg, rng):
    return (monomial_oracle(rng, cfg.trials, _t(cfg, 1e-12), cfg.band)
            + constructed_shift_invariant(rng, cfg.trials, cfg.tol, cfg.band, cfg.max_degree)
            + verdict_agreement(rng, cfg.trials, cfg.tol, cfg.band, cfg.max_degree)
            + symbol_round_trip(rng, cfg.trials, _t(cfg, 1e-6), cfg.band, cfg.max_degree)
            + small_domain_members(rng, cfg.trials, _t(cfg, 1e-9), cfg.band, cfg.max_degree))


def _suite_section3(cfg, rng):
    n = max(1, cfg.trials // 2)
    return (commutator_formulas(rng, cfg.trials, _t(cfg, 1e-8), cfg.band, cfg.max_degree)
            + zero_commutators(rng, n, _t(cfg, 1e-10), cfg.band)
            + coset_intertwiners(rng, n, _t(cfg, 1e-8), cfg.band)
            + off_coset_symbols(rng, n, 1e-4, cfg.band))


def _suite_section4(cfg, rng):
    return product_formulas(rng, cfg.trials, _t(cfg, 1e-7), cfg.band)


def _suite_section5(cfg, rng):
    return (l2_products(rng, cfg.trials, cfg.tol, _t(cfg, 1e-6), cfg.band)
            + zero_symbol_law(rng, cfg.trials, _t(cfg, 1e-8), cfg.band, cfg.max_degree))


def _suite_example3(cfg, rng):
    ks = (cfg.k,) if cfg.k else (2, 3)
    return example_intertwiner(ks, _t(cfg, 1e-12), cfg.band)


SUITES = {
    "lemma22": _suite_lemma22,
    "lemma41": _suite_lemma41,
    "thm21": _suite_thm21,
    "section3": _suite_section3,
    "section4": _suite_section4,
    "section5": _suite_section5,
    "example3": _suite_example3,
}


def run_suite(name, cfg):
    """Records of one suite, in deterministic order."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    return SUITES[name](cfg, cfg.rng(name))


def run_all(cfg):
    out = []
    for name in SUITES:
        out.extend(run_suite(name, cfg))
    return out
