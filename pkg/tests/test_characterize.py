import numpy as np
import pytest

from slantlab import characterize as ch
from slantlab.circle import CircleFunction, conj_fn, shift
from slantlab.inner import FiniteBlaschke, compose_zk, monomial_inner, to_circle_fn
from slantlab.model_space import build, kernel
from slantlab.operators import OperatorMatrix, compressed_shift, slant_compression
from slantlab.sampling import random_blaschke, random_matrix, random_trig_poly

BAND = 256


def _z(n):
    return build(monomial_inner(n), BAND)


def _member(rng, Ka, Kb, k):
    phi = random_trig_poly(rng, k * BAND, -8, 8 * k)
    return phi, slant_compression(phi, Ka, Kb, k)


def test_compressed_shift_is_shift_invariant():
    S = compressed_shift(_z(3))
    assert ch.shift_invariance_test(S, 1)
    assert ch.membership_test(S, 1).member


def test_small_domain_every_operator_is_member(rng):
    Ka, Kb = build(random_blaschke(rng, 2), BAND), build(random_blaschke(rng, 3), BAND)
    U = random_matrix(rng, Ka, Kb, 2)
    for variant in "AB":
        d = ch.membership_test(U, 2, variant)
        assert d.residual <= 1e-9
    assert ch.shift_invariance_test(U, 2)


@pytest.mark.parametrize("variant", ["A", "B"])
def test_members_and_round_trip(rng, variant):
    Ka = build(random_blaschke(rng, 5, 0.6, 0.3), BAND)
    Kb = build(random_blaschke(rng, 3, 0.6, 0.3), BAND)
    for k in (1, 2, 3):
        phi, U = _member(rng, Ka, Kb, k)
        d = ch.membership_test(U, k, variant)
        assert d.member and d.residual <= 1e-9 * (1 + U.norm())
        assert np.linalg.norm(d.reconstruction().entries - d.defect) <= 1e-9 * (1 + U.norm())
        back = slant_compression(ch.symbol_from_defect(d), Ka, Kb, k)
        assert (back - U).norm() <= 1e-9


def test_random_matrices_are_not_members(rng):
    Ka, Kb = _z(4), _z(4)
    for _ in range(10):
        U = random_matrix(rng, Ka, Kb, 2)
        dA = ch.membership_test(U, 2, "A")
        assert not dA.member and dA.residual > 1e-4
        assert not ch.membership_test(U, 2, "B").member
        assert not ch.shift_invariance_test(U, 2)
        with pytest.raises(ch.NotAMemberError):
            ch.symbol_from_defect(dA)


def test_transpose_of_shift_is_not_slant_order_two():
    S = compressed_shift(_z(4))
    T = OperatorMatrix(S.domain, S.codomain, S.entries.T.copy(), 2)
    assert ch.membership_test(T, 2).residual > 1e-4


def test_zero_operator_gives_zero_symbol():
    Ka, Kb = _z(3), _z(2)
    d = ch.membership_test(OperatorMatrix(Ka, Kb, np.zeros((2, 3))), 2, "B")
    assert d.member and ch.symbol_from_defect(d).norm() == 0


def test_monomial_round_trip():
    U = slant_compression(CircleFunction.monomial(1, 2 * BAND), _z(4), _z(2), 2)
    phi = ch.symbol_from_defect(ch.membership_test(U, 2))
    assert (slant_compression(phi, _z(4), _z(2), 2) - U).norm() < 1e-12


# -- canonical symbols and the zero-symbol law ---------------------------

def test_canonical_of_positive_part():
    alpha, beta, k = monomial_inner(3), monomial_inner(2), 2
    phi = CircleFunction.from_terms({1: 1.0, 3: 2j}, k * BAND)
    cs = ch.canonical_symbol(phi, alpha, beta, k, BAND)
    assert cs.phi_minus.norm() == 0
    assert cs.chi_plus.to_function().allclose(shift(phi, -1).with_band(BAND))
    assert (cs.chi_from_parts() - cs.chi_plus.to_function()).norm() < 1e-12


def test_canonical_of_zero_symbol():
    phi = CircleFunction.monomial(-3, BAND)
    cs = ch.canonical_symbol(phi, monomial_inner(2), monomial_inner(2), 1, BAND)
    assert cs.parts_norm() == 0


def test_reduction_needed_for_residual_zero_directions():
    """``alpha = z^2, beta = z, k = 1, phi = z`` gives ``U = 0`` yet has a
    nonzero unreduced representative."""
    alpha, beta = monomial_inner(2), monomial_inner(1)
    phi = CircleFunction.monomial(1, BAND)
    assert slant_compression(phi, _z(2), _z(1), 1).norm() == 0
    assert ch.canonical_symbol(phi, alpha, beta, 1, BAND).parts_norm() == pytest.approx(1)
    assert ch.canonical_symbol(phi, alpha, beta, 1, BAND, reduce=True).parts_norm() < 1e-14
    assert ch.zero_test(phi, alpha, beta, 1)


def test_reduction_preserves_operator(rng):
    alpha = random_blaschke(rng, 4, 0.5, 0.3)
    beta = random_blaschke(rng, 2, 0.5, 0.3)
    Ka, Kb = build(alpha, BAND), build(beta, BAND)
    for k in (1, 2, 3):
        phi = random_trig_poly(rng, k * BAND, -6, 6 * k)
        U = slant_compression(phi, Ka, Kb, k)
        for reduce in (False, True):
            cs = ch.canonical_symbol(phi, alpha, beta, k, BAND, reduce=reduce)
            V = slant_compression(cs.symbol().with_band(k * BAND), Ka, Kb, k)
            assert (U - V).norm() < 1e-11


def test_zero_test_examples(rng):
    alpha = random_blaschke(rng, 3, 0.5)
    beta = random_blaschke(rng, 2, 0.5)
    k = 2
    N = k * BAND
    a = to_circle_fn(alpha, N)
    assert ch.zero_test(shift(conj_fn(a), -1), alpha, beta, k)
    wb = to_circle_fn(compose_zk(beta, k), N)
    assert ch.zero_test(shift(wb, -(k - 1) + 2), alpha, beta, k)
    k0 = kernel(build(alpha, BAND), 0).to_function(N)
    assert not ch.zero_test(k0, alpha, alpha, 1)
    with pytest.raises(ch.PreconditionError):
        ch.zero_test(k0, alpha, beta, 4)


# -- intertwining ----------------------------------------------------------

@pytest.mark.parametrize("k", [2, 3])
def test_example_intertwiner(k):
    alpha, beta = monomial_inner(2 * k), monomial_inner(2)
    phi = CircleFunction.monomial(-(k - 1), k * BAND)
    U = slant_compression(phi, _z(2 * k), _z(2), k)
    assert ch.intertwine_residual(U, k, "shift") <= 1e-12
    basis = ch.intertwine_coset_basis(alpha, beta, k, "shift", k * BAND)
    assert any(b.allclose(phi) for b in basis)


def test_coset_k1_form(rng):
    z = 0.3 + 0.2j
    alpha = FiniteBlaschke((z, 0.1))
    beta = FiniteBlaschke((z, -0.4j))
    basis = ch.intertwine_coset_basis(alpha, beta, 1, "shift", BAND)
    # gcd = b_z, so K_gcd is one-dimensional and the symbol is (beta / b_z) * normalised kernel
    assert len(basis) == 1
    Ka, Kb = build(alpha, BAND), build(beta, BAND)
    U = slant_compression(basis[0], Ka, Kb, 1)
    assert U.norm() > 1e-3
    assert ch.intertwine_test(U, 1, "shift")


def test_coprime_coset_is_empty():
    alpha = FiniteBlaschke((0.3, 0.1j))
    beta = FiniteBlaschke((-0.2,))
    assert ch.intertwine_coset_basis(alpha, beta, 1, "shift") == []
    assert ch.intertwine_coset_basis(alpha, beta, 1, "backshift") == []


def test_intertwine_test_on_simple_matrices():
    K = _z(3)
    D = OperatorMatrix(K, K, np.diag([1.0, 2.0, 3.0]))
    assert not ch.intertwine_test(D, 1, "shift")
    assert ch.intertwine_test(OperatorMatrix(K, K, np.zeros((3, 3))), 1, "shift")
    assert ch.intertwine_test(OperatorMatrix(K, K, np.eye(3)), 1, "backshift")


def test_commutator_formulas(rng):
    for _ in range(5):
        alpha = random_blaschke(rng, 4, 0.6, 0.2)
        beta = random_blaschke(rng, 3, 0.6, 0.2)
        k = int(rng.integers(1, 4))
        phi = random_trig_poly(rng, k * BAND, -6, 6)
        ra, rb = ch.commutator_formula_check(phi, alpha, beta, k)
        assert ra < 1e-8 and rb < 1e-8


def test_zero_commutator_under_divisibility(rng):
    beta = random_blaschke(rng, 2, 0.5)
    k = 2
    alpha = FiniteBlaschke(compose_zk(beta, k).zeros + (0.2j,))
    Ka, Kb = build(alpha, BAND), build(beta, BAND)
    phi = CircleFunction.from_analytic(rng.standard_normal(4), k * BAND)
    U = slant_compression(phi, Ka, Kb, k)
    assert ch.intertwine_residual(U, k, "shift") < 1e-10
    small = FiniteBlaschke(compose_zk(beta, k).zeros[:2])
    U = slant_compression(conj_fn(phi), build(small, BAND), Kb, k)
    assert ch.intertwine_residual(U, k, "backshift") < 1e-10


def test_verdict_json():
    v = ch.verdict("x", 1e-3, 1e-8, False)
    assert v == {"test": "x", "residual": 1e-3, "tol": 1e-8, "pass": False}
    assert ch.verdict("y", 0.0, 1.0, True, {"a": 1})["witness"] == {"a": 1}
