import numpy as np
import pytest

from slantlab.circle import CircleFunction, multiply, slant_w
from slantlab.inner import monomial_inner
from slantlab.model_space import build, kernel, p_alpha
from slantlab.operators import (OperatorMatrix, compressed_shift, compressed_shift_adjoint_pow,
                                compressed_shift_pow, identity, monomial_slant_matrix, rank_one,
                                shift_pow_by_formula, slant_compression, truncated_toeplitz)
from slantlab.sampling import random_blaschke, random_element, random_trig_poly

BAND = 256


def _z(n):
    return build(monomial_inner(n), BAND)


def test_monomial_example():
    U = slant_compression(CircleFunction.monomial(1, 2 * BAND), _z(4), _z(2), 2)
    np.testing.assert_array_equal(U.entries.real.round(14), [[0, 0, 0, 0], [0, 1, 0, 0]])


def test_monomial_rule_general(rng):
    phi = random_trig_poly(rng, 3 * BAND, -9, 9)
    U = slant_compression(phi, _z(5), _z(4), 3)
    ref = monomial_slant_matrix(phi.coeff, 3, 4, 5)
    assert np.max(np.abs(U.entries - ref)) < 1e-14


def test_unit_symbol_is_identity():
    U = slant_compression(CircleFunction.monomial(0, BAND), _z(3), _z(3), 1)
    np.testing.assert_allclose(U.entries, np.eye(3), atol=1e-15)


def test_zero_symbol_gives_zero_matrix():
    U = truncated_toeplitz(CircleFunction.monomial(-3, BAND), _z(2), _z(2))
    assert U.norm() == 0.0


def test_matches_fourier_definition(rng):
    """Column-by-column comparison with ``P_beta W_k (phi f)`` on Fourier data."""
    Ka = build(random_blaschke(rng, 4, 0.6), BAND)
    beta = random_blaschke(rng, 3, 0.6)
    Kb = build(beta, BAND)
    k = 2
    N = 4 * BAND
    phi = random_trig_poly(rng, N, -5, 8)
    U = slant_compression(phi.with_band(k * BAND), Ka, Kb, k)
    f = random_element(rng, Ka)
    g = slant_w(multiply(phi, f.to_function(N)), k)
    expected = p_alpha(Kb.alpha_fn.with_band(N), g).with_band(BAND)
    assert ((U @ f).to_function() - expected).norm() < 1e-12


def test_shift_on_monomial_space_is_jordan_block():
    S = compressed_shift(_z(4)).entries
    np.testing.assert_allclose(S, np.eye(4, k=-1), atol=1e-15)
    Sa = truncated_toeplitz(CircleFunction.monomial(-1, BAND), _z(4), _z(4)).entries
    np.testing.assert_allclose(Sa, S.T, atol=1e-15)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_shift_powers_three_ways(rng, m):
    K = build(random_blaschke(rng, 4, 0.7, origin_prob=0.3), BAND)
    S = compressed_shift(K).entries
    direct = compressed_shift_pow(K, m).entries
    np.testing.assert_allclose(direct, np.linalg.matrix_power(S, m), atol=1e-10)
    np.testing.assert_allclose(shift_pow_by_formula(K, m).entries, direct, atol=1e-10)
    adj = compressed_shift_adjoint_pow(K, m).entries
    np.testing.assert_allclose(adj, direct.conj().T, atol=1e-10)
    np.testing.assert_allclose(shift_pow_by_formula(K, m, adjoint=True).entries, adj,
                               atol=1e-10)


def test_toeplitz_with_kernel_symbol(rng):
    """``A_phi f = P_alpha(phi f)`` checked by applying to random elements."""
    K = build(random_blaschke(rng, 3, 0.6), BAND)
    k0 = kernel(K, 0).to_function()
    A = truncated_toeplitz(k0, K, K)
    f = random_element(rng, K)
    expected = p_alpha(K.alpha_fn, multiply(k0, f.to_function()))
    assert ((A @ f).to_function() - expected).norm() < 1e-12


def test_rank_one(rng):
    K = _z(3)
    E = rank_one(K.unit(0), K.unit(0)).entries
    np.testing.assert_array_equal(E, np.diag([1, 0, 0]))
    u, v, f = (random_element(rng, K) for _ in range(3))
    out = rank_one(u, v) @ f
    np.testing.assert_allclose(out.coords, f.inner(v) * u.coords, atol=1e-14)
    with pytest.raises(ValueError):
        rank_one(u, v, domain=_z(2))


def test_algebra_and_json(rng):
    Ka, Kb = _z(3), _z(2)
    U = OperatorMatrix(Ka, Kb, rng.standard_normal((2, 3)) + 1j, 2)
    V = OperatorMatrix.from_dict(U.to_dict(), Ka, Kb)
    np.testing.assert_array_equal(U.entries, V.entries)
    assert U.to_dict()["rows"] == 2 and len(U.to_dict()["entries"]) == 6
    assert (U - V).norm() == 0
    assert (identity(Kb) @ U).k == 2
    assert np.allclose((U.H).entries, U.entries.conj().T)
    with pytest.raises(ValueError):
        U @ U
    with pytest.raises(ValueError):
        OperatorMatrix(Ka, Kb, np.zeros((3, 3)))


def test_symbol_band_guard():
    with pytest.raises(ValueError):
        slant_compression(CircleFunction.monomial(0, 8), _z(2), _z(2), 1)
