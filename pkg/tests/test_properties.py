"""Invariants checked on hypothesis-drawn instances."""

import numpy as np
from hypothesis import given, strategies as st

from slantlab import characterize as ch
from slantlab.inner import FiniteBlaschke, compose_zk
from slantlab.model_space import build, conjugation
from slantlab.operators import compressed_shift, slant_compression
from slantlab.sampling import (random_blaschke, random_element, random_trig_poly,
                               random_zero_symbol)

BAND = 256
seeds = st.integers(0, 2**32 - 1)


@given(seeds, st.integers(1, 6))
def test_conjugation_involutive_isometric(seed, degree):
    rng = np.random.default_rng(seed)
    K = build(random_blaschke(rng, degree, 0.7, 0.3), BAND)
    f = random_element(rng, K)
    Cf = conjugation(K, f)
    assert abs(Cf.norm() - f.norm()) < 1e-12 * (1 + f.norm())
    assert (conjugation(K, Cf) - f).norm() < 1e-12 * (1 + f.norm())


@given(seeds, st.integers(1, 6))
def test_shift_is_contraction_with_rank_one_defect(seed, degree):
    rng = np.random.default_rng(seed)
    K = build(random_blaschke(rng, degree, 0.7, 0.3), BAND)
    S = compressed_shift(K).entries
    sv = np.linalg.svd(np.eye(K.dim) - S @ S.conj().T, compute_uv=False)
    assert sv[0] <= 1 + 1e-12
    assert np.all(sv[1:] < 1e-12)


@given(seeds, st.integers(1, 3), st.sampled_from("AB"))
def test_every_compression_is_a_member(seed, k, variant):
    rng = np.random.default_rng(seed)
    Ka = build(random_blaschke(rng, int(rng.integers(1, 6)), 0.6, 0.2), BAND)
    Kb = build(random_blaschke(rng, int(rng.integers(1, 5)), 0.6, 0.2), BAND)
    U = slant_compression(random_trig_poly(rng, k * BAND, -6, 6 * k), Ka, Kb, k)
    d = ch.membership_test(U, k, variant)
    assert d.member
    V = slant_compression(ch.symbol_from_defect(d), Ka, Kb, k)
    assert (U - V).norm() <= 1e-8 * (1 + U.norm())
    if k < Ka.dim:
        assert ch.shift_invariance_test(U, k)


@given(seeds, st.integers(1, 3))
def test_zero_symbols_vanish_and_canonicalise_to_zero(seed, k):
    rng = np.random.default_rng(seed)
    alpha = random_blaschke(rng, int(rng.integers(k, 6)), 0.5, 0.2)
    beta = random_blaschke(rng, int(rng.integers(1, 4)), 0.5, 0.2)
    phi = random_zero_symbol(rng, alpha, beta, k, k * BAND)
    U = slant_compression(phi, build(alpha, BAND), build(beta, BAND), k)
    assert U.norm() <= 1e-8 * (1 + phi.norm())
    assert ch.canonical_symbol(phi, alpha, beta, k, BAND, reduce=True).parts_norm() <= 1e-8


@given(seeds, st.integers(1, 3))
def test_canonical_representative_is_unique(seed, k):
    """Two symbols with the same operator have the same reduced canonical parts."""
    rng = np.random.default_rng(seed)
    alpha = random_blaschke(rng, int(rng.integers(k, 6)), 0.5, 0.2)
    beta = random_blaschke(rng, int(rng.integers(1, 4)), 0.5, 0.2)
    phi = random_trig_poly(rng, k * BAND, -5, 5 * k)
    psi = phi + random_zero_symbol(rng, alpha, beta, k, k * BAND)
    a = ch.canonical_symbol(phi, alpha, beta, k, BAND, reduce=True)
    b = ch.canonical_symbol(psi, alpha, beta, k, BAND, reduce=True)
    assert (a.phi_minus - b.phi_minus).norm() < 1e-9
    assert (a.chi_plus - b.chi_plus).norm() < 1e-9


@given(seeds, st.integers(1, 3))
def test_coset_symbols_intertwine(seed, k):
    rng = np.random.default_rng(seed)
    beta = random_blaschke(rng, int(rng.integers(1, 3)), 0.5, 0.3)
    shared = compose_zk(beta, k).zeros[: int(rng.integers(1, k * beta.degree + 1))]
    alpha = FiniteBlaschke(shared + tuple(0.3 * np.exp(2j * np.pi * rng.uniform(size=k))))
    Ka, Kb = build(alpha, BAND), build(beta, BAND)
    for direction in ("shift", "backshift"):
        for s in ch.intertwine_coset_basis(alpha, beta, k, direction, k * BAND):
            U = slant_compression(s, Ka, Kb, k)
            assert ch.intertwine_residual(U, k, direction) <= 1e-8 * (1 + U.norm())
