import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from slantlab.circle import (BandError, CircleFunction, conj_fn, inner_product, multiply,
                             riesz_project, shift, slant_w, slant_w_adjoint)
from slantlab.sampling import random_trig_poly

BAND = 64


def _grid(n=512):
    return np.exp(2j * np.pi * np.arange(n) / n)


def test_monomial_layout():
    f = CircleFunction.monomial(-3, BAND, 2.0)
    assert f.coeff(-3) == 2.0
    assert f.coeffs.size == 2 * BAND + 1
    assert f.coeffs[BAND - 3] == 2.0


def test_bad_lengths_rejected():
    with pytest.raises(BandError):
        CircleFunction(np.zeros(4))
    with pytest.raises(BandError):
        CircleFunction(np.zeros(7), band=2)


def test_multiply_matches_pointwise_product(rng):
    f = random_trig_poly(rng, BAND, -6, 6)
    g = random_trig_poly(rng, BAND, -5, 9)
    z = _grid()
    np.testing.assert_allclose(multiply(f, g)(z), f(z) * g(z), atol=1e-12)
    assert multiply(f, g).tail == 0.0


def test_multiply_reports_dropped_energy():
    f = CircleFunction.monomial(BAND, BAND)
    h = multiply(f, f)
    assert h.norm() == 0.0
    assert h.tail == pytest.approx(1.0)


def test_slant_on_monomials():
    for k in (1, 2, 3):
        for n in range(-10, 11):
            out = slant_w(CircleFunction.monomial(n, BAND), k)
            expected = CircleFunction.monomial(n // k, BAND) if n % k == 0 else CircleFunction.zeros(BAND)
            assert out.allclose(expected)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(0, 2**32 - 1))
def test_slant_adjoint_pairing(k, seed):
    r = np.random.default_rng(seed)
    f = random_trig_poly(r, k * BAND, -20, 20)
    g = random_trig_poly(r, BAND, -6, 6)
    lhs = inner_product(slant_w(f, k), g.with_band(k * BAND))
    rhs = inner_product(f, slant_w_adjoint(g, k))
    assert abs(lhs - rhs) < 1e-12


def test_slant_adjoint_is_isometric_and_left_inverse(rng):
    g = random_trig_poly(rng, BAND, -7, 7)
    up = slant_w_adjoint(g, 3)
    assert up.band == 3 * BAND
    assert abs(up.norm() - g.norm()) < 1e-13
    assert slant_w(up, 3).with_band(BAND).allclose(g)


def test_slant_adjoint_band_rule():
    with pytest.raises(BandError):
        slant_w_adjoint(CircleFunction.monomial(1, BAND), 2, band=BAND)


def test_riesz_and_conj(rng):
    f = random_trig_poly(rng, BAND, -5, 5)
    p = riesz_project(f)
    assert p.is_analytic()
    assert riesz_project(p).allclose(p)
    assert (f - p).coeff(0) == 0 and p.coeff(-2) == 0
    z = _grid(64)
    np.testing.assert_allclose(conj_fn(f)(z), np.conj(f(z)), atol=1e-12)
    np.testing.assert_allclose(shift(f, 2)(z), z ** 2 * f(z), atol=1e-12)


def test_evaluation_inside_disk_requires_analytic():
    f = CircleFunction.from_terms({-1: 1.0, 2: 1.0}, 8)
    with pytest.raises(ValueError):
        f(0.3)
    g = CircleFunction.from_analytic([1, 2, 3], 8)
    assert g(0.5) == pytest.approx(1 + 1 + 0.75)
    assert g.derivative_at(0.5, 1) == pytest.approx(2 + 3)


def test_json_round_trip(rng):
    f = random_trig_poly(rng, 16, -3, 3)
    g = CircleFunction.from_dict(f.to_dict())
    assert g.allclose(f, atol=0)
