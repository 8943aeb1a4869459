import math

import numpy as np
import pytest
from scipy.integrate import quad

from polysect import (
    Body,
    Kind,
    RegimeTag,
    SectionQuery,
    analytic_A_integral,
    analytic_P_integral,
    closed_A,
    closed_P,
    perimeter_exact,
    rational_product_integral,
    regime_check,
    sample_direction,
    section_volume_exact,
    sinc_product_integral,
)
from polysect.errors import NotIntegrable


def _quad_rational(coeffs, limit=400):
    def integrand(s):
        val = 1.0 + 0.0j
        for c in coeffs:
            val /= 1.0 + 1j * c * s
        return val.real

    total, _ = quad(integrand, -np.inf, np.inf, limit=limit)
    return total / (2 * math.pi)


def test_rational_product_against_quadrature():
    rng = np.random.default_rng(2)
    for _ in range(20):
        m = rng.integers(2, 7)
        coeffs = rng.normal(size=m)
        want = _quad_rational(coeffs)
        assert rational_product_integral(coeffs) == pytest.approx(want, abs=1e-7)


def test_rational_product_known_values():
    # two equal-magnitude opposite coefficients: 1/(1 + c^2 s^2), integral 1/(2|c|)
    assert rational_product_integral([1.0, -1.0]) == pytest.approx(0.5, rel=1e-12)
    assert rational_product_integral([2.0, -2.0]) == pytest.approx(0.25, rel=1e-12)
    with pytest.raises(NotIntegrable):
        rational_product_integral([1.0, 0.0])


def test_rational_product_repeated_coefficients():
    # the perturbation path: nearly equal coefficients stay finite and match
    want = _quad_rational([1.0, 1.0 + 1e-12, -0.5])
    assert rational_product_integral([1.0, 1.0 + 1e-12, -0.5]) == pytest.approx(want, abs=1e-6)


def test_sinc_single_weight_indicator():
    assert sinc_product_integral([0.8], 0.1) == pytest.approx(1 / 0.8, rel=1e-12)
    assert sinc_product_integral([0.8], 0.6) == 0.0


def test_sinc_two_weights_trapezoid():
    # two sinc factors give twice the trapezoid density of w1 U1 + w2 U2
    rng = np.random.default_rng(4)
    for _ in range(15):
        w1, w2 = np.sort(rng.uniform(0.1, 1.0, size=2))[::-1]
        t = rng.uniform(0.0, 0.6)
        x = 2 * t
        overlap = max(0.0, min(w1, x + w2) - max(-w1, x - w2))
        want = 2 * overlap / (4 * w1 * w2)
        if abs(w1 - 2 * t) < 1e-3 or abs(w1 + w2 - 2 * t) < 1e-3 or abs(w1 - w2 - 2 * t) < 1e-3:
            continue  # stay away from the kinks of the piecewise density
        assert sinc_product_integral([w1, w2], t) == pytest.approx(want, abs=1e-8)


def test_analytic_A_matches_closed_cube():
    rng = np.random.default_rng(17)
    body = Body(Kind.CUBE, 5)
    hits = 0
    while hits < 10:
        a = sample_direction(body, rng)
        t = rng.uniform(0.4, 0.95) * body.support(a.coords)
        q = SectionQuery(body, a, t)
        if regime_check(q).tag is not RegimeTag.VERTEX_SEPARATING:
            continue
        hits += 1
        assert analytic_A_integral(q).value == pytest.approx(closed_A(q).value, abs=1e-8)


def test_analytic_P_matches_closed_simplex():
    rng = np.random.default_rng(23)
    body = Body(Kind.SIMPLEX, 5)
    hits = 0
    while hits < 10:
        a = sample_direction(body, rng)
        t = rng.uniform(0.3, 0.9) * body.support(a.coords)
        q = SectionQuery(body, a, t)
        if regime_check(q).tag is not RegimeTag.VERTEX_SEPARATING:
            continue
        hits += 1
        assert analytic_P_integral(q).value == pytest.approx(closed_P(q).value, rel=1e-8)


def test_analytic_P_central_crosspolytope():
    rng = np.random.default_rng(29)
    body = Body(Kind.CROSSPOLYTOPE, 4)
    for _ in range(5):
        a = sample_direction(body, rng)
        q = SectionQuery(body, a, 0.0)
        assert analytic_P_integral(q).value == pytest.approx(perimeter_exact(q), rel=1e-8)


def test_analytic_A_general_regime():
    # the Fourier representation holds beyond the vertex-separating regime
    body = Body(Kind.CUBE, 4)
    rng = np.random.default_rng(31)
    for _ in range(5):
        a = sample_direction(body, rng)
        t = 0.2 * body.support(a.coords)
        q = SectionQuery(body, a, t)
        assert analytic_A_integral(q).value == pytest.approx(
            section_volume_exact(q), abs=1e-8
        )
