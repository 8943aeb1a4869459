import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polysect import (
    Body,
    Canonical,
    Kind,
    RegimeTag,
    SectionQuery,
    canonical_direction,
    face_lattice,
    make_direction,
    regime_check,
    sample_direction,
    thresholds,
)
from polysect.errors import DimensionMismatch, ZeroVector


def test_volumes():
    assert Body(Kind.SIMPLEX, 4).volume() == pytest.approx(math.sqrt(5) / 24, rel=1e-15)
    assert Body(Kind.CROSSPOLYTOPE, 4).volume() == pytest.approx(16 / 24, rel=1e-15)
    assert Body(Kind.CUBE, 7).volume() == 1.0


def test_vertex_conventions():
    simplex = Body(Kind.SIMPLEX, 3)
    assert simplex.vertices().shape == (4, 4)
    np.testing.assert_allclose(simplex.vertices().sum(axis=1), 1.0)
    xp = Body(Kind.CROSSPOLYTOPE, 3)
    assert xp.vertices().shape == (6, 3)
    cube = Body(Kind.CUBE, 3)
    assert set(np.unique(cube.vertices())) == {-0.5, 0.5}


def test_make_direction_normalizes():
    cube = Body(Kind.CUBE, 3)
    np.testing.assert_allclose(make_direction(cube, [2, 0, 0]).coords, [1, 0, 0])
    simplex = Body(Kind.SIMPLEX, 3)
    a = make_direction(simplex, [1, 0, 0, 0])
    np.testing.assert_allclose(a.coords, np.array([3, -1, -1, -1]) / math.sqrt(12), atol=1e-15)
    with pytest.raises(ZeroVector):
        make_direction(simplex, [1, 1, 1, 1])
    with pytest.raises(DimensionMismatch):
        make_direction(cube, [1, 0, 0, 0])


def test_canonical_directions():
    simplex = Body(Kind.SIMPLEX, 3)
    apex = canonical_direction(simplex, Canonical.APEX)
    np.testing.assert_allclose(
        apex.coords,
        [math.sqrt(0.75), -1 / (2 * math.sqrt(3)), -1 / (2 * math.sqrt(3)), -1 / (2 * math.sqrt(3))],
        atol=1e-15,
    )
    cube = Body(Kind.CUBE, 4)
    np.testing.assert_allclose(
        canonical_direction(cube, Canonical.MAIN_DIAGONAL).coords, [0.5] * 4
    )
    np.testing.assert_allclose(
        canonical_direction(simplex, Canonical.ALTERNATING).coords,
        [0.5, -0.5, 0.5, -0.5],
    )


def test_regime_examples():
    cube = Body(Kind.CUBE, 3)
    diag = canonical_direction(cube, Canonical.MAIN_DIAGONAL)
    r = regime_check(SectionQuery(cube, diag, 0.8))
    assert r.tag is RegimeTag.VERTEX_SEPARATING
    e1 = make_direction(cube, [1, 0, 0])
    assert regime_check(SectionQuery(cube, e1, 0.0)).tag is RegimeTag.GENERAL
    xp = Body(Kind.CROSSPOLYTOPE, 3)
    assert (
        regime_check(SectionQuery(xp, make_direction(xp, [1, 0, 0]), 0.5)).tag
        is RegimeTag.VERTEX_SEPARATING
    )
    assert regime_check(SectionQuery(cube, diag, 2.0)).tag is RegimeTag.EMPTY


def test_threshold_constants():
    simplex = Body(Kind.SIMPLEX, 3)
    tab = thresholds(simplex)
    assert tab.edge_midpoint_depth == pytest.approx(0.5, rel=1e-15)
    assert tab.volume_threshold == pytest.approx(7 * math.sqrt(3) / 30, rel=1e-14)
    xp4 = thresholds(Body(Kind.CROSSPOLYTOPE, 4))
    assert xp4.crosspoly_min_ratio == pytest.approx(5 * math.sqrt(10) / 32, rel=1e-14)
    cube3 = thresholds(Body(Kind.CUBE, 3))
    assert cube3.cube_n3_t0 == pytest.approx((math.sqrt(3) + 8 * math.sqrt(2)) / 18, rel=1e-14)
    assert cube3.cube_n3_t0 == pytest.approx(0.7248, abs=5e-5)


def test_threshold_ordering():
    for n in range(3, 10):
        tab = thresholds(Body(Kind.SIMPLEX, n))
        assert tab.volume_threshold < tab.edge_midpoint_depth
    for n in range(6, 13):
        tab = thresholds(Body(Kind.CUBE, n))
        assert tab.perimeter_threshold <= tab.cube_regime_floor + 1e-15


def test_face_counts():
    assert len(face_lattice(Body(Kind.CUBE, 3), 2)) == 6
    assert len(face_lattice(Body(Kind.CROSSPOLYTOPE, 3), 2)) == 8
    assert len(face_lattice(Body(Kind.SIMPLEX, 3), 1)) == 6
    assert len(face_lattice(Body(Kind.CUBE, 4), 2)) == 24  # C(4,2) * 2^2


def test_sample_direction_deterministic():
    body = Body(Kind.CUBE, 5)
    a = sample_direction(body, np.random.default_rng(7)).coords
    b = sample_direction(body, np.random.default_rng(7)).coords
    np.testing.assert_array_equal(a, b)


def test_sample_direction_constraints():
    body = Body(Kind.SIMPLEX, 4)
    rng = np.random.default_rng(0)
    for _ in range(50):
        a = sample_direction(body, rng).coords
        assert abs(np.sum(a)) < 1e-12
        assert abs(np.linalg.norm(a) - 1) < 1e-12


@settings(max_examples=60, deadline=None)
@given(
    st.integers(min_value=3, max_value=7),
    st.sampled_from(list(Kind)),
    st.integers(min_value=0, max_value=2 ** 31 - 1),
    st.floats(min_value=0.0, max_value=1.5),
)
def test_regime_brute_force(n, kind, seed, t):
    """VertexSeparating(apex v) always means <a,v> > t >= <a,w> for w != v."""
    body = Body(kind, n)
    a = sample_direction(body, np.random.default_rng(seed))
    r = regime_check(SectionQuery(body, a, t))
    dots = body.vertices() @ a.coords
    if r.tag is RegimeTag.VERTEX_SEPARATING:
        i = int(np.argmax(dots))
        assert dots[i] > t
        assert np.all(np.delete(dots, i) < t + 1e-12)
    elif r.tag is RegimeTag.EMPTY:
        assert np.max(dots) <= t + 1e-9
