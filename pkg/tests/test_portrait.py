import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from lieportrait.portrait import (boundary_polyline, center_action, center_elements, center_orbit,
                                  center_symmetry, closed_form_residual, curve_tags, delta,
                                  deltoid_arc, deltoid_outline, membership, portrait_data,
                                  region_spec, shotgun)
from lieportrait.torus import EXTENDED, sample_uniform, walls

S3 = 3 * np.sqrt(3) / 2


@pytest.mark.parametrize("group,want", [("A2", (3, 0)), ("C2", (4, 5)), ("G2", (7, 14))])
def test_identity_image(group, want):
    rs, reps = portrait_data(group)
    assert np.allclose(delta(rs, reps, [0.0, 0.0]), want, atol=1e-12)


def test_g2_third_cusp():
    rs, reps = portrait_data("G2")
    v = np.array([2 / 3, 1.0])  # omega_1^vee / 3
    assert np.allclose(delta(rs, reps, v), (-2, 5), atol=1e-12)


def test_a1_scalar():
    rs, reps = portrait_data("A1")
    assert delta(rs, reps, [0.25]) == pytest.approx(0.0, abs=1e-15)
    assert delta(rs, reps, [0.5]) == pytest.approx(-2.0)


def test_empty_shotgun(any_group):
    rs, reps = any_group
    assert len(shotgun(rs, reps, 1, 0)) == 0


def test_shotgun_inside_deltoid():
    rs, reps = portrait_data("A2")
    pts = shotgun(rs, reps, 11, 20000)
    assert membership("A2", pts[:, 0], pts[:, 1]).min() >= -1e-7


def test_c2_wall1_segment():
    rs, reps = portrait_data("C2")
    c = boundary_polyline(rs, reps, 1, 64)
    assert np.allclose(c.points[0], (4, 5)) and np.allclose(c.points[-1], (0, -3))
    assert np.allclose(c.points[:, 1], 2 * c.points[:, 0] - 3, atol=1e-12)
    assert np.all(np.diff(c.t) > 0)


def test_c2_wall2_parabola():
    rs, reps = portrait_data("C2")
    c = boundary_polyline(rs, reps, 2, 64)
    assert np.allclose(c.points[:, 1], c.points[:, 0] ** 2 / 4 + 1, atol=1e-12)
    # x = 4 cos(pi t), y = 3 + 2 cos(2 pi t)
    assert np.allclose(c.points[:, 0], 4 * np.cos(np.pi * c.t), atol=1e-12)
    assert np.allclose(c.points[:, 1], 3 + 2 * np.cos(2 * np.pi * c.t), atol=1e-12)


def test_g2_extended_wall():
    rs, reps = portrait_data("G2")
    c = boundary_polyline(rs, reps, EXTENDED, 6)
    u = 2 * np.pi * c.t
    assert np.allclose(c.points[-1], (-1, -2), atol=1e-12)
    assert np.allclose(c.points[4], (-2, 5), atol=1e-12)  # u = 2 pi / 3
    cu = np.cos(u)
    assert np.allclose(c.points[:, 0], 4 * cu ** 2 + 4 * cu - 1, atol=1e-12)
    assert np.allclose(c.points[:, 1], 16 * cu ** 3 + 4 * cu ** 2 - 8 * cu + 2, atol=1e-12)


def test_g2_second_wall():
    rs, reps = portrait_data("G2")
    c = boundary_polyline(rs, reps, 2, 40)
    cu = np.cos(2 * np.pi * c.t)
    assert np.allclose(c.points[:, 0], 3 + 4 * cu, atol=1e-12)
    assert np.allclose(c.points[:, 1], 4 * cu ** 2 + 8 * cu + 2, atol=1e-12)


def test_boundary_errors():
    rs, reps = portrait_data("C2")
    with pytest.raises(ValueError):
        boundary_polyline(rs, reps, 4, 10)
    with pytest.raises(ValueError):
        boundary_polyline(rs, reps, EXTENDED, 10)
    with pytest.raises(ValueError):
        boundary_polyline(rs, reps, 1, 1)


def test_every_boundary_point_satisfies_its_curve(rank2):
    rs, reps = rank2
    extra = [EXTENDED] if rs.group_type.value == "G2" else []
    for w in walls(rs) + extra:
        c = boundary_polyline(rs, reps, w, 300)
        res = closed_form_residual(rs.group_type, c.points[:, 0], c.points[:, 1], c.closed_form)
        assert np.max(np.abs(res)) <= 1e-9


def test_deltoid_quartic_symbolically():
    # substitute x + iy = 2z + z^-2 with |z| = 1 and expand as a Laurent polynomial
    z = sympy.symbols("z")
    w = 2 * z + z ** -2
    wb = 2 / z + z ** 2
    x, y = (w + wb) / 2, (w - wb) / (2 * sympy.I)
    r2 = x ** 2 + y ** 2
    quartic = r2 ** 2 + 18 * r2 - 27 - 8 * (x ** 3 - 3 * x * y ** 2)
    assert sympy.expand(quartic) == 0


def test_deltoid_quartic_on_dense_arc():
    s = np.linspace(0, 2 * np.pi, 20001)
    p = deltoid_arc(s)
    assert np.max(np.abs(closed_form_residual("A2", p[:, 0], p[:, 1], "deltoid"))) <= 1e-9


def test_deltoid_outline_closes():
    out = deltoid_outline(90)
    assert np.allclose(out[0], out[-1])
    assert np.allclose(out[90], (-1.5, S3))
    assert np.allclose(out[180], (-1.5, -S3))


def test_closed_form_examples():
    assert closed_form_residual("G2", 7.0, 14.0, "cubic") == 0
    assert closed_form_residual("C2", 4.0, 5.0, "parabola") == 0
    assert closed_form_residual("C2", -4.0, 5.0, "parabola") == 0
    assert closed_form_residual("G2", -1.0, -2.0, "parabola") == 0
    with pytest.raises(ValueError):
        closed_form_residual("C2", 0, 0, "cubic")
    assert set(curve_tags("C2")) == {"segment_left", "segment_right", "parabola"}


def test_membership_examples():
    assert membership("C2", 0, 0) > 0
    assert membership("C2", 0, 2) < 0
    assert abs(membership("G2", 7, 14)) <= 1e-9
    assert membership("C2", 10, 18) < 0  # between tangent line and parabola, beyond x = 4
    with pytest.raises(ValueError):
        membership("A1", 0, 0)


@pytest.mark.parametrize("group", ["A2", "C2", "G2"])
def test_region_vertices_on_two_curves(group):
    spec = region_spec(group)
    for v in spec.vertices:
        assert len(spec.curves_through(v)) == 2
        assert abs(membership(group, *v)) <= 1e-9
    assert membership(group, *spec.inside_point) > 0


@pytest.mark.parametrize("group", ["A2", "C2", "G2"])
def test_membership_orientation_against_cloud(group):
    rs, reps = portrait_data(group)
    pts = shotgun(rs, reps, 5, 10**5)
    m = membership(group, pts[:, 0], pts[:, 1])
    assert m.min() >= -1e-7
    assert np.mean(m > 0) > 0.9  # a flipped orientation would make nearly all negative


def test_center_orbits():
    a2 = center_orbit("A2", (3, 0))
    assert len(a2) == 3
    want = [(3, 0), (-1.5, S3), (-1.5, -S3)]
    assert all(any(np.allclose(p, q) for p in a2) for q in want)
    c2 = center_orbit("C2", (4, 5))
    assert sorted(c2) == [(-4.0, 5.0), (4.0, 5.0)]
    assert center_orbit("G2", (1.5, 2.5)) == [(1.5, 2.5)]


@pytest.mark.parametrize("group,order", [("A1", 2), ("A2", 3), ("C2", 2), ("G2", 1)])
def test_center_is_a_group(group, order):
    sym = center_symmetry(group)
    assert len(sym.transforms) == order
    mats = sym.transforms
    for a in mats:
        for b in mats:
            assert any(np.allclose(a @ b, c) for c in mats)


@pytest.mark.parametrize("group", ["A2", "C2"])
def test_center_equivariance(group):
    rs, reps = portrait_data(group)
    v = sample_uniform(rs, 8, 500)
    base = delta(rs, reps, v)
    for c in center_elements(rs):
        shifted = delta(rs, reps, v + np.array([float(x) for x in c]))
        assert np.allclose(shifted, base @ center_action(rs, c).T, atol=1e-9)


@settings(max_examples=100, deadline=None)
@given(v=st.tuples(st.floats(0, 1), st.floats(0, 1)))
def test_a2_conjugation(v):
    rs, reps = portrait_data("A2")
    v = np.array(v)
    a = delta(rs, reps, v)
    b = delta(rs, reps, np.mod(-v, 1))
    assert np.allclose(b, (a[0], -a[1]), atol=1e-9)


def test_range_claims():
    rs, reps = portrait_data("G2")
    pts = np.vstack([boundary_polyline(rs, reps, w, 2000).points for w in walls(rs)])
    assert pts[:, 0].min() == pytest.approx(-2, abs=1e-6)
    assert pts[:, 0].max() == pytest.approx(7, abs=1e-6)
    assert pts[:, 1].min() == pytest.approx(-2, abs=1e-6)


def test_a1_interval():
    rs, reps = portrait_data("A1")
    c = boundary_polyline(rs, reps, 1, 100)
    assert c.points.max() == pytest.approx(2) and c.points.min() == pytest.approx(-2)
