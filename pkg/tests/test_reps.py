from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from lieportrait.checks import EXPECTED_WEIGHTS
from lieportrait.portrait import portrait_data
from lieportrait.reps import (Flavor, character, flavor_of, freudenthal, fundamental_rep,
                              weyl_dimension)
from lieportrait.rootsys import build_root_system
from lieportrait.torus import wall_points

coords2 = arrays(np.float64, (2,), elements=st.floats(-3, 3, allow_nan=False))


@pytest.mark.parametrize("key", sorted(EXPECTED_WEIGHTS))
def test_weight_lists(key):
    group, i = key
    rep = fundamental_rep(build_root_system(group), i)
    assert Counter(rep.weights) == EXPECTED_WEIGHTS[key]


def test_c2_rho1():
    rep = fundamental_rep(build_root_system("C2"), 1)
    assert rep.dim == 4
    assert set(rep.weights) == {(1, 0), (-1, 0), (-1, 1), (1, -1)}


def test_g2_adjoint_zero_weight():
    rep = fundamental_rep(build_root_system("G2"), 2)
    assert rep.dim == 14
    assert rep.weights[(0, 0)] == 2
    assert sum(1 for m in rep.weights.values() if m == 1) == 12


def test_a1():
    rep = fundamental_rep(build_root_system("A1"), 1)
    assert dict(rep.weights) == {(1,): 1, (-1,): 1}


@pytest.mark.parametrize("group,i,want", [
    ("A2", 1, Flavor.COMPLEX), ("A2", 2, Flavor.COMPLEX),
    ("C2", 1, Flavor.SELF_DUAL), ("C2", 2, Flavor.SELF_DUAL),
    ("G2", 1, Flavor.SELF_DUAL), ("G2", 2, Flavor.SELF_DUAL),
    ("A1", 1, Flavor.SELF_DUAL),
])
def test_flavor(group, i, want):
    assert flavor_of(build_root_system(group), i) is want


def test_bad_index():
    with pytest.raises(ValueError):
        fundamental_rep(build_root_system("C2"), 3)


@pytest.mark.parametrize("group,hw,dim", [
    ("A2", (1, 1), 8), ("C2", (1, 1), 16), ("G2", (1, 1), 64), ("G2", (2, 0), 27), ("C2", (0, 2), 14),
])
def test_freudenthal_beyond_fundamentals(group, hw, dim):
    # Freudenthal and the dimension formula are independent routes
    rs = build_root_system(group)
    assert sum(freudenthal(rs, hw).values()) == weyl_dimension(rs, hw) == dim


def test_a1_character():
    rep = fundamental_rep(build_root_system("A1"), 1)
    for a in np.linspace(0, 1, 17):
        assert character(rep, [a]) == pytest.approx(2 * np.cos(2 * np.pi * a), abs=1e-14)


def test_identity_gives_dimension(any_group):
    rs, reps = any_group
    for rep in reps:
        assert character(rep, np.zeros(rs.rank)) == pytest.approx(rep.dim, abs=1e-12)


def test_c2_rho2_on_first_wall():
    rs = build_root_system("C2")
    rep = fundamental_rep(rs, 2)
    t = np.linspace(0, 0.5, 33)
    chi = character(rep, wall_points(rs, 1, t))
    assert np.allclose(chi, 4 * np.cos(2 * np.pi * t) + 1, atol=1e-12)


@pytest.mark.parametrize("group", ["A2", "C2", "G2"])
@settings(max_examples=50, deadline=None)
@given(v=coords2)
def test_character_invariants(group, v):
    rs, reps = portrait_data(group)
    q = np.round(v * 3)
    for rep in reps:
        base = character(rep, v)
        assert abs(base) <= rep.dim + 1e-10
        assert abs(character(rep, v + q) - base) <= 1e-10
        for w in rs.weyl_group:
            assert abs(character(rep, w.coroot_action() @ v) - base) <= 1e-10
        if rep.flavor is Flavor.SELF_DUAL:
            assert abs(base.imag) <= 1e-10


@settings(max_examples=50, deadline=None)
@given(v=coords2)
def test_center_phases_c2(v):
    rs, (r1, r2) = portrait_data("C2")
    shift = np.array([0.5, 1.0])  # omega_2^vee
    assert abs(character(r2, v + shift) - character(r2, v)) <= 1e-10
    assert abs(character(r1, v + shift) + character(r1, v)) <= 1e-10


@settings(max_examples=50, deadline=None)
@given(v=coords2)
def test_center_phases_a2(v):
    rs, (r1, r2) = portrait_data("A2")
    shift = np.array([2 / 3, 1 / 3])  # omega_1^vee
    # phase exp(2 pi i <omega_i, omega_1^vee>)
    assert abs(character(r1, v + shift) - np.exp(2j * np.pi * 2 / 3) * character(r1, v)) <= 1e-10
    assert abs(character(r2, v + shift) - np.exp(2j * np.pi / 3) * character(r2, v)) <= 1e-10


def test_batch_matches_single():
    rs, reps = portrait_data("G2")
    v = np.random.default_rng(3).random((50, 2))
    batch = character(reps[1], v, chunk=7)
    single = np.array([character(reps[1], row) for row in v])
    assert np.allclose(batch, single, atol=1e-13)
