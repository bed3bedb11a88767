"""Acceptance criteria, runnable from the CLI (``lieportrait check``) and from pytest.

Each criterion is a function of a group label returning ``CheckResult`` rows;
``CRITERIA`` lists the groups each one applies to.
"""

from __future__ import annotations

import tempfile
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable

import numpy as np

from . import haar
from .portrait import (boundary_polyline, center_action, center_elements, closed_form_residual,
                       delta, membership, portrait_data, shotgun)
from .reps import Flavor, character
from .rootsys import GroupType
from .torus import alcove, sample_uniform, walls

SEED = 20240601


@dataclass(frozen=True)
class CheckResult:
    criterion: int
    name: str
    group: str
    passed: bool
    detail: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} [{self.criterion:>2}] {self.group} {self.name}: {self.detail}"


def _res(n, name, group, ok, detail):
    return CheckResult(n, name, str(group), bool(ok), detail)


# Paper weight lists, omega-basis integer coordinates with multiplicity.
def _pm(*ws):
    out = Counter()
    for w in ws:
        out[w] += 1
        out[tuple(-x for x in w)] += 1
    return out


EXPECTED_WEIGHTS: dict[tuple[str, int], Counter] = {
    ("A2", 1): Counter({(1, 0): 1, (-1, 1): 1, (0, -1): 1}),
    ("A2", 2): Counter({(0, 1): 1, (1, -1): 1, (-1, 0): 1}),
    ("C2", 1): _pm((1, 0), (-1, 1)),
    ("C2", 2): _pm((0, 1), (2, -1)) + Counter({(0, 0): 1}),
    ("G2", 1): _pm((1, 0), (-1, 1), (2, -1)) + Counter({(0, 0): 1}),
    ("G2", 2): _pm((0, 1), (3, -1), (1, 0), (-1, 1), (2, -1), (-3, 2)) + Counter({(0, 0): 2}),
}
EXPECTED_DIMS = {"A2": (3, 3), "C2": (4, 5), "G2": (7, 14)}

S3 = 3 * np.sqrt(3) / 2
EXPECTED_VERTICES = {
    "A2": [(3.0, 0.0), (-1.5, -S3), (-1.5, S3)],
    "C2": [(4.0, 5.0), (0.0, -3.0), (-4.0, 5.0)],
    "G2": [(7.0, 14.0), (-2.0, 5.0), (-1.0, -2.0)],
}


def c1_vertices(group):
    rs, reps = portrait_data(group)
    out = []
    for v, want in zip(alcove(rs).vertices, EXPECTED_VERTICES[group]):
        got = delta(rs, reps, [float(c) for c in v])
        err = float(np.max(np.abs(got - np.array(want))))
        out.append(_res(1, f"vertex image ({want[0]:.6g}, {want[1]:.6g})", group, err <= 1e-9,
                        f"max abs error {err:.2e} (tol 1e-9)"))
    return out


def c2_weights(group):
    rs, reps = portrait_data(group)
    out = []
    for rep in reps:
        ok = Counter(rep.weights) == EXPECTED_WEIGHTS[(group, rep.index)]
        out.append(_res(2, f"weights of rho_{rep.index}", group, ok,
                        f"{len(rep.weights)} distinct weights, dim {rep.dim}"))
    dims = tuple(r.dim for r in reps)
    out.append(_res(2, "dimensions", group, dims == EXPECTED_DIMS[group], f"{dims}"))
    return out


def c3_flavor(group):
    rs, reps = portrait_data(group)
    want = Flavor.COMPLEX if group == "A2" else Flavor.SELF_DUAL
    got = [r.flavor for r in reps]
    return [_res(3, "flavors", group, all(f is want for f in got),
                 ", ".join(f.value for f in got))]


def c4_boundary(group, samples=512):
    rs, reps = portrait_data(group)
    wall_list = walls(rs) + (["extended"] if group == "G2" else [])
    out = []
    for w in wall_list:
        curve = boundary_polyline(rs, reps, w, samples - 1)
        res = closed_form_residual(group, curve.points[:, 0], curve.points[:, 1], curve.closed_form)
        err = float(np.max(np.abs(res)))
        out.append(_res(4, f"wall {w} on {curve.closed_form}", group, err <= 1e-9,
                        f"max |residual| {err:.2e} over {len(res)} samples (tol 1e-9)"))
    if group == "A2":
        from .portrait import deltoid_arc
        s = np.linspace(0, 2 * np.pi / 3, samples)
        arc = deltoid_arc(s)
        err = float(np.max(np.abs(closed_form_residual(group, arc[:, 0], arc[:, 1], "deltoid"))))
        curve = boundary_polyline(rs, reps, 2, samples - 1)
        gap = float(np.max(np.abs(curve.points - deltoid_arc(2 * np.pi * curve.t / 3))))
        out.append(_res(4, "generating arc", group, err <= 1e-9 and gap <= 1e-9,
                        f"quartic residual {err:.2e}, wall-2 vs arc {gap:.2e}"))
    return out


def c5_cloud_and_ranges(group, count=10**6):
    rs, reps = portrait_data(group)
    cloud = shotgun(rs, reps, SEED, count)
    m = membership(group, cloud[:, 0], cloud[:, 1])
    out = [_res(5, f"cloud containment ({count} points)", group, m.min() >= -1e-7,
                f"min membership {m.min():.2e} (tol -1e-7)")]
    scan = np.vstack([boundary_polyline(rs, reps, w, 4096).points for w in walls(rs)] + [cloud])
    if group == "C2":
        lo, hi = scan[:, 0].min(), scan[:, 0].max()
        ok = abs(lo + 4) <= 1e-6 and abs(hi - 4) <= 1e-6
        out.append(_res(5, "x-range [-4, 4]", group, ok, f"[{lo:.9f}, {hi:.9f}]"))
    if group == "G2":
        lo, hi, ymin = scan[:, 0].min(), scan[:, 0].max(), scan[:, 1].min()
        ok = abs(lo + 2) <= 1e-6 and abs(hi - 7) <= 1e-6
        out.append(_res(5, "x-range [-2, 7]", group, ok, f"[{lo:.9f}, {hi:.9f}]"))
        out.append(_res(5, "min y = -2", group, abs(ymin + 2) <= 1e-6, f"{ymin:.9f}"))
    return out


def c6_rank_one(group="A1"):
    rs, reps = portrait_data("A1")
    a = sample_uniform(rs, SEED, 1000)[:, 0]
    err = float(np.max(np.abs(delta(rs, reps, a[:, None]) - 2 * np.cos(2 * np.pi * a))))
    ends = [delta(rs, reps, [float(v[0])]) for v in alcove(rs).vertices]
    cloud = shotgun(rs, reps, SEED, 10**5)
    ok_range = (abs(ends[0] - 2) <= 1e-12 and abs(ends[1] + 2) <= 1e-12
                and cloud.min() >= -2 - 1e-12 and cloud.max() <= 2 + 1e-12)
    return [
        _res(6, "delta(exp a) = 2cos(2 pi a)", "A1", err <= 1e-12, f"max error {err:.2e} (tol 1e-12)"),
        _res(6, "portrait = [-2, 2]", "A1", ok_range,
             f"alcove ends -> {ends[0]:.12f}, {ends[1]:.12f}; cloud in [{cloud.min():.6f}, {cloud.max():.6f}]"),
    ]


C2_MAX = 2 ** 3 / (np.pi ** 2 * 3 ** 1.5)
G2_MAX = 2 ** 2 * 3 ** 3 / (np.pi ** 2 * 5 ** 2.5)


def c7_maxima(group):
    out = []
    if group == "C2":
        d = haar.exact_discriminant("C2", Fraction(0), Fraction(-1, 3))
        out.append(_res(7, "D(0, -1/3) = 1024/27", group, d == Fraction(1024, 27), f"{d}"))
        r = haar.max_density("C2")
        out.append(_res(7, "max density", group, abs(r.value - C2_MAX) <= 1e-8,
                        f"{r.value:.12f} vs {C2_MAX:.12f}"))
        t1, t2 = r.argmax_torus
        out.append(_res(7, "argmax torus (~0.348, 1/2)", group,
                        abs(t2 - 0.5) <= 1e-6 and abs(t1 - 0.348) <= 5e-4,
                        f"({t1:.9f}, {t2:.9f}); image ({r.argmax_xy[0]:.2e}, {r.argmax_xy[1]:.9f})"))
    if group == "G2":
        d = haar.exact_discriminant("G2", Fraction(-1, 5), Fraction(-2, 5))
        want = Fraction(2 ** 8 * 3 ** 6, 5 ** 5)
        out.append(_res(7, "D(-1/5, -2/5) = 2^8 3^6 5^-5", group, d == want, f"{d}"))
        r = haar.max_density("G2")
        out.append(_res(7, "max density", group, abs(r.value - G2_MAX) <= 1e-8,
                        f"{r.value:.12f} vs {G2_MAX:.12f}"))
        err = max(abs(r.argmax_xy[0] + 0.2), abs(r.argmax_xy[1] + 0.4))
        out.append(_res(7, "argmax image (-1/5, -2/5)", group, err <= 1e-6, f"error {err:.2e}"))
    return out


def c8_normalisation(group):
    grid = haar.density_grid(group, resolution=(1000, 1000))
    total = grid.integral
    out = [_res(8, "integral of density = 1", group, abs(total - 1) <= 0.01,
                f"{total:.6f} at 1000x1000 (tol 0.01)")]
    if group == "G2":
        X, _ = grid.mesh()
        tail = grid.partial_integral(X >= 6)
        out.append(_res(8, "integral over x >= 6", group, tail < 1e-5, f"{tail:.3e} (< 1e-5)"))
    return out


def c9_cross_validation(group, count=10**4):
    rs, _ = portrait_data(group)
    v = sample_uniform(rs, SEED + 9, count)
    gap = haar.weyl_product_check(rs, v, dps=40)
    return [_res(9, "(2pi)^2n phi^2 = |D(delta)|", group, gap.max() <= 1e-8,
                 f"max relative gap {gap.max():.2e} over {count} points (40-digit evaluation)")]


def c10_invariance(group, count=1000):
    rs, reps = portrait_data(group)
    v = sample_uniform(rs, SEED + 10, count)
    out = []
    err = 0.0
    for rep in reps:
        base = character(rep, v)
        for w in rs.weyl_group:
            err = max(err, float(np.max(np.abs(character(rep, v @ w.coroot_action().T) - base))))
    out.append(_res(10, "Weyl invariance", group, err <= 1e-9, f"max error {err:.2e}"))

    q = np.random.default_rng(SEED).integers(-5, 6, size=v.shape)
    err = max(float(np.max(np.abs(character(rep, v + q) - character(rep, v)))) for rep in reps)
    out.append(_res(10, "coroot-lattice translation", group, err <= 1e-9, f"max error {err:.2e}"))

    d0 = np.atleast_2d(delta(rs, reps, v).T).T
    err = 0.0
    for c in center_elements(rs):
        shift = np.array([float(x) for x in c])
        d1 = np.atleast_2d(delta(rs, reps, v + shift).T).T
        m = center_action(rs, c)
        err = max(err, float(np.max(np.abs(d1 - d0 @ m.T))))
    out.append(_res(10, "centre equivariance", group, err <= 1e-9,
                    f"max error {err:.2e} over {len(center_elements(rs))} central elements"))
    if group == "A2":
        d1 = delta(rs, reps, np.mod(-v, 1.0))
        err = float(np.max(np.abs(d1 - d0 * np.array([1.0, -1.0]))))
        out.append(_res(10, "conjugation reflection", group, err <= 1e-9, f"max error {err:.2e}"))
    return out


def c11_determinism(group="G2"):
    from .cli import run

    with tempfile.TemporaryDirectory() as tmp:
        paths = [Path(tmp) / f"run{k}.csv" for k in range(2)]
        codes = [run(["sample", "--group", "G2", "--count", "1000", "--seed", "7", "--out", str(p)])
                 for p in paths]
        a, b = (p.read_bytes() for p in paths)
    ok = codes == [0, 0] and a == b and a.startswith(b"x,y\n")
    return [_res(11, "sample CSV byte-identical", "G2", ok, f"{len(a)} bytes, exit codes {codes}")]


CRITERIA: list[tuple[Callable, tuple[str, ...]]] = [
    (c1_vertices, ("A2", "C2", "G2")),
    (c2_weights, ("A2", "C2", "G2")),
    (c3_flavor, ("A2", "C2", "G2")),
    (c4_boundary, ("A2", "C2", "G2")),
    (c5_cloud_and_ranges, ("A2", "C2", "G2")),
    (c6_rank_one, ("A1",)),
    (c7_maxima, ("C2", "G2")),
    (c8_normalisation, ("C2", "G2")),
    (c9_cross_validation, ("C2", "G2")),
    (c10_invariance, ("A1", "A2", "C2", "G2")),
    (c11_determinism, ("G2",)),
]

ALL_GROUPS = tuple(g.value for g in GroupType)


def run_checks(groups=None):
    """Yield a ``CheckResult`` per sub-check, for the given group labels (default: all)."""
    selected = ALL_GROUPS if groups is None else tuple(GroupType.parse(g).value for g in groups)
    for fn, applies in CRITERIA:
        for g in applies:
            if g in selected:
                yield from fn(g)
