"""The character map delta into the plane, its boundary curves and regions.

For C2 and G2 both fundamental representations are self-dual and
``delta = (chi_1, chi_2)``.  For A2 the representations are complex and
``delta = (Re chi_1, Im chi_1)``, always using rho_1; choosing rho_2 instead
flips the sign of the second coordinate.  For A1 ``delta`` is the scalar
``chi_1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .reps import Flavor, Representation, character, fundamental_reps
from .rootsys import GroupType, RootSystemData, build_root_system
from .torus import EXTENDED, Wall, sample_uniform, wall_points, wall_range

IMAG_TOL = 1e-9


class PortraitError(RuntimeError):
    pass


def delta(rs: RootSystemData, reps: Sequence[Representation] | None, coords) -> np.ndarray:
    """Portrait coordinates of torus points.

    Returns shape ``(N, 2)`` for rank 2 (``(2,)`` for a single point) and
    ``(N,)`` for A1.
    """
    reps = fundamental_reps(rs) if reps is None else tuple(reps)
    v = np.asarray(getattr(coords, "coords", coords), dtype=np.float64)
    single = v.ndim == 1
    v = np.atleast_2d(v)
    if rs.rank == 1:
        chi = character(reps[0], v)
        _check_real(chi, reps[0])
        out = chi.real
        return float(out[0]) if single else out
    if reps[0].flavor is Flavor.COMPLEX:
        chi = character(reps[0], v)
        out = np.column_stack([chi.real, chi.imag])
    else:
        cols = []
        for rep in reps:
            chi = character(rep, v)
            _check_real(chi, rep)
            cols.append(chi.real)
        out = np.column_stack(cols)
    return out[0] if single else out


def _check_real(chi: np.ndarray, rep: Representation) -> None:
    if chi.size and np.max(np.abs(chi.imag)) > IMAG_TOL:
        raise PortraitError(
            f"character of self-dual rho_{rep.index} has imaginary part "
            f"{np.max(np.abs(chi.imag)):.3g}"
        )


def shotgun(rs: RootSystemData, reps, seed: int, count: int,
            chunk: int = 1 << 18) -> np.ndarray:
    """Portrait points of ``count`` uniformly sampled torus points."""
    coords = sample_uniform(rs, seed, count)
    if rs.rank == 1:
        return delta(rs, reps, coords) if count else np.empty(0)
    out = np.empty((count, 2))
    for start in range(0, count, chunk):
        out[start:start + chunk] = delta(rs, reps, coords[start:start + chunk])
    return out


# --- boundary curves -------------------------------------------------------

# Curve tags per group, per wall.
_WALL_TAGS: dict[GroupType, dict[Wall, str]] = {
    GroupType.A1: {1: "interval"},
    GroupType.A2: {1: "deltoid", 2: "deltoid", 3: "deltoid"},
    GroupType.C2: {1: "segment_right", 2: "parabola", 3: "segment_left"},
    GroupType.G2: {1: "cubic", 2: "parabola", 3: "cubic", EXTENDED: "cubic"},
}


@dataclass(frozen=True)
class BoundaryCurve:
    group_type: GroupType
    wall: Wall
    t: np.ndarray
    points: np.ndarray  # shape (len(t), 2), or (len(t),) for A1
    closed_form: str


def boundary_polyline(rs: RootSystemData, reps, wall: Wall, segments: int) -> BoundaryCurve:
    """``delta o exp`` along an alcove wall at ``segments + 1`` equally spaced parameters."""
    if segments < 2:
        raise ValueError("segments must be at least 2")
    if wall not in _WALL_TAGS[rs.group_type]:
        raise ValueError(f"invalid wall {wall!r} for {rs.group_type.value}")
    lo, hi = wall_range(rs, wall)
    ts = np.linspace(float(lo), float(hi), segments + 1)
    pts = delta(rs, reps, wall_points(rs, wall, ts))
    return BoundaryCurve(rs.group_type, wall, ts, pts, _WALL_TAGS[rs.group_type][wall])


def deltoid_arc(s: np.ndarray) -> np.ndarray:
    """Upper boundary arc of the A2 portrait, ``2 e^{is} + e^{-2is}`` for s in [0, 2pi/3]."""
    s = np.asarray(s, dtype=np.float64)
    return np.column_stack([2 * np.cos(s) + np.cos(2 * s), 2 * np.sin(s) - np.sin(2 * s)])


def deltoid_outline(segments: int) -> np.ndarray:
    """Closed A2 outline: the generating arc and its two rotations by 120 degrees."""
    arc = deltoid_arc(np.linspace(0.0, 2 * np.pi / 3, segments + 1))
    rot = _rotation(2 * np.pi / 3)
    parts = [arc, arc @ rot.T, arc @ rot.T @ rot.T]
    return np.vstack([parts[0], parts[1][1:], parts[2][1:]])


# --- closed forms ----------------------------------------------------------

def _deltoid(x, y):
    r2 = x * x + y * y
    return r2 * r2 + 18 * r2 - 27 - 8 * (x ** 3 - 3 * x * y * y)


_CLOSED_FORMS: dict[GroupType, dict[str, Callable]] = {
    GroupType.A2: {"deltoid": _deltoid},
    GroupType.C2: {
        "segment_right": lambda x, y: y - (2 * x - 3),
        "segment_left": lambda x, y: y - (-2 * x - 3),
        "parabola": lambda x, y: y - (x * x / 4 + 1),
    },
    GroupType.G2: {
        "parabola": lambda x, y: y - (x * x + 2 * x - 7) / 4,
        "cubic": lambda x, y: (y * y + 10 * y - 7) - (4 * x ** 3 - x * x - 2 * x - 10 * x * y),
    },
}


def curve_tags(group: GroupType | str) -> list[str]:
    return list(_CLOSED_FORMS.get(GroupType.parse(group), {}))


def closed_form_residual(group: GroupType | str, x, y, curve_tag: str):
    """Left minus right side of the tagged boundary equation.

    ``deltoid`` is the quartic ``(x^2+y^2)^2 + 18(x^2+y^2) - 27 - 8(x^3 - 3xy^2)``.
    """
    gt = GroupType.parse(group)
    try:
        f = _CLOSED_FORMS[gt][curve_tag]
    except KeyError:
        raise ValueError(f"no curve {curve_tag!r} for {gt.value}") from None
    return f(x, y)


# --- regions ---------------------------------------------------------------

def _cubic_branch(x, sign):
    q = np.maximum(x + 2.0, 0.0) ** 1.5  # 8 + 12x + 6x^2 + x^3 = (x + 2)^3
    return -5 - 5 * x + sign * 2 * q


def _c2_margin(x, y):
    return np.minimum.reduce([
        x * x / 4 + 1 - y,
        y - (2 * x - 3),
        y - (-2 * x - 3),
        4 - np.abs(x),
    ])


def _g2_margin(x, y):
    lower = np.where(x <= -1, _cubic_branch(x, -1), (x * x + 2 * x - 7) / 4)
    m = np.minimum(_cubic_branch(x, 1) - y, y - lower)
    return np.where(x < -2, np.minimum(m, x + 2), m)


def _a2_margin(x, y):
    return -_deltoid(x, y)


_MARGINS = {GroupType.A2: _a2_margin, GroupType.C2: _c2_margin, GroupType.G2: _g2_margin}


def membership(group: GroupType | str, x, y):
    """Signed margin: positive inside the portrait, zero on its boundary."""
    gt = GroupType.parse(group)
    if gt not in _MARGINS:
        raise ValueError(f"membership needs a rank-2 group, got {gt.value}")
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    m = _MARGINS[gt](x, y)
    return float(m) if np.ndim(m) == 0 else m


@dataclass(frozen=True)
class Curve:
    name: str
    tag: str  # closed-form tag
    on: Callable[[float, float, float], bool]


@dataclass(frozen=True)
class RegionSpec:
    group_type: GroupType
    curves: tuple[Curve, ...]
    vertices: tuple[tuple[float, float], ...]
    # the region is not convex; this is a known interior point, not the centroid
    inside_point: tuple[float, float]

    def curves_through(self, p, tol: float = 1e-12) -> list[str]:
        return [c.name for c in self.curves if c.on(p[0], p[1], tol)]


def _on(tag_gt, tag, xlo, xhi, extra=None):
    def test(x, y, tol):
        if not xlo - tol <= x <= xhi + tol:
            return False
        if abs(closed_form_residual(tag_gt, x, y, tag)) > tol * max(1.0, abs(x) ** 3, abs(y) ** 2):
            return False
        return extra is None or extra(x, y, tol)
    return test


def _sector(k):
    lo, hi = 2 * np.pi * k / 3, 2 * np.pi * (k + 1) / 3

    def test(x, y, tol):
        ang = np.mod(np.arctan2(y, x), 2 * np.pi)
        if k == 2 and ang < tol:
            ang += 2 * np.pi
        return lo - 1e-9 <= ang <= hi + 1e-9
    return test


def region_spec(group: GroupType | str) -> RegionSpec:
    gt = GroupType.parse(group)
    s3 = 3 * np.sqrt(3) / 2
    if gt is GroupType.A2:
        curves = tuple(
            Curve(f"arc{k}", "deltoid", _on(gt, "deltoid", -1.5, 3.0, _sector(k)))
            for k in range(3)
        )
        return RegionSpec(gt, curves, ((3.0, 0.0), (-1.5, s3), (-1.5, -s3)), (0.0, 0.0))
    if gt is GroupType.C2:
        curves = (
            Curve("segment_right", "segment_right", _on(gt, "segment_right", 0, 4)),
            Curve("segment_left", "segment_left", _on(gt, "segment_left", -4, 0)),
            Curve("parabola", "parabola", _on(gt, "parabola", -4, 4)),
        )
        return RegionSpec(gt, curves, ((4.0, 5.0), (-4.0, 5.0), (0.0, -3.0)), (0.0, -1.0 / 3))
    if gt is GroupType.G2:
        def upper(x, y, tol):
            return abs(y - _cubic_branch(x, 1)) <= tol * 100
        def lower(x, y, tol):
            return abs(y - _cubic_branch(x, -1)) <= tol * 100
        curves = (
            Curve("parabola", "parabola", _on(gt, "parabola", -1, 7)),
            Curve("cubic_upper", "cubic", _on(gt, "cubic", -2, 7, upper)),
            Curve("cubic_lower", "cubic", _on(gt, "cubic", -2, -1, lower)),
        )
        return RegionSpec(gt, curves, ((7.0, 14.0), (-2.0, 5.0), (-1.0, -2.0)), (-0.2, -0.4))
    raise ValueError(f"no region for {gt.value}")


# --- centre -----------------------------------------------------------------

def _rotation(theta: float) -> np.ndarray:
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -s], [s, c]])


def center_elements(rs: RootSystemData) -> list[tuple[Fraction, ...]]:
    """Representatives in ``[0, 1)^n`` of the coweight lattice modulo the coroot lattice.

    These are the torus coordinates of the central elements.
    """
    orders = [max(c.denominator for c in cw) for cw in rs.coweights]
    found: dict[tuple[Fraction, ...], None] = {}
    for ks in itertools.product(*(range(o) for o in orders)):
        v = tuple(
            sum((k * cw[j] for k, cw in zip(ks, rs.coweights)), Fraction(0)) % 1
            for j in range(rs.rank)
        )
        found.setdefault(v, None)
    return sorted(found)


def center_action(rs: RootSystemData, c: Sequence[Fraction]) -> np.ndarray:
    """Linear map of the plane induced by translating torus coordinates by ``c``.

    ``rho_i`` acts on the centre by the scalar ``exp(2 pi i <omega_i, c>)``.
    """
    phases = [np.exp(2j * np.pi * float(c[i])) for i in range(rs.rank)]
    reps = fundamental_reps(rs)
    if rs.rank == 1:
        return np.array([[phases[0].real]])
    if reps[0].flavor is Flavor.COMPLEX:
        return _rotation(np.angle(phases[0]))
    return np.diag([p.real for p in phases])


@dataclass(frozen=True)
class CenterSymmetry:
    group_type: GroupType
    transforms: tuple[np.ndarray, ...] = field(repr=False)


def center_symmetry(group: GroupType | str) -> CenterSymmetry:
    rs = build_root_system(group)
    mats = tuple(center_action(rs, c) for c in center_elements(rs))
    return CenterSymmetry(rs.group_type, mats)


def center_orbit(group: GroupType | str, p) -> list[tuple[float, ...]]:
    """Distinct images of ``p`` under the centre (at most |Z(G)| points)."""
    sym = center_symmetry(group)
    p = np.atleast_1d(np.asarray(p, dtype=np.float64))
    orbit: list[tuple[float, ...]] = []
    for m in sym.transforms:
        q = m @ p
        if not any(np.allclose(q, o, atol=1e-12) for o in orbit):
            orbit.append(tuple(float(c) for c in q))
    return orbit


def portrait_data(group: GroupType | str):
    """``(root system, fundamental representations)`` for a group label."""
    rs = build_root_system(group)
    return rs, fundamental_reps(rs)
