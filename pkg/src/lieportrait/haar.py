"""Pushforward of Haar measure under delta (C2 and G2 only).

On the torus the density is ``sqrt|prod_{alpha>0} (2 cos(2 pi <alpha, v>) - 2)| / (2 pi)^n``.
The product is Weyl invariant and equals a polynomial ``D(x, y)`` in the
portrait coordinates, which is what the grid evaluation uses.  The formula
requires ``-1`` in the Weyl group, so A1 is excluded by convention and A2
is excluded outright.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from .portrait import delta, membership
from .reps import fundamental_reps
from .rootsys import GroupType, RootSystemData, build_root_system
from .torus import alcove

SUPPORTED = (GroupType.C2, GroupType.G2)

DEFAULT_BBOX = {
    GroupType.A2: (-3.5, 3.5, -3.5, 3.5),
    GroupType.C2: (-4.5, 4.5, -3.5, 5.5),
    GroupType.G2: (-2.5, 7.5, -2.5, 14.5),
}


class UnsupportedGroupError(ValueError):
    pass


def _require(group) -> GroupType:
    gt = group.group_type if isinstance(group, RootSystemData) else GroupType.parse(group)
    if gt not in SUPPORTED:
        raise UnsupportedGroupError(
            f"Haar density is only available for C2 and G2, not {gt.value}: "
            "the density formula assumes -1 is in the Weyl group"
        )
    return gt


def root_product(rs: RootSystemData, coords) -> np.ndarray:
    """``prod_{alpha>0} (2 cos(2 pi <alpha, v>) - 2)`` for each row of ``coords``."""
    v = np.atleast_2d(np.asarray(coords, dtype=np.float64))
    phase = 2 * np.pi * (v @ rs.positive_roots_array.T)
    return np.prod(2 * np.cos(phase) - 2, axis=1)


def density_at(rs: RootSystemData, coords):
    """Haar pushforward density at ``delta(exp v)``."""
    _require(rs)
    single = np.ndim(getattr(coords, "coords", coords)) == 1
    v = np.asarray(getattr(coords, "coords", coords), dtype=np.float64)
    out = np.sqrt(np.abs(root_product(rs, v))) / (2 * np.pi) ** rs.rank
    return float(out[0]) if single else out


def discriminant(group, x, y):
    """``D(x, y)`` as a polynomial; exact when given Fractions or ints."""
    gt = _require(group)
    if gt is GroupType.C2:
        return (x * x + 4 - 4 * y) * (-2 * x - 3 - y) * (2 * x - 3 - y)
    return (x * x + 2 * x - 7 - 4 * y) * (
        y * y + 10 * y - 7 - 4 * x ** 3 + x * x + 2 * x + 10 * x * y
    )


def phi_xy(group, x, y) -> np.ndarray:
    """Density as a function of portrait coordinates; zero outside the region."""
    gt = _require(group)
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    val = np.sqrt(np.abs(discriminant(gt, x, y))) / (2 * np.pi) ** 2
    return np.where(membership(gt, x, y) >= 0, val, 0.0)


@dataclass(frozen=True)
class DensityGrid:
    group_type: GroupType
    bbox: tuple[float, float, float, float]
    resolution: tuple[int, int]
    xs: np.ndarray  # cell centres, length nx
    ys: np.ndarray  # cell centres, length ny
    values: np.ndarray  # shape (ny, nx); values[j, i] at (xs[i], ys[j])
    cell_area: float

    @property
    def integral(self) -> float:
        return float(self.cell_area * self.values.sum())

    def partial_integral(self, mask: np.ndarray) -> float:
        return float(self.cell_area * self.values[mask].sum())

    def mesh(self) -> tuple[np.ndarray, np.ndarray]:
        return np.meshgrid(self.xs, self.ys)


def density_grid(group, bbox=None, resolution=(1000, 1000)) -> DensityGrid:
    """Midpoint-rule grid of the density over ``bbox = (x0, x1, y0, y1)``."""
    gt = _require(group)
    if isinstance(resolution, int):
        resolution = (resolution, resolution)
    nx, ny = (int(r) for r in resolution)
    if nx <= 0 or ny <= 0:
        raise ValueError("grid resolution must be positive")
    x0, x1, y0, y1 = DEFAULT_BBOX[gt] if bbox is None else bbox
    if not (x1 > x0 and y1 > y0):
        raise ValueError("empty bounding box")
    dx, dy = (x1 - x0) / nx, (y1 - y0) / ny
    xs = x0 + dx * (np.arange(nx) + 0.5)
    ys = y0 + dy * (np.arange(ny) + 0.5)
    values = np.empty((ny, nx))
    for j, yv in enumerate(ys):  # rows are independent
        values[j] = phi_xy(gt, xs, np.full(nx, yv))
    return DensityGrid(gt, (x0, x1, y0, y1), (nx, ny), xs, ys, values, dx * dy)


@dataclass(frozen=True)
class MaxDensityResult:
    argmax_xy: tuple[float, float]
    argmax_torus: tuple[float, float]
    value: float


def _square_grid(lo: np.ndarray, hi: np.ndarray, k: int) -> np.ndarray:
    """``(k+1)^2`` points spanning the box ``[lo, hi]`` in (s, u) alcove coordinates."""
    s = np.linspace(lo[0], hi[0], k + 1)
    u = np.linspace(lo[1], hi[1], k + 1)
    S, U = np.meshgrid(s, u)
    return np.column_stack([S.ravel(), U.ravel()])


def _to_coroot(verts: np.ndarray, su: np.ndarray) -> np.ndarray:
    # v = s * V1 + u * V2 with s, u >= 0, s + u <= 1 (V0 = 0)
    return su[:, :1] * verts[1] + su[:, 1:2] * verts[2]


def max_density(group, coarse: int = 200, tol: float = 1e-10) -> MaxDensityResult:
    """Maximise the density over the alcove.

    Coarse scan of the closed alcove, then repeated local grids each ten times
    finer around the current best point until the step drops below ``tol``.
    Works in alcove coordinates, where ``delta o exp`` is smooth.
    """
    gt = _require(group)
    rs = build_root_system(gt)
    verts = np.array([[float(c) for c in v] for v in alcove(rs).vertices])

    def score(su):
        inside = (su[:, 0] >= 0) & (su[:, 1] >= 0) & (su.sum(axis=1) <= 1)
        val = np.abs(root_product(rs, _to_coroot(verts, su)))
        return np.where(inside, val, -np.inf)

    su = _square_grid(np.zeros(2), np.ones(2), coarse)
    best = su[np.argmax(score(su))]
    step = 1.0 / coarse
    while step >= tol:
        lo, hi = best - step, best + step
        su = _square_grid(lo, hi, 20)
        best = su[np.argmax(score(su))]
        step /= 10
    v = _to_coroot(verts, best[None])[0]
    xy = delta(rs, fundamental_reps(rs), v)
    return MaxDensityResult(
        argmax_xy=(float(xy[0]), float(xy[1])),
        argmax_torus=(float(v[0]), float(v[1])),
        value=density_at(rs, v),
    )


def exact_discriminant(group, x: Fraction, y: Fraction) -> Fraction:
    return discriminant(group, Fraction(x), Fraction(y))


def weyl_product_check(rs: RootSystemData, coords, dps: int | None = None) -> np.ndarray:
    """Relative gap between ``|prod (2cos - 2)|`` and ``|D(delta(v))|`` per point.

    In float64 ``D`` loses relative accuracy near the walls, where one of its
    factors nearly cancels; pass ``dps`` to evaluate both sides with mpmath at
    that many decimal digits instead.
    """
    _require(rs)
    v = np.atleast_2d(np.asarray(coords, dtype=np.float64))
    if dps is None:
        lhs = np.abs(root_product(rs, v))
        xy = delta(rs, fundamental_reps(rs), v)
        rhs = np.abs(discriminant(rs.group_type, xy[:, 0], xy[:, 1]))
        return np.abs(lhs - rhs) / np.maximum(lhs, rhs)
    reps = fundamental_reps(rs)
    out = np.empty(len(v))
    with mpmath.workdps(dps):
        two_pi = 2 * mpmath.pi
        for k, row in enumerate(v):
            p = [mpmath.mpf(float(c)) for c in row]
            lhs = mpmath.mpf(1)
            for a in rs.positive_roots:
                lhs *= 2 * mpmath.cos(two_pi * sum(ai * pi for ai, pi in zip(a, p))) - 2
            xy = [
                sum(m * mpmath.cos(two_pi * sum(wi * pi for wi, pi in zip(w, p)))
                    for w, m in rep.weights.items())
                for rep in reps
            ]
            rhs = discriminant(rs.group_type, xy[0], xy[1])
            out[k] = float(abs(abs(lhs) - abs(rhs)) / max(abs(lhs), abs(rhs)))
    return out

