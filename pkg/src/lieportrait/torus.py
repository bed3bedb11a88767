"""Maximal-torus coordinates, uniform sampling and alcove geometry.

A torus point is ``exp(sum x_i alpha_i^vee)`` with ``x`` in ``[0, 1)^n``.
Sampling uses numpy's Philox4x64 counter-based generator keyed by
``SeedSequence(seed)``; partition ``k`` of a run uses
``SeedSequence([seed, k])``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

import numpy as np

from .rootsys import CorootVec, GroupType, RootSystemData

Wall = Union[int, str]
EXTENDED = "extended"

_SEED_LIMIT = 1 << 64


@dataclass(frozen=True)
class TorusPoint:
    root_system: RootSystemData
    coords: tuple[float, ...]

    def __post_init__(self):
        if len(self.coords) != self.root_system.rank:
            raise ValueError("coordinate vector has the wrong length")
        reduced = tuple(float(np.mod(c, 1.0)) for c in self.coords)
        object.__setattr__(self, "coords", tuple(0.0 if c == 1.0 else c for c in reduced))


@dataclass(frozen=True)
class Alcove:
    root_system: RootSystemData
    vertices: tuple[CorootVec, ...]

    def contains(self, v, tol: float = 1e-12) -> bool:
        return bool(alcove_margin(self.root_system, v) >= -tol)


def make_generator(seed: int, partition: int | None = None) -> np.random.Generator:
    if not 0 <= int(seed) < _SEED_LIMIT:
        raise ValueError("seed must be an unsigned 64-bit integer")
    entropy = int(seed) if partition is None else [int(seed), int(partition)]
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(entropy)))


def sample_uniform(rs: RootSystemData, seed: int, count: int,
                   partition: int | None = None) -> np.ndarray:
    """``count`` i.i.d. uniform torus coordinates, shape ``(count, rank)``."""
    if count < 0:
        raise ValueError("count must be non-negative")
    return make_generator(seed, partition).random((count, rs.rank))


def alcove(rs: RootSystemData) -> Alcove:
    zero = tuple(Fraction(0) for _ in range(rs.rank))
    verts = [zero]
    for cw, a in zip(rs.coweights, rs.highest_root_coeffs):
        verts.append(tuple(c / a for c in cw))
    return Alcove(rs, tuple(verts))


def wall_range(rs: RootSystemData, wall: Wall) -> tuple[Fraction, Fraction]:
    if wall == EXTENDED:
        if rs.group_type is not GroupType.G2:
            raise ValueError("the extended wall is only defined for G2")
        return Fraction(0), Fraction(1, 2)
    if wall == rs.rank + 1 and rs.rank == 2:
        return Fraction(0), Fraction(1)
    if isinstance(wall, int) and 1 <= wall <= rs.rank:
        return Fraction(0), Fraction(1, rs.highest_root_coeffs[wall - 1])
    raise ValueError(f"invalid wall {wall!r} for {rs.group_type.value}")


def walls(rs: RootSystemData) -> list[Wall]:
    return [1] if rs.rank == 1 else [1, 2, 3]


def wall_point(rs: RootSystemData, wall: Wall, t) -> tuple:
    """Point of the given alcove wall at parameter ``t``.

    Walls 1 and 2 are ``t * omega_i^vee``; wall 3 runs from ``omega_1^vee/a_1``
    (``t = 0``) to ``omega_2^vee/a_2`` (``t = 1``).  Exact when ``t`` is a
    Fraction or int.
    """
    lo, hi = wall_range(rs, wall)
    if not lo <= t <= hi:
        raise ValueError(f"t={t} outside the range [{lo}, {hi}] of wall {wall!r}")
    if wall == EXTENDED:
        return tuple(t * c for c in rs.coweights[0])
    if wall == 3:
        a, b = alcove(rs).vertices[1:]
        return tuple(p + t * (q - p) for p, q in zip(a, b))
    return tuple(t * c for c in rs.coweights[wall - 1])


def wall_points(rs: RootSystemData, wall: Wall, ts: np.ndarray) -> np.ndarray:
    """Vectorised ``wall_point`` over float parameters; shape ``(len(ts), rank)``."""
    ts = np.asarray(ts, dtype=np.float64)
    lo, hi = wall_range(rs, wall)
    if ts.size and (ts.min() < float(lo) - 1e-15 or ts.max() > float(hi) + 1e-15):
        raise ValueError(f"parameters outside the range of wall {wall!r}")
    cw = rs.coweights_array
    if wall == EXTENDED:
        return ts[:, None] * cw[0]
    if wall == 3:
        a, b = (np.array([float(c) for c in v]) for v in alcove(rs).vertices[1:])
        return a + ts[:, None] * (b - a)
    return ts[:, None] * cw[wall - 1]


def alcove_margin(rs: RootSystemData, v) -> np.ndarray | float:
    """Smallest slack among the alcove inequalities (>= 0 inside)."""
    v = np.asarray(v, dtype=np.float64)
    v2 = np.atleast_2d(v)
    simple = np.array(rs.simple_roots, dtype=np.float64)
    top = np.array(rs.highest_root, dtype=np.float64)
    m = np.column_stack([v2 @ simple.T, 1.0 - v2 @ top]).min(axis=1)
    return float(m[0]) if v.ndim == 1 else m


def reduce_to_alcove(rs: RootSystemData, v: Sequence[float], tol: float = 1e-12) -> np.ndarray:
    """Representative of ``v`` modulo the affine Weyl group inside the closed alcove.

    Translates into ``[0, 1)^n`` and then reflects across whichever alcove wall
    is violated until none is.
    """
    x = np.mod(np.asarray(v, dtype=np.float64), 1.0)
    n = rs.rank
    simple = [np.array(a, dtype=np.float64) for a in rs.simple_roots]
    top = np.array(rs.highest_root, dtype=np.float64)
    top_coroot = np.array(rs.highest_coroot, dtype=np.float64)
    cap = 10 * (n + 1) * 100
    for _ in range(cap):
        for i, a in enumerate(simple):
            p = a @ x
            if p < -tol:
                x = x.copy()
                x[i] -= p  # s_i: v - <alpha_i, v> alpha_i^vee
                break
        else:
            p = top @ x
            if p > 1.0 + tol:
                x = x - (p - 1.0) * top_coroot
            else:
                return x
    raise RuntimeError(f"alcove reduction did not converge within {cap} reflections")
