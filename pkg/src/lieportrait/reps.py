"""Fundamental representations: weight multiplicities, flavor and characters."""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

import numpy as np

from .rootsys import GroupType, RootSystemData, WeightVec, build_root_system, longest_element


class Flavor(str, enum.Enum):
    COMPLEX = "complex"
    SELF_DUAL = "self_dual"


class RepresentationError(RuntimeError):
    pass


@dataclass(frozen=True)
class Representation:
    root_system: RootSystemData
    index: int  # 1-based
    highest_weight: WeightVec
    weights: Mapping[WeightVec, int]
    dim: int
    flavor: Flavor

    @property
    def weight_array(self) -> np.ndarray:
        return np.array(list(self.weights.keys()), dtype=np.float64)

    @property
    def mult_array(self) -> np.ndarray:
        return np.array(list(self.weights.values()), dtype=np.float64)

    def sorted_weights(self) -> list[tuple[WeightVec, int]]:
        """Weights ordered by depth below the highest weight, then lexicographically."""
        rs = self.root_system
        hw = self.highest_weight

        def depth(mu):
            diff = tuple(a - b for a, b in zip(hw, mu))
            return (sum(rs.to_root_coords(diff)), tuple(-x for x in mu))

        return sorted(self.weights.items(), key=lambda kv: depth(kv[0]))


def _coroot_pairing(rs: RootSystemData, mu: WeightVec, k: int) -> int:
    return int(sum(m * c for m, c in zip(mu, rs.positive_coroots[k])))


def _saturate(rs: RootSystemData, hw: WeightVec) -> set[WeightVec]:
    """Smallest saturated set containing ``hw``: the weights of the irreducible module."""
    found = {hw}
    frontier = [hw]
    while frontier:
        nxt = []
        for mu in frontier:
            for k, alpha in enumerate(rs.positive_roots):
                p = _coroot_pairing(rs, mu, k)
                for j in range(1, abs(p) + 1):
                    step = j if p > 0 else -j
                    nu = tuple(m - step * a for m, a in zip(mu, alpha))
                    if nu not in found:
                        found.add(nu)
                        nxt.append(nu)
        frontier = nxt
    return found


def _dominant_conjugate(rs: RootSystemData, mu: WeightVec) -> WeightVec:
    best = mu
    for w in rs.weyl_group:
        nu = w(mu)
        if all(x >= 0 for x in nu):
            return nu
    raise RepresentationError(f"no dominant conjugate of {best}")


def freudenthal(rs: RootSystemData, hw: WeightVec) -> dict[WeightVec, int]:
    """Weight multiplicities of the irreducible module with highest weight ``hw``."""
    weights = _saturate(rs, hw)
    dominant = [mu for mu in weights if all(x >= 0 for x in mu)]

    def level(mu):
        return sum(rs.to_root_coords(tuple(a - b for a, b in zip(hw, mu))))

    dominant.sort(key=level)
    rho = tuple(Fraction(1) for _ in range(rs.rank))  # sum of fundamental weights
    shifted = tuple(h + r for h, r in zip(hw, rho))
    top = rs.inner(shifted, shifted)

    dom_mult: dict[WeightVec, int] = {}

    def mult(mu):
        if mu not in weights:
            return 0
        return dom_mult.get(_dominant_conjugate(rs, mu), 0)

    for mu in dominant:
        if mu == hw:
            dom_mult[mu] = 1
            continue
        total = Fraction(0)
        for alpha in rs.positive_roots:
            k = 1
            while True:
                nu = tuple(m + k * a for m, a in zip(mu, alpha))
                if nu not in weights:
                    break
                total += mult(nu) * rs.inner(nu, alpha)
                k += 1
        m_shift = tuple(m + r for m, r in zip(mu, rho))
        denom = top - rs.inner(m_shift, m_shift)
        if denom <= 0:
            raise RepresentationError(f"non-positive Freudenthal denominator at {mu}")
        value = 2 * total / denom
        if value.denominator != 1:
            raise RepresentationError(f"non-integral multiplicity {value} at {mu}")
        dom_mult[mu] = int(value)

    out = {}
    for mu in weights:
        m = mult(mu)
        if m > 0:
            out[mu] = m
    return out


def weyl_dimension(rs: RootSystemData, hw: WeightVec) -> int:
    rho_hat = tuple(Fraction(sum(r[i] for r in rs.positive_roots), 2) for i in range(rs.rank))
    num = Fraction(1)
    for alpha in rs.positive_roots:
        shifted = tuple(h + r for h, r in zip(hw, rho_hat))
        num *= rs.inner(shifted, alpha) / rs.inner(rho_hat, alpha)
    if num.denominator != 1:
        raise RepresentationError(f"Weyl dimension {num} is not an integer")
    return int(num)


def flavor_of(rs: RootSystemData, i: int) -> Flavor:
    """Complex iff ``-w0 omega_i != omega_i``."""
    _check_index(rs, i)
    omega = tuple(int(k == i - 1) for k in range(rs.rank))
    image = tuple(-x for x in longest_element(rs)(omega))
    return Flavor.COMPLEX if image != omega else Flavor.SELF_DUAL


def _check_index(rs: RootSystemData, i: int) -> None:
    if not 1 <= i <= rs.rank:
        raise ValueError(f"representation index {i} out of range 1..{rs.rank}")


def fundamental_rep(rs: RootSystemData, i: int) -> Representation:
    _check_index(rs, i)
    return _fundamental(rs.group_type, i)


@lru_cache(maxsize=None)
def _fundamental(gt: GroupType, i: int) -> Representation:
    rs = build_root_system(gt)
    hw = tuple(int(k == i - 1) for k in range(rs.rank))
    weights = freudenthal(rs, hw)
    dim = sum(weights.values())
    expected = weyl_dimension(rs, hw)
    if dim != expected:
        raise RepresentationError(
            f"{gt.value} rho_{i}: Freudenthal gives {dim}, dimension formula gives {expected}"
        )
    if weights.get(hw) != 1:
        raise RepresentationError("highest weight must have multiplicity 1")
    for w in rs.weyl_group:
        for mu, m in weights.items():
            if weights.get(w(mu)) != m:
                raise RepresentationError("weight multiset is not Weyl invariant")
    return Representation(
        root_system=rs,
        index=i,
        highest_weight=hw,
        weights=dict(sorted(weights.items(), reverse=True)),
        dim=dim,
        flavor=flavor_of(rs, i),
    )


def fundamental_reps(rs: RootSystemData) -> tuple[Representation, ...]:
    return tuple(fundamental_rep(rs, i) for i in range(1, rs.rank + 1))


def character(rep: Representation, coords, chunk: int = 1 << 16) -> np.ndarray | complex:
    """``sum_mu m(mu) exp(2 pi i <mu, v>)`` for torus coordinates ``v``.

    ``coords`` is a single coordinate vector of length ``rank`` or an array of
    shape ``(N, rank)`` in the simple-coroot basis.  Returns complex values.
    """
    v = np.asarray(getattr(coords, "coords", coords), dtype=np.float64)
    single = v.ndim == 1
    v = np.atleast_2d(v)
    if v.shape[1] != rep.root_system.rank:
        raise ValueError(f"expected coordinates of length {rep.root_system.rank}")
    weights = rep.weight_array
    mults = rep.mult_array
    out = np.empty(v.shape[0], dtype=np.complex128)
    for start in range(0, v.shape[0], chunk):
        phase = v[start:start + chunk] @ weights.T
        out[start:start + chunk] = np.exp(2j * np.pi * phase) @ mults
    return complex(out[0]) if single else out


def weight_counter(rep: Representation) -> Counter:
    return Counter(dict(rep.weights))
