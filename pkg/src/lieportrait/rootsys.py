"""Exact root-system data for the rank <= 2 simply connected types A1, A2, C2, G2.

Only the Cartan matrices are hardcoded.  Roots, the Weyl group, coweights and
the highest root are all derived from them with exact integer / rational
arithmetic.

Conventions
-----------
* Cartan entry ``cartan[i][j] = <alpha_j, alpha_i^vee>`` with Bourbaki numbering
  (for C2 and G2 node 1 is the short root).
* Weights (and roots) are integer tuples in the fundamental-weight basis.
  Column ``j`` of the Cartan matrix is therefore ``alpha_j``.
* Coroot-space vectors are tuples in the simple-coroot basis.  The pairing of a
  weight with a coroot-space vector is the plain dot product.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np
import sympy

WeightVec = tuple[int, ...]
CorootVec = tuple[Fraction, ...]
Matrix = tuple[tuple[int, ...], ...]


class GroupType(str, enum.Enum):
    A1 = "A1"
    A2 = "A2"
    C2 = "C2"  # B2 is the same type
    G2 = "G2"

    @classmethod
    def parse(cls, label: str | "GroupType") -> "GroupType":
        if isinstance(label, GroupType):
            return label
        key = label.strip().upper()
        if key == "B2":
            key = "C2"
        try:
            return cls(key)
        except ValueError:
            raise ValueError(
                f"unknown group type {label!r}; expected one of A1, A2, C2 (=B2), G2"
            ) from None


CARTAN_MATRICES: dict[GroupType, Matrix] = {
    GroupType.A1: ((2,),),
    GroupType.A2: ((2, -1), (-1, 2)),
    GroupType.C2: ((2, -2), (-1, 2)),
    GroupType.G2: ((2, -3), (-1, 2)),
}

WEYL_ORDERS = {GroupType.A1: 2, GroupType.A2: 6, GroupType.C2: 8, GroupType.G2: 12}
POSITIVE_ROOT_COUNTS = {GroupType.A1: 1, GroupType.A2: 3, GroupType.C2: 4, GroupType.G2: 6}

# Values stated for these types in the literature; checked at build time.
_EXPECTED_HIGHEST_COEFFS = {
    GroupType.A1: (1,),
    GroupType.A2: (1, 1),
    GroupType.C2: (2, 1),
    GroupType.G2: (3, 2),
}
_F = Fraction
_EXPECTED_COWEIGHTS = {
    GroupType.A1: ((_F(1, 2),),),
    GroupType.A2: ((_F(2, 3), _F(1, 3)), (_F(1, 3), _F(2, 3))),
    GroupType.C2: ((_F(1), _F(1)), (_F(1, 2), _F(1))),
    GroupType.G2: ((_F(2), _F(3)), (_F(1), _F(2))),
}


class RootSystemError(RuntimeError):
    """Internal consistency failure while deriving root-system data."""


@dataclass(frozen=True)
class WeylElement:
    """Integer matrix acting on weight coordinates (column vectors)."""

    matrix: Matrix

    def __call__(self, weight: Sequence[int]) -> WeightVec:
        return tuple(sum(r * w for r, w in zip(row, weight)) for row in self.matrix)

    def __matmul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(_matmul(self.matrix, other.matrix))

    @property
    def array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=np.int64)

    def coroot_action(self) -> np.ndarray:
        """Matrix of the contragredient action on coroot coordinates.

        With ``M`` the weight matrix, ``<M mu, N v> = <mu, v>`` forces
        ``N = M^{-T}``.  Weyl matrices are unimodular so ``N`` is integral.
        """
        inv = np.rint(np.linalg.inv(self.array)).astype(np.int64)
        return inv.T


@dataclass(frozen=True)
class RootSystemData:
    group_type: GroupType
    rank: int
    cartan: Matrix
    simple_roots: tuple[WeightVec, ...]
    positive_roots: tuple[WeightVec, ...]
    # coefficients of each positive root in the simple-root basis
    positive_root_coeffs: tuple[WeightVec, ...]
    # coroot of each positive root, in the simple-coroot basis
    positive_coroots: tuple[WeightVec, ...]
    highest_root: WeightVec
    highest_root_coeffs: WeightVec
    coweights: tuple[CorootVec, ...]
    weyl_group: tuple[WeylElement, ...]
    # invariant form on weights (omega basis); short roots have squared length 2
    form: tuple[tuple[Fraction, ...], ...] = field(repr=False)

    def pair(self, weight: Sequence[int], v: Sequence) -> object:
        """``<weight, v>`` for ``v`` in simple-coroot coordinates."""
        return sum(w * x for w, x in zip(weight, v))

    def inner(self, a: Sequence, b: Sequence) -> Fraction:
        """Invariant inner product of two weights in the omega basis."""
        return sum(
            (Fraction(a[i]) * self.form[i][j] * Fraction(b[j])
             for i in range(self.rank) for j in range(self.rank)),
            Fraction(0),
        )

    def to_root_coords(self, weight: Sequence[int]) -> tuple[Fraction, ...]:
        """Coordinates of a weight in the simple-root basis."""
        inv = _inverse(self.cartan)
        return tuple(sum(inv[i][j] * weight[j] for j in range(self.rank)) for i in range(self.rank))

    @property
    def positive_roots_array(self) -> np.ndarray:
        return np.array(self.positive_roots, dtype=np.float64)

    @property
    def coweights_array(self) -> np.ndarray:
        return np.array([[float(c) for c in cw] for cw in self.coweights])

    @property
    def highest_coroot(self) -> WeightVec:
        return self.positive_coroots[self.positive_roots.index(self.highest_root)]


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


@lru_cache(maxsize=None)
def _inverse(m: Matrix) -> tuple[tuple[Fraction, ...], ...]:
    inv = sympy.Matrix(m).inv()
    return tuple(
        tuple(Fraction(int(inv[i, j].p), int(inv[i, j].q)) for j in range(len(m)))
        for i in range(len(m))
    )


def simple_reflection(cartan: Matrix, i: int) -> WeylElement:
    """``s_i(lam) = lam - <lam, alpha_i^vee> alpha_i`` as a weight-basis matrix."""
    n = len(cartan)
    alpha_i = [cartan[k][i] for k in range(n)]
    rows = []
    for r in range(n):
        rows.append(tuple(int(r == c) - (alpha_i[r] if c == i else 0) for c in range(n)))
    return WeylElement(tuple(rows))


def generate_weyl_group(cartan: Matrix) -> tuple[WeylElement, ...]:
    n = len(cartan)
    gens = [simple_reflection(cartan, i) for i in range(n)]
    for g in gens:
        if (g @ g).matrix != _identity(n):
            raise RootSystemError("simple reflection does not square to the identity")
    seen = {_identity(n)}
    frontier = [_identity(n)]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                p = _matmul(g.matrix, m)
                if p not in seen:
                    seen.add(p)
                    nxt.append(p)
        frontier = nxt
    return tuple(WeylElement(m) for m in sorted(seen))


def _symmetrizer(cartan: Matrix) -> list[Fraction]:
    """Half squared lengths ``d_i`` with ``d_i * cartan[i][j]`` symmetric; min d_i = 1."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                if d[i] is not None and d[j] is None and cartan[i][j] != 0:
                    # d_i * C_ij = d_j * C_ji
                    d[j] = d[i] * cartan[i][j] / cartan[j][i]
                    changed = True
    if any(x is None for x in d):
        raise RootSystemError("Dynkin diagram is not connected")
    lo = min(d)
    return [x / lo for x in d]  # type: ignore[operator]


def build_root_system(group: GroupType | str) -> RootSystemData:
    return _build(GroupType.parse(group))


@lru_cache(maxsize=None)
def _build(gt: GroupType) -> RootSystemData:
    cartan = CARTAN_MATRICES[gt]
    n = len(cartan)
    simple = tuple(tuple(cartan[k][j] for k in range(n)) for j in range(n))
    weyl = generate_weyl_group(cartan)
    if len(weyl) != WEYL_ORDERS[gt]:
        raise RootSystemError(f"{gt.value}: Weyl group has {len(weyl)} elements")

    inv = _inverse(cartan)

    def root_coords(w: WeightVec) -> WeightVec:
        c = [sum(inv[i][j] * w[j] for j in range(n)) for i in range(n)]
        if any(x.denominator != 1 for x in c):
            raise RootSystemError(f"root {w} is not in the root lattice")
        return tuple(int(x) for x in c)

    roots = {g(a) for g in weyl for a in simple}
    positive = []
    for r in roots:
        c = root_coords(r)
        if all(x >= 0 for x in c):
            positive.append((c, r))
        elif not all(x <= 0 for x in c):
            raise RootSystemError(f"root {r} is neither positive nor negative")
    positive.sort(key=lambda cr: (sum(cr[0]), cr[0]))
    pos_coeffs = tuple(c for c, _ in positive)
    pos_roots = tuple(r for _, r in positive)
    if len(pos_roots) != POSITIVE_ROOT_COUNTS[gt]:
        raise RootSystemError(f"{gt.value}: found {len(pos_roots)} positive roots")

    d = _symmetrizer(cartan)
    # (alpha_i, alpha_j) = d_i C_ij ; squared length of alpha_i is 2 d_i.
    sym = [[d[i] * cartan[i][j] for j in range(n)] for i in range(n)]
    # omega_i = sum_j inv[j][i] alpha_j
    form = tuple(
        tuple(
            sum(inv[a][i] * sym[a][b] * inv[b][j] for a in range(n) for b in range(n))
            for j in range(n)
        )
        for i in range(n)
    )

    coroots = []
    for c in pos_coeffs:
        length2 = sum(c[i] * sym[i][j] * c[j] for i in range(n) for j in range(n))
        # alpha^vee = sum c_i (alpha_i, alpha_i) / (alpha, alpha) alpha_i^vee
        cv = [c[i] * 2 * d[i] / length2 for i in range(n)]
        if any(x.denominator != 1 for x in cv):
            raise RootSystemError("coroot is not in the coroot lattice")
        coroots.append(tuple(int(x) for x in cv))

    highest_idx = max(range(len(pos_coeffs)), key=lambda k: sum(pos_coeffs[k]))
    highest = pos_roots[highest_idx]
    highest_coeffs = pos_coeffs[highest_idx]
    # coweights: rows of the inverse Cartan matrix
    coweights = tuple(tuple(inv[i][k] for k in range(n)) for i in range(n))

    rs = RootSystemData(
        group_type=gt,
        rank=n,
        cartan=cartan,
        simple_roots=simple,
        positive_roots=pos_roots,
        positive_root_coeffs=pos_coeffs,
        positive_coroots=tuple(coroots),
        highest_root=highest,
        highest_root_coeffs=highest_coeffs,
        coweights=coweights,
        weyl_group=weyl,
        form=form,
    )
    _self_check(rs)
    return rs


def _self_check(rs: RootSystemData) -> None:
    gt = rs.group_type
    if rs.highest_root_coeffs != _EXPECTED_HIGHEST_COEFFS[gt]:
        raise RootSystemError(f"{gt.value}: highest root coefficients {rs.highest_root_coeffs}")
    if rs.coweights != _EXPECTED_COWEIGHTS[gt]:
        raise RootSystemError(f"{gt.value}: coweights {rs.coweights}")
    for i, cw in enumerate(rs.coweights):
        for j, a in enumerate(rs.simple_roots):
            if rs.pair(a, cw) != int(i == j):
                raise RootSystemError(f"{gt.value}: coweight duality fails at ({i}, {j})")


def is_positive_root(rs: RootSystemData, weight: Sequence[int]) -> bool:
    return tuple(weight) in rs.positive_roots


def longest_element(rs: RootSystemData) -> WeylElement:
    """The Weyl element sending every positive root to a negative root."""
    negatives = {tuple(-x for x in r) for r in rs.positive_roots}
    found = [w for w in rs.weyl_group if all(w(r) in negatives for r in rs.positive_roots)]
    if len(found) != 1:
        raise RootSystemError(f"expected one longest element, found {len(found)}")
    return found[0]
