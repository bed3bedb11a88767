"""Midpoint-rule integral of the Haar density at increasing grid sizes.

Cells cut by the boundary make the error oscillate in sign, so expect the
magnitude to fall only on average as the grid is refined.
"""

from __future__ import annotations

import sys

from lieportrait import haar
from lieportrait.rootsys import GroupType

DEFAULT_SIZES = (125, 250, 500, 1000, 2000, 4000)


def main(sizes=DEFAULT_SIZES) -> None:
    for gt in (GroupType.C2, GroupType.G2):
        print(gt.value)
        print(f"{'n':>6} {'integral':>12} {'1 - I':>12}")
        for n in sizes:
            total = haar.density_grid(gt, resolution=n).integral
            print(f"{n:>6} {total:12.8f} {1 - total:12.3e}")
        print()


if __name__ == "__main__":
    main(tuple(int(a) for a in sys.argv[1:]) or DEFAULT_SIZES)
