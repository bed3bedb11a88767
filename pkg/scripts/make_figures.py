"""Write point clouds, boundary curves and density heatmaps for A2, C2 and G2.

    python3 scripts/make_figures.py --out figures --count 200000
"""

from __future__ import annotations

import argparse
from pathlib import Path

from lieportrait import haar, render
from lieportrait.portrait import boundary_polyline, portrait_data, shotgun
from lieportrait.rootsys import GroupType
from lieportrait.torus import walls


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="figures")
    ap.add_argument("--count", type=int, default=200_000)
    ap.add_argument("--seed", type=int, default=20240601)
    ap.add_argument("--segments", type=int, default=512)
    ap.add_argument("--grid", type=int, default=300)
    args = ap.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for gt in (GroupType.A2, GroupType.C2, GroupType.G2):
        rs, reps = portrait_data(gt)
        spec = render.RenderSpec(bbox=haar.DEFAULT_BBOX[gt])
        name = gt.value.lower()

        pts = shotgun(rs, reps, args.seed, args.count)
        (out / f"{name}_cloud.csv").write_text(render.cloud_csv(pts))
        (out / f"{name}_cloud.svg").write_text(render.svg_cloud(pts, spec))

        curves = [boundary_polyline(rs, reps, w, args.segments) for w in walls(rs)]
        (out / f"{name}_boundary.csv").write_text(render.boundary_csv(curves))
        (out / f"{name}_boundary.svg").write_text(
            render.svg_curves([c.points for c in curves], spec, labels=[str(c.wall) for c in curves])
        )

        if gt in haar.SUPPORTED:
            grid = haar.density_grid(gt, resolution=args.grid)
            (out / f"{name}_density.svg").write_text(render.svg_grid(grid, spec))
            print(f"{gt.value}: density integral on {args.grid}^2 grid = {grid.integral:.6f}")
        print(f"{gt.value}: wrote {len(pts)} points and {len(curves)} walls to {out}/")


if __name__ == "__main__":
    main()
