"""Command-line interface.

    lieportrait info     --group G
    lieportrait sample   --group G --count N --seed S --out F [--format csv|svg]
    lieportrait boundary --group G --segments K --out F [--walls 1,2,3] [--format csv|svg]
    lieportrait density  --group G --grid NX[,NY] [--bbox x0,x1,y0,y1] --out F [--format csv|svg]
    lieportrait check    [--group G]

Exit status: 0 on success, 1 on usage or input errors, 2 when a check fails.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import haar, render
from .portrait import boundary_polyline, portrait_data, shotgun
from .rootsys import GroupType, longest_element
from .torus import EXTENDED, walls

EXIT_OK, EXIT_USAGE, EXIT_CHECK = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _group(text: str) -> GroupType:
    try:
        return GroupType.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _floats(n: int):
    def parse(text: str) -> tuple[float, ...]:
        parts = text.split(",")
        if len(parts) != n:
            raise argparse.ArgumentTypeError(f"expected {n} comma-separated numbers")
        return tuple(float(p) for p in parts)
    return parse


def _grid(text: str) -> tuple[int, int]:
    parts = [int(p) for p in text.split(",")]
    if len(parts) == 1:
        parts *= 2
    if len(parts) != 2 or min(parts) <= 0:
        raise argparse.ArgumentTypeError("grid must be NX or NX,NY with positive integers")
    return parts[0], parts[1]


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lieportrait", description="Portraits of rank <= 2 compact Lie groups.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("info", help="print root data and weight lists")
    s.add_argument("--group", type=_group, required=True)

    s = sub.add_parser("sample", help="shotgun point cloud")
    s.add_argument("--group", type=_group, required=True)
    s.add_argument("--count", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--out", required=True)
    s.add_argument("--format", choices=("csv", "svg"), default="csv")

    s = sub.add_parser("boundary", help="images of the alcove walls")
    s.add_argument("--group", type=_group, required=True)
    s.add_argument("--segments", type=int, required=True)
    s.add_argument("--walls", default=None, help="comma-separated walls: 1,2,3 or extended (G2)")
    s.add_argument("--out", required=True)
    s.add_argument("--format", choices=("csv", "svg"), default="csv")

    s = sub.add_parser("density", help="Haar pushforward density on a grid (C2, G2)")
    s.add_argument("--group", type=_group, required=True)
    s.add_argument("--grid", type=_grid, required=True)
    s.add_argument("--bbox", type=_floats(4), default=None)
    s.add_argument("--out", required=True)
    s.add_argument("--format", choices=("csv", "svg"), default="csv")

    s = sub.add_parser("check", help="run the acceptance criteria")
    s.add_argument("--group", type=_group, default=None)
    return p


def _frac(x: Fraction) -> str:
    return str(x)


def info_text(group: GroupType) -> str:
    rs, reps = portrait_data(group)
    lines = [f"group: {rs.group_type.value}", f"rank: {rs.rank}", "cartan:"]
    lines += ["  " + " ".join(str(c) for c in row) for row in rs.cartan]
    lines.append("simple_roots:")
    lines += ["  " + " ".join(map(str, r)) for r in rs.simple_roots]
    lines.append("positive_roots:")
    lines += ["  " + " ".join(map(str, r)) for r in rs.positive_roots]
    lines.append("highest_root: " + " ".join(map(str, rs.highest_root)))
    lines.append("highest_root_coeffs: " + " ".join(map(str, rs.highest_root_coeffs)))
    lines.append("coweights:")
    lines += [f"  {i}: " + " ".join(_frac(c) for c in cw) for i, cw in enumerate(rs.coweights, 1)]
    lines.append(f"weyl_group_order: {len(rs.weyl_group)}")
    lines.append("longest_element:")
    lines += ["  " + " ".join(map(str, row)) for row in longest_element(rs).matrix]
    for rep in reps:
        lines.append(f"rep {rep.index}: dim {rep.dim} flavor {rep.flavor.value}")
        lines += ["  " + " ".join(map(str, w)) + f" x{m}" for w, m in rep.sorted_weights()]
    return "\n".join(lines) + "\n"


def _write(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror or exc}") from None


def _bbox_for(gt: GroupType, pts: np.ndarray | None = None) -> tuple[float, float, float, float]:
    if gt is GroupType.A1:
        return (-2.5, 2.5, -1.0, 1.0)
    return haar.DEFAULT_BBOX[gt]


def _as_plane(pts: np.ndarray) -> np.ndarray:
    pts = np.asarray(pts)
    return np.column_stack([pts, np.zeros_like(pts)]) if pts.ndim == 1 else pts


def cmd_sample(args) -> int:
    if args.count < 0:
        raise UsageError("--count must be non-negative")
    if not 0 <= args.seed < 1 << 64:
        raise UsageError("--seed must be an unsigned 64-bit integer")
    rs, reps = portrait_data(args.group)
    pts = shotgun(rs, reps, args.seed, args.count)
    if args.format == "csv":
        _write(args.out, render.cloud_csv(pts))
    else:
        if args.count == 0:
            raise UsageError("cannot render an empty cloud")
        spec = render.RenderSpec(bbox=_bbox_for(args.group))
        _write(args.out, render.svg_cloud(_as_plane(pts), spec))
    return EXIT_OK


def _parse_walls(text, rs):
    if text is None:
        return walls(rs)
    out = []
    for part in text.split(","):
        part = part.strip()
        out.append(EXTENDED if part == EXTENDED else int(part))
    return out


def cmd_boundary(args) -> int:
    if args.segments < 2:
        raise UsageError("--segments must be at least 2")
    rs, reps = portrait_data(args.group)
    try:
        curves = [boundary_polyline(rs, reps, w, args.segments) for w in _parse_walls(args.walls, rs)]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "csv":
        _write(args.out, render.boundary_csv(curves))
    else:
        spec = render.RenderSpec(bbox=_bbox_for(args.group))
        _write(args.out, render.svg_curves([_as_plane(c.points) for c in curves], spec,
                                           labels=[str(c.wall) for c in curves]))
    return EXIT_OK


def cmd_density(args) -> int:
    try:
        grid = haar.density_grid(args.group, args.bbox, args.grid)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "csv":
        _write(args.out, render.grid_csv(grid))
    else:
        _write(args.out, render.svg_grid(grid, render.RenderSpec(bbox=grid.bbox)))
    print(f"integral estimate: {grid.integral:.6f}")
    return EXIT_OK


def cmd_check(args) -> int:
    from .checks import run_checks

    groups = None if args.group is None else [args.group]
    failed = 0
    for res in run_checks(groups):
        print(res.line(), flush=True)
        failed += not res.passed
    print(f"{'FAIL' if failed else 'PASS'}: {failed} failing check(s)")
    return EXIT_CHECK if failed else EXIT_OK


COMMANDS = {
    "info": lambda a: (print(info_text(a.group), end=""), EXIT_OK)[1],
    "sample": cmd_sample,
    "boundary": cmd_boundary,
    "density": cmd_density,
    "check": cmd_check,
}


def _join_bbox(argv: list[str]) -> list[str]:
    # "--bbox -1,1,-1,1" would otherwise be read as an unknown option
    out, it = [], iter(argv)
    for tok in it:
        if tok == "--bbox":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--bbox={nxt}")
        else:
            out.append(tok)
    return out


def run(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(_join_bbox(argv))
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
