"""CSV and SVG writers for point clouds, boundary curves and density grids."""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import Iterable, Sequence
from xml.sax.saxutils import quoteattr

import numpy as np


def fmt(x: float) -> str:
    # 17 significant digits round-trips every double; '.' separator regardless of locale
    return format(float(x), ".17g")


def _csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO(newline="")
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(v if isinstance(v, str) else fmt(v) for v in row) + "\n")
    return buf.getvalue()


def cloud_csv(points: np.ndarray) -> str:
    points = np.asarray(points, dtype=np.float64)
    if points.ndim == 1:
        return _csv(["x"], ((p,) for p in points))
    return _csv(["x", "y"], points)


def boundary_csv(curves) -> str:
    rows = []
    one_dim = False
    for c in curves:
        pts = np.asarray(c.points)
        one_dim = pts.ndim == 1
        for t, p in zip(c.t, pts):
            rows.append((str(c.wall), t, *np.atleast_1d(p)))
    return _csv(["wall", "t", "x"] if one_dim else ["wall", "t", "x", "y"], rows)


def grid_csv(grid) -> str:
    """Rows ordered by y, then x."""
    rows = ((x, y, grid.values[j, i]) for j, y in enumerate(grid.ys) for i, x in enumerate(grid.xs))
    return _csv(["x", "y", "phi"], rows)


def read_csv(text: str) -> tuple[list[str], list[list[str]]]:
    lines = text.rstrip("\n").split("\n")
    header = lines[0].split(",")
    return header, [ln.split(",") for ln in lines[1:]]


def read_cloud(text: str) -> np.ndarray:
    header, rows = read_csv(text)
    if not rows:
        return np.empty((0, len(header)))
    return np.array([[float(v) for v in r] for r in rows])


# --- SVG --------------------------------------------------------------------

_RAMPS = {
    # anchor colours sampled from the usual perceptual maps
    "viridis": ["#440154", "#3b528b", "#21918c", "#5ec962", "#fde725"],
    "magma": ["#000004", "#51127c", "#b73779", "#fc8961", "#fcfdbf"],
    "gray": ["#ffffff", "#000000"],
}


@dataclass(frozen=True)
class RenderSpec:
    bbox: tuple[float, float, float, float]  # x0, x1, y0, y1
    width: int = 600
    height: int = 600
    margin: float = 20.0
    point_radius: float = 0.8
    ramp: str = "viridis"

    def __post_init__(self):
        x0, x1, y0, y1 = self.bbox
        if not (x1 > x0 and y1 > y0):
            raise ValueError("bbox must have positive extent")
        if self.width <= 2 * self.margin or self.height <= 2 * self.margin:
            raise ValueError("margin leaves no drawing area")
        if self.ramp not in _RAMPS:
            raise ValueError(f"unknown colour ramp {self.ramp!r}")

    def to_pixel(self, x, y):
        x0, x1, y0, y1 = self.bbox
        sx = (self.width - 2 * self.margin) / (x1 - x0)
        sy = (self.height - 2 * self.margin) / (y1 - y0)
        return (self.margin + (np.asarray(x) - x0) * sx,
                self.margin + (y1 - np.asarray(y)) * sy)

    def from_pixel(self, px, py):
        x0, x1, y0, y1 = self.bbox
        sx = (self.width - 2 * self.margin) / (x1 - x0)
        sy = (self.height - 2 * self.margin) / (y1 - y0)
        return (x0 + (np.asarray(px) - self.margin) / sx,
                y1 - (np.asarray(py) - self.margin) / sy)


def ramp_color(name: str, u: float) -> str:
    anchors = _RAMPS[name]
    u = min(max(float(u), 0.0), 1.0) * (len(anchors) - 1)
    k = min(int(u), len(anchors) - 2)
    f = u - k
    a = [int(anchors[k][i:i + 2], 16) for i in (1, 3, 5)]
    b = [int(anchors[k + 1][i:i + 2], 16) for i in (1, 3, 5)]
    return "#" + "".join(f"{round(p + f * (q - p)):02x}" for p, q in zip(a, b))


def _c(v: float) -> str:
    return f"{v:.6f}".rstrip("0").rstrip(".")


def _header(spec: RenderSpec, kind: str) -> list[str]:
    bbox = " ".join(fmt(b) for b in spec.bbox)
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.width}" height="{spec.height}" '
        f'viewBox="0 0 {spec.width} {spec.height}" data-kind="{kind}" data-bbox={quoteattr(bbox)}>',
        f"<metadata>bbox {bbox}</metadata>",
        f'<rect x="0" y="0" width="{spec.width}" height="{spec.height}" fill="white"/>',
    ]


def svg_cloud(points: np.ndarray, spec: RenderSpec, color: str = "#1f5fbf") -> str:
    pts = np.asarray(points, dtype=np.float64)
    if pts.size == 0:
        raise ValueError("nothing to render")
    if not np.all(np.isfinite(pts)):
        raise ValueError("non-finite coordinates")
    px, py = spec.to_pixel(pts[:, 0], pts[:, 1])
    out = _header(spec, "cloud")
    out.append(f'<g fill="{color}" stroke="none">')
    r = _c(spec.point_radius)
    out.extend(f'<circle cx="{_c(a)}" cy="{_c(b)}" r="{r}"/>' for a, b in zip(px, py))
    out += ["</g>", "</svg>", ""]
    return "\n".join(out)


def svg_curves(curves: Sequence[np.ndarray], spec: RenderSpec, labels: Sequence[str] | None = None,
               color: str = "#b22222") -> str:
    if not curves or any(np.asarray(c).size == 0 for c in curves):
        raise ValueError("nothing to render")
    out = _header(spec, "boundary")
    for k, c in enumerate(curves):
        c = np.asarray(c, dtype=np.float64)
        if not np.all(np.isfinite(c)):
            raise ValueError("non-finite coordinates")
        px, py = spec.to_pixel(c[:, 0], c[:, 1])
        pts = " ".join(f"{_c(a)},{_c(b)}" for a, b in zip(px, py))
        label = f' data-wall="{labels[k]}"' if labels else ""
        out.append(f'<polyline{label} fill="none" stroke="{color}" stroke-width="1.5" points="{pts}"/>')
    out += ["</svg>", ""]
    return "\n".join(out)


def svg_grid(grid, spec: RenderSpec) -> str:
    """One rectangle per nonzero cell, coloured by value relative to the maximum."""
    vals = grid.values
    if vals.size == 0:
        raise ValueError("nothing to render")
    top = vals.max()
    x0, x1, y0, y1 = grid.bbox
    nx, ny = grid.resolution
    dx, dy = (x1 - x0) / nx, (y1 - y0) / ny
    out = _header(spec, "density")
    out.append('<g stroke="none">')
    for j, i in zip(*np.nonzero(vals > 0)):
        ax, ay = spec.to_pixel(x0 + i * dx, y0 + (j + 1) * dy)
        bx, by = spec.to_pixel(x0 + (i + 1) * dx, y0 + j * dy)
        col = ramp_color(spec.ramp, vals[j, i] / top if top > 0 else 0.0)
        out.append(
            f'<rect x="{_c(ax)}" y="{_c(ay)}" width="{_c(bx - ax)}" height="{_c(by - ay)}" fill="{col}"/>'
        )
    out += ["</g>", "</svg>", ""]
    return "\n".join(out)
