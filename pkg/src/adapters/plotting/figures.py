"""Static complex-plane figures of inclusion regions.

Each region part becomes exactly one SVG element with gid ``region-part-k`` and every
eigenvalue or root becomes one element with gid ``marker-k``.
"""
from __future__ import annotations

import csv
from pathlib import Path
from typing import List, Sequence, Tuple

import matplotlib

matplotlib.use("Agg")

import numpy as np  # noqa: E402
from matplotlib.figure import Figure  # noqa: E402
from matplotlib.patches import Circle, PathPatch  # noqa: E402
from matplotlib.path import Path as MplPath  # noqa: E402

from src.core.schemas.reports import DiscDescriptor  # noqa: E402

FIGURE_POINTS = 600
_CURVE_SAMPLES = 721
_MARGIN = 0.08
CSV_COLUMNS = [
    "part", "shape", "center_re", "center_im", "center2_re", "center2_im", "radius", "bound"
]

matplotlib.rcParams["svg.hashsalt"] = "quatloc"


def cassini_loops(c1: complex, c2: complex, bound: float) -> List[np.ndarray]:
    """Boundary of ``{z : |z - c1| |z - c2| <= bound}`` as one or two closed complex polylines."""
    mid = 0.5 * (c1 + c2)
    half = 0.5 * abs(c1 - c2)
    turn = np.exp(1j * np.angle(c2 - c1)) if half > 0.0 else 1.0
    a2 = half * half
    theta = np.linspace(0.0, 2.0 * np.pi, _CURVE_SAMPLES)
    if bound >= a2:
        r2 = a2 * np.cos(2.0 * theta) + np.sqrt(bound * bound - (a2 * np.sin(2.0 * theta)) ** 2)
        return [mid + turn * np.sqrt(np.maximum(r2, 0.0)) * np.exp(1j * theta)]
    # two ovals, one around each focus
    width = 0.5 * np.arcsin(bound / a2)
    loops = []
    for axis in (0.0, np.pi):
        t = np.linspace(axis - width, axis + width, _CURVE_SAMPLES // 2)
        root = np.sqrt(np.maximum(bound * bound - (a2 * np.sin(2.0 * t)) ** 2, 0.0))
        outer = np.sqrt(np.maximum(a2 * np.cos(2.0 * t) + root, 0.0))
        inner = np.sqrt(np.maximum(a2 * np.cos(2.0 * t) - root, 0.0))
        ring = np.concatenate([outer * np.exp(1j * t), (inner * np.exp(1j * t))[::-1]])
        loops.append(mid + turn * ring)
    return loops


def _loops_path(loops: Sequence[np.ndarray]) -> MplPath:
    vertices: List[Tuple[float, float]] = []
    codes: List[int] = []
    for loop in loops:
        pts = [(float(z.real), float(z.imag)) for z in loop]
        vertices.extend(pts + [pts[0]])
        codes.extend([MplPath.MOVETO] + [MplPath.LINETO] * (len(pts) - 1) + [MplPath.CLOSEPOLY])
    return MplPath(vertices, codes)


def _extent(descriptors: Sequence[DiscDescriptor], markers: Sequence[complex]) -> Tuple[float, ...]:
    xs: List[float] = []
    ys: List[float] = []
    for d in descriptors:
        if d.shape == "cassini":
            for loop in cassini_loops(complex(*d.center), complex(*d.center2), d.bound or 0.0):
                xs.extend(loop.real.tolist())
                ys.extend(loop.imag.tolist())
        else:
            r = d.radius or 0.0
            xs.extend([d.center[0] - r, d.center[0] + r])
            ys.extend([d.center[1] - r, d.center[1] + r])
    xs.extend(z.real for z in markers)
    ys.extend(z.imag for z in markers)
    if not xs:
        return -1.0, 1.0, -1.0, 1.0
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-6)
    cx, cy = 0.5 * (max(xs) + min(xs)), 0.5 * (max(ys) + min(ys))
    half = 0.5 * span * (1.0 + 2.0 * _MARGIN)
    return cx - half, cx + half, cy - half, cy + half


def render_figure(
    descriptors: Sequence[DiscDescriptor], markers: Sequence[complex], title: str = ""
) -> Figure:
    fig = Figure(figsize=(FIGURE_POINTS / 72.0, FIGURE_POINTS / 72.0), dpi=72)
    ax = fig.add_subplot(1, 1, 1)
    for d in descriptors:
        if d.shape == "cassini":
            loops = cassini_loops(complex(*d.center), complex(*d.center2), d.bound or 0.0)
            artist = PathPatch(_loops_path(loops), fill=False, lw=1.2, ec="tab:blue")
        else:
            artist = Circle(d.center, d.radius or 0.0, fill=False, lw=1.2, ec="tab:blue")
        artist.set_gid(f"region-part-{d.part}")
        ax.add_patch(artist)
    for k, z in enumerate(markers):
        (line,) = ax.plot([z.real], [z.imag], "x", color="tab:red", ms=6)
        line.set_gid(f"marker-{k}")
    x0, x1, y0, y1 = _extent(descriptors, markers)
    ax.set_xlim(x0, x1)
    ax.set_ylim(y0, y1)
    ax.set_aspect("equal")
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    if title:
        ax.set_title(title)
    return fig


def write_svg(
    descriptors: Sequence[DiscDescriptor], markers: Sequence[complex], path: Path, title: str = ""
) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    fig = render_figure(descriptors, markers, title)
    fig.savefig(path, format="svg", metadata={"Date": None})
    return path


def write_csv(descriptors: Sequence[DiscDescriptor], path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(CSV_COLUMNS)
        for d in descriptors:
            c2 = d.center2 or (None, None)
            row = [d.center[0], d.center[1], c2[0], c2[1], d.radius, d.bound]
            writer.writerow([d.part, d.shape] + ["" if v is None else repr(v) for v in row])
    return path
