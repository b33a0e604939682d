"""Randomised inclusion checks between regions.

Samples are drawn in fixed blocks. Block ``b`` owns its own Philox stream, so the outcome only
depends on the seed and the sample count, never on how blocks are spread over workers.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from src.algebra.quat import Quaternion
from src.core.contracts.sets import InclusionSet
from src.core.errors import ParameterError
from src.localization.regions import Ball, Region, RegionUnion, leaves

logger = logging.getLogger(__name__)

BLOCK_SIZE = 1024
SHELL_WIDTH = 0.05
CLASS_GRID = 2048

Anchor = Tuple[np.ndarray, float]


@dataclass(frozen=True)
class InclusionResult:
    holds: bool
    witness: Optional[Quaternion]
    samples: int
    seed: int


def _generator(seed: int, block: int) -> np.random.Generator:
    # block index lives in the high counter words, streams never overlap
    return np.random.Generator(np.random.Philox(key=seed, counter=block << 128))


def _directions(rng: np.random.Generator, size: int) -> np.ndarray:
    v = rng.standard_normal((size, 4))
    norms = np.linalg.norm(v, axis=1, keepdims=True)
    norms[norms == 0.0] = 1.0
    return v / norms


def _anchors(region: Region) -> List[Anchor]:
    out = []
    for leaf in leaves(region):
        center, radius = leaf.enclosing_ball()
        out.append((np.asarray(center, dtype=np.float64), float(radius)))
    return out


def _draw_block(anchors: List[Anchor], seed: int, block: int, size: int) -> np.ndarray:
    rng = _generator(seed, block)
    pick = rng.integers(0, len(anchors), size=size)
    mode = rng.random(size)
    u = rng.random(size)
    dirs = _directions(rng, size)
    centers = np.stack([anchors[k][0] for k in pick])
    radii = np.array([anchors[k][1] for k in pick])
    big = radii + np.linalg.norm(centers, axis=1) + 1.0
    # half uniform in a 4-ball, half in a thin shell around the leaf's outer radius
    dist = np.where(
        mode < 0.5,
        big * np.power(u, 0.25),
        radii * (1.0 + SHELL_WIDTH * (2.0 * u - 1.0)),
    )
    return centers + dist[:, None] * dirs


def _check_block(
    inner: InclusionSet,
    outer: InclusionSet,
    anchors: List[Anchor],
    seed: int,
    block: int,
    size: int,
) -> Optional[np.ndarray]:
    pts = _draw_block(anchors, seed, block, size)
    bad = inner.contains_many(pts) & ~outer.contains_many(pts)
    hits = np.nonzero(bad)[0]
    return pts[hits[0]] if hits.size else None


def sampled_inclusion(
    inner: Region,
    outer: InclusionSet,
    seed: int = 0,
    count: int = 10_000,
    workers: Optional[int] = None,
) -> InclusionResult:
    """Look for a point of ``inner`` outside ``outer``; the first one found is the witness."""
    if count < 1:
        raise ParameterError("sample count must be at least 1", {"count": count})
    if not 0 <= seed < 2**128:
        raise ParameterError("seed must lie in [0, 2**128)", {"seed": seed})
    anchors = _anchors(inner)
    n_blocks = -(-count // BLOCK_SIZE)
    blocks = [(b, min(BLOCK_SIZE, count - b * BLOCK_SIZE)) for b in range(n_blocks)]

    def job(item: Tuple[int, int]) -> Optional[np.ndarray]:
        return _check_block(inner, outer, anchors, seed, item[0], item[1])

    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            found = list(pool.map(job, blocks))
    else:
        found = []
        for item in blocks:
            found.append(job(item))
            if found[-1] is not None:
                break
    witness = next((w for w in found if w is not None), None)
    logger.debug("sampled %d points in %d blocks, seed=%d", count, len(blocks), seed)
    if witness is None:
        return InclusionResult(True, None, count, seed)
    return InclusionResult(False, Quaternion.from_array(witness), count, seed)


def _sphere_grid(size: int) -> np.ndarray:
    k = np.arange(size) + 0.5
    z = 1.0 - 2.0 * k / size
    rho = np.sqrt(1.0 - z * z)
    theta = np.pi * (1.0 + np.sqrt(5.0)) * k
    return np.column_stack([rho * np.cos(theta), rho * np.sin(theta), z])


def _ball_meets_class(ball: Ball, re: float, imag_norm: float) -> bool:
    c = ball.center
    gap = np.hypot(re - c.w, imag_norm - c.imag_norm())
    return bool(ball.contains_many(np.array([[c.w + gap, c.x, c.y, c.z]]))[0])


def class_intersects(
    region: Region, re: float, imag_norm: float, resolution: int = CLASS_GRID
) -> bool:
    """Whether some member of ``{re + imag_norm u : u unit pure imaginary}`` lies in ``region``.

    Exact for balls. Ovals and intersections are minimised over a spherical grid of units
    together with the imaginary directions of every leaf center.
    """
    if isinstance(region, Ball):
        return _ball_meets_class(region, re, imag_norm)
    if isinstance(region, RegionUnion):
        return any(class_intersects(part, re, imag_norm, resolution) for part in region.parts)
    if imag_norm == 0.0:
        return bool(region.contains_many(np.array([[re, 0.0, 0.0, 0.0]]))[0])
    units = [_sphere_grid(resolution)]
    for leaf in leaves(region):
        centers = [leaf.center] if isinstance(leaf, Ball) else [leaf.c1, leaf.c2]
        for c in centers:
            v = c.as_array()[1:]
            if np.linalg.norm(v) > 0.0:
                v = v / np.linalg.norm(v)
                units.append(np.vstack([v, -v]))
    grid = np.vstack(units)
    pts = np.column_stack([np.full(grid.shape[0], re), imag_norm * grid])
    return bool(np.any(region.contains_many(pts)))
