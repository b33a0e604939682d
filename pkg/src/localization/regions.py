"""Quaternionic inclusion regions built from row and column statistics.

Every region is a closed set. A leaf is either a ball ``|q - c| <= r`` or an oval of Cassini
``|q - c1| |q - c2| <= b``; unions and intersections combine leaves. Membership allows a
relative slack of ``REL_SLACK`` so that points on the boundary survive rounding.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Tuple, Union

import numpy as np

from src.algebra.qmat import QMatrix, deleted_sums, holder_norms, scale_similarity
from src.algebra.quat import Quaternion, norm_array
from src.core.errors import ParameterError, PreconditionError
from src.core.schemas.regions import RegionKind, RegionSpec
from src.core.schemas.reports import DiscDescriptor

logger = logging.getLogger(__name__)

REL_SLACK = 1e-9
_BALL_ABS_SLACK = 1e-12
_CASSINI_ABS_SLACK = 1e-24
_REAL_DIAG_TOL = 1e-12
_COMPLEX_CENTER_TOL = 1e-12

THEOREM_TAGS: Dict[RegionKind, str] = {
    RegionKind.GERSCH_ROW: "row-gerschgorin-balls",
    RegionKind.GERSCH_COL: "column-gerschgorin-balls",
    RegionKind.OSTROWSKI_LEFT: "ostrowski-balls-left-eigenvalues",
    RegionKind.OSTROWSKI_RIGHT_REAL_DIAG: "ostrowski-balls-right-eigenvalues-real-diagonal",
    RegionKind.BRAUER_COL: "column-cassini-ovals-left-eigenvalues",
    RegionKind.BRAUER_LEFT_OSTROWSKI: "ostrowski-cassini-ovals-left-eigenvalues",
    RegionKind.BRAUER_RIGHT_REAL_DIAG: "ostrowski-cassini-ovals-right-eigenvalues-real-diagonal",
    RegionKind.BRAUER_MIN: "min-product-cassini-ovals-left-eigenvalues",
    RegionKind.HOLDER_LEFT: "holder-balls-left-eigenvalues",
    RegionKind.HOLDER_RIGHT_REAL_DIAG: "holder-balls-right-eigenvalues-real-diagonal",
}


def _as_points(points: np.ndarray) -> np.ndarray:
    return np.atleast_2d(np.asarray(points, dtype=np.float64))


@dataclass(frozen=True)
class Ball:
    center: Quaternion
    radius: float

    def contains(self, q: Quaternion) -> bool:
        return bool(self.contains_many(q.as_array())[0])

    def contains_many(self, points: np.ndarray) -> np.ndarray:
        d = norm_array(_as_points(points) - self.center.as_array())
        return d <= self.radius * (1.0 + REL_SLACK) + _BALL_ABS_SLACK

    def enclosing_ball(self) -> Tuple[np.ndarray, float]:
        return self.center.as_array(), self.radius


@dataclass(frozen=True)
class Cassini:
    c1: Quaternion
    c2: Quaternion
    bound: float

    def contains(self, q: Quaternion) -> bool:
        return bool(self.contains_many(q.as_array())[0])

    def contains_many(self, points: np.ndarray) -> np.ndarray:
        pts = _as_points(points)
        product = norm_array(pts - self.c1.as_array()) * norm_array(pts - self.c2.as_array())
        return product <= self.bound * (1.0 + REL_SLACK) + _CASSINI_ABS_SLACK

    def focal_distance(self) -> float:
        return (self.c1 - self.c2).norm()

    def enclosing_ball(self) -> Tuple[np.ndarray, float]:
        # x (x - d) <= b for x = |q - c1| once x >= d
        d = self.focal_distance()
        return self.c1.as_array(), 0.5 * (d + np.sqrt(d * d + 4.0 * self.bound))


@dataclass(frozen=True)
class RegionUnion:
    parts: Tuple["Region", ...]

    def contains(self, q: Quaternion) -> bool:
        return bool(self.contains_many(q.as_array())[0])

    def contains_many(self, points: np.ndarray) -> np.ndarray:
        pts = _as_points(points)
        hit = np.zeros(pts.shape[0], dtype=bool)
        for part in self.parts:
            hit |= part.contains_many(pts)
        return hit


@dataclass(frozen=True)
class RegionIntersection:
    parts: Tuple["Region", ...]

    def contains(self, q: Quaternion) -> bool:
        return bool(self.contains_many(q.as_array())[0])

    def contains_many(self, points: np.ndarray) -> np.ndarray:
        pts = _as_points(points)
        hit = np.ones(pts.shape[0], dtype=bool)
        for part in self.parts:
            hit &= part.contains_many(pts)
        return hit


Region = Union[Ball, Cassini, RegionUnion, RegionIntersection]


def contains(region: "Region", q: Quaternion) -> bool:
    return region.contains(q)


def contains_many(region: "Region", points: np.ndarray) -> np.ndarray:
    return region.contains_many(points)


def leaves(region: "Region") -> Iterator[Union[Ball, Cassini]]:
    """Balls and ovals of a region in depth-first order."""
    if isinstance(region, (Ball, Cassini)):
        yield region
        return
    for part in region.parts:
        yield from leaves(part)


def require_real_diagonal(a: QMatrix, kind: RegionKind) -> None:
    diag = a.diagonal()
    bad = np.nonzero(np.any(np.abs(diag[:, 1:]) > _REAL_DIAG_TOL, axis=1))[0]
    if bad.size:
        i = int(bad[0])
        raise PreconditionError(
            f"diagonal entry ({i}, {i}) is not real, required by {kind.value}",
            {"kind": kind.value, "index": i, "entry": diag[i].tolist()},
        )


def ball_radii(a: QMatrix, spec: RegionSpec) -> np.ndarray:
    sums = deleted_sums(a)
    r, c = sums.r, sums.c
    g = spec.gamma
    kind = spec.kind
    if kind is RegionKind.GERSCH_ROW:
        radii = r
    elif kind is RegionKind.GERSCH_COL:
        radii = c
    elif kind in (RegionKind.OSTROWSKI_LEFT, RegionKind.OSTROWSKI_RIGHT_REAL_DIAG):
        radii = np.power(r, g) * np.power(c, 1.0 - g)
    elif kind in (RegionKind.HOLDER_LEFT, RegionKind.HOLDER_RIGHT_REAL_DIAG):
        factor = float(a.n - 1) ** ((1.0 - g) / spec.q)
        radii = factor * np.power(r, g) * np.power(holder_norms(a, spec.p), 1.0 - g)
    else:
        raise ParameterError("region kind is not a ball family", {"kind": kind.value})
    return np.maximum(radii, 0.0)


def cassini_bounds(a: QMatrix, spec: RegionSpec) -> Dict[Tuple[int, int], float]:
    sums = deleted_sums(a)
    r, c = sums.r, sums.c
    g = spec.gamma
    bounds: Dict[Tuple[int, int], float] = {}
    for i in range(a.n):
        for j in range(i + 1, a.n):
            if spec.kind is RegionKind.BRAUER_COL:
                b = c[i] * c[j]
            elif spec.kind is RegionKind.BRAUER_MIN:
                b = min(r[i] * r[j], c[i] * c[j])
            elif spec.kind in (
                RegionKind.BRAUER_LEFT_OSTROWSKI,
                RegionKind.BRAUER_RIGHT_REAL_DIAG,
            ):
                b = (r[i] * r[j]) ** g * (c[i] * c[j]) ** (1.0 - g)
            else:
                raise ParameterError("region kind is not an oval family", {"kind": spec.kind.value})
            bounds[(i, j)] = max(float(b), 0.0)
    return bounds


def build_region(a: QMatrix, spec: RegionSpec) -> RegionUnion:
    if spec.kind.needs_real_diagonal:
        require_real_diagonal(a, spec.kind)
    work = scale_similarity(a, spec.weights) if spec.weights is not None else a
    centers = [Quaternion.from_array(q) for q in a.diagonal()]
    if not spec.kind.is_cassini:
        radii = ball_radii(work, spec)
        return RegionUnion(tuple(Ball(ctr, float(rad)) for ctr, rad in zip(centers, radii)))
    if a.n == 1:
        logger.debug("%s on a 1x1 matrix reduces to the diagonal point", spec.kind.value)
        return RegionUnion((Ball(centers[0], 0.0),))
    bounds = cassini_bounds(work, spec)
    return RegionUnion(
        tuple(Cassini(centers[i], centers[j], b) for (i, j), b in sorted(bounds.items()))
    )


def minimal_region(
    a: QMatrix, spec: RegionSpec, weight_family: Sequence[Sequence[float]]
) -> RegionIntersection:
    """Intersection of the weighted regions over a finite family of weight vectors."""
    family = list(weight_family)
    if not family:
        raise ParameterError("weight family must hold at least one weight vector")
    parts = [
        build_region(a, spec.model_copy(update={"weights": [float(v) for v in w]}))
        for w in family
    ]
    return RegionIntersection(tuple(parts))


def _complex_center(q: Quaternion) -> Tuple[Tuple[float, float], bool]:
    if q.is_complex(_COMPLEX_CENTER_TOL):
        return (q.w, q.x), False
    rep = q.class_representative()
    return (rep.real, rep.imag), True


def export_complex_discs(region: "Region") -> List[DiscDescriptor]:
    descriptors: List[DiscDescriptor] = []
    for k, leaf in enumerate(leaves(region)):
        if isinstance(leaf, Ball):
            center, rep = _complex_center(leaf.center)
            descriptors.append(
                DiscDescriptor(
                    part=k,
                    shape="point" if leaf.radius == 0.0 else "disc",
                    center=center,
                    radius=leaf.radius,
                    representative=rep,
                )
            )
        else:
            c1, rep1 = _complex_center(leaf.c1)
            c2, rep2 = _complex_center(leaf.c2)
            descriptors.append(
                DiscDescriptor(
                    part=k,
                    shape="cassini",
                    center=c1,
                    center2=c2,
                    bound=leaf.bound,
                    representative=rep1 or rep2,
                )
            )
    return descriptors
