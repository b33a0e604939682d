"""Zeros of one-sided polynomials by class refinement.

Each standard eigenvalue ``a + b i`` of the companion matrix names a similarity class
``{a + b u : u unit pure imaginary}``. On that class ``z^j = A_j + B_j u`` with real ``A_j``,
``B_j``, so the polynomial collapses to ``c + d u`` (left) or ``c + u d`` (right). Either both
parts vanish and the whole class is a zero, or one linear solve gives the single candidate.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, NamedTuple, Optional, Tuple, Union

import numpy as np

from src.algebra.quat import Quaternion, hamilton
from src.algebra.spectra import standard_eigenvalues
from src.polynomials.qpoly import QPolynomial, Side, companion, eval

logger = logging.getLogger(__name__)

CLUSTER_REL_TOL = 1e-5
SPHERICAL_REL_TOL = 1e-8
UNIT_IMAG_TOL = 1e-6
RESIDUAL_TOL = 1e-8
_REAL_CANDIDATE_TOL = 1e-6


class SphericalClass(NamedTuple):
    re: float
    imag_norm: float

    @property
    def modulus(self) -> float:
        return float(np.hypot(self.re, self.imag_norm))

    def member(self, unit: np.ndarray) -> Quaternion:
        u = np.asarray(unit, dtype=np.float64)
        return Quaternion(self.re, *(self.imag_norm * u / np.linalg.norm(u)))


@dataclass(frozen=True)
class RootSet:
    isolated: List[Quaternion] = field(default_factory=list)
    spherical: List[SphericalClass] = field(default_factory=list)
    residual_tol: float = RESIDUAL_TOL

    def moduli(self) -> List[float]:
        values = [z.norm() for z in self.isolated] + [c.modulus for c in self.spherical]
        return sorted(values, reverse=True)


def class_powers(a: float, b: float, m: int) -> Tuple[np.ndarray, np.ndarray]:
    """Real sequences with (a + b u)^j = A_j + B_j u for every unit pure imaginary u."""
    big_a = np.empty(m + 1)
    big_b = np.empty(m + 1)
    big_a[0], big_b[0] = 1.0, 0.0
    for j in range(m):
        big_a[j + 1] = a * big_a[j] - b * big_b[j]
        big_b[j + 1] = b * big_a[j] + a * big_b[j]
    return big_a, big_b


def _cluster(values: np.ndarray) -> List[complex]:
    remaining = sorted(values, key=lambda z: (z.real, z.imag))
    means: List[complex] = []
    while remaining:
        head = remaining.pop(0)
        group = [head]
        rest = []
        for z in remaining:
            if abs(z - head) <= CLUSTER_REL_TOL * (1.0 + abs(head)):
                group.append(z)
            else:
                rest.append(z)
        remaining = rest
        means.append(complex(np.mean(group)))
    return means


def _accept(p: QPolynomial, z: Quaternion, scale: float) -> bool:
    return eval(p, z).norm() <= RESIDUAL_TOL * scale * (1.0 + z.norm()) ** p.degree


def _refine_class(
    p: QPolynomial, a: float, b: float, scale: float
) -> Optional[Union[Quaternion, SphericalClass]]:
    m = p.degree
    big_a, big_b = class_powers(a, b, m)
    c = big_a @ p.coeffs
    d = big_b @ p.coeffs
    size = (1.0 + np.hypot(a, b)) ** m
    if max(np.linalg.norm(c), np.linalg.norm(d)) <= SPHERICAL_REL_TOL * scale * size:
        return SphericalClass(a, b)
    d_norm2 = float(d @ d)
    if d_norm2 == 0.0:
        return None
    d_inv = np.array([d[0], -d[1], -d[2], -d[3]]) / d_norm2
    if p.side is Side.LEFT:
        u = -hamilton(d_inv, c)
    else:
        u = -hamilton(c, d_inv)
    if abs(u[0]) > UNIT_IMAG_TOL or abs(np.linalg.norm(u[1:]) - 1.0) > UNIT_IMAG_TOL:
        logger.debug("class (%.6g, %.6g) holds no zero: |Re u|=%.3g", a, b, abs(u[0]))
        return None
    unit = u[1:] / np.linalg.norm(u[1:])
    return Quaternion(a, *(b * unit))


def roots(p: QPolynomial) -> RootSet:
    spectrum = standard_eigenvalues(companion(p))
    scale = max(1.0, float(np.linalg.norm(p.coeffs)))
    isolated: List[Quaternion] = []
    spherical: List[SphericalClass] = []
    for s in _cluster(spectrum.standard):
        a, b = float(s.real), float(abs(s.imag))
        if b <= _REAL_CANDIDATE_TOL * (1.0 + abs(a)):
            z = Quaternion(a)
            if _accept(p, z, scale):
                isolated.append(z)
                continue
        found = _refine_class(p, a, b, scale)
        if isinstance(found, SphericalClass):
            spherical.append(found)
        elif found is not None:
            isolated.append(found)
    isolated = _dedupe(isolated)
    isolated.sort(key=lambda z: -z.norm())
    spherical.sort(key=lambda cls: -cls.modulus)
    logger.debug(
        "roots: degree=%d isolated=%d spherical=%d", p.degree, len(isolated), len(spherical)
    )
    return RootSet(isolated=isolated, spherical=spherical, residual_tol=RESIDUAL_TOL * scale)


def _dedupe(points: List[Quaternion]) -> List[Quaternion]:
    kept: List[Quaternion] = []
    for z in points:
        if all((z - k).norm() > UNIT_IMAG_TOL * (1.0 + z.norm()) for k in kept):
            kept.append(z)
    return kept
