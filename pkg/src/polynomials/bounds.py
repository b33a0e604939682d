"""Annuli holding every zero modulus of a simple monic polynomial.

Upper bounds come from Ostrowski-type ball radii of a companion matrix (or one of its
powers); lower bounds are the reciprocals of the same quantity for the reversal polynomial.
When the constant term vanishes the lower bound is 0 and the report is flagged.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.algebra.qmat import QMatrix, check_weights, deleted_sums, power, scale_similarity
from src.algebra.quat import power as quat_power
from src.algebra.spectra import left_eigen_residual
from src.core.errors import ParameterError, PreconditionError
from src.core.schemas.payloads import BoundParams
from src.polynomials.powers import (
    SquareTransform,
    companion_power_structured,
    companion_square_closed_form,
)
from src.polynomials.qpoly import QPolynomial, Side, companion, eval, reversal, tilde
from src.polynomials.roots import RootSet, roots

logger = logging.getLogger(__name__)

GAMMA_GRID = (0.0, 0.25, 0.5, 0.75, 1.0)
_ZERO_COEFF_TOL = 0.0


class BoundMethod(str, Enum):
    OSTROWSKI = "ostrowski"
    CO1 = "co1"
    CO2 = "co2"
    SCALED = "scaled"
    CS1 = "cs1"
    CS2 = "cs2"
    KOJIMA = "kojima"
    POWER = "power"
    PC = "pc"


THEOREM_TAGS: Dict[BoundMethod, str] = {
    BoundMethod.OSTROWSKI: "companion-ostrowski",
    BoundMethod.CO1: "companion-column-sums",
    BoundMethod.CO2: "companion-row-sums",
    BoundMethod.SCALED: "scaled-companion-ostrowski",
    BoundMethod.CS1: "scaled-companion-column-sums",
    BoundMethod.CS2: "scaled-companion-row-sums",
    BoundMethod.KOJIMA: "kojima-type",
    BoundMethod.POWER: "companion-power-ostrowski",
    BoundMethod.PC: "companion-square-row-sums",
}

PC_VARIANTS: Dict[str, Tuple[Side, bool]] = {
    "1a": (Side.LEFT, False),
    "1b": (Side.LEFT, True),
    "2a": (Side.RIGHT, False),
    "2b": (Side.RIGHT, True),
}


@dataclass(frozen=True)
class BoundReport:
    method: BoundMethod
    lower: float
    upper: float
    params: Dict[str, Any] = field(default_factory=dict)
    lower_flagged: bool = False

    @property
    def theorem(self) -> str:
        return THEOREM_TAGS[self.method]

    def contains(self, modulus: float, tol: float = 1e-9) -> bool:
        return self.lower - tol <= modulus <= self.upper + tol


@dataclass(frozen=True)
class OpferComparison:
    alpha: float
    opfer_bound: float
    alpha_le_bound: bool
    q0_modulus: float

    @property
    def premise_holds(self) -> bool:
        return self.q0_modulus >= 1.0


@dataclass(frozen=True)
class ReciprocityReport:
    moduli_match: bool
    max_modulus_delta: float
    pointwise: List[bool]


def ostrowski_terms(matrix: QMatrix, gamma: float, t: int = 1) -> np.ndarray:
    """Per-row r'_i^(gamma/t) c'_i^((1-gamma)/t)."""
    sums = deleted_sums(matrix)
    return np.power(sums.r_prime, gamma / t) * np.power(sums.c_prime, (1.0 - gamma) / t)


def ostrowski_max(matrix: QMatrix, gamma: float, t: int = 1) -> float:
    return float(np.max(ostrowski_terms(matrix, gamma, t)))


def _has_constant(p: QPolynomial) -> bool:
    return float(p.coefficient_moduli()[0]) > _ZERO_COEFF_TOL


def _annulus(
    p: QPolynomial,
    upper_of: Callable[[QPolynomial], float],
    method: BoundMethod,
    params: Dict[str, Any],
) -> BoundReport:
    upper = max(upper_of(p), 0.0)
    if not _has_constant(p):
        logger.debug("%s: zero constant term, lower bound flagged", method.value)
        return BoundReport(method, 0.0, upper, params, lower_flagged=True)
    inner = upper_of(reversal(p))
    lower = 1.0 / inner if inner > 0.0 else 0.0
    return BoundReport(method, min(lower, upper), upper, params)


def _moduli(p: QPolynomial) -> np.ndarray:
    return p.coefficient_moduli()[: p.degree]


def _co1_upper(p: QPolynomial) -> float:
    q = _moduli(p)
    return float(max([q[0]] + [1.0 + v for v in q[1:]]))


def _co2_upper(p: QPolynomial) -> float:
    return float(max(1.0, np.sum(_moduli(p))))


def _weights(p: QPolynomial, weights: Optional[Sequence[float]]) -> np.ndarray:
    if weights is None:
        return np.ones(p.degree)
    return check_weights(weights, p.degree)


def _cs1_upper(q: np.ndarray, w: np.ndarray) -> float:
    m = q.size
    w_ext = np.concatenate([[0.0], w])  # w_ext[j] = w_j with w_0 = 0
    return float(max((w_ext[j] + w[m - 1] * q[j]) / w_ext[j + 1] for j in range(m)))


def _cs2_upper(q: np.ndarray, w: np.ndarray) -> float:
    m = q.size
    ratios = [w[j - 1] / w[j] for j in range(1, m)]
    total = float(np.sum(w[m - 1] * q / w))
    return float(max(ratios + [total]))


def _kojima_upper(p: QPolynomial) -> float:
    q = p.coefficient_moduli()
    m = p.degree
    if m > 1 and np.any(q[1:m] <= _ZERO_COEFF_TOL):
        raise PreconditionError(
            "kojima bound needs nonzero coefficients q_1..q_{m-1}",
            {"moduli": q.tolist()},
        )
    terms = [q[0] / q[1]] + [2.0 * q[j] / q[j + 1] for j in range(1, m)]
    return float(max(terms))


def _scaled_matrix(p: QPolynomial, w: np.ndarray) -> QMatrix:
    # W C W^-1 has entries w_i c_ij / w_j
    return scale_similarity(companion(p), 1.0 / w)


def zero_bounds(
    p: QPolynomial, method: "BoundMethod | str", params: Optional[BoundParams] = None
) -> BoundReport:
    method = BoundMethod(method)
    params = params or BoundParams()
    gamma = params.gamma
    if method is BoundMethod.OSTROWSKI:
        return _annulus(
            p, lambda poly: ostrowski_max(companion(poly), gamma), method, {"gamma": gamma}
        )
    if method is BoundMethod.CO1:
        return _annulus(p, _co1_upper, method, {})
    if method is BoundMethod.CO2:
        return _annulus(p, _co2_upper, method, {})
    if method is BoundMethod.SCALED:
        w = _weights(p, params.weights)
        return _annulus(
            p,
            lambda poly: ostrowski_max(_scaled_matrix(poly, w), gamma),
            method,
            {"gamma": gamma, "weights": w.tolist()},
        )
    if method is BoundMethod.CS1:
        w = _weights(p, params.weights)
        return _annulus(
            p, lambda poly: _cs1_upper(_moduli(poly), w), method, {"weights": w.tolist()}
        )
    if method is BoundMethod.CS2:
        w = _weights(p, params.weights)
        return _annulus(
            p, lambda poly: _cs2_upper(_moduli(poly), w), method, {"weights": w.tolist()}
        )
    if method is BoundMethod.KOJIMA:
        return _annulus(p, _kojima_upper, method, {})
    if method is BoundMethod.POWER:
        variant = params.variant or "direct"
        if variant not in ("direct", "tilde"):
            raise ParameterError("power variant must be direct or tilde", {"variant": variant})
        base = tilde(p) if variant == "tilde" else p
        t = params.t
        return _annulus(
            base,
            lambda poly: ostrowski_max(companion_power_structured(poly, t), gamma, t),
            method,
            {"gamma": gamma, "t": t, "variant": variant},
        )
    return _pc_bounds(p, params.variant)


def _pc_bounds(p: QPolynomial, variant: Optional[str]) -> BoundReport:
    if variant is None:
        variant = "1a" if p.side is Side.LEFT else "2a"
    if variant not in PC_VARIANTS:
        raise ParameterError("pc variant must be one of 1a, 1b, 2a, 2b", {"variant": variant})
    side, use_tilde = PC_VARIANTS[variant]
    if side is not p.side:
        raise PreconditionError(
            f"pc variant {variant} applies to {side.value} polynomials",
            {"variant": variant, "side": p.side.value},
        )
    forward = SquareTransform.TILDE if use_tilde else SquareTransform.IDENTITY
    backward = SquareTransform.TILDE_REVERSAL if use_tilde else SquareTransform.REVERSAL
    params = {"gamma": 1.0, "t": 2, "variant": variant}
    upper = ostrowski_max(companion_square_closed_form(p, forward), 1.0, 2)
    if not _has_constant(p):
        return BoundReport(BoundMethod.PC, 0.0, upper, params, lower_flagged=True)
    inner = ostrowski_max(companion_square_closed_form(p, backward), 1.0, 2)
    return BoundReport(BoundMethod.PC, min(1.0 / inner, upper), upper, params)


def _battery(p: QPolynomial) -> List[Tuple[BoundMethod, BoundParams]]:
    jobs: List[Tuple[BoundMethod, BoundParams]] = []
    for g in GAMMA_GRID:
        jobs.append((BoundMethod.OSTROWSKI, BoundParams(gamma=g)))
    jobs.append((BoundMethod.CO1, BoundParams()))
    jobs.append((BoundMethod.CO2, BoundParams()))
    jobs.append((BoundMethod.KOJIMA, BoundParams()))
    for t in (2, 3):
        for variant in ("direct", "tilde"):
            for g in GAMMA_GRID:
                jobs.append((BoundMethod.POWER, BoundParams(gamma=g, t=t, variant=variant)))
    for variant, (side, _) in PC_VARIANTS.items():
        if side is p.side:
            jobs.append((BoundMethod.PC, BoundParams(variant=variant)))
    return jobs


def _try_bounds(p: QPolynomial, job: Tuple[BoundMethod, BoundParams]) -> Optional[BoundReport]:
    method, params = job
    try:
        return zero_bounds(p, method, params)
    except PreconditionError as exc:
        logger.warning("skipping %s: %s", method.value, exc.message)
        return None


def all_bounds(p: QPolynomial, workers: Optional[int] = None) -> List[BoundReport]:
    jobs = _battery(p)
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda job: _try_bounds(p, job), jobs))
    else:
        results = [_try_bounds(p, job) for job in jobs]
    return [r for r in results if r is not None]


def rank_bounds(reports: Sequence[BoundReport]) -> List[int]:
    """Indices of ``reports`` from sharpest to loosest: upper/lower ratio, then upper."""

    def key(i: int) -> Tuple[float, float]:
        r = reports[i]
        ratio = r.upper / r.lower if r.lower > 0.0 else float("inf")
        return ratio, r.upper

    return sorted(range(len(reports)), key=key)


def opfer_comparison(p: QPolynomial) -> OpferComparison:
    alpha = _co1_upper(p)
    opfer = _co2_upper(p)
    return OpferComparison(
        alpha=alpha,
        opfer_bound=opfer,
        alpha_le_bound=alpha <= opfer,
        q0_modulus=float(p.coefficient_moduli()[0]),
    )


def power_eigen_residuals(
    p: QPolynomial, t: int, root_set: Optional[RootSet] = None
) -> List[float]:
    """Left-eigenvalue residual of z^t against C^t for every isolated zero z."""
    found = root_set or roots(p)
    c_t = power(companion(p), t)
    return [left_eigen_residual(c_t, quat_power(z, t)) for z in found.isolated]


def reciprocity_report(p: QPolynomial, tol: float = 1e-8) -> ReciprocityReport:
    forward = roots(p)
    rev = reversal(p)
    backward = roots(rev)
    expected = sorted(1.0 / m for m in forward.moduli() if m > 0.0)
    observed = sorted(backward.moduli())
    if len(expected) != len(observed):
        return ReciprocityReport(False, float("inf"), [])
    delta = float(np.max(np.abs(np.subtract(expected, observed)))) if expected else 0.0
    scale = max(1.0, float(np.linalg.norm(rev.coeffs)))
    pointwise = []
    for z in forward.isolated:
        inv = z.inverse()
        limit = tol * scale * (1.0 + inv.norm()) ** rev.degree
        pointwise.append(eval(rev, inv).norm() <= limit)
    return ReciprocityReport(delta <= tol * max(1.0, max(observed, default=1.0)), delta, pointwise)
