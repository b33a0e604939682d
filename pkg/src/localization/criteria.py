from __future__ import annotations

import logging
from typing import Literal

import numpy as np

from src.algebra.qmat import QMatrix, deleted_sums, holder_norms
from src.core.errors import ParameterError
from src.core.schemas.regions import RegionKind
from src.localization.regions import require_real_diagonal

logger = logging.getLogger(__name__)

InvertibilityVariant = Literal["ostrowski", "brauer"]


def _check_gamma(gamma: float) -> None:
    if not 0.0 <= gamma <= 1.0:
        raise ParameterError("gamma must lie in [0, 1]", {"gamma": gamma})


def invertibility_sufficient(
    a: QMatrix, gamma: float = 1.0, variant: InvertibilityVariant = "ostrowski"
) -> bool:
    """Diagonal dominance tests that guarantee ``a`` is invertible.

    ``ostrowski``: |a_ii| > r_i^g c_i^(1-g) for every i.
    ``brauer``: |a_ii| |a_jj| > (r_i r_j)^g (c_i c_j)^(1-g) for every pair i != j.
    """
    _check_gamma(gamma)
    sums = deleted_sums(a)
    diag = np.diag(a.moduli())
    if variant == "ostrowski":
        radii = np.power(sums.r, gamma) * np.power(sums.c, 1.0 - gamma)
        return bool(np.all(diag > radii))
    if variant != "brauer":
        raise ParameterError("variant must be ostrowski or brauer", {"variant": variant})
    if a.n == 1:
        return bool(diag[0] > 0.0)
    lhs = np.outer(diag, diag)
    rows = np.power(np.outer(sums.r, sums.r), gamma)
    cols = np.power(np.outer(sums.c, sums.c), 1.0 - gamma)
    rhs = rows * cols
    off = ~np.eye(a.n, dtype=bool)
    return bool(np.all(lhs[off] > rhs[off]))


def stability_margins(a: QMatrix, gamma: float = 1.0, p: float = 2.0) -> np.ndarray:
    """Re(a_ii) + (n-1)^((1-g)/q) r_i^g (n_i^(p))^(1-g) per row; all negative means stable."""
    _check_gamma(gamma)
    q = p / (p - 1.0) if p > 1.0 else 0.0
    sums = deleted_sums(a)
    norms = holder_norms(a, p)
    factor = float(a.n - 1) ** ((1.0 - gamma) / q)
    reach = factor * np.power(sums.r, gamma) * np.power(norms, 1.0 - gamma)
    return a.diagonal()[:, 0] + reach


def stability_sufficient(a: QMatrix, gamma: float = 1.0, p: float = 2.0) -> bool:
    margins = stability_margins(a, gamma, p)
    logger.debug("stability margins: %s", margins.tolist())
    return bool(np.all(margins < 0.0))


def stability_sufficient_real_diag(a: QMatrix, gamma: float = 1.0, p: float = 2.0) -> bool:
    require_real_diagonal(a, RegionKind.HOLDER_RIGHT_REAL_DIAG)
    return stability_sufficient(a, gamma, p)
