"""One-sided simple monic polynomials over the quaternions.

A left polynomial places every coefficient left of the power, ``sum q_j z^j``; a right
polynomial places it on the right, ``sum z^j q_j``. Coefficients are stored lowest degree
first as an ``(m + 1, 4)`` array whose last row is exactly ``[1, 0, 0, 0]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List

import numpy as np

from src.algebra.qmat import QMatrix, transpose
from src.algebra.quat import Quaternion, conj_array, hamilton, norm_array
from src.core.errors import DomainError, ParameterError, PreconditionError

_MONIC = np.array([1.0, 0.0, 0.0, 0.0])


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"

    def flipped(self) -> "Side":
        return Side.RIGHT if self is Side.LEFT else Side.LEFT


@dataclass(frozen=True, eq=False)
class QPolynomial:
    side: Side
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.coeffs, dtype=np.float64, copy=True)
        if arr.ndim != 2 or arr.shape[1] != 4:
            raise ParameterError(
                "coefficients must be an (m + 1, 4) array", {"shape": list(arr.shape)}
            )
        if arr.shape[0] < 2:
            raise ParameterError("polynomial degree must be at least 1", {"count": arr.shape[0]})
        if not np.array_equal(arr[-1], _MONIC):
            raise PreconditionError(
                "polynomial must be simple monic (leading coefficient 1)",
                {"leading": arr[-1].tolist()},
            )
        arr.setflags(write=False)
        object.__setattr__(self, "side", Side(self.side))
        object.__setattr__(self, "coeffs", arr)

    @classmethod
    def from_coeffs(cls, side: "Side | str", coeffs: Iterable[Quaternion]) -> "QPolynomial":
        return cls(Side(side), np.array([q.as_array() for q in coeffs], dtype=np.float64))

    @property
    def degree(self) -> int:
        return self.coeffs.shape[0] - 1

    def coefficient(self, j: int) -> Quaternion:
        return Quaternion.from_array(self.coeffs[j])

    def coefficient_moduli(self) -> np.ndarray:
        return norm_array(self.coeffs)

    def is_real(self, tol: float = 0.0) -> bool:
        return bool(np.all(np.abs(self.coeffs[:, 1:]) <= tol))

    def coefficient_list(self) -> List[Quaternion]:
        return [Quaternion.from_array(c) for c in self.coeffs]

    def __repr__(self) -> str:
        return f"QPolynomial(side={self.side.value}, degree={self.degree})"


def _powers(z: np.ndarray, m: int) -> np.ndarray:
    out = np.empty((m + 1, 4))
    out[0] = _MONIC
    for j in range(1, m + 1):
        out[j] = hamilton(out[j - 1], z)
    return out


def eval(p: QPolynomial, z: Quaternion) -> Quaternion:
    powers = _powers(z.as_array(), p.degree)
    if p.side is Side.LEFT:
        terms = hamilton(p.coeffs, powers)
    else:
        terms = hamilton(powers, p.coeffs)
    return Quaternion.from_array(terms.sum(axis=0))


def residual(p: QPolynomial, z: Quaternion) -> float:
    return eval(p, z).norm()


def companion(p: QPolynomial) -> QMatrix:
    m = p.degree
    data = np.zeros((m, m, 4))
    idx = np.arange(m - 1)
    data[idx, idx + 1, 0] = 1.0
    data[m - 1, :, :] = -p.coeffs[:m]
    left = QMatrix(data)
    return left if p.side is Side.LEFT else transpose(left)


def reversal(p: QPolynomial) -> QPolynomial:
    """The monic polynomial whose zeros are the reciprocals of the zeros of ``p``."""
    q0 = p.coefficient(0)
    if q0.norm() == 0.0:
        raise DomainError("reversal undefined, zero constant term")
    inv = q0.inverse().as_array()
    flipped = p.coeffs[::-1]
    if p.side is Side.LEFT:
        coeffs = hamilton(inv, flipped)
    else:
        coeffs = hamilton(flipped, inv)
    coeffs[-1] = _MONIC
    return QPolynomial(p.side, coeffs)


def tilde(p: QPolynomial) -> QPolynomial:
    """Conjugate every coefficient and flip the side."""
    coeffs = conj_array(p.coeffs)
    coeffs[-1] = _MONIC
    return QPolynomial(p.side.flipped(), coeffs)
