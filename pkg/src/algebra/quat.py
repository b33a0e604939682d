"""Quaternion scalars over the skew field H = {w + xi + yj + zk}.

The scalar type is a frozen value; the matrix kernels work on ``(..., 4)`` float arrays
through :func:`hamilton` and only box entries into :class:`Quaternion` at the API edge.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, List, Union

import numpy as np

from src.core.errors import DomainError

DEFAULT_CLASS_TOL = 1e-9
_COMPLEX_TOL = 1e-12

Scalar = Union[int, float]


def hamilton(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Hamilton product of two broadcastable ``(..., 4)`` arrays, ``a`` on the left."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    a0, a1, a2, a3 = a[..., 0], a[..., 1], a[..., 2], a[..., 3]
    b0, b1, b2, b3 = b[..., 0], b[..., 1], b[..., 2], b[..., 3]
    return np.stack(
        [
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        ],
        axis=-1,
    )


def conj_array(a: np.ndarray) -> np.ndarray:
    out = np.array(a, dtype=np.float64, copy=True)
    out[..., 1:] *= -1.0
    return out


def norm_array(a: np.ndarray) -> np.ndarray:
    return np.sqrt(np.sum(np.square(np.asarray(a, dtype=np.float64)), axis=-1))


@dataclass(frozen=True)
class Quaternion:
    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    @classmethod
    def from_array(cls, data: Iterable[float]) -> "Quaternion":
        w, x, y, z = (float(v) for v in data)
        return cls(w, x, y, z)

    @classmethod
    def from_complex(cls, value: complex) -> "Quaternion":
        value = complex(value)
        return cls(value.real, value.imag, 0.0, 0.0)

    @classmethod
    def real(cls, value: Scalar) -> "Quaternion":
        return cls(float(value))

    def as_array(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z], dtype=np.float64)

    def as_list(self) -> List[float]:
        return [self.w, self.x, self.y, self.z]

    @property
    def re(self) -> float:
        return self.w

    @property
    def imag(self) -> "Quaternion":
        return Quaternion(0.0, self.x, self.y, self.z)

    def imag_norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def norm2(self) -> float:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def norm(self) -> float:
        return math.sqrt(self.norm2())

    def conj(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def inverse(self) -> "Quaternion":
        n2 = self.norm2()
        if n2 == 0.0:
            raise DomainError("zero quaternion has no inverse", {"quaternion": self.as_list()})
        return Quaternion(self.w / n2, -self.x / n2, -self.y / n2, -self.z / n2)

    def is_complex(self, tol: float = _COMPLEX_TOL) -> bool:
        return abs(self.y) <= tol and abs(self.z) <= tol

    def to_complex(self, tol: float = _COMPLEX_TOL) -> complex:
        if not self.is_complex(tol):
            raise DomainError(
                "quaternion has j/k components and is not a complex number",
                {"quaternion": self.as_list()},
            )
        return complex(self.w, self.x)

    def class_representative(self) -> complex:
        """The complex member Re + |Im| i of the similarity class [q]."""
        return complex(self.w, self.imag_norm())

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __add__(self, other: object) -> "Quaternion":
        if isinstance(other, Quaternion):
            return Quaternion(
                self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z
            )
        if isinstance(other, (int, float)):
            return Quaternion(self.w + other, self.x, self.y, self.z)
        return NotImplemented

    def __radd__(self, other: object) -> "Quaternion":
        return self.__add__(other)

    def __sub__(self, other: object) -> "Quaternion":
        if isinstance(other, Quaternion):
            return Quaternion(
                self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z
            )
        if isinstance(other, (int, float)):
            return Quaternion(self.w - other, self.x, self.y, self.z)
        return NotImplemented

    def __rsub__(self, other: object) -> "Quaternion":
        if isinstance(other, (int, float)):
            return Quaternion(other - self.w, -self.x, -self.y, -self.z)
        return NotImplemented

    def __mul__(self, other: object) -> "Quaternion":
        if isinstance(other, Quaternion):
            return mul(self, other)
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x * other, self.y * other, self.z * other)
        return NotImplemented

    def __rmul__(self, other: object) -> "Quaternion":
        # real scalars are central, so the side does not matter
        if isinstance(other, (int, float)):
            return self.__mul__(other)
        return NotImplemented

    def __truediv__(self, other: object) -> "Quaternion":
        if isinstance(other, (int, float)):
            if other == 0:
                raise DomainError("division of a quaternion by zero")
            return Quaternion(self.w / other, self.x / other, self.y / other, self.z / other)
        return NotImplemented

    def __abs__(self) -> float:
        return self.norm()

    def __str__(self) -> str:
        return format_quaternion(self)


ZERO = Quaternion()
ONE = Quaternion(1.0)
I = Quaternion(0.0, 1.0)
J = Quaternion(0.0, 0.0, 1.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


def mul(a: Quaternion, b: Quaternion) -> Quaternion:
    return Quaternion(
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    )


def conj(q: Quaternion) -> Quaternion:
    return q.conj()


def norm(q: Quaternion) -> float:
    return q.norm()


def inverse(q: Quaternion) -> Quaternion:
    return q.inverse()


def re(q: Quaternion) -> float:
    return q.w


def power(q: Quaternion, t: int) -> Quaternion:
    if t < 0:
        return power(q.inverse(), -t)
    result = ONE
    for _ in range(t):
        result = result * q
    return result


def same_class(p: Quaternion, q: Quaternion, tol: float = DEFAULT_CLASS_TOL) -> bool:
    """True when p and q lie in one similarity class: equal real parts and imaginary moduli."""
    if tol < 0:
        raise DomainError("class tolerance must be nonnegative", {"tol": tol})
    return abs(p.w - q.w) <= tol and abs(p.imag_norm() - q.imag_norm()) <= tol


def isclose(p: Quaternion, q: Quaternion, tol: float = 1e-12) -> bool:
    return (p - q).norm() <= tol


def class_member(re_part: float, imag_norm: float, unit: np.ndarray) -> Quaternion:
    """The element re + imag_norm * u of a class, for a pure imaginary unit direction u."""
    u = np.asarray(unit, dtype=np.float64)
    return Quaternion(re_part, imag_norm * u[0], imag_norm * u[1], imag_norm * u[2])


def format_quaternion(q: Quaternion, digits: int = 4) -> str:
    parts = []
    for value, unit in ((q.w, ""), (q.x, "i"), (q.y, "j"), (q.z, "k")):
        rounded = round(value, digits)
        if rounded == 0:
            continue
        text = f"{abs(rounded):.{digits}f}".rstrip("0").rstrip(".")
        if unit and text == "1":
            text = ""
        sign = "-" if rounded < 0 else "+"
        parts.append((sign, f"{text}{unit}"))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    head = f"-{first}" if first_sign == "-" else first
    return head + "".join(f"{sign}{body}" for sign, body in parts[1:])
