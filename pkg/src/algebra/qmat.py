"""Dense quaternionic matrices.

A :class:`QMatrix` stores its entries as a read-only ``(n, n, 4)`` float64 array, one
``[w, x, y, z]`` quaternion per entry. Every product goes through :func:`hamilton` with the
left factor kept on the left. Row and column statistics are recomputed on demand.

The complex adjoint follows the unique split ``A = A1 + A2 j`` with ``A1 = W + X i`` and
``A2 = Y + Z i``::

    Psi(A) = [[ A1,         A2       ],
              [-conj(A2),   conj(A1) ]]
"""
from __future__ import annotations

from typing import Iterable, List, NamedTuple, Sequence

import numpy as np

from src.algebra.quat import Quaternion, conj_array, hamilton, norm_array
from src.core.errors import DimensionError, DomainError, ParameterError

_REAL_DIAG_TOL = 1e-12
_BINARY_POWER_FROM = 8


class RowStats(NamedTuple):
    r: float
    c: float
    r_prime: float
    c_prime: float


class DeletedSums(NamedTuple):
    r: np.ndarray
    c: np.ndarray
    r_prime: np.ndarray
    c_prime: np.ndarray


class QMatrix:
    __slots__ = ("_data",)

    def __init__(self, data: np.ndarray) -> None:
        arr = np.array(data, dtype=np.float64, copy=True)
        if arr.ndim != 3 or arr.shape[2] != 4 or arr.shape[0] != arr.shape[1]:
            raise DimensionError(
                "quaternion matrix must have shape (n, n, 4)", {"shape": list(arr.shape)}
            )
        if arr.shape[0] < 1:
            raise DimensionError("quaternion matrix must be at least 1x1")
        arr.setflags(write=False)
        self._data = arr

    @classmethod
    def from_quaternions(cls, rows: Sequence[Sequence[Quaternion]]) -> "QMatrix":
        return cls(np.array([[q.as_array() for q in row] for row in rows], dtype=np.float64))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        data = np.zeros((n, n, 4))
        data[np.arange(n), np.arange(n), 0] = 1.0
        return cls(data)

    @classmethod
    def zeros(cls, n: int) -> "QMatrix":
        return cls(np.zeros((n, n, 4)))

    @classmethod
    def diag(cls, values: Iterable[Quaternion]) -> "QMatrix":
        values = list(values)
        data = np.zeros((len(values), len(values), 4))
        for i, q in enumerate(values):
            data[i, i] = q.as_array()
        return cls(data)

    @classmethod
    def from_complex_parts(cls, a1: np.ndarray, a2: np.ndarray) -> "QMatrix":
        a1 = np.asarray(a1, dtype=np.complex128)
        a2 = np.asarray(a2, dtype=np.complex128)
        if a1.shape != a2.shape:
            raise DimensionError(
                "complex parts must share a shape",
                {"a1": list(a1.shape), "a2": list(a2.shape)},
            )
        return cls(np.stack([a1.real, a1.imag, a2.real, a2.imag], axis=-1))

    @property
    def n(self) -> int:
        return self._data.shape[0]

    @property
    def data(self) -> np.ndarray:
        return self._data

    def __getitem__(self, index: tuple) -> Quaternion:
        i, j = index
        return Quaternion.from_array(self._data[i, j])

    def rows(self) -> List[List[Quaternion]]:
        return [[Quaternion.from_array(q) for q in row] for row in self._data]

    def complex_parts(self) -> tuple:
        d = self._data
        return d[..., 0] + 1j * d[..., 1], d[..., 2] + 1j * d[..., 3]

    def diagonal(self) -> np.ndarray:
        idx = np.arange(self.n)
        return self._data[idx, idx].copy()

    def moduli(self) -> np.ndarray:
        return norm_array(self._data)

    def has_real_diagonal(self, tol: float = _REAL_DIAG_TOL) -> bool:
        return bool(np.all(np.abs(self.diagonal()[:, 1:]) <= tol))

    def add(self, other: "QMatrix") -> "QMatrix":
        _require_same_size(self, other)
        return QMatrix(self._data + other._data)

    def sub(self, other: "QMatrix") -> "QMatrix":
        _require_same_size(self, other)
        return QMatrix(self._data - other._data)

    def scale(self, factor: float) -> "QMatrix":
        return QMatrix(self._data * float(factor))

    def shift(self, lam: Quaternion) -> "QMatrix":
        """A - lam I."""
        data = np.array(self._data)
        idx = np.arange(self.n)
        data[idx, idx] -= lam.as_array()
        return QMatrix(data)

    def __add__(self, other: "QMatrix") -> "QMatrix":
        return self.add(other)

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        return self.sub(other)

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        return matmul(self, other)

    def __repr__(self) -> str:
        return f"QMatrix(n={self.n})"


def _require_same_size(a: QMatrix, b: QMatrix) -> None:
    if a.n != b.n:
        raise DimensionError("matrix dimensions differ", {"left": a.n, "right": b.n})


def matmul(a: QMatrix, b: QMatrix) -> QMatrix:
    _require_same_size(a, b)
    # products[i, k, j] = a[i, k] * b[k, j]
    products = hamilton(a.data[:, :, None, :], b.data[None, :, :, :])
    return QMatrix(products.sum(axis=1))


def transpose(a: QMatrix) -> QMatrix:
    return QMatrix(np.transpose(a.data, (1, 0, 2)))


def conj(a: QMatrix) -> QMatrix:
    return QMatrix(conj_array(a.data))


def conj_transpose(a: QMatrix) -> QMatrix:
    return QMatrix(conj_array(np.transpose(a.data, (1, 0, 2))))


def complex_adjoint(a: QMatrix) -> np.ndarray:
    a1, a2 = a.complex_parts()
    return np.block([[a1, a2], [-np.conj(a2), np.conj(a1)]])


def from_complex_adjoint(m: np.ndarray) -> QMatrix:
    """Inverse of :func:`complex_adjoint`; reads A1 and A2 off the top block row."""
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] % 2:
        raise DimensionError(
            "complex adjoint must be square of even size", {"shape": list(m.shape)}
        )
    n = m.shape[0] // 2
    return QMatrix.from_complex_parts(m[:n, :n], m[:n, n:])


def vector_to_adjoint(x: np.ndarray) -> np.ndarray:
    """Map a quaternion vector ``(n, 4)`` to the complex ``2n`` vector ``[x1; -conj(x2)]``."""
    x = np.asarray(x, dtype=np.float64)
    x1 = x[:, 0] + 1j * x[:, 1]
    x2 = x[:, 2] + 1j * x[:, 3]
    return np.concatenate([x1, -np.conj(x2)])


def adjoint_to_vector(y: np.ndarray) -> np.ndarray:
    y = np.asarray(y, dtype=np.complex128)
    if y.ndim != 1 or y.shape[0] % 2:
        raise DimensionError("adjoint vector must have even length", {"shape": list(y.shape)})
    n = y.shape[0] // 2
    x1 = y[:n]
    x2 = -np.conj(y[n:])
    return np.stack([x1.real, x1.imag, x2.real, x2.imag], axis=-1)


def matvec(a: QMatrix, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (a.n, 4):
        raise DimensionError(
            "vector length must match the matrix", {"n": a.n, "shape": list(x.shape)}
        )
    return hamilton(a.data, x[None, :, :]).sum(axis=1)


def deleted_sums(a: QMatrix) -> DeletedSums:
    moduli = a.moduli()
    diag = np.diag(moduli).copy()
    off = moduli.copy()
    np.fill_diagonal(off, 0.0)
    r = off.sum(axis=1)
    c = off.sum(axis=0)
    return DeletedSums(r=r, c=c, r_prime=r + diag, c_prime=c + diag)


def _check_index(a: QMatrix, i: int) -> None:
    if not 0 <= i < a.n:
        raise DimensionError("row index out of range", {"index": i, "n": a.n})


def row_stats(a: QMatrix, i: int) -> RowStats:
    _check_index(a, i)
    sums = deleted_sums(a)
    return RowStats(
        r=float(sums.r[i]),
        c=float(sums.c[i]),
        r_prime=float(sums.r_prime[i]),
        c_prime=float(sums.c_prime[i]),
    )


def _check_p(p: float) -> None:
    if not np.isfinite(p) or p <= 1.0:
        raise ParameterError("Hölder exponent p must satisfy 1 < p < inf", {"p": p})


def holder_norms(a: QMatrix, p: float) -> np.ndarray:
    _check_p(p)
    off = a.moduli()
    np.fill_diagonal(off, 0.0)
    return np.power(np.sum(np.power(off, p), axis=1), 1.0 / p)


def holder_norm(a: QMatrix, i: int, p: float) -> float:
    _check_index(a, i)
    return float(holder_norms(a, p)[i])


def check_weights(weights: Sequence[float], n: int) -> np.ndarray:
    w = np.asarray(weights, dtype=np.float64)
    if w.shape != (n,):
        raise DimensionError("weight vector length must equal n", {"n": n, "length": int(w.size)})
    if not np.all(np.isfinite(w)) or np.any(w <= 0.0):
        raise ParameterError("weights must be positive and finite", {"weights": w.tolist()})
    return w


def scale_similarity(a: QMatrix, weights: Sequence[float]) -> QMatrix:
    """W^-1 A W for W = diag(weights): entry (i, j) becomes a_ij * w_j / w_i."""
    w = check_weights(weights, a.n)
    factors = w[None, :] / w[:, None]
    return QMatrix(a.data * factors[:, :, None])


def inverse(a: QMatrix) -> QMatrix:
    from src.algebra.spectra import is_invertible

    if not is_invertible(a):
        raise DomainError("matrix is singular", {"n": a.n})
    return from_complex_adjoint(np.linalg.inv(complex_adjoint(a)))


def power(a: QMatrix, t: int) -> QMatrix:
    if int(t) != t or t == 0:
        raise ParameterError("matrix power must be a nonzero integer", {"t": t})
    t = int(t)
    if t < 0:
        return power(inverse(a), -t)
    if t >= _BINARY_POWER_FROM:
        result = None
        base = a
        while t:
            if t & 1:
                result = base if result is None else matmul(result, base)
            t >>= 1
            if t:
                base = matmul(base, base)
        return result
    result = a
    for _ in range(t - 1):
        result = matmul(result, a)
    return result


def is_hermitian(a: QMatrix, tol: float = 1e-12) -> bool:
    return max_entry_distance(a, conj_transpose(a)) <= tol


def is_eta_hermitian(a: QMatrix, eta: Quaternion, tol: float = 1e-12) -> bool:
    """True when A equals (eta^H A eta)^H for eta one of the units i, j, k."""
    units = (np.array([0.0, 1, 0, 0]), np.array([0.0, 0, 1, 0]), np.array([0.0, 0, 0, 1]))
    eta_arr = eta.as_array()
    if not any(np.allclose(eta_arr, u, atol=1e-15) for u in units):
        raise ParameterError("eta must be one of i, j, k", {"eta": eta.as_list()})
    rotated = hamilton(hamilton(conj_array(eta_arr), a.data), eta_arr)
    return max_entry_distance(a, conj_transpose(QMatrix(rotated))) <= tol


def max_entry_distance(a: QMatrix, b: QMatrix) -> float:
    _require_same_size(a, b)
    return float(np.max(norm_array(a.data - b.data)))
