from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from src.algebra.qmat import QMatrix, adjoint_to_vector, complex_adjoint
from src.algebra.quat import Quaternion
from src.core.contracts.solvers import EigenSolver
from src.core.errors import DimensionError, NumericError

logger = logging.getLogger(__name__)

MAX_ORDER = 256
STANDARD_IM_TOL = 1e-9
INVERTIBLE_REL_TOL = 1e-10
_RADIX = 2.0
_EXCEPTIONAL_EVERY = 10
_ITERATIONS_PER_ORDER = 60


@dataclass(frozen=True)
class SpectrumReport:
    standard: np.ndarray
    all_adjoint: np.ndarray
    residual_tol: float

    def classes(self) -> List[Tuple[float, float]]:
        return [(float(z.real), float(abs(z.imag))) for z in self.standard]


def _givens(x: complex, y: complex) -> Tuple[float, complex]:
    """Rotation [[c, s], [-conj(s), c]] sending (x, y) to (r, 0)."""
    ax = abs(x)
    ay = abs(y)
    if ay == 0.0:
        return 1.0, 0j
    if ax == 0.0:
        return 0.0, np.conj(y) / ay
    r = np.hypot(ax, ay)
    return ax / r, (x / ax) * np.conj(y) / r


class ComplexEigenSolver:
    """Dense complex eigenvalues: balancing, Householder Hessenberg reduction, shifted QR.

    Instances keep a scratch buffer between calls; use one instance per thread.
    """

    def __init__(self, max_order: int = MAX_ORDER) -> None:
        self._max_order = max_order
        self._work: Optional[np.ndarray] = None
        self.last_iterations = 0

    def eigenvalues(self, matrix: np.ndarray) -> np.ndarray:
        m_in = np.asarray(matrix, dtype=np.complex128)
        if m_in.ndim != 2 or m_in.shape[0] != m_in.shape[1]:
            raise DimensionError("eigenvalues need a square matrix", {"shape": list(m_in.shape)})
        m = m_in.shape[0]
        if m > self._max_order:
            raise DimensionError(
                "matrix too large for the dense solver", {"order": m, "max": self._max_order}
            )
        if m == 0:
            return np.zeros(0, dtype=np.complex128)
        if not np.all(np.isfinite(m_in)):
            raise NumericError("matrix has non-finite entries", {"order": m})
        if self._work is None or self._work.shape != m_in.shape:
            self._work = np.empty_like(m_in)
        h = self._work
        h[...] = m_in
        self._balance(h)
        self._hessenberg(h)
        return self._shifted_qr(h)

    @staticmethod
    def _balance(h: np.ndarray) -> None:
        m = h.shape[0]
        sqrdx = _RADIX * _RADIX
        done = False
        while not done:
            done = True
            for i in range(m):
                c = float(np.sum(np.abs(h[:, i])) - abs(h[i, i]))
                r = float(np.sum(np.abs(h[i, :])) - abs(h[i, i]))
                if c == 0.0 or r == 0.0:
                    continue
                g = r / _RADIX
                f = 1.0
                s = c + r
                while c < g:
                    f *= _RADIX
                    c *= sqrdx
                g = r * _RADIX
                while c > g:
                    f /= _RADIX
                    c /= sqrdx
                if (c + r) / f < 0.95 * s:
                    done = False
                    h[i, :] /= f
                    h[:, i] *= f

    @staticmethod
    def _hessenberg(h: np.ndarray) -> None:
        m = h.shape[0]
        for k in range(m - 2):
            x = h[k + 1 :, k].copy()
            alpha = np.linalg.norm(x)
            if alpha == 0.0:
                continue
            phase = x[0] / abs(x[0]) if x[0] != 0 else 1.0
            v = x
            v[0] += phase * alpha
            v /= np.linalg.norm(v)
            h[k + 1 :, :] -= 2.0 * np.outer(v, v.conj() @ h[k + 1 :, :])
            h[:, k + 1 :] -= 2.0 * np.outer(h[:, k + 1 :] @ v, v.conj())
            h[k + 2 :, k] = 0.0

    def _shifted_qr(self, h: np.ndarray) -> np.ndarray:
        m = h.shape[0]
        eps = np.finfo(np.float64).eps
        eigs = np.empty(m, dtype=np.complex128)
        cap = _ITERATIONS_PER_ORDER * m
        total = 0
        its = 0
        hi = m - 1
        while hi >= 0:
            lo = hi
            while lo > 0:
                s = abs(h[lo - 1, lo - 1]) + abs(h[lo, lo])
                if s == 0.0:
                    s = float(np.sum(np.abs(h[: hi + 1, : hi + 1])))
                if abs(h[lo, lo - 1]) <= eps * s:
                    h[lo, lo - 1] = 0.0
                    break
                lo -= 1
            if lo == hi:
                eigs[hi] = h[hi, hi]
                hi -= 1
                its = 0
                continue
            if total >= cap:
                raise NumericError(
                    "QR iteration did not converge", {"order": m, "iterations": total}
                )
            total += 1
            its += 1
            mu = self._shift(h, lo, hi, its)
            self._qr_sweep(h, lo, hi, mu)
        self.last_iterations = total
        logger.debug("shifted QR converged: order=%d iterations=%d", m, total)
        return eigs

    @staticmethod
    def _shift(h: np.ndarray, lo: int, hi: int, its: int) -> complex:
        if its % _EXCEPTIONAL_EVERY == 0:
            mu = h[hi, hi] + abs(h[hi, hi - 1].real)
            if hi - 2 >= lo:
                mu += abs(h[hi - 1, hi - 2].real)
            return complex(mu)
        a, b = h[hi - 1, hi - 1], h[hi - 1, hi]
        c, d = h[hi, hi - 1], h[hi, hi]
        half = 0.5 * (a - d)
        disc = np.sqrt(half * half + b * c)
        mid = 0.5 * (a + d)
        mu1, mu2 = mid + disc, mid - disc
        return complex(mu1 if abs(mu1 - d) <= abs(mu2 - d) else mu2)

    @staticmethod
    def _qr_sweep(h: np.ndarray, lo: int, hi: int, mu: complex) -> None:
        for k in range(lo, hi):
            if k == lo:
                x = h[lo, lo] - mu
                y = h[lo + 1, lo]
            else:
                x = h[k, k - 1]
                y = h[k + 1, k - 1]
            c, s = _givens(x, y)
            start = max(lo, k - 1)
            top = h[k, start : hi + 1].copy()
            bottom = h[k + 1, start : hi + 1].copy()
            h[k, start : hi + 1] = c * top + s * bottom
            h[k + 1, start : hi + 1] = -np.conj(s) * top + c * bottom
            end = min(k + 3, hi + 1)
            left = h[lo:end, k].copy()
            right = h[lo:end, k + 1].copy()
            h[lo:end, k] = c * left + np.conj(s) * right
            h[lo:end, k + 1] = -s * left + c * right
            if k > lo:
                h[k + 1, k - 1] = 0.0


class NumpyEigenSolver:
    """LAPACK-backed alternative used as a cross-check."""

    def eigenvalues(self, matrix: np.ndarray) -> np.ndarray:
        return np.linalg.eigvals(np.asarray(matrix, dtype=np.complex128))


def complex_eigenvalues(matrix: np.ndarray) -> np.ndarray:
    return ComplexEigenSolver().eigenvalues(matrix)


def _select_standard(eigs: np.ndarray, n: int) -> np.ndarray:
    upper = [z for z in eigs if z.imag > STANDARD_IM_TOL]
    near = sorted(
        (z for z in eigs if abs(z.imag) <= STANDARD_IM_TOL), key=lambda z: (z.real, z.imag)
    )
    # near-real eigenvalues of the adjoint come in pairs; keep one per pair
    merged = [complex(0.5 * (a.real + b.real), 0.0) for a, b in zip(near[0::2], near[1::2])]
    if len(near) % 2:
        merged.append(complex(near[-1].real, 0.0))
    standard = upper + merged
    if len(standard) != n:
        logger.debug(
            "standard eigenvalue split uneven (%d of %d), falling back to top imaginary parts",
            len(standard),
            n,
        )
        standard = sorted(eigs, key=lambda z: -z.imag)[:n]
    return np.array(sorted(standard, key=lambda z: (z.real, z.imag)), dtype=np.complex128)


def standard_eigenvalues(
    a: QMatrix, solver: Optional[EigenSolver] = None
) -> SpectrumReport:
    psi = complex_adjoint(a)
    eigs = (solver or ComplexEigenSolver()).eigenvalues(psi)
    residual_tol = 1e-8 * max(1.0, float(np.linalg.norm(psi)))
    return SpectrumReport(
        standard=_select_standard(eigs, a.n),
        all_adjoint=np.array(sorted(eigs, key=lambda z: (z.real, z.imag)), dtype=np.complex128),
        residual_tol=residual_tol,
    )


def right_eigenvalue_classes(a: QMatrix) -> List[Tuple[float, float]]:
    return standard_eigenvalues(a).classes()


def _singular_values(matrix: np.ndarray) -> np.ndarray:
    return np.linalg.svd(matrix, compute_uv=False)


def is_invertible(a: QMatrix) -> bool:
    """Smallest eigenvalue modulus of Psi(A) against its Frobenius norm."""
    psi = complex_adjoint(a)
    scale = float(np.linalg.norm(psi))
    if scale == 0.0:
        return False
    smallest = float(np.min(np.abs(complex_eigenvalues(psi))))
    return smallest > INVERTIBLE_REL_TOL * scale


def left_eigen_residual(a: QMatrix, lam: Quaternion) -> float:
    """Smallest singular value of Psi(A - lam I), relative to ||Psi(A)||_2 + |lam|."""
    sigma = _singular_values(complex_adjoint(a.shift(lam)))
    scale = float(_singular_values(complex_adjoint(a)).max()) + lam.norm()
    if scale == 0.0:
        return 0.0
    return float(sigma.min() / scale)


def is_left_eigenvalue(a: QMatrix, lam: Quaternion, tol: float = 1e-8) -> bool:
    return left_eigen_residual(a, lam) <= tol


def right_eigenvector(a: QMatrix, lam: complex) -> np.ndarray:
    """Unit quaternion vector x with A x = x lam, by inverse iteration on Psi(A)."""
    psi = complex_adjoint(a)
    m = psi.shape[0]
    scale = max(1.0, float(np.linalg.norm(psi)))
    shifted = psi - (complex(lam) + 1e-10 * scale) * np.eye(m)
    y = np.ones(m, dtype=np.complex128) / np.sqrt(m)
    for _ in range(2):
        try:
            y = np.linalg.solve(shifted, y)
        except np.linalg.LinAlgError:
            shifted = shifted - 1e-8 * scale * np.eye(m)
            y = np.linalg.solve(shifted, y)
        y /= np.linalg.norm(y)
    x = adjoint_to_vector(y)
    return x / np.linalg.norm(x)


def spectral_abscissa(a: QMatrix) -> float:
    return float(np.max(standard_eigenvalues(a).standard.real))


def is_stable(a: QMatrix) -> bool:
    return spectral_abscissa(a) < 0.0
