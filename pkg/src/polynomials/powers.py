"""Powers of companion matrices without general matrix products.

For a left companion matrix, row ``i`` of ``C^t`` is the unit row ``e_{i+t}`` while
``i + t <= m`` and otherwise the last row of ``C^{i+t-m}``. The last rows obey

    L_s[0]  = L_{s-1}[m-1] * C[m-1, 0]
    L_s[1:] = L_{s-1}[:m-1] + L_{s-1}[m-1] * C[m-1, 1:]

with ``L_0 = e_m``. Right companions are the column-wise mirror with the factors swapped.
"""
from __future__ import annotations

from enum import Enum
from typing import List

import numpy as np

from src.algebra.qmat import QMatrix, power
from src.algebra.quat import hamilton
from src.core.errors import ParameterError
from src.polynomials.qpoly import QPolynomial, Side, companion, reversal, tilde


class SquareTransform(str, Enum):
    IDENTITY = "identity"
    TILDE = "tilde"
    REVERSAL = "reversal"
    TILDE_REVERSAL = "tilde-reversal"


def _last_lines(p: QPolynomial, t: int) -> List[np.ndarray]:
    """Last row (left) or last column (right) of C^s for s = 0..t."""
    m = p.degree
    line = -p.coeffs[:m]
    unit = np.zeros((m, 4))
    unit[m - 1, 0] = 1.0
    lines = [unit]
    for _ in range(t):
        prev = lines[-1]
        tail = prev[m - 1]
        nxt = np.zeros((m, 4))
        if p.side is Side.LEFT:
            nxt[0] = hamilton(tail, line[0])
            nxt[1:] = prev[: m - 1] + hamilton(tail, line[1:])
        else:
            nxt[0] = hamilton(line[0], tail)
            nxt[1:] = prev[: m - 1] + hamilton(line[1:], tail)
        lines.append(nxt)
    return lines


def companion_power_structured(p: QPolynomial, t: int) -> QMatrix:
    if int(t) != t or t < 1:
        raise ParameterError("structured power needs a positive integer t", {"t": t})
    t = int(t)
    m = p.degree
    lines = _last_lines(p, t)
    data = np.zeros((m, m, 4))
    for i in range(m):
        k = i + 1 + t
        vec = np.zeros((m, 4))
        if k <= m:
            vec[k - 1, 0] = 1.0
        else:
            vec = lines[k - m]
        if p.side is Side.LEFT:
            data[i, :, :] = vec
        else:
            data[:, i, :] = vec
    return QMatrix(data)


def _transformed(p: QPolynomial, transform: SquareTransform) -> QPolynomial:
    if transform is SquareTransform.IDENTITY:
        return p
    if transform is SquareTransform.TILDE:
        return tilde(p)
    if transform is SquareTransform.REVERSAL:
        return reversal(p)
    return reversal(tilde(p))


def companion_square_closed_form(
    p: QPolynomial, transform: SquareTransform = SquareTransform.IDENTITY
) -> QMatrix:
    """C^2 of the transformed polynomial, written out entry by entry.

    With Q the coefficient row and Q_{-1} = 0, a left square has unit rows e_3..e_m, then
    -Q, then the row Q_{m-1} Q_{j-1} - Q_{j-2}. A right square is the column mirror with
    the entries Q_{i-1} Q_{m-1} - Q_{i-2}.
    """
    poly = _transformed(p, SquareTransform(transform))
    m = poly.degree
    q = np.vstack([np.zeros((1, 4)), poly.coeffs[:m]])  # q[j + 1] = Q_j
    lead = poly.coeffs[m - 1]
    data = np.zeros((m, m, 4))
    for i in range(m):
        if i < m - 2:
            vec = np.zeros((m, 4))
            vec[i + 2, 0] = 1.0
        elif i == m - 2:
            vec = -poly.coeffs[:m]
        else:
            if poly.side is Side.LEFT:
                vec = hamilton(lead, q[1:]) - q[:-1]
            else:
                vec = hamilton(q[1:], lead) - q[:-1]
        if poly.side is Side.LEFT:
            data[i, :, :] = vec
        else:
            data[:, i, :] = vec
    return QMatrix(data)


def direct_power(p: QPolynomial, t: int) -> QMatrix:
    return power(companion(p), t)
