from __future__ import annotations

import numpy as np
import pytest

from src.algebra.qmat import QMatrix, matmul, max_entry_distance, transpose
from src.algebra.quat import I, J, K, ONE, ZERO
from src.core.errors import ParameterError
from src.polynomials.powers import (
    SquareTransform,
    companion_power_structured,
    companion_square_closed_form,
    direct_power,
)
from src.polynomials.qpoly import companion, reversal, tilde

EX57_LEFT_SQUARE = QMatrix.from_quaternions(
    [
        [ZERO, ZERO, ONE],
        [-I - J, J - K, K],
        [I - J, ONE - 2 * I - J, J - K - ONE],
    ]
)

EX57_RIGHT_SQUARE = QMatrix.from_quaternions(
    [
        [ZERO, -I - J, J - I],
        [ZERO, J - K, ONE - J],
        [ONE, K, J - K - ONE],
    ]
)


def _scale(m: QMatrix) -> float:
    return max(1.0, float(np.max(m.moduli())))


def test_squares_of_ex57_are_exact(ex57_left, ex57_right):
    c_left = companion(ex57_left)
    c_right = companion(ex57_right)
    assert max_entry_distance(matmul(c_left, c_left), EX57_LEFT_SQUARE) == 0.0
    assert max_entry_distance(matmul(c_right, c_right), EX57_RIGHT_SQUARE) == 0.0
    assert max_entry_distance(companion_power_structured(ex57_left, 2), EX57_LEFT_SQUARE) == 0.0
    assert max_entry_distance(companion_square_closed_form(ex57_right), EX57_RIGHT_SQUARE) == 0.0


def test_right_square_is_not_the_transposed_left_square(ex57_left, ex57_right):
    gap = max_entry_distance(direct_power(ex57_right, 2), transpose(direct_power(ex57_left, 2)))
    assert gap > 0.5


def test_structured_power_matches_direct_products(random_polynomial):
    rng = np.random.default_rng(606)
    for side in ("left", "right"):
        p = random_polynomial(rng, 6, side)
        for t in range(2, 10):
            direct = direct_power(p, t)
            structured = companion_power_structured(p, t)
            assert max_entry_distance(structured, direct) <= 1e-12 * _scale(direct), (side, t)


def test_structured_power_beyond_the_degree(random_polynomial):
    p = random_polynomial(np.random.default_rng(5), 2, "left")
    direct = direct_power(p, 7)
    assert max_entry_distance(companion_power_structured(p, 7), direct) <= 1e-12 * _scale(direct)


def test_first_power_is_the_companion(ex57_left, ex57_right):
    for p in (ex57_left, ex57_right):
        assert max_entry_distance(companion_power_structured(p, 1), companion(p)) == 0.0


def test_structured_power_rejects_bad_exponents(ex57_left):
    with pytest.raises(ParameterError):
        companion_power_structured(ex57_left, 0)
    with pytest.raises(ParameterError):
        companion_power_structured(ex57_left, 2.5)


@pytest.mark.parametrize("transform", list(SquareTransform))
@pytest.mark.parametrize("side", ["left", "right"])
def test_closed_form_squares(random_polynomial, transform, side):
    p = random_polynomial(np.random.default_rng(12), 5, side)
    poly = {
        SquareTransform.IDENTITY: p,
        SquareTransform.TILDE: tilde(p),
        SquareTransform.REVERSAL: reversal(p),
        SquareTransform.TILDE_REVERSAL: reversal(tilde(p)),
    }[transform]
    direct = direct_power(poly, 2)
    closed = companion_square_closed_form(p, transform)
    assert max_entry_distance(closed, direct) <= 1e-12 * _scale(direct)
