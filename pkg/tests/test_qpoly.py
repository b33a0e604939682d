from __future__ import annotations

import numpy as np
import pytest

from src.algebra.qmat import QMatrix, max_entry_distance
from src.algebra.quat import I, J, K, ONE, ZERO, Quaternion, isclose
from src.core.errors import DomainError, ParameterError, PreconditionError
from src.polynomials.qpoly import QPolynomial, Side, companion, eval, residual, reversal, tilde


def _quadratic(side: str) -> QPolynomial:
    # z^2 + j z + 2
    return QPolynomial.from_coeffs(side, [Quaternion(2.0), J, ONE])


def test_construction_checks_shape_and_leading_coefficient():
    with pytest.raises(ParameterError):
        QPolynomial("left", np.zeros((3, 3)))
    with pytest.raises(ParameterError):
        QPolynomial("left", np.array([[1.0, 0.0, 0.0, 0.0]]))
    with pytest.raises(PreconditionError, match="monic"):
        QPolynomial.from_coeffs("left", [ONE, Quaternion(2.0)])
    with pytest.raises(ValueError):
        QPolynomial("middle", np.array([[0.0] * 4, [1.0, 0.0, 0.0, 0.0]]))


def test_coefficients_are_read_only(e1_left):
    with pytest.raises(ValueError):
        e1_left.coeffs[0, 0] = 1.0
    assert e1_left.degree == 6
    assert e1_left.side is Side.LEFT


def test_evaluation_depends_on_the_side():
    left = _quadratic("left")
    right = _quadratic("right")
    assert eval(left, J) == ZERO
    assert isclose(eval(left, I), ONE - K)
    assert isclose(eval(right, I), ONE + K)
    assert residual(left, I) == pytest.approx(np.sqrt(2.0))


def test_companion_of_quadratic():
    expected = QMatrix.from_quaternions([[ZERO, ONE], [Quaternion(-2.0), -J]])
    assert max_entry_distance(companion(_quadratic("left")), expected) == 0.0
    expected_right = QMatrix.from_quaternions([[ZERO, Quaternion(-2.0)], [ONE, -J]])
    assert max_entry_distance(companion(_quadratic("right")), expected_right) == 0.0


def test_companion_last_row_of_cubic(ex57_left, ex57_right):
    c = companion(ex57_left)
    assert [c[2, j] for j in range(3)] == [-I - J, J - K, K]
    assert [c[i, i + 1] for i in range(2)] == [ONE, ONE]
    r = companion(ex57_right)
    assert [r[i, 2] for i in range(3)] == [-I - J, J - K, K]


def test_reversal_of_quadratic():
    rev = reversal(_quadratic("left"))
    assert rev.coefficient_list() == [Quaternion(0.5), Quaternion(0.0, 0.0, 0.5), ONE]


def test_reversal_needs_a_constant_term():
    with pytest.raises(DomainError):
        reversal(QPolynomial.from_coeffs("left", [ZERO, J, ONE]))


def test_reversal_maps_zeros_to_inverses():
    p = _quadratic("left")
    assert residual(reversal(p), J.inverse()) < 1e-15


def test_tilde_conjugates_and_flips_side(ex57_right):
    t = tilde(ex57_right)
    assert t.side is Side.LEFT
    assert t.coefficient_list() == [-I - J, J - K, K, ONE]
    assert tilde(t).coefficient_list() == ex57_right.coefficient_list()


def test_tilde_evaluates_to_the_conjugate(random_polynomial):
    rng = np.random.default_rng(8)
    p = random_polynomial(rng, 4)
    z = Quaternion.from_array(rng.standard_normal(4))
    assert isclose(eval(tilde(p), z.conj()), eval(p, z).conj(), tol=1e-10)


def test_coefficient_moduli_and_realness(e1_left):
    p = QPolynomial.from_coeffs("left", [Quaternion(2.0), Quaternion(0.0, 3.0, 4.0), ONE])
    np.testing.assert_allclose(p.coefficient_moduli(), [2.0, 5.0, 1.0])
    assert not p.is_real()
    assert QPolynomial.from_coeffs("right", [Quaternion(-1.0), ZERO, ONE]).is_real()
    assert not e1_left.is_real()
