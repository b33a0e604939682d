from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.algebra.quat import (
    ONE,
    I,
    J,
    K,
    ZERO,
    Quaternion,
    class_member,
    conj,
    format_quaternion,
    hamilton,
    inverse,
    isclose,
    mul,
    norm,
    power,
    re,
    same_class,
)
from src.core.errors import DomainError

component = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False)
quaternions = st.builds(Quaternion, component, component, component, component)


def test_unit_products_follow_hamilton_rules():
    assert I * J == K
    assert J * K == I
    assert K * I == J
    assert J * I == -K
    assert I * I == -ONE
    assert I * J * K == -ONE


def test_hamilton_matches_scalar_product():
    a = Quaternion(1.0, 2.0, -3.0, 0.5)
    b = Quaternion(-2.0, 0.25, 4.0, 1.0)
    np.testing.assert_allclose(hamilton(a.as_array(), b.as_array()), (a * b).as_array())


def test_hamilton_broadcasts_over_leading_axes():
    rng = np.random.default_rng(3)
    a = rng.standard_normal((5, 4))
    b = rng.standard_normal((5, 4))
    batch = hamilton(a, b)
    for row in range(5):
        expected = Quaternion.from_array(a[row]) * Quaternion.from_array(b[row])
        np.testing.assert_allclose(batch[row], expected.as_array())


def test_functional_forms_on_small_cases():
    assert mul(ONE + I, ONE + J) == Quaternion(1.0, 1.0, 1.0, 1.0)
    assert norm(Quaternion(1.0, 1.0, 1.0, -1.0)) == 2.0
    assert inverse(I) == -I
    assert conj(I * J) == -K
    assert re(Quaternion(3.0, 1.0)) == 3.0


def test_inverse_of_zero_raises():
    with pytest.raises(DomainError, match="zero quaternion"):
        ZERO.inverse()


def test_inverse_and_conjugate():
    q = Quaternion(1.0, 2.0, 3.0, 4.0)
    assert isclose(q * q.inverse(), ONE)
    assert q.conj() == Quaternion(1.0, -2.0, -3.0, -4.0)
    assert q.norm() == pytest.approx(np.sqrt(30.0))


def test_power_handles_negative_exponents():
    q = Quaternion(0.5, 1.0, -1.0, 0.25)
    assert isclose(power(q, 3), q * q * q)
    assert isclose(power(q, -2) * power(q, 2), ONE)
    assert power(q, 0) == ONE


def test_same_class_compares_real_part_and_imaginary_modulus():
    assert same_class(I, J)
    assert same_class(Quaternion(1.0, 3.0, 4.0), Quaternion(1.0, 0.0, 0.0, 5.0))
    assert not same_class(I, Quaternion(0.0, 2.0))
    with pytest.raises(DomainError):
        same_class(I, J, tol=-1.0)


def test_complex_conversions():
    q = Quaternion.from_complex(2.0 - 3.0j)
    assert q.to_complex() == 2.0 - 3.0j
    assert Quaternion(1.0, 0.0, 3.0, 4.0).class_representative() == 1.0 + 5.0j
    with pytest.raises(DomainError):
        J.to_complex()


def test_class_member_scales_the_unit():
    z = class_member(0.0, np.sqrt(3.0), np.array([0.0, 1.0, 0.0]))
    assert isclose(z * z, Quaternion(-3.0))


def test_format_quaternion_rounds_to_four_places():
    assert format_quaternion(Quaternion(0.0, -1.0, 0.0, -2.0)) == "-i-2k"
    assert format_quaternion(Quaternion(2.23606, 0.0, 0.0, 0.0)) == "2.2361"
    assert format_quaternion(ZERO) == "0"


@settings(max_examples=200, deadline=None)
@given(quaternions, quaternions, quaternions)
def test_product_is_associative(a, b, c):
    left = (a * b) * c
    right = a * (b * c)
    assert (left - right).norm() <= 1e-9 * (1.0 + a.norm() * b.norm() * c.norm())


@settings(max_examples=200, deadline=None)
@given(quaternions, quaternions)
def test_norm_is_multiplicative(a, b):
    assert (a * b).norm() == pytest.approx(a.norm() * b.norm(), rel=1e-9, abs=1e-9)


@settings(max_examples=200, deadline=None)
@given(quaternions, quaternions)
def test_conjugate_reverses_products(a, b):
    lhs = (a * b).conj()
    rhs = b.conj() * a.conj()
    assert (lhs - rhs).norm() <= 1e-9 * (1.0 + a.norm() * b.norm())


@settings(max_examples=200, deadline=None)
@given(quaternions, quaternions)
def test_similar_quaternions_share_a_class(q, s):
    if s.norm() < 1e-3:
        return
    moved = s.inverse() * q * s
    assert same_class(q, moved, tol=1e-8 * (1.0 + q.norm()))
