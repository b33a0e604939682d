from __future__ import annotations

import numpy as np
import pytest

from src.algebra.quat import ONE, J, Quaternion, isclose
from src.polynomials.bounds import reciprocity_report
from src.polynomials.qpoly import QPolynomial, residual, tilde
from src.polynomials.roots import SphericalClass, class_powers, roots


def test_class_powers_follow_complex_powers():
    big_a, big_b = class_powers(0.5, 2.0, 5)
    expected = (0.5 + 2.0j) ** np.arange(6)
    np.testing.assert_allclose(big_a, expected.real)
    np.testing.assert_allclose(big_b, expected.imag)


def test_zeros_of_e1_left(e1_left):
    found = roots(e1_left)
    np.testing.assert_allclose(
        found.moduli(), [np.sqrt(5.0), np.sqrt(3.0), np.sqrt(2.0), 1.0], atol=1e-3
    )
    spherical = sorted(found.spherical, key=lambda c: -c.modulus)
    assert spherical[0].re == pytest.approx(0.0, abs=1e-6)
    assert spherical[0].imag_norm == pytest.approx(np.sqrt(3.0), abs=1e-6)
    assert spherical[1].imag_norm == pytest.approx(np.sqrt(2.0), abs=1e-6)
    expected = [Quaternion(0.0, -1.0, 0.0, -2.0), Quaternion(0.0, -0.6, 0.0, -0.8)]
    assert len(found.isolated) == 2
    for z, want in zip(found.isolated, expected):
        assert isclose(z, want, tol=1e-6)


def test_spherical_members_are_zeros(e1_left, e1_right):
    rng = np.random.default_rng(15)
    for p in (e1_left, e1_right):
        found = roots(p)
        assert len(found.spherical) == 2
        for cls in found.spherical:
            for _ in range(20):
                z = cls.member(rng.standard_normal(3))
                assert residual(p, z) <= 1e-7 * (1.0 + z.norm()) ** p.degree


def test_whole_sphere_of_z_squared_plus_one():
    found = roots(QPolynomial.from_coeffs("left", [ONE, Quaternion(), ONE]))
    assert found.isolated == []
    (cls,) = found.spherical
    assert cls.re == pytest.approx(0.0, abs=1e-9)
    assert cls.imag_norm == pytest.approx(1.0)


def test_right_eigenvalue_that_is_not_a_zero():
    p = QPolynomial.from_coeffs("left", [Quaternion(2.0), J, ONE])
    found = roots(p)
    assert any(isclose(z, J, tol=1e-8) for z in found.isolated)
    assert found.spherical == []
    assert residual(p, Quaternion(0.0, 1.0)) > 1.0


def test_found_zeros_have_small_residuals(random_polynomial):
    rng = np.random.default_rng(123)
    for side in ("left", "right"):
        for _ in range(20):
            p = random_polynomial(rng, int(rng.integers(2, 7)), side)
            found = roots(p)
            assert found.isolated
            for z in found.isolated:
                assert residual(p, z) <= found.residual_tol * (1.0 + z.norm()) ** p.degree


def test_tilde_zeros_are_conjugates(random_polynomial):
    rng = np.random.default_rng(321)
    for _ in range(10):
        p = random_polynomial(rng, 4)
        found = roots(p)
        flipped = tilde(p)
        for z in found.isolated:
            assert residual(flipped, z.conj()) <= found.residual_tol * (1.0 + z.norm()) ** 4
        np.testing.assert_allclose(roots(flipped).moduli(), found.moduli(), rtol=1e-6)


def test_reciprocity_of_e1(e1_left):
    report = reciprocity_report(e1_left)
    assert report.max_modulus_delta <= 1e-6
    assert all(report.pointwise)


def test_spherical_class_member_uses_unit_direction():
    cls = SphericalClass(1.0, 2.0)
    z = cls.member(np.array([0.0, 3.0, 4.0]))
    assert isclose(z, Quaternion(1.0, 0.0, 1.2, 1.6))
    assert cls.modulus == pytest.approx(np.sqrt(5.0))
