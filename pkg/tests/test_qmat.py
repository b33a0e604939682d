from __future__ import annotations

import numpy as np
import pytest

from src.algebra.qmat import (
    QMatrix,
    adjoint_to_vector,
    complex_adjoint,
    conj_transpose,
    deleted_sums,
    from_complex_adjoint,
    holder_norm,
    holder_norms,
    inverse,
    is_eta_hermitian,
    is_hermitian,
    matmul,
    matvec,
    max_entry_distance,
    power,
    row_stats,
    scale_similarity,
    vector_to_adjoint,
)
from src.algebra.quat import I, J, K, ONE, Quaternion
from src.core.errors import DimensionError, DomainError, ParameterError


def test_shape_is_validated():
    with pytest.raises(DimensionError):
        QMatrix(np.zeros((2, 3, 4)))
    with pytest.raises(DimensionError):
        QMatrix(np.zeros((2, 2, 3)))


def test_data_is_read_only(ree1):
    with pytest.raises(ValueError):
        ree1.data[0, 0, 0] = 1.0


def test_entries_are_quaternions(ree1):
    assert ree1[0, 1] == Quaternion(1.0, 1.0, 1.0, -1.0)
    assert ree1.n == 3


def test_row_stats_of_ree1(ree1):
    sums = deleted_sums(ree1)
    np.testing.assert_allclose(sums.r, [6.0, 11.0, 8.0])
    np.testing.assert_allclose(sums.c, [11.0, 5.0, 9.0])
    stats = row_stats(ree1, 1)
    assert stats.r_prime == pytest.approx(13.0)
    assert stats.c_prime == pytest.approx(7.0)
    with pytest.raises(DimensionError):
        row_stats(ree1, 3)


def test_holder_norms(ree1):
    expected = [np.sqrt(20.0), np.sqrt(61.0), np.sqrt(34.0)]
    np.testing.assert_allclose(holder_norms(ree1, 2.0), expected)
    assert holder_norm(ree1, 0, 2.0) == pytest.approx(np.sqrt(20.0))
    with pytest.raises(ParameterError):
        holder_norms(ree1, 1.0)
    with pytest.raises(ParameterError):
        holder_norms(ree1, float("inf"))


def test_complex_adjoint_is_multiplicative(random_matrix):
    rng = np.random.default_rng(11)
    for n in (1, 2, 4):
        a = random_matrix(rng, n)
        b = random_matrix(rng, n)
        np.testing.assert_allclose(
            complex_adjoint(matmul(a, b)), complex_adjoint(a) @ complex_adjoint(b), atol=1e-12
        )


def test_complex_adjoint_respects_conjugate_transpose(random_matrix):
    a = random_matrix(np.random.default_rng(5), 3)
    np.testing.assert_allclose(complex_adjoint(conj_transpose(a)), complex_adjoint(a).conj().T)


def test_from_complex_adjoint_inverts_the_embedding(random_matrix):
    a = random_matrix(np.random.default_rng(2), 3)
    assert max_entry_distance(from_complex_adjoint(complex_adjoint(a)), a) < 1e-14


def test_adjoint_vector_map_round_trips():
    x = np.random.default_rng(4).standard_normal((3, 4))
    np.testing.assert_allclose(adjoint_to_vector(vector_to_adjoint(x)), x)


def test_matvec_agrees_with_adjoint(random_matrix):
    rng = np.random.default_rng(8)
    a = random_matrix(rng, 3)
    x = rng.standard_normal((3, 4))
    np.testing.assert_allclose(
        vector_to_adjoint(matvec(a, x)), complex_adjoint(a) @ vector_to_adjoint(x), atol=1e-12
    )


def test_scale_similarity_entries(se_matrix):
    scaled = scale_similarity(se_matrix, [8.0, 4.0, 1.0])
    assert scaled[0, 1] == Quaternion(0.0, 0.0, 0.0, 0.5)
    np.testing.assert_allclose(deleted_sums(scaled).r, [7.0 / 8.0, 0.5, 0.0], atol=1e-15)
    with pytest.raises(ParameterError):
        scale_similarity(se_matrix, [1.0, 0.0, 1.0])
    with pytest.raises(DimensionError):
        scale_similarity(se_matrix, [1.0, 1.0])


def test_inverse_and_negative_powers(random_matrix):
    a = random_matrix(np.random.default_rng(9), 3)
    assert max_entry_distance(matmul(a, inverse(a)), QMatrix.identity(3)) < 1e-10
    assert max_entry_distance(matmul(power(a, -2), power(a, 2)), QMatrix.identity(3)) < 1e-8
    with pytest.raises(DomainError, match="singular"):
        inverse(QMatrix.zeros(2))
    with pytest.raises(ParameterError):
        power(a, 0)


def test_binary_and_sequential_powers_agree(random_matrix):
    a = random_matrix(np.random.default_rng(6), 3).scale(0.5)
    seq = a
    for _ in range(8):
        seq = matmul(seq, a)
    scale = float(np.max(seq.moduli()))
    assert max_entry_distance(power(a, 9), seq) <= 1e-12 * max(1.0, scale)


def test_hermitian_predicates():
    h = QMatrix.from_quaternions([[ONE, I + J], [(I + J).conj(), 2 * ONE]])
    assert is_hermitian(h)
    assert not is_hermitian(QMatrix.from_quaternions([[I, ONE], [ONE, ONE]]))
    assert h.has_real_diagonal()
    # off-diagonal j anticommutes with eta = i
    eta_h = QMatrix.from_quaternions([[ONE, J], [J, 2 * ONE]])
    assert is_eta_hermitian(eta_h, I)
    with pytest.raises(ParameterError):
        is_eta_hermitian(eta_h, ONE)
    assert not is_eta_hermitian(QMatrix.from_quaternions([[ONE, I], [ONE, ONE]]), K)


def test_from_complex_parts_rejects_mismatched_shapes():
    a = QMatrix.from_complex_parts(np.eye(2), np.zeros((2, 2)))
    assert a.has_real_diagonal()
    with pytest.raises(DimensionError):
        QMatrix.from_complex_parts(np.eye(2), np.zeros((3, 3)))
