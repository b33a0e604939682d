from __future__ import annotations

from pathlib import Path
from typing import Callable

import numpy as np
import pytest

from src.adapters.io.json_codec import load_matrix, load_polynomial
from src.algebra.qmat import QMatrix
from src.polynomials.qpoly import QPolynomial

EXAMPLES = Path(__file__).resolve().parents[1] / "data" / "examples"


@pytest.fixture(autouse=True)
def _no_tracking(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv("MLFLOW_TRACKING_URI", raising=False)


@pytest.fixture
def examples_dir() -> Path:
    return EXAMPLES


@pytest.fixture
def ree1() -> QMatrix:
    return load_matrix(EXAMPLES / "ree1.json")


@pytest.fixture
def ree2() -> QMatrix:
    return load_matrix(EXAMPLES / "ree2.json")


@pytest.fixture
def ree3() -> QMatrix:
    return load_matrix(EXAMPLES / "ree3.json")


@pytest.fixture
def se_matrix() -> QMatrix:
    return load_matrix(EXAMPLES / "se.json")


@pytest.fixture
def count2() -> QMatrix:
    return load_matrix(EXAMPLES / "count2.json")


@pytest.fixture
def e1_left() -> QPolynomial:
    return load_polynomial(EXAMPLES / "e1_left.json")


@pytest.fixture
def e1_right() -> QPolynomial:
    return load_polynomial(EXAMPLES / "e1_right.json")


@pytest.fixture
def ex57_left() -> QPolynomial:
    return load_polynomial(EXAMPLES / "ex57_left.json")


@pytest.fixture
def ex57_right() -> QPolynomial:
    return load_polynomial(EXAMPLES / "ex57_right.json")


def make_matrix(rng: np.random.Generator, n: int, real_diag: bool = False) -> QMatrix:
    data = rng.standard_normal((n, n, 4))
    if real_diag:
        idx = np.arange(n)
        data[idx, idx, 1:] = 0.0
    return QMatrix(data)


def make_polynomial(rng: np.random.Generator, m: int, side: str = "left") -> QPolynomial:
    coeffs = rng.standard_normal((m + 1, 4))
    coeffs[-1] = [1.0, 0.0, 0.0, 0.0]
    return QPolynomial(side, coeffs)


@pytest.fixture
def random_matrix() -> Callable[..., QMatrix]:
    return make_matrix


@pytest.fixture
def random_polynomial() -> Callable[..., QPolynomial]:
    return make_polynomial
