from __future__ import annotations

from typing import Protocol

import numpy as np


class EigenSolver(Protocol):
    def eigenvalues(self, matrix: np.ndarray) -> np.ndarray:
        ...
