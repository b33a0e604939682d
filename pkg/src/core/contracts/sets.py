from __future__ import annotations

from typing import Protocol

import numpy as np

from src.algebra.quat import Quaternion


class InclusionSet(Protocol):
    def contains(self, q: Quaternion) -> bool:
        ...

    def contains_many(self, points: np.ndarray) -> np.ndarray:
        ...

    def enclosing_ball(self) -> tuple:
        ...
