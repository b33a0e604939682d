from __future__ import annotations

from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field, field_validator


class RegionKind(str, Enum):
    GERSCH_ROW = "gersch-row"
    GERSCH_COL = "gersch-col"
    OSTROWSKI_LEFT = "ostrowski-left"
    OSTROWSKI_RIGHT_REAL_DIAG = "ostrowski-right"
    BRAUER_COL = "brauer-col"
    BRAUER_LEFT_OSTROWSKI = "brauer-left"
    BRAUER_RIGHT_REAL_DIAG = "brauer-right"
    BRAUER_MIN = "brauer-min"
    HOLDER_LEFT = "holder-left"
    HOLDER_RIGHT_REAL_DIAG = "holder-right"

    @property
    def needs_real_diagonal(self) -> bool:
        return self in _REAL_DIAG_KINDS

    @property
    def is_cassini(self) -> bool:
        return self in _CASSINI_KINDS


_REAL_DIAG_KINDS = {
    RegionKind.OSTROWSKI_RIGHT_REAL_DIAG,
    RegionKind.BRAUER_RIGHT_REAL_DIAG,
    RegionKind.HOLDER_RIGHT_REAL_DIAG,
}

_CASSINI_KINDS = {
    RegionKind.BRAUER_COL,
    RegionKind.BRAUER_LEFT_OSTROWSKI,
    RegionKind.BRAUER_RIGHT_REAL_DIAG,
    RegionKind.BRAUER_MIN,
}


class RegionSpec(BaseModel):
    kind: RegionKind
    gamma: float = Field(1.0, ge=0.0, le=1.0)
    p: float = Field(2.0, gt=1.0, allow_inf_nan=False)
    weights: Optional[List[float]] = None

    @field_validator("weights")
    @classmethod
    def _positive_weights(cls, value: Optional[List[float]]) -> Optional[List[float]]:
        if value is not None and any(not (w > 0.0) for w in value):
            raise ValueError("weights must all be positive")
        return value

    @property
    def q(self) -> float:
        """Conjugate exponent, 1/p + 1/q = 1."""
        return self.p / (self.p - 1.0)
