from __future__ import annotations

from typing import Annotated, List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

QuaternionList = Annotated[List[float], Field(min_length=4, max_length=4)]

MONIC_LEADING = [1.0, 0.0, 0.0, 0.0]


class MatrixPayload(BaseModel):
    n: int = Field(..., ge=1)
    entries: List[List[QuaternionList]]

    @model_validator(mode="after")
    def _check_square(self) -> "MatrixPayload":
        if len(self.entries) != self.n or any(len(row) != self.n for row in self.entries):
            raise ValueError(f"entries must hold {self.n} rows of {self.n} quaternions")
        return self


class PolynomialPayload(BaseModel):
    side: Literal["left", "right"]
    coeffs: List[QuaternionList] = Field(..., min_length=2)

    @model_validator(mode="after")
    def _check_monic(self) -> "PolynomialPayload":
        if [float(v) for v in self.coeffs[-1]] != MONIC_LEADING:
            raise ValueError("leading coefficient must be [1, 0, 0, 0]")
        return self


class BoundParams(BaseModel):
    gamma: float = Field(1.0, ge=0.0, le=1.0)
    t: int = Field(2, ge=2)
    weights: Optional[List[float]] = None
    variant: Optional[str] = None

    @field_validator("weights")
    @classmethod
    def _positive_weights(cls, value: Optional[List[float]]) -> Optional[List[float]]:
        if value is not None and any(not (w > 0.0) for w in value):
            raise ValueError("weights must all be positive")
        return value
