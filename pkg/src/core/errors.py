from __future__ import annotations

from typing import Any, Dict, Optional


class QuatlocError(Exception):
    code = "quatloc_error"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None) -> None:
        super().__init__(message)
        self.message = message
        self.details: Dict[str, Any] = details or {}


class DomainError(QuatlocError, ValueError):
    code = "domain_error"


class PreconditionError(DomainError):
    code = "precondition_error"


class ParameterError(QuatlocError, ValueError):
    code = "parameter_error"


class DimensionError(QuatlocError, ValueError):
    code = "dimension_error"


class NumericError(QuatlocError, ArithmeticError):
    code = "numeric_error"
