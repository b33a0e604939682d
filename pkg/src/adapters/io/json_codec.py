from __future__ import annotations

from pathlib import Path
from typing import List, Sequence, Union

import numpy as np
from pydantic import BaseModel

from src.algebra.qmat import QMatrix
from src.algebra.quat import Quaternion
from src.algebra.spectra import SpectrumReport
from src.core.errors import QuatlocError
from src.core.schemas.payloads import MatrixPayload, PolynomialPayload
from src.core.schemas.reports import (
    BallPayload,
    BoundReportPayload,
    CassiniPayload,
    ErrorDetail,
    ErrorReport,
    IntersectionPayload,
    RootSetPayload,
    SphericalClassPayload,
    SpectrumPayload,
    UnionPayload,
)
from src.localization.regions import Ball, Cassini, Region, RegionIntersection, RegionUnion
from src.polynomials.bounds import BoundReport
from src.polynomials.qpoly import QPolynomial
from src.polynomials.roots import RootSet
from src.utils.file_io import read_text_any, write_text_utf8

RegionModel = Union[BallPayload, CassiniPayload, UnionPayload, IntersectionPayload]


def matrix_from_payload(payload: MatrixPayload) -> QMatrix:
    return QMatrix(np.array(payload.entries, dtype=np.float64))


def matrix_to_payload(a: QMatrix) -> MatrixPayload:
    return MatrixPayload(n=a.n, entries=matrix_entries(a))


def matrix_entries(a: QMatrix) -> List[List[List[float]]]:
    return a.data.tolist()


def polynomial_from_payload(payload: PolynomialPayload) -> QPolynomial:
    return QPolynomial(payload.side, np.array(payload.coeffs, dtype=np.float64))


def polynomial_to_payload(p: QPolynomial) -> PolynomialPayload:
    return PolynomialPayload(side=p.side.value, coeffs=p.coeffs.tolist())


def load_matrix(path: Path) -> QMatrix:
    return matrix_from_payload(MatrixPayload.model_validate_json(read_text_any(path)))


def load_polynomial(path: Path) -> QPolynomial:
    return polynomial_from_payload(PolynomialPayload.model_validate_json(read_text_any(path)))


def region_to_payload(region: Region) -> RegionModel:
    if isinstance(region, Ball):
        return BallPayload(center=region.center.as_list(), radius=region.radius)
    if isinstance(region, Cassini):
        return CassiniPayload(c1=region.c1.as_list(), c2=region.c2.as_list(), bound=region.bound)
    parts = [region_to_payload(part) for part in region.parts]
    if isinstance(region, RegionUnion):
        return UnionPayload(parts=parts)
    return IntersectionPayload(parts=parts)


def region_from_payload(payload: RegionModel) -> Region:
    if isinstance(payload, BallPayload):
        return Ball(Quaternion.from_array(payload.center), payload.radius)
    if isinstance(payload, CassiniPayload):
        return Cassini(
            Quaternion.from_array(payload.c1), Quaternion.from_array(payload.c2), payload.bound
        )
    parts = tuple(region_from_payload(part) for part in payload.parts)
    if isinstance(payload, UnionPayload):
        return RegionUnion(parts)
    return RegionIntersection(parts)


def _pairs(values: np.ndarray) -> List[tuple]:
    return [(float(z.real), float(z.imag)) for z in values]


def spectrum_to_payload(spectrum: SpectrumReport) -> SpectrumPayload:
    return SpectrumPayload(
        standard=_pairs(spectrum.standard),
        all_adjoint=_pairs(spectrum.all_adjoint),
        residual_tol=spectrum.residual_tol,
    )


def root_set_to_payload(p: QPolynomial, found: RootSet) -> RootSetPayload:
    return RootSetPayload(
        side=p.side.value,
        degree=p.degree,
        isolated=[z.as_list() for z in found.isolated],
        isolated_moduli=[z.norm() for z in found.isolated],
        spherical=[
            SphericalClassPayload(re=c.re, imag_norm=c.imag_norm, modulus=c.modulus)
            for c in found.spherical
        ],
        residual_tol=found.residual_tol,
    )


def bound_to_payload(report: BoundReport) -> BoundReportPayload:
    return BoundReportPayload(
        method=report.method.value,
        theorem=report.theorem,
        params=dict(report.params),
        lower=report.lower,
        upper=report.upper,
        lower_flagged=report.lower_flagged,
    )


def bounds_to_payloads(reports: Sequence[BoundReport]) -> List[BoundReportPayload]:
    return [bound_to_payload(r) for r in reports]


def error_report(exc: Exception) -> ErrorReport:
    if isinstance(exc, QuatlocError):
        detail = ErrorDetail(
            type=type(exc).__name__, code=exc.code, message=exc.message, details=exc.details
        )
    else:
        detail = ErrorDetail(type=type(exc).__name__, code="invalid_input", message=str(exc))
    return ErrorReport(error=detail)


def dump_json(model: BaseModel) -> str:
    return model.model_dump_json(indent=2) + "\n"


def write_report(model: BaseModel, path: Path) -> Path:
    write_text_utf8(path, dump_json(model))
    return path
