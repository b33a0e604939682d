from __future__ import annotations

from typing import Annotated, Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, Field

from src.core.schemas.payloads import QuaternionList

ComplexPair = Tuple[float, float]


class BallPayload(BaseModel):
    kind: Literal["ball"] = "ball"
    center: QuaternionList
    radius: float = Field(..., ge=0.0)


class CassiniPayload(BaseModel):
    kind: Literal["cassini"] = "cassini"
    c1: QuaternionList
    c2: QuaternionList
    bound: float = Field(..., ge=0.0)


class UnionPayload(BaseModel):
    kind: Literal["union"] = "union"
    parts: List["RegionPayload"] = Field(default_factory=list)


class IntersectionPayload(BaseModel):
    kind: Literal["intersection"] = "intersection"
    parts: List["RegionPayload"] = Field(default_factory=list)


RegionPayload = Annotated[
    Union[BallPayload, CassiniPayload, UnionPayload, IntersectionPayload],
    Field(discriminator="kind"),
]

UnionPayload.model_rebuild()
IntersectionPayload.model_rebuild()


class DiscDescriptor(BaseModel):
    part: int
    shape: Literal["disc", "cassini", "point"]
    center: ComplexPair
    center2: Optional[ComplexPair] = None
    radius: Optional[float] = None
    bound: Optional[float] = None
    representative: bool = False  # center replaced by its class representative


class SpectrumPayload(BaseModel):
    standard: List[ComplexPair]
    all_adjoint: List[ComplexPair]
    residual_tol: float


class InclusionCheck(BaseModel):
    inner: str
    outer: str
    samples: int
    seed: int
    holds: bool
    witness: Optional[QuaternionList] = None


class RegionReport(BaseModel):
    method: str
    theorem: str
    params: Dict[str, Any] = Field(default_factory=dict)
    region: RegionPayload
    discs: List[DiscDescriptor] = Field(default_factory=list)
    spectrum: SpectrumPayload
    eigenvalues_contained: List[bool] = Field(default_factory=list)
    inclusion: Optional[InclusionCheck] = None


class SphericalClassPayload(BaseModel):
    re: float
    imag_norm: float
    modulus: float


class RootSetPayload(BaseModel):
    side: Literal["left", "right"]
    degree: int
    isolated: List[QuaternionList] = Field(default_factory=list)
    isolated_moduli: List[float] = Field(default_factory=list)
    spherical: List[SphericalClassPayload] = Field(default_factory=list)
    residual_tol: float


class BoundReportPayload(BaseModel):
    method: str
    theorem: str
    params: Dict[str, Any] = Field(default_factory=dict)
    lower: float = Field(..., ge=0.0)
    upper: float = Field(..., ge=0.0)
    lower_flagged: bool = False


class BoundsReport(BaseModel):
    side: Literal["left", "right"]
    degree: int
    reports: List[BoundReportPayload] = Field(default_factory=list)
    ranking: List[int] = Field(default_factory=list)
    root_moduli: List[float] = Field(default_factory=list)


class PowerCheckReport(BaseModel):
    side: Literal["left", "right"]
    t: int
    matrix: List[List[QuaternionList]]
    checked: bool = False
    structured_equals_direct: Optional[bool] = None
    max_entry_delta: Optional[float] = None
    closed_form_delta: Optional[float] = None
    eigen_residuals: List[float] = Field(default_factory=list)


class OpferRow(BaseModel):
    label: str
    alpha: float
    opfer_bound: float
    alpha_le_bound: bool
    q0_modulus: float
    premise_holds: bool


class CompareReport(BaseModel):
    rows: List[OpferRow] = Field(default_factory=list)


class StabilityReport(BaseModel):
    gamma: float
    p: float
    sufficient: bool
    real_diag_sufficient: Optional[bool] = None
    spectral_abscissa: float
    stable: bool
    spectrum: SpectrumPayload


class InvertibilityReport(BaseModel):
    gamma: float
    variant: Literal["ostrowski", "brauer"]
    sufficient: bool
    invertible: bool


class ErrorDetail(BaseModel):
    type: str
    code: str
    message: str
    details: Dict[str, Any] = Field(default_factory=dict)


class ErrorReport(BaseModel):
    error: ErrorDetail
