from __future__ import annotations

from pathlib import Path
from typing import Optional, Sequence

from src.adapters.io.json_codec import load_matrix, load_polynomial
from src.core.schemas.payloads import BoundParams
from src.core.schemas.regions import RegionSpec
from src.core.schemas.reports import (
    BoundsReport,
    CompareReport,
    InvertibilityReport,
    PowerCheckReport,
    RegionReport,
    RootSetPayload,
    StabilityReport,
)
from src.monitoring.mlflow_utils import MLflowLogger
from src.pipelines.analysis.analysis_pipeline import AnalysisPipeline, InclusionRequest, OutputPaths


class AnalysisService:
    """File-level facade over the analysis pipeline."""

    def __init__(self, pipeline: AnalysisPipeline) -> None:
        self._pipeline = pipeline

    def regions(
        self,
        matrix_path: Path,
        spec: RegionSpec,
        weight_family: Optional[Sequence[Sequence[float]]] = None,
        inclusion: Optional[InclusionRequest] = None,
        outputs: OutputPaths = OutputPaths(),
    ) -> RegionReport:
        return self._pipeline.regions(
            load_matrix(matrix_path), spec, weight_family, inclusion, outputs
        )

    def bounds(
        self,
        poly_path: Path,
        method: str,
        params: Optional[BoundParams] = None,
        outputs: OutputPaths = OutputPaths(),
    ) -> BoundsReport:
        return self._pipeline.bounds(load_polynomial(poly_path), method, params, outputs)

    def roots(self, poly_path: Path, outputs: OutputPaths = OutputPaths()) -> RootSetPayload:
        return self._pipeline.roots(load_polynomial(poly_path), outputs)

    def stability(
        self, matrix_path: Path, gamma: float, p: float, outputs: OutputPaths = OutputPaths()
    ) -> StabilityReport:
        return self._pipeline.stability(load_matrix(matrix_path), gamma, p, outputs)

    def invertibility(
        self, matrix_path: Path, gamma: float, variant: str, outputs: OutputPaths = OutputPaths()
    ) -> InvertibilityReport:
        return self._pipeline.invertibility(load_matrix(matrix_path), gamma, variant, outputs)

    def power(
        self, poly_path: Path, t: int, check: bool, outputs: OutputPaths = OutputPaths()
    ) -> PowerCheckReport:
        return self._pipeline.power(load_polynomial(poly_path), t, check, outputs)

    def compare(
        self, poly_paths: Sequence[Path], outputs: OutputPaths = OutputPaths()
    ) -> CompareReport:
        polys = [(path.stem, load_polynomial(path)) for path in poly_paths]
        return self._pipeline.compare(polys, outputs)


def build_service_from_env(workers: Optional[int] = None) -> AnalysisService:
    tracker = MLflowLogger.from_env()
    return AnalysisService(AnalysisPipeline(tracker, workers))
