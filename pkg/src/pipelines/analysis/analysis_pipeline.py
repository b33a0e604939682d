from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel

from src.adapters.io.json_codec import (
    bounds_to_payloads,
    matrix_entries,
    region_to_payload,
    root_set_to_payload,
    spectrum_to_payload,
    write_report,
)
from src.adapters.plotting.figures import write_csv, write_svg
from src.algebra.qmat import QMatrix, max_entry_distance
from src.algebra.quat import Quaternion
from src.algebra.spectra import is_invertible, standard_eigenvalues
from src.core.schemas.payloads import BoundParams
from src.core.schemas.regions import RegionKind, RegionSpec
from src.core.schemas.reports import (
    BoundsReport,
    CompareReport,
    InclusionCheck,
    InvertibilityReport,
    OpferRow,
    PowerCheckReport,
    RegionReport,
    RootSetPayload,
    StabilityReport,
)
from src.localization.criteria import (
    invertibility_sufficient,
    stability_sufficient,
    stability_sufficient_real_diag,
)
from src.localization.regions import (
    THEOREM_TAGS,
    build_region,
    export_complex_discs,
    minimal_region,
)
from src.localization.sampling import sampled_inclusion
from src.monitoring.mlflow_utils import MLflowLogger
from src.polynomials.bounds import (
    all_bounds,
    opfer_comparison,
    power_eigen_residuals,
    rank_bounds,
    zero_bounds,
)
from src.polynomials.powers import (
    companion_power_structured,
    companion_square_closed_form,
    direct_power,
)
from src.polynomials.qpoly import QPolynomial
from src.polynomials.roots import roots

logger = logging.getLogger(__name__)

POWER_MATCH_TOL = 1e-12


@dataclass(frozen=True)
class OutputPaths:
    json: Optional[Path] = None
    svg: Optional[Path] = None
    csv: Optional[Path] = None


@dataclass(frozen=True)
class InclusionRequest:
    outer: RegionKind
    samples: int = 10_000
    seed: int = 0


class AnalysisPipeline:
    """One method per CLI verb; each run is timed and tracked."""

    def __init__(self, tracker: MLflowLogger, workers: Optional[int] = None) -> None:
        self._tracker = tracker
        self._workers = workers

    def _timed(self, name: str, start: float) -> None:
        latency_ms = (time.perf_counter() - start) * 1000
        self._tracker.log_metric(f"{name}_latency_ms", latency_ms)
        logger.debug("%s finished in %.2f ms", name, latency_ms)

    def _publish(self, report: BaseModel, outputs: OutputPaths) -> None:
        if outputs.json is not None:
            self._tracker.log_artifact(write_report(report, outputs.json))

    def regions(
        self,
        a: QMatrix,
        spec: RegionSpec,
        weight_family: Optional[Sequence[Sequence[float]]] = None,
        inclusion: Optional[InclusionRequest] = None,
        outputs: OutputPaths = OutputPaths(),
    ) -> RegionReport:
        with self._tracker.start_run(run_name="regions"):
            self._tracker.log_params(
                {"kind": spec.kind.value, "gamma": spec.gamma, "p": spec.p, "n": a.n}
            )
            start = time.perf_counter()
            if weight_family:
                region = minimal_region(a, spec, weight_family)
            else:
                region = build_region(a, spec)
            spectrum = standard_eigenvalues(a)
            contained = [region.contains(Quaternion.from_complex(z)) for z in spectrum.standard]
            check = None
            if inclusion is not None:
                outer = build_region(a, spec.model_copy(update={"kind": inclusion.outer}))
                found = sampled_inclusion(
                    region, outer, inclusion.seed, inclusion.samples, self._workers
                )
                check = InclusionCheck(
                    inner=spec.kind.value,
                    outer=inclusion.outer.value,
                    samples=found.samples,
                    seed=found.seed,
                    holds=found.holds,
                    witness=found.witness.as_list() if found.witness else None,
                )
                self._tracker.log_metric("inclusion_holds", 1 if found.holds else 0)
            discs = export_complex_discs(region)
            self._timed("regions", start)
            self._tracker.log_metric("region_parts", len(discs))
            params = spec.model_dump(mode="json")
            if weight_family:
                params["weight_family"] = [list(map(float, w)) for w in weight_family]
            report = RegionReport(
                method=spec.kind.value,
                theorem=THEOREM_TAGS[spec.kind],
                params=params,
                region=region_to_payload(region),
                discs=discs,
                spectrum=spectrum_to_payload(spectrum),
                eigenvalues_contained=contained,
                inclusion=check,
            )
            self._publish(report, outputs)
            if outputs.svg is not None:
                markers = [complex(z) for z in spectrum.standard]
                self._tracker.log_artifact(
                    write_svg(discs, markers, outputs.svg, title=spec.kind.value)
                )
            if outputs.csv is not None:
                self._tracker.log_artifact(write_csv(discs, outputs.csv))
        return report

    def bounds(
        self,
        p: QPolynomial,
        method: str,
        params: Optional[BoundParams] = None,
        outputs: OutputPaths = OutputPaths(),
    ) -> BoundsReport:
        with self._tracker.start_run(run_name="bounds"):
            self._tracker.log_params({"method": method, "degree": p.degree, "side": p.side.value})
            start = time.perf_counter()
            if method == "all":
                reports = all_bounds(p, self._workers)
            else:
                reports = [zero_bounds(p, method, params)]
            found = roots(p)
            self._timed("bounds", start)
            self._tracker.log_metric("bound_reports", len(reports))
            report = BoundsReport(
                side=p.side.value,
                degree=p.degree,
                reports=bounds_to_payloads(reports),
                ranking=rank_bounds(reports),
                root_moduli=found.moduli(),
            )
            self._publish(report, outputs)
        return report

    def roots(self, p: QPolynomial, outputs: OutputPaths = OutputPaths()) -> RootSetPayload:
        with self._tracker.start_run(run_name="roots"):
            self._tracker.log_params({"degree": p.degree, "side": p.side.value})
            start = time.perf_counter()
            found = roots(p)
            self._timed("roots", start)
            self._tracker.log_metric("root_count", len(found.isolated) + len(found.spherical))
            report = root_set_to_payload(p, found)
            self._publish(report, outputs)
        return report

    def stability(
        self, a: QMatrix, gamma: float, p: float, outputs: OutputPaths = OutputPaths()
    ) -> StabilityReport:
        with self._tracker.start_run(run_name="stability"):
            self._tracker.log_params({"gamma": gamma, "p": p, "n": a.n})
            start = time.perf_counter()
            spectrum = standard_eigenvalues(a)
            real_diag = (
                stability_sufficient_real_diag(a, gamma, p) if a.has_real_diagonal() else None
            )
            abscissa = float(np.max(spectrum.standard.real))
            report = StabilityReport(
                gamma=gamma,
                p=p,
                sufficient=stability_sufficient(a, gamma, p),
                real_diag_sufficient=real_diag,
                spectral_abscissa=abscissa,
                stable=abscissa < 0.0,
                spectrum=spectrum_to_payload(spectrum),
            )
            self._tracker.log_metrics(
                {"spectral_abscissa": abscissa, "sufficient": float(report.sufficient)}
            )
            self._timed("stability", start)
            self._publish(report, outputs)
        return report

    def invertibility(
        self, a: QMatrix, gamma: float, variant: str, outputs: OutputPaths = OutputPaths()
    ) -> InvertibilityReport:
        with self._tracker.start_run(run_name="invertibility"):
            self._tracker.log_params({"gamma": gamma, "variant": variant, "n": a.n})
            start = time.perf_counter()
            report = InvertibilityReport(
                gamma=gamma,
                variant=variant,
                sufficient=invertibility_sufficient(a, gamma, variant),
                invertible=is_invertible(a),
            )
            self._timed("invertibility", start)
            self._publish(report, outputs)
        return report

    def power(
        self, p: QPolynomial, t: int, check: bool = False, outputs: OutputPaths = OutputPaths()
    ) -> PowerCheckReport:
        with self._tracker.start_run(run_name="power"):
            self._tracker.log_params({"t": t, "check": check, "degree": p.degree})
            start = time.perf_counter()
            structured = companion_power_structured(p, t)
            report = PowerCheckReport(side=p.side.value, t=t, matrix=matrix_entries(structured))
            if check:
                delta = max_entry_distance(structured, direct_power(p, t))
                scale = max(1.0, float(np.max(structured.moduli())))
                closed = None
                if t == 2:
                    closed = max_entry_distance(structured, companion_square_closed_form(p))
                report = report.model_copy(
                    update={
                        "checked": True,
                        "structured_equals_direct": delta <= POWER_MATCH_TOL * scale,
                        "max_entry_delta": delta,
                        "closed_form_delta": closed,
                        "eigen_residuals": power_eigen_residuals(p, t),
                    }
                )
                self._tracker.log_metric("power_max_entry_delta", delta)
            self._timed("power", start)
            self._publish(report, outputs)
        return report

    def compare(
        self, polynomials: Sequence[Tuple[str, QPolynomial]], outputs: OutputPaths = OutputPaths()
    ) -> CompareReport:
        with self._tracker.start_run(run_name="compare"):
            self._tracker.log_params({"count": len(polynomials)})
            start = time.perf_counter()
            rows: List[OpferRow] = []
            for label, p in polynomials:
                result = opfer_comparison(p)
                rows.append(
                    OpferRow(
                        label=label,
                        alpha=result.alpha,
                        opfer_bound=result.opfer_bound,
                        alpha_le_bound=result.alpha_le_bound,
                        q0_modulus=result.q0_modulus,
                        premise_holds=result.premise_holds,
                    )
                )
            self._timed("compare", start)
            report = CompareReport(rows=rows)
            self._publish(report, outputs)
        return report
