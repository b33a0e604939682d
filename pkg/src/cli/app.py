from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence

from dotenv import load_dotenv
from pydantic import BaseModel, ValidationError

from src.adapters.io.json_codec import dump_json, error_report
from src.algebra.quat import Quaternion, format_quaternion
from src.core.errors import QuatlocError
from src.core.schemas.payloads import BoundParams
from src.core.schemas.regions import RegionKind, RegionSpec
from src.core.schemas.reports import (
    BoundsReport,
    CompareReport,
    InvertibilityReport,
    PowerCheckReport,
    RegionReport,
    RootSetPayload,
    StabilityReport,
)
from src.pipelines.analysis.analysis_pipeline import InclusionRequest, OutputPaths
from src.polynomials.bounds import BoundMethod
from src.services.analysis_service import AnalysisService, build_service_from_env

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN = 1


@dataclass
class Command:
    verb: str
    input: Optional[Path] = None
    polys: List[Path] = field(default_factory=list)
    method: Optional[str] = None
    gamma: float = 1.0
    p: float = 2.0
    t: Optional[int] = None
    weights: Optional[List[float]] = None
    weight_family: Optional[List[List[float]]] = None
    variant: Optional[str] = None
    compare_to: Optional[str] = None
    samples: int = 10_000
    seed: int = 0
    workers: Optional[int] = None
    check: bool = False
    json: Optional[Path] = None
    svg: Optional[Path] = None
    csv: Optional[Path] = None
    verbose: bool = False

    @property
    def outputs(self) -> OutputPaths:
        return OutputPaths(json=self.json, svg=self.svg, csv=self.csv)


def _gamma(text: str) -> float:
    value = _number(text)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"gamma must lie in [0, 1], got {text}")
    return value


def _number(text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed number: {text!r}") from None


def _holder_p(text: str) -> float:
    value = _number(text)
    if not 1.0 < value < float("inf"):
        raise argparse.ArgumentTypeError(f"p must satisfy 1 < p < inf, got {text}")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative_int(text: str) -> int:
    if text.strip() == "0":
        return 0
    return _positive_int(text)


def _weights(text: str) -> List[float]:
    values = [_number(part) for part in text.split(",") if part.strip()]
    if not values or any(not (v > 0.0) for v in values):
        raise argparse.ArgumentTypeError(f"weights must be positive numbers, got {text!r}")
    return values


def _weight_family(text: str) -> List[List[float]]:
    return [_weights(chunk) for chunk in text.split(";") if chunk.strip()]


def _add_outputs(sub: argparse.ArgumentParser, svg: bool = False) -> None:
    sub.add_argument("--json", type=Path, help="write the JSON report here")
    if svg:
        sub.add_argument("--svg", type=Path, help="write an SVG figure here")
        sub.add_argument("--csv", type=Path, help="write center/radius rows here")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quatloc",
        description="Eigenvalue localization for quaternion matrices and zero bounds for "
        "one-sided quaternion polynomials.",
    )
    parser.add_argument("--verbose", action="store_true", help="debug logging on stderr")
    verbs = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    regions = verbs.add_parser("regions", help="build an inclusion region for a matrix")
    regions.add_argument("--input", type=Path, required=True)
    regions.add_argument("--method", required=True, choices=[k.value for k in RegionKind])
    regions.add_argument("--gamma", type=_gamma, default=1.0)
    regions.add_argument("--p", type=_holder_p, default=2.0)
    regions.add_argument("--weights", type=_weights)
    regions.add_argument("--weight-family", type=_weight_family, dest="weight_family")
    regions.add_argument("--compare-to", choices=[k.value for k in RegionKind], dest="compare_to")
    regions.add_argument("--samples", type=_positive_int, default=10_000)
    regions.add_argument("--seed", type=_nonnegative_int, default=0)
    regions.add_argument("--workers", type=_positive_int)
    _add_outputs(regions, svg=True)

    bounds = verbs.add_parser("bounds", help="annulus bounds for the zeros of a polynomial")
    bounds.add_argument("--poly", type=Path, required=True, dest="polys", action="append")
    bounds.add_argument(
        "--method", required=True, choices=[m.value for m in BoundMethod] + ["all"]
    )
    bounds.add_argument("--gamma", type=_gamma, default=1.0)
    bounds.add_argument("-t", "--t", type=_positive_int, default=2, dest="t")
    bounds.add_argument("--weights", type=_weights)
    bounds.add_argument("--variant")
    bounds.add_argument("--workers", type=_positive_int)
    _add_outputs(bounds)

    roots = verbs.add_parser("roots", help="isolated zeros and spherical classes")
    roots.add_argument("--poly", type=Path, required=True, dest="polys", action="append")
    _add_outputs(roots)

    stability = verbs.add_parser("stability", help="sufficient stability condition")
    stability.add_argument("--input", type=Path, required=True)
    stability.add_argument("--gamma", type=_gamma, default=1.0)
    stability.add_argument("--p", type=_holder_p, default=2.0)
    _add_outputs(stability)

    invert = verbs.add_parser("invertibility", help="sufficient invertibility condition")
    invert.add_argument("--input", type=Path, required=True)
    invert.add_argument("--gamma", type=_gamma, default=1.0)
    invert.add_argument("--variant", choices=["ostrowski", "brauer"], default="ostrowski")
    _add_outputs(invert)

    power = verbs.add_parser("power", help="structured companion matrix powers")
    power.add_argument("--poly", type=Path, required=True, dest="polys", action="append")
    power.add_argument("-t", "--t", type=_positive_int, required=True, dest="t")
    power.add_argument("--check", action="store_true", help="compare against direct products")
    _add_outputs(power)

    compare = verbs.add_parser("compare", help="alpha against the sum-of-moduli bound")
    compare.add_argument("--poly", type=Path, required=True, dest="polys", action="append")
    _add_outputs(compare)
    return parser


def parse_args(argv: Optional[Sequence[str]] = None) -> Command:
    parser = build_parser()
    ns = parser.parse_args(argv)
    values = {k: v for k, v in vars(ns).items() if v is not None}
    cmd = Command(**values)
    if cmd.verb != "compare" and len(cmd.polys) > 1:
        parser.error(f"{cmd.verb} takes a single --poly")
    if cmd.verb == "bounds" and cmd.method == BoundMethod.POWER.value and (cmd.t or 2) < 2:
        parser.error("power bounds need t >= 2")
    for path in ([cmd.input] if cmd.input else []) + cmd.polys:
        if not path.is_file():
            parser.error(f"input file not found: {path}")
    return cmd


def _dispatch(service: AnalysisService, cmd: Command) -> BaseModel:
    outputs = cmd.outputs
    if cmd.verb == "regions":
        spec = RegionSpec(kind=cmd.method, gamma=cmd.gamma, p=cmd.p, weights=cmd.weights)
        inclusion = None
        if cmd.compare_to:
            inclusion = InclusionRequest(RegionKind(cmd.compare_to), cmd.samples, cmd.seed)
            print(f"seed={cmd.seed}", file=sys.stderr)
        return service.regions(cmd.input, spec, cmd.weight_family, inclusion, outputs)
    if cmd.verb == "bounds":
        params = BoundParams(
            gamma=cmd.gamma, t=max(cmd.t or 2, 2), weights=cmd.weights, variant=cmd.variant
        )
        return service.bounds(cmd.polys[0], cmd.method, params, outputs)
    if cmd.verb == "roots":
        return service.roots(cmd.polys[0], outputs)
    if cmd.verb == "stability":
        return service.stability(cmd.input, cmd.gamma, cmd.p, outputs)
    if cmd.verb == "invertibility":
        return service.invertibility(cmd.input, cmd.gamma, cmd.variant or "ostrowski", outputs)
    if cmd.verb == "power":
        return service.power(cmd.polys[0], cmd.t, cmd.check, outputs)
    return service.compare(cmd.polys, outputs)


def _fmt(value: Optional[float]) -> str:
    return "-" if value is None else f"{value:.4f}"


def render_table(report: BaseModel) -> str:
    """Four-decimal summary printed when the JSON report goes to a file."""
    lines: List[str] = []
    if isinstance(report, RegionReport):
        lines.append(f"{report.method} ({report.theorem})")
        for d in report.discs:
            size = d.radius if d.shape != "cassini" else d.bound
            center = f"{d.center[0]:.4f}{d.center[1]:+.4f}i"
            lines.append(f"  part {d.part}: {d.shape} {center}  {_fmt(size)}")
        for (re, im), inside in zip(report.spectrum.standard, report.eigenvalues_contained):
            lines.append(f"  eigenvalue {re:.4f}{im:+.4f}i  {'inside' if inside else 'outside'}")
        if report.inclusion is not None:
            lines.append(f"  inclusion in {report.inclusion.outer}: {report.inclusion.holds}")
    elif isinstance(report, BoundsReport):
        for rank, idx in enumerate(report.ranking):
            r = report.reports[idx]
            flag = " (flagged)" if r.lower_flagged else ""
            span = f"{_fmt(r.lower)} <= |z| <= {_fmt(r.upper)}"
            lines.append(f"{rank + 1:>3} {r.method:<10} {span}{flag} {r.params}")
    elif isinstance(report, RootSetPayload):
        for z, m in zip(report.isolated, report.isolated_moduli):
            lines.append(f"{format_quaternion(Quaternion.from_array(z))}  |z|={m:.4f}")
        for c in report.spherical:
            lines.append(f"[{c.re:.4f} + {c.imag_norm:.4f} u]  |z|={c.modulus:.4f}")
    elif isinstance(report, CompareReport):
        for row in report.rows:
            lines.append(
                f"{row.label}: alpha={row.alpha:.4f} bound={row.opfer_bound:.4f} "
                f"alpha<=bound={row.alpha_le_bound} |q0|>=1={row.premise_holds}"
            )
    elif isinstance(report, (StabilityReport, InvertibilityReport, PowerCheckReport)):
        for key, value in report.model_dump(exclude={"spectrum", "matrix"}).items():
            lines.append(f"{key}: {_fmt(value) if isinstance(value, float) else value}")
    return "\n".join(lines)


def run(cmd: Command, service: Optional[AnalysisService] = None) -> int:
    service = service or build_service_from_env(cmd.workers)
    try:
        report = _dispatch(service, cmd)
    except (QuatlocError, ValidationError) as exc:
        logger.debug("command failed", exc_info=True)
        sys.stdout.write(dump_json(error_report(exc)))
        return EXIT_DOMAIN
    if cmd.json is not None:
        print(render_table(report))
    else:
        sys.stdout.write(dump_json(report))
    return EXIT_OK


def configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    load_dotenv()
    cmd = parse_args(argv)
    configure_logging(cmd.verbose)
    return run(cmd)


if __name__ == "__main__":
    raise SystemExit(main())
