from __future__ import annotations

import codecs
import json
from pathlib import Path

import pytest
from pydantic import ValidationError

from src.adapters.io.json_codec import (
    dump_json,
    error_report,
    load_matrix,
    load_polynomial,
    matrix_to_payload,
    polynomial_to_payload,
    region_from_payload,
    region_to_payload,
    write_report,
)
from src.algebra.quat import Quaternion
from src.core.errors import PreconditionError
from src.localization.regions import (
    Ball,
    Cassini,
    RegionIntersection,
    RegionUnion,
)


def test_matrix_files_load(ree1):
    assert ree1.n == 3
    assert ree1[1, 0] == Quaternion(5.0, 0.0, 2.0**0.5, 3.0)
    again = matrix_to_payload(ree1)
    assert again.n == 3
    assert again.entries[0][0] == [3.0, 0.0, 0.0, 0.0]


def test_polynomial_files_load(e1_right):
    assert e1_right.side.value == "right"
    assert e1_right.degree == 6
    payload = polynomial_to_payload(e1_right)
    assert payload.coeffs[-1] == [1.0, 0.0, 0.0, 0.0]


def test_bad_files_fail_validation(tmp_path: Path):
    ragged = tmp_path / "ragged.json"
    ragged.write_text(json.dumps({"n": 2, "entries": [[[1, 0, 0, 0]]]}), encoding="utf-8")
    with pytest.raises(ValidationError):
        load_matrix(ragged)
    not_monic = tmp_path / "not_monic.json"
    not_monic.write_text(
        json.dumps({"side": "left", "coeffs": [[1, 0, 0, 0], [2, 0, 0, 0]]}), encoding="utf-8"
    )
    with pytest.raises(ValidationError):
        load_polynomial(not_monic)
    short = tmp_path / "short.json"
    short.write_text(json.dumps({"n": 1, "entries": [[[1, 0, 0]]]}), encoding="utf-8")
    with pytest.raises(ValidationError):
        load_matrix(short)


def test_bom_and_utf16_inputs_are_decoded(tmp_path: Path):
    text = '{"side": "left", "coeffs": [[2, 0, 0, 0], [1, 0, 0, 0]]}'
    for name, data in (
        ("bom.json", codecs.BOM_UTF8 + text.encode("utf-8")),
        ("wide.json", text.encode("utf-16")),
    ):
        path = tmp_path / name
        path.write_bytes(data)
        assert load_polynomial(path).coefficient(0) == Quaternion(2.0)


def test_region_payload_keeps_structure():
    region = RegionUnion(
        (
            Ball(Quaternion(1.0, 2.0), 0.5),
            RegionIntersection(
                (Cassini(Quaternion(), Quaternion(0.0, 0.0, 1.0), 2.0), Ball(Quaternion(), 1.0))
            ),
        )
    )
    payload = region_to_payload(region)
    assert payload.kind == "union"
    assert payload.parts[1].kind == "intersection"
    assert region_from_payload(payload) == region


def test_error_report_carries_code_and_details():
    report = error_report(PreconditionError("diagonal entry (0, 0) is not real", {"index": 0}))
    assert report.error.code == "precondition_error"
    assert report.error.type == "PreconditionError"
    assert report.error.details == {"index": 0}
    generic = error_report(ValueError("boom"))
    assert generic.error.code == "invalid_input"


def test_reports_are_written_with_trailing_newline(tmp_path: Path):
    report = error_report(PreconditionError("x"))
    path = write_report(report, tmp_path / "nested" / "out.json")
    assert path.read_text(encoding="utf-8") == dump_json(report)
    assert dump_json(report).endswith("}\n")
