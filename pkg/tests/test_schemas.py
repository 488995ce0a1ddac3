"""Los esquemas versionados en schemas/ coinciden con los modelos de salida."""

import json
from pathlib import Path

import jsonschema
import pytest

from thrackles import exports
from thrackles.models.records import (
    EhrhartRecord,
    GroebnerRecord,
    MatroidRecord,
    SummaryRecord,
    ThrackleRecord,
    TriangulationRecord,
)
from thrackles.services import (
    groebner_service,
    lattice_service,
    matroid_service,
    thrackle_service,
    triangulation_service,
)

SCHEMAS = Path(__file__).resolve().parent.parent / "schemas"

CASES = [
    ("thrackle.schema.json", ThrackleRecord),
    ("triangulation.schema.json", TriangulationRecord),
    ("summary.schema.json", SummaryRecord),
    ("groebner.schema.json", GroebnerRecord),
    ("ehrhart.schema.json", EhrhartRecord),
    ("matroid_report.schema.json", MatroidRecord),
]


def _load(name):
    return json.loads((SCHEMAS / name).read_text(encoding="utf-8"))


@pytest.mark.parametrize("name, model", CASES)
def test_schema_matches_model(name, model):
    shipped = _load(name)
    generated = model.model_json_schema()
    assert set(shipped["properties"]) == set(generated["properties"])
    assert set(shipped["required"]) == set(generated.get("required", []))


def _sample_outputs():
    h = next(thrackle_service.enumerate_spanning_thrackles(2, 3))
    t = triangulation_service.build_triangulation(2, 5)
    poly = lattice_service.ehrhart_fit(2, 5)
    m = matroid_service.uniform_bases(2, 4)
    return {
        "thrackle.schema.json": exports.thrackle_record(h),
        "triangulation.schema.json": exports.triangulation_record(t, triangulation_service.simplex_volumes(t)),
        "summary.schema.json": triangulation_service.summarize(2, 5, samples=5),
        "groebner.schema.json": exports.groebner_record(2, 5, groebner_service.generate_cg(2, 5), True),
        "ehrhart.schema.json": exports.ehrhart_record(poly, [(0, 1), (1, 6)]),
        "matroid_report.schema.json": exports.matroid_record(m, matroid_service.matroid_reports(m)),
    }


def test_outputs_use_only_declared_keys():
    for name, record in _sample_outputs().items():
        data = json.loads(record.model_dump_json())
        schema = _load(name)
        assert set(data) <= set(schema["properties"]), name
        assert set(schema["required"]) <= set(data), name


@pytest.mark.parametrize("name", [name for name, _ in CASES])
def test_outputs_validate_against_schema(name):
    data = json.loads(_sample_outputs()[name].model_dump_json())
    jsonschema.validate(instance=data, schema=_load(name))


def test_schema_rejects_wrong_types_and_shapes():
    schema = _load("thrackle.schema.json")
    good = {"s": 2, "t": 2, "edges": [[1, 3], [1, 4], [2, 4]], "breakpoints": [4]}
    jsonschema.validate(instance=good, schema=schema)
    for bad in (
        {**good, "s": "2"},
        {**good, "edges": [[1, 3, 4]]},
        {**good, "extra": 1},
        {k: v for k, v in good.items() if k != "breakpoints"},
    ):
        with pytest.raises(jsonschema.ValidationError):
            jsonschema.validate(instance=bad, schema=schema)


def test_schemas_are_valid_2020_12():
    for name, _ in CASES:
        jsonschema.Draft202012Validator.check_schema(_load(name))
