from __future__ import annotations

import json
from pathlib import Path

import pytest

from coring_lab import cli
from coring_lab.instances import bundled_names, read_instance_text
from coring_lab.tasks import TASKS

DOCS = Path(__file__).resolve().parent.parent / "docs"
TYPES = {"object": dict, "array": list, "string": str, "integer": int, "boolean": bool}


def conforms(value, schema, path="") -> list[str]:
    """Small structural check for the schema keywords used in docs/."""
    errs = []
    if "oneOf" in schema:
        if sum(not conforms(value, s) for s in schema["oneOf"]) != 1:
            errs.append(f"{path}: oneOf")
        return errs
    if "const" in schema and value != schema["const"]:
        errs.append(f"{path}: expected {schema['const']!r}")
    if "enum" in schema and value not in schema["enum"]:
        errs.append(f"{path}: {value!r} not in enum")
    t = schema.get("type")
    if t and not isinstance(value, TYPES[t]):
        return errs + [f"{path}: not {t}"]
    if isinstance(value, dict):
        errs += [f"{path}: missing {k}" for k in schema.get("required", []) if k not in value]
        props = schema.get("properties", {})
        for k, v in value.items():
            sub = props.get(k, schema.get("additionalProperties"))
            if isinstance(sub, dict):
                errs += conforms(v, sub, f"{path}/{k}")
    if isinstance(value, list) and "items" in schema:
        for i, v in enumerate(value):
            errs += conforms(v, schema["items"], f"{path}/{i}")
    return errs


def load(name):
    return json.loads((DOCS / name).read_text())


def test_task_enum_matches_vocabulary():
    schema = load("instance.schema.json")
    assert tuple(schema["properties"]["tasks"]["items"]["properties"]["task"]["enum"]) == TASKS


@pytest.mark.parametrize("name", bundled_names())
def test_bundled_files_and_reports_conform(name, tmp_path):
    doc = json.loads(read_instance_text(name)[0])
    assert conforms(doc, load("instance.schema.json")) == []
    out = tmp_path / "r.json"
    cli.main(["run", name, "--json", str(out), "--quiet"])
    assert conforms(json.loads(out.read_text()), load("report.schema.json")) == []


def test_checker_rejects_bad_documents():
    schema = load("instance.schema.json")
    assert conforms({"tasks": [{"task": "frobnicate", "construction": "C"}]}, schema)
    assert conforms({"constructions": {"C": {}}}, schema)
