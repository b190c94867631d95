import glob
import json
import os
import random

import pytest

import inventory
from equilef import data_path
from equilef.complexes import CellComplex, CellMap, solve_chain_maps
from equilef.errors import NonCanonicalSubgroup, SchemaError, UnresolvedReference
from equilef.formats import complex_body, emit, group_body, load, map_body, parse, parse_text, write
from equilef.groups import FiniteGroup
from equilef.invariants import homological_lefschetz
from equilef.library import by_name

DATA = os.path.dirname(data_path("z2.group"))


@pytest.mark.parametrize("path", sorted(glob.glob(os.path.join(DATA, "*"))))
def test_bundled_files_round_trip(path):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    assert emit(parse(path)) == text


def test_kinds():
    assert isinstance(load(data_path("z2.group")), FiniteGroup)
    assert isinstance(load(data_path("z2_circle.complex")), CellComplex)
    assert isinstance(load(data_path("z2_circle_f0.map")), CellMap)
    suite = load(data_path("bundled.suite"))
    assert len(suite) == 2 and all(isinstance(f, CellMap) for f in suite)


def test_subgroup_names_become_labels():
    G = load(data_path("s3.group"))
    assert [c.label for c in G.subgroup_classes()] == ["e", "C2", "C3", "S3"]


def test_group_round_trip_through_text():
    for name in ("S3", "D4", "Q8", "A4"):
        G = by_name(name)
        doc = parse_text(emit(group_body(G)))
        assert doc.obj == G
        assert emit(parse_text(emit(doc))) == emit(doc)


def _write_complex(tmp_path, X, name="x.complex"):
    write(tmp_path / "g.group", group_body(X.group))
    write(tmp_path / name, complex_body(X, "g.group"))
    return tmp_path / name


def test_inventory_round_trips(tmp_path):
    rng = random.Random(0)
    for k, (_, X) in enumerate(inventory.complexes()):
        path = _write_complex(tmp_path, X, f"c{k}.complex")
        Y = load(path)
        assert [(c.dim, c.id) for c in Y.cells] == sorted((c.dim, c.id) for c in X.cells)
        f = rng.choice(solve_chain_maps(X, 2, 6, seed=k))
        write(tmp_path / f"m{k}.map", map_body(f, f"c{k}.complex", f"c{k}.complex"))
        doc = parse(tmp_path / f"m{k}.map")
        assert homological_lefschetz(doc.obj) == homological_lefschetz(f)
        assert emit(parse(tmp_path / f"m{k}.map")) == (tmp_path / f"m{k}.map").read_text()


def test_inline_documents():
    body = json.loads(open(data_path("z2_circle_f0.map")).read())
    body["domain"] = json.loads(open(data_path("z2_circle.complex")).read())
    body["domain"]["group"] = json.loads(open(data_path("z2.group")).read())
    doc = parse_text(json.dumps(body))
    assert str(homological_lefschetz(doc.obj)) == "-1*(H1_0) + 1*(H2_0)"
    assert emit(parse_text(emit(doc))) == emit(doc)


def test_canonicalization_on_load(tmp_path):
    write(tmp_path / "s3.group", json.loads(open(data_path("s3.group")).read()))
    messy = {
        "kind": "complex",
        "group": "s3.group",
        "cells": [
            {"id": "a", "dim": 1, "type": [0]},
            {"id": "v", "dim": 0, "type": [0, 3]},  # a non-representative conjugate of C2
        ],
        "differential": [{"from": "a", "to": "v", "terms": [{"coeff": 1, "rep": 3}, {"coeff": 1, "rep": 0}, {"coeff": 0, "rep": 2}]}],
    }
    (tmp_path / "m.complex").write_text(json.dumps(messy))
    doc = parse(tmp_path / "m.complex")
    cells = doc.body["cells"]
    assert [c["id"] for c in cells] == ["v", "a"]
    assert cells[0]["type"] == [0, 1]
    # both terms land in one coset after retyping, reps are coset minima
    terms = doc.body["differential"][0]["terms"]
    assert all(t["coeff"] for t in terms)
    (tmp_path / "c.complex").write_text(emit(doc))
    assert emit(parse(tmp_path / "c.complex")) == emit(doc)


def test_non_canonical_subgroup(tmp_path):
    write(tmp_path / "s3.group", json.loads(open(data_path("s3.group")).read()))
    for bad, suggestion in (([2, 0, 5], [0, 2, 5]), ([0, 2], [0, 2, 5]), ([0, 0, 1], [0, 1])):
        body = {"kind": "complex", "group": "s3.group", "cells": [{"id": "v", "dim": 0, "type": bad}], "differential": []}
        (tmp_path / "x.complex").write_text(json.dumps(body))
        with pytest.raises(NonCanonicalSubgroup) as info:
            parse(tmp_path / "x.complex")
        assert info.value.suggestion == suggestion


def test_unresolved_references(tmp_path):
    body = json.loads(open(data_path("z2_circle_f0.map")).read())
    body["domain"] = os.path.join(DATA, "z2_circle.complex")
    body["blocks"][0]["from"] = "nope"
    (tmp_path / "bad.map").write_text(json.dumps(body))
    with pytest.raises(UnresolvedReference):
        parse(tmp_path / "bad.map")
    (tmp_path / "lost.map").write_text(json.dumps({"kind": "map", "domain": "missing.complex", "blocks": []}))
    with pytest.raises(UnresolvedReference):
        parse(tmp_path / "lost.map")


@pytest.mark.parametrize(
    "text, path",
    [
        ('{"kind": "banana"}', "kind"),
        ('{"kind": "group", "table": "x"}', "table"),
        ('{"kind": "group", "table": [[0]], "extra": 1}', ""),
        ('{"kind": "complex", "group": {"kind": "group", "table": [[0]]}, "cells": [{"id": "v", "dim": -1, "type": [0]}]}', "cells/0/dim"),
        ('{"kind": "complex", "group": {"kind": "group", "table": [[0]]}, "cells": [{"id": "v", "dim": 0, "type": [0]}, {"id": "w", "dim": 1, "type": [0]}], "differential": [{"from": "w", "to": "v", "terms": [{"coeff": "1", "rep": 0}]}]}', "differential/0/terms/0/coeff"),
        ("[1, 2]", ""),
        ("{not json", ""),
    ],
)
def test_schema_errors(text, path):
    with pytest.raises(SchemaError) as info:
        parse_text(text)
    assert path in str(info.value)


def test_empty_complex_document():
    doc = parse_text('{"kind": "complex", "group": {"kind": "group", "table": [[0, 1], [1, 0]]}, "cells": [], "differential": []}')
    assert doc.obj.cells == ()
    assert emit(parse_text(emit(doc))) == emit(doc)
