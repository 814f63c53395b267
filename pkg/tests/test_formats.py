import json
import random

import pytest

from crosspath.errors import GridFormatError, SchemaViolation
from crosspath.formats import (
    emit_grid,
    parse_grid,
    plan_from_record,
    plan_to_record,
    plans_from_record,
    plans_to_record,
)
from crosspath.grid import EscalierParams, configuration, gen_escalier, normalize
from crosspath.oracle import enumerate_witnesses
from crosspath.stitcher import stitch_all_components, stitch_recursive

from conftest import method_one_plan, method_two_plan, random_cells, random_configs, single_cell_plan


def test_parse_examples():
    assert parse_grid("##") == configuration({(0, 0), (1, 0)})
    assert parse_grid("#.\n.#") == configuration({(0, 1), (1, 0)})
    assert parse_grid("#\n\n") == configuration({(0, 0)})
    assert parse_grid("") == frozenset()


def test_bad_character_position():
    with pytest.raises(GridFormatError) as info:
        parse_grid("##\n#x#\n")
    assert (info.value.line, info.value.column) == (2, 2)
    assert info.value.code == "BAD_CHARACTER"


def test_emit():
    assert emit_grid(configuration({(5, 5), (6, 4)})) == "#.\n.#\n"
    assert emit_grid(frozenset()) == ""
    assert emit_grid(gen_escalier(EscalierParams.palier(1, 2, 1))) == "#...\n.##.\n...#\n"


def test_grid_round_trip():
    rng = random.Random(4)
    for _ in range(200):
        cells = random_cells(rng, rng.randint(0, 30), 9) if rng.random() < 0.9 else frozenset()
        assert parse_grid(emit_grid(cells)) == normalize(cells)


def _corpus():
    yield single_cell_plan()
    yield method_one_plan()
    yield method_two_plan()
    for cells in random_configs(30, 20, seed=6):
        yield stitch_recursive(cells)
    yield from enumerate_witnesses(gen_escalier(EscalierParams.simple(3)), False, limit=20)


def test_record_round_trip_and_stability():
    for plan in _corpus():
        text = plan_to_record(plan)
        assert plan_from_record(text) == plan
        assert plan_to_record(plan_from_record(text)) == text


def test_single_cell_record():
    doc = json.loads(plan_to_record(single_cell_plan()))
    assert list(doc) == ["version", "closed", "moves"]
    assert doc["version"] == 1 and doc["closed"] is True and len(doc["moves"]) == 4
    assert doc["moves"][0] == {"front": {"cell": [0, 0], "kind": "lower", "entry": [0, 0]}}
    assert doc["moves"][1] == {"back": {"from": [1, 1], "to": [1, 0]}}


def test_multi_plan_document():
    plans = stitch_all_components(configuration({(0, 0), (1, 1), (3, 3)}))
    assert plans_from_record(plans_to_record(plans)) == plans
    assert plans_from_record(plan_to_record(plans[0])) == plans[:1]


@pytest.mark.parametrize("doc, path", [
    ({"version": 2, "closed": True, "moves": []}, "$.version"),
    ({"version": 1, "moves": []}, "$.closed"),
    ({"version": 1, "closed": "yes", "moves": []}, "$.closed"),
    ({"version": 1, "closed": True, "moves": {}}, "$.moves"),
    ({"version": 1, "closed": True, "moves": [], "extra": 0}, "$.extra"),
    ({"version": 1, "closed": True, "moves": [{"hop": {}}]}, "$.moves[0].hop"),
    ({"version": 1, "closed": True, "moves": [{"front": {"cell": [0], "kind": "lower", "entry": [0, 0]}}]},
     "$.moves[0].front.cell"),
    ({"version": 1, "closed": True, "moves": [{"front": {"cell": [0, 0], "kind": "left", "entry": [0, 0]}}]},
     "$.moves[0].front.kind"),
    ({"version": 1, "closed": True, "moves": [{"front": {"cell": [0, 0], "kind": "lower", "entry": [0, 1]}}]},
     "$.moves[0].front.entry"),
    ({"version": 1, "closed": True, "moves": [{"back": {"from": [0, 0]}}]}, "$.moves[0].back.to"),
    ({"version": 1, "plans": [{"version": 1, "closed": True}]}, "$.plans[0].moves"),
    ([], "$"),
])
def test_schema_violations(doc, path):
    with pytest.raises(SchemaViolation) as info:
        plans_from_record(json.dumps(doc))
    assert info.value.path == path
    assert info.value.code == "SCHEMA_VIOLATION"


def test_not_json():
    with pytest.raises(SchemaViolation):
        plan_from_record("{nope")
