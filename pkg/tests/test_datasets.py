import json
import random
from pathlib import Path

import pytest

from fuzzystages import GroupDataset, LabelSet, ValidationError, load_group_file, parse_group_file
from fuzzystages.classroom import ENGINEERING
from fuzzystages.datasets import dataset_to_json, resolve_stage_names, stage_presets
from fuzzystages.errors import UnknownLabelError

DATA = Path(__file__).parent.parent / "data"


def structured(n=35, stages=((0, 0, 15, 12, 8), (0, 0, 20, 11, 4), (12, 12, 11, 0, 0)), **extra):
    doc = {
        "groupName": "engineering",
        "groupSize": n,
        "stages": [{"name": f"S{i + 1}", "counts": dict(zip("abcde", c))} for i, c in enumerate(stages)],
    }
    doc.update(extra)
    return json.dumps(doc).encode()


def tabular_rows(ds: GroupDataset, seed=0):
    rng = random.Random(seed)
    ids = [f"id{rng.randrange(10**6):06d}-{i}" for i in range(ds.group_size)]
    rows = []
    for name, counts in ds.stages:
        labels = [lab for lab, c in zip(ds.labels.names, counts.counts) for _ in range(c)]
        rng.shuffle(labels)
        rows += [(e, name, lab) for e, lab in zip(ids, labels)]
    return rows


def to_csv(rows, sep=","):
    return "\n".join([sep.join(("entity", "stage", "label"))] + [sep.join(r) for r in rows]) + "\n"


def test_structured_group_one():
    ds = parse_group_file(structured())
    assert ds.group_name == "engineering" and ds.group_size == 35
    assert ds.stages[0][1].counts == (0, 0, 15, 12, 8)
    assert ds.stage_names == ("S1", "S2", "S3")


def test_structured_missing_labels_count_zero():
    doc = {"groupSize": 4, "stages": [{"counts": {"c": 4}}, {"counts": {"a": 1, "b": 3}}]}
    ds = parse_group_file(json.dumps(doc), name="tiny")
    assert ds.group_name == "tiny"
    assert ds.stages[1][1].counts == (1, 3, 0, 0, 0)
    assert ds.stage_names == stage_presets()["mm"][:2]  # default preset names


def test_structured_custom_labels():
    doc = {"groupSize": 2, "labels": ["lo", "hi"], "stages": [{"counts": {"hi": 2}}, {"counts": {"lo": 2}}]}
    ds = parse_group_file(json.dumps(doc))
    assert ds.labels == LabelSet(("lo", "hi"))


@pytest.mark.parametrize(
    "data, match",
    [
        (structured(stages=((0, 0, 15, 12, 7), (0, 0, 20, 11, 4))), "S1.*34.*35"),
        (b"{not json", "malformed"),
        (b"[]", "malformed"),
        (json.dumps({"groupSize": "35", "stages": []}).encode(), "groupSize"),
        (structured(stages=((0, 0, 15, 12, 8),)), "at least 2 stages"),
    ],
)
def test_structured_errors(data, match):
    with pytest.raises(ValidationError, match=match):
        parse_group_file(data)


def test_structured_unknown_label():
    doc = {"groupSize": 1, "stages": [{"counts": {"z": 1}}, {"counts": {"a": 1}}]}
    with pytest.raises(UnknownLabelError):
        parse_group_file(json.dumps(doc))


def test_tabular_aggregates_to_same_counts():
    ds = parse_group_file(to_csv(tabular_rows(ENGINEERING)), "tabular", name="engineering")
    assert ds == ENGINEERING


def test_tabular_tab_separated_with_group_column():
    rows = tabular_rows(ENGINEERING)
    text = "\n".join(["group\tentity\tstage\tlabel"] + ["engineering\t" + "\t".join(r) for r in rows])
    assert parse_group_file(text, "tabular") == ENGINEERING


def test_tabular_invariant_under_relabeling_entities():
    a = parse_group_file(to_csv(tabular_rows(ENGINEERING, seed=1)), "tabular", name="g")
    b = parse_group_file(to_csv(tabular_rows(ENGINEERING, seed=2)), "tabular", name="g")
    assert a == b


def test_tabular_missing_entity_fails_partition():
    rows = tabular_rows(ENGINEERING)
    rows.remove(next(r for r in rows if r[1] == "Solution"))
    with pytest.raises(ValidationError, match="Solution"):
        parse_group_file(to_csv(rows), "tabular")


def test_tabular_errors():
    with pytest.raises(ValidationError, match="missing columns"):
        parse_group_file("who,when,what\n1,2,3\n", "tabular")
    with pytest.raises(ValidationError, match="more than one label"):
        parse_group_file(to_csv([("x", "S1", "a"), ("x", "S1", "b"), ("x", "S2", "a")]), "tabular")
    with pytest.raises(UnknownLabelError):
        parse_group_file(to_csv([("x", "S1", "q"), ("x", "S2", "a")]), "tabular")
    with pytest.raises(ValidationError, match="at least 2 stages"):
        parse_group_file(to_csv([("x", "S1", "a")]), "tabular")


def test_tabular_stage_order_from_names():
    rows = [("x", "3", "a"), ("x", "1", "c"), ("x", "2", "b")]
    ds = parse_group_file(to_csv(rows), "tabular", stage_names="1,2,3")
    assert ds.stage_names == ("1", "2", "3")
    assert [c.counts for _, c in ds.stages] == [(0, 0, 1, 0, 0), (0, 1, 0, 0, 0), (1, 0, 0, 0, 0)]


def test_stage_names_override():
    ds = parse_group_file(structured(), stage_names="mm")
    assert ds.stage_names == stage_presets()["mm"]
    assert parse_group_file(structured(), stage_names="x, y, z").stage_names == ("x", "y", "z")
    with pytest.raises(ValidationError):
        parse_group_file(structured(), stage_names="x,y")
    assert resolve_stage_names(None) is None


def test_round_trip_through_json():
    assert parse_group_file(dataset_to_json(ENGINEERING)) == ENGINEERING


def test_shipped_data_files():
    assert load_group_file(DATA / "engineering.json") == ENGINEERING
    assert load_group_file(DATA / "engineering_entities.csv", name="engineering") == ENGINEERING
