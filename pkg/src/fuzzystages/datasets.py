"""Group datasets and the two input formats.

Structured (JSON)::

    {"groupName": "engineering", "groupSize": 35,
     "labels": ["a", "b", "c", "d", "e"],            # optional
     "stages": [{"name": "Solution", "counts": {"c": 15, "d": 12, "e": 8}}, ...]}

Labels missing from ``counts`` count as 0. Tabular (CSV/TSV) has one row per
entity and stage with columns ``entity,stage,label`` and an optional ``group``
column; counts are tallied from the rows and the group size is the number of
distinct entities.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Sequence

from .core import DEFAULT_LABELS, FuzzyStageSet, LabelSet, StageCounts, counts_from_labels, stage_fuzzy_set
from .errors import ValidationError

STRUCTURED = "structured"
TABULAR = "tabular"


@lru_cache(maxsize=None)
def stage_presets() -> dict[str, tuple[str, ...]]:
    raw = json.loads(resources.files(__package__).joinpath("presets.json").read_text("utf-8"))
    return {key: tuple(names) for key, names in raw.items()}


DEFAULT_PRESET = "mm"


def resolve_stage_names(value: str | Sequence[str] | None) -> tuple[str, ...] | None:
    """A preset key (``"mm"``) or comma separated names; ``None`` passes through."""
    if value is None:
        return None
    if isinstance(value, str):
        presets = stage_presets()
        if value in presets:
            return presets[value]
        names = tuple(s.strip() for s in value.split(","))
    else:
        names = tuple(value)
    if any(not n for n in names):
        raise ValidationError(f"empty stage name in {value!r}")
    return names


def default_stage_name(position: int) -> str:
    preset = stage_presets()[DEFAULT_PRESET]
    return preset[position] if position < len(preset) else f"S{position + 1}"


@dataclass(frozen=True)
class GroupDataset:
    group_name: str
    group_size: int
    stages: tuple[tuple[str, StageCounts], ...]
    labels: LabelSet = DEFAULT_LABELS

    def __post_init__(self):
        stages = tuple((str(name), counts) for name, counts in self.stages)
        object.__setattr__(self, "stages", stages)
        if len(stages) < 2:
            raise ValidationError(f"group {self.group_name!r}: need at least 2 stages, got {len(stages)}")
        for name, counts in stages:
            if counts.group_size != self.group_size:
                raise ValidationError(
                    f"stage {name!r}: group size {counts.group_size} differs from {self.group_size}"
                )
            if len(counts.counts) != len(self.labels):
                raise ValidationError(f"stage {name!r}: {len(counts.counts)} counts for {len(self.labels)} labels")
            counts.check_partition(name)

    @classmethod
    def from_counts(cls, name: str, n: int, stages: Sequence[tuple[str, Sequence[int]]], labels=DEFAULT_LABELS):
        return cls(name, n, tuple((s, StageCounts(n, tuple(c))) for s, c in stages), labels)

    @property
    def stage_names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.stages)

    @property
    def k(self) -> int:
        return len(self.stages)

    def stage_sets(self) -> list[FuzzyStageSet]:
        return [stage_fuzzy_set(counts, name, self.labels) for name, counts in self.stages]

    def renamed(self, stage_names: Sequence[str]) -> "GroupDataset":
        if len(stage_names) != self.k:
            raise ValidationError(
                f"group {self.group_name!r}: {len(stage_names)} stage names for {self.k} stages"
            )
        return GroupDataset(
            self.group_name, self.group_size, tuple(zip(stage_names, (c for _, c in self.stages))), self.labels
        )


def _structured(text: str, name: str | None, labels: LabelSet | None) -> GroupDataset:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed structured group file: {exc}") from None
    if not isinstance(doc, dict):
        raise ValidationError("malformed structured group file: top level must be an object")
    if "labels" in doc:
        labels = LabelSet(tuple(doc["labels"]))
    labels = labels or DEFAULT_LABELS
    n = doc.get("groupSize")
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValidationError("malformed structured group file: groupSize must be an integer")
    raw_stages = doc.get("stages")
    if not isinstance(raw_stages, list):
        raise ValidationError("malformed structured group file: stages must be a list")
    stages = []
    for pos, entry in enumerate(raw_stages):
        if not isinstance(entry, dict) or not isinstance(entry.get("counts"), dict):
            raise ValidationError(f"malformed structured group file: stage #{pos + 1} needs a counts object")
        stage_name = entry.get("name") or default_stage_name(pos)
        tally = [0] * len(labels)
        for label, count in entry["counts"].items():
            if not isinstance(count, int) or isinstance(count, bool):
                raise ValidationError(f"stage {stage_name!r}: count for {label!r} is not an integer")
            tally[labels.index(label)] = count
        stages.append((stage_name, StageCounts(n, tuple(tally))))
    group_name = doc.get("groupName") or name or "group"
    return GroupDataset(str(group_name), n, tuple(stages), labels)


def _tabular(text: str, name: str | None, labels: LabelSet | None, stage_order: Sequence[str] | None) -> GroupDataset:
    labels = labels or DEFAULT_LABELS
    first = text.splitlines()[0] if text.strip() else ""
    reader = csv.DictReader(io.StringIO(text), delimiter="\t" if "\t" in first else ",")
    fields = {f.strip().lower(): f for f in (reader.fieldnames or [])}
    missing = {"entity", "stage", "label"} - fields.keys()
    if missing:
        raise ValidationError(f"malformed tabular group file: missing columns {sorted(missing)}")
    assigned: dict[str, dict[str, str]] = {}
    entities: dict[str, None] = {}
    groups = set()
    for lineno, row in enumerate(reader, start=2):
        entity = (row[fields["entity"]] or "").strip()
        stage = (row[fields["stage"]] or "").strip()
        label = (row[fields["label"]] or "").strip()
        if not entity or not stage or not label:
            raise ValidationError(f"malformed tabular group file: empty field on line {lineno}")
        labels.index(label)
        if "group" in fields:
            groups.add((row[fields["group"]] or "").strip())
        per_stage = assigned.setdefault(stage, {})
        if entity in per_stage:
            raise ValidationError(f"stage {stage!r}: entity {entity!r} has more than one label")
        per_stage[entity] = label
        entities[entity] = None
    if len(groups) > 1:
        raise ValidationError(f"tabular group file mixes groups {sorted(groups)}")
    order = list(assigned)
    if stage_order and set(order) <= set(stage_order):
        order = [s for s in stage_order if s in assigned]
    n = len(entities)
    stages = tuple(
        (stage, StageCounts(n, counts_from_labels(assigned[stage].values(), labels))) for stage in order
    )
    group_name = (groups.pop() if groups else None) or name or "group"
    return GroupDataset(group_name, n, stages, labels)


def parse_group_file(
    data: bytes | str,
    fmt: str = STRUCTURED,
    *,
    name: str | None = None,
    labels: LabelSet | None = None,
    stage_names: str | Sequence[str] | None = None,
) -> GroupDataset:
    """Parse and validate one group.

    ``stage_names`` (a preset key or names) renames stages positionally; for
    tabular input whose stage ids are all among the names it fixes the order
    instead.
    """
    text = data.decode("utf-8-sig") if isinstance(data, bytes) else data
    names = resolve_stage_names(stage_names)
    if fmt == STRUCTURED:
        ds = _structured(text, name, labels)
    elif fmt == TABULAR:
        ds = _tabular(text, name, labels, names)
        if names and set(ds.stage_names) <= set(names):
            return ds
    else:
        raise ValidationError(f"unknown input format {fmt!r}")
    return ds.renamed(names) if names else ds


def guess_format(path: str | Path) -> str:
    return TABULAR if Path(path).suffix.lower() in {".csv", ".tsv", ".txt"} else STRUCTURED


def load_group_file(path: str | Path, fmt: str | None = None, **kwargs) -> GroupDataset:
    path = Path(path)
    return parse_group_file(path.read_bytes(), fmt or guess_format(path), name=kwargs.pop("name", path.stem), **kwargs)


def dataset_to_json(ds: GroupDataset) -> str:
    doc = {
        "groupName": ds.group_name,
        "groupSize": ds.group_size,
        "labels": list(ds.labels.names),
        "stages": [
            {"name": name, "counts": dict(zip(ds.labels.names, counts.counts))} for name, counts in ds.stages
        ],
    }
    return json.dumps(doc, indent=2) + "\n"
