"""End-to-end pipeline: datasets in, :class:`AnalysisReport` out."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .centroid import CentroidPoint, compare, centroid
from .core import normalize
from .datasets import GroupDataset
from .errors import DegenerateError, ShapeError, ValidationError
from .profiles import (
    Profile,
    ProfileDistribution,
    membership_distribution,
    possibilities,
    probabilities,
    pseudo_frequencies,
)
from .uncertainty import UncertaintyReport, uncertainty_report

REPORT_VERSION = "report-v1"


@dataclass(frozen=True)
class AnalysisOptions:
    normalizer: int | None = None  # Shannon normalizer; None means L**k
    epsilon: float = 1e-9  # centroid equality tolerance
    measures: bool = False  # scalar measures for the combined view


@dataclass(frozen=True)
class StageAnalysis:
    name: str
    counts: tuple[int, ...]
    grades: tuple[Fraction, ...]
    normalized: tuple[Fraction, ...]
    centroid: CentroidPoint


@dataclass(frozen=True)
class ProfileRow:
    profile: Profile
    membership: Fraction
    probability: Fraction
    possibility: Fraction


@dataclass(frozen=True)
class GroupAnalysis:
    name: str
    size: int
    stages: tuple[StageAnalysis, ...]
    profiles: tuple[ProfileRow, ...]
    uncertainty: UncertaintyReport
    normalizer: int


@dataclass(frozen=True)
class CombinedRow:
    profile: Profile
    memberships: tuple[Fraction, ...]
    frequency: Fraction
    probability: Fraction
    possibility: Fraction


@dataclass(frozen=True)
class CombinedAnalysis:
    groups: tuple[str, ...]
    rows: tuple[CombinedRow, ...]
    uncertainty: UncertaintyReport | None = None


@dataclass(frozen=True)
class StageVerdict:
    stage: str
    first: str
    second: str
    verdict: str
    rule: str


@dataclass(frozen=True)
class AnalysisReport:
    kind: str  # analyze | compare | combine
    labels: tuple[str, ...]
    groups: tuple[GroupAnalysis, ...]
    combined: CombinedAnalysis | None = None
    comparisons: tuple[StageVerdict, ...] = ()
    epsilon: float = 1e-9
    version: str = field(default=REPORT_VERSION)

    def group(self, name: str) -> GroupAnalysis:
        for g in self.groups:
            if g.name == name:
                return g
        raise KeyError(name)


def _membership(dataset: GroupDataset) -> ProfileDistribution:
    for stage in dataset.stage_sets():
        if stage.is_zero:
            raise DegenerateError(f"group {dataset.group_name!r}, stage {stage.stage_name!r}: all grades are zero")
    d = membership_distribution(dataset.stage_sets())
    if d.maximum() == 0:
        raise DegenerateError(f"group {dataset.group_name!r}: no well-ordered profile has nonzero membership")
    return d


def analyze_group(dataset: GroupDataset, options: AnalysisOptions = AnalysisOptions()) -> GroupAnalysis:
    d = _membership(dataset)
    p, r = probabilities(d), possibilities(d)
    normalizer = options.normalizer or d.size
    stages = []
    for stage, (_, counts) in zip(dataset.stage_sets(), dataset.stages):
        w = normalize(stage)
        stages.append(StageAnalysis(stage.stage_name, counts.counts, stage.grades, w.weights, centroid(w)))
    rows = tuple(
        ProfileRow(s, m, p[s], r[s]) for s, m in d.nonzero()
    )
    return GroupAnalysis(
        dataset.group_name,
        dataset.group_size,
        tuple(stages),
        rows,
        uncertainty_report(d, normalizer),
        normalizer,
    )


def analyze_command(dataset: GroupDataset, options: AnalysisOptions = AnalysisOptions()) -> AnalysisReport:
    return AnalysisReport("analyze", dataset.labels.names, (analyze_group(dataset, options),), epsilon=options.epsilon)


def _check_shapes(datasets: Sequence[GroupDataset]) -> None:
    if len(datasets) < 2:
        raise ValidationError(f"need at least 2 groups, got {len(datasets)}")
    first = datasets[0]
    for ds in datasets[1:]:
        if ds.k != first.k:
            raise ShapeError(
                f"group {ds.group_name!r} has {ds.k} stages, group {first.group_name!r} has {first.k}"
            )
        if ds.labels != first.labels:
            raise ShapeError(f"group {ds.group_name!r} uses a different label set")


def _combined(datasets: Sequence[GroupDataset], options: AnalysisOptions) -> CombinedAnalysis:
    ds = [_membership(x) for x in datasets]
    f = pseudo_frequencies(ds)
    p, r = probabilities(f), possibilities(f)
    rows = tuple(
        CombinedRow(s, tuple(d[s] for d in ds), w, p[s], r[s]) for s, w in f.nonzero()
    )
    measures = uncertainty_report(f, options.normalizer or f.size) if options.measures else None
    return CombinedAnalysis(tuple(x.group_name for x in datasets), rows, measures)


def stage_verdicts(groups: Sequence[GroupAnalysis], L: int, epsilon: float = 1e-9) -> tuple[StageVerdict, ...]:
    """Pairwise per-stage centroid comparisons, stage by stage; nothing is aggregated across stages."""
    out = []
    for a, b in itertools.combinations(groups, 2):
        for sa, sb in zip(a.stages, b.stages):
            outcome = compare(sa.centroid, sb.centroid, L, epsilon)
            out.append(StageVerdict(sa.name, a.name, b.name, outcome.verdict.value, outcome.rule.value))
    return tuple(out)


def compare_command(datasets: Sequence[GroupDataset], options: AnalysisOptions = AnalysisOptions()) -> AnalysisReport:
    _check_shapes(datasets)
    groups = tuple(analyze_group(ds, options) for ds in datasets)
    L = len(datasets[0].labels)
    return AnalysisReport(
        "compare",
        datasets[0].labels.names,
        groups,
        _combined(datasets, options),
        stage_verdicts(groups, L, options.epsilon),
        epsilon=options.epsilon,
    )


def combine_command(datasets: Sequence[GroupDataset], options: AnalysisOptions = AnalysisOptions()) -> AnalysisReport:
    """Pseudo-frequencies and combined p/r; scalar measures only with ``options.measures``."""
    _check_shapes(datasets)
    groups = tuple(analyze_group(ds, options) for ds in datasets)
    return AnalysisReport(
        "combine", datasets[0].labels.names, groups, _combined(datasets, options), epsilon=options.epsilon
    )
