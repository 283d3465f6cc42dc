"""Linguistic labels, the count-to-grade quantizer and per-stage fuzzy sets.

All grades and weights are :class:`fractions.Fraction` values. Floats are
only produced at report time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Sequence

from .errors import DegenerateError, InvalidCountError, UnknownLabelError, ValidationError

GRADE_LEVELS: tuple[Fraction, ...] = tuple(Fraction(i, 4) for i in range(5))
DEFAULT_LABEL_NAMES: tuple[str, ...] = ("a", "b", "c", "d", "e")


def as_fraction(value) -> Fraction:
    """Coerce ``value`` to a Fraction.

    Floats go through their shortest repr, so ``0.1`` becomes ``1/10`` rather
    than the nearest binary fraction.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not weights")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


@dataclass(frozen=True, order=True)
class LinguisticLabel:
    index: int
    name: str = field(compare=False)


@dataclass(frozen=True)
class LabelSet:
    """An ordered set of labels, lowest degree of success first."""

    names: tuple[str, ...] = DEFAULT_LABEL_NAMES

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(names) < 2:
            raise ValidationError("a label set needs at least 2 labels")
        if any(not isinstance(n, str) or not n for n in names):
            raise ValidationError("label names must be non-empty strings")
        if len(set(names)) != len(names):
            raise ValidationError(f"duplicate label names in {names}")

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[LinguisticLabel]:
        return (LinguisticLabel(i, n) for i, n in enumerate(self.names))

    def __getitem__(self, index: int) -> LinguisticLabel:
        return LinguisticLabel(index, self.names[index])

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownLabelError(f"unknown label {name!r}; expected one of {list(self.names)}") from None


DEFAULT_LABELS = LabelSet()


def grade_from_count(count: int, n: int) -> Fraction:
    """Quantize the number of entities carrying a label into a membership grade.

    The grade is ``j/4`` where ``j`` is the band ``(j n/5, (j+1) n/5]`` that
    holds ``count`` (the lowest band is closed at 0). Only integer comparisons
    are used, so group sizes not divisible by 5 are handled exactly.
    """
    if n < 1:
        raise InvalidCountError(f"group size must be positive, got {n}")
    if count < 0 or count > n:
        raise InvalidCountError(f"count {count} outside [0, {n}]")
    band = -(-5 * count // n)  # ceil(5 count / n)
    return GRADE_LEVELS[max(band - 1, 0)]


@dataclass(frozen=True)
class StageCounts:
    """How many of ``group_size`` entities received each label at one stage."""

    group_size: int
    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(self.counts))
        if not isinstance(self.group_size, int) or self.group_size < 1:
            raise InvalidCountError(f"group size must be a positive integer, got {self.group_size!r}")
        for c in self.counts:
            if not isinstance(c, int) or isinstance(c, bool) or c < 0:
                raise InvalidCountError(f"counts must be nonnegative integers, got {c!r}")
            if c > self.group_size:
                raise InvalidCountError(f"count {c} exceeds group size {self.group_size}")

    @property
    def total(self) -> int:
        return sum(self.counts)

    def check_partition(self, stage_name: str = "") -> None:
        if self.total != self.group_size:
            where = f"stage {stage_name!r}: " if stage_name else ""
            raise ValidationError(
                f"{where}counts sum to {self.total} but the group has {self.group_size} entities"
            )


@dataclass(frozen=True)
class FuzzyStageSet:
    """Quantized grades for one stage, aligned with ``labels``."""

    grades: tuple[Fraction, ...]
    stage_name: str = ""
    labels: LabelSet = DEFAULT_LABELS

    def __post_init__(self):
        grades = tuple(as_fraction(g) for g in self.grades)
        object.__setattr__(self, "grades", grades)
        if len(grades) != len(self.labels):
            raise ValidationError(
                f"stage {self.stage_name!r}: {len(grades)} grades for {len(self.labels)} labels"
            )
        bad = [g for g in grades if g not in GRADE_LEVELS]
        if bad:
            raise ValidationError(f"stage {self.stage_name!r}: grades {bad} are not quantized levels")

    def __getitem__(self, label: str | int) -> Fraction:
        if isinstance(label, str):
            label = self.labels.index(label)
        return self.grades[label]

    def as_dict(self) -> dict[str, Fraction]:
        return dict(zip(self.labels.names, self.grades))

    @property
    def is_zero(self) -> bool:
        return not any(self.grades)


@dataclass(frozen=True)
class NormalizedFuzzySet:
    weights: tuple[Fraction, ...]
    labels: LabelSet = DEFAULT_LABELS

    def __post_init__(self):
        weights = tuple(as_fraction(w) for w in self.weights)
        object.__setattr__(self, "weights", weights)
        if len(weights) != len(self.labels):
            raise ValidationError(f"{len(weights)} weights for {len(self.labels)} labels")
        if any(w < 0 for w in weights):
            raise ValidationError("normalized weights must be nonnegative")
        if sum(weights) != 1:
            raise ValidationError(f"normalized weights sum to {sum(weights)}, not 1")


def stage_fuzzy_set(counts: StageCounts, stage_name: str = "", labels: LabelSet = DEFAULT_LABELS) -> FuzzyStageSet:
    if len(counts.counts) != len(labels):
        raise ValidationError(
            f"stage {stage_name!r}: {len(counts.counts)} counts for {len(labels)} labels"
        )
    counts.check_partition(stage_name)
    n = counts.group_size
    return FuzzyStageSet(tuple(grade_from_count(c, n) for c in counts.counts), stage_name, labels)


def normalize(fuzzy_set: FuzzyStageSet | NormalizedFuzzySet | Sequence) -> NormalizedFuzzySet:
    """Divide every grade by the sum of grades (exactly)."""
    if isinstance(fuzzy_set, NormalizedFuzzySet):
        return fuzzy_set
    if isinstance(fuzzy_set, FuzzyStageSet):
        grades, labels, name = fuzzy_set.grades, fuzzy_set.labels, fuzzy_set.stage_name
    else:
        grades = tuple(as_fraction(g) for g in fuzzy_set)
        labels = DEFAULT_LABELS if len(grades) == len(DEFAULT_LABELS) else LabelSet(
            tuple(f"x{i + 1}" for i in range(len(grades)))
        )
        name = ""
    total = sum(grades, Fraction(0))
    if total == 0:
        where = f"stage {name!r}: " if name else ""
        raise DegenerateError(f"{where}all grades are zero, normalization is undefined")
    return NormalizedFuzzySet(tuple(g / total for g in grades), labels)


def counts_from_labels(assigned: Iterable[str], labels: LabelSet = DEFAULT_LABELS) -> tuple[int, ...]:
    """Tally one label per entity into a count vector."""
    tally = [0] * len(labels)
    for name in assigned:
        tally[labels.index(name)] += 1
    return tuple(tally)
