"""The profile space U^k and the distributions defined over it."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .core import DEFAULT_LABELS, FuzzyStageSet, LabelSet, as_fraction
from .errors import DegenerateError, ShapeError, ValidationError

Profile = tuple[int, ...]


class Role(str, Enum):
    MEMBERSHIP = "membership"
    PROBABILITY = "probability"
    POSSIBILITY = "possibility"
    PSEUDO_FREQUENCY = "pseudo-frequency"


def enumerate_profiles(k: int, L: int) -> list[Profile]:
    """All ``L**k`` profiles in lexicographic order."""
    if k < 2 or L < 2:
        raise ValidationError(f"need k >= 2 stages and L >= 2 labels, got k={k}, L={L}")
    return list(itertools.product(range(L), repeat=k))


def profile_index(profile: Profile, L: int) -> int:
    idx = 0
    for x in profile:
        idx = idx * L + x
    return idx


def is_well_ordered(profile: Sequence[int]) -> bool:
    """True when the degree of success never increases from one stage to the next."""
    return all(a >= b for a, b in zip(profile, profile[1:]))


def format_profile(profile: Profile, labels: LabelSet = DEFAULT_LABELS) -> str:
    return "(" + ", ".join(labels.names[x] for x in profile) + ")"


def parse_profile(text: str, labels: LabelSet = DEFAULT_LABELS) -> Profile:
    """Parse ``"(c, c, a)"``, ``"c,c,a"`` or (single-character labels) ``"cca"``."""
    body = text.strip().strip("()").strip()
    if "," in body:
        parts = [p.strip() for p in body.split(",")]
    elif " " in body:
        parts = body.split()
    else:
        parts = list(body)
    return tuple(labels.index(p) for p in parts)


@dataclass(frozen=True)
class ProfileDistribution:
    """One weight per profile of the full ``L**k`` space, in lexicographic order."""

    weights: tuple[Fraction, ...]
    k: int
    role: Role = Role.MEMBERSHIP
    labels: LabelSet = DEFAULT_LABELS

    def __post_init__(self):
        weights = tuple(as_fraction(w) for w in self.weights)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "role", Role(self.role))
        size = len(self.labels) ** self.k
        if len(weights) != size:
            raise ShapeError(f"{len(weights)} weights for a profile space of size {size}")
        if any(w < 0 for w in weights):
            raise ValidationError("profile weights must be nonnegative")
        if self.role is Role.PROBABILITY and sum(weights) != 1:
            raise ValidationError(f"probabilities sum to {sum(weights)}, not 1")
        if self.role is Role.POSSIBILITY and max(weights) != 1:
            raise ValidationError(f"possibilities have maximum {max(weights)}, not 1")

    @classmethod
    def from_mapping(
        cls,
        weights: Mapping[Profile | str, object],
        k: int = 3,
        role: Role = Role.MEMBERSHIP,
        labels: LabelSet = DEFAULT_LABELS,
    ) -> "ProfileDistribution":
        """Build a distribution from sparse ``{profile: weight}``; missing profiles weigh 0."""
        L = len(labels)
        full = [Fraction(0)] * (L ** k)
        for key, w in weights.items():
            profile = parse_profile(key, labels) if isinstance(key, str) else tuple(key)
            if len(profile) != k or any(not 0 <= x < L for x in profile):
                raise ShapeError(f"profile {key!r} is not in U^{k}")
            full[profile_index(profile, L)] = as_fraction(w)
        return cls(tuple(full), k, role, labels)

    @property
    def L(self) -> int:
        return len(self.labels)

    @property
    def size(self) -> int:
        return len(self.weights)

    @property
    def profiles(self) -> list[Profile]:
        return enumerate_profiles(self.k, self.L)

    def __getitem__(self, profile: Profile | str) -> Fraction:
        if isinstance(profile, str):
            profile = parse_profile(profile, self.labels)
        return self.weights[profile_index(profile, self.L)]

    def items(self) -> Iterator[tuple[Profile, Fraction]]:
        return zip(self.profiles, self.weights)

    def nonzero(self) -> list[tuple[Profile, Fraction]]:
        return [(s, w) for s, w in self.items() if w]

    def total(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    def maximum(self) -> Fraction:
        return max(self.weights)

    def same_space(self, other: "ProfileDistribution") -> bool:
        return self.k == other.k and self.labels == other.labels


def _check_stage_sets(stage_sets: Sequence[FuzzyStageSet]) -> LabelSet:
    if len(stage_sets) < 2:
        raise ValidationError(f"need at least 2 stages, got {len(stage_sets)}")
    labels = stage_sets[0].labels
    for s in stage_sets[1:]:
        if s.labels != labels:
            raise ShapeError(f"stage {s.stage_name!r} uses a different label set")
    return labels


def profile_membership(profile: Sequence[int], stage_sets: Sequence[FuzzyStageSet]) -> Fraction:
    """Product of per-stage grades for a well-ordered profile, 0 otherwise."""
    if len(profile) != len(stage_sets):
        raise ShapeError(f"profile of length {len(profile)} for {len(stage_sets)} stages")
    if not is_well_ordered(profile):
        return Fraction(0)
    m = Fraction(1)
    for x, stage in zip(profile, stage_sets):
        m *= stage.grades[x]
    return m


def membership_distribution(stage_sets: Sequence[FuzzyStageSet]) -> ProfileDistribution:
    labels = _check_stage_sets(stage_sets)
    k = len(stage_sets)
    weights = tuple(profile_membership(s, stage_sets) for s in enumerate_profiles(k, len(labels)))
    return ProfileDistribution(weights, k, Role.MEMBERSHIP, labels)


def probabilities(d: ProfileDistribution) -> ProfileDistribution:
    total = d.total()
    if total == 0:
        raise DegenerateError("all profile weights are zero, probabilities are undefined")
    return ProfileDistribution(tuple(w / total for w in d.weights), d.k, Role.PROBABILITY, d.labels)


def possibilities(d: ProfileDistribution) -> ProfileDistribution:
    peak = d.maximum()
    if peak == 0:
        raise DegenerateError("all profile weights are zero, possibilities are undefined")
    return ProfileDistribution(tuple(w / peak for w in d.weights), d.k, Role.POSSIBILITY, d.labels)


def pseudo_frequencies(ds: Iterable[ProfileDistribution]) -> ProfileDistribution:
    """Pointwise sum of the membership distributions of several groups."""
    ds = list(ds)
    if len(ds) < 2:
        raise ValidationError(f"pseudo-frequencies need at least 2 groups, got {len(ds)}")
    first = ds[0]
    for d in ds[1:]:
        if not first.same_space(d):
            raise ShapeError("groups do not share a profile space (stage count or labels differ)")
    summed = tuple(sum(ws, Fraction(0)) for ws in zip(*(d.weights for d in ds)))
    return ProfileDistribution(summed, first.k, Role.PSEUDO_FREQUENCY, first.labels)
