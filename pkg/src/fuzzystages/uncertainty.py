"""Strife, non-specificity, total possibilistic uncertainty and normalized Shannon entropy."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .core import as_fraction
from .errors import DomainError, RoleError, ValidationError
from .profiles import Profile, ProfileDistribution, Role, possibilities, probabilities


@dataclass(frozen=True)
class OrderedPossibilityDistribution:
    """Possibility values sorted non-increasingly; an implicit 0 follows the last one."""

    values: tuple[Fraction, ...]
    profiles: tuple[Profile, ...] | None = None

    def __post_init__(self):
        values = tuple(as_fraction(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if any(v < 0 or v > 1 for v in values):
            raise ValidationError("possibility values must lie in [0, 1]")
        if any(a < b for a, b in zip(values, values[1:])):
            raise ValidationError("ordered possibility values must be non-increasing")
        if self.profiles is not None and len(self.profiles) != len(values):
            raise ValidationError("one profile per value is required")

    def __len__(self) -> int:
        return len(self.values)


def ordered_possibility(d: ProfileDistribution) -> OrderedPossibilityDistribution:
    """Sort a possibility distribution; ties keep lexicographic profile order."""
    if d.role is not Role.POSSIBILITY:
        raise RoleError(f"expected a possibility distribution, got role {d.role.value!r}")
    pairs = sorted(d.items(), key=lambda item: -item[1])  # stable
    return OrderedPossibilityDistribution(
        tuple(w for _, w in pairs), tuple(s for s, _ in pairs)
    )


def _jumps(r: OrderedPossibilityDistribution) -> Iterator[tuple[int, Fraction, Fraction]]:
    # (i, r_i - r_{i+1}, r_1 + ... + r_i) for i >= 2 (1-based), skipping zero jumps.
    # Jumps only happen at the end of a run of equal values.
    runs = [(v, len(list(group))) for v, group in itertools.groupby(r.values)]
    i, prefix = 0, Fraction(0)
    for j, (value, length) in enumerate(runs):
        if value == 0:
            break
        i += length
        prefix += value * length
        following = runs[j + 1][0] if j + 1 < len(runs) else 0
        if i >= 2:
            yield i, value - following, prefix


def strife(r: OrderedPossibilityDistribution) -> float:
    """Strife (discord), in bits."""
    return math.fsum(float(jump) * math.log2(float(i / prefix)) for i, jump, prefix in _jumps(r))


def nonspecificity(r: OrderedPossibilityDistribution) -> float:
    """Non-specificity (imprecision), in bits."""
    return math.fsum(float(jump) * math.log2(i) for i, jump, _ in _jumps(r))


def total_uncertainty(r: OrderedPossibilityDistribution) -> float:
    return strife(r) + nonspecificity(r)


def shannon_entropy(d: ProfileDistribution | Sequence, normalizer: int | None = None) -> float:
    """``-(1/ln N) * sum(m ln m)`` over the weights, with ``0 ln 0 = 0``.

    ``N`` defaults to the number of weights (the size of the profile space).
    """
    if isinstance(d, ProfileDistribution):
        if d.role not in (Role.MEMBERSHIP, Role.PROBABILITY):
            raise RoleError(f"entropy takes membership or probability weights, not {d.role.value!r}")
        weights: Iterable = d.weights
        size = d.size
    else:
        weights = [as_fraction(w) for w in d]
        size = len(weights)
    if normalizer is None:
        normalizer = size
    if normalizer < 2:
        raise ValidationError(f"entropy normalizer must be >= 2, got {normalizer}")
    terms = []
    for m in weights:
        if m < 0 or m > 1:
            raise DomainError(f"weight {m} outside [0, 1]")
        if m:
            fm = float(m)
            terms.append(fm * math.log(fm))
    return -math.fsum(terms) / math.log(normalizer)


@dataclass(frozen=True)
class UncertaintyReport:
    strife: float
    nonspecificity: float
    total: float
    shannon: float


def uncertainty_report(d: ProfileDistribution, normalizer: int | None = None) -> UncertaintyReport:
    """All scalar measures of a membership (or pseudo-frequency) distribution.

    Entropy is taken on the weights themselves for a membership distribution
    and on their probabilities otherwise, since pseudo-frequencies may exceed 1.
    """
    r = ordered_possibility(possibilities(d))
    st, ns = strife(r), nonspecificity(r)
    if d.role is Role.MEMBERSHIP:
        h = shannon_entropy(d, normalizer)
    else:
        h = shannon_entropy(probabilities(d), normalizer)
    return UncertaintyReport(st, ns, st + ns, h)
