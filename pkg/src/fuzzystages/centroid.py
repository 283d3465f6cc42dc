"""Centre of mass of the bar graph of a fuzzy set, and the group comparison rule.

Bars have unit width and the first bar sits on ``[0, 1]``. Rational heights
give rational coordinates; float heights give floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from numbers import Real
from typing import Sequence

import numpy as np

from .core import NormalizedFuzzySet
from .errors import DegenerateError, ValidationError


@dataclass(frozen=True)
class CentroidPoint:
    xc: Real
    yc: Real

    def __iter__(self):
        return iter((self.xc, self.yc))


class Verdict(str, Enum):
    FIRST_BETTER = "first-better"
    SECOND_BETTER = "second-better"
    TIE = "tie"


class Rule(str, Enum):
    BIGGER_XC = "bigger-xc"
    EQUAL_XC_HIGH = "equal-xc-high-branch"
    EQUAL_XC_LOW = "equal-xc-low-branch"
    IDENTICAL = "identical"


@dataclass(frozen=True)
class ComparisonOutcome:
    verdict: Verdict
    rule: Rule


def _heights(heights: Sequence) -> list:
    ys = [Fraction(y) if isinstance(y, int) else y for y in heights]
    if not ys:
        raise ValidationError("at least one bar is required")
    if any(y < 0 for y in ys):
        raise ValidationError("bar heights must be nonnegative")
    if not any(y > 0 for y in ys):
        raise DegenerateError("all bar heights are zero, the centre of mass is undefined")
    return ys


def centroid_general(heights: Sequence[Real]) -> CentroidPoint:
    """Centre of mass of unit-width bars; heights need not sum to 1."""
    ys = _heights(heights)
    mass = sum(ys)
    x_moment = sum((2 * i - 1) * y for i, y in enumerate(ys, start=1))
    y_moment = sum(y * y for y in ys)
    return CentroidPoint(x_moment / (2 * mass), y_moment / (2 * mass))


def centroid(w: NormalizedFuzzySet) -> CentroidPoint:
    """Centre of mass of a normalized set, where the total mass is 1."""
    ys = w.weights
    return CentroidPoint(
        sum((2 * i - 1) * y for i, y in enumerate(ys, start=1)) / 2,
        sum(y * y for y in ys) / 2,
    )


def centroid_integral_oracle(heights: Sequence[Real], nodes: int = 4) -> CentroidPoint:
    """Centre of mass by Gauss-Legendre quadrature over each bar.

    Integrates ``1``, ``x`` and ``y`` over every rectangle ``[i-1, i] x [0, y_i]``
    and divides the moments by the area. For verification only.
    """
    ys = [float(y) for y in _heights(heights)]
    t, wt = np.polynomial.legendre.leggauss(nodes)
    # map [-1, 1] -> [0, 1]
    u, wu = (t + 1) / 2, wt / 2
    area = mx = my = 0.0
    for i, h in enumerate(ys):
        if h == 0:
            continue
        xs = i + u
        yv = h * u
        jac = h  # dx dy = (1)(h) du dv
        w2 = np.outer(wu, wu) * jac
        area += w2.sum()
        mx += (w2 * xs[:, None]).sum()
        my += (w2 * yv[None, :]).sum()
    return CentroidPoint(mx / area, my / area)


def feasible_points(L: int = 5) -> dict[str, CentroidPoint]:
    """Worst, uniform and ideal centres of mass for normalized ``L``-level sets."""
    return {
        "worst": CentroidPoint(Fraction(1, 2), Fraction(1, 2)),
        "uniform": CentroidPoint(Fraction(L, 2), Fraction(1, 2 * L)),
        "ideal": CentroidPoint(Fraction(2 * L - 1, 2), Fraction(1, 2)),
    }


def compare(p: CentroidPoint, q: CentroidPoint, L: int = 5, epsilon: float = 1e-9) -> ComparisonOutcome:
    """Rank two groups by their centres of mass.

    A bigger ``xc`` wins. With equal ``xc`` (within ``epsilon``) the higher
    ``yc`` wins when ``xc >= L/2`` and the lower ``yc`` wins below it.
    """
    if abs(p.xc - q.xc) > epsilon:
        verdict = Verdict.FIRST_BETTER if p.xc > q.xc else Verdict.SECOND_BETTER
        return ComparisonOutcome(verdict, Rule.BIGGER_XC)
    if abs(p.yc - q.yc) <= epsilon:
        return ComparisonOutcome(Verdict.TIE, Rule.IDENTICAL)
    shared_xc = (p.xc + q.xc) / 2
    if shared_xc >= Fraction(L, 2):
        first = p.yc > q.yc
        rule = Rule.EQUAL_XC_HIGH
    else:
        first = p.yc < q.yc
        rule = Rule.EQUAL_XC_LOW
    return ComparisonOutcome(Verdict.FIRST_BETTER if first else Verdict.SECOND_BETTER, rule)
