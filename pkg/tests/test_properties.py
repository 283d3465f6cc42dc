"""Invariants not already covered by the acceptance property suite."""

import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from fuzzystages import (
    GroupDataset,
    OrderedPossibilityDistribution,
    ProfileDistribution,
    analyze_command,
    centroid_general,
    centroid_integral_oracle,
    nonspecificity,
    parse_report,
    possibilities,
    probabilities,
    pseudo_frequencies,
    render_report,
    shannon_entropy,
    strife,
)
from oracle import measures_reverse

# sparse: a handful of nonzero profiles out of 125
weights125 = st.dictionaries(
    st.integers(0, 124), st.fractions(F(1, 64), 1, max_denominator=64), min_size=1, max_size=12
)


def dist(sparse):
    return ProfileDistribution(tuple(sparse.get(i, F(0)) for i in range(125)), 3)


@given(weights125)
def test_argmax_sets_agree(ws):
    d = dist(ws)
    p, r = probabilities(d), possibilities(d)
    top_p = {s for s, w in p.items() if w == p.maximum()}
    top_r = {s for s, w in r.items() if w == 1}
    assert top_p == top_r


@settings(max_examples=50)
@given(weights125, weights125, weights125)
def test_pseudo_frequencies_commutative_and_associative(a, b, c):
    a, b, c = dist(a), dist(b), dist(c)
    assert pseudo_frequencies([a, b]) == pseudo_frequencies([b, a])
    ab = ProfileDistribution(pseudo_frequencies([a, b]).weights, 3)
    bc = ProfileDistribution(pseudo_frequencies([b, c]).weights, 3)
    assert pseudo_frequencies([ab, c]) == pseudo_frequencies([a, bc]) == pseudo_frequencies([a, b, c])


@given(st.lists(st.fractions(0, 1, max_denominator=100), min_size=1, max_size=60))
def test_measures_agree_with_reverse_summation(values):
    r = OrderedPossibilityDistribution(sorted(values, reverse=True))
    st_, ns = measures_reverse(r.values)
    assert strife(r) == pytest.approx(st_, abs=1e-12)
    assert nonspecificity(r) == pytest.approx(ns, abs=1e-12)


@given(st.lists(st.floats(0, 1), min_size=2, max_size=50), st.randoms(use_true_random=False))
def test_entropy_permutation_invariant(ws, rnd):
    shuffled = list(ws)
    rnd.shuffle(shuffled)
    assert shannon_entropy(ws) == pytest.approx(shannon_entropy(shuffled), abs=1e-12)


@given(st.lists(st.floats(0, 1e3, allow_subnormal=False), min_size=1, max_size=12).filter(lambda h: max(h) > 1e-6))
def test_closed_form_matches_quadrature(heights):
    closed, quad = centroid_general(heights), centroid_integral_oracle(heights)
    assert closed.xc == pytest.approx(quad.xc, abs=1e-9)
    assert closed.yc == pytest.approx(quad.yc, rel=1e-12, abs=1e-9)


@settings(max_examples=40, deadline=None)
@given(st.integers(5, 120), st.integers(0, 2**32))
def test_structured_round_trip_and_determinism(n, seed):
    rng = random.Random(seed)

    def counts():
        cuts = sorted(rng.randint(0, n) for _ in range(4))
        b = [0, *cuts, n]
        return tuple(y - x for x, y in zip(b, b[1:]))

    # keep the first stage's grade at c nonzero so the distribution is never empty
    first = (0, 0, n, 0, 0)
    ds = GroupDataset.from_counts("g", n, [("S1", first), ("S2", counts()), ("S3", (n, 0, 0, 0, 0))])
    try:
        report = analyze_command(ds)
    except ArithmeticError:
        return
    data = render_report(report, "json")
    assert parse_report(data) == report
    assert render_report(analyze_command(ds), "json") == data
