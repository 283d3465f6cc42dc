"""Random sweep of the exact pipeline against the brute-force oracle.

    python3 scripts/oracle_sweep.py --trials 5000 --seed 1

Draws random count triples, runs both routes, and reports mismatches and
the worst centroid gap against numerical quadrature.
"""

import argparse
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from oracle import brute_force, literal_stage  # noqa: E402

from fuzzystages import (  # noqa: E402
    DegenerateError,
    centroid,
    centroid_integral_oracle,
    membership_distribution,
    normalize,
    probabilities,
    stage_fuzzy_set,
)
from fuzzystages.core import StageCounts  # noqa: E402


def random_counts(rng, n, L=5):
    cuts = sorted(rng.randint(0, n) for _ in range(L - 1))
    bounds = [0, *cuts, n]
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


def trial(rng, n_range):
    n = rng.randint(*n_range)
    counts = [random_counts(rng, n) for _ in range(3)]
    sets = [stage_fuzzy_set(StageCounts(n, c), f"S{i + 1}") for i, c in enumerate(counts)]
    if [list(s.grades) for s in sets] != [literal_stage(c, n) for c in counts]:
        return "stage", 0.0
    m = membership_distribution(sets)
    oracle_m, oracle_p, _ = brute_force([s.grades for s in sets])
    if dict(m.items()) != {s: oracle_m.get(s, 0) for s in m.profiles}:
        return "membership", 0.0
    if oracle_p is not None:
        p = probabilities(m)
        if any(p[s] != w for s, w in oracle_p.items()):
            return "probability", 0.0
    gap = 0.0
    for s in sets:
        try:
            w = normalize(s)
        except DegenerateError:
            continue
        exact, quad = centroid(w), centroid_integral_oracle(w.weights)
        gap = max(gap, abs(float(exact.xc) - quad.xc), abs(float(exact.yc) - quad.yc))
    return None, gap


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trials", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=20261018)
    parser.add_argument("--min-n", type=int, default=5)
    parser.add_argument("--max-n", type=int, default=200)
    args = parser.parse_args(argv)

    rng = random.Random(args.seed)
    failures: dict[str, int] = {}
    worst = 0.0
    start = time.perf_counter()
    for _ in range(args.trials):
        kind, gap = trial(rng, (args.min_n, args.max_n))
        if kind:
            failures[kind] = failures.get(kind, 0) + 1
        worst = max(worst, gap)
    elapsed = time.perf_counter() - start
    print(f"{args.trials} trials in {elapsed:.2f} s, seed {args.seed}")
    print(f"mismatches: {failures or 'none'}")
    print(f"worst centroid gap vs quadrature: {worst:.3e}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
