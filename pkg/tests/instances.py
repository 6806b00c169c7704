"""Random instance generators used by the absorption and sweep tests."""

import random

from kdnf import (
    CarrierSet,
    ElementaryConjunction,
    KFunction,
    Point,
    all_points,
    maximal_intervals,
)


def star_up_closure(k: int, n: int, seeds) -> frozenset[Point]:
    """Close a point set upward in the star product order: any zero
    coordinate may be raised to any nonzero value."""
    closed: set[Point] = set()
    stack = [tuple(p) for p in seeds]
    while stack:
        p = stack.pop()
        if p in closed:
            continue
        closed.add(p)
        for i, x in enumerate(p):
            if x == 0:
                stack.extend(p[:i] + (v,) + p[i + 1 :] for v in range(1, k))
    return frozenset(closed)


def random_star_function(rng: random.Random, k: int, n: int, gamma: int) -> KFunction:
    """A random function taking one nonzero value on a star-up-closed set."""
    pts = list(all_points(k, n))
    seeds = rng.sample(pts, rng.randint(1, max(1, len(pts) // 3)))
    support = star_up_closure(k, n, seeds)
    return KFunction.from_map(k, n, {p: gamma for p in support})


def star_absorption_instances(rng: random.Random, count: int):
    """(terms, ec) pairs: ec is one maximal term of a star-monotone
    quasi-Boolean function's reduced DNF, terms a subset of the others,
    pruned to the non-orthogonal ones as the absorption step requires.

    Mixes k in {3, 4} and n up to 4, keeping the candidate-interval space
    small enough for the brute-force side.
    """
    out = []
    while len(out) < count:
        k = rng.choice([3, 4])
        n = rng.randint(1, 4)
        if (2**k - 1) ** n > 4000:
            continue
        gamma = rng.randint(1, k - 1)
        f = random_star_function(rng, k, n, gamma)
        carrier = CarrierSet(k, n, f.support())
        pool = [
            ElementaryConjunction(iv, gamma) for iv in maximal_intervals(carrier)
        ]
        if len(pool) < 2:
            continue
        ec = rng.choice(pool)
        rest = [t for t in pool if t != ec]
        if rng.random() < 0.5:
            rest = rng.sample(rest, rng.randint(1, len(rest)))
        rest = [t for t in rest if not t.is_orthogonal_to(ec)]
        out.append((rest, ec))
    return out
