"""Maximal-interval enumeration and reduced DNF construction.

An interval is maximal inside a carrier set when it lies in the carrier and
no strictly larger interval does.  The reduced DNF of a total function takes,
for each attained level, every maximal interval of that level's carrier that
meets the level set, at that level.  For a partially defined function the
carrier of level i is the whole lattice minus the defined sets of all lower
levels (the zero set included), so undefined points act as don't-cares.

The search grows intervals one value at a time: any interval inside the
carrier extends to a maximal one through single-value factor enlargements,
so the set of enlargement fixpoints reachable from the singleton seeds is
exactly the set of maximal intervals.  Work is exponential in the worst
case; every caller here is desk-scale.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .core import (
    Dnf,
    ElementaryConjunction,
    Interval,
    KFunction,
    PartialKFunction,
    Point,
    ValueSet,
    all_points,
    check_shape,
)
from .decompose import decompose, max_representation


@dataclass(frozen=True, slots=True)
class CarrierSet:
    """Region that an interval must stay inside."""

    k: int
    n: int
    points: frozenset[Point]

    def __post_init__(self) -> None:
        check_shape(self.k, self.n)
        for p in self.points:
            if len(p) != self.n or any(not 0 <= x < self.k for x in p):
                raise ValueError(f"point {p} outside the {self.k}**{self.n} lattice")


@dataclass(frozen=True, slots=True)
class LevelTerms:
    """Terms of one output level with the carrier they are maximal in."""

    gamma: int
    level_points: frozenset[Point]
    carrier: CarrierSet
    terms: tuple[ElementaryConjunction, ...]


@dataclass(frozen=True, slots=True)
class ReducedDnf:
    """Reduced DNF plus per-level provenance, terms in canonical order."""

    dnf: Dnf
    levels: tuple[LevelTerms, ...]

    @property
    def k(self) -> int:
        return self.dnf.k

    @property
    def n(self) -> int:
        return self.dnf.n


def _slab_inside(iv: Interval, j: int, v: int, member) -> bool:
    # points gained by adding value v to factor j: product with factor j pinned to v
    axes = [f.values() if i != j else (v,) for i, f in enumerate(iv.factors)]
    return all(member(p) for p in itertools.product(*axes))


def _enlargements(iv: Interval, carrier: CarrierSet):
    member = carrier.points.__contains__
    for j, f in enumerate(iv.factors):
        for v in range(carrier.k):
            if v in f:
                continue
            if _slab_inside(iv, j, v, member):
                yield iv.with_factor(j, f.with_value(v))


def maximal_intervals(carrier: CarrierSet) -> list[Interval]:
    """All maximal intervals inside the carrier, canonically ordered.

    Grow-and-canonicalize: seed a singleton interval at every carrier point,
    apply all single-value factor enlargements that stay inside the carrier,
    and keep the fixpoints, deduplicated by their factor masks.
    """
    if not carrier.points:
        return []
    seen: set[tuple[int, ...]] = set()
    out: dict[tuple[int, ...], Interval] = {}
    queue: deque[Interval] = deque()
    for p in sorted(carrier.points):
        iv = Interval.singleton(carrier.k, p)
        key = iv.mask_key()
        if key not in seen:
            seen.add(key)
            queue.append(iv)
    while queue:
        iv = queue.popleft()
        grew = False
        for bigger in _enlargements(iv, carrier):
            grew = True
            key = bigger.mask_key()
            if key not in seen:
                seen.add(key)
                queue.append(bigger)
        if not grew:
            out[iv.mask_key()] = iv
    return [out[key] for key in sorted(out)]


def is_maximal_in(iv: Interval, carrier: CarrierSet) -> bool:
    """True when no single-value factor enlargement stays inside the carrier.

    Sufficient for true maximality because interval containment is witnessed
    factor-wise: any strictly larger interval inside the carrier admits a
    one-value step from iv that also stays inside.
    """
    if iv.k != carrier.k or iv.n != carrier.n:
        raise ValueError("interval and carrier shape mismatch")
    member = carrier.points.__contains__
    if not all(member(p) for p in iv.points()):
        raise ValueError("interval is not inside the carrier")
    return next(_enlargements(iv, carrier), None) is None


def _level_terms(gamma: int, level_points: frozenset[Point], carrier: CarrierSet) -> LevelTerms:
    terms = tuple(
        ElementaryConjunction(iv, gamma)
        for iv in maximal_intervals(carrier)
        if any(iv.contains_point(p) for p in level_points)
    )
    return LevelTerms(gamma, level_points, carrier, terms)


def _assemble(k: int, n: int, levels: list[LevelTerms]) -> ReducedDnf:
    terms = sorted(
        (t for lt in levels for t in lt.terms), key=ElementaryConjunction.sort_key
    )
    return ReducedDnf(Dnf(k, n, tuple(terms)), tuple(levels))


def reduced_dnf(f: KFunction) -> ReducedDnf:
    """Reduced DNF of a total function; empty for the constant-0 function."""
    dec = decompose(f)
    rep = max_representation(dec)
    levels = [
        _level_terms(g, dec.level_set(g), CarrierSet(f.k, f.n, carrier_pts))
        for g, carrier_pts in rep.carriers
    ]
    return _assemble(f.k, f.n, levels)


def reduced_dnf_partial(func: PartialKFunction) -> ReducedDnf:
    """Reduced DNF of a partially defined function.

    For the i-th nonzero level the carrier is the lattice minus every
    lower-valued defined set (the explicit zeros included); terms are the
    maximal intervals of that carrier meeting the level's defined set.  The
    result takes each defined nonzero value on its set and 0 on the zero set;
    undefined points are unconstrained.
    """
    k, n = func.k, func.n
    lattice = frozenset(all_points(k, n))
    forbidden: frozenset[Point] = func.zero_set()
    levels: list[LevelTerms] = []
    for gamma, pts in func.level_sets():
        carrier = CarrierSet(k, n, lattice - forbidden)
        levels.append(_level_terms(gamma, pts, carrier))
        forbidden = forbidden | pts
    return _assemble(k, n, levels)
