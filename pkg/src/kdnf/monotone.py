"""Partial orders on the alphabet, monotonicity checks, and class counting.

Two stock orders matter here: the chain 0 < 1 < ... < k-1, and the star
order in which 0 sits below every nonzero value while nonzero values are
pairwise incomparable.  Points compare coordinatewise; a function is
monotone when it preserves that comparison.

For chain-monotone functions the reduced DNF has a rigid shape (every factor
an upper interval [a, k-1], one dead-end DNF, bottom corners as core points)
which chain_shape_report verifies constructively.  For the star-monotone
class the module evaluates the closed-form growth estimate for the class
size and counts small cases exactly by backtracking.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .core import CapacityError, KFunction, Point, check_alphabet, decode_point
from .minimize import dead_end_dnfs
from .reduce import ReducedDnf, reduced_dnf

COUNT_CAP = 10**8  # cap on k**(k**n), the candidate-table space of the counter


@dataclass(frozen=True, slots=True)
class ValueOrder:
    """Reflexive-transitive order on {0..k-1}; geq[i] is the bitmask of j <= i."""

    k: int
    geq: tuple[int, ...]

    def __post_init__(self) -> None:
        check_alphabet(self.k)
        if len(self.geq) != self.k:
            raise ValueError("relation size does not match the alphabet")
        for i in range(self.k):
            if not self.geq[i] >> i & 1:
                raise ValueError(f"order is not reflexive at {i}")
            for j in range(self.k):
                if i != j and self.geq[i] >> j & 1 and self.geq[j] >> i & 1:
                    raise ValueError(f"order is not antisymmetric on ({i}, {j})")
                if self.geq[i] >> j & 1 and self.geq[j] & ~self.geq[i]:
                    raise ValueError("order is not transitively closed")

    @classmethod
    def from_relations(cls, k: int, pairs: Iterable[tuple[int, int]]) -> "ValueOrder":
        """Build from (lower, upper) pairs; closure is taken, cycles rejected."""
        geq = [1 << i for i in range(k)]
        for low, high in pairs:
            if not (0 <= low < k and 0 <= high < k):
                raise ValueError(f"relation ({low}, {high}) outside the alphabet")
            geq[high] |= 1 << low
        changed = True
        while changed:
            changed = False
            for i in range(k):
                m = geq[i]
                for j in range(k):
                    if m >> j & 1:
                        m |= geq[j]
                if m != geq[i]:
                    geq[i] = m
                    changed = True
        return cls(k, tuple(geq))

    def dominates(self, a: int, b: int) -> bool:
        """a >= b in this order."""
        return self.geq[a] >> b & 1 == 1

    def leq(self, a: int, b: int) -> bool:
        return self.dominates(b, a)

    def cover_pairs(self) -> tuple[tuple[int, int], ...]:
        """(low, high) pairs with nothing strictly between, ascending."""
        out = []
        for high in range(self.k):
            for low in range(self.k):
                if low == high or not self.dominates(high, low):
                    continue
                between = any(
                    m not in (low, high)
                    and self.dominates(high, m)
                    and self.dominates(m, low)
                    for m in range(self.k)
                )
                if not between:
                    out.append((low, high))
        return tuple(sorted(out))

    def point_leq(self, p: Point, q: Point) -> bool:
        """Coordinatewise comparison."""
        return all(self.leq(a, b) for a, b in zip(p, q))


def total_order(k: int) -> ValueOrder:
    """The chain 0 < 1 < ... < k-1."""
    return ValueOrder.from_relations(k, [(i, i + 1) for i in range(k - 1)])


def star_order(k: int) -> ValueOrder:
    """0 below every nonzero value; nonzero values pairwise incomparable."""
    return ValueOrder.from_relations(k, [(0, v) for v in range(1, k)])


def monotone_witness(f: KFunction, order: ValueOrder) -> tuple[Point, Point] | None:
    """A covering pair (p, q) with p <= q but f(p) not <= f(q), or None.

    Only pairs differing in one coordinate by one covering step are checked;
    by transitivity that already decides monotonicity.
    """
    if order.k != f.k:
        raise ValueError("order and function alphabet mismatch")
    covers = order.cover_pairs()
    for p in f.points():
        fp = f.value(p)
        for i, x in enumerate(p):
            for low, high in covers:
                if x != low:
                    continue
                q = p[:i] + (high,) + p[i + 1 :]
                if not order.leq(fp, f.value(q)):
                    return (p, q)
    return None


def is_monotone(f: KFunction, order: ValueOrder) -> bool:
    return monotone_witness(f, order) is None


def _linear_extension(k: int, n: int, order: ValueOrder) -> list[Point]:
    # sort by total coordinate depth (longest chain below each value), then lex
    depth = [0] * k
    covers = order.cover_pairs()
    changed = True
    while changed:  # fixpoint; the relation is acyclic so this terminates
        changed = False
        for low, high in covers:
            if depth[high] < depth[low] + 1:
                depth[high] = depth[low] + 1
                changed = True
    pts = [decode_point(i, k, n) for i in range(k**n)]
    pts.sort(key=lambda p: (sum(depth[x] for x in p), p))
    return pts


def iter_monotone_functions(n: int, k: int, order: ValueOrder) -> Iterator[KFunction]:
    """All functions monotone under the order, by backtracking.

    Points are assigned along a linear extension of the product order, so
    each new point only needs checking against its already-assigned covering
    predecessors.  Subject to the same cap as count_monotone_exact.
    """
    if (k**n) * math.log2(k) > math.log2(COUNT_CAP):
        raise CapacityError(f"k**(k**n) exceeds the counting cap {COUNT_CAP}")
    ext = _linear_extension(k, n, order)
    position = {p: i for i, p in enumerate(ext)}
    covers = order.cover_pairs()
    preds: list[list[int]] = []
    for p in ext:
        below = []
        for i, x in enumerate(p):
            for low, high in covers:
                if x == high:
                    below.append(position[p[:i] + (low,) + p[i + 1 :]])
        preds.append(below)
    assigned = [0] * len(ext)

    def fill(i: int) -> Iterator[KFunction]:
        if i == len(ext):
            yield KFunction.from_map(k, n, dict(zip(ext, assigned)))
            return
        for v in range(k):
            if all(order.leq(assigned[j], v) for j in preds[i]):
                assigned[i] = v
                yield from fill(i + 1)

    return fill(0)


def count_monotone_exact(n: int, k: int, order: ValueOrder) -> int:
    """Exact number of monotone functions under the order; capped."""
    return sum(1 for _ in iter_monotone_functions(n, k, order))


@dataclass(frozen=True, slots=True)
class PsiEstimate:
    """Leading term of the star-monotone class-size estimate.

    log2_psi is the base-2 exponent of the estimated count:
    k**(n+1) / (sqrt(2*pi*(k-1)) * sqrt(n)).  The vanishing (1 + o(1))
    correction is dropped, so no finite-n accuracy is claimed.  d is the
    longest chain of nested value subsets between two singletons (2 for the
    star order), big_d the variance floor (k-1)/k**2 of the admissible
    one-dimensional drawings of the order.
    """

    n: int
    k: int
    log2_psi: float
    d: int
    big_d: float


def psi_estimate(n: int, k: int) -> PsiEstimate:
    check_alphabet(k)
    if n < 1:
        raise ValueError(f"dimension n={n} must be >= 1")
    log2_psi = k ** (n + 1) / (math.sqrt(2 * math.pi * (k - 1)) * math.sqrt(n))
    return PsiEstimate(n, k, log2_psi, 2, (k - 1) / k**2)


@dataclass(frozen=True, slots=True)
class ChainShapeReport:
    """Structure of the reduced DNF of a chain-monotone function.

    For such functions every factor must be an upper interval [a, k-1], the
    reduced DNF must be the one and only dead-end DNF, and each term's bottom
    corner is a core point: no other term of its level reaches it.
    """

    reduced: ReducedDnf
    factors_upper: bool
    dead_end_count: int
    dead_end_equals_reduced: bool
    core_points: tuple[Point, ...]
    cores_exclusive: bool


def _is_upper_interval(mask: int, k: int) -> bool:
    values = [v for v in range(k) if mask >> v & 1]
    return values == list(range(values[0], k))


def _is_contiguous(mask: int, k: int) -> bool:
    values = [v for v in range(k) if mask >> v & 1]
    return values == list(range(values[0], values[-1] + 1))


def chain_shape_report(f: KFunction) -> ChainShapeReport:
    """Verify the rigid reduced-DNF shape of a chain-monotone function."""
    if not is_monotone(f, total_order(f.k)):
        raise ValueError("function is not monotone under the chain order")
    pool = reduced_dnf(f)
    factors_upper = all(
        _is_upper_interval(fac.mask, f.k)
        for t in pool.dnf.terms
        for fac in t.interval.factors
    )
    ends = dead_end_dnfs(f, pool)
    cores = tuple(
        tuple(min(fac.values()) for fac in t.interval.factors) for t in pool.dnf.terms
    )
    exclusive = all(
        not any(
            other is not t and other.gamma == t.gamma and other.value_at(core) == t.gamma
            for other in pool.dnf.terms
        )
        for t, core in zip(pool.dnf.terms, cores)
    )
    return ChainShapeReport(
        reduced=pool,
        factors_upper=factors_upper,
        dead_end_count=len(ends),
        dead_end_equals_reduced=len(ends) == 1 and ends[0] == pool.dnf.canonical(),
        core_points=cores,
        cores_exclusive=exclusive,
    )


@dataclass(frozen=True, slots=True)
class ContiguousShapeReport:
    """Whether every reduced-DNF factor is a gap-free run of values."""

    reduced: ReducedDnf
    factors_contiguous: bool
    violations: tuple[tuple[int, int], ...]  # (term index, factor index)


def contiguous_shape_report(f: KFunction) -> ContiguousShapeReport:
    if not is_monotone(f, total_order(f.k)):
        raise ValueError("function is not monotone under the chain order")
    pool = reduced_dnf(f)
    violations = tuple(
        (ti, fi)
        for ti, t in enumerate(pool.dnf.terms)
        for fi, fac in enumerate(t.interval.factors)
        if not _is_contiguous(fac.mask, f.k)
    )
    return ContiguousShapeReport(pool, not violations, violations)
