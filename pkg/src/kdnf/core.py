"""Core types for k-valued logic functions over the lattice {0..k-1}^n.

A value set is a subset of the alphabet {0, ..., k-1} stored as a bitmask.
An interval is a Cartesian product of nonempty value sets, one per variable;
its point set is a sublattice of the full lattice.  An elementary conjunction
pairs an interval with an output level gamma >= 1 and evaluates to gamma
exactly on the interval, 0 elsewhere.  A DNF is a list of conjunctions
evaluated pointwise by max.  Total functions are dense tables indexed by a
mixed-radix point encoding with x1 most significant.

Everything in this module is immutable after construction and safe for
concurrent reads.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterable, Iterator, Mapping
from dataclasses import dataclass

MIN_K = 2
MAX_K = 16          # desk-scale cap on the alphabet
MAX_TABLE = 1 << 20  # dense-table cap: k**n must not exceed this

Point = tuple[int, ...]


class CapacityError(Exception):
    """A desk-scale resource cap was exceeded.  No partial answer is given."""


def check_alphabet(k: int) -> None:
    if not MIN_K <= k <= MAX_K:
        raise ValueError(f"alphabet size k={k} outside [{MIN_K}, {MAX_K}]")


def check_shape(k: int, n: int) -> None:
    check_alphabet(k)
    if n < 1:
        raise ValueError(f"dimension n={n} must be >= 1")
    if k**n > MAX_TABLE:
        raise CapacityError(f"k**n = {k}**{n} exceeds the dense-table cap {MAX_TABLE}")


def encode_point(p: Point, k: int) -> int:
    """Mixed-radix index of a point, first coordinate most significant."""
    idx = 0
    for x in p:
        if not 0 <= x < k:
            raise ValueError(f"coordinate {x} outside [0, {k - 1}]")
        idx = idx * k + x
    return idx


def decode_point(idx: int, k: int, n: int) -> Point:
    coords = [0] * n
    for j in range(n - 1, -1, -1):
        idx, coords[j] = divmod(idx, k)
    return tuple(coords)


def all_points(k: int, n: int) -> Iterator[Point]:
    """All lattice points in index (lexicographic) order."""
    return itertools.product(range(k), repeat=n)


@dataclass(frozen=True, slots=True)
class ValueSet:
    """Subset of the alphabet, characteristic-bitmask representation."""

    mask: int = 0

    @classmethod
    def of(cls, *values: int) -> "ValueSet":
        m = 0
        for v in values:
            if v < 0:
                raise ValueError(f"negative logic value {v}")
            m |= 1 << v
        return cls(m)

    @classmethod
    def from_iterable(cls, values: Iterable[int]) -> "ValueSet":
        return cls.of(*values)

    @classmethod
    def full(cls, k: int) -> "ValueSet":
        return cls((1 << k) - 1)

    def __contains__(self, v: int) -> bool:
        return v >= 0 and self.mask >> v & 1 == 1

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __bool__(self) -> bool:
        return self.mask != 0

    def values(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.mask.bit_length()) if self.mask >> v & 1)

    def is_full(self, k: int) -> bool:
        return self.mask == (1 << k) - 1

    def is_subset_of(self, other: "ValueSet") -> bool:
        return self.mask & ~other.mask == 0

    def disjoint_from(self, other: "ValueSet") -> bool:
        return self.mask & other.mask == 0

    def with_value(self, v: int) -> "ValueSet":
        return ValueSet(self.mask | 1 << v)


def j_value(members: ValueSet, x: int, k: int) -> int:
    """Characteristic elementary formula: k-1 when x is a member, else 0."""
    check_alphabet(k)
    if not 0 <= x < k:
        raise ValueError(f"argument {x} outside the alphabet [0, {k - 1}]")
    return k - 1 if x in members else 0


@dataclass(frozen=True, slots=True)
class Interval:
    """Cartesian product of nonempty value sets; a sublattice of {0..k-1}^n."""

    k: int
    factors: tuple[ValueSet, ...]

    def __post_init__(self) -> None:
        check_alphabet(self.k)
        if not self.factors:
            raise ValueError("interval needs at least one factor")
        top = 1 << self.k
        for j, f in enumerate(self.factors):
            if f.mask == 0:
                raise ValueError(f"factor {j + 1} is empty")
            if f.mask >= top:
                raise ValueError(f"factor {j + 1} has values outside the alphabet")

    @classmethod
    def from_values(cls, k: int, *factors: Iterable[int]) -> "Interval":
        return cls(k, tuple(ValueSet.from_iterable(f) for f in factors))

    @classmethod
    def full(cls, k: int, n: int) -> "Interval":
        return cls(k, (ValueSet.full(k),) * n)

    @classmethod
    def singleton(cls, k: int, p: Point) -> "Interval":
        return cls(k, tuple(ValueSet.of(x) for x in p))

    @property
    def n(self) -> int:
        return len(self.factors)

    def size(self) -> int:
        s = 1
        for f in self.factors:
            s *= len(f)
        return s

    def mask_key(self) -> tuple[int, ...]:
        return tuple(f.mask for f in self.factors)

    def contains_point(self, p: Point) -> bool:
        if len(p) != self.n:
            raise ValueError(f"point dimension {len(p)} != interval dimension {self.n}")
        return all(x in f for x, f in zip(p, self.factors))

    def contains(self, other: "Interval") -> bool:
        """Point-set containment; factor-wise since factors are nonempty."""
        if other.k != self.k or other.n != self.n:
            raise ValueError("interval shape mismatch")
        return all(g.is_subset_of(f) for f, g in zip(self.factors, other.factors))

    def points(self) -> list[Point]:
        """Full point set, lexicographically ordered."""
        return [tuple(p) for p in itertools.product(*(f.values() for f in self.factors))]

    def with_factor(self, j: int, f: ValueSet) -> "Interval":
        return Interval(self.k, self.factors[:j] + (f,) + self.factors[j + 1 :])


@dataclass(frozen=True, slots=True)
class ElementaryConjunction:
    """An interval with an output level; evaluates to gamma on the interval."""

    interval: Interval
    gamma: int

    def __post_init__(self) -> None:
        if not 1 <= self.gamma <= self.interval.k - 1:
            raise ValueError(f"gamma={self.gamma} outside [1, {self.interval.k - 1}]")

    @property
    def k(self) -> int:
        return self.interval.k

    @property
    def n(self) -> int:
        return self.interval.n

    @property
    def rank(self) -> int:
        """k*n minus the total factor size; 0 for the full interval."""
        return self.k * self.n - sum(len(f) for f in self.interval.factors)

    def sort_key(self) -> tuple:
        return (self.gamma, self.interval.mask_key())

    def value_at(self, p: Point) -> int:
        return self.gamma if self.interval.contains_point(p) else 0

    def is_orthogonal_to(self, other: "ElementaryConjunction") -> bool:
        """True when the intervals are disjoint, witnessed by one variable."""
        if other.k != self.k or other.n != self.n:
            raise ValueError("conjunction shape mismatch")
        return any(
            f.disjoint_from(g)
            for f, g in zip(self.interval.factors, other.interval.factors)
        )

    def support(self) -> tuple[int, ...]:
        """0-based positions of the non-full factors (the variables it depends on)."""
        return tuple(j for j, f in enumerate(self.interval.factors) if not f.is_full(self.k))


@dataclass(frozen=True, slots=True)
class Dnf:
    """Disjunction (pointwise max) of elementary conjunctions; may be empty."""

    k: int
    n: int
    terms: tuple[ElementaryConjunction, ...] = ()

    def __post_init__(self) -> None:
        check_shape(self.k, self.n)
        for t in self.terms:
            if t.k != self.k or t.n != self.n:
                raise ValueError("term shape does not match the DNF shape")

    def value_at(self, p: Point) -> int:
        if len(p) != self.n:
            raise ValueError(f"point dimension {len(p)} != DNF dimension {self.n}")
        return max((t.value_at(p) for t in self.terms), default=0)

    def __len__(self) -> int:
        return len(self.terms)

    def total_rank(self) -> int:
        return sum(t.rank for t in self.terms)

    def canonical(self) -> "Dnf":
        """Terms sorted by (gamma, factor bitmask tuple)."""
        return Dnf(self.k, self.n, tuple(sorted(self.terms, key=ElementaryConjunction.sort_key)))

    def without(self, index: int) -> "Dnf":
        if not 0 <= index < len(self.terms):
            raise ValueError(f"term index {index} out of range")
        return Dnf(self.k, self.n, self.terms[:index] + self.terms[index + 1 :])

    def as_function(self) -> "KFunction":
        return KFunction(self.k, self.n, bytes(self.value_at(p) for p in all_points(self.k, self.n)))


@dataclass(frozen=True, slots=True)
class KFunction:
    """Total function {0..k-1}^n -> {0..k-1} as a dense table of k**n values."""

    k: int
    n: int
    table: bytes

    def __post_init__(self) -> None:
        check_shape(self.k, self.n)
        if len(self.table) != self.k**self.n:
            raise ValueError(f"table length {len(self.table)} != k**n = {self.k ** self.n}")
        if any(v >= self.k for v in self.table):
            raise ValueError("table entry outside the alphabet")

    @classmethod
    def from_table(cls, k: int, n: int, values: Iterable[int]) -> "KFunction":
        return cls(k, n, bytes(values))

    @classmethod
    def from_map(cls, k: int, n: int, assignments: Mapping[Point, int], default: int = 0) -> "KFunction":
        check_shape(k, n)
        if not 0 <= default < k:
            raise ValueError(f"default value {default} outside the alphabet")
        table = bytearray([default]) * k**n
        for p, v in assignments.items():
            if len(p) != n:
                raise ValueError(f"point {p} has dimension {len(p)}, expected {n}")
            if not 0 <= v < k:
                raise ValueError(f"value {v} outside the alphabet")
            table[encode_point(p, k)] = v
        return cls(k, n, bytes(table))

    @classmethod
    def from_callable(cls, k: int, n: int, fn: Callable[[Point], int]) -> "KFunction":
        check_shape(k, n)
        return cls(k, n, bytes(fn(p) for p in all_points(k, n)))

    @classmethod
    def constant(cls, k: int, n: int, value: int = 0) -> "KFunction":
        check_shape(k, n)
        if not 0 <= value < k:
            raise ValueError(f"value {value} outside the alphabet")
        return cls(k, n, bytes([value]) * k**n)

    def value(self, p: Point) -> int:
        return self.table[encode_point(p, self.k)]

    def points(self) -> Iterator[Point]:
        return all_points(self.k, self.n)

    def support(self) -> frozenset[Point]:
        """Points where the function is nonzero."""
        return frozenset(p for p in self.points() if self.value(p) != 0)

    def attained_levels(self) -> tuple[int, ...]:
        """Nonzero values the function attains, ascending."""
        return tuple(sorted(set(self.table) - {0}))


def functions_equal(f: KFunction, g: KFunction) -> bool:
    """Pointwise table equality; mismatched shapes are an error, not False."""
    if f.k != g.k or f.n != g.n:
        raise ValueError("function shape mismatch")
    return f.table == g.table


class PartialKFunction:
    """Partially defined function: disjoint defined sets per value, rest undefined.

    Stored as a point -> value mapping over the defined points.  The zero
    level is a real defined set (a point mapped to 0 is "known zero"), unlike
    a point that is simply absent.
    """

    __slots__ = ("k", "n", "_items", "_map")

    def __init__(self, k: int, n: int, assignments: Mapping[Point, int]):
        check_shape(k, n)
        items = []
        for p, v in assignments.items():
            if len(p) != n:
                raise ValueError(f"point {p} has dimension {len(p)}, expected {n}")
            encode_point(p, k)  # validates coordinates
            if not 0 <= v < k:
                raise ValueError(f"value {v} outside the alphabet")
            items.append((tuple(p), v))
        self.k = k
        self.n = n
        self._items = tuple(sorted(items))
        self._map = dict(self._items)

    @classmethod
    def from_level_sets(cls, k: int, n: int, levels: Mapping[int, Iterable[Point]]) -> "PartialKFunction":
        """Build from per-value point sets; overlapping sets are an error."""
        assignments: dict[Point, int] = {}
        for v, pts in levels.items():
            for p in pts:
                p = tuple(p)
                if p in assignments:
                    raise ValueError(f"point {p} assigned to two defined sets")
                assignments[p] = v
        return cls(k, n, assignments)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartialKFunction):
            return NotImplemented
        return (self.k, self.n, self._items) == (other.k, other.n, other._items)

    def __hash__(self) -> int:
        return hash((self.k, self.n, self._items))

    def __repr__(self) -> str:
        return f"PartialKFunction(k={self.k}, n={self.n}, defined={len(self._items)})"

    def defined_points(self) -> tuple[Point, ...]:
        return tuple(p for p, _ in self._items)

    def value(self, p: Point) -> int | None:
        """Defined value at p, or None when p is undefined."""
        return self._map.get(tuple(p))

    def items(self) -> tuple[tuple[Point, int], ...]:
        return self._items

    def zero_set(self) -> frozenset[Point]:
        return frozenset(p for p, v in self._items if v == 0)

    def level_sets(self) -> tuple[tuple[int, frozenset[Point]], ...]:
        """Nonzero defined sets as (value, points), ascending by value."""
        by_value: dict[int, set[Point]] = {}
        for p, v in self._items:
            if v != 0:
                by_value.setdefault(v, set()).add(p)
        return tuple((v, frozenset(by_value[v])) for v in sorted(by_value))

    def is_total(self) -> bool:
        return len(self._items) == self.k**self.n

    def to_total(self) -> KFunction:
        """Conversion when every point is defined; error otherwise."""
        if not self.is_total():
            raise ValueError("function is not defined on the whole lattice")
        return KFunction.from_map(self.k, self.n, self._map)
