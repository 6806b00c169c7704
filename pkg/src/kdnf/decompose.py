"""Level decomposition of a total function into quasi-Boolean slices.

A function splits into one slice per attained nonzero value: the slice for
gamma takes the value gamma on the level set {p : f(p) = gamma} and 0
elsewhere, and the function is the pointwise max of its slices.  The
"maximum" representation replaces each level set with its carrier, the union
of that level set and every higher one; carriers are nested downward and are
the regions in which the reduced-DNF intervals of each level must live.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import KFunction, Point


@dataclass(frozen=True, slots=True)
class LevelDecomposition:
    """Per-level split: (gamma, level set) pairs in ascending gamma order."""

    k: int
    n: int
    levels: tuple[tuple[int, frozenset[Point]], ...]

    @property
    def gammas(self) -> tuple[int, ...]:
        """The nonzero values the function attains."""
        return tuple(g for g, _ in self.levels)

    def level_set(self, gamma: int) -> frozenset[Point]:
        for g, pts in self.levels:
            if g == gamma:
                return pts
        raise KeyError(f"level {gamma} not attained")


@dataclass(frozen=True, slots=True)
class MaxRepresentation:
    """Carriers (gamma, union of this and all higher level sets), ascending."""

    k: int
    n: int
    carriers: tuple[tuple[int, frozenset[Point]], ...]

    def carrier(self, gamma: int) -> frozenset[Point]:
        for g, pts in self.carriers:
            if g == gamma:
                return pts
        raise KeyError(f"level {gamma} not attained")


def decompose(f: KFunction) -> LevelDecomposition:
    """Split f into its quasi-Boolean level sets; unattained levels are omitted."""
    by_value: dict[int, set[Point]] = {}
    for p in f.points():
        v = f.value(p)
        if v != 0:
            by_value.setdefault(v, set()).add(p)
    levels = tuple((g, frozenset(by_value[g])) for g in sorted(by_value))
    return LevelDecomposition(f.k, f.n, levels)


def max_representation(d: LevelDecomposition) -> MaxRepresentation:
    """Carrier of each level = union of its own and all higher level sets."""
    carriers: list[tuple[int, frozenset[Point]]] = []
    acc: frozenset[Point] = frozenset()
    for g, pts in reversed(d.levels):
        acc = acc | pts
        carriers.append((g, acc))
    carriers.reverse()
    return MaxRepresentation(d.k, d.n, tuple(carriers))


def recompose(d: LevelDecomposition) -> KFunction:
    """Pointwise max of the slices; inverse of decompose."""
    values: dict[Point, int] = {}
    for g, pts in d.levels:
        for p in pts:
            values[p] = max(values.get(p, 0), g)
    return KFunction.from_map(d.k, d.n, values)
