"""Finite topological spaces stored as families of closed sets.

A space on ``n`` points is a sorted tuple of bitmasks; bit ``i`` of a mask
means point ``i`` is in the subset. Only pairwise union and intersection
are checked, which is enough for finite families.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

from .errors import (
    ArityMismatch,
    MaskOutOfRange,
    MissingEmptySet,
    MissingFullSet,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    UnsupportedSize,
)

MAX_ENUMERATION_POINTS = 4


def full_mask(n: int) -> int:
    return (1 << n) - 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def mask_points(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class Subset:
    """A subset of the points of some space, tagged with that space's size."""

    mask: int
    arity: int

    def __post_init__(self):
        if self.arity < 0:
            raise ValueError(f"negative arity {self.arity}")
        if self.mask < 0 or self.mask >> self.arity:
            raise MaskOutOfRange(self.mask, self.arity)

    def points(self) -> list[int]:
        return mask_points(self.mask)

    def __le__(self, other: "Subset") -> bool:
        if self.arity != other.arity:
            raise ArityMismatch(self.arity, other.arity)
        return is_subset(self.mask, other.mask)


@dataclass(frozen=True)
class FiniteSpace:
    """A finite topological space given by its closed sets.

    Build instances through :func:`validate_space` (or the other
    constructors in this module); the bare constructor does not check the
    topology axioms.
    """

    point_count: int
    closed_family: tuple[int, ...]
    point_labels: Optional[tuple[str, ...]] = None

    @property
    def full(self) -> int:
        return full_mask(self.point_count)

    @property
    def labels(self) -> tuple[str, ...]:
        if self.point_labels is not None:
            return self.point_labels
        return tuple(str(i) for i in range(self.point_count))

    @cached_property
    def index(self) -> dict[int, int]:
        """Position of each closed mask in ``closed_family``."""
        return {m: i for i, m in enumerate(self.closed_family)}

    @cached_property
    def closure_table(self) -> tuple[int, ...]:
        """Closure of every subset, indexed by mask."""
        table = []
        for s in range(1 << self.point_count):
            c = self.full
            for m in self.closed_family:
                if s & ~m == 0:
                    c &= m
            table.append(c)
        return tuple(table)

    def subset(self, points: Iterable[int] = ()) -> Subset:
        mask = 0
        for p in points:
            if not 0 <= p < self.point_count:
                raise MaskOutOfRange(1 << p if p >= 0 else p, self.point_count)
            mask |= 1 << p
        return Subset(mask, self.point_count)

    def make(self, mask: int) -> Subset:
        return Subset(mask, self.point_count)

    def closed_subsets(self) -> list[Subset]:
        return [Subset(m, self.point_count) for m in self.closed_family]

    def with_labels(self, labels: Optional[Sequence[str]]) -> "FiniteSpace":
        return FiniteSpace(
            self.point_count,
            self.closed_family,
            _check_labels(self.point_count, labels),
        )

    def __repr__(self) -> str:
        sets = ", ".join(format_mask(m, self.labels) for m in self.closed_family)
        return f"FiniteSpace(n={self.point_count}, closed=[{sets}])"


def format_mask(mask: int, labels: Sequence[str]) -> str:
    return "{" + ",".join(labels[i] for i in mask_points(mask)) + "}"


def _check_labels(n: int, labels: Optional[Sequence[str]]) -> Optional[tuple[str, ...]]:
    if labels is None:
        return None
    labels = tuple(labels)
    if len(labels) != n:
        raise ValueError(f"expected {n} labels, got {len(labels)}")
    if len(set(labels)) != n:
        raise ValueError(f"point labels are not distinct: {list(labels)}")
    return labels


def _check_arity(space: FiniteSpace, s: Subset) -> None:
    if s.arity != space.point_count:
        raise ArityMismatch(space.point_count, s.arity)


def validate_space(
    n: int, family: Iterable[int], labels: Optional[Sequence[str]] = None
) -> FiniteSpace:
    """Check the closed-set axioms and return the canonical space.

    Duplicates are dropped and masks sorted ascending. The first failing
    pair (in ascending order) is reported for union/intersection failures.
    """
    if n < 0:
        raise ValueError(f"point count must be non-negative, got {n}")
    full = full_mask(n)
    masks = sorted(set(family))
    for m in masks:
        if m < 0 or m > full:
            raise MaskOutOfRange(m, n)
    present = set(masks)
    if 0 not in present:
        raise MissingEmptySet()
    if full not in present:
        raise MissingFullSet(full)
    for a, b in combinations(masks, 2):
        if a | b not in present:
            raise NotClosedUnderUnion(a, b)
    for a, b in combinations(masks, 2):
        if a & b not in present:
            raise NotClosedUnderIntersection(a, b)
    return FiniteSpace(n, tuple(masks), _check_labels(n, labels))


def from_open_family(
    n: int, opens: Iterable[int], labels: Optional[Sequence[str]] = None
) -> FiniteSpace:
    full = full_mask(n)
    opens = list(opens)
    for m in opens:
        if m < 0 or m > full:
            raise MaskOutOfRange(m, n)
    return validate_space(n, [full & ~m for m in opens], labels)


def closure(space: FiniteSpace, s: Subset) -> Subset:
    """Smallest closed set containing ``s``."""
    _check_arity(space, s)
    return Subset(space.closure_table[s.mask], space.point_count)


def is_closed(space: FiniteSpace, s: Subset) -> bool:
    _check_arity(space, s)
    return s.mask in space.index


def generate_from_closed_subbasis(
    n: int, seeds: Iterable[int], labels: Optional[Sequence[str]] = None
) -> FiniteSpace:
    """Smallest topology whose closed sets include ``seeds``."""
    full = full_mask(n)
    family = {0, full}
    for m in seeds:
        if m < 0 or m > full:
            raise MaskOutOfRange(m, n)
        family.add(m)
    while True:
        new = set()
        for a, b in combinations(sorted(family), 2):
            for c in (a | b, a & b):
                if c not in family:
                    new.add(c)
        if not new:
            break
        family |= new
    return validate_space(n, family, labels)


def family_code(space: FiniteSpace) -> int:
    """Canonical integer encoding: bit ``m`` set iff mask ``m`` is closed."""
    code = 0
    for m in space.closed_family:
        code |= 1 << m
    return code


@lru_cache(maxsize=None)
def _spaces(n: int) -> tuple[FiniteSpace, ...]:
    full = full_mask(n)
    if n == 0:
        return (FiniteSpace(0, (0,)),)
    # Every topology contains 0 and full; choose the rest from the middle masks.
    middle = list(range(1, full))
    out = []
    for choice in range(1 << len(middle)):
        family = [0]
        family.extend(m for j, m in enumerate(middle) if choice >> j & 1)
        family.append(full)
        present = set(family)
        if _closed_under_ops(family, present):
            out.append(FiniteSpace(n, tuple(family)))
    # Ascending choice bits give ascending family codes.
    return tuple(out)


def _closed_under_ops(family: list[int], present: set[int]) -> bool:
    for i, a in enumerate(family):
        for b in family[i + 1:]:
            if a | b not in present or a & b not in present:
                return False
    return True


def enumerate_spaces(n: int) -> Iterator[FiniteSpace]:
    """Every topology on ``n`` labeled points, ordered by :func:`family_code`."""
    if n < 0 or n > MAX_ENUMERATION_POINTS:
        raise UnsupportedSize(
            f"enumerate_spaces supports 0 <= n <= {MAX_ENUMERATION_POINTS}, got {n}"
        )
    return iter(_spaces(n))


def indiscrete(n: int, labels: Optional[Sequence[str]] = None) -> FiniteSpace:
    return validate_space(n, [0, full_mask(n)], labels)


def discrete(n: int, labels: Optional[Sequence[str]] = None) -> FiniteSpace:
    return validate_space(n, range(1 << n), labels)


def sierpinski(labels: Optional[Sequence[str]] = None) -> FiniteSpace:
    """Two points; closed sets are the empty set, ``{1}`` and everything."""
    return validate_space(2, [0b00, 0b10, 0b11], labels)
