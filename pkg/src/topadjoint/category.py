"""Closed(X) as a poset category and functors between such categories.

Objects are the closed sets of a space; there is one morphism ``U -> U'``
(the inclusion) when ``U`` is a subset of ``U'`` and none otherwise. A
functor is stored as an index table over ``closed_family``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, NamedTuple, Optional

from .errors import BijectionMissing, MalformedTable, NotClosed, SpaceMismatch
from .topology import FiniteSpace, Subset, _check_arity, is_subset


class HomSet(enum.Enum):
    EMPTY = "empty"
    SINGLETON_INCLUSION = "singleton_inclusion"

    def __bool__(self) -> bool:
        return self is HomSet.SINGLETON_INCLUSION


class Inclusion(NamedTuple):
    """The unique morphism ``src -> dst`` of a poset category (masks)."""

    src: int
    dst: int


def _closed_mask(space: FiniteSpace, s: Subset) -> int:
    _check_arity(space, s)
    if s.mask not in space.index:
        raise NotClosed(s.mask)
    return s.mask


def hom(space: FiniteSpace, u: Subset, up: Subset) -> HomSet:
    a = _closed_mask(space, u)
    b = _closed_mask(space, up)
    return HomSet.SINGLETON_INCLUSION if is_subset(a, b) else HomSet.EMPTY


def morphism(space: FiniteSpace, u: int, up: int) -> Inclusion:
    """The inclusion ``u -> up``; raises if the hom-set is empty."""
    for m in (u, up):
        if m not in space.index:
            raise NotClosed(m)
    if not is_subset(u, up):
        raise ValueError(f"hom({u}, {up}) is empty")
    return Inclusion(u, up)


def compose_morphisms(k: Inclusion, j: Inclusion) -> Inclusion:
    """``k . j`` for ``j: D -> E`` and ``k: E -> F``."""
    if j.dst != k.src:
        raise ValueError(f"cannot compose {k} after {j}")
    return Inclusion(j.src, k.dst)


@dataclass(frozen=True)
class MonotoneMap:
    """A functor ``Closed(source) -> Closed(target)``.

    ``table[i]`` is the index in ``target.closed_family`` of the image of
    ``source.closed_family[i]``. Monotonicity is not enforced here; use
    :func:`is_functor`.
    """

    source: FiniteSpace
    target: FiniteSpace
    table: tuple[int, ...]

    def __post_init__(self):
        table = tuple(self.table)
        object.__setattr__(self, "table", table)
        if len(table) != len(self.source.closed_family):
            raise MalformedTable(
                f"table has {len(table)} entries, source has "
                f"{len(self.source.closed_family)} closed sets"
            )
        size = len(self.target.closed_family)
        for i, t in enumerate(table):
            if not isinstance(t, int) or not 0 <= t < size:
                raise MalformedTable(f"entry {i} -> {t!r} is out of range")

    @classmethod
    def from_masks(
        cls, source: FiniteSpace, target: FiniteSpace, fn: Callable[[int], int]
    ) -> "MonotoneMap":
        """Build from a mask-level function; every image must be closed."""
        table = []
        for m in source.closed_family:
            img = fn(m)
            if img not in target.index:
                raise MalformedTable(f"image {img} of {m} is not closed in the target")
            table.append(target.index[img])
        return cls(source, target, tuple(table))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Image mask of each source closed set, in source order."""
        fam = self.target.closed_family
        return tuple(fam[t] for t in self.table)

    def apply_mask(self, mask: int) -> int:
        try:
            return self.masks[self.source.index[mask]]
        except KeyError:
            raise NotClosed(mask) from None

    def __call__(self, u: Subset) -> Subset:
        _check_arity(self.source, u)
        return Subset(self.apply_mask(u.mask), self.target.point_count)

    def fmap(self, f: Inclusion) -> Inclusion:
        """Action on morphisms. Raises if the image inclusion does not exist."""
        return morphism(self.target, self.apply_mask(f.src), self.apply_mask(f.dst))

    def pairs(self) -> list[tuple[int, int]]:
        return list(zip(self.source.closed_family, self.masks))


@dataclass(frozen=True)
class FunctorCheck:
    ok: bool
    witness: Optional[tuple[Subset, Subset]] = None

    def __bool__(self) -> bool:
        return self.ok


def is_functor(m: MonotoneMap) -> FunctorCheck:
    """Monotonicity check; on failure reports the first ``(U, U')`` with
    ``U <= U'`` but ``m(U) </= m(U')``, in ascending mask order."""
    fam = m.source.closed_family
    img = m.masks
    n = m.source.point_count
    for i, u in enumerate(fam):
        for j, up in enumerate(fam):
            if is_subset(u, up) and not is_subset(img[i], img[j]):
                return FunctorCheck(False, (Subset(u, n), Subset(up, n)))
    return FunctorCheck(True)


def identity_functor(space: FiniteSpace) -> MonotoneMap:
    return MonotoneMap(space, space, tuple(range(len(space.closed_family))))


def constant_functor(source: FiniteSpace, target: FiniteSpace, mask: int) -> MonotoneMap:
    return MonotoneMap.from_masks(source, target, lambda _: mask)


def compose(g: MonotoneMap, f: MonotoneMap) -> MonotoneMap:
    """``g . f``: apply ``f`` first."""
    if f.target != g.source:
        raise SpaceMismatch("compose: f.target differs from g.source")
    return MonotoneMap(f.source, g.target, tuple(g.table[i] for i in f.table))


def check_naturality(phi: MonotoneMap, psi: MonotoneMap) -> bool:
    """Verify both naturality squares for the hom-set bijection of (phi, psi).

    The bijection sends the inclusion ``phi(L) -> M`` to ``L -> psi(M)``.
    It is first shown to exist for every pair, then both equations are
    checked morphism by morphism.
    """
    from .adjunction import HomCaseKind, _check_directions, _classify

    _check_directions(phi, psi)
    X, Y = phi.source, phi.target
    for u in X.closed_family:
        pu = phi.apply_mask(u)
        for v in Y.closed_family:
            if _classify(pu, v, u, psi.apply_mask(v)) is HomCaseKind.NO_BIJECTION:
                raise BijectionMissing(u, v)

    def beta(r: Inclusion, L: int) -> Inclusion:
        # r: phi(L) -> M
        if r.src != phi.apply_mask(L):
            raise ValueError("beta applied to a morphism with the wrong source")
        return morphism(X, L, psi.apply_mask(r.dst))

    for L in X.closed_family:
        pl = phi.apply_mask(L)
        for M in Y.closed_family:
            if not is_subset(pl, M):
                continue
            r = Inclusion(pl, M)
            br = beta(r, L)
            for Mp in Y.closed_family:
                if not is_subset(M, Mp):
                    continue
                t = Inclusion(M, Mp)
                if beta(compose_morphisms(t, r), L) != compose_morphisms(psi.fmap(t), br):
                    return False
            for Lp in X.closed_family:
                if not is_subset(Lp, L):
                    continue
                s = Inclusion(Lp, L)
                if beta(compose_morphisms(r, phi.fmap(s)), Lp) != compose_morphisms(br, s):
                    return False
    return True
