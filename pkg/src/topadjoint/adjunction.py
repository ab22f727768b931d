"""Adjoint pairs between closed-set categories.

For poset categories a pair ``(phi, psi)`` is adjoint exactly when
``phi(U) <= V  <=>  U <= psi(V)`` for every closed ``U`` and ``V``. Each
hom-pair falls into one of three cases: both inclusions hold, neither
holds, or exactly one holds (no bijection between the hom-sets).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .category import MonotoneMap, compose, is_functor
from .errors import NotAdjointInput, NotClosed, SpaceMismatch
from .topology import Subset, _check_arity, is_subset


class HomCaseKind(enum.Enum):
    CASE1 = "case1"
    CASE2 = "case2"
    NO_BIJECTION = "no_bijection"


@dataclass(frozen=True)
class HomCase:
    kind: HomCaseKind
    phi_side: bool  # phi(U) <= V
    psi_side: bool  # U <= psi(V)


@dataclass(frozen=True)
class AdjunctionVerdict:
    adjoint: bool
    witness: Optional[tuple[Subset, Subset]] = None

    def __bool__(self) -> bool:
        return self.adjoint


def _check_directions(phi: MonotoneMap, psi: MonotoneMap) -> None:
    if psi.source != phi.target or psi.target != phi.source:
        raise SpaceMismatch("phi and psi must run in opposite directions between the same spaces")


def _classify(phi_u: int, v: int, u: int, psi_v: int) -> HomCaseKind:
    a = phi_u & ~v == 0
    b = u & ~psi_v == 0
    if a and b:
        return HomCaseKind.CASE1
    if not a and not b:
        return HomCaseKind.CASE2
    return HomCaseKind.NO_BIJECTION


def classify_hom_case(phi: MonotoneMap, psi: MonotoneMap, u: Subset, v: Subset) -> HomCase:
    _check_directions(phi, psi)
    _check_arity(phi.source, u)
    _check_arity(phi.target, v)
    for space, s in ((phi.source, u), (phi.target, v)):
        if s.mask not in space.index:
            raise NotClosed(s.mask)
    a = is_subset(phi.apply_mask(u.mask), v.mask)
    b = is_subset(u.mask, psi.apply_mask(v.mask))
    kind = _classify(phi.apply_mask(u.mask), v.mask, u.mask, psi.apply_mask(v.mask))
    return HomCase(kind, a, b)


def _first_violation(phi: MonotoneMap, psi: MonotoneMap) -> Optional[tuple[int, int]]:
    fam_x = phi.source.closed_family
    fam_y = phi.target.closed_family
    img = phi.masks
    back = psi.masks
    for i, u in enumerate(fam_x):
        pu = img[i]
        for j, v in enumerate(fam_y):
            if (pu & ~v == 0) != (u & ~back[j] == 0):
                return u, v
    return None


def is_adjoint(phi: MonotoneMap, psi: MonotoneMap) -> AdjunctionVerdict:
    """Decide whether ``phi`` is left adjoint to ``psi``.

    The witness on failure is the smallest violating ``(U, V)`` ordered by
    ``(U.mask, V.mask)``.
    """
    _check_directions(phi, psi)
    hit = _first_violation(phi, psi)
    if hit is None:
        return AdjunctionVerdict(True)
    u, v = hit
    return AdjunctionVerdict(
        False, (Subset(u, phi.source.point_count), Subset(v, phi.target.point_count))
    )


def try_right_adjoint(phi: MonotoneMap) -> Optional[MonotoneMap]:
    """Right adjoint of ``phi`` if one exists.

    The candidate sends ``V`` to the union of all closed ``U`` with
    ``phi(U) <= V``; it is accepted only if each union is closed and the
    pair passes :func:`is_adjoint`.
    """
    if not is_functor(phi):
        return None
    X, Y = phi.source, phi.target
    table = []
    for v in Y.closed_family:
        join = 0
        for u, pu in zip(X.closed_family, phi.masks):
            if pu & ~v == 0:
                join |= u
        if join not in X.index:
            return None
        table.append(X.index[join])
    psi = MonotoneMap(Y, X, tuple(table))
    return psi if is_adjoint(phi, psi) else None


def try_left_adjoint(psi: MonotoneMap) -> Optional[MonotoneMap]:
    """Dual of :func:`try_right_adjoint`: ``U`` goes to the meet of all
    closed ``V`` with ``U <= psi(V)``."""
    if not is_functor(psi):
        return None
    Y, X = psi.source, psi.target
    table = []
    for u in X.closed_family:
        meet = Y.full
        for v, pv in zip(Y.closed_family, psi.masks):
            if u & ~pv == 0:
                meet &= v
        if meet not in Y.index:
            return None
        table.append(Y.index[meet])
    phi = MonotoneMap(X, Y, tuple(table))
    return phi if is_adjoint(phi, psi) else None


def compose_adjunctions(
    p1: tuple[MonotoneMap, MonotoneMap], p2: tuple[MonotoneMap, MonotoneMap]
) -> tuple[MonotoneMap, MonotoneMap]:
    """Compose ``X -> Y`` (p1) with ``Y -> Z`` (p2) into an adjoint pair ``X -> Z``."""
    phi1, psi1 = p1
    phi2, psi2 = p2
    _check_directions(phi1, psi1)
    _check_directions(phi2, psi2)
    if phi2.source != phi1.target:
        raise SpaceMismatch("second pair must start where the first ends")
    for k, (phi, psi) in enumerate((p1, p2), 1):
        if not is_adjoint(phi, psi):
            raise NotAdjointInput(f"pair {k} is not adjoint")
    return compose(phi2, phi1), compose(psi1, psi2)
