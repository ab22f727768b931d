"""Set functions between finite spaces and the functors they induce.

A function ``phi: X -> Y`` gives two monotone maps on closed sets:
``T_phi(U) = cl(phi(U))`` and ``T^phi(V) = cl(phi^-1(V))``. The pair is
adjoint exactly when ``phi`` is continuous; :func:`verify_theorem` checks
that on one function and cross-checks the intermediate conditions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .adjunction import is_adjoint
from .category import MonotoneMap
from .errors import MalformedFunction, NotClosed, TheoremViolation
from .topology import FiniteSpace, Subset, _check_arity, is_subset


@dataclass(frozen=True)
class SetFunction:
    """A total map from the points of ``domain`` to the points of ``codomain``."""

    domain: FiniteSpace
    codomain: FiniteSpace
    mapping: tuple[int, ...]

    def __post_init__(self):
        mapping = tuple(self.mapping)
        object.__setattr__(self, "mapping", mapping)
        if len(mapping) != self.domain.point_count:
            raise MalformedFunction(
                f"mapping has {len(mapping)} entries, domain has {self.domain.point_count} points"
            )
        m = self.codomain.point_count
        for i, y in enumerate(mapping):
            if not isinstance(y, int) or not 0 <= y < m:
                raise MalformedFunction(f"point {i} maps to {y!r}, outside 0..{m - 1}")

    @cached_property
    def _point_bits(self) -> tuple[int, ...]:
        return tuple(1 << y for y in self.mapping)

    def image_mask(self, mask: int) -> int:
        out = 0
        for i, bit in enumerate(self._point_bits):
            if mask >> i & 1:
                out |= bit
        return out

    def preimage_mask(self, mask: int) -> int:
        out = 0
        for i, y in enumerate(self.mapping):
            if mask >> y & 1:
                out |= 1 << i
        return out

    def __call__(self, point: int) -> int:
        return self.mapping[point]

    @cached_property
    def induced(self) -> tuple[MonotoneMap, MonotoneMap]:
        """``(T_phi, T^phi)``, built once per function."""
        return induced_direct(self), induced_inverse(self)


def identity_function(space: FiniteSpace) -> SetFunction:
    return SetFunction(space, space, tuple(range(space.point_count)))


def image(phi: SetFunction, s: Subset) -> Subset:
    _check_arity(phi.domain, s)
    return Subset(phi.image_mask(s.mask), phi.codomain.point_count)


def preimage(phi: SetFunction, t: Subset) -> Subset:
    _check_arity(phi.codomain, t)
    return Subset(phi.preimage_mask(t.mask), phi.domain.point_count)


@dataclass(frozen=True)
class ContinuityVerdict:
    continuous: bool
    witness: Optional[Subset] = None  # closed V whose preimage is not closed

    def __bool__(self) -> bool:
        return self.continuous


@dataclass(frozen=True)
class DdagVerdict:
    holds: bool
    witness: Optional[tuple[Subset, Subset]] = None

    def __bool__(self) -> bool:
        return self.holds


def is_continuous(phi: SetFunction) -> ContinuityVerdict:
    """Preimages of closed sets must be closed; reports the smallest failing V."""
    closed_x = phi.domain.index
    for v in phi.codomain.closed_family:
        if phi.preimage_mask(v) not in closed_x:
            return ContinuityVerdict(False, Subset(v, phi.codomain.point_count))
    return ContinuityVerdict(True)


def induced_direct(phi: SetFunction) -> MonotoneMap:
    """``U -> cl(phi(U))`` on closed sets of the domain."""
    X, Y = phi.domain, phi.codomain
    cl, idx = Y.closure_table, Y.index
    return MonotoneMap(X, Y, tuple(idx[cl[phi.image_mask(u)]] for u in X.closed_family))


def induced_inverse(phi: SetFunction) -> MonotoneMap:
    """``V -> cl(phi^-1(V))`` on closed sets of the codomain."""
    X, Y = phi.domain, phi.codomain
    cl, idx = X.closure_table, X.index
    return MonotoneMap(Y, X, tuple(idx[cl[phi.preimage_mask(v)]] for v in Y.closed_family))


def check_ddag(phi: SetFunction) -> DdagVerdict:
    """``U <= cl(phi^-1(V))`` must imply ``phi(U) <= V`` for all closed U, V."""
    X, Y = phi.domain, phi.codomain
    cl = X.closure_table
    back = [cl[phi.preimage_mask(v)] for v in Y.closed_family]
    for u in X.closed_family:
        fu = phi.image_mask(u)
        for v, bv in zip(Y.closed_family, back):
            if is_subset(u, bv) and not is_subset(fu, v):
                return DdagVerdict(False, (Subset(u, X.point_count), Subset(v, Y.point_count)))
    return DdagVerdict(True)


def _closed_pair(phi: SetFunction, u: Subset, v: Subset) -> None:
    _check_arity(phi.domain, u)
    _check_arity(phi.codomain, v)
    if u.mask not in phi.domain.index:
        raise NotClosed(u.mask)
    if v.mask not in phi.codomain.index:
        raise NotClosed(v.mask)


def proof_conditions(phi: SetFunction, u: Subset, v: Subset) -> tuple[bool, bool, bool]:
    """Pointwise biconditionals at one closed pair ``(U, V)``.

    Returns ``(c2, c3, c4)``:

    * c2: ``T_phi(U) <= V``  iff  ``U <= T^phi(V)``
    * c3: ``cl(phi(U)) <= V``  iff  ``U <= cl(phi^-1(V))``
    * c4: ``phi(U) <= V``  iff  ``U <= cl(phi^-1(V))``

    c2 goes through the functor tables, c3 and c4 through raw closures.
    """
    _closed_pair(phi, u, v)
    X, Y = phi.domain, phi.codomain
    U, V = u.mask, v.mask
    direct, inverse = phi.induced
    c2 = is_subset(direct.apply_mask(U), V) == is_subset(U, inverse.apply_mask(V))
    fu = phi.image_mask(U)
    cl_pre = X.closure_table[phi.preimage_mask(V)]
    c3 = is_subset(Y.closure_table[fu], V) == is_subset(U, cl_pre)
    c4 = is_subset(fu, V) == is_subset(U, cl_pre)
    return c2, c3, c4


def forward_inclusion_lemma(phi: SetFunction, u: Subset, v: Subset) -> bool:
    """``phi(U) <= V`` implies ``U <= cl(phi^-1(V))``. Holds for every phi."""
    _closed_pair(phi, u, v)
    if not is_subset(phi.image_mask(u.mask), v.mask):
        return True
    return is_subset(u.mask, phi.domain.closure_table[phi.preimage_mask(v.mask)])


@dataclass(frozen=True)
class TheoremReport:
    continuous: bool
    adjoint: bool
    agree: bool
    continuity_witness: Optional[Subset] = None
    adjunction_witness: Optional[tuple[Subset, Subset]] = None
    converse_witness: Optional[tuple[Subset, Subset]] = None


def verify_theorem(phi: SetFunction) -> TheoremReport:
    """Check that ``phi`` is continuous iff ``(T_phi, T^phi)`` is adjoint.

    Also cross-checks the equivalent formulations and, for a discontinuous
    ``phi``, rebuilds the pair ``(cl(phi^-1(V)), V)`` from the continuity
    witness and confirms it breaks the implication checked by
    :func:`check_ddag`. Any disagreement raises :class:`TheoremViolation`.
    """
    X, Y = phi.domain, phi.codomain
    cont = is_continuous(phi)
    direct, inverse = induced_direct(phi), induced_inverse(phi)
    adj = is_adjoint(direct, inverse)
    ddag = check_ddag(phi)

    problems = []
    if cont.continuous != adj.adjoint:
        problems.append(f"continuous={cont.continuous} but adjoint={adj.adjoint}")
    if ddag.holds != adj.adjoint:
        problems.append(f"ddag={ddag.holds} but adjoint={adj.adjoint}")
    elif ddag.witness != adj.witness:
        problems.append(f"witnesses differ: ddag {ddag.witness}, adjoint {adj.witness}")
    exact = all(
        inverse.apply_mask(v) == phi.preimage_mask(v) for v in Y.closed_family
    )
    if exact != cont.continuous:
        problems.append(f"T^phi equals preimage: {exact}, continuous={cont.continuous}")

    converse = None
    if not cont.continuous:
        v = cont.witness.mask
        u = X.closure_table[phi.preimage_mask(v)]
        converse = (Subset(u, X.point_count), cont.witness)
        if is_subset(phi.image_mask(u), v):
            problems.append(f"converse pair ({u}, {v}) does not break the implication")
    if problems:
        raise TheoremViolation(f"{phi.mapping}: " + "; ".join(problems))

    return TheoremReport(
        continuous=cont.continuous,
        adjoint=adj.adjoint,
        agree=True,
        continuity_witness=cont.witness,
        adjunction_witness=adj.witness,
        converse_witness=converse,
    )

