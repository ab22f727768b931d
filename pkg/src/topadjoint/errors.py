"""Exception types raised across the package.

Every error subclasses :class:`TopologyError`, which is a ``ValueError`` so
callers that only care about "bad input" can catch the builtin.
"""

from __future__ import annotations


class TopologyError(ValueError):
    """Base class for all package errors."""

    code = "topology_error"

    def to_dict(self) -> dict:
        return {"error": self.code, "message": str(self)}


class MaskOutOfRange(TopologyError):
    code = "mask_out_of_range"

    def __init__(self, mask: int, n: int):
        self.mask = mask
        self.n = n
        super().__init__(f"mask {mask} does not fit in {n} points")


class MissingEmptySet(TopologyError):
    code = "missing_empty_set"

    def __init__(self):
        super().__init__("closed family does not contain the empty set")


class MissingFullSet(TopologyError):
    code = "missing_full_set"

    def __init__(self, full: int):
        self.full = full
        super().__init__(f"closed family does not contain the full set ({full})")


class _PairError(TopologyError):
    op = ""

    def __init__(self, a: int, b: int):
        self.a = a
        self.b = b
        super().__init__(f"closed family is not closed under {self.op}: {a}, {b}")

    def to_dict(self) -> dict:
        d = super().to_dict()
        d["pair"] = [self.a, self.b]
        return d


class NotClosedUnderUnion(_PairError):
    code = "not_closed_under_union"
    op = "union"


class NotClosedUnderIntersection(_PairError):
    code = "not_closed_under_intersection"
    op = "intersection"


class ArityMismatch(TopologyError):
    code = "arity_mismatch"

    def __init__(self, expected: int, got: int):
        self.expected = expected
        self.got = got
        super().__init__(f"subset has arity {got}, space has {expected} points")


class UnsupportedSize(TopologyError):
    code = "unsupported_size"


class NotClosed(TopologyError):
    code = "not_closed"

    def __init__(self, mask: int):
        self.mask = mask
        super().__init__(f"subset {mask} is not closed")


class SpaceMismatch(TopologyError):
    code = "space_mismatch"


class MalformedTable(TopologyError):
    code = "malformed_table"


class MalformedFunction(TopologyError):
    code = "malformed_function"


class BijectionMissing(TopologyError):
    """Raised when some hom-pair falls outside both cases of the dichotomy."""

    code = "bijection_missing"

    def __init__(self, u: int, v: int):
        self.u = u
        self.v = v
        super().__init__(f"no hom-set bijection at U={u}, V={v}")


class NotAdjointInput(TopologyError):
    code = "not_adjoint_input"


class TheoremViolation(TopologyError):
    """Continuity and adjointness disagreed. Indicates an implementation bug."""

    code = "theorem_violation"


class ParseError(TopologyError):
    code = "parse_error"
