"""Exhaustive check of the continuity/adjointness equivalence on small spaces.

Work is split into units ``(n_x, x_index, n_y)``: one domain space against
every codomain space of one size. Units are independent and their results
are merged in canonical order, so the report does not depend on the number
of worker processes.
"""

from __future__ import annotations

import itertools
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterator, Optional

from . import continuity
from ._kernel import block_verdicts
from .continuity import SetFunction, check_ddag, is_continuous
from .errors import TheoremViolation, UnsupportedSize
from .topology import FiniteSpace, Subset, enumerate_spaces

log = logging.getLogger(__name__)

ENGINES = ("auto", "reference", "vectorized")


def enumerate_functions(X: FiniteSpace, Y: FiniteSpace) -> Iterator[SetFunction]:
    """All ``|Y|**|X|`` maps, lexicographic in the point images."""
    for mapping in itertools.product(range(Y.point_count), repeat=X.point_count):
        yield SetFunction(X, Y, mapping)


@dataclass
class Mismatch:
    n_x: int
    x_index: int
    n_y: int
    y_index: int
    mapping: list[int]
    message: str


@dataclass
class BlockStats:
    n_x: int
    n_y: int
    spaces_x: int
    spaces_y: int
    functions: int = 0
    continuous: int = 0


@dataclass
class CampaignReport:
    max_points: int
    include_four: bool
    spaces_checked: dict[int, int]
    functions_checked: int
    continuous_count: int
    mismatches: list[Mismatch]
    blocks: list[BlockStats]
    elapsed: float = 0.0
    engine: str = "auto"

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self, with_elapsed: bool = True) -> dict:
        d = {
            "max_points": self.max_points,
            "include_four": self.include_four,
            "engine": self.engine,
            "spaces_checked": {str(n): c for n, c in self.spaces_checked.items()},
            "functions_checked": self.functions_checked,
            "continuous_count": self.continuous_count,
            "mismatches": [asdict(m) for m in self.mismatches],
            "blocks": [asdict(b) for b in self.blocks],
        }
        if with_elapsed:
            d["elapsed"] = round(self.elapsed, 3)
        return d


@dataclass
class _UnitResult:
    n_x: int
    n_y: int
    functions: int = 0
    continuous: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)


def _check_one(phi: SetFunction) -> Optional[str]:
    try:
        report = continuity.verify_theorem(phi)
    except TheoremViolation as exc:
        return str(exc)
    if not report.agree:
        return "report does not agree"
    return None


def _run_reference(n_x: int, xi: int, n_y: int) -> _UnitResult:
    X = _space(n_x, xi)
    res = _UnitResult(n_x, n_y)
    for yi, Y in enumerate(enumerate_spaces(n_y)):
        for phi in enumerate_functions(X, Y):
            res.functions += 1
            try:
                report = continuity.verify_theorem(phi)
            except TheoremViolation as exc:
                res.mismatches.append(Mismatch(n_x, xi, n_y, yi, list(phi.mapping), str(exc)))
                continue
            res.continuous += report.continuous
    return res


def _run_vectorized(n_x: int, xi: int, n_y: int) -> _UnitResult:
    X = _space(n_x, xi)
    ys = list(enumerate_spaces(n_y))
    res = _UnitResult(n_x, n_y)
    mappings, cont, adj = block_verdicts(X, ys)
    res.functions = cont.size
    res.continuous = int(cont.sum())
    for f, yi in zip(*(cont != adj).nonzero()):
        phi = SetFunction(X, ys[yi], mappings[f])
        msg = _check_one(phi) or "vectorized kernel disagreed with the reference check"
        res.mismatches.append(Mismatch(n_x, xi, n_y, int(yi), list(phi.mapping), msg))
    res.mismatches.sort(key=lambda m: (m.y_index, m.mapping))
    return res


def _space(n: int, i: int) -> FiniteSpace:
    return list(enumerate_spaces(n))[i]


def _run_unit(unit: tuple[int, int, int, str]) -> _UnitResult:
    n_x, xi, n_y, engine = unit
    if engine == "vectorized":
        return _run_vectorized(n_x, xi, n_y)
    return _run_reference(n_x, xi, n_y)


def _check_size(max_points: int, include_four: bool) -> None:
    if max_points == 4 and include_four:
        return
    if not 1 <= max_points <= 3:
        hint = " (4 requires include_four)" if max_points == 4 else ""
        raise UnsupportedSize(f"max_points must be in 1..3{hint}, got {max_points}")


def run_campaign(
    max_points: int,
    include_four: bool = False,
    workers: int = 1,
    engine: str = "auto",
) -> CampaignReport:
    """Verify the equivalence for every function between every pair of
    spaces on at most ``max_points`` points.

    ``engine="reference"`` runs :func:`~topadjoint.continuity.verify_theorem`
    on each function. ``"vectorized"`` evaluates whole blocks with numpy and
    falls back to the reference check on any disagreement. ``"auto"`` uses
    the reference path unless a block touches a 4-point space.
    """
    _check_size(max_points, include_four)
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}; choose from {ENGINES}")
    start = time.perf_counter()
    sizes = range(max_points + 1)
    counts = {n: sum(1 for _ in enumerate_spaces(n)) for n in sizes}

    units = []
    for n_x in sizes:
        for n_y in sizes:
            if engine == "auto":
                unit_engine = "vectorized" if max(n_x, n_y) >= 4 else "reference"
            else:
                unit_engine = engine
            for xi in range(counts[n_x]):
                units.append((n_x, xi, n_y, unit_engine))

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_unit, units, chunksize=max(1, len(units) // (8 * workers))))
    else:
        results = [_run_unit(u) for u in units]

    blocks = {
        (a, b): BlockStats(a, b, counts[a], counts[b]) for a in sizes for b in sizes
    }
    mismatches: list[Mismatch] = []
    for r in results:
        b = blocks[r.n_x, r.n_y]
        b.functions += r.functions
        b.continuous += r.continuous
        mismatches.extend(r.mismatches)
    block_list = list(blocks.values())
    report = CampaignReport(
        max_points=max_points,
        include_four=include_four,
        spaces_checked=counts,
        functions_checked=sum(b.functions for b in block_list),
        continuous_count=sum(b.continuous for b in block_list),
        mismatches=mismatches,
        blocks=block_list,
        elapsed=time.perf_counter() - start,
        engine=engine,
    )
    log.info(
        "campaign max_points=%d: %d functions, %d continuous, %d mismatches in %.2fs",
        max_points, report.functions_checked, report.continuous_count,
        len(mismatches), report.elapsed,
    )
    return report


@dataclass(frozen=True)
class GalleryEntry:
    function: SetFunction
    continuity_witness: Subset
    ddag_pair: tuple[Subset, Subset]


def find_discontinuous_gallery(max_points: int, limit: int) -> list[GalleryEntry]:
    """The first ``limit`` discontinuous functions in campaign order, each
    with its failing closed set ``V`` and the pair ``(cl(phi^-1(V)), V)``."""
    if not 0 <= max_points <= 3:
        raise UnsupportedSize(f"gallery supports max_points <= 3, got {max_points}")
    out: list[GalleryEntry] = []
    if limit <= 0:
        return out
    sizes = range(max_points + 1)
    for n_x in sizes:
        for n_y in sizes:
            for X in enumerate_spaces(n_x):
                for Y in enumerate_spaces(n_y):
                    for phi in enumerate_functions(X, Y):
                        verdict = is_continuous(phi)
                        if verdict:
                            continue
                        v = verdict.witness
                        u = X.closure_table[phi.preimage_mask(v.mask)]
                        out.append(GalleryEntry(phi, v, (Subset(u, n_x), v)))
                        if len(out) == limit:
                            return out
    return out


def gallery_self_check(entries: list[GalleryEntry]) -> bool:
    """Each entry must be discontinuous and fail the closed-preimage implication."""
    for e in entries:
        if is_continuous(e.function) or check_ddag(e.function):
            return False
        u, v = e.ddag_pair
        if e.function.image_mask(u.mask) & ~v.mask == 0:
            return False
    return True
