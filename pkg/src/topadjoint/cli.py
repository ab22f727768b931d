"""Command line front end.

Exit status: 0 when the property holds (or the input is valid), 1 when it
fails, 2 for invalid input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Optional, Sequence

from . import io
from .adjunction import is_adjoint
from .campaign import find_discontinuous_gallery, run_campaign
from .continuity import induced_direct, induced_inverse, is_continuous, verify_theorem
from .errors import TopologyError
from .topology import closure

OK, FAILS, INVALID = 0, 1, 2


def _fmt(mask: int, labels) -> str:
    return "{" + ",".join(io.labels_of(mask, labels)) + "}"


def _emit_json(obj) -> None:
    print(json.dumps(obj, ensure_ascii=False))


def cmd_validate(args) -> int:
    space = io.space_from_json(io.load_json(args.file))
    if args.json:
        _emit_json({"valid": True, **io.space_to_json(space)})
    else:
        lab = space.labels
        print(f"valid: {space.point_count} points, {len(space.closed_family)} closed sets")
        print("closed sets: " + ", ".join(_fmt(m, lab) for m in space.closed_family))
    return OK


def cmd_closure(args) -> int:
    space = io.space_from_json(io.load_json(args.file))
    s = io.parse_label_list(args.set, space)
    c = closure(space, s)
    names = io.labels_of(c.mask, space.labels)
    if args.json:
        _emit_json({"set": io.labels_of(s.mask, space.labels), "closure": names})
    else:
        print(",".join(names))
    return OK


def cmd_continuity(args) -> int:
    phi = io.function_from_json(io.load_json(args.file))
    v = is_continuous(phi)
    if args.json:
        _emit_json(io.continuity_verdict_to_json(v, phi))
    elif v:
        print("continuous")
    else:
        V = v.witness.mask
        print("not continuous")
        print(f"witness V: {_fmt(V, phi.codomain.labels)}")
        print(f"preimage: {_fmt(phi.preimage_mask(V), phi.domain.labels)} (not closed)")
    return OK if v else FAILS


def cmd_adjoint(args) -> int:
    phi = io.function_from_json(io.load_json(args.file))
    direct, inverse = induced_direct(phi), induced_inverse(phi)
    v = is_adjoint(direct, inverse)
    if args.json:
        _emit_json(io.adjunction_verdict_to_json(v, direct))
    elif v:
        print("adjoint")
    else:
        U, V = v.witness[0].mask, v.witness[1].mask
        xl, yl = phi.domain.labels, phi.codomain.labels
        print("not adjoint")
        print(f"witness U: {_fmt(U, xl)}")
        print(f"witness V: {_fmt(V, yl)}")
        print(f"T_phi(U) = {_fmt(direct.apply_mask(U), yl)}, T^phi(V) = {_fmt(inverse.apply_mask(V), xl)}")
    return OK if v else FAILS


def cmd_induced(args) -> int:
    phi = io.function_from_json(io.load_json(args.file))
    direct, inverse = induced_direct(phi), induced_inverse(phi)
    if args.json:
        _emit_json({
            "direct": io.monotone_map_to_json(direct)["table"],
            "inverse": io.monotone_map_to_json(inverse)["table"],
        })
        return OK
    for name, m in (("T_phi", direct), ("T^phi", inverse)):
        print(f"{name}:")
        for u, img in m.pairs():
            print(f"  {_fmt(u, m.source.labels)} -> {_fmt(img, m.target.labels)}")
    return OK


def cmd_verify_one(args) -> int:
    phi = io.function_from_json(io.load_json(args.file))
    report = verify_theorem(phi)
    if args.json:
        _emit_json(io.theorem_report_to_json(report, phi))
    else:
        xl, yl = phi.domain.labels, phi.codomain.labels
        yes = {True: "yes", False: "no"}
        print(f"continuous: {yes[report.continuous]}")
        print(f"adjoint: {yes[report.adjoint]}")
        print(f"agree: {yes[report.agree]}")
        if report.continuity_witness is not None:
            print(f"continuity witness V: {_fmt(report.continuity_witness.mask, yl)}")
        if report.adjunction_witness is not None:
            U, V = report.adjunction_witness
            print(f"adjunction witness U: {_fmt(U.mask, xl)}, V: {_fmt(V.mask, yl)}")
        if report.converse_witness is not None:
            U, V = report.converse_witness
            print(f"converse witness U: {_fmt(U.mask, xl)}, V: {_fmt(V.mask, yl)}")
    return OK if report.continuous else FAILS


def cmd_campaign(args) -> int:
    report = run_campaign(
        args.max_points, include_four=args.include_4, workers=args.workers, engine=args.engine
    )
    gallery = find_discontinuous_gallery(min(args.max_points, 3), args.gallery) if args.gallery else []
    if args.json:
        out = report.to_dict()
        if args.gallery:
            out["gallery"] = [
                {
                    "function": io.function_to_json(e.function),
                    "V": io.labels_of(e.continuity_witness.mask, e.function.codomain.labels),
                    "U": io.labels_of(e.ddag_pair[0].mask, e.function.domain.labels),
                }
                for e in gallery
            ]
        _emit_json(out)
    else:
        print(f"{'n_x':>3} {'n_y':>3} {'spaces_x':>8} {'spaces_y':>8} {'functions':>10} {'continuous':>10}")
        for b in report.blocks:
            print(f"{b.n_x:>3} {b.n_y:>3} {b.spaces_x:>8} {b.spaces_y:>8} {b.functions:>10} {b.continuous:>10}")
        print("spaces per size: " + ", ".join(f"{n}:{c}" for n, c in report.spaces_checked.items()))
        print(f"functions checked: {report.functions_checked}")
        print(f"continuous: {report.continuous_count}")
        print(f"mismatches: {len(report.mismatches)}")
        for m in report.mismatches[:20]:
            print(f"  ({m.n_x}#{m.x_index} -> {m.n_y}#{m.y_index}) {m.mapping}: {m.message}")
        print(f"elapsed: {report.elapsed:.2f}s")
        for e in gallery:
            phi = e.function
            xl, yl = phi.domain.labels, phi.codomain.labels
            print(
                f"gallery: X={[_fmt(m, xl) for m in phi.domain.closed_family]} "
                f"Y={[_fmt(m, yl) for m in phi.codomain.closed_family]} map={list(phi.mapping)} "
                f"V={_fmt(e.continuity_witness.mask, yl)} U={_fmt(e.ddag_pair[0].mask, xl)}"
            )
    return OK if report.ok else FAILS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="topadjoint",
        description="Finite topologies, closed-set categories and continuity as adjointness.",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("-v", "--verbose", action="store_true")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="validate a space file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("closure", parents=[common], help="closure of a subset")
    p.add_argument("file")
    p.add_argument("--set", required=True, help='comma-separated labels; "" for the empty set')
    p.set_defaults(func=cmd_closure)

    for name, func, text in (
        ("continuity", cmd_continuity, "is the function continuous"),
        ("adjoint", cmd_adjoint, "are the induced functors adjoint"),
        ("induced", cmd_induced, "print the induced functor tables"),
        ("verify-one", cmd_verify_one, "full report for one function"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("file")
        p.set_defaults(func=func)

    p = sub.add_parser("campaign", parents=[common], help="exhaustive check over small spaces")
    p.add_argument("--max-points", type=int, default=3)
    p.add_argument("--include-4", action="store_true", help="allow --max-points 4")
    p.add_argument("--gallery", type=int, default=0, metavar="K", help="list K discontinuous examples")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--engine", choices=["auto", "reference", "vectorized"], default="auto")
    p.set_defaults(func=cmd_campaign)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INVALID if exc.code else OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except TopologyError as exc:
        if args.json:
            _emit_json(exc.to_dict())
        else:
            print(f"error: {exc}", file=sys.stderr)
        return INVALID


if __name__ == "__main__":
    sys.exit(main())
