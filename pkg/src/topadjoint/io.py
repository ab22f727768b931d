"""JSON encoding of spaces, functions, functors and verdicts.

Points are referred to by label everywhere in the JSON formats; a subset is
a list of labels and is emitted in point order.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Optional, Sequence, Union

from .adjunction import AdjunctionVerdict
from .category import MonotoneMap
from .continuity import ContinuityVerdict, SetFunction, TheoremReport
from .errors import ParseError
from .topology import FiniteSpace, Subset, from_open_family, mask_points, validate_space


def labels_of(mask: int, labels: Sequence[str]) -> list[str]:
    return [labels[i] for i in mask_points(mask)]


def mask_from_labels(names: Sequence[str], labels: Sequence[str]) -> int:
    where = {name: i for i, name in enumerate(labels)}
    mask = 0
    for name in names:
        if not isinstance(name, str) or name not in where:
            raise ParseError(f"unknown point {name!r}; points are {list(labels)}")
        mask |= 1 << where[name]
    return mask


def parse_label_list(text: str, space: FiniteSpace) -> Subset:
    """``"a,b"`` to a subset; the empty string is the empty set."""
    names = [t.strip() for t in text.split(",")] if text.strip() else []
    return Subset(mask_from_labels(names, space.labels), space.point_count)


def space_from_json(obj: Any) -> FiniteSpace:
    if not isinstance(obj, dict):
        raise ParseError("space must be a JSON object")
    points = obj.get("points")
    if not isinstance(points, list) or not all(isinstance(p, str) for p in points):
        raise ParseError('space needs "points": a list of strings')
    if len(set(points)) != len(points):
        raise ParseError(f"duplicate point labels in {points}")
    has_closed, has_open = "closed_sets" in obj, "open_sets" in obj
    if has_closed == has_open:
        raise ParseError('space needs exactly one of "closed_sets" or "open_sets"')
    key = "closed_sets" if has_closed else "open_sets"
    sets = obj[key]
    if not isinstance(sets, list) or not all(isinstance(s, list) for s in sets):
        raise ParseError(f'"{key}" must be a list of label lists')
    masks = [mask_from_labels(s, points) for s in sets]
    build = validate_space if has_closed else from_open_family
    return build(len(points), masks, points)


def space_to_json(space: FiniteSpace) -> dict:
    labels = space.labels
    return {
        "points": list(labels),
        "closed_sets": [labels_of(m, labels) for m in space.closed_family],
    }


def function_from_json(obj: Any) -> SetFunction:
    if not isinstance(obj, dict):
        raise ParseError("function must be a JSON object")
    for key in ("domain", "codomain", "map"):
        if key not in obj:
            raise ParseError(f'function is missing "{key}"')
    X = space_from_json(obj["domain"])
    Y = space_from_json(obj["codomain"])
    table = obj["map"]
    if not isinstance(table, dict):
        raise ParseError('"map" must be an object from domain labels to codomain labels')
    extra = set(table) - set(X.labels)
    if extra:
        raise ParseError(f"map mentions unknown domain points {sorted(extra)}")
    y_index = {name: i for i, name in enumerate(Y.labels)}
    mapping = []
    for name in X.labels:
        if name not in table:
            raise ParseError(f"map does not assign domain point {name!r}")
        target = table[name]
        if target not in y_index:
            raise ParseError(f"{name!r} maps to unknown codomain point {target!r}")
        mapping.append(y_index[target])
    return SetFunction(X, Y, tuple(mapping))


def function_to_json(phi: SetFunction) -> dict:
    ylab = phi.codomain.labels
    return {
        "domain": space_to_json(phi.domain),
        "codomain": space_to_json(phi.codomain),
        "map": {x: ylab[y] for x, y in zip(phi.domain.labels, phi.mapping)},
    }


def monotone_map_to_json(m: MonotoneMap) -> dict:
    sl, tl = m.source.labels, m.target.labels
    return {
        "source": space_to_json(m.source),
        "target": space_to_json(m.target),
        "table": [[labels_of(u, sl), labels_of(v, tl)] for u, v in m.pairs()],
    }


def monotone_map_from_json(obj: Any) -> MonotoneMap:
    if not isinstance(obj, dict) or not {"source", "target", "table"} <= set(obj):
        raise ParseError('functor needs "source", "target" and "table"')
    S = space_from_json(obj["source"])
    T = space_from_json(obj["target"])
    images = {}
    for row in obj["table"]:
        if not isinstance(row, list) or len(row) != 2:
            raise ParseError("each table row is [source set, target set]")
        images[mask_from_labels(row[0], S.labels)] = mask_from_labels(row[1], T.labels)
    if set(images) != set(S.closed_family):
        raise ParseError("table rows must list every source closed set exactly once")
    return MonotoneMap.from_masks(S, T, images.__getitem__)


def _pair(w: Optional[tuple[Subset, Subset]], X: FiniteSpace, Y: FiniteSpace) -> Optional[dict]:
    if w is None:
        return None
    return {"U": labels_of(w[0].mask, X.labels), "V": labels_of(w[1].mask, Y.labels)}


def adjunction_verdict_to_json(v: AdjunctionVerdict, phi: MonotoneMap) -> dict:
    return {"adjoint": v.adjoint, "witness": _pair(v.witness, phi.source, phi.target)}


def continuity_verdict_to_json(v: ContinuityVerdict, phi: SetFunction) -> dict:
    w = None
    if v.witness is not None:
        ylab, xlab = phi.codomain.labels, phi.domain.labels
        w = {
            "V": labels_of(v.witness.mask, ylab),
            "preimage": labels_of(phi.preimage_mask(v.witness.mask), xlab),
        }
    return {"continuous": v.continuous, "witness": w}


def theorem_report_to_json(r: TheoremReport, phi: SetFunction) -> dict:
    X, Y = phi.domain, phi.codomain
    cw = None
    if r.continuity_witness is not None:
        cw = {"V": labels_of(r.continuity_witness.mask, Y.labels)}
    return {
        "continuous": r.continuous,
        "adjoint": r.adjoint,
        "agree": r.agree,
        "continuity_witness": cw,
        "adjunction_witness": _pair(r.adjunction_witness, X, Y),
        "converse_witness": _pair(r.converse_witness, X, Y),
    }


def load_json(path: Union[str, Path]) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
