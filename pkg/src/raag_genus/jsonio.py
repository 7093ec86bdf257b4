"""JSON reading and writing.

Integers that fit in a double's exact range are written as JSON numbers,
larger ones as decimal strings; readers accept either form. Matrices are
always written as arrays of decimal strings.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import MalformedInput

SAFE_INT = 2**53 - 1


def jint(x: int) -> int | str:
    return x if -SAFE_INT <= x <= SAFE_INT else str(x)


def read_int(x: Any, where: str | None = None) -> int:
    if isinstance(x, bool):
        raise MalformedInput(f"expected an integer, got {x!r}", location=where)
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x.strip(), 10)
        except ValueError:
            pass
    raise MalformedInput(f"expected an integer or decimal string, got {x!r}", location=where)


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def load_file(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc.msg}", location=f"{path}:{exc.lineno}:{exc.colno}") from None
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc.strerror}", location=path) from None


def graph_from_json(data: Any, where: str = "graph"):
    from .graph import validate_graph

    if not isinstance(data, dict) or not isinstance(data.get("vertices"), list) or not isinstance(
        data.get("edges"), list
    ):
        raise MalformedInput('graph must be {"vertices": [...], "edges": [[v, w], ...]}', location=where)
    for i, e in enumerate(data["edges"]):
        if not isinstance(e, list):
            raise MalformedInput("edge must be a two-element list", location=f"{where}.edges[{i}]")
    return validate_graph(data["vertices"], data["edges"])


def orientation_from_json(g, data: Any):
    from .graph import orient

    if data is None:
        return orient(g)
    if not isinstance(data, dict) or not isinstance(data.get("oriented_edges"), list):
        raise MalformedInput('orientation must be {"oriented_edges": [[v, w], ...]}', location="oriented_edges")
    return orient(g, data["oriented_edges"])


def class_from_json(data: Any, orientation: Any = None):
    """Parse ``{"graph": ..., "labels": [{"from", "to", "label"}, ...]}``.

    An ``"orientation"`` member is honoured unless ``orientation`` is passed
    explicitly; otherwise the lexicographic orientation is used.
    """
    from .homology import new_class

    if not isinstance(data, dict) or "graph" not in data:
        raise MalformedInput('class must be {"graph": ..., "labels": [...]}')
    g = graph_from_json(data["graph"])
    og = orientation_from_json(g, orientation if orientation is not None else data.get("orientation"))
    raw = []
    labels = data.get("labels", [])
    if not isinstance(labels, list):
        raise MalformedInput("labels must be a list", location="labels")
    for i, item in enumerate(labels):
        if not isinstance(item, dict) or not {"from", "to", "label"} <= item.keys():
            raise MalformedInput('label must be {"from": v, "to": w, "label": n}', location=f"labels[{i}]")
        raw.append((item["from"], item["to"], read_int(item["label"], f"labels[{i}].label")))
    return new_class(og, raw)


def labels_to_json(alpha) -> list[dict]:
    return [
        {"from": v, "to": w, "label": jint(alpha.labels[(v, w)])}
        for (v, w) in alpha.ambient.oriented_edges
        if (v, w) in alpha.labels
    ]


def class_to_json(alpha) -> dict:
    return {
        "graph": alpha.ambient.graph.to_json(),
        "orientation": alpha.ambient.to_json(),
        "labels": labels_to_json(alpha),
    }
