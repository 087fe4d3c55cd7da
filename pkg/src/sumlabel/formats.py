"""JSON and DOT serialisation.

The labeled-graph document is the file format of the command-line tool::

    {
      "ground_set": [0, 1],
      "vertices": [
        {"id": "v1", "label": [0]},
        ...
      ],
      "edges": [
        ["v1", "v2"],
        ...
      ]
    }

``label`` may be omitted on every vertex for files that only pose a search.
Writers are deterministic so emitted documents reload and re-dump byte for byte.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import SumLabelError
from .graphcore import Graph
from .labeling import Labeling
from .setalg import GroundSet, format_set


def _dump(obj: Any) -> str:
    return json.dumps(obj, ensure_ascii=False)


def dumps_labeled_graph(x: GroundSet, g: Graph, l: Labeling | None = None) -> str:
    lines = ["{", f'  "ground_set": {_dump(list(x.elements))},', '  "vertices": [']
    rows = []
    for v in g.vertices:
        item: dict[str, Any] = {"id": v}
        if l is not None:
            item["label"] = sorted(l[v])
        rows.append("    " + _dump(item))
    if rows:
        lines.append(",\n".join(rows))
    lines.append("  ],")
    lines.append('  "edges": [')
    erows = ["    " + _dump([a, b]) for a, b in g.sorted_edges]
    if erows:
        lines.append(",\n".join(erows))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def loads_labeled_graph(text: str) -> tuple[GroundSet, Graph, Labeling | None]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SumLabelError(f"malformed JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SumLabelError("malformed JSON: top level must be an object")
    try:
        x = GroundSet(doc["ground_set"])
        verts = doc["vertices"]
        edges = doc.get("edges", [])
        ids = [str(item["id"]) for item in verts]
        for e in edges:
            if not isinstance(e, list) or len(e) != 2:
                raise SumLabelError(f"malformed edge {e!r}")
        g = Graph(ids, [tuple(e) for e in edges])
        labeled = [item for item in verts if "label" in item]
    except (KeyError, TypeError) as exc:
        raise SumLabelError(f"malformed labeled-graph document: missing or bad field {exc}") from exc
    if not labeled:
        return x, g, None
    if len(labeled) != len(verts):
        raise SumLabelError("either every vertex carries a label or none does")
    l = Labeling(x, {str(item["id"]): item["label"] for item in verts})
    return x, g, l


def graph_to_dict(g: Graph) -> dict:
    return {"vertices": list(g.vertices), "edges": [list(e) for e in g.sorted_edges]}


def graph_from_dict(doc: dict) -> Graph:
    return Graph(doc["vertices"], [tuple(e) for e in doc.get("edges", [])])


def labeling_to_dict(l: Labeling) -> dict:
    return {
        "ground_set": list(l.ground.elements),
        "labels": {v: sorted(s) for v, s in l.labels.items()},
    }


def labeling_from_dict(doc: dict) -> Labeling:
    return Labeling(GroundSet(doc["ground_set"]), doc["labels"])


def to_dot(g: Graph, l: Labeling | None = None, name: str = "G") -> str:
    """Undirected DOT document; set-labels as node and edge captions."""
    lines = [f"graph {name} {{"]
    for v in g.vertices:
        if l is None:
            lines.append(f'  "{v}";')
        else:
            lines.append(f'  "{v}" [label="{format_set(l[v], braces=True)}"];')
    for a, b in g.sorted_edges:
        if l is None:
            lines.append(f'  "{a}" -- "{b}";')
        else:
            s = {p + q for p in l[a] for q in l[b]}
            lines.append(f'  "{a}" -- "{b}" [label="{format_set(s, braces=True)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
