"""JSON instance files.

Matroid files::

    {"labels": ["a", "b"], "circuits": [{"+": ["a"], "-": ["b"]}], "unsigned": ["b"]}

list one representative per opposite pair; ``unsigned`` is optional. Graph
files::

    {"vertices": [...], "edges": [{"id": "a", "tail": "v2", "head": "v1", "directed": true}],
     "pairs": [["v4", "v1"]]}

with ``pairs`` optional.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import InputError, InvalidMatroidError
from .graphs import Edge, MixedGraph
from .mixed import MixedMatroid, MixedCircuit, make_mixed
from .oriented import OrientedMatroid, verify_circuit_axioms
from .signed import GroundSet, SignedSet


def read_json(path: str | Path) -> dict[str, Any]:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise InputError(f"{path}: top-level value must be an object")
    return data


def _label_list(data: Any, what: str) -> list[str]:
    if not isinstance(data, list) or not all(isinstance(x, str) for x in data):
        raise InputError(f"{what} must be a list of strings")
    return data


def signed_from_dict(entry: Any, ground: GroundSet) -> SignedSet:
    if not isinstance(entry, dict) or set(entry) - {"+", "-"}:
        raise InputError(f"circuit entry must be an object with '+' and '-' keys, got {entry!r}")
    plus = ground.mask(_label_list(entry.get("+", []), "'+'"))
    minus = ground.mask(_label_list(entry.get("-", []), "'-'"))
    if plus & minus:
        raise InputError(f"circuit {entry!r} gives an element both signs")
    return SignedSet(plus, minus)


def signed_to_dict(x: SignedSet, ground: GroundSet) -> dict[str, list[str]]:
    return {"+": ground.names(x.plus), "-": ground.names(x.minus)}


def candidate_circuits(data: dict[str, Any]) -> tuple[GroundSet, list[SignedSet]]:
    """Ground set and the raw circuit list of a matroid file (no closure, no checks)."""
    ground = GroundSet(tuple(_label_list(data.get("labels"), "'labels'")))
    circuits = data.get("circuits")
    if not isinstance(circuits, list):
        raise InputError("'circuits' must be a list")
    return ground, [signed_from_dict(c, ground) for c in circuits]


def matroid_from_dict(data: dict[str, Any], verify: bool = True) -> MixedMatroid:
    """Load a (mixed) matroid, closing circuits under negation and checking the axioms."""
    ground, raw = candidate_circuits(data)
    if verify:
        closed = set(raw) | {-c for c in raw}
        report = verify_circuit_axioms(closed, ground)
        if report:
            raise InvalidMatroidError(str(report[0]))
    om = OrientedMatroid(ground, frozenset(raw))
    return make_mixed(om, _label_list(data.get("unsigned", []), "'unsigned'"))


def matroid_to_dict(m: MixedMatroid | OrientedMatroid) -> dict[str, Any]:
    mm = m if isinstance(m, MixedMatroid) else make_mixed(m)
    ground = mm.ground
    out: dict[str, Any] = {
        "labels": list(ground.labels),
        "circuits": [signed_to_dict(c, ground) for c in mm.om.sorted_circuits()],
    }
    if mm.unsigned:
        out["unsigned"] = ground.names(mm.unsigned)
    return out


def mixed_circuit_to_dict(c: MixedCircuit, ground: GroundSet) -> dict[str, list[str]]:
    return {**signed_to_dict(c.signed_part, ground), "unsigned": ground.names(c.unsigned_part)}


def graph_from_dict(data: dict[str, Any]) -> MixedGraph:
    vertices = _label_list(data.get("vertices"), "'vertices'")
    edges = data.get("edges")
    if not isinstance(edges, list):
        raise InputError("'edges' must be a list")
    parsed = []
    for e in edges:
        if not isinstance(e, dict) or not {"id", "tail", "head"} <= set(e):
            raise InputError(f"edge entry needs 'id', 'tail' and 'head': {e!r}")
        directed = e.get("directed", True)
        if not isinstance(directed, bool):
            raise InputError(f"edge {e['id']!r}: 'directed' must be a boolean")
        parsed.append(Edge(str(e["id"]), str(e["tail"]), str(e["head"]), directed))
    return MixedGraph(tuple(vertices), tuple(parsed))


def pairs_from_dict(data: dict[str, Any]) -> list[tuple[str, str]] | None:
    pairs = data.get("pairs")
    if pairs is None:
        return None
    if not isinstance(pairs, list) or not all(
        isinstance(p, list) and len(p) == 2 and all(isinstance(x, str) for x in p) for p in pairs
    ):
        raise InputError("'pairs' must be a list of [source, target] vertex labels")
    return [(s, t) for s, t in pairs]


def graph_to_dict(g: MixedGraph, pairs: list[tuple[str, str]] | None = None) -> dict[str, Any]:
    out: dict[str, Any] = {
        "vertices": list(g.vertices),
        "edges": [{"id": e.id, "tail": e.tail, "head": e.head, "directed": e.directed} for e in g.edges],
    }
    if pairs is not None:
        out["pairs"] = [list(p) for p in pairs]
    return out


def parse_instance(source: str | Path | dict[str, Any]) -> MixedGraph | MixedMatroid:
    """A graph if the file has ``vertices``, a mixed matroid if it has ``circuits``."""
    data = source if isinstance(source, dict) else read_json(source)
    if "vertices" in data:
        return graph_from_dict(data)
    if "circuits" in data:
        return matroid_from_dict(data)
    raise InputError("instance must contain either 'vertices' (graph) or 'circuits' (matroid)")


def dump(obj: Any) -> str:
    """Deterministic JSON text: sorted keys, two-space indent."""
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)

