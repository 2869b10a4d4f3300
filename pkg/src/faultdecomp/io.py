"""Text and JSON formats for graphs, fault sets, instances and decompositions.

Edge list::

    n m weighted
    u v [w]
    ...

Fault files use the same edge lines with no header.
"""

from __future__ import annotations

import json
from collections.abc import Iterable
from pathlib import Path

from .graph import Edge, Graph, GraphError, canon
from .instance import Decomposition, ReplacementInstance


class FormatError(ValueError):
    pass


def _lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for no, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            out.append((no, line.split()))
    return out


def _ints(no: int, toks: list[str]) -> list[int]:
    try:
        return [int(t) for t in toks]
    except ValueError:
        raise FormatError(f"line {no}: expected integers, got {' '.join(toks)!r}") from None


def parse_graph(text: str) -> Graph:
    rows = _lines(text)
    if not rows:
        raise FormatError("empty graph file")
    no, head = rows[0]
    if len(head) != 3:
        raise FormatError(f"line {no}: header must be 'n m weighted'")
    n, m, weighted = _ints(no, head)
    if weighted not in (0, 1):
        raise FormatError(f"line {no}: weighted flag must be 0 or 1")
    body = rows[1:]
    if len(body) != m:
        raise FormatError(f"header promises {m} edges, found {len(body)}")
    edges = []
    for no, toks in body:
        vals = _ints(no, toks)
        if len(vals) == 2 and not weighted:
            edges.append((vals[0], vals[1], 1))
        elif len(vals) == 3:
            edges.append(tuple(vals))
        else:
            raise FormatError(f"line {no}: expected 'u v' or 'u v w'")
    try:
        return Graph.from_edges(n, edges, bool(weighted))
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {len(g.edges)} {int(g.weighted)}"]
    for u, v, w in g.edges:
        lines.append(f"{u} {v} {w}" if g.weighted else f"{u} {v}")
    return "\n".join(lines) + "\n"


def parse_faults(text: str, g: Graph) -> frozenset:
    out = set()
    for no, toks in _lines(text):
        vals = _ints(no, toks)
        if len(vals) not in (2, 3):
            raise FormatError(f"line {no}: expected 'u v' or 'u v w'")
        e = canon(vals[0], vals[1])
        if not g.has_edge(*e):
            raise FormatError(f"line {no}: fault {e} is not an edge of the graph")
        if len(vals) == 3 and g.weight(*e) != vals[2]:
            raise FormatError(f"line {no}: fault {e} has weight {g.weight(*e)}, not {vals[2]}")
        out.add(e)
    return frozenset(out)


def format_faults(faults: Iterable[Edge]) -> str:
    return "".join(f"{u} {v}\n" for u, v in sorted(faults))


def _edge_list(edges: Iterable[Edge]) -> list[list[int]]:
    return [list(e) for e in sorted(edges)]


def decomposition_to_dict(d: Decomposition, **extra) -> dict:
    out = {
        "boundaries": list(d.boundaries),
        "fault_sets": [_edge_list(F) for F in d.fault_sets],
        "separators": [list(e) for e in d.separators],
        "q": d.q,
        "budget": d.budget,
    }
    out.update(extra)
    return out


def decomposition_from_dict(obj: dict) -> Decomposition:
    try:
        d = Decomposition(
            boundaries=[int(x) for x in obj["boundaries"]],
            fault_sets=[[tuple(e) for e in F] for F in obj["fault_sets"]],
            separators=[tuple(e) for e in obj.get("separators", [])],
            budget=obj.get("budget"),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad decomposition JSON: {exc}") from None
    if "q" in obj and obj["q"] != d.q:
        raise FormatError(f"q={obj['q']} but {d.q} fault sets given")
    return d


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def instance_to_dict(inst: ReplacementInstance, **extra) -> dict:
    out = {"n": inst.g.n, "weighted": inst.g.weighted, "s": inst.s, "t": inst.t, "f": inst.f, "pi": list(inst.pi)}
    out.update(extra)
    return out


def read_text(path: str | Path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
