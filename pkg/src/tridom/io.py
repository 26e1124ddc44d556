"""
Line-based text formats.

``mpd`` (multipartite digraph)::

    mpd <t> <n>
    class 0 <v> <v> ...
    ...
    class <t-1> <v> ...
    arc <u> <v>

``ecg`` (edge-coloured graph)::

    ecg <n>
    edge <u> <v> <color>

``#`` starts a comment, blank lines are ignored, ids are 0-based.
Serialisation is canonical: classes and their members ascending, arcs and
edges in lexicographic order, edges written with ``u < v``.
"""

from __future__ import annotations

from .core import MultipartiteDigraph, SimpleDigraph, as_multipartite
from .errors import ParseError
from .gallai import EdgeColoredGraph


def _lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line.split()


def _ints(fields, number, expect=None):
    try:
        values = [int(x) for x in fields]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(fields)!r}", number) from None
    if expect is not None and len(values) != expect:
        raise ParseError(f"expected {expect} integers, got {len(values)}", number)
    if any(v < 0 for v in values):
        raise ParseError("ids and counts must be non-negative", number)
    return values


def parse_mpd(text: str) -> MultipartiteDigraph:
    lines = list(_lines(text))
    if not lines or lines[0][1][0] != "mpd":
        raise ParseError("missing 'mpd <t> <n>' header", lines[0][0] if lines else 1)
    number, fields = lines[0]
    t, n = _ints(fields[1:], number, expect=2)
    classes: list[list[int]] = []
    arcs: list[tuple[int, int]] = []
    for number, fields in lines[1:]:
        kind, rest = fields[0], fields[1:]
        if kind == "class":
            if arcs:
                raise ParseError("class lines must precede arc lines", number)
            values = _ints(rest, number)
            if not values:
                raise ParseError("class line needs an index", number)
            if values[0] != len(classes):
                raise ParseError(f"expected class {len(classes)}, got {values[0]}", number)
            classes.append(values[1:])
        elif kind == "arc":
            arcs.append(tuple(_ints(rest, number, expect=2)))
        else:
            raise ParseError(f"unknown record {kind!r}", number)
    if len(classes) != t:
        raise ParseError(f"header announces {t} classes, found {len(classes)}", lines[0][0])
    return MultipartiteDigraph(classes, arcs, n)


def serialize_mpd(D: MultipartiteDigraph | SimpleDigraph) -> str:
    D = as_multipartite(D)
    out = [f"mpd {D.num_classes} {D.num_vertices}"]
    for idx, members in enumerate(D.classes):
        out.append(" ".join(["class", str(idx), *map(str, sorted(members))]))
    out.extend(f"arc {u} {v}" for u, v in D.sorted_arcs())
    return "\n".join(out) + "\n"


def parse_ecg(text: str) -> EdgeColoredGraph:
    lines = list(_lines(text))
    if not lines or lines[0][1][0] != "ecg":
        raise ParseError("missing 'ecg <n>' header", lines[0][0] if lines else 1)
    number, fields = lines[0]
    (n,) = _ints(fields[1:], number, expect=1)
    edges: dict[tuple[int, int], int] = {}
    for number, fields in lines[1:]:
        if fields[0] != "edge":
            raise ParseError(f"unknown record {fields[0]!r}", number)
        u, v, c = _ints(fields[1:], number, expect=3)
        if u == v:
            raise ParseError(f"self-loop at {u}", number)
        if max(u, v) >= n:
            raise ParseError(f"vertex {max(u, v)} not in 0..{n - 1}", number)
        key = (min(u, v), max(u, v))
        if key in edges:
            raise ParseError(f"duplicate edge {key}", number)
        edges[key] = c
    return EdgeColoredGraph(n, edges)


def serialize_ecg(G: EdgeColoredGraph) -> str:
    out = [f"ecg {G.num_vertices}"]
    out.extend(f"edge {u} {v} {c}" for (u, v), c in sorted(G.color.items()))
    return "\n".join(out) + "\n"
