"""
Edge-coloured graphs without rainbow triangles, and covering them by
monochromatic components.
"""

from __future__ import annotations

from typing import Iterable, Mapping, NamedTuple

from .core import MultipartiteDigraph, bits, find_cyclic_triangle, popcount, to_mask
from .errors import (
    ColorClash,
    DuplicateArc,
    InternalContradiction,
    NotGallai,
    ValidationError,
    VertexOutOfRange,
)
from .oracles import independence_number
from .solvers import bound_tables, dominate_general


class EdgeColoredGraph:
    """Simple undirected graph on ``0..n-1`` with a non-negative integer colour per edge."""

    __slots__ = ("num_vertices", "color", "adj")

    def __init__(self, num_vertices: int, edges: Mapping[tuple[int, int], int] | Iterable[tuple[int, int, int]]):
        items = edges.items() if isinstance(edges, Mapping) else (((u, v), c) for u, v, c in edges)
        color = {}
        adj = [0] * num_vertices
        for (u, v), c in items:
            for w in (u, v):
                if not 0 <= w < num_vertices:
                    raise VertexOutOfRange(f"edge ({u}, {v}): vertex {w} not in 0..{num_vertices - 1}")
            if u == v:
                raise ValidationError(f"self-loop at {u}")
            if int(c) < 0:
                raise ValidationError(f"edge ({u}, {v}) has negative colour {c}")
            key = (min(u, v), max(u, v))
            if key in color:
                raise DuplicateArc(f"edge {key} listed twice")
            color[key] = int(c)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.num_vertices = num_vertices
        self.color = color
        self.adj = tuple(adj)

    def edge_color(self, u: int, v: int) -> int:
        return self.color[(min(u, v), max(u, v))]

    def colors(self) -> list[int]:
        return sorted(set(self.color.values()))

    def induced(self, W: Iterable[int]) -> tuple[EdgeColoredGraph, tuple[int, ...]]:
        """Subgraph on ``W`` (renumbered by increasing id) and the map back to original ids."""
        keep = sorted(set(W))
        new_id = {v: i for i, v in enumerate(keep)}
        edges = {
            (new_id[u], new_id[v]): c
            for (u, v), c in self.color.items()
            if u in new_id and v in new_id
        }
        return EdgeColoredGraph(len(keep), edges), tuple(keep)

    def __eq__(self, other):
        if not isinstance(other, EdgeColoredGraph):
            return NotImplemented
        return self.num_vertices == other.num_vertices and self.color == other.color

    def __repr__(self):
        return f"EdgeColoredGraph(n={self.num_vertices}, edges={len(self.color)}, colors={len(self.colors())})"


def alpha_of(G: EdgeColoredGraph) -> int:
    """Independence number of the underlying uncoloured graph."""
    from .oracles import _guard

    _guard(G.num_vertices, None, "alpha_of")
    return independence_number(G.adj)


def check_gallai(G: EdgeColoredGraph) -> tuple[int, int, int] | None:
    """Return a triangle ``(u, v, w)``, ``u < v < w``, whose edges get three colours, or ``None``."""
    for (u, v), c in sorted(G.color.items()):
        for w in bits(G.adj[u] & G.adj[v] & ~((1 << (v + 1)) - 1)):
            if len({c, G.edge_color(u, w), G.edge_color(v, w)}) == 3:
                return (u, v, w)
    return None


def _require_gallai(G: EdgeColoredGraph) -> None:
    tri = check_gallai(G)
    if tri is not None:
        raise NotGallai(tri)


def mono_components(G: EdgeColoredGraph, color: int) -> list[frozenset[int]]:
    """Connected components of the edges of one colour, ordered by smallest vertex."""
    adj = [0] * G.num_vertices
    for (u, v), c in G.color.items():
        if c == color:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    unseen = to_mask(v for v in range(G.num_vertices) if adj[v])
    comps = []
    while unseen:
        start = unseen & -unseen
        comp, frontier = start, start
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= adj[v]
            frontier = reach & ~comp
            comp |= frontier
        unseen &= ~comp
        comps.append(frozenset(bits(comp)))
    return comps


class Orientation(NamedTuple):
    """Oriented neighbourhood of a vertex: ``digraph`` vertex ``i`` is graph vertex ``vertices[i]``."""

    digraph: MultipartiteDigraph
    vertices: tuple[int, ...]
    class_colors: tuple[int, ...]


def orient_around_vertex(G: EdgeColoredGraph, v: int) -> Orientation:
    """Classes are the neighbours of ``v`` grouped by the colour of their edge to ``v``.

    An edge of colour ``c`` between two classes is oriented away from the
    class of colour ``c``; edges inside a class are dropped.
    """
    nbrs = list(bits(G.adj[v]))
    class_colors = tuple(sorted({G.edge_color(v, x) for x in nbrs}))
    cls_index = {c: i for i, c in enumerate(class_colors)}
    new_id = {x: i for i, x in enumerate(nbrs)}
    cls = [cls_index[G.edge_color(v, x)] for x in nbrs]
    classes = [[] for _ in class_colors]
    for i, c in enumerate(cls):
        classes[c].append(i)
    arcs = []
    for x in nbrs:
        for y in bits(G.adj[x] & G.adj[v] & ~((1 << (x + 1)) - 1)):
            cx, cy = cls[new_id[x]], cls[new_id[y]]
            if cx == cy:
                continue
            c = G.edge_color(x, y)
            if c == class_colors[cx]:
                arcs.append((new_id[x], new_id[y]))
            elif c == class_colors[cy]:
                arcs.append((new_id[y], new_id[x]))
            else:
                raise ColorClash(
                    f"edge ({x}, {y}) has colour {c}, neither {class_colors[cx]} nor {class_colors[cy]}; "
                    f"({v}, {x}, {y}) is a rainbow triangle"
                )
    H = MultipartiteDigraph(classes, arcs, len(nbrs))
    tri = find_cyclic_triangle(H)
    if tri is not None:
        raise InternalContradiction(f"orientation around {v} has cyclic triangle {tri}")
    return Orientation(H, tuple(nbrs), class_colors)


class CoverPart(NamedTuple):
    color: int
    vertices: frozenset[int]


def _isolated_color(G: EdgeColoredGraph, v: int) -> int:
    # a lone vertex is connected in every colour; name one it touches if possible
    touching = [c for (a, b), c in G.color.items() if v in (a, b)]
    return min(touching) if touching else 0


def _cover(G: EdgeColoredGraph) -> list[CoverPart]:
    n = G.num_vertices
    if n == 0:
        return []
    if n == 1:
        return [CoverPart(0, frozenset({0}))]
    alpha = independence_number(G.adj)
    if alpha == 1:
        for c in G.colors():
            for comp in mono_components(G, c):
                if len(comp) == n:
                    return [CoverPart(c, comp)]
        raise InternalContradiction("complete Gallai-coloured graph without a spanning colour")

    v = 0
    far = [x for x in range(n) if x != v and not G.adj[v] >> x & 1]
    parts = []
    if far:
        sub, back = G.induced(far)
        parts += [CoverPart(p.color, frozenset(back[x] for x in p.vertices)) for p in _cover(sub)]
    if not G.adj[v]:
        parts.append(CoverPart(_isolated_color(G, v), frozenset({v})))
        return parts

    H, verts, class_colors = orient_around_vertex(G, v)
    chosen, _ = dominate_general(H)
    assigned = 0
    for c in chosen:
        assigned |= H.class_mask[c]
    for c in chosen:
        members = H.class_mask[c]
        reach = 0
        for u in bits(members):
            reach |= H.out_mask[u]
        reach &= ~assigned
        assigned |= reach
        part = {v} | {verts[x] for x in bits(members | reach)}
        parts.append(CoverPart(class_colors[c], frozenset(part)))
    return parts


def check_cover(G: EdgeColoredGraph, parts: Iterable[CoverPart]) -> str | None:
    """Return a description of the first broken cover invariant, or ``None`` if valid."""
    covered = set()
    for color, vertices in parts:
        if not vertices:
            return "empty part"
        covered |= vertices
        if len(vertices) == 1:
            continue
        if not any(vertices <= comp for comp in mono_components(G, color)):
            return f"part {sorted(vertices)} is not inside one colour-{color} component"
        # connectivity inside the part itself
        mask = to_mask(vertices)
        adj = {
            x: to_mask(y for y in vertices if y != x and G.adj[x] >> y & 1 and G.edge_color(x, y) == color)
            for x in vertices
        }
        start = min(vertices)
        comp, frontier = 1 << start, 1 << start
        while frontier:
            reach = 0
            for x in bits(frontier):
                reach |= adj[x]
            frontier = reach & mask & ~comp
            comp |= frontier
        if comp != mask:
            return f"part {sorted(vertices)} is not connected in colour {color}"
    missing = set(range(G.num_vertices)) - covered
    if missing:
        return f"vertex {min(missing)} is not covered"
    return None


def cover_by_mono_components(G: EdgeColoredGraph) -> list[CoverPart]:
    """Cover the vertices by at most ``g(alpha)`` monochromatic connected vertex sets.

    Complete graphs get one spanning component (lowest colour that spans).
    Otherwise the lowest vertex ``v`` is covered together with its
    neighbours through a dominating class set of the neighbourhood
    orientation, and its non-neighbours are covered recursively.
    """
    _require_gallai(G)
    parts = _cover(G)
    problem = check_cover(G, parts)
    if problem is not None:
        raise InternalContradiction(problem)
    alpha = alpha_of(G)
    if alpha >= 1:
        limit = bound_tables(alpha).g[alpha]
        if len(parts) > limit:
            raise InternalContradiction(f"{len(parts)} parts exceed g({alpha}) = {limit}")
    return parts


class LargeComponent(NamedTuple):
    holds: bool
    largest: int
    threshold: float


def check_largecomp_bound(G: EdgeColoredGraph) -> LargeComponent:
    """Compare the largest monochromatic component with ``n / (alpha^2 + alpha - 1)``."""
    _require_gallai(G)
    n = G.num_vertices
    if n == 0:
        return LargeComponent(True, 0, 0.0)
    alpha = alpha_of(G)
    largest = 1
    for c in G.colors():
        for comp in mono_components(G, c):
            largest = max(largest, len(comp))
    threshold = n / (alpha * alpha + alpha - 1)
    return LargeComponent(largest >= threshold, largest, threshold)
