"""
Multipartite digraph model.

Vertices are dense integers ``0..n-1`` and classes are indexed ``0..t-1``.
Adjacency is kept twice: sorted out-lists for iteration and Python ``int``
bit-sets (bit ``v`` set means vertex ``v`` is present) for set algebra.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateArc,
    DuplicateVertex,
    EmptyClass,
    IntraClassArc,
    TwoCycle,
    UnassignedVertex,
    VertexOutOfRange,
)


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class MultipartiteDigraph:
    """An oriented graph whose vertices are split into independent classes.

    Instances are immutable once built. Construction validates every
    invariant; use :func:`validate` or :func:`simple_digraph` rather than
    filling attributes by hand.

    ``parent_vertex`` and ``parent_class`` map ids back to the digraph this
    one was induced from (identity for a freshly validated digraph).
    """

    __slots__ = (
        "num_vertices",
        "classes",
        "class_of",
        "arcs",
        "out",
        "out_mask",
        "in_mask",
        "class_mask",
        "parent_vertex",
        "parent_class",
    )

    def __init__(
        self,
        classes: Sequence[Iterable[int]],
        arcs: Iterable[tuple[int, int]],
        num_vertices: int | None = None,
        *,
        parent_vertex: Sequence[int] | None = None,
        parent_class: Sequence[int] | None = None,
    ):
        classes = [tuple(sorted(c)) for c in classes]
        if num_vertices is None:
            num_vertices = sum(len(c) for c in classes)
        n = num_vertices
        class_of = [-1] * n
        for idx, members in enumerate(classes):
            if not members:
                raise EmptyClass(f"class {idx} is empty")
            for v in members:
                if not 0 <= v < n:
                    raise VertexOutOfRange(f"vertex {v} of class {idx} not in 0..{n - 1}")
                if class_of[v] != -1:
                    raise DuplicateVertex(
                        f"vertex {v} listed in classes {class_of[v]} and {idx}"
                    )
                class_of[v] = idx
        for v, c in enumerate(class_of):
            if c == -1:
                raise UnassignedVertex(f"vertex {v} belongs to no class")

        arc_set = set()
        out_mask = [0] * n
        in_mask = [0] * n
        for u, v in arcs:
            for w in (u, v):
                if not 0 <= w < n:
                    raise VertexOutOfRange(f"arc ({u}, {v}): vertex {w} not in 0..{n - 1}")
            if class_of[u] == class_of[v]:
                raise IntraClassArc(f"arc ({u}, {v}) lies inside class {class_of[u]}")
            if (u, v) in arc_set:
                raise DuplicateArc(f"arc ({u}, {v}) listed twice")
            if (v, u) in arc_set:
                raise TwoCycle(f"arcs ({u}, {v}) and ({v}, {u}) form a 2-cycle")
            arc_set.add((u, v))
            out_mask[u] |= 1 << v
            in_mask[v] |= 1 << u

        self.num_vertices = n
        self.classes = tuple(classes)
        self.class_of = tuple(class_of)
        self.arcs = frozenset(arc_set)
        self.out = tuple(tuple(bits(m)) for m in out_mask)
        self.out_mask = tuple(out_mask)
        self.in_mask = tuple(in_mask)
        self.class_mask = tuple(to_mask(c) for c in classes)
        self.parent_vertex = tuple(parent_vertex) if parent_vertex is not None else tuple(range(n))
        self.parent_class = (
            tuple(parent_class) if parent_class is not None else tuple(range(len(classes)))
        )

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    @property
    def all_mask(self) -> int:
        return (1 << self.num_vertices) - 1

    @property
    def is_simple(self) -> bool:
        """True when every class is a singleton (an ordinary oriented graph)."""
        return all(len(c) == 1 for c in self.classes)

    def adj_mask(self, v: int) -> int:
        """Underlying undirected neighbourhood of ``v``."""
        return self.out_mask[v] | self.in_mask[v]

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)

    def as_simple(self) -> SimpleDigraph:
        return SimpleDigraph(self.num_vertices, self.arcs)

    def __eq__(self, other):
        if not isinstance(other, MultipartiteDigraph):
            return NotImplemented
        return (
            self.num_vertices == other.num_vertices
            and self.classes == other.classes
            and self.arcs == other.arcs
        )

    def __hash__(self):
        return hash((self.num_vertices, self.classes, self.arcs))

    def __repr__(self):
        return (
            f"MultipartiteDigraph(n={self.num_vertices}, t={self.num_classes}, "
            f"arcs={len(self.arcs)})"
        )


class SimpleDigraph:
    """Lightweight oriented graph without class structure.

    Converts losslessly to and from a :class:`MultipartiteDigraph` whose
    classes are singletons ``{0}, {1}, ...``.
    """

    __slots__ = ("num_vertices", "arcs")

    def __init__(self, num_vertices: int, arcs: Iterable[tuple[int, int]]):
        self.num_vertices = num_vertices
        self.arcs = frozenset((int(u), int(v)) for u, v in arcs)
        # validation piggybacks on the multipartite constructor
        self.to_multipartite()

    def to_multipartite(self) -> MultipartiteDigraph:
        return simple_digraph(self.num_vertices, self.arcs)

    def __eq__(self, other):
        if not isinstance(other, SimpleDigraph):
            return NotImplemented
        return self.num_vertices == other.num_vertices and self.arcs == other.arcs

    def __hash__(self):
        return hash((self.num_vertices, self.arcs))

    def __repr__(self):
        return f"SimpleDigraph(n={self.num_vertices}, arcs={len(self.arcs)})"


def as_multipartite(D: MultipartiteDigraph | SimpleDigraph) -> MultipartiteDigraph:
    if isinstance(D, SimpleDigraph):
        return D.to_multipartite()
    return D


def validate(
    classes: Sequence[Iterable[int]],
    arcs: Iterable[tuple[int, int]],
    num_vertices: int | None = None,
) -> MultipartiteDigraph:
    """Build a :class:`MultipartiteDigraph`, raising on the first broken invariant.

    >>> validate([[0], [1]], [(0, 1)]).num_vertices
    2
    """
    return MultipartiteDigraph(classes, arcs, num_vertices)


def simple_digraph(num_vertices: int, arcs: Iterable[tuple[int, int]]) -> MultipartiteDigraph:
    """Oriented graph on ``0..n-1`` with every vertex in its own class (class id = vertex id)."""
    return MultipartiteDigraph([[v] for v in range(num_vertices)], arcs, num_vertices)


def _check_vertices(D: MultipartiteDigraph, U: Iterable[int]) -> int:
    mask = 0
    for u in U:
        if not 0 <= u < D.num_vertices:
            raise VertexOutOfRange(f"vertex {u} not in 0..{D.num_vertices - 1}")
        mask |= 1 << u
    return mask


def out_mask_of(D: MultipartiteDigraph, mask: int) -> int:
    """Open out-neighbourhood of a vertex bit-set."""
    result = 0
    out = D.out_mask
    for u in bits(mask):
        result |= out[u]
    return result


def out_neighborhood(
    D: MultipartiteDigraph, U: Iterable[int], closed: bool = False
) -> frozenset[int]:
    """Heads of arcs leaving ``U``; with ``closed=True`` also ``U`` itself."""
    mask = _check_vertices(D, U)
    result = out_mask_of(D, mask)
    if closed:
        result |= mask
    return frozenset(bits(result))


def find_cyclic_triangle(D: MultipartiteDigraph | SimpleDigraph) -> tuple[int, int, int] | None:
    """Return some ``(u, v, w)`` with arcs u->v, v->w, w->u, or ``None``.

    The witness is the first one met scanning arcs in lexicographic order,
    rotated so that ``u`` is its smallest vertex.
    """
    D = as_multipartite(D)
    for u, v in D.sorted_arcs():
        closing = D.out_mask[v] & D.in_mask[u]
        if closing:
            w = (closing & -closing).bit_length() - 1
            tri = (u, v, w)
            i = tri.index(min(tri))
            return tri[i:] + tri[:i]
    return None


def find_directed_cycle(D: MultipartiteDigraph | SimpleDigraph) -> tuple[int, ...] | None:
    """Return the vertices of some directed cycle in order, or ``None`` if acyclic."""
    D = as_multipartite(D)
    n = D.num_vertices
    state = [0] * n  # 0 new, 1 on stack, 2 done
    parent = [-1] * n
    for root in range(n):
        if state[root]:
            continue
        stack = [(root, iter(D.out[root]))]
        state[root] = 1
        while stack:
            u, it = stack[-1]
            for v in it:
                if state[v] == 0:
                    state[v] = 1
                    parent[v] = u
                    stack.append((v, iter(D.out[v])))
                    break
                if state[v] == 1:
                    cycle = [u]
                    while cycle[-1] != v:
                        cycle.append(parent[cycle[-1]])
                    return tuple(reversed(cycle))
            else:
                state[u] = 2
                stack.pop()
    return None


def induced_subdigraph(D: MultipartiteDigraph, W: Iterable[int]) -> MultipartiteDigraph:
    """Restrict ``D`` to ``W``; vertices are renumbered by increasing original id.

    Classes that become empty are dropped. The result's ``parent_vertex`` and
    ``parent_class`` refer to ``D``'s ids (not to ``D``'s own parents).
    """
    mask = _check_vertices(D, W)
    keep = list(bits(mask))
    new_id = {v: i for i, v in enumerate(keep)}
    classes = []
    parent_class = []
    for idx, members in enumerate(D.classes):
        sub = [new_id[v] for v in members if v in new_id]
        if sub:
            classes.append(sub)
            parent_class.append(idx)
    arcs = [(new_id[u], new_id[v]) for u in keep for v in bits(D.out_mask[u] & mask)]
    return MultipartiteDigraph(
        classes, arcs, len(keep), parent_vertex=keep, parent_class=parent_class
    )
