"""
Deterministic constructions and seeded random instance generators.

Randomness comes from :class:`random.Random` (MT19937). Only ``random()``,
``randrange()``, ``shuffle()`` and ``sample()`` are used; their streams are
stable across CPython releases since 3.2, so a ``(parameters, seed)`` pair
names one instance on every platform.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .core import MultipartiteDigraph, SimpleDigraph, validate
from .errors import BudgetExceeded, RetryBudgetExceeded, TargetUnreachable

DK_BUDGET = 4


def _rng(seed: int) -> random.Random:
    return random.Random(int(seed) & 0xFFFFFFFFFFFFFFFF)


def gen_pentagons(t: int) -> SimpleDigraph:
    """``t`` vertex-disjoint cyclically oriented 5-cycles; block ``i`` is ``5i..5i+4``."""
    if t < 1:
        raise ValueError("t must be at least 1")
    arcs = [(5 * i + j, 5 * i + (j + 1) % 5) for i in range(t) for j in range(5)]
    return SimpleDigraph(5 * t, arcs)


# ---------------------------------------------------------------------------
# the recursive lower-bound family


@dataclass(frozen=True)
class BipartiteBlowup:
    """D_k as raw data: side size ``m`` and the set of A->B pairs ``(i, s)``.

    Every pair not listed is oriented B->A.
    """

    k: int
    m: int
    a_to_b: frozenset

    def to_digraph(self) -> MultipartiteDigraph:
        m = self.m
        arcs = [
            (i, m + s) if (i, s) in self.a_to_b else (m + s, i)
            for i in range(m)
            for s in range(m)
        ]
        return validate([range(m), range(m, 2 * m)], arcs, 2 * m)


def dk_levels(k: int, budget: int = DK_BUDGET) -> list[BipartiteBlowup]:
    """``[D_1, ..., D_k]``. Vertex ``(j, a_i)`` of ``D_k`` has A-index ``j*m + i``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if k > budget:
        raise BudgetExceeded(f"D_{k} exceeds the construction budget k <= {budget}")
    # cyclic K_{2,2}: a0 -> b0 -> a1 -> b1 -> a0
    levels = [BipartiteBlowup(1, 2, frozenset({(0, 0), (1, 1)}))]
    for level in range(2, k + 1):
        prev = levels[-1]
        m, mod = prev.m, level + 1
        pairs = set()
        for j in range(mod):
            for r in range(mod):
                for i in range(m):
                    for s in range(m):
                        if j == r or (j != (r + 1) % mod and (i, s) in prev.a_to_b):
                            pairs.add((j * m + i, r * m + s))
        levels.append(BipartiteBlowup(level, mod * m, frozenset(pairs)))
    return levels


def gen_Dk(k: int, budget: int = DK_BUDGET) -> MultipartiteDigraph:
    """Complete bipartite orientation with one-sided domination number above ``k``.

    Class 0 is side A (ids ``0..M-1``), class 1 is side B (ids ``M..2M-1``).
    """
    return dk_levels(k, budget)[-1].to_digraph()


# ---------------------------------------------------------------------------
# random instances


def gen_random_multipartite_trianglefree(
    t: int,
    class_size: int | Sequence[int],
    completeness: float,
    seed: int,
    *,
    retries: int | None = None,
    fallback: bool = True,
) -> MultipartiteDigraph:
    """Random multipartite oriented graph with no cyclic triangle.

    Each cross-class pair becomes an arc with probability ``completeness``,
    oriented by a fair coin. Cyclic triangles are then repaired by flipping a
    random arc of the current witness; after ``retries`` flips (default
    ``10 * n``) all arcs are reoriented along a random vertex order instead.
    """
    if not 0.0 <= completeness <= 1.0:
        raise ValueError("completeness must lie in [0, 1]")
    sizes = [class_size] * t if isinstance(class_size, int) else list(class_size)
    if len(sizes) != t or t < 1 or min(sizes) < 1:
        raise ValueError("need t >= 1 classes of positive size")
    rng = _rng(seed)
    classes, start = [], 0
    for size in sizes:
        classes.append(list(range(start, start + size)))
        start += size
    n = start
    class_of = [c for c, members in enumerate(classes) for _ in members]

    arcs = {}
    for u, v in combinations(range(n), 2):
        if class_of[u] != class_of[v] and rng.random() < completeness:
            arcs[(u, v)] = (u, v) if rng.random() < 0.5 else (v, u)

    out = [0] * n
    inn = [0] * n
    for u, v in arcs.values():
        out[u] |= 1 << v
        inn[v] |= 1 << u

    def witness():
        for u, v in sorted(arcs.values()):
            closing = out[v] & inn[u]
            if closing:
                return u, v, (closing & -closing).bit_length() - 1
        return None

    budget = 10 * n if retries is None else retries
    for _ in range(budget + 1):
        tri = witness()
        if tri is None:
            return validate(classes, arcs.values(), n)
        u, v = [(tri[0], tri[1]), (tri[1], tri[2]), (tri[2], tri[0])][rng.randrange(3)]
        out[u] &= ~(1 << v)
        inn[v] &= ~(1 << u)
        out[v] |= 1 << u
        inn[u] |= 1 << v
        arcs[(min(u, v), max(u, v))] = (v, u)
    if not fallback:
        raise RetryBudgetExceeded(f"cyclic triangles remain after {budget} repairs")
    rank = list(range(n))
    rng.shuffle(rank)
    ordered = [(u, v) if rank[u] < rank[v] else (v, u) for (u, v) in arcs]
    return validate(classes, ordered, n)


def gen_random_bipartite_tournament(n_per_side: int, seed: int) -> MultipartiteDigraph:
    """Complete bipartite graph, each edge oriented by an independent fair coin."""
    if n_per_side < 1:
        raise ValueError("n_per_side must be at least 1")
    rng = _rng(seed)
    n = n_per_side
    arcs = []
    for a in range(n):
        for b in range(n, 2 * n):
            arcs.append((a, b) if rng.random() < 0.5 else (b, a))
    return validate([range(n), range(n, 2 * n)], arcs, 2 * n)


def gen_random_digraph(n: int, arc_probability: float, seed: int) -> SimpleDigraph:
    """Each unordered pair present with ``arc_probability``, then oriented by a fair coin."""
    if not 0.0 <= arc_probability <= 1.0:
        raise ValueError("arc_probability must lie in [0, 1]")
    rng = _rng(seed)
    arcs = []
    for u, v in combinations(range(n), 2):
        if rng.random() < arc_probability:
            arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return SimpleDigraph(n, arcs)


def gen_random_dag(n: int, arc_probability: float, seed: int) -> SimpleDigraph:
    """Random acyclic orientation: pairs kept with ``arc_probability``, oriented along a hidden random order."""
    rng = _rng(seed)
    rank = list(range(n))
    rng.shuffle(rank)
    arcs = []
    for u, v in combinations(range(n), 2):
        if rng.random() < arc_probability:
            arcs.append((u, v) if rank[u] < rank[v] else (v, u))
    return SimpleDigraph(n, arcs)


@dataclass(frozen=True)
class GallaiSample:
    graph: "EdgeColoredGraph"
    alpha: int


def _substitution_coloring(n: int, colors: int, rng: random.Random) -> dict[tuple[int, int], int]:
    """Gallai colouring of K_n: 2-coloured complete quotient, blocks filled recursively."""
    coloring = {}
    stack = [list(range(n))]
    while stack:
        block = stack.pop()
        if len(block) < 2:
            continue
        rng.shuffle(block)
        parts = rng.randrange(2, min(len(block), 4) + 1)
        cuts = sorted(rng.sample(range(1, len(block)), parts - 1))
        pieces = [block[a:b] for a, b in zip([0] + cuts, cuts + [len(block)])]
        pair = rng.sample(range(colors), 2) if colors >= 2 else [0, 0]
        for x, y in combinations(range(parts), 2):
            c = pair[0] if rng.random() < 0.5 else pair[1]
            for u in pieces[x]:
                for v in pieces[y]:
                    coloring[(min(u, v), max(u, v))] = c
        stack.extend(pieces)
    return coloring


def gen_random_gallai(
    n: int,
    target_alpha: int,
    colors: int,
    seed: int,
    *,
    extra_deletions: int | None = None,
    max_attempts: int | None = None,
) -> GallaiSample:
    """Random Gallai-coloured graph with independence number ``target_alpha``.

    Starts from a substitution colouring of K_n and deletes random edges,
    undoing any deletion that would push the independence number past the
    target. Once the target is reached, ``extra_deletions`` further attempts
    (default ``n``) thin the graph without changing it. Deleting edges never
    creates a triangle, so the output stays Gallai.

    Raises :class:`TargetUnreachable` (carrying the partial graph and its
    independence number) if ``max_attempts`` deletions do not reach the target.
    """
    from .gallai import EdgeColoredGraph, alpha_of

    if n < 1 or colors < 1:
        raise ValueError("need n >= 1 and colors >= 1")
    rng = _rng(seed)
    coloring = _substitution_coloring(n, colors, rng)
    alpha = 1 if n > 0 else 0
    if target_alpha <= alpha:
        G = EdgeColoredGraph(n, coloring)
        return GallaiSample(G, alpha_of(G))

    edges = sorted(coloring)
    rng.shuffle(edges)
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    from .oracles import independence_number

    attempts = max_attempts if max_attempts is not None else len(edges)
    extra = n if extra_deletions is None else extra_deletions
    removed = set()
    for u, v in edges[:attempts]:
        if alpha == target_alpha:
            if extra <= 0:
                break
            extra -= 1
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        new_alpha = independence_number(adj)
        if new_alpha > target_alpha:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            continue
        removed.add((u, v))
        alpha = new_alpha
    G = EdgeColoredGraph(n, {e: c for e, c in coloring.items() if e not in removed})
    if alpha != target_alpha:
        raise TargetUnreachable(
            f"reached independence number {alpha}, target {target_alpha}", graph=G, alpha=alpha
        )
    return GallaiSample(G, alpha)
