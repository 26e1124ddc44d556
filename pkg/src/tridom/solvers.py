"""
Constructive domination algorithms.

Class domination (``dominate_*`` returning class indices) works on
multipartite digraphs without cyclic triangles; vertex domination works on
oriented graphs. Every solver verifies its own output with the independent
checkers in :mod:`tridom.oracles` before returning, and raises
:class:`~tridom.errors.InternalContradiction` if a step that cannot fail on
valid input does fail.

Ties are broken lexicographically everywhere (lowest class index, lowest
vertex id, lowest sorted vertex tuple) so results are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .core import (
    MultipartiteDigraph,
    SimpleDigraph,
    as_multipartite,
    bits,
    find_cyclic_triangle,
    find_directed_cycle,
    induced_subdigraph,
    popcount,
    to_mask,
)
from .errors import (
    BudgetExceeded,
    InternalContradiction,
    NotAClique,
    NotACover,
    NotAcyclic,
    PreconditionAlpha,
    PreconditionBeta,
    PreconditionTriangle,
)
from .oracles import (
    DominationCertificate,
    Violation,
    alpha_exact,
    alpha_witness,
    beta_exact,
    beta_witness,
    check_class_domination,
    check_structure,
    check_vertex_domination,
    lex_first_independent_set,
    transversal_conflicts,
    underlying_adjacency,
)

DEFAULT_NODE_BUDGET = 5_000_000


# ---------------------------------------------------------------------------
# bound tables


@dataclass(frozen=True)
class BoundTables:
    h: dict[int, int]
    f: dict[int, int]
    g: dict[int, int]
    h1: dict[int, int]
    h2: dict[int, int]


def bound_tables(max_beta: int) -> BoundTables:
    """Upper bounds as functions of beta (or alpha), for ``1..max_beta``.

    ``h`` bounds the number of dominating classes, ``f`` the domination
    number of oriented graphs without cyclic triangles, ``g`` the number of
    monochromatic components covering a Gallai-coloured graph, and ``h1``,
    ``h2`` the core vertices and extra exceptional classes of the structured
    certificate. ``h(2)`` is the sharper value 4.
    """
    if max_beta < 1:
        raise ValueError("max_beta must be at least 1")
    h, f, g, h1, h2 = {1: 1}, {1: 1}, {1: 1}, {1: 1}, {1: 1}
    for b in range(2, max_beta + 1):
        h[b] = 4 if b == 2 else 3 * b + (2 * b + 1) * h[b - 1]
        f[b] = b + b * f[b - 1]
        g[b] = g[b - 1] + h[b]
        h1[b] = 2 * b + (2 * b + 1) * h1[b - 1]
        h2[b] = b + (2 * b + 1) * h2[b - 1]
    return BoundTables(h, f, g, h1, h2)


def recursion_bound(beta: int) -> int:
    """Class count guaranteed by the general recursion alone (no 4-class shortcut at beta=2)."""
    if beta <= 1:
        return beta
    return 3 * beta + (2 * beta + 1) * recursion_bound(beta - 1)


# ---------------------------------------------------------------------------
# helpers


def _require_triangle_free(D: MultipartiteDigraph) -> None:
    tri = find_cyclic_triangle(D)
    if tri is not None:
        raise PreconditionTriangle(tri)


def _verified_classes(D: MultipartiteDigraph, classes: Iterable[int], **structure) -> DominationCertificate:
    cert = check_class_domination(D, classes)
    if isinstance(cert, Violation):
        raise InternalContradiction(f"class set {tuple(sorted(classes))} fails: {cert.reason}")
    if structure:
        cert = DominationCertificate(cert.kind, cert.chosen, cert.witness, **structure)
        bad = check_structure(D, cert)
        if bad is not None:
            raise InternalContradiction(bad.reason)
    return cert


def _verified_vertices(D: MultipartiteDigraph, W: Iterable[int]) -> DominationCertificate:
    cert = check_vertex_domination(D, W)
    if isinstance(cert, Violation):
        raise InternalContradiction(f"vertex set {tuple(sorted(W))} fails: {cert.reason}")
    return cert


def _union_of_classes(D: MultipartiteDigraph, classes: Iterable[int]) -> int:
    mask = 0
    for c in classes:
        mask |= D.class_mask[c]
    return mask


def _closed_out(D: MultipartiteDigraph, mask: int) -> int:
    result = mask
    for u in bits(mask):
        result |= D.out_mask[u]
    return result


# ---------------------------------------------------------------------------
# beta = 1


def _beta1_class(D: MultipartiteDigraph) -> int:
    best, best_size = -1, -1
    for c in range(D.num_classes):
        size = popcount(_closed_out(D, D.class_mask[c]))
        if size > best_size:
            best, best_size = c, size
    return best


def _require_beta(D: MultipartiteDigraph, allowed: Sequence[int]) -> int:
    beta = beta_exact(D)
    if beta not in allowed:
        raise PreconditionBeta(beta, allowed, beta_witness(D))
    return beta


def dominate_beta1(D: MultipartiteDigraph) -> tuple[int, DominationCertificate]:
    """One dominating class when every cross-class pair is adjacent.

    Picks the class with the largest closed out-neighbourhood (lowest index
    on ties); such a class always dominates.
    """
    _require_triangle_free(D)
    _require_beta(D, (1,))
    K = _beta1_class(D)
    return K, _verified_classes(D, [K])


class StrongBeta1(NamedTuple):
    K: int
    k: int
    L: int | None
    certificate: DominationCertificate


def _beta1_strong(D: MultipartiteDigraph) -> StrongBeta1:
    K = _beta1_class(D)
    k = max(D.classes[K], key=lambda v: (popcount(D.out_mask[v]), -v))
    missed = D.all_mask & ~D.class_mask[K] & ~D.out_mask[k]
    leftover = sorted({D.class_of[v] for v in bits(missed)})
    if len(leftover) > 1:
        raise InternalContradiction(
            f"vertex {k} of class {K} misses classes {leftover}; at most one is possible"
        )
    L = leftover[0] if leftover else None
    exceptional = (K,) if L is None else tuple(sorted((K, L)))
    cert = _verified_classes(D, [K], core_vertices=(k,), exceptional_classes=exceptional)
    return StrongBeta1(K, k, L, cert)


def dominate_beta1_strong(D: MultipartiteDigraph) -> StrongBeta1:
    """Dominating class ``K`` plus a single vertex ``k`` of it covering all but one class ``L``.

    ``k`` has the most out-neighbours within ``K`` (lowest id on ties). Every
    vertex outside ``K`` and ``L`` is an out-neighbour of ``k``; ``L`` is
    ``None`` when ``k`` alone already covers everything outside ``K``.
    """
    _require_triangle_free(D)
    _require_beta(D, (1,))
    return _beta1_strong(D)


# ---------------------------------------------------------------------------
# beta = 2


def _beta2_rebuild(D: MultipartiteDigraph, prefix: int, p: int) -> list[int]:
    """New dominating classes for ``D[prefix]`` once ``p`` is left undominated."""
    P = D.class_of[p]
    adj_p = D.out_mask[p] | D.in_mask[p]
    second = prefix & ~D.class_mask[P] & ~adj_p
    chosen = [P]
    q_vertex = None
    if second:
        sub = induced_subdigraph(D, bits(second))
        if beta_exact(sub) != 1:
            raise InternalContradiction("vertices nonadjacent to the new vertex are not pairwise adjacent across classes")
        strong = _beta1_strong(sub)
        chosen.append(sub.parent_class[strong.K])
        q_vertex = sub.parent_vertex[strong.k]
        if strong.L is not None:
            chosen.append(sub.parent_class[strong.L])
    covered = _closed_out(D, _union_of_classes(D, chosen) & prefix)
    rest = prefix & ~covered
    if rest:
        if q_vertex is not None and rest & (D.out_mask[q_vertex] | D.in_mask[q_vertex]):
            raise InternalContradiction("an undominated vertex is adjacent to the chosen core vertex")
        sub = induced_subdigraph(D, bits(rest))
        if beta_exact(sub) != 1:
            raise InternalContradiction("undominated remainder has two independent vertices")
        chosen.append(sub.parent_class[_beta1_class(sub)])
    return chosen


def dominate_beta2(D: MultipartiteDigraph) -> tuple[tuple[int, ...], DominationCertificate]:
    """At most four dominating classes when at most two transversal vertices are independent.

    Vertices are added in increasing id order. A valid class set for the
    prefix is kept until a new vertex ``p`` is neither in it nor dominated by
    it; the set is then rebuilt from the class of ``p``, the dominating class
    of the vertices nonadjacent to ``p``, that class's single exceptional
    class, and one class for whatever is still undominated.
    """
    _require_triangle_free(D)
    _require_beta(D, (0, 1, 2))
    chosen: list[int] = []
    prefix = 0
    for p in range(D.num_vertices):
        prefix |= 1 << p
        union = _union_of_classes(D, chosen) & prefix
        if union >> p & 1 or D.in_mask[p] & union:
            continue
        chosen = sorted(set(_beta2_rebuild(D, prefix, p)))
        if len(chosen) > 4:
            raise InternalContradiction(f"rebuilt set {chosen} has more than four classes")
        sub = induced_subdigraph(D, bits(prefix))
        local = [sub.parent_class.index(c) for c in chosen]
        if isinstance(check_class_domination(sub, local), Violation):
            raise InternalContradiction(f"rebuilt set {chosen} fails on the first {p + 1} vertices")
    return tuple(chosen), _verified_classes(D, chosen)


# ---------------------------------------------------------------------------
# general beta


class _Partial(NamedTuple):
    classes: frozenset
    core: frozenset | None
    exceptional: frozenset | None


def _best_spread_tuple(D: MultipartiteDigraph, size: int, node_budget: int) -> tuple[int, ...]:
    """Vertices from ``size`` distinct classes maximising the closed out-neighbourhood.

    Two exhaustive branch-and-bound passes. The first finds the optimum
    value, trying high-coverage vertices first from a greedy incumbent; the
    second walks sorted tuples in lexicographic order and stops at the first
    one reaching that value.
    """
    n = D.num_vertices
    closed = [D.out_mask[v] | 1 << v for v in range(n)]
    nodes = [0]

    def search(order: list[int], need: list[int], stop_on_hit: bool) -> tuple[int, ...] | None:
        m = len(order)
        suffix = [0] * (m + 1)
        classes_after = [0] * (m + 1)
        for i in range(m - 1, -1, -1):
            suffix[i] = suffix[i + 1] | closed[order[i]]
            classes_after[i] = classes_after[i + 1] | 1 << D.class_of[order[i]]
        picked: list[int] = []
        found: list[tuple[int, ...]] = []

        def walk(start: int, cur: int, used: int) -> bool:
            nodes[0] += 1
            if nodes[0] > node_budget:
                raise BudgetExceeded(f"spread-tuple search exceeded {node_budget} nodes")
            left = size - len(picked)
            if left == 0:
                value = popcount(cur)
                if value >= need[0]:
                    found.append(tuple(picked))
                    need[0] = value + (0 if stop_on_hit else 1)
                    return stop_on_hit
                return False
            if popcount(classes_after[start] & ~used) < left:
                return False
            if popcount(cur | suffix[start]) < need[0]:
                return False
            # submodular bound: best marginal gain per still-unused class
            gain: dict[int, int] = {}
            for i in range(start, m):
                c = D.class_of[order[i]]
                if not used >> c & 1:
                    g = popcount(closed[order[i]] & ~cur)
                    if g > gain.get(c, -1):
                        gain[c] = g
            if popcount(cur) + sum(sorted(gain.values(), reverse=True)[:left]) < need[0]:
                return False
            for i in range(start, m):
                v = order[i]
                c = D.class_of[v]
                if used >> c & 1:
                    continue
                picked.append(v)
                if walk(i + 1, cur | closed[v], used | 1 << c):
                    return True
                picked.pop()
                if need[0] > n:
                    return False
            return False

        walk(0, 0, 0)
        return found[-1] if found else None

    # greedy incumbent
    cur, used = 0, 0
    for _ in range(size):
        pick = max(
            (v for v in range(n) if not used >> D.class_of[v] & 1),
            key=lambda v: (popcount(closed[v] & ~cur), -v),
        )
        cur |= closed[pick]
        used |= 1 << D.class_of[pick]
    need = [popcount(cur)]
    if need[0] < n:
        by_coverage = sorted(range(n), key=lambda v: (-popcount(closed[v]), v))
        need[0] += 1
        search(by_coverage, need, stop_on_hit=False)
        need[0] -= 1
    best = search(list(range(n)), need, stop_on_hit=True)
    if best is None:
        raise InternalContradiction("lexicographic pass missed the optimum value")
    return best


def _partition_parts(D: MultipartiteDigraph, spread: Sequence[int]) -> dict[int, int]:
    """Split the classes not touched by ``spread`` into parts 0..len(spread)+1 (as vertex masks)."""
    kmask = to_mask(spread)
    hit = 0
    for k in spread:
        hit |= D.out_mask[k]
    own = _union_of_classes(D, {D.class_of[k] for k in spread})
    parts = {i: 0 for i in range(len(spread) + 2)}
    for v in bits(D.all_mask & ~own):
        if hit >> v & 1:
            parts[0] |= 1 << v
            continue
        sends = D.out_mask[v] & kmask
        for i, k in enumerate(spread, start=1):
            if not sends >> k & 1:
                parts[i] |= 1 << v
                break
        else:
            parts[len(spread) + 1] |= 1 << v
    return parts


def _lift(sub: MultipartiteDigraph, part: _Partial) -> _Partial:
    classes = frozenset(sub.parent_class[c] for c in part.classes)
    if part.core is None:
        return _Partial(classes, None, None)
    return _Partial(
        classes,
        frozenset(sub.parent_vertex[v] for v in part.core),
        frozenset(sub.parent_class[c] for c in part.exceptional),
    )


def _merge(parts: Iterable[_Partial]) -> _Partial:
    classes, core, exceptional = set(), set(), set()
    structured = True
    for p in parts:
        classes |= p.classes
        if p.core is None:
            structured = False
        else:
            core |= p.core
            exceptional |= p.exceptional
    if not structured:
        return _Partial(frozenset(classes), None, None)
    return _Partial(frozenset(classes), frozenset(core), frozenset(exceptional))


def _dominate(D: MultipartiteDigraph, strict: bool, node_budget: int, cap: int | None = None) -> _Partial:
    if D.num_vertices == 0:
        return _Partial(frozenset(), frozenset(), frozenset())
    beta = beta_exact(D)
    if cap is not None and beta > cap:
        raise InternalContradiction(f"subproblem has beta {beta}, expected at most {cap}")
    if beta == 1:
        strong = _beta1_strong(D)
        exceptional = {strong.K} if strong.L is None else {strong.K, strong.L}
        return _Partial(frozenset({strong.K}), frozenset({strong.k}), frozenset(exceptional))
    if beta == 2 and not strict:
        classes, _ = dominate_beta2(D)
        return _Partial(frozenset(classes), None, None)

    width = 2 * beta
    if D.num_classes <= width:
        every = frozenset(range(D.num_classes))
        return _Partial(every, frozenset(c[0] for c in D.classes), every)

    spread = _best_spread_tuple(D, width, node_budget)
    spread_classes = frozenset(D.class_of[k] for k in spread)
    pieces = [_Partial(spread_classes, frozenset(spread), spread_classes)]
    parts = _partition_parts(D, spread)
    for i in range(1, width + 1):
        if parts[i]:
            sub = induced_subdigraph(D, bits(parts[i]))
            pieces.append(_lift(sub, _dominate(sub, strict, node_budget, cap=beta - 1)))

    last = parts[width + 1]
    if last:
        sub = induced_subdigraph(D, bits(last))
        if beta_exact(sub) <= beta - 1:
            pieces.append(_lift(sub, _dominate(sub, strict, node_budget, cap=beta - 1)))
        else:
            lead = lex_first_independent_set(transversal_conflicts(sub), beta)
            if lead is None:
                raise InternalContradiction("no transversal independent set of full size in the last part")
            lead_classes = frozenset(sub.parent_class[sub.class_of[v]] for v in lead)
            # lead classes are chosen whole, so need no domination and count as exceptional
            pieces.append(_Partial(lead_classes, frozenset(), lead_classes))
            rest = last & ~_union_of_classes(D, lead_classes)
            if rest:
                rsub = induced_subdigraph(D, bits(rest))
                if beta_exact(rsub) > beta - 1:
                    raise InternalContradiction(
                        "removing the lead classes did not lower beta in the last part"
                    )
                pieces.append(_lift(rsub, _dominate(rsub, strict, node_budget, cap=beta - 1)))
    return _merge(pieces)


class GeneralResult(NamedTuple):
    classes: tuple[int, ...]
    certificate: DominationCertificate


def dominate_general(
    D: MultipartiteDigraph, mode: str = "dispatch", *, node_budget: int = DEFAULT_NODE_BUDGET
) -> GeneralResult:
    """Dominating class set whose size depends only on beta.

    ``mode="dispatch"`` uses the one-class and four-class algorithms for
    beta 1 and 2 and the general recursion above that. ``mode="strict"``
    runs the general recursion from beta 2 upward at every level, which
    also yields a certificate with ``core_vertices`` (a bounded vertex set
    dominating everything outside ``exceptional_classes``).

    Class count is at most ``bound_tables(beta).h[beta]`` in dispatch mode
    and ``recursion_bound(beta)`` in strict mode.
    """
    if mode not in ("dispatch", "strict"):
        raise ValueError(f"unknown mode {mode!r}")
    _require_triangle_free(D)
    result = _dominate(D, mode == "strict", node_budget)
    classes = tuple(sorted(result.classes))
    if result.core is None:
        return GeneralResult(classes, _verified_classes(D, classes))
    cert = _verified_classes(
        D,
        classes,
        core_vertices=tuple(sorted(result.core)),
        exceptional_classes=tuple(sorted(result.exceptional)),
    )
    return GeneralResult(classes, cert)


def extra_exceptional(D: MultipartiteDigraph, cert: DominationCertificate) -> tuple[int, ...]:
    """Exceptional classes that are not the home class of some core vertex."""
    own = {D.class_of[v] for v in cert.core_vertices or ()}
    return tuple(c for c in cert.exceptional_classes or () if c not in own)


# ---------------------------------------------------------------------------
# vertex domination


def semi_kernel(D: MultipartiteDigraph | SimpleDigraph) -> frozenset[int]:
    """Independent set reaching every vertex by a directed path of length at most two.

    Peel off the lowest remaining vertex ``x`` together with its
    out-neighbours; unwinding, keep ``x`` unless a kept vertex has an arc
    into it. Works for any oriented graph.
    """
    D = as_multipartite(D)
    peeled = []
    remaining = D.all_mask
    while remaining:
        x = (remaining & -remaining).bit_length() - 1
        peeled.append(x)
        remaining &= ~(D.out_mask[x] | 1 << x)
    kept = 0
    for x in reversed(peeled):
        if not D.in_mask[x] & kept:
            kept |= 1 << x
    return frozenset(bits(kept))


def _source(D: MultipartiteDigraph, mask: int) -> int | None:
    """The vertex of ``mask`` with no in-arc from ``mask`` that reaches all of it, if any."""
    for v in bits(mask):
        if not D.in_mask[v] & mask and not mask & ~D.out_mask[v] & ~(1 << v):
            return v
    return None


def _dominate_clique_acyclic(D: MultipartiteDigraph) -> set[int]:
    n = D.num_vertices
    if n == 0:
        return set()
    alpha = alpha_exact(D)
    if alpha == 1:
        src = _source(D, D.all_mask)
        if src is None:
            raise InternalContradiction("tournament without cyclic triangle has no source")
        return {src}
    U = sorted(semi_kernel(D))
    umask = to_mask(U)
    dominated = _closed_out(D, umask)
    groups = {u: 0 for u in U}
    for w in bits(D.all_mask & ~dominated):
        adj = D.out_mask[w] | D.in_mask[w]
        for u in U:
            if not adj >> u & 1:
                groups[u] |= 1 << w
                break
        else:
            raise InternalContradiction(f"vertex {w} is adjacent to every semi-kernel vertex")
    result = set(U)
    for u in U:
        if groups[u]:
            sub = induced_subdigraph(D, bits(groups[u]))
            result |= {sub.parent_vertex[v] for v in _dominate_clique_acyclic(sub)}
    return result


def dominate_clique_acyclic(D: MultipartiteDigraph | SimpleDigraph) -> tuple[frozenset[int], DominationCertificate]:
    """Dominating vertex set of size at most ``f(alpha)`` for graphs without cyclic triangles.

    Takes a semi-kernel ``U``; every vertex it misses is nonadjacent to some
    ``u`` in ``U`` and goes to the group of the lowest such ``u``. Each group
    has a smaller independence number and is handled recursively.
    """
    D = as_multipartite(D)
    _require_triangle_free(D)
    found = _dominate_clique_acyclic(D)
    return frozenset(found), _verified_vertices(D, found)


def dominate_alpha2(D: MultipartiteDigraph | SimpleDigraph) -> tuple[frozenset[int], DominationCertificate]:
    """At most three dominating vertices when the independence number is at most two.

    Vertices are added in increasing id order, keeping a dominating triple
    of the prefix; an undominated newcomer ``p`` triggers a rebuild as
    ``{p, q, r}`` with ``q`` the source of the vertices nonadjacent to ``p``
    and ``r`` the source of what ``p`` and ``q`` leave uncovered.
    """
    D = as_multipartite(D)
    _require_triangle_free(D)
    alpha = alpha_exact(D)
    if alpha > 2:
        raise PreconditionAlpha(alpha, (0, 1, 2), alpha_witness(D))
    chosen: set[int] = set()
    prefix = 0
    for p in range(D.num_vertices):
        prefix |= 1 << p
        cmask = to_mask(chosen)
        if p in chosen or D.in_mask[p] & cmask:
            continue
        chosen = {p}
        far = prefix & ~(D.out_mask[p] | D.in_mask[p] | 1 << p)
        if far:
            q = _source(D, far)
            if q is None:
                raise InternalContradiction("vertices nonadjacent to the new vertex do not form a transitive tournament")
            chosen.add(q)
        rest = prefix & ~_closed_out(D, to_mask(chosen))
        if rest:
            r = _source(D, rest)
            if r is None:
                raise InternalContradiction("undominated remainder is not a transitive tournament")
            chosen.add(r)
    return frozenset(chosen), _verified_vertices(D, chosen)


def dominate_acyclic_orientation(D: MultipartiteDigraph | SimpleDigraph) -> tuple[frozenset[int], DominationCertificate]:
    """Independent dominating set of an acyclic orientation, layer by layer.

    Repeatedly take the remaining in-degree-zero vertices and delete them with
    their out-neighbours. The result is independent, hence at most alpha.
    """
    D = as_multipartite(D)
    cycle = find_directed_cycle(D)
    if cycle is not None:
        raise NotAcyclic(cycle)
    remaining = D.all_mask
    chosen = 0
    while remaining:
        layer = 0
        for v in bits(remaining):
            if not D.in_mask[v] & remaining:
                layer |= 1 << v
        chosen |= layer
        remaining &= ~_closed_out(D, layer)
    return frozenset(bits(chosen)), _verified_vertices(D, bits(chosen))


def dominate_via_clique_cover(
    D: MultipartiteDigraph | SimpleDigraph, cover: Sequence[Iterable[int]]
) -> tuple[frozenset[int], DominationCertificate]:
    """One vertex per clique: the source of the transitive tournament it spans."""
    D = as_multipartite(D)
    adj = underlying_adjacency(D)
    cliques = [tuple(sorted(set(c))) for c in cover]
    seen = 0
    for clique in cliques:
        for i, u in enumerate(clique):
            if not 0 <= u < D.num_vertices:
                raise NotACover(f"vertex {u} is not in the digraph")
            for v in clique[i + 1:]:
                if not adj[u] >> v & 1:
                    raise NotAClique(f"{clique} is not a clique: {u} and {v} are nonadjacent")
        seen |= to_mask(clique)
    if seen != D.all_mask:
        missing = next(bits(D.all_mask & ~seen))
        raise NotACover(f"vertex {missing} is in no clique of the cover")
    _require_triangle_free(D)
    picks = []
    for clique in cliques:
        src = _source(D, to_mask(clique))
        if src is None:
            raise InternalContradiction(f"clique {clique} has no source")
        picks.append(src)
    return frozenset(picks), _verified_vertices(D, picks)
