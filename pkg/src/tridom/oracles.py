"""
Exact, exponential-time computation of the graph parameters.

These are the ground truth the constructive solvers are tested against.
All searches are deterministic: subsets are tried by increasing size and,
within a size, in lexicographic order, so the reported optimum is the
lexicographically smallest one.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .core import MultipartiteDigraph, SimpleDigraph, as_multipartite, bits, popcount, to_mask
from .errors import BudgetExceeded, NotBipartite

DEFAULT_VERTEX_BUDGET = 64


def vertex_budget(budget: int | None = None) -> int:
    """Resolve the oracle vertex budget: explicit argument, then ``TRIDOM_BUDGET``, then 64."""
    if budget is not None:
        return budget
    env = os.environ.get("TRIDOM_BUDGET")
    if env:
        return int(env)
    return DEFAULT_VERTEX_BUDGET


def _guard(n: int, budget: int | None, what: str) -> None:
    limit = vertex_budget(budget)
    if n > limit:
        raise BudgetExceeded(f"{what}: {n} vertices exceeds the oracle budget of {limit}")


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class DominationCertificate:
    """Proof that a class set (``kind="classes"``) or vertex set dominates.

    ``witness`` maps each dominated vertex to one in-neighbour inside the
    dominating set. ``core_vertices``/``exceptional_classes`` are filled by
    solvers that also produce the finer structure: the core vertices alone
    dominate every vertex outside the exceptional classes.
    """

    kind: str
    chosen: tuple[int, ...]
    witness: dict[int, int] = field(default_factory=dict, compare=True)
    core_vertices: tuple[int, ...] | None = None
    exceptional_classes: tuple[int, ...] | None = None

    @property
    def size(self) -> int:
        return len(self.chosen)


@dataclass(frozen=True)
class Violation:
    vertex: int
    reason: str

    def __bool__(self):
        # a violation is a failed check
        return False


def check_class_domination(
    D: MultipartiteDigraph, S: Iterable[int]
) -> DominationCertificate | Violation:
    """Check that the union of classes ``S`` dominates every vertex outside it."""
    chosen = tuple(sorted(set(S)))
    for c in chosen:
        if not 0 <= c < D.num_classes:
            raise IndexError(f"class {c} not in 0..{D.num_classes - 1}")
    union = 0
    for c in chosen:
        union |= D.class_mask[c]
    witness = {}
    for v in range(D.num_vertices):
        if union >> v & 1:
            continue
        sources = D.in_mask[v] & union
        if not sources:
            return Violation(v, f"vertex {v} has no in-neighbour in classes {chosen}")
        witness[v] = (sources & -sources).bit_length() - 1
    return DominationCertificate("classes", chosen, witness)


def check_vertex_domination(
    D: MultipartiteDigraph | SimpleDigraph, W: Iterable[int]
) -> DominationCertificate | Violation:
    """Check that the closed out-neighbourhoods of ``W`` cover every vertex."""
    D = as_multipartite(D)
    chosen = tuple(sorted(set(W)))
    union = to_mask(chosen)
    witness = {}
    for v in range(D.num_vertices):
        if union >> v & 1:
            continue
        sources = D.in_mask[v] & union
        if not sources:
            return Violation(v, f"vertex {v} is not in the closed out-neighbourhood of {chosen}")
        witness[v] = (sources & -sources).bit_length() - 1
    return DominationCertificate("vertices", chosen, witness)


def check_structure(D: MultipartiteDigraph, cert: DominationCertificate) -> Violation | None:
    """Check the core/exceptional breakdown of a class certificate.

    Every vertex outside the exceptional classes must be a core vertex or an
    out-neighbour of one.
    """
    if cert.core_vertices is None or cert.exceptional_classes is None:
        return None
    core = to_mask(cert.core_vertices)
    exceptional = 0
    for c in cert.exceptional_classes:
        exceptional |= D.class_mask[c]
    for v in bits(D.all_mask & ~exceptional & ~core):
        if not D.in_mask[v] & core:
            return Violation(v, f"vertex {v} is outside the exceptional classes but not dominated by the core")
    return None


def recheck(D: MultipartiteDigraph, cert: DominationCertificate) -> DominationCertificate | Violation:
    """Re-derive a certificate from scratch; used to audit solver output."""
    if cert.kind == "classes":
        fresh = check_class_domination(D, cert.chosen)
        if isinstance(fresh, Violation):
            return fresh
        bad = check_structure(D, cert)
        if bad is not None:
            return bad
        return DominationCertificate(
            "classes", fresh.chosen, fresh.witness, cert.core_vertices, cert.exceptional_classes
        )
    return check_vertex_domination(D, cert.chosen)


# ---------------------------------------------------------------------------
# maximum independent set


def max_independent_set(adj: Sequence[int], candidates: int | None = None) -> int:
    """Maximum independent set of the graph with neighbour bit-sets ``adj``.

    Returns the set as a bit mask. Branch and bound: candidates are sorted by
    a greedy clique cover, whose size bounds the independence number of what
    is left, and branches that cannot beat the incumbent are cut.
    """
    n = len(adj)
    if candidates is None:
        candidates = (1 << n) - 1
    best = [0, 0]  # size, mask

    def cover_order(P: int) -> tuple[list[int], list[int]]:
        order, bound = [], []
        k = 0
        while P:
            k += 1
            Q = P
            while Q:
                v = (Q & -Q).bit_length() - 1
                Q &= adj[v]
                P &= ~(1 << v)
                order.append(v)
                bound.append(k)
        return order, bound

    def expand(size: int, chosen: int, P: int) -> None:
        order, bound = cover_order(P)
        for i in range(len(order) - 1, -1, -1):
            if size + bound[i] <= best[0]:
                return
            v = order[i]
            nxt = P & ~adj[v] & ~(1 << v)
            if nxt:
                expand(size + 1, chosen | 1 << v, nxt)
            elif size + 1 > best[0]:
                best[0], best[1] = size + 1, chosen | 1 << v
            P &= ~(1 << v)

    if candidates:
        expand(0, 0, candidates)
    return best[1]


def independence_number(adj: Sequence[int], candidates: int | None = None) -> int:
    return popcount(max_independent_set(adj, candidates))


def lex_first_independent_set(adj: Sequence[int], size: int, candidates: int | None = None) -> tuple[int, ...] | None:
    """Lexicographically smallest independent set of exactly ``size`` vertices."""
    n = len(adj)
    if candidates is None:
        candidates = (1 << n) - 1

    @lru_cache(maxsize=None)
    def room(P: int) -> int:
        return independence_number(adj, P)

    chosen: list[int] = []

    def search(P: int) -> bool:
        if len(chosen) == size:
            return True
        for v in bits(P):
            rest = P & ~adj[v] & ~((1 << (v + 1)) - 1)
            if len(chosen) + 1 + room(rest) < size:
                continue
            chosen.append(v)
            if search(rest):
                return True
            chosen.pop()
        return False

    if size == 0:
        return ()
    if room(candidates) < size:
        return None
    search(candidates)
    return tuple(chosen)


def transversal_conflicts(D: MultipartiteDigraph) -> list[int]:
    """Adjacency for transversal independence: arcs either way, or a shared class."""
    return [
        (D.out_mask[v] | D.in_mask[v] | D.class_mask[D.class_of[v]]) & ~(1 << v)
        for v in range(D.num_vertices)
    ]


def underlying_adjacency(D: MultipartiteDigraph) -> list[int]:
    return [D.out_mask[v] | D.in_mask[v] for v in range(D.num_vertices)]


def beta_exact(D: MultipartiteDigraph, *, budget: int | None = None) -> int:
    """Largest set of pairwise non-adjacent vertices from pairwise distinct classes."""
    D = as_multipartite(D)
    _guard(D.num_vertices, budget, "beta_exact")
    return independence_number(transversal_conflicts(D))


def beta_witness(D: MultipartiteDigraph, *, budget: int | None = None) -> tuple[int, ...]:
    D = as_multipartite(D)
    _guard(D.num_vertices, budget, "beta_witness")
    return tuple(bits(max_independent_set(transversal_conflicts(D))))


def alpha_exact(D: MultipartiteDigraph | SimpleDigraph, *, budget: int | None = None) -> int:
    """Independence number of the underlying undirected graph (classes ignored)."""
    D = as_multipartite(D)
    _guard(D.num_vertices, budget, "alpha_exact")
    return independence_number(underlying_adjacency(D))


def alpha_witness(D: MultipartiteDigraph | SimpleDigraph, *, budget: int | None = None) -> tuple[int, ...]:
    D = as_multipartite(D)
    _guard(D.num_vertices, budget, "alpha_witness")
    return tuple(bits(max_independent_set(underlying_adjacency(D))))


# ---------------------------------------------------------------------------
# minimum covers


def _can_cover(target: int, sets: Sequence[int], allowed: int, picks: int) -> bool:
    """Can at most ``picks`` sets with index in ``allowed`` cover ``target``?

    Branches on the uncovered element with the fewest covering sets.
    """
    if not target:
        return True
    if picks == 0:
        return False
    live = [i for i in bits(allowed) if sets[i] & target]
    if not live:
        return False
    widest = max(popcount(sets[i] & target) for i in live)
    if widest * picks < popcount(target):
        return False
    best_elem, best_opts = -1, None
    for e in bits(target):
        opts = [i for i in live if sets[i] >> e & 1]
        if best_opts is None or len(opts) < len(best_opts):
            best_elem, best_opts = e, opts
            if len(opts) <= 1:
                break
    for i in best_opts:
        if _can_cover(target & ~sets[i], sets, allowed & ~(1 << i), picks - 1):
            return True
    return False


def min_cover_lex(target: int, sets: Sequence[int], max_size: int | None = None) -> tuple[int, ...] | None:
    """Smallest index tuple whose sets cover ``target``; lexicographically first among optima.

    Returns ``None`` when no subfamily (of size at most ``max_size``) covers.
    """
    m = len(sets)
    everything = (1 << m) - 1
    union = 0
    for s in sets:
        union |= s
    if target & ~union:
        return None
    limit = m if max_size is None else min(m, max_size)
    size = 0
    while size <= limit and not _can_cover(target, sets, everything, size):
        size += 1
    if size > limit:
        return None

    chosen: list[int] = []

    def descend(remaining: int, start: int) -> bool:
        picks = size - len(chosen)
        if picks == 0:
            return not remaining
        for i in range(start, m):
            rest = remaining & ~sets[i]
            tail = everything & ~((1 << (i + 1)) - 1)
            if _can_cover(rest, sets, tail, picks - 1):
                chosen.append(i)
                if descend(rest, i + 1):
                    return True
                chosen.pop()
        return False

    descend(target, 0)
    return tuple(chosen)


def k_exact(D: MultipartiteDigraph, *, budget: int | None = None) -> tuple[int, DominationCertificate]:
    """Minimum number of classes whose union dominates the rest of ``D``."""
    _guard(D.num_vertices, budget, "k_exact")
    # a class handles its own vertices and its out-neighbours
    sets = []
    for members in D.classes:
        mask = to_mask(members)
        sets.append(mask | _out_of(D, mask))
    best = min_cover_lex(D.all_mask, sets)
    assert best is not None  # all classes always work
    cert = check_class_domination(D, best)
    assert isinstance(cert, DominationCertificate)
    return len(best), cert


def gamma_exact(D: MultipartiteDigraph | SimpleDigraph, *, budget: int | None = None) -> tuple[int, DominationCertificate]:
    """Domination number: fewest vertices whose closed out-neighbourhoods cover ``D``."""
    D = as_multipartite(D)
    _guard(D.num_vertices, budget, "gamma_exact")
    sets = [D.out_mask[v] | 1 << v for v in range(D.num_vertices)]
    best = min_cover_lex(D.all_mask, sets)
    assert best is not None
    cert = check_vertex_domination(D, best)
    assert isinstance(cert, DominationCertificate)
    return len(best), cert


def _out_of(D: MultipartiteDigraph, mask: int) -> int:
    result = 0
    for u in bits(mask):
        result |= D.out_mask[u]
    return result


class Gamma0(NamedTuple):
    gamma_a: int | None
    gamma_b: int | None
    gamma0: int | None


def one_sided_domination(
    D: MultipartiteDigraph, side: int, *, budget: int | None = None
) -> tuple[int, ...] | None:
    """Fewest vertices of class ``side`` whose open out-neighbourhoods cover the other class.

    ``D`` must have exactly two classes. Returns the lexicographically first
    optimal vertex tuple, or ``None`` when even the whole side fails.
    """
    if D.num_classes != 2:
        raise NotBipartite(f"expected 2 classes, got {D.num_classes}")
    _guard(D.num_vertices, budget, "one_sided_domination")
    own = D.classes[side]
    other = D.class_mask[1 - side]
    sets = [D.out_mask[v] & other for v in own]
    best = min_cover_lex(other, sets)
    if best is None:
        return None
    return tuple(own[i] for i in best)


def gamma0_exact(D: MultipartiteDigraph, *, budget: int | None = None) -> Gamma0:
    """One-sided bipartite domination numbers and their minimum (``None`` where undefined)."""
    wa = one_sided_domination(D, 0, budget=budget)
    wb = one_sided_domination(D, 1, budget=budget)
    ga = None if wa is None else len(wa)
    gb = None if wb is None else len(wb)
    defined = [g for g in (ga, gb) if g is not None]
    return Gamma0(ga, gb, min(defined) if defined else None)


def covers_other_side(D: MultipartiteDigraph, side: int, W: Iterable[int]) -> Violation | None:
    """Independent check of a one-sided domination witness."""
    W = tuple(W)
    for w in W:
        if D.class_of[w] != side:
            return Violation(w, f"vertex {w} is not on side {side}")
    reach = _out_of(D, to_mask(W))
    for v in D.classes[1 - side]:
        if not reach >> v & 1:
            return Violation(v, f"vertex {v} receives no arc from {W}")
    return None


def min_clique_cover(D: MultipartiteDigraph | SimpleDigraph, *, budget: int | None = None) -> list[tuple[int, ...]]:
    """Partition of the vertices into as few cliques (of the underlying graph) as possible.

    Plain backtracking colouring of the complement; meant for small inputs.
    """
    D = as_multipartite(D)
    _guard(D.num_vertices, budget, "min_clique_cover")
    n = D.num_vertices
    adj = underlying_adjacency(D)
    # high-degree-in-complement vertices first
    order = sorted(range(n), key=lambda v: popcount(adj[v]))
    for k in range(1, n + 1):
        groups: list[int] = []

        def place(i: int) -> bool:
            if i == n:
                return True
            v = order[i]
            for g in range(len(groups)):
                if groups[g] & ~adj[v] == 0:
                    groups[g] |= 1 << v
                    if place(i + 1):
                        return True
                    groups[g] &= ~(1 << v)
            if len(groups) < k:
                groups.append(1 << v)
                if place(i + 1):
                    return True
                groups.pop()
            return False

        if place(0):
            return sorted(tuple(bits(g)) for g in groups)
    return []
