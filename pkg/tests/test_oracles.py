import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from tridom.core import simple_digraph, validate
from tridom.errors import BudgetExceeded, NotBipartite
from tridom.generators import gen_Dk, gen_pentagons, gen_random_multipartite_trianglefree
from tridom.oracles import (
    DominationCertificate,
    Violation,
    alpha_exact,
    alpha_witness,
    beta_exact,
    beta_witness,
    check_class_domination,
    check_vertex_domination,
    covers_other_side,
    gamma0_exact,
    gamma_exact,
    k_exact,
    lex_first_independent_set,
    min_clique_cover,
    min_cover_lex,
    one_sided_domination,
    underlying_adjacency,
    vertex_budget,
)

from instances import cyclic_k22, pentagon, transitive_tournament


# plain enumeration, written without bitsets, as a second opinion


def naive_independent(D, W, transversal):
    for u, v in combinations(W, 2):
        if (u, v) in D.arcs or (v, u) in D.arcs:
            return False
        if transversal and D.class_of[u] == D.class_of[v]:
            return False
    return True


def naive_max_independent(D, transversal):
    for size in range(D.num_vertices, -1, -1):
        if any(naive_independent(D, W, transversal) for W in combinations(range(D.num_vertices), size)):
            return size


def naive_class_dominating(D, S):
    inside = {v for c in S for v in D.classes[c]}
    return all(v in inside or any((u, v) in D.arcs for u in inside) for v in range(D.num_vertices))


def naive_vertex_dominating(D, W):
    return all(v in W or any((u, v) in D.arcs for u in W) for v in range(D.num_vertices))


def naive_first(options, test):
    for size in range(len(options) + 1):
        for S in combinations(options, size):
            if test(S):
                return S


small = st.builds(
    lambda t, size, p, seed: gen_random_multipartite_trianglefree(t, size, p, seed),
    st.integers(1, 6),
    st.integers(1, 2),
    st.floats(0, 1),
    st.integers(0, 10**6),
)


@settings(max_examples=80, deadline=None)
@given(small)
def test_exact_values_match_plain_enumeration(D):
    assert beta_exact(D) == naive_max_independent(D, True)
    assert alpha_exact(D) == naive_max_independent(D, False)
    k, kc = k_exact(D)
    assert kc.chosen == naive_first(range(D.num_classes), lambda S: naive_class_dominating(D, S))
    g, gc = gamma_exact(D)
    assert gc.chosen == naive_first(range(D.num_vertices), lambda W: naive_vertex_dominating(D, W))
    assert (k, g) == (len(kc.chosen), len(gc.chosen))


@settings(max_examples=80, deadline=None)
@given(small)
def test_parameter_ordering_and_certificates(D):
    b, a = beta_exact(D), alpha_exact(D)
    assert b <= a <= D.num_vertices
    assert b <= D.num_classes
    assert naive_independent(D, beta_witness(D), True)
    assert len(beta_witness(D)) == b
    assert naive_independent(D, alpha_witness(D), False)
    _, kc = k_exact(D)
    _, gc = gamma_exact(D)
    assert isinstance(check_class_domination(D, kc.chosen), DominationCertificate)
    assert isinstance(check_vertex_domination(D, gc.chosen), DominationCertificate)
    assert k_exact(D) == k_exact(D) and gamma_exact(D) == gamma_exact(D)


@settings(max_examples=60, deadline=None)
@given(small, st.data())
def test_adding_an_arc_never_hurts(D, data):
    missing = [
        (u, v)
        for u in range(D.num_vertices)
        for v in range(D.num_vertices)
        if D.class_of[u] != D.class_of[v] and (u, v) not in D.arcs and (v, u) not in D.arcs
    ]
    if not missing:
        return
    arc = data.draw(st.sampled_from(missing))
    E = validate(D.classes, list(D.arcs) + [arc], D.num_vertices)
    assert k_exact(E)[0] <= k_exact(D)[0]
    assert gamma_exact(E)[0] <= gamma_exact(D)[0]


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 12), st.floats(0, 1), st.integers(0, 10**6))
def test_singleton_classes_collapse_parameters(n, p, seed):
    D = gen_random_multipartite_trianglefree(n, 1, p, seed)
    assert k_exact(D)[0] == gamma_exact(D)[0]
    assert beta_exact(D) == alpha_exact(D)


def test_k_examples():
    assert k_exact(cyclic_k22()) == (1, check_class_domination(cyclic_k22(), [0]))
    assert k_exact(pentagon())[0] == 3
    assert k_exact(validate([[0, 1]], []))[0] == 1


def test_gamma_examples():
    assert gamma_exact(pentagon())[0] == 3
    assert gamma_exact(transitive_tournament(6))[1].chosen == (0,)
    assert gamma_exact(gen_pentagons(2))[0] == 6


def test_gamma0_examples():
    assert gamma0_exact(cyclic_k22()) == (2, 2, 2)
    one_way = validate([[0], [1, 2]], [(0, 1), (0, 2)])
    assert gamma0_exact(one_way) == (1, None, 1)
    assert gamma0_exact(gen_Dk(2)).gamma0 == 3
    with pytest.raises(NotBipartite):
        gamma0_exact(pentagon())


def test_one_sided_witness_is_open_coverage():
    D = cyclic_k22()
    W = one_sided_domination(D, 0)
    assert W == (0, 1)
    assert covers_other_side(D, 0, W) is None
    assert isinstance(covers_other_side(D, 0, (0,)), Violation)
    assert isinstance(covers_other_side(D, 0, (2,)), Violation)


def test_checkers_report_violations():
    D = pentagon()
    bad = check_vertex_domination(D, [0])
    assert isinstance(bad, Violation) and not bad
    assert bad.vertex == 2
    cert = check_vertex_domination(D, [0, 2, 3])
    assert cert.witness == {1: 0, 4: 3}
    assert isinstance(check_class_domination(cyclic_k22(), []), Violation)


def test_min_cover_lex_order():
    # {0,1} and {2} cover, as do {0} {1,2}; lexicographic first of size 2 wins
    sets = [0b011, 0b100, 0b001, 0b110]
    assert min_cover_lex(0b111, sets) == (0, 1)
    assert min_cover_lex(0b111, [0b001]) is None
    assert min_cover_lex(0, sets) == ()


def test_lex_first_independent_set():
    D = pentagon()
    adj = underlying_adjacency(D)
    assert lex_first_independent_set(adj, 2) == (0, 2)
    assert lex_first_independent_set(adj, 3) is None


def test_min_clique_cover():
    cover = min_clique_cover(pentagon())
    assert len(cover) == 3
    assert sorted(v for c in cover for v in c) == list(range(5))
    assert min_clique_cover(transitive_tournament(4)) == [(0, 1, 2, 3)]


def test_vertex_budget(monkeypatch):
    big = simple_digraph(70, [])
    with pytest.raises(BudgetExceeded):
        alpha_exact(big)
    assert alpha_exact(big, budget=100) == 70
    monkeypatch.setenv("TRIDOM_BUDGET", "80")
    assert vertex_budget() == 80
    assert gamma_exact(big)[0] == 70
    monkeypatch.setenv("TRIDOM_BUDGET", "10")
    with pytest.raises(BudgetExceeded):
        k_exact(pentagon().__class__([[v] for v in range(11)], [], 11))


def test_dense_beta_search_is_fast():
    rng = random.Random(5)
    D = gen_random_multipartite_trianglefree(12, 4, 0.5, rng.randrange(10**6))
    assert beta_exact(D) == len(beta_witness(D))
