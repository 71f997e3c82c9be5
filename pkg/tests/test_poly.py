import itertools
import random

import networkx as nx

import pytest
from hypothesis import given, strategies as st

from pmcut import generators as gen
from pmcut.graph import Graph, connected_components, is_pmc, triangle_saturated_components
from pmcut.oracle import has_pmc_oracle
from pmcut.poly import (
    NotInClass,
    TPresentError,
    TWitness,
    build_supernode_tree,
    caterpillar_criterion,
    find_induced_t,
    is_induced_t,
    is_pseudo_chordal,
    is_t_free,
    solve_max_deg2,
    solve_pseudo_chordal,
    solve_t_free,
    supernode_dp,
)

from .strategies import graphs


def test_deg2_paths_and_cycles():
    for n in range(1, 20):
        assert solve_max_deg2(gen.path(n)).has_pmc == (n % 2 == 0)
    for n in range(3, 20):
        res = solve_max_deg2(gen.cycle(n))
        assert res.has_pmc == (n % 4 == 0)
        if res.has_pmc:
            assert is_pmc(gen.cycle(n), res.certificate)


def test_deg2_mixed_components():
    g = gen.disjoint_union(gen.path(2), gen.cycle(8), gen.path(4))
    assert solve_max_deg2(g).has_pmc
    assert not solve_max_deg2(gen.disjoint_union(gen.path(2), gen.cycle(6))).has_pmc
    with pytest.raises(NotInClass):
        solve_max_deg2(gen.star(3))


def test_caterpillar_examples():
    # spine of two with one leaf each is P4
    assert caterpillar_criterion(gen.caterpillar([1, 1])).has_pmc
    assert not caterpillar_criterion(gen.star(3)).has_pmc
    # inner spine vertex with two leaves
    assert not caterpillar_criterion(gen.caterpillar([1, 2, 1])).has_pmc
    res = caterpillar_criterion(gen.caterpillar([1, 0, 0, 1]))
    assert res.has_pmc and res.stats.extra["basic_path"][0] == 4


def test_caterpillar_rejects_non_trees():
    with pytest.raises(NotInClass):
        caterpillar_criterion(gen.cycle(4))
    with pytest.raises(NotInClass):
        caterpillar_criterion(gen.disjoint_union(gen.path(2), gen.path(2)))


def test_non_caterpillar_tree_fails_criterion():
    # spider with three legs of length two has no basic path
    spider = Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    res = caterpillar_criterion(spider)
    assert not res.has_pmc and res.stats.extra["caterpillar"] is False


@given(st.integers(1, 16), st.integers(0, 10**6))
def test_trees_agree_with_oracle(n, seed):
    g = gen.random_tree(n, random.Random(seed))
    assert solve_pseudo_chordal(g).has_pmc == has_pmc_oracle(g)[0]


def test_pseudo_chordal_recognition():
    assert is_pseudo_chordal(gen.complete(5)) == (True, None)
    assert is_pseudo_chordal(gen.triangle_decorated_cycle(5))[0]
    ok, edge = is_pseudo_chordal(gen.cycle(5))
    assert not ok and edge in gen.cycle(5).edges()
    with pytest.raises(NotInClass):
        solve_pseudo_chordal(gen.cycle(4))


@given(st.integers(1, 18), st.integers(0, 10**6))
def test_generated_graphs_are_pseudo_chordal(n, seed):
    rng = random.Random(seed)
    assert is_pseudo_chordal(gen.random_pseudo_chordal(n, rng))[0]
    assert is_pseudo_chordal(gen.random_chordal(n, rng))[0]


def _with_pendant(g, v):
    return Graph(g.n + 1, g.edges() + [(v, g.n)])


@pytest.mark.parametrize("seed", range(40))
def test_dp_tables_match_oracle(seed):
    rng = random.Random(seed)
    g = gen.random_pseudo_chordal(rng.randint(4, 14), rng)
    for comp in connected_components(g):
        sub, _ = g.induced_subgraph(comp)
        tree = supernode_dp(build_supernode_tree(sub))
        for i in range(len(tree.nodes)):
            part, labels = sub.induced_subgraph(tree.subtree_vertices(i))
            assert tree.pmc[i] == has_pmc_oracle(part)[0]
            if tree.attach[i] is not None:
                # m(S): a PMC of the subtree in which r(S) is matched upwards
                r = labels.index(tree.attach[i])
                assert tree.m[i] == has_pmc_oracle(_with_pendant(part, r))[0]


def test_supernodes_stay_monochromatic():
    g = gen.disjoint_union(gen.triangle_decorated_cycle(4), gen.path(2))
    g = Graph(g.n, g.edges() + [(0, 8)])
    res = solve_pseudo_chordal(g)
    if res.has_pmc:
        for comp in triangle_saturated_components(g)[1]:
            assert len({res.certificate.side[v] for v in comp}) == 1


def test_t_witness_on_t():
    t = gen.t_graph()
    free, w = is_t_free(t)
    assert not free and is_induced_t(t, w)
    assert sorted(w.vertices()) == list(range(6))
    assert w.to_json()["center"] == 1


def test_t_free_families():
    for g in (gen.complete(6), gen.cycle(9), gen.star(5), gen.cube(), gen.path(5)):
        assert is_t_free(g) == (True, None)


@given(graphs(max_n=9))
def test_find_t_is_induced(g):
    w = find_induced_t(g)
    if w is not None:
        assert is_induced_t(g, w)


def test_is_induced_t_rejects_chords():
    g = Graph(6, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (2, 4)])
    assert not is_induced_t(g, TWitness(0, 5, 1, 2, 3, 4))
    assert find_induced_t(g) is None


@given(graphs(max_n=10))
def test_t_free_solver_matches_oracle(g):
    if is_t_free(g)[0]:
        assert solve_t_free(g).has_pmc == has_pmc_oracle(g)[0]


def test_t_free_solver_reports_witness():
    g = Graph(8, [(0, 4), (0, 7), (1, 3), (1, 5), (2, 3), (2, 6), (3, 7), (5, 7)])
    with pytest.raises(TPresentError) as info:
        solve_t_free(g)
    assert is_induced_t(g, info.value.witness)


def _has_induced_t_brute(g):
    t = nx.Graph(gen.t_graph().edges())
    for six in itertools.combinations(range(g.n), 6):
        sub = nx.Graph([(u, v) for u, v in g.edges() if u in six and v in six])
        sub.add_nodes_from(six)
        if nx.is_isomorphic(sub, t):
            return True
    return False


@given(graphs(min_n=6, max_n=8))
def test_find_t_is_complete(g):
    assert (find_induced_t(g) is not None) == _has_induced_t_brute(g)
