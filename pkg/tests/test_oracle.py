import itertools

import pytest
from hypothesis import given

from pmcut import generators as gen
from pmcut.graph import Graph, is_pmc
from pmcut.oracle import (
    InstanceTooLarge,
    OracleLimits,
    enumerate_pmcs,
    has_pmc_oracle,
    is_nae,
    nae_brute,
)
from pmcut.reductions import CnfFormula, fano_formula

from .strategies import graphs


def naive_pmcs(g):
    out = []
    if g.n == 0:
        return out
    for side in itertools.product((0, 1), repeat=g.n):
        if side[0] == 0 and 1 in side:
            ok = all(sum(side[w] != side[v] for w in g.adjacency[v]) == 1 for v in range(g.n))
            if ok:
                out.append(side)
    return out


@given(graphs(max_n=9))
def test_enumeration_matches_naive(g):
    assert [c.side for c in enumerate_pmcs(g)] == naive_pmcs(g)


@given(graphs(max_n=10))
def test_witness_is_first_enumerated(g):
    ok, cut = has_pmc_oracle(g)
    cuts = enumerate_pmcs(g)
    assert ok == bool(cuts)
    if ok:
        assert cut == cuts[0]
        assert is_pmc(g, cut)


def test_small_cases():
    assert enumerate_pmcs(Graph(0)) == []
    assert has_pmc_oracle(Graph(1)) == (False, None)
    assert [c.side for c in enumerate_pmcs(gen.path(2))] == [(0, 1)]
    # two isolated vertices: no edge to cross
    assert enumerate_pmcs(Graph(2)) == []
    # disjoint edges: the second component may be flipped
    assert len(enumerate_pmcs(Graph(4, [(0, 1), (2, 3)]))) == 2


def test_limits():
    with pytest.raises(InstanceTooLarge):
        has_pmc_oracle(gen.path(26))
    assert has_pmc_oracle(gen.path(26), OracleLimits(max_vertices_pmc=26))[0]
    with pytest.raises(ValueError):
        OracleLimits(max_vertices_pmc=0)
    with pytest.raises(InstanceTooLarge):
        nae_brute(CnfFormula(5, ((1, 2, 3),)), OracleLimits(max_variables_nae=4))


def test_nae_brute():
    ok, a = nae_brute(CnfFormula(3, ((1, 2, 3),)))
    assert ok and a == [False, False, True]
    assert nae_brute(fano_formula()) == (False, None)
    assert not is_nae([(1, 2, 3)], [True, True, True])


def test_nae_matches_itertools():
    f = CnfFormula(5, ((1, 2, 3), (3, 4, 5), (1, 4, 5), (2, 3, 4)))
    first = next(list(a) for a in itertools.product((False, True), repeat=5) if is_nae(f.clauses, a))
    assert nae_brute(f) == (True, first)
