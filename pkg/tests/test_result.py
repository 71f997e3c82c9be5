import pytest

from pmcut import generators as gen
from pmcut.graph import Cut
from pmcut.result import CertificateError, SolveResult, SolveStats, checked, solve_by_components


def test_stats_json_shape():
    stats = SolveStats(nodes=3, seed_edge=(0, 4))
    stats.bump("R2")
    stats.bump("B3", 2)
    doc = stats.to_json()
    assert doc["seed_edge"] == [1, 5]
    assert doc["rule_counts"]["B3"] == 2 and doc["rule_counts"]["R8"] == 0
    assert "R10" not in doc["rule_counts"]
    stats.bump("R10")
    assert stats.to_json()["rule_counts"]["R10"] == 1


def test_merge_adds_counts():
    a, b = SolveStats(nodes=2, depth=1), SolveStats(nodes=5, depth=4)
    b.bump("R1")
    a.merge(b)
    assert (a.nodes, a.depth, a.rule_counts) == (7, 4, {"R1": 1})


def test_checked_rejects_bad_certificates():
    c4 = gen.cycle(4)
    with pytest.raises(CertificateError):
        checked(c4, SolveResult(True, Cut((0, 1, 0, 1))))
    with pytest.raises(CertificateError):
        checked(c4, SolveResult(True, None))
    with pytest.raises(CertificateError):
        checked(c4, SolveResult(False, Cut((0, 0, 1, 1))))
    assert checked(c4, SolveResult(True, Cut((0, 0, 1, 1)))).has_pmc


def test_components_are_merged():
    calls = []

    def fake(h):
        calls.append(h.n)
        side = tuple(1 if i >= h.n // 2 else 0 for i in range(h.n))
        return SolveResult(True, Cut(side))

    g = gen.disjoint_union(gen.path(2), gen.path(2))
    res = solve_by_components(g, fake, "fake")
    assert res.has_pmc and calls == [2, 2] and res.algorithm == "fake"
    assert not solve_by_components(gen.disjoint_union(gen.path(2), gen.path(3)), fake, "fake").has_pmc
