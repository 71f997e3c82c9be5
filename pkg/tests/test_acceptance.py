"""Acceptance suite: one test per criterion, each logging a PASS/FAIL line."""

import itertools
import random
import statistics
import time
from collections import Counter

import pytest

from pmcut import generators as gen
from pmcut.branching import (
    BranchAudit,
    branching_factor,
    solve_from_seed,
    solve_pmc,
    worst_case_factors,
)
from pmcut.graph import (
    Graph,
    girth,
    is_bipartite,
    is_connected,
    is_disconnected_perfect_matching,
    max_degree,
    triangle_saturated_components,
)
from pmcut.oracle import enumerate_pmcs, has_pmc_oracle, nae_brute
from pmcut.poly import (
    caterpillar_criterion,
    is_induced_t,
    is_t_free,
    solve_pseudo_chordal,
    solve_t_free,
)
from pmcut.reductions import CnfFormula, fano_formula, random_formula, reduce_basic, reduce_girth

RESULTS: list[str] = []


def record(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def test_01_exhaustive_small_graphs():
    start = time.perf_counter()
    total = disagree = 0
    for n in range(1, 7):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            g = Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
            if not is_connected(g):
                continue
            total += 1
            disagree += solve_pmc(g).has_pmc != has_pmc_oracle(g)[0]
    elapsed = time.perf_counter() - start
    record(1, total == 27476 and disagree == 0 and elapsed < 120,
           f"{total} connected graphs on <= 6 vertices, {disagree} disagreements, {elapsed:.1f}s")


def test_02_cube_has_three_cuts():
    cuts = enumerate_pmcs(gen.cube())
    record(2, len(cuts) == 3, f"cube perfect matching cuts: {len(cuts)}")


def test_03_cycle_law():
    bad = []
    for n in range(3, 25):
        want = n % 4 == 0
        c = gen.cycle(n)
        if has_pmc_oracle(c)[0] != want or solve_pmc(c).has_pmc != want:
            bad.append(n)
    record(3, not bad, f"C3..C24 via oracle and branch solver, mismatches at {bad}")


def test_04_c6_separation():
    c6 = gen.cycle(6)
    matchings = [[(0, 1), (2, 3), (4, 5)], [(1, 2), (3, 4), (5, 0)]]
    disconnected = sum(is_disconnected_perfect_matching(c6, m) for m in matchings)
    pmcs = len(enumerate_pmcs(c6))
    record(4, disconnected >= 1 and pmcs == 0,
           f"C6: {disconnected} disconnected perfect matchings, {pmcs} perfect matching cuts")


def test_05_basic_reduction_equivalence():
    rng = random.Random(20240501)
    start = time.perf_counter()
    formulas = [random_formula(rng.randint(3, 6), rng.randint(1, 6), rng) for _ in range(50)]
    formulas.append(fano_formula())
    bad, sat = 0, 0
    for f in formulas:
        g, _ = reduce_basic(f)
        want = nae_brute(f)[0]
        sat += want
        bad += solve_pmc(g).has_pmc != want
    elapsed = time.perf_counter() - start
    # with at most six clauses every monotone formula is NAE-satisfiable; Fano is the negative case
    record(5, bad == 0 and elapsed < 300,
           f"{len(formulas)} formulas ({sat} NAE-satisfiable, Fano included), {bad} mismatches, {elapsed:.1f}s")


@pytest.mark.parametrize("target", [6, 10, 16])
def test_06_girth_reduction_structure(target):
    f = CnfFormula(3, ((1, 2, 3), (1, 2, 3), (1, 2, 3)))
    g, rmap = reduce_girth(f, target)
    h = rmap.h
    expected = 3 * (8 + 12 * (4 * h + 4)) + 4 * 3 * 3 * (h + 1)
    gi = girth(g)
    ok = is_bipartite(g)[0] and max_degree(g) == 3 and gi >= target and g.n == expected
    if target <= 12:
        ok = ok and h == 0 and g.n == 204
    record(6, ok, f"g={target}: h={h}, n={g.n} (closed form {expected}), girth {gi}, "
                  f"max degree {max_degree(g)}, bipartite {is_bipartite(g)[0]}")


def test_07_branching_factors():
    f42 = branching_factor((4, 2))
    f53 = branching_factor((5, 3))
    f33 = branching_factor((3, 3))
    worst = worst_case_factors()
    top = max(worst.values())
    ok = (1.27201 <= f42 <= 1.27203 and f53 < 1.1939 and abs(f33 - 1.25992) <= 1e-4
          and abs(top - worst["B3"]) <= 1e-4 and abs(top - f42) <= 1e-4)
    record(7, ok, f"tau(4,2)={f42:.6f} tau(5,3)={f53:.6f} tau(3,3)={f33:.6f} "
                  f"max over B1-B7={top:.6f} (B3)")


def test_08_measure_audit():
    rng = random.Random(8)
    audit = BranchAudit()
    graphs = 0
    while graphs < 500:
        n = rng.randint(4, 20)
        if graphs % 2 == 0:
            # density sweep from trees to about four edges per vertex
            g = gen.random_connected(n, (n - 1) + (graphs % 20) * (3 * n) // 19, rng)
        else:
            # planted cuts keep the search alive long enough to branch
            g = gen.planted_pmc(n - n % 2, rng.randint(n // 2, 2 * n), rng)
            if not is_connected(g):
                continue
        graphs += 1
        for a, b in g.edges():
            solve_from_seed(g, a, b, audit=audit)
    rules = Counter(rule for rule, _, _ in audit.records)
    bad = len(audit.violations)
    record(8, bad == 0 and graphs == 500,
           f"{graphs} graphs, every seed edge, {len(audit.records)} branching nodes audited "
           f"{dict(sorted(rules.items()))}, {bad} violations")


def _pseudo_chordal_instances(rng):
    for i in range(200):
        kind = i % 4
        if kind == 0:
            yield gen.random_tree(rng.randint(2, 16), rng)
        elif kind == 1:
            yield gen.triangle_decorated_cycle(rng.randint(3, 8))
        elif kind == 2:
            yield gen.random_chordal(rng.randint(2, 16), rng)
        else:
            yield gen.random_pseudo_chordal(rng.randint(2, 16), rng)


def test_09_pseudo_chordal_dp():
    rng = random.Random(9)
    bad = split = count = 0
    for g in _pseudo_chordal_instances(rng):
        count += 1
        res = solve_pseudo_chordal(g)
        bad += res.has_pmc != has_pmc_oracle(g)[0]
        if res.has_pmc:
            for comp in triangle_saturated_components(g)[1]:
                split += len({res.certificate.side[v] for v in comp}) != 1
    record(9, count == 200 and bad == 0 and split == 0,
           f"{count} pseudo-chordal graphs, {bad} mismatches, {split} split supernodes")


def test_10_t_free():
    rng = random.Random(10)
    found = bad = positive = 0
    while found < 200:
        n = rng.randint(2, 14)
        if rng.random() < 0.5:
            g = gen.random_graph(n, rng.choice((0.15, 0.3, 0.5, 0.7, 0.85)), rng)
        else:
            g = gen.planted_pmc(n - n % 2, rng.randint(0, 3 * n), rng)
        if not is_t_free(g)[0]:
            continue
        found += 1
        want = has_pmc_oracle(g)[0]
        positive += want
        bad += solve_t_free(g).has_pmc != want
    with_t = [gen.t_graph(), gen.disjoint_union(gen.cycle(4), gen.t_graph()),
              Graph(8, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6), (6, 7), (2, 7)])]
    witnesses = 0
    for g in with_t:
        free, w = is_t_free(g)
        witnesses += (not free) and is_induced_t(g, w) and len(set(w.vertices())) == 6
    record(10, bad == 0 and witnesses == len(with_t),
           f"{found} T-free graphs ({positive} with a cut), {bad} mismatches; "
           f"{witnesses}/{len(with_t)} valid induced-T witnesses")


def test_11_caterpillars():
    count = bad = 0
    for g in gen.all_caterpillars(12):
        count += 1
        a = caterpillar_criterion(g).has_pmc
        b = solve_pseudo_chordal(g).has_pmc
        c = has_pmc_oracle(g)[0]
        bad += not (a == b == c)
    record(11, count > 0 and bad == 0, f"{count} caterpillars on <= 12 vertices, {bad} disagreements")


def test_12_performance():
    rng = random.Random(12)
    times = []
    for _ in range(10):
        g = gen.random_connected(40, 80, rng)
        start = time.perf_counter()
        solve_pmc(g)
        times.append(time.perf_counter() - start)
    med = statistics.median(times)
    record(12, med < 10.0, f"n=40 m=80, median {med:.3f}s, max {max(times):.3f}s over 10 graphs")
