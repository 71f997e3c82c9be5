"""Exact branch-and-reduce search for perfect matching cuts.

For a seed edge ``ab`` the search grows two disjoint vertex sets ``A`` (forced
into X) and ``B`` (forced into Y); every other vertex is free (``F``).  One
always applies the first applicable rule in the fixed preference order
R1..R8 (reductions), then B1..B7 (branchings).  Each branching child removes
a proven minimum number of vertices from ``F``; the worst rule is B3 with
vector (4, 2), whose factor 1.27202... bounds the search tree.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .graph import Cut, Graph, X, Y, connected_components, is_pmc
from .result import SolveResult, SolveStats, checked, solve_by_components

log = logging.getLogger(__name__)

REDUCTION_ORDER = ("R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8")
BRANCH_ORDER = ("B1", "B2", "B3", "B4", "B5", "B6", "B7")


class MeasureViolation(AssertionError):
    """A branching child removed fewer free vertices than its rule guarantees."""


@dataclass
class SolverState:
    """The tri-partition (A, B, F) of the vertex set.

    ``F`` is stored explicitly and kept equal to ``V - (A | B)``; rules only
    ever move vertices out of it.  ``bd_a``/``bd_b`` hold the vertices of A/B
    that still have a free neighbour; every rule except R1 looks only there.
    ``dirty`` collects vertices moved since R1 last passed, or is None when
    R1 must scan everything.
    """

    graph: Graph
    A: set[int]
    B: set[int]
    F: set[int]
    depth: int = 0
    trace: list[str] | None = None
    bd_a: set[int] | None = None
    bd_b: set[int] | None = None
    dirty: set[int] | None = None

    def __post_init__(self):
        if self.bd_a is None or self.bd_b is None:
            nb = self.graph.neighbors
            self.bd_a = {z for z in self.A if nb(z) & self.F}
            self.bd_b = {z for z in self.B if nb(z) & self.F}

    @classmethod
    def seeded(cls, g: Graph, a: int, b: int, trace: bool = False) -> "SolverState":
        free = set(range(g.n)) - {a, b}
        return cls(g, {a}, {b}, free, 0, [] if trace else None, dirty={a, b})

    def copy(self) -> "SolverState":
        trace = None if self.trace is None else list(self.trace)
        dirty = None if self.dirty is None else set(self.dirty)
        return SolverState(self.graph, set(self.A), set(self.B), set(self.F), self.depth, trace,
                           set(self.bd_a), set(self.bd_b), dirty)

    def assign(self, to_a: set[int], to_b: set[int]) -> bool:
        """Move free vertices to A and B; False if a vertex is sent to both."""
        if to_a & to_b:
            return False
        if not (to_a <= self.F and to_b <= self.F):
            raise AssertionError("rules may only move free vertices")
        nb = self.graph.neighbors
        self.A |= to_a
        self.B |= to_b
        self.F -= to_a
        self.F -= to_b
        moved = to_a | to_b
        touched = set(moved)
        for v in moved:
            touched |= nb(v)
        for z in touched:
            if z in self.F:
                continue
            bd = self.bd_a if z in self.A else self.bd_b
            if nb(z) & self.F:
                bd.add(z)
            else:
                bd.discard(z)
        if self.dirty is not None:
            self.dirty |= moved
        return True

    def boundary(self, side: int) -> set[int]:
        return self.bd_a if side == 0 else self.bd_b

    def check_invariants(self) -> None:
        assert self.A and self.B, "A and B must be non-empty once seeded"
        assert not (self.A & self.B)
        assert self.F == set(range(self.graph.n)) - self.A - self.B
        nb = self.graph.neighbors
        assert self.bd_a == {z for z in self.A if nb(z) & self.F}
        assert self.bd_b == {z for z in self.B if nb(z) & self.F}

    def cut(self) -> Cut:
        return Cut.from_sets(self.graph.n, self.A, self.B)


@dataclass(frozen=True)
class BranchVector:
    decreases: tuple[int, ...]

    def __post_init__(self):
        if len(self.decreases) < 1 or any(t < 1 for t in self.decreases):
            raise ValueError(f"invalid branching vector {self.decreases}")

    def factor(self, tol: float = 1e-9) -> float:
        return branching_factor(self, tol)


@dataclass
class BranchChoice:
    rule: str
    pivot: int
    children: list[SolverState]
    vector: BranchVector
    minimums: tuple[int, ...]
    pruned: int = 0


@dataclass
class ReductionOutcome:
    kind: str  # "reduced" | "infeasible" | "exhausted"
    state: SolverState
    reason: str | None = None
    fired: list[str] = field(default_factory=list)


# ---------------------------------------------------------------------------
# Reduction rules.  Each returns None when not applicable.  R1 returns a stop
# reason, the others a pair (to_a, to_b) of free vertex sets.


def _scope(s: SolverState) -> set[int] | None:
    """Vertices within distance two of a vertex moved since R1 last passed.

    Every R1 violation has an anchor (the A- or B-vertex named in its
    message) within distance one of a freshly moved vertex, so looking
    around the dirty set suffices once the rest was checked before.
    """
    if s.dirty is None:
        return None
    nb = s.graph.neighbors
    ring = set(s.dirty)
    for v in s.dirty:
        ring |= nb(v)
    ball = set(ring)
    for v in ring:
        ball |= nb(v)
    return ball


def _r1(s: SolverState, full: bool = False) -> str | None:
    scope = None if full else _scope(s)
    reason = _r1_scan(s, scope)
    if reason is None and not full:
        s.dirty = set()
    return reason


def _r1_scan(s: SolverState, scope: set[int] | None) -> str | None:
    nb = s.graph.neighbors
    A, B, F = s.A, s.B, s.F
    As = sorted(A if scope is None else A & scope)
    Bs = sorted(B if scope is None else B & scope)
    for x in As:
        if len(nb(x) & B) >= 2:
            return f"A-vertex {x} has two B-neighbours"
    for y in Bs:
        if len(nb(y) & A) >= 2:
            return f"B-vertex {y} has two A-neighbours"
    for v in sorted(F if scope is None else F & scope):
        if len(nb(v) & A) >= 2 and len(nb(v) & B) >= 2:
            return f"free vertex {v} has two A- and two B-neighbours"
    for x in As:
        nx = nb(x)
        for y in nx & B:
            if nx & nb(y) & F:
                return f"edge {x}-{y} across has a common free neighbour"
    for x in As:
        counts: dict[int, int] = {}
        for w in nb(x) & F:
            for y in nb(w) & B:
                counts[y] = counts.get(y, 0) + 1
                if counts[y] >= 3:
                    return f"{x} and {y} share three free neighbours"
    for x in As:
        if not (nb(x) & (B | F)):
            return f"A-vertex {x} cannot get a neighbour in Y"
    for y in Bs:
        if not (nb(y) & (A | F)):
            return f"B-vertex {y} cannot get a neighbour in X"

    # Only vertices still waiting for their cross neighbour compete for v.
    def lone(z: int, other: set[int]) -> int | None:
        nz = nb(z)
        if nz & other:
            return None
        fz = nz & F
        return next(iter(fz)) if len(fz) == 1 else None

    for own, other, zs in ((A, B, As), (B, A, Bs)):
        for z in zs:
            v = lone(z, other)
            if v is None:
                continue
            for t in sorted(nb(v) & other):
                if lone(t, own) == v:
                    x, y = (z, t) if own is A else (t, z)
                    return f"{x} and {y} both need free vertex {v} as partner"
    return None


def _free_near(s: SolverState, side: int) -> list[int]:
    """Free vertices adjacent to the given side, ascending."""
    nb = s.graph.neighbors
    out: set[int] = set()
    for z in s.boundary(side):
        out |= nb(z) & s.F
    return sorted(out)


def _r2(s: SolverState):
    nb = s.graph.neighbors
    A, B, F = s.A, s.B, s.F
    for side, own in ((0, A), (1, B)):
        for v in _free_near(s, side):
            if len(nb(v) & own) >= 2:
                return ({v}, set()) if side == 0 else (set(), {v})
    for side in (0, 1):
        for z in sorted(s.boundary(side)):
            fz = nb(z) & F
            if len(fz) < 3:
                continue
            counts: dict[int, int] = {}
            for w in fz:
                for v in nb(w) & F:
                    counts[v] = counts.get(v, 0) + 1
            for v in sorted(counts):
                if counts[v] >= 3:
                    move = {v} | (nb(v) & fz)
                    return (move, set()) if side == 0 else (set(), move)
    return None


def _r3(s: SolverState):
    nb = s.graph.neighbors
    for side in (0, 1):
        for x in sorted(s.boundary(side)):
            fx = nb(x) & s.F
            for u in sorted(fx):
                adj = nb(u) & fx
                if adj:
                    move = {u, min(adj)}
                    return (move, set()) if side == 0 else (set(), move)
    return None


def _r4(s: SolverState):
    nb = s.graph.neighbors
    F = s.F
    xs = set(s.bd_a)
    for y in s.bd_b:
        xs |= nb(y) & s.A
    for x in sorted(xs):
        for y in sorted(nb(x) & s.B):
            fx, fy = nb(x) & F, nb(y) & F
            if fx or fy:
                return set(fx), set(fy)
    return None


def _r5(s: SolverState):
    nb = s.graph.neighbors
    seen: dict[tuple[int, int], int] = {}
    for u in _free_near(s, 0):
        nu = nb(u)
        if len(nu) != 2:
            continue
        p, q = sorted(nu)
        if p in s.A and q in s.B:
            key = (p, q)
        elif q in s.A and p in s.B:
            key = (q, p)
        else:
            continue
        if key in seen:
            return {seen[key]}, {u}
        seen[key] = u
    return None


def _r6(s: SolverState):
    nb = s.graph.neighbors
    for side in (0, 1):
        for x in sorted(s.boundary(side)):
            fx = nb(x) & s.F
            if len(fx) == 1:
                return (set(), set(fx)) if side == 0 else (set(fx), set())
    return None


def _r7(s: SolverState):
    g = s.graph
    nb = g.neighbors
    for side in (0, 1):
        for z in sorted(s.boundary(side)):
            for v in sorted(nb(z) & s.F):
                d = g.degree(v)
                target = None
                if d == 1:
                    target = v
                elif d == 2:
                    (w,) = nb(v) - {z}
                    if w in s.F:
                        target = w
                if target is not None:
                    return (set(), {target}) if side == 0 else ({target}, set())
    return None


def _r8(s: SolverState):
    nb = s.graph.neighbors
    F = s.F
    for x in sorted(s.bd_a):
        fx = nb(x) & F
        counts: dict[int, int] = {}
        for w in fx:
            for y in nb(w) & s.B:
                counts[y] = counts.get(y, 0) + 1
        for y in sorted(counts):
            if counts[y] != 2:
                continue
            fy = nb(y) & F
            if len(fx) >= 3 or len(fy) >= 3:
                return fx - nb(y), fy - nb(x)
    return None


def _r10(s: SolverState):
    nb = s.graph.neighbors
    F = s.F
    for side in (0, 1):
        for z in sorted(s.boundary(side)):
            for u, v in combinations(sorted(nb(z) & F), 2):
                if len(nb(u) & nb(v) & F) >= 2:
                    return ({u, v}, set()) if side == 0 else (set(), {u, v})
    return None


_MOVE_RULES = (("R2", _r2), ("R3", _r3), ("R4", _r4), ("R5", _r5),
               ("R6", _r6), ("R7", _r7), ("R8", _r8))
_R10 = ("R10", _r10)


def _move_rules(use_r10: bool):
    return _MOVE_RULES + (_R10,) if use_r10 else _MOVE_RULES


def assert_reduced_facts(s: SolverState, full: bool = False) -> None:
    """Structural facts guaranteed once none of R1..R8 applies.

    Without ``full`` only the boundary is inspected; elsewhere the facts
    follow from R1 having passed.
    """
    nb = s.graph.neighbors
    A, B, F = s.A, s.B, s.F
    for side, own, other in ((0, A, B), (1, B, A)):
        for z in (own if full else s.boundary(side)):
            assert len(nb(z) & other) <= 1, "E(A, B) must be a matching"
            fz = nb(z) & F
            assert not (nb(z) & other) or not fz, "matched vertex still has free neighbours"
            for u in fz:
                assert not (nb(u) & fz), "free neighbours must be independent"
    for v in (F if full else set(_free_near(s, 0)) | set(_free_near(s, 1))):
        assert len(nb(v) & A) <= 1 and len(nb(v) & B) <= 1, "free vertex with two same-side neighbours"
    for x in (A if full else s.bd_a):
        counts: dict[int, int] = {}
        for w in nb(x) & F:
            for y in nb(w) & B:
                counts[y] = counts.get(y, 0) + 1
        assert all(c <= 2 for c in counts.values()), "pair with three common free neighbours"


def apply_reductions(s: SolverState, use_r10: bool = False, debug: bool = False) -> ReductionOutcome:
    """Apply reduction rules exhaustively in preference order on a copy of ``s``."""
    s = s.copy()
    fired: list[str] = []
    rules = _move_rules(use_r10)
    while True:
        if debug:
            expected = applicable_rules(s, use_r10, branching=False)
        reason = _r1(s)
        if reason is not None:
            if debug:
                assert expected[:1] == ["R1"], expected
            return ReductionOutcome("infeasible", s, reason, fired)
        for rid, rule in rules:
            move = rule(s)
            if move is None:
                continue
            if debug:
                assert expected[:1] == [rid], (rid, expected)
            fired.append(rid)
            if s.trace is not None:
                s.trace.append(rid)
            if not s.assign(*move):
                return ReductionOutcome("infeasible", s, f"{rid} sends a vertex to both sides", fired)
            break
        else:
            if debug:
                assert expected == [], expected
            assert_reduced_facts(s, full=debug)
            return ReductionOutcome("reduced" if fired else "exhausted", s, None, fired)


# ---------------------------------------------------------------------------
# Branching rules.  Each scans pivots on the A side first, then the B side,
# and yields (pivot, [(add_own, add_other)], minimums) in "own/other" terms.


class _View:
    """Per-node lookup tables shared by the branching rules."""

    def __init__(self, s: SolverState):
        nb = s.graph.neighbors
        self.s = s
        self.nb = nb
        # every pivot has a free neighbour, so the boundary is enough
        self.free_nbrs = {z: nb(z) & s.F for z in s.bd_a | s.bd_b}
        near: set[int] = set()
        for f in self.free_nbrs.values():
            near |= f
        self.a_nbrs = {w: nb(w) & s.A for w in near}
        self.b_nbrs = {w: nb(w) & s.B for w in near}

    def sides(self):
        yield 0, self.s.bd_a, self.b_nbrs
        yield 1, self.s.bd_b, self.a_nbrs


def _b1(v: _View):
    for x in sorted(v.s.bd_a):
        fx = v.free_nbrs[x]
        counts: dict[int, int] = {}
        for w in fx:
            for y in v.b_nbrs[w]:
                counts[y] = counts.get(y, 0) + 1
        for y in sorted(counts):
            if counts[y] == 2:
                p, q = sorted(fx & v.free_nbrs[y])
                np_ = (v.nb(p) & v.s.F) | {p}
                nq = (v.nb(q) & v.s.F) | {q}
                return 0, x, [(np_, nq), (nq, np_)], (3, 3)
    return None


def _pivot_split(fx, other_nbrs):
    without = sorted(u for u in fx if not other_nbrs[u])
    with_ = sorted(u for u in fx if other_nbrs[u])
    return without, with_


def _b2(v: _View):
    for side, own, other_nbrs in v.sides():
        for x in sorted(own):
            fx = v.free_nbrs[x]
            if len(fx) != 2:
                continue
            p, q = sorted(fx)
            if len(other_nbrs[p]) == 1 and len(other_nbrs[q]) == 1 and other_nbrs[p] != other_nbrs[q]:
                (y1,) = other_nbrs[p]
                (y2,) = other_nbrs[q]
                n1 = v.free_nbrs[y1] - {p}
                n2 = v.free_nbrs[y2] - {q}
                children = [({q}, {p} | n2), ({p}, {q} | n1)]
                return side, x, children, (3, 3)
    return None


def _b3(v: _View):
    for side, own, other_nbrs in v.sides():
        for x in sorted(own):
            fx = v.free_nbrs[x]
            if len(fx) != 2:
                continue
            without, with_ = _pivot_split(fx, other_nbrs)
            if len(without) == 1 and len(with_) == 1:
                (u,), (w,) = without, with_
                nu = v.nb(u) & v.s.F
                return side, x, [({w}, {u} | nu), ({u}, {w})], (4, 2)
    return None


def _b4(v: _View):
    for side, own, other_nbrs in v.sides():
        for x in sorted(own):
            fx = v.free_nbrs[x]
            r = len(fx)
            if r < 2 or any(other_nbrs[u] for u in fx):
                continue
            children = [(fx - {u}, {u} | (v.nb(u) & v.s.F)) for u in sorted(fx)]
            return side, x, children, (r + 2,) * r
    return None


def _b5(v: _View):
    for side, own, other_nbrs in v.sides():
        for x in sorted(own):
            fx = v.free_nbrs[x]
            without, with_ = _pivot_split(fx, other_nbrs)
            q = len(with_)
            if q < 2:
                continue
            r = len(fx)
            partner_nbrs = []
            for w in with_:
                (y,) = other_nbrs[w]
                partner_nbrs.append(v.free_nbrs[y] - {w})
            everyone = set().union(*partner_nbrs)
            children = [(fx - {u}, {u} | everyone) for u in without]
            for j, w in enumerate(with_):
                rest = set().union(*(n for k, n in enumerate(partner_nbrs) if k != j))
                children.append((fx - {w}, {w} | rest))
            mins = (r + 2 * q,) * len(without) + (r + 2 * (q - 1),) * q
            return side, x, children, mins
    return None


def _b67_candidates(v: _View):
    for side, own, other_nbrs in v.sides():
        for x in sorted(own):
            fx = v.free_nbrs[x]
            without, with_ = _pivot_split(fx, other_nbrs)
            if len(with_) != 1 or len(without) < 2:
                continue
            (w,) = with_
            (y,) = other_nbrs[w]
            vs = v.free_nbrs[y] - {w}
            yield side, x, without, w, vs


def _b6(v: _View):
    for side, x, us, w, vs in _b67_candidates(v):
        for u in us:
            if len(v.nb(u) & vs) >= 2:
                rest = set(us) - {u}
                r = len(us)
                children = [({w} | rest, vs | {u}), (set(us), {w})]
                # proven bound uses s >= 2
                return side, x, children, (r + 3, r + 1)
    return None


def _b7(v: _View):
    for side, x, us, w, vs in _b67_candidates(v):
        uset = set(us)
        children = []
        for u in us:
            children.append(((uset - {u}) | {w}, {u} | (v.nb(u) & v.s.F) | vs))
        for vj in sorted(vs):
            children.append(({vj} | (v.nb(vj) & v.s.F) | uset, (vs - {vj}) | {w}))
        k = len(us) + len(vs)
        return side, x, children, (k + 2,) * k
    return None


_BRANCH_RULES = (("B1", _b1), ("B2", _b2), ("B3", _b3), ("B4", _b4),
                 ("B5", _b5), ("B6", _b6), ("B7", _b7))


def select_branch(s: SolverState) -> BranchChoice | None:
    """Pick the first applicable branching rule and build its children.

    Must only be called on a reduced state with free vertices left.  Returns
    None when no free vertex touches A or B, which on a connected graph means
    ``F`` is empty.
    """
    view = _View(s)
    for rid, rule in _BRANCH_RULES:
        hit = rule(view)
        if hit is None:
            continue
        side, pivot, raw, mins = hit
        children, decreases, pruned = [], [], 0
        for add_own, add_other in raw:
            to_a, to_b = (add_own, add_other) if side == 0 else (add_other, add_own)
            decreases.append(len(to_a | to_b))
            child = s.copy()
            child.depth = s.depth + 1
            if child.trace is not None:
                child.trace.append(rid)
            if child.assign(set(to_a), set(to_b)):
                assert len(s.F) - len(child.F) == decreases[-1]
                children.append(child)
            else:
                pruned += 1
        return BranchChoice(rid, pivot, children, BranchVector(tuple(decreases)), mins, pruned)
    return None


def applicable_rules(s: SolverState, use_r10: bool = False, branching: bool = True) -> list[str]:
    """Every rule whose premise currently holds, in preference order (debug aid)."""
    out = ["R1"] if _r1(s, full=True) is not None else []
    out += [rid for rid, rule in _move_rules(use_r10) if rule(s) is not None]
    if branching and not out and s.F:
        view = _View(s)
        out += [rid for rid, rule in _BRANCH_RULES if rule(view) is not None]
    return out


def terminal_check(s: SolverState) -> tuple[bool, Cut | None]:
    """With no free vertices left, (A, B) itself must be a perfect matching cut."""
    if s.F:
        raise ValueError("terminal_check requires F to be empty")
    cut = s.cut()
    return (True, cut) if is_pmc(s.graph, cut) else (False, None)


# ---------------------------------------------------------------------------
# Branching factors


def branching_factor(v: BranchVector | tuple[int, ...], tol: float = 1e-9) -> float:
    """Unique root in (1, r] of ``1 = sum_i x**(-t_i)``, found by bisection."""
    t = v.decreases if isinstance(v, BranchVector) else tuple(v)
    if len(t) < 2 or any(int(ti) != ti or ti < 1 for ti in t):
        raise ValueError(f"branching vector needs >= 2 positive integer entries, got {t}")
    if tol <= 0:
        raise ValueError("tolerance must be positive")

    def excess(x: float) -> float:
        return 1.0 - sum(x ** -ti for ti in t)

    lo, hi = 1.0, float(len(t))
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if excess(mid) < 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def minimum_vectors(max_branches: int = 12) -> dict[str, list[tuple[int, ...]]]:
    """Worst-case branching vectors per rule, over rule parameters up to a bound."""
    out: dict[str, list[tuple[int, ...]]] = {
        "B1": [(3, 3)],
        "B2": [(3, 3)],
        "B3": [(4, 2)],
        "B4": [(r + 2,) * r for r in range(2, max_branches + 1)],
        "B5": [],
        "B6": [],
        "B7": [],
    }
    for r in range(2, max_branches + 1):
        for q in range(2, r + 1):
            p = r - q
            out["B5"].append((r + 2 * q,) * p + (r + 2 * (q - 1),) * q)
    for r in range(2, max_branches + 1):
        for s in range(2, max_branches + 1 - r + 2):
            out["B6"].append((r + s + 1, r + 1))
            if r + s <= max_branches:
                out["B7"].append((r + s + 2,) * (r + s))
    return out


def worst_case_factors(max_branches: int = 12, tol: float = 1e-10) -> dict[str, float]:
    return {
        rule: max(branching_factor(vec, tol) for vec in vecs)
        for rule, vecs in minimum_vectors(max_branches).items()
    }


# ---------------------------------------------------------------------------
# Search driver


@dataclass
class BranchAudit:
    """Per-node record of branching vectors against their proven minima."""

    records: list[tuple[str, tuple[int, ...], tuple[int, ...]]] = field(default_factory=list)

    @property
    def violations(self) -> list[tuple[str, tuple[int, ...], tuple[int, ...]]]:
        return [r for r in self.records if any(d < m for d, m in zip(r[1], r[2]))]


def _search(
    g: Graph,
    a: int,
    b: int,
    use_r10: bool,
    stats: SolveStats,
    audit: BranchAudit | None = None,
    debug: bool = False,
    trace: bool = False,
) -> Cut | None:
    stack = [SolverState.seeded(g, a, b, trace)]
    while stack:
        state = stack.pop()
        stats.nodes += 1
        stats.depth = max(stats.depth, state.depth)
        out = apply_reductions(state, use_r10, debug)
        for rid in out.fired:
            stats.bump(rid)
        if out.kind == "infeasible":
            stats.bump("R1")
            continue
        state = out.state
        if debug:
            state.check_invariants()
        if not state.F:
            ok, cut = terminal_check(state)
            if ok:
                if trace:
                    stats.extra["trace"] = list(state.trace)
                return cut
            continue
        choice = select_branch(state)
        if choice is None:
            raise AssertionError("free vertices remain but no rule applies; graph not connected")
        stats.bump(choice.rule)
        if audit is not None:
            audit.records.append((choice.rule, choice.vector.decreases, choice.minimums))
        if any(d < m for d, m in zip(choice.vector.decreases, choice.minimums)):
            raise MeasureViolation(
                f"{choice.rule} at {choice.pivot}: vector {choice.vector.decreases} "
                f"below minimum {choice.minimums}")
        stack.extend(reversed(choice.children))
    return None


def _seed_edges(g: Graph, seeds: str) -> list[tuple[int, int]]:
    if seeds == "all":
        return g.edges()
    if seeds == "anchored":
        # every PMC has exactly one cut edge at any fixed vertex
        anchor = min(range(g.n), key=lambda v: (g.degree(v), v))
        return [(min(anchor, w), max(anchor, w)) for w in g.adjacency[anchor]]
    raise ValueError(f"unknown seed strategy {seeds!r}")


def _run_seed(args) -> tuple[Cut | None, SolveStats]:
    g, a, b, use_r10 = args
    stats = SolveStats(seed_edge=(a, b))
    return _search(g, a, b, use_r10, stats), stats


def _solve_connected(
    g: Graph,
    use_r10: bool = False,
    seeds: str = "all",
    workers: int = 1,
    audit: BranchAudit | None = None,
    debug: bool = False,
) -> SolveResult:
    stats = SolveStats()
    edges = _seed_edges(g, seeds)
    if workers > 1 and audit is None and not debug and len(edges) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_seed, [(g, a, b, use_r10) for a, b in edges]))
    else:
        results = None
    for i, (a, b) in enumerate(edges):
        if results is not None:
            cut, seed_stats = results[i]
        else:
            seed_stats = SolveStats(seed_edge=(a, b))
            cut = _search(g, a, b, use_r10, seed_stats, audit, debug)
        stats.merge(seed_stats)
        if cut is not None:
            stats.seed_edge = (a, b)
            return SolveResult(True, cut, stats, "branch")
    return SolveResult(False, None, stats, "branch")


def solve_pmc(
    g: Graph,
    use_r10: bool = False,
    seeds: str = "all",
    workers: int = 1,
    audit: BranchAudit | None = None,
    debug: bool = False,
) -> SolveResult:
    """Decide whether g has a perfect matching cut, with a verified certificate.

    Seed edges are tried in lexicographic order and the first success wins, so
    the result (statistics included) does not depend on ``workers``.
    """
    return solve_by_components(
        g, lambda h: _solve_connected(h, use_r10, seeds, workers, audit, debug), "branch")


def solve_from_seed(
    g: Graph,
    a: int,
    b: int,
    use_r10: bool = False,
    audit: BranchAudit | None = None,
    debug: bool = False,
    trace: bool = False,
) -> SolveResult:
    """Decide whether g has a perfect matching cut with ``a`` in X and ``b`` in Y."""
    if not (0 <= a < g.n and 0 <= b < g.n) or not g.has_edge(a, b):
        raise ValueError(f"({a}, {b}) is not an edge")
    stats = SolveStats(seed_edge=(a, b))
    if g.n % 2:
        return SolveResult(False, None, stats, "branch")
    side = [X] * g.n
    for comp in connected_components(g):
        sub, labels = g.induced_subgraph(comp)
        if a in comp:
            index = {v: i for i, v in enumerate(labels)}
            part_stats = SolveStats(seed_edge=(a, b))
            cut = _search(sub, index[a], index[b], use_r10, part_stats, audit, debug, trace)
            stats.merge(part_stats)
        else:
            res = _solve_connected(sub, use_r10) if len(comp) % 2 == 0 else None
            cut = res.certificate if res is not None else None
            if res is not None:
                stats.merge(res.stats)
        if cut is None:
            return SolveResult(False, None, stats, "branch")
        for i, v in enumerate(labels):
            side[v] = cut.side[i]
    return checked(g, SolveResult(True, Cut(tuple(side)), stats, "branch"))


__all__ = [
    "BranchAudit", "BranchChoice", "BranchVector", "MeasureViolation", "ReductionOutcome",
    "SolverState", "X", "Y", "applicable_rules", "apply_reductions", "assert_reduced_facts",
    "branching_factor", "minimum_vectors", "select_branch", "solve_from_seed", "solve_pmc",
    "terminal_check", "worst_case_factors",
]
