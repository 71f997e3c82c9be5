"""Monotone NAE-3SAT to perfect matching cut reductions.

Two constructions are provided.  ``reduce_basic`` uses one cube per clause
and a pendant-weighted vertex per variable, which gives a bipartite graph.
``reduce_girth`` subdivides every cube edge with 4h+4 vertices and turns
each variable into a cycle on 4m(h+1) vertices.  The result is bipartite,
has maximum degree 3, and has girth at least g.

Vertex numbering is fixed so that instances are reproducible byte for byte.
Clause gadgets come first, in clause order, and each follows the cube
template in :data:`pmcut.generators.CUBE_EDGES`.  For the girth variant the
8 corners come first, then the subdivision paths in template edge order,
each walked from its first endpoint.  Variable gadgets follow.
"""

from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import networkx as nx

from .generators import CUBE_EDGES
from .graph import (
    INFINITE,
    Cut,
    Graph,
    X,
    Y,
    girth,
    is_bipartite,
    is_pmc,
    max_degree,
)
from .oracle import is_nae


class CnfFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class AssignmentError(ValueError):
    pass


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.num_vars < 1:
            raise ValueError("a formula needs at least one variable")
        norm = []
        for clause in self.clauses:
            c = tuple(sorted(clause))
            if len(c) != 3 or len(set(c)) != 3:
                raise ValueError(f"clause {clause} must have three distinct variables")
            if c[0] < 1 or c[-1] > self.num_vars:
                raise ValueError(f"clause {clause} has a variable outside 1..{self.num_vars}")
            norm.append(c)
        object.__setattr__(self, "clauses", tuple(norm))

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {self.num_clauses}"]
        lines += [" ".join(map(str, c)) + " 0" for c in self.clauses]
        return "\n".join(lines) + "\n"


def parse_cnf(text: str) -> CnfFormula:
    """Parse monotone width-3 DIMACS CNF.

    Clauses may span lines; ``c`` lines are comments and a ``%`` line ends
    the input (SATLIB convention).
    """
    header = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    current_line = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if header is not None:
                raise CnfFormatError("duplicate header", lineno)
            if len(parts) != 4 or parts[1] != "cnf":
                raise CnfFormatError("header must be 'p cnf <vars> <clauses>'", lineno)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise CnfFormatError("non-integer header field", lineno) from None
            if header[0] < 1 or header[1] < 0:
                raise CnfFormatError("header counts out of range", lineno)
            continue
        if header is None:
            raise CnfFormatError("clause before header", lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise CnfFormatError(f"bad literal {tok!r}", lineno) from None
            if lit < 0:
                raise CnfFormatError(f"negative literal {lit}: only monotone formulas are supported", lineno)
            if lit == 0:
                if len(current) != 3:
                    raise CnfFormatError(f"clause has width {len(current)}, expected 3", current_line)
                if len(set(current)) != 3:
                    raise CnfFormatError(f"repeated variable in clause {current}", current_line)
                clauses.append(tuple(current))
                current = []
                continue
            if lit > header[0]:
                raise CnfFormatError(f"variable {lit} exceeds declared {header[0]}", lineno)
            if not current:
                current_line = lineno
            current.append(lit)
    if header is None:
        raise CnfFormatError("missing 'p cnf' header")
    if current:
        raise CnfFormatError("last clause is not terminated by 0", current_line)
    if len(clauses) != header[1]:
        raise CnfFormatError(f"header declares {header[1]} clauses, found {len(clauses)}")
    return CnfFormula(header[0], tuple(clauses))


def fano_formula() -> CnfFormula:
    """Lines of the Fano plane; not 2-colourable, so no NAE assignment."""
    lines = ((1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6))
    return CnfFormula(7, lines)


def random_formula(num_vars: int, num_clauses: int, rng: random.Random) -> CnfFormula:
    if num_vars < 3:
        raise ValueError("need at least three variables")
    return CnfFormula(num_vars, tuple(tuple(rng.sample(range(1, num_vars + 1), 3))
                                      for _ in range(num_clauses)))


@dataclass
class ReductionMap:
    """Where every part of the formula went in the reduced graph (0-based ids).

    ``variable_vertices[i]`` lists the variable vertices of variable i+1: one
    vertex in the basic variant, one per clause in the girth variant.
    ``variable_gadgets[i]`` is the whole gadget, dummy or cycle included.
    """

    variant: str
    num_vars: int
    num_clauses: int
    clause_gadgets: list[list[int]]
    clause_vertices: list[tuple[int, int, int]]
    variable_gadgets: list[list[int]]
    variable_vertices: list[list[int]]
    dummies: list[int] = field(default_factory=list)
    h: int | None = None
    g: int | None = None

    def all_vertices(self) -> list[int]:
        out = [v for gad in self.clause_gadgets for v in gad]
        return out + [v for gad in self.variable_gadgets for v in gad]

    def to_json(self) -> dict:
        one = lambda vs: [v + 1 for v in vs]  # noqa: E731
        return {
            "variant": self.variant,
            "num_vars": self.num_vars,
            "num_clauses": self.num_clauses,
            "h": self.h,
            "g": self.g,
            "clauses": [
                {"gadget": one(gad), "clause_vertices": one(cv)}
                for gad, cv in zip(self.clause_gadgets, self.clause_vertices)
            ],
            "variables": [
                {"gadget": one(gad), "variable_vertices": one(vv)}
                for gad, vv in zip(self.variable_gadgets, self.variable_vertices)
            ],
            "dummies": one(self.dummies),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, data: dict) -> "ReductionMap":
        zero = lambda vs: [v - 1 for v in vs]  # noqa: E731
        return cls(
            variant=data["variant"],
            num_vars=data["num_vars"],
            num_clauses=data["num_clauses"],
            clause_gadgets=[zero(c["gadget"]) for c in data["clauses"]],
            clause_vertices=[tuple(zero(c["clause_vertices"])) for c in data["clauses"]],
            variable_gadgets=[zero(v["gadget"]) for v in data["variables"]],
            variable_vertices=[zero(v["variable_vertices"]) for v in data["variables"]],
            dummies=zero(data.get("dummies", [])),
            h=data.get("h"),
            g=data.get("g"),
        )


def _require_clauses(f: CnfFormula) -> None:
    if f.num_clauses < 1:
        raise ValueError("formula has no clauses")


def reduce_basic(f: CnfFormula) -> tuple[Graph, ReductionMap]:
    _require_clauses(f)
    m, n = f.num_clauses, f.num_vars
    edges = []
    gadgets, labelled = [], []
    for j in range(m):
        base = 8 * j
        edges += [(base + a, base + b) for a, b in CUBE_EDGES]
        gadgets.append(list(range(base, base + 8)))
        labelled.append((base + 1, base + 2, base + 3))
    var_gadgets, var_vertices, dummies = [], [], []
    for i in range(n):
        x = 8 * m + 2 * i
        edges.append((x, x + 1))
        var_gadgets.append([x, x + 1])
        var_vertices.append([x])
        dummies.append(x + 1)
    for j, clause in enumerate(f.clauses):
        for k, var in enumerate(clause):
            edges.append((var_vertices[var - 1][0], labelled[j][k]))
    rmap = ReductionMap("basic", n, m, gadgets, labelled, var_gadgets, var_vertices, dummies)
    return Graph(8 * m + 2 * n, edges), rmap


def choose_h(m: int, g: int) -> int:
    """Smallest h >= 0 with 4m(h+1) >= g and 8(h+2) >= g."""
    h = 0
    while 4 * m * (h + 1) < g or 8 * (h + 2) < g:
        h += 1
    return h


def _subdivided_cube(base: int, h: int) -> tuple[list[tuple[int, int]], tuple[int, int, int], int]:
    """Cube with every edge subdivided by 4h+4 vertices, ids from ``base``."""
    per_edge = 4 * h + 4
    edges = []
    first_inner = {}
    nxt = base + 8
    for a, b in CUBE_EDGES:
        chain = [base + a] + list(range(nxt, nxt + per_edge)) + [base + b]
        first_inner[(a, b)] = nxt
        nxt += per_edge
        edges += list(zip(chain, chain[1:]))
    labelled = (first_inner[(0, 1)], first_inner[(0, 2)], first_inner[(0, 3)])
    return edges, labelled, nxt - base


def reduce_girth(f: CnfFormula, g: int, h_override: int | None = None) -> tuple[Graph, ReductionMap]:
    _require_clauses(f)
    m, n = f.num_clauses, f.num_vars
    if m < 3:
        raise ValueError("the girth construction needs at least three clauses")
    if g < 3:
        raise ValueError("target girth must be at least 3")
    if h_override is not None and h_override < 0:
        raise ValueError("h must be non-negative")
    h = choose_h(m, g) if h_override is None else h_override

    edges: list[tuple[int, int]] = []
    gadgets, labelled = [], []
    size = 0
    for _ in range(m):
        e, lab, k = _subdivided_cube(size, h)
        edges += e
        gadgets.append(list(range(size, size + k)))
        labelled.append(lab)
        size += k
    gap = 4 * h + 4
    cyc = m * gap
    var_gadgets, var_vertices = [], []
    for _ in range(n):
        ring = list(range(size, size + cyc))
        edges += [(ring[t], ring[(t + 1) % cyc]) for t in range(cyc)]
        var_gadgets.append(ring)
        var_vertices.append([ring[j * gap] for j in range(m)])
        size += cyc
    for j, clause in enumerate(f.clauses):
        for k, var in enumerate(clause):
            edges.append((var_vertices[var - 1][j], labelled[j][k]))

    graph = Graph(size, edges)
    expected = m * (8 + 12 * (4 * h + 4)) + 4 * n * m * (h + 1)
    assert graph.n == expected, (graph.n, expected)
    assert is_bipartite(graph)[0]
    assert max_degree(graph) == 3
    bound = min(4 * m * (h + 1), 8 * (h + 2))
    if h_override is None:
        assert bound >= g
    assert girth(graph) >= bound
    rmap = ReductionMap("girth", n, m, gadgets, labelled, var_gadgets, var_vertices, [], h, g)
    return graph, rmap


# ---------------------------------------------------------------------------
# witnesses


def extend_to_pmcs(g: Graph, fixed: dict[int, int], limit: int | None = None) -> Iterator[Cut]:
    """All perfect matching cuts agreeing with ``fixed``, by propagation and backtracking.

    Propagation applies the local PMC conditions.  A vertex with its single
    cross neighbour already known forces its unknown neighbours to its own
    side.  A vertex whose only unknown neighbour is the last chance for a
    cross edge forces that neighbour across.  Branching tries X before Y on
    the smallest unknown vertex next to a known one.
    """
    found = 0
    stack = [dict(fixed)]
    while stack:
        side = stack.pop()
        side = _propagate(g, side)
        if side is None:
            continue
        if len(side) == g.n:
            yield Cut(tuple(side[v] for v in range(g.n)))
            found += 1
            if limit is not None and found >= limit:
                return
            continue
        frontier = [v for v in range(g.n) if v not in side and any(w in side for w in g.adjacency[v])]
        v = min(frontier) if frontier else min(u for u in range(g.n) if u not in side)
        for s in (Y, X):
            stack.append({**side, v: s})


def _propagate(g: Graph, side: dict[int, int]) -> dict[int, int] | None:
    queue = deque(side)
    queued = set(side)
    while queue:
        u = queue.popleft()
        queued.discard(u)
        for v in (u, *g.adjacency[u]):
            if v not in side:
                continue
            s = side[v]
            cross = [w for w in g.adjacency[v] if w in side and side[w] != s]
            unknown = [w for w in g.adjacency[v] if w not in side]
            if len(cross) > 1 or (not cross and not unknown):
                return None
            forced = []
            if cross:
                forced = [(w, s) for w in unknown]
            elif len(unknown) == 1:
                forced = [(unknown[0], 1 - s)]
            for w, t in forced:
                side[w] = t
                if w not in queued:
                    queue.append(w)
                    queued.add(w)
    return side


def lift_assignment(f: CnfFormula, rmap: ReductionMap, graph: Graph, assignment: Sequence[bool]) -> Cut:
    """Perfect matching cut of the reduced graph that realises a NAE assignment.

    True variable vertices go to X, false ones to Y.  Every other vertex is
    placed by propagation; clause gadgets admit exactly one completion, while
    a girth-variant variable cycle may be rotated either way, and the
    X-first search picks one deterministically.
    """
    if len(assignment) != f.num_vars:
        raise AssignmentError(f"expected {f.num_vars} values, got {len(assignment)}")
    if not is_nae(f.clauses, assignment):
        raise AssignmentError("assignment leaves a clause monochromatic")
    fixed = {}
    for i, value in enumerate(assignment):
        for v in rmap.variable_vertices[i]:
            fixed[v] = X if value else Y
    cut = next(extend_to_pmcs(graph, fixed, limit=1), None)
    if cut is None:
        raise AssertionError("NAE assignment did not extend to a perfect matching cut")
    assert is_pmc(graph, cut)
    return cut


def extract_assignment(f: CnfFormula, rmap: ReductionMap, graph: Graph, cut: Cut) -> list[bool]:
    if len(cut.side) != graph.n or not is_pmc(graph, cut):
        raise AssignmentError("cut is not a perfect matching cut of the reduced graph")
    out = []
    for vs in rmap.variable_vertices:
        sides = {cut.side[v] for v in vs}
        assert len(sides) == 1, "variable vertices of one variable on both sides"
        out.append(sides.pop() == X)
    assert is_nae(f.clauses, out)
    return out


# ---------------------------------------------------------------------------
# structural report


@dataclass
class Claim:
    name: str
    passed: bool
    measured: object
    expected: object

    def to_json(self) -> dict:
        m = "inf" if self.measured == INFINITE else self.measured
        return {"claim": self.name, "passed": self.passed, "measured": m, "expected": self.expected}


@dataclass
class ReductionReport:
    variant: str
    n: int
    m: int
    claims: list[Claim]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def to_json(self) -> dict:
        return {"variant": self.variant, "n": self.n, "m": self.m, "passed": self.passed,
                "claims": [c.to_json() for c in self.claims]}


def expected_vertex_count(f: CnfFormula, variant: str, h: int = 0) -> int:
    m, n = f.num_clauses, f.num_vars
    if variant == "basic":
        return 8 * m + 2 * n
    return m * (8 + 12 * (4 * h + 4)) + 4 * n * m * (h + 1)


def _clause_variable_edges(graph: Graph, rmap: ReductionMap) -> list[tuple[int, int]]:
    clause_vs = {v for cv in rmap.clause_vertices for v in cv}
    var_vs = {v for vv in rmap.variable_vertices for v in vv}
    return [(u, v) for u, v in graph.edges() if (u in clause_vs and v in var_vs) or (v in clause_vs and u in var_vs)]


def _matching_avoids(graph: Graph, forbidden: list[tuple[int, int]]) -> bool:
    """No perfect matching of ``graph`` uses any of the forbidden edges."""
    nxg = nx.Graph(graph.edges())
    nxg.add_nodes_from(range(graph.n))
    colour = is_bipartite(graph)[1]
    for u, v in forbidden:
        rest = nxg.subgraph([w for w in range(graph.n) if w not in (u, v)])
        if colour is not None:
            top = {w for w in rest if colour[w] == 0}
            size = len(nx.bipartite.hopcroft_karp_matching(rest, top_nodes=top)) // 2
        else:
            size = len(nx.max_weight_matching(rest, maxcardinality=True))
        if 2 * size == graph.n - 2:
            return False
    return True


def _gadget_pmc_count(graph: Graph, vertices: list[int]) -> int:
    sub, _ = graph.induced_subgraph(vertices)
    return sum(1 for _ in extend_to_pmcs(sub, {0: X}))


def check_reduction(f: CnfFormula, graph: Graph, rmap: ReductionMap) -> ReductionReport:
    """Check the structural claims for an already built (possibly modified) instance."""
    claims = []
    h = rmap.h or 0
    want_n = expected_vertex_count(f, rmap.variant, h)
    claims.append(Claim("vertex_count", graph.n == want_n, graph.n, want_n))
    ids = sorted(rmap.all_vertices())
    claims.append(Claim("map_partitions_vertices", ids == list(range(graph.n)), len(ids), graph.n))
    bip = is_bipartite(graph)[0]
    claims.append(Claim("bipartite", bip, bip, True))
    deg = max_degree(graph)
    if rmap.variant == "girth":
        claims.append(Claim("max_degree", deg == 3, deg, 3))
        gi = girth(graph)
        bound = min(4 * f.num_clauses * (h + 1), 8 * (h + 2))
        claims.append(Claim("girth_bound", gi >= bound, gi, f">= {bound}"))
        if rmap.g is not None:
            claims.append(Claim("girth_target", gi >= rmap.g, gi, f">= {rmap.g}"))
    else:
        claims.append(Claim("max_degree", True, deg, None))
    counts = sorted({_gadget_pmc_count(graph, gad) for gad in rmap.clause_gadgets})
    claims.append(Claim("clause_gadget_pmcs", counts == [3], counts, [3]))
    avoid = _matching_avoids(graph, _clause_variable_edges(graph, rmap))
    claims.append(Claim("no_matching_on_clause_variable_edge", avoid, avoid, True))
    return ReductionReport(rmap.variant, graph.n, graph.m, claims)


def verify_reduction(f: CnfFormula, variant: str = "basic", g: int | None = None,
                     h_override: int | None = None) -> ReductionReport:
    if variant == "basic":
        graph, rmap = reduce_basic(f)
    elif variant == "girth":
        graph, rmap = reduce_girth(f, g if g is not None else 3, h_override)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return check_reduction(f, graph, rmap)
