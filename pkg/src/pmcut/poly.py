"""Polynomial-time PMC algorithms for restricted graph classes.

* maximum degree 2: paths with an even number of vertices and cycles of
  length divisible by four;
* caterpillars, via the leaf-pattern criterion on the spine;
* pseudo-chordal graphs (every edge of a non-trivial block lies in a
  triangle), via dynamic programming over the supernode tree;
* T-free graphs, where T is the claw with two edges subdivided once.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .branching import SolverState, apply_reductions, terminal_check
from .graph import (
    Cut,
    Graph,
    X,
    Y,
    biconnected_blocks,
    connected_components,
    is_connected,
    max_degree,
    triangle_saturated_components,
)
from .result import SolveResult, SolveStats, checked, solve_by_components


class NotInClass(ValueError):
    """The input violates the solver's graph-class precondition."""


def _cut_from_matching(g: Graph, matching: list[tuple[int, int]]) -> Cut:
    """Two-colour a connected graph so that exactly the matching edges cross."""
    mate = {}
    for u, v in matching:
        mate[u], mate[v] = v, u
    side = [-1] * g.n
    side[0] = X
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            want = 1 - side[u] if mate.get(u) == w else side[u]
            if side[w] < 0:
                side[w] = want
                queue.append(w)
    return Cut(tuple(side))


# ---------------------------------------------------------------------------
# maximum degree two


def _walk(g: Graph) -> list[int]:
    start = next((v for v in range(g.n) if g.degree(v) <= 1), 0)
    order, prev = [start], -1
    while True:
        nxt = [w for w in g.adjacency[order[-1]] if w != prev and w != order[0]]
        if not nxt:
            return order
        prev = order[-1]
        order.append(nxt[0])


def _solve_deg2_connected(g: Graph) -> SolveResult:
    order = _walk(g)
    is_cycle = g.m == g.n
    ok = g.n % 4 == 0 if is_cycle else g.n % 2 == 0
    stats = SolveStats(extra={"shape": "cycle" if is_cycle else "path"})
    if not ok:
        return SolveResult(False, None, stats, "deg2")
    side = [X] * g.n
    for i, v in enumerate(order):
        side[v] = ((i + 1) // 2) % 2
    return SolveResult(True, Cut(tuple(side)).canonical(), stats, "deg2")


def solve_max_deg2(g: Graph) -> SolveResult:
    if max_degree(g) > 2:
        raise NotInClass(f"maximum degree {max_degree(g)} exceeds 2")
    return solve_by_components(g, _solve_deg2_connected, "deg2")


# ---------------------------------------------------------------------------
# caterpillars


def caterpillar_criterion(g: Graph) -> SolveResult:
    """Leaf-pattern test for caterpillars.

    The basic path runs from a leaf through the spine (the non-leaf vertices)
    to another leaf, so its two ends never carry leaves of their own.  A PMC
    exists iff every inner path vertex carries at most one leaf and every
    maximal run of leafless path vertices has even length.  Trees that are
    not caterpillars are reported as failing the criterion; use
    :func:`solve_pseudo_chordal` for arbitrary trees.
    """
    if not is_connected(g) or g.m != g.n - 1:
        raise NotInClass("input is not a tree")
    stats = SolveStats(extra={"caterpillar": True})
    if g.n <= 2:
        if g.n == 2:
            return checked(g, SolveResult(True, Cut((X, Y)), stats, "caterpillar"))
        return SolveResult(False, None, stats, "caterpillar")

    spine = [v for v in range(g.n) if g.degree(v) >= 2]
    spine_set = set(spine)
    spine_adj = {v: [w for w in g.adjacency[v] if w in spine_set] for v in spine}
    ends = [v for v in spine if len(spine_adj[v]) <= 1]
    if any(len(a) > 2 for a in spine_adj.values()) or len(ends) not in (1, 2):
        stats.extra["caterpillar"] = False
        return SolveResult(False, None, stats, "caterpillar")
    ordered = [min(ends)]
    while len(ordered) < len(spine):
        ordered.append(next(w for w in spine_adj[ordered[-1]] if w not in ordered[-2:]))

    leaves = {v: sorted(w for w in g.adjacency[v] if w not in spine_set) for v in spine}
    first = leaves[ordered[0]][0]
    last = leaves[ordered[-1]][-1] if len(ordered) == 1 else leaves[ordered[-1]][0]
    basic = [first] + ordered + [last]
    attached = {v: [w for w in leaves[v] if w not in (first, last)] for v in ordered}
    stats.extra["basic_path"] = basic

    matching = []
    run: list[int] = [first]
    for v in ordered + [last]:
        pendants = attached.get(v, [])
        if len(pendants) > 1:
            return SolveResult(False, None, stats, "caterpillar")
        if pendants:
            if len(run) % 2:
                return SolveResult(False, None, stats, "caterpillar")
            matching += list(zip(run[::2], run[1::2]))
            matching.append((v, pendants[0]))
            run = []
        else:
            run.append(v)
    if len(run) % 2:
        return SolveResult(False, None, stats, "caterpillar")
    matching += list(zip(run[::2], run[1::2]))
    return checked(g, SolveResult(True, _cut_from_matching(g, matching), stats, "caterpillar"))


# ---------------------------------------------------------------------------
# pseudo-chordal graphs


def _has_triangle(g: Graph, u: int, v: int) -> bool:
    return bool(g.neighbors(u) & g.neighbors(v))


def is_pseudo_chordal(g: Graph) -> tuple[bool, tuple[int, int] | None]:
    """Check that each edge of every non-trivial block lies in a triangle."""
    dec = biconnected_blocks(g)
    for edges, big in zip(dec.block_edges, dec.nontrivial):
        if not big:
            continue
        for u, v in edges:
            if not _has_triangle(g, u, v):
                return False, (u, v)
    return True, None


@dataclass
class SupernodeTree:
    """Contraction of each triangle-saturated component to a single node.

    ``nodes[i]`` is the sorted vertex set of node i; node ``order[0]`` is the
    root.  For a non-root node, ``attach[i]`` is its vertex r(S) joined by a
    bridge to ``parent_vertex[i]`` in the parent node.
    """

    graph: Graph
    nodes: list[tuple[int, ...]]
    node_of: list[int]
    parent: list[int]
    attach: list[int | None]
    parent_vertex: list[int | None]
    children_at: list[dict[int, list[int]]]
    order: list[int]
    pmc: list[bool] = field(default_factory=list)
    m: list[bool] = field(default_factory=list)
    choice_pmc: list[dict[int, int]] = field(default_factory=list)
    choice_m: list[dict[int, int]] = field(default_factory=list)

    def subtree_vertices(self, i: int) -> list[int]:
        out, stack = [], [i]
        while stack:
            k = stack.pop()
            out += self.nodes[k]
            for kids in self.children_at[k].values():
                stack += kids
        return sorted(out)


def build_supernode_tree(g: Graph) -> SupernodeTree:
    """Supernode tree of a connected graph, rooted at the node of vertex 0."""
    d_edges, comps = triangle_saturated_components(g)
    node_of = [-1] * g.n
    nodes: list[tuple[int, ...]] = []
    for comp in comps:
        for v in comp:
            node_of[v] = len(nodes)
        nodes.append(tuple(comp))
    for v in range(g.n):
        if node_of[v] < 0:
            node_of[v] = len(nodes)
            nodes.append((v,))
    links: list[list[tuple[int, int, int]]] = [[] for _ in nodes]
    for u, v in g.edges():
        if (u, v) in d_edges:
            continue
        a, b = node_of[u], node_of[v]
        assert a != b, "an edge outside D joins two vertices of one supernode"
        links[a].append((u, b, v))
        links[b].append((v, a, u))

    k = len(nodes)
    parent = [-1] * k
    attach: list[int | None] = [None] * k
    parent_vertex: list[int | None] = [None] * k
    children_at: list[dict[int, list[int]]] = [{v: [] for v in nodes[i]} for i in range(k)]
    root = node_of[0]
    seen = [False] * k
    seen[root] = True
    order = [root]
    queue = deque([root])
    while queue:
        i = queue.popleft()
        for own, j, theirs in links[i]:
            if j == parent[i] and theirs == parent_vertex[i] and own == attach[i]:
                continue
            assert not seen[j], "contracted graph is not a tree"
            seen[j] = True
            parent[j], attach[j], parent_vertex[j] = i, theirs, own
            children_at[i][own].append(j)
            order.append(j)
            queue.append(j)
    assert all(seen), "graph is not connected"
    return SupernodeTree(g, nodes, node_of, parent, attach, parent_vertex, children_at, order)


def _pick_mate_child(tree: SupernodeTree, kids: list[int]) -> int | None:
    """A child to match with, the others must already be self-sufficient."""
    failing = [c for c in kids if not tree.pmc[c]]
    if len(failing) > 1:
        return None
    for c in kids:
        if tree.m[c] and all(c == f for f in failing):
            return c
    return None


def supernode_dp(tree: SupernodeTree) -> SupernodeTree:
    """Fill the pmc/m tables bottom-up."""
    k = len(tree.nodes)
    tree.pmc, tree.m = [False] * k, [False] * k
    tree.choice_pmc, tree.choice_m = [{} for _ in range(k)], [{} for _ in range(k)]
    for i in reversed(tree.order):
        picks: dict[int, int | None] = {
            v: _pick_mate_child(tree, kids) if kids else None
            for v, kids in tree.children_at[i].items()
        }
        if all(c is not None for c in picks.values()):
            tree.pmc[i] = True
            tree.choice_pmc[i] = dict(picks)
        r = tree.attach[i]
        if r is None:
            continue
        others_ok = all(picks[v] is not None for v in tree.nodes[i] if v != r)
        root_kids_ok = all(tree.pmc[c] for c in tree.children_at[i][r])
        if others_ok and root_kids_ok:
            tree.m[i] = True
            tree.choice_m[i] = {v: c for v, c in picks.items() if v != r}
    return tree


def _dp_matching(tree: SupernodeTree) -> list[tuple[int, int]]:
    matching = []
    stack = [(tree.order[0], True)]
    while stack:
        i, full = stack.pop()
        choice = tree.choice_pmc[i] if full else tree.choice_m[i]
        for v, kids in tree.children_at[i].items():
            for c in kids:
                if choice.get(v) == c:
                    matching.append((v, tree.attach[c]))
                    stack.append((c, False))
                else:
                    stack.append((c, True))
    return matching


def _solve_pseudo_chordal_connected(g: Graph) -> SolveResult:
    tree = supernode_dp(build_supernode_tree(g))
    root = tree.order[0]
    stats = SolveStats(extra={"supernodes": sum(len(s) > 1 for s in tree.nodes),
                              "tree_nodes": len(tree.nodes)})
    if not tree.pmc[root]:
        return SolveResult(False, None, stats, "pseudochordal")
    cut = _cut_from_matching(g, _dp_matching(tree))
    for comp in triangle_saturated_components(g)[1]:
        assert len({cut.side[v] for v in comp}) == 1, "supernode split by the cut"
    return SolveResult(True, cut, stats, "pseudochordal")


def solve_pseudo_chordal(g: Graph) -> SolveResult:
    ok, edge = is_pseudo_chordal(g)
    if not ok:
        raise NotInClass(f"not pseudo-chordal: edge {edge} of a non-trivial block is in no triangle")
    return solve_by_components(g, _solve_pseudo_chordal_connected, "pseudochordal")


# ---------------------------------------------------------------------------
# T-free graphs


@dataclass(frozen=True)
class TWitness:
    """An induced copy of T: centre with legs centre-inner1-outer1,
    centre-inner2-outer2 and centre-leaf."""

    center: int
    leaf: int
    inner1: int
    outer1: int
    inner2: int
    outer2: int

    def vertices(self) -> tuple[int, ...]:
        return (self.center, self.leaf, self.inner1, self.outer1, self.inner2, self.outer2)

    def edges(self) -> set[frozenset[int]]:
        c = self.center
        return {frozenset(e) for e in ((c, self.leaf), (c, self.inner1), (c, self.inner2),
                                       (self.inner1, self.outer1), (self.inner2, self.outer2))}

    def to_json(self) -> dict:
        return {k: v + 1 for k, v in self.__dict__.items()}


def is_induced_t(g: Graph, w: TWitness) -> bool:
    vs = w.vertices()
    if len(set(vs)) != 6:
        return False
    present = {frozenset((u, v)) for u, v in combinations(vs, 2) if g.has_edge(u, v)}
    return present == w.edges()


class TPresentError(NotInClass):
    def __init__(self, witness: TWitness):
        self.witness = witness
        super().__init__(f"graph contains an induced T on vertices {sorted(witness.vertices())}")


def find_induced_t(g: Graph) -> TWitness | None:
    """Search for an induced T, anchored at vertices of degree at least three."""
    nb = g.neighbors
    for c in range(g.n):
        if g.degree(c) < 3:
            continue
        closed = nb(c) | {c}
        for trio in combinations(g.adjacency[c], 3):
            if any(g.has_edge(p, q) for p, q in combinations(trio, 2)):
                continue
            for leaf in trio:
                p, q = (t for t in trio if t != leaf)
                for pp in sorted(nb(p) - closed):
                    if g.has_edge(pp, q) or g.has_edge(pp, leaf):
                        continue
                    for qq in sorted(nb(q) - closed):
                        if qq == pp or g.has_edge(qq, p) or g.has_edge(qq, leaf) or g.has_edge(qq, pp):
                            continue
                        return TWitness(c, leaf, p, pp, q, qq)
    return None


def is_t_free(g: Graph) -> tuple[bool, TWitness | None]:
    w = find_induced_t(g)
    return w is None, w


def _t_case_analysis(s: SolverState) -> tuple[str, TWitness | None]:
    """Classify a reduced state with free vertices left.

    Returns ``("no", None)`` when no PMC can separate A and B, or
    ``("t", witness)`` with an induced T assembled from the local structure.
    """
    g = s.graph
    nb = g.neighbors
    F = s.F
    for own, other in ((s.A, s.B), (s.B, s.A)):
        own_star = {z for z in own if nb(z) & other}
        other_star = {z for z in other if nb(z) & own}
        x = next((z for z in sorted(own - own_star) if nb(z) & own_star), None)
        if x is not None:
            break
    else:
        return "unresolved", None
    xs = min(nb(x) & own_star)
    (ys,) = nb(xs) & other
    fx = sorted(nb(x) & F)

    def t(center, leaf, a1, a2, b1, b2):
        w = TWitness(center, leaf, a1, a2, b1, b2)
        return ("t", w) if is_induced_t(g, w) else ("unresolved", None)

    # two common free neighbours with an opposite vertex
    for y in sorted(other):
        common = sorted(nb(x) & nb(y) & F)
        if len(common) >= 2:
            u, v = common[:2]
            if nb(u) & nb(v) & F:
                return "no", None
            for p, q in ((u, v), (v, u)):
                extra = sorted((nb(p) & F) - nb(q))
                if extra:
                    return t(x, q, p, extra[0], xs, ys)
            return "unresolved", None

    # opposite non-matched neighbours of N(x) must see ys
    for u in fx:
        for z in sorted(nb(u) & (other - other_star)):
            if not g.has_edge(z, ys):
                v = next(w for w in fx if w != u)
                return t(x, v, u, z, xs, ys)

    u, v = fx[:2]
    for p, q in ((u, v), (v, u)):
        if not (nb(p) & other):
            extra = sorted((nb(p) & F) - nb(q))
            if extra:
                return t(x, q, p, extra[0], xs, ys)
            return "unresolved", None

    (y1,) = nb(u) & other
    (y2,) = nb(v) & other
    if not g.has_edge(y1, y2):
        return t(ys, xs, y1, u, y2, v)
    u2 = min((nb(y1) & F) - {u})
    v2 = min((nb(y2) & F) - {v})
    if g.has_edge(u, v2):
        return t(x, v, u, v2, xs, ys)
    if g.has_edge(v, u2):
        return t(x, u, v, u2, xs, ys)
    if not g.has_edge(u2, v2):
        return t(y1, u2, y2, v2, u, x)
    return t(y2, v, v2, u2, ys, xs)


def _solve_t_free_connected(g: Graph) -> SolveResult:
    stats = SolveStats()
    for a, b in g.edges():
        stats.nodes += 1
        out = apply_reductions(SolverState.seeded(g, a, b), use_r10=True)
        for rid in out.fired:
            stats.bump(rid)
        if out.kind == "infeasible":
            continue
        state = out.state
        if not state.F:
            ok, cut = terminal_check(state)
            if ok:
                stats.seed_edge = (a, b)
                return SolveResult(True, cut, stats, "tfree")
            continue
        verdict, witness = _t_case_analysis(state)
        if verdict == "unresolved":
            witness = find_induced_t(g)
            stats.extra["unresolved_states"] = stats.extra.get("unresolved_states", 0) + 1
        if witness is not None:
            raise TPresentError(witness)
    return SolveResult(False, None, stats, "tfree")


def solve_t_free(g: Graph) -> SolveResult:
    """Seed-edge loop with reductions only (R10 enabled), no branching.

    On a T-free graph the reductions either decide the seed or leave a state
    that provably admits no separating PMC.  Reaching a state that exhibits T
    raises :class:`TPresentError` carrying the witness.
    """
    return solve_by_components(g, _solve_t_free_connected, "tfree")
