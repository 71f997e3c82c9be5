"""Immutable simple graphs, structural analyses and cut classifiers.

Vertices are dense integers ``0..n-1``.  The on-disk edge-list format uses
1-based ids (DIMACS style)::

    # optional comment lines
    n m
    u v        (m lines, 1 <= u < v <= n)
"""

from __future__ import annotations

import enum
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

INFINITE = math.inf

X, Y = 0, 1


class GraphFormatError(ValueError):
    """Raised when an edge-list document cannot be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Graph:
    """A simple undirected graph with sorted adjacency lists.

    Instances are never mutated after construction, so they can be shared
    freely between threads and processes.
    """

    __slots__ = ("n", "adjacency", "m", "_nbr")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        nbr: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in nbr[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            nbr[u].add(v)
            nbr[v].add(u)
        self.n = n
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbr)
        self._nbr: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in nbr)
        self.m = sum(len(s) for s in nbr) // 2

    @classmethod
    def from_adjacency(cls, adjacency: Sequence[Iterable[int]]) -> "Graph":
        edges = [(u, v) for u, row in enumerate(adjacency) for v in row if u < v]
        return cls(len(adjacency), edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._nbr[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Return ``(H, labels)`` where ``labels[i]`` is the original id of H's vertex i."""
        labels = sorted(vertices)
        index = {v: i for i, v in enumerate(labels)}
        edges = [
            (index[u], index[v])
            for u in labels
            for v in self.adjacency[u]
            if u < v and v in index
        ]
        return Graph(len(labels), edges), labels

    def to_edge_list(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines += [f"{u + 1} {v + 1}" for u, v in self.edges()]
        return "\n".join(lines) + "\n"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash(self.adjacency)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format; ids in the document are 1-based."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphFormatError("negative count in header", lineno)
            header = (a, b)
            continue
        n = header[0]
        if not (1 <= a <= n and 1 <= b <= n):
            raise GraphFormatError(f"vertex id out of range 1..{n}", lineno)
        if a == b:
            raise GraphFormatError(f"self-loop at vertex {a}", lineno)
        key = (min(a, b), max(a, b))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {a} {b}", lineno)
        seen.add(key)
        edges.append((key[0] - 1, key[1] - 1))
    if header is None:
        raise GraphFormatError("missing 'n m' header")
    if len(edges) != header[1]:
        raise GraphFormatError(f"header declares {header[1]} edges, found {len(edges)}")
    return Graph(header[0], edges)


def connected_components(g: Graph) -> list[list[int]]:
    """Maximal connected vertex sets, each sorted, ordered by minimum vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``INFINITE`` for forests.

    BFS from every vertex, O(n*m); meant for desk-scale instances.
    """
    best = INFINITE
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.adjacency[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def is_bipartite(g: Graph) -> tuple[bool, list[int] | None]:
    """Return ``(True, coloring)`` for bipartite graphs, else ``(False, None)``."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False, None
    return True, color


def max_degree(g: Graph) -> int:
    return max((len(a) for a in g.adjacency), default=0)


class CutClass(enum.IntEnum):
    """Nested cut classes; a larger value implies every smaller one."""

    NOT_A_CUT = 0
    CUT = 1
    MATCHING_CUT = 2
    PERFECT_MATCHING_CUT = 3


@dataclass(frozen=True)
class Cut:
    """A bipartition of the vertex set; ``side[v]`` is ``X`` (0) or ``Y`` (1)."""

    side: tuple[int, ...]

    def __post_init__(self):
        if any(s not in (X, Y) for s in self.side):
            raise ValueError("cut labels must be 0 (X) or 1 (Y)")

    @classmethod
    def from_sets(cls, n: int, xs: Iterable[int], ys: Iterable[int] = ()) -> "Cut":
        """Vertices in ``xs`` go to X; everything else (``ys`` included) to Y."""
        side = [Y] * n
        for v in xs:
            side[v] = X
        for v in ys:
            if side[v] == X:
                raise ValueError(f"vertex {v} listed on both sides")
        return cls(tuple(side))

    @property
    def xs(self) -> list[int]:
        return [v for v, s in enumerate(self.side) if s == X]

    @property
    def ys(self) -> list[int]:
        return [v for v, s in enumerate(self.side) if s == Y]

    def swapped(self) -> "Cut":
        return Cut(tuple(1 - s for s in self.side))

    def canonical(self) -> "Cut":
        """The same bipartition labelled so that vertex 0 lies in X."""
        return self.swapped() if self.side and self.side[0] == Y else self

    def edge_cut(self, g: Graph) -> list[tuple[int, int]]:
        return [(u, v) for u, v in g.edges() if self.side[u] != self.side[v]]

    def to_json(self) -> dict:
        return {"X": [v + 1 for v in self.xs], "Y": [v + 1 for v in self.ys]}

    @classmethod
    def from_json(cls, n: int, data: dict) -> "Cut":
        xs = [v - 1 for v in data["X"]]
        ys = [v - 1 for v in data["Y"]]
        if sorted(xs + ys) != list(range(n)):
            raise ValueError("X and Y must partition the vertex set 1..n")
        return cls.from_sets(n, xs, ys)


def classify_cut(g: Graph, c: Cut) -> CutClass:
    if len(c.side) != g.n:
        raise ValueError(f"cut has {len(c.side)} labels, graph has {g.n} vertices")
    if X not in c.side or Y not in c.side:
        return CutClass.NOT_A_CUT
    perfect = True
    for v in range(g.n):
        cross = sum(1 for w in g.adjacency[v] if c.side[w] != c.side[v])
        if cross > 1:
            return CutClass.CUT
        if cross == 0:
            perfect = False
    return CutClass.PERFECT_MATCHING_CUT if perfect else CutClass.MATCHING_CUT


def is_pmc(g: Graph, c: Cut) -> bool:
    return classify_cut(g, c) is CutClass.PERFECT_MATCHING_CUT


def is_disconnected_perfect_matching(g: Graph, matching: Iterable[tuple[int, int]]) -> bool:
    """True iff ``matching`` is a perfect matching whose removal disconnects g."""
    pairs = [(min(u, v), max(u, v)) for u, v in matching]
    for u, v in pairs:
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge of the graph")
    covered = [0] * g.n
    for u, v in pairs:
        covered[u] += 1
        covered[v] += 1
    if any(c != 1 for c in covered):
        return False
    removed = set(pairs)
    rest = Graph(g.n, [e for e in g.edges() if e not in removed])
    return len(connected_components(rest)) > 1


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: list[frozenset[int]]
    block_edges: list[list[tuple[int, int]]]
    cut_vertices: frozenset[int]
    nontrivial: list[bool] = field(default_factory=list)


def biconnected_blocks(g: Graph) -> BlockDecomposition:
    """Blocks (2-connected pieces and bridges) via an iterative Hopcroft-Tarjan DFS.

    Isolated vertices belong to no block.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    timer = 0
    edge_stack: list[tuple[int, int]] = []
    block_edges: list[list[tuple[int, int]]] = []
    cut_vertices: set[int] = set()

    for root in range(g.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(g.adjacency[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    edge_stack.append((u, w))
                    stack.append((w, u, iter(g.adjacency[w])))
                    if u == root:
                        root_children += 1
                    advanced = True
                    break
                if w != parent and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent < 0:
                continue
            low[parent] = min(low[parent], low[u])
            if low[u] >= disc[parent]:
                if parent != root:
                    cut_vertices.add(parent)
                comp = []
                while True:
                    e = edge_stack.pop()
                    comp.append((min(e), max(e)))
                    if e == (parent, u):
                        break
                block_edges.append(sorted(comp))
        if root_children >= 2:
            cut_vertices.add(root)

    order = sorted(range(len(block_edges)), key=lambda i: block_edges[i][0])
    block_edges = [block_edges[i] for i in order]
    blocks = [frozenset(v for e in es for v in e) for es in block_edges]
    return BlockDecomposition(
        blocks=blocks,
        block_edges=block_edges,
        cut_vertices=frozenset(cut_vertices),
        nontrivial=[len(b) >= 3 for b in blocks],
    )


def triangle_saturated_components(g: Graph) -> tuple[set[tuple[int, int]], list[list[int]]]:
    """Edges D of the non-trivial blocks and the connected components of D."""
    dec = biconnected_blocks(g)
    d_edges = {e for es, big in zip(dec.block_edges, dec.nontrivial) if big for e in es}
    touched = sorted({v for e in d_edges for v in e})
    if not touched:
        return d_edges, []
    index = {v: i for i, v in enumerate(touched)}
    sub = Graph(len(touched), [(index[u], index[v]) for u, v in d_edges])
    comps = [[touched[i] for i in c] for c in connected_components(sub)]
    return d_edges, comps
