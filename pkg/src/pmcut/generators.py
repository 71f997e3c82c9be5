"""Reference and random graph families."""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .graph import Graph

# Cube template: 0 = c, 1..3 = c1..c3, 4 = c', 5..7 = c1'..c3'.
CUBE_EDGES = (
    (0, 1), (0, 2), (0, 3),
    (4, 5), (4, 6), (4, 7),
    (1, 6), (1, 7), (2, 5), (2, 7), (3, 5), (3, 6),
)


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def cube() -> Graph:
    return Graph(8, CUBE_EDGES)


def t_graph() -> Graph:
    """Claw with two edges subdivided: centre 0, legs 0-1-2, 0-3-4 and 0-5."""
    return Graph(6, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for h in graphs:
        edges += [(u + offset, v + offset) for u, v in h.edges()]
        offset += h.n
    return Graph(offset, edges)


def random_tree(n: int, rng: random.Random) -> Graph:
    if n <= 1:
        return Graph(n)
    parent = [rng.randrange(i) for i in range(1, n)]
    return Graph(n, [(p, i) for i, p in enumerate(parent, 1)])


def random_connected(n: int, m: int, rng: random.Random) -> Graph:
    """Random spanning tree plus ``m - (n - 1)`` extra uniform edges."""
    if n == 0:
        return Graph(0)
    m = max(m, n - 1)
    m = min(m, n * (n - 1) // 2)
    perm = list(range(n))
    rng.shuffle(perm)
    edges = {tuple(sorted((perm[i], perm[rng.randrange(i)]))) for i in range(1, n)}
    while len(edges) < m:
        u, v = rng.sample(range(n), 2)
        edges.add((min(u, v), max(u, v)))
    return Graph(n, sorted(edges))


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p])


def caterpillar(leaf_counts: list[int]) -> Graph:
    """Spine 0..k-1 in order; spine vertex i gets ``leaf_counts[i]`` pendant leaves."""
    k = len(leaf_counts)
    edges = [(i, i + 1) for i in range(k - 1)]
    nxt = k
    for i, c in enumerate(leaf_counts):
        for _ in range(c):
            edges.append((i, nxt))
            nxt += 1
    return Graph(nxt, edges)


def all_caterpillars(max_n: int) -> Iterator[Graph]:
    """Every caterpillar on at most ``max_n`` vertices (mirror images repeated)."""
    for n in range(1, min(max_n, 2) + 1):
        yield path(n)
    for k in range(1, max_n):
        for leaves in range(max_n - k + 1):
            # spine ends need a leaf so that they really are non-leaves
            for counts in _compositions(leaves, k):
                if k == 1 and counts[0] < 2:
                    continue
                if k >= 2 and (counts[0] < 1 or counts[-1] < 1):
                    continue
                yield caterpillar(list(counts))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def triangle_decorated_cycle(k: int) -> Graph:
    """C_k plus, for every cycle edge, a new apex adjacent to both ends."""
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(i, k + i) for i in range(k)] + [((i + 1) % k, k + i) for i in range(k)]
    return Graph(2 * k, edges)


def random_chordal(n: int, rng: random.Random, max_clique: int = 4) -> Graph:
    """Grow a chordal graph by attaching each new vertex to a clique of the old one."""
    if n == 0:
        return Graph(0)
    cliques = [[0]]
    edges = []
    for v in range(1, n):
        base = rng.choice(cliques)
        size = rng.randint(1, min(len(base), max_clique - 1))
        attach = rng.sample(base, size)
        edges += [(u, v) for u in attach]
        cliques.append(attach + [v])
    return Graph(n, edges)


def random_pseudo_chordal(n: int, rng: random.Random) -> Graph:
    """Blocks that are chordal or triangle-decorated cycles, glued by bridges and cut vertices."""
    edges: list[tuple[int, int]] = []
    size = 0
    while size < n:
        room = n - size
        kind = rng.random()
        if kind < 0.3 or room < 3:
            piece = Graph(1)
        elif kind < 0.55 and room >= 6:
            piece = triangle_decorated_cycle(rng.randint(3, min(room // 2, 6)))
        else:
            piece = random_chordal(rng.randint(3, min(room, 6)), rng)
        offset = size
        edges += [(u + offset, v + offset) for u, v in piece.edges()]
        if size:
            anchor = rng.randrange(size)
            target = offset + rng.randrange(piece.n)
            if rng.random() < 0.5 or piece.n == 1:
                edges.append((anchor, target))
            else:
                # glue at a cut vertex: identify by rewiring target's edges onto anchor
                edges = [
                    (anchor if u == target else u, anchor if v == target else v)
                    for u, v in edges
                ]
                edges = [(u - (u > target), v - (v > target)) for u, v in edges]
                size += piece.n - 1
                continue
        size += piece.n
    edges = {(min(u, v), max(u, v)) for u, v in edges if u != v}
    return Graph(size, sorted(edges))


def planted_pmc(n: int, extra: int, rng: random.Random) -> Graph:
    """Random graph with a planted perfect matching cut.

    The vertices are split into two random halves joined by a random perfect
    matching; ``extra`` edge draws then land inside one half or the other.
    """
    if n % 2 or n < 2:
        raise ValueError("a planted cut needs an even, positive number of vertices")
    perm = list(range(n))
    rng.shuffle(perm)
    xs, ys = perm[: n // 2], perm[n // 2:]
    edges = {(min(u, v), max(u, v)) for u, v in zip(xs, ys)}
    if n >= 4:
        for _ in range(extra):
            u, v = rng.sample(rng.choice((xs, ys)), 2)
            edges.add((min(u, v), max(u, v)))
    return Graph(n, sorted(edges))
