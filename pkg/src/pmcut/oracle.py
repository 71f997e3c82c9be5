"""Exhaustive ground truth: PMC enumeration and brute-force NAE satisfiability.

Both procedures check the definitions directly over every candidate, vectorised
with numpy in chunks of bit masks.  Nothing here shares code with the solvers
they are used to validate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .graph import Cut, Graph, X, connected_components

if TYPE_CHECKING:
    from .reductions import CnfFormula

_CHUNK = 1 << 20


class InstanceTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class OracleLimits:
    max_vertices_pmc: int = 24
    max_variables_nae: int = 24

    def __post_init__(self):
        if self.max_vertices_pmc <= 0 or self.max_variables_nae <= 0:
            raise ValueError("oracle limits must be positive")


DEFAULT_LIMITS = OracleLimits()


def _component_cuts(g: Graph, comp: list[int], first_only: bool) -> list[tuple[int, ...]]:
    """Perfect matching cuts of G[comp] with comp[0] in X, in lexicographic order.

    Local vertex i sits at bit (k-1-i) of the mask so that increasing masks
    are increasing side vectors; comp[0] occupies the top bit and stays 0.
    """
    k = len(comp)
    if k < 2 or k % 2:
        return []
    local = {v: i for i, v in enumerate(comp)}
    nbr_bits = []
    for v in comp:
        bits = 0
        for w in g.adjacency[v]:
            bits |= 1 << (k - 1 - local[w])
        nbr_bits.append(np.uint64(bits))
    full = np.uint64((1 << k) - 1)
    found: list[tuple[int, ...]] = []
    total = 1 << (k - 1)
    for start in range(0, total, _CHUNK):
        masks = np.arange(start, min(total, start + _CHUNK), dtype=np.uint64)
        ok = np.ones(masks.shape, dtype=bool)
        for i in range(k):
            shift = np.uint64(k - 1 - i)
            bit = (masks >> shift) & np.uint64(1)
            cross = np.bitwise_count((masks ^ (bit * full)) & nbr_bits[i])
            ok &= cross == 1
            if not ok.any():
                break
        for mask in masks[ok]:
            mask = int(mask)
            found.append(tuple((mask >> (k - 1 - i)) & 1 for i in range(k)))
            if first_only:
                return found
    return found


def _check_size(g: Graph, limits: OracleLimits) -> None:
    if g.n > limits.max_vertices_pmc:
        raise InstanceTooLarge(f"{g.n} vertices exceeds oracle limit {limits.max_vertices_pmc}")


def enumerate_pmcs(g: Graph, limits: OracleLimits = DEFAULT_LIMITS) -> list[Cut]:
    """Every perfect matching cut of g, canonicalised with vertex 0 in X.

    Components are enumerated separately and combined: the component of vertex
    0 contributes its canonical cuts, every other component both orientations.
    """
    _check_size(g, limits)
    if g.n == 0:
        return []
    comps = connected_components(g)
    per_comp = []
    for idx, comp in enumerate(comps):
        cuts = _component_cuts(g, comp, first_only=False)
        if not cuts:
            return []
        if idx > 0:
            cuts = cuts + [tuple(1 - s for s in c) for c in cuts]
        per_comp.append(cuts)
    out = []
    for combo in itertools.product(*per_comp):
        side = [X] * g.n
        for comp, labels in zip(comps, combo):
            for v, s in zip(comp, labels):
                side[v] = s
        out.append(tuple(side))
    out.sort()
    return [Cut(s) for s in out]


def has_pmc_oracle(g: Graph, limits: OracleLimits = DEFAULT_LIMITS) -> tuple[bool, Cut | None]:
    """Early-exit variant of :func:`enumerate_pmcs`; the witness is its first element."""
    _check_size(g, limits)
    if g.n == 0 or g.n % 2:
        return False, None
    side = [X] * g.n
    # lexicographic minimum of a product is the product of per-component minima
    for comp in connected_components(g):
        cuts = _component_cuts(g, comp, first_only=True)
        if not cuts:
            return False, None
        for v, s in zip(comp, cuts[0]):
            side[v] = s
    return True, Cut(tuple(side))


def is_nae(clauses, assignment) -> bool:
    """True iff no clause is monochromatic under ``assignment`` (1-based variables)."""
    return all(len({assignment[v - 1] for v in clause}) == 2 for clause in clauses)


def nae_brute(f: "CnfFormula", limits: OracleLimits = DEFAULT_LIMITS) -> tuple[bool, list[bool] | None]:
    """Lexicographically first NAE assignment (False < True, variable 1 first)."""
    n = f.num_vars
    if n > limits.max_variables_nae:
        raise InstanceTooLarge(f"{n} variables exceeds oracle limit {limits.max_variables_nae}")
    clauses = [tuple(c) for c in f.clauses]
    total = 1 << n
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(total, start + _CHUNK), dtype=np.uint64)
        ok = np.ones(idx.shape, dtype=bool)
        for clause in clauses:
            s = np.zeros(idx.shape, dtype=np.uint8)
            for v in clause:
                s += ((idx >> np.uint64(n - v)) & np.uint64(1)).astype(np.uint8)
            ok &= (s > 0) & (s < len(clause))
            if not ok.any():
                break
        hits = np.flatnonzero(ok)
        if hits.size:
            k = int(idx[hits[0]])
            return True, [bool((k >> (n - i)) & 1) for i in range(1, n + 1)]
    return False, None
