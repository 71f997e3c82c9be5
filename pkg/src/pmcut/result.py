from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from .graph import Cut, Graph, X, Y, connected_components, is_pmc

RULE_IDS = ("R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R10",
            "B1", "B2", "B3", "B4", "B5", "B6", "B7")


class CertificateError(AssertionError):
    """A solver produced a certificate that is not a perfect matching cut."""


@dataclass
class SolveStats:
    nodes: int = 0
    depth: int = 0
    rule_counts: dict[str, int] = field(default_factory=dict)
    seed_edge: tuple[int, int] | None = None
    extra: dict[str, Any] = field(default_factory=dict)

    def bump(self, rule: str, k: int = 1) -> None:
        self.rule_counts[rule] = self.rule_counts.get(rule, 0) + k

    def merge(self, other: "SolveStats") -> None:
        self.nodes += other.nodes
        self.depth = max(self.depth, other.depth)
        for rule, k in other.rule_counts.items():
            self.bump(rule, k)
        for key, value in other.extra.items():
            if isinstance(value, int) and isinstance(self.extra.get(key, 0), int):
                self.extra[key] = self.extra.get(key, 0) + value
            else:
                self.extra.setdefault(key, value)

    def to_json(self) -> dict:
        counts = {r: self.rule_counts.get(r, 0) for r in RULE_IDS if r != "R10"}
        if "R10" in self.rule_counts:
            counts["R10"] = self.rule_counts["R10"]
        out = {
            "nodes": self.nodes,
            "rule_counts": counts,
            "depth": self.depth,
            "seed_edge": None if self.seed_edge is None else [v + 1 for v in self.seed_edge],
        }
        out.update(self.extra)
        return out


@dataclass
class SolveResult:
    has_pmc: bool
    certificate: Cut | None = None
    stats: SolveStats = field(default_factory=SolveStats)
    algorithm: str = ""

    def to_json(self) -> dict:
        return {
            "has_pmc": self.has_pmc,
            "algorithm": self.algorithm,
            "certificate": None if self.certificate is None else self.certificate.to_json(),
            "stats": self.stats.to_json(),
        }


def checked(g: Graph, result: SolveResult) -> SolveResult:
    """Re-verify the certificate; a solver bug must never leak an invalid cut."""
    if result.has_pmc:
        if result.certificate is None or not is_pmc(g, result.certificate):
            raise CertificateError(f"{result.algorithm}: certificate is not a perfect matching cut")
    elif result.certificate is not None:
        raise CertificateError(f"{result.algorithm}: negative answer carries a certificate")
    return result


def solve_by_components(
    g: Graph,
    solve_connected: Callable[[Graph], SolveResult],
    algorithm: str,
) -> SolveResult:
    """Solve each connected component and merge the X sides and Y sides.

    A graph has a perfect matching cut iff every component has one, so the
    first failing component settles the answer.
    """
    stats = SolveStats()
    if g.n == 0 or g.n % 2:
        return SolveResult(False, None, stats, algorithm)
    comps = connected_components(g)
    if len(comps) == 1:
        res = solve_connected(g)
        res.algorithm = algorithm
        return checked(g, res)
    side = [X] * g.n
    for comp in comps:
        if len(comp) % 2:
            return SolveResult(False, None, stats, algorithm)
        sub, labels = g.induced_subgraph(comp)
        res = solve_connected(sub)
        stats.merge(res.stats)
        if stats.seed_edge is None and res.stats.seed_edge is not None:
            a, b = res.stats.seed_edge
            stats.seed_edge = (labels[a], labels[b])
        if not res.has_pmc:
            return SolveResult(False, None, stats, algorithm)
        for i, v in enumerate(labels):
            side[v] = res.certificate.side[i]
    return checked(g, SolveResult(True, Cut(tuple(side)), stats, algorithm))
