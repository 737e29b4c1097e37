"""Exact vertex colouring and colour-criticality."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .graphcore import Graph, delete_edge, delete_vertex


class Coloring(NamedTuple):
    assignment: tuple[int, ...]
    k: int

    def is_proper(self, g: Graph) -> bool:
        if len(self.assignment) != g.n:
            return False
        if any(self.assignment[u] == self.assignment[v] for u, v in g.edges()):
            return False
        return sorted(set(self.assignment)) == list(range(self.k))


def is_k_colorable(g: Graph, k: int) -> Coloring | None:
    """Proper ``k``-colouring of ``g`` or ``None``.

    DSATUR backtracking: branch on the uncoloured vertex with the most distinct
    neighbour colours (then highest degree, then lowest index); colours are
    opened in first-use order so permuted colourings are never revisited.
    """
    n, adj = g.n, g.adj
    if k < 0:
        raise ValueError("k must be non-negative")
    if n == 0:
        return Coloring((), 0)
    if k == 0:
        return None
    degree = [row.bit_count() for row in adj]
    classes = [0] * k
    colour = [-1] * n

    def solve(uncoloured: int, used: int) -> bool:
        if not uncoloured:
            return True
        pick, pick_key, pick_free = -1, None, 0
        m = uncoloured
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            row = adj[v]
            free = 0
            sat = 0
            for c in range(used):
                if row & classes[c]:
                    sat += 1
                else:
                    free |= 1 << c
            if used < k:
                free |= 1 << used
            if not free:
                return False
            key = (sat, degree[v])
            if pick_key is None or key > pick_key:
                pick, pick_key, pick_free = v, key, free
        v, bit = pick, 1 << pick
        rest = uncoloured & ~bit
        while pick_free:
            low = pick_free & -pick_free
            c = low.bit_length() - 1
            pick_free ^= low
            classes[c] |= bit
            colour[v] = c
            if solve(rest, max(used, c + 1)):
                return True
            classes[c] &= ~bit
        colour[v] = -1
        return False

    if not solve((1 << n) - 1, 0):
        return None
    return Coloring(tuple(colour), max(colour) + 1)


def chromatic_number(g: Graph) -> tuple[int, Coloring]:
    """``(chi, witness)``; chi(empty graph) = 0 and chi(edgeless) = 1."""
    if g.n == 0:
        return 0, Coloring((), 0)
    k = 1 if g.m == 0 else 2
    while True:
        c = is_k_colorable(g, k)
        if c is not None:
            return k, c
        k += 1


def chi(g: Graph) -> int:
    return chromatic_number(g)[0]


@dataclass(frozen=True)
class CriticalityReport:
    chi: int
    k: int
    edge_results: dict[tuple[int, int], int] = field(repr=False)
    verdict: str  # "critical" | "chi_mismatch" | "non_critical_edge" | "disconnected"
    offending_edge: tuple[int, int] | None = None

    @property
    def critical(self) -> bool:
        return self.verdict == "critical"


def is_k_critical(g: Graph, k: int) -> CriticalityReport:
    """Edge-criticality report: chi(G) = k and chi(G - e) < k for every edge."""
    if k < 2:
        raise ValueError("criticality is defined for k >= 2")
    chi_g = chi(g)
    results = {e: chi(delete_edge(g, e)) for e in g.edges()}
    if chi_g != k:
        return CriticalityReport(chi_g, k, results, "chi_mismatch")
    # critical graphs are connected; a spare component survives every edge deletion
    if not g.is_connected():
        return CriticalityReport(chi_g, k, results, "disconnected")
    for e, value in results.items():
        if value >= k:
            return CriticalityReport(chi_g, k, results, "non_critical_edge", e)
    return CriticalityReport(chi_g, k, results, "critical")


def is_critical(g: Graph, k: int) -> bool:
    """Fast predicate equivalent to ``is_k_critical(g, k).critical``."""
    if g.n < k or g.min_degree() < k - 1 or not g.is_connected():
        return False
    if is_k_colorable(g, k - 1) is not None or is_k_colorable(g, k) is None:
        return False
    return all(is_k_colorable(delete_edge(g, e), k - 1) is not None for e in g.edges())


def is_vertex_critical(g: Graph, k: int) -> bool:
    if chi(g) != k:
        return False
    return all(is_k_colorable(delete_vertex(g, v), k - 1) is not None for v in range(g.n))


class HadwigerCheck(NamedTuple):
    holds: bool
    chi: int
    hadwiger_number: int


def check_hadwiger(g: Graph) -> HadwigerCheck:
    """Does chi(G) <= h(G), the order of the largest clique minor?"""
    from .minorlab import hadwiger_number

    c = chi(g)
    h = hadwiger_number(g)
    return HadwigerCheck(c <= h, c, h)
