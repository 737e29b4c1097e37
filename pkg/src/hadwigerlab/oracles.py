"""Slow, independent reference computations used to cross-check the engines."""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb, factorial

import numpy as np

from .graphcore import Graph, canonical_form


@lru_cache(maxsize=None)
def _assignments(n: int, k: int) -> np.ndarray:
    return np.array(list(itertools.product(range(k), repeat=n)), dtype=np.int8).reshape(-1, n)


def chromatic_number_bruteforce(g: Graph, k_max: int = 4) -> int | None:
    """Least ``k <= k_max`` admitting a proper assignment among all ``k^n``."""
    if g.n == 0:
        return 0
    edges = g.edges()
    for k in range(1, k_max + 1):
        a = _assignments(g.n, k)
        ok = np.ones(len(a), dtype=bool)
        for u, v in edges:
            ok &= a[:, u] != a[:, v]
        if ok.any():
            return k
    return None


def labeled_connected_counts(n_max: int) -> list[int]:
    """Connected labelled graphs on ``n`` vertices, by the classical recurrence."""
    c = [0, 1]
    for n in range(2, n_max + 1):
        total = 2 ** comb(n, 2)
        total -= sum(comb(n - 1, k - 1) * c[k] * 2 ** comb(n - k, 2) for k in range(1, n))
        c.append(total)
    return c


def automorphism_count(g: Graph) -> int:
    """``|Aut(g)|`` by checking every vertex permutation."""
    n = g.n
    a = np.zeros((n, n), dtype=bool)
    for u, v in g.edges():
        a[u, v] = a[v, u] = True
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.intp).reshape(-1, n)
    mapped = a[perms[:, :, None], perms[:, None, :]]
    return int((mapped == a).all(axis=(1, 2)).sum())


def labeled_class_count(graphs) -> int:
    """Labelled graphs covered by a list of isomorphism-class representatives."""
    return sum(factorial(g.n) // automorphism_count(g) for g in graphs)


def connected_classes_by_labeling(n: int) -> set:
    """Canonical forms of all connected labelled graphs on ``n`` vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    out = set()
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        if g.is_connected():
            out.add(canonical_form(g))
    return out
