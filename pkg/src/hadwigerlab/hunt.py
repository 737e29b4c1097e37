"""Isomorph-free enumeration and the exhaustive scans built on it."""

from __future__ import annotations

import csv
import io
import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

import networkx as nx

from . import __version__
from .colorcrit import chi, is_critical, is_k_colorable, is_k_critical
from .families import (
    SPLIT_INTERPRETATIONS,
    higher_wheel_candidate,
    hypercube,
    split_spoke_wheel,
    truncate_corners,
    verify_higher_wheel,
    wheel,
)
from .graphcore import (
    Graph,
    bits,
    canonical_form,
    parse_graph6,
    to_graph6,
)
from .minorlab import (
    BIPARTITE_CHAIN,
    CLIQUE_CHAIN,
    bracket_or_none,
    has_minor,
    is_free_hadwiger,
    is_free_planar,
    pattern,
)

MAX_ENUM = 10


# enumeration ----------------------------------------------------------------

def _invariant(adj: Sequence[int], v: int) -> tuple:
    return (adj[v].bit_count(), sorted(adj[u].bit_count() for u in bits(adj[v])))


def _connected_without(adj: Sequence[int], n: int, v: int) -> bool:
    full = ((1 << n) - 1) & ~(1 << v)
    start = full & -full
    seen = frontier = start
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= adj[u]
        frontier = nxt & full & ~seen
        seen |= frontier
    return seen == full


def _is_generated_last(adj: Sequence[int], n: int) -> bool:
    """Vertex ``n-1`` carries the least invariant among non-cut vertices.

    Every connected graph has a non-cut vertex, so each isomorphism class is
    reached from the connected graph obtained by deleting such a vertex of
    least invariant; this test drops most other routes before the
    canonical-form lookup.
    """
    last = n - 1
    mine = _invariant(adj, last)
    for v in range(last):
        if adj[v].bit_count() > mine[0]:
            continue
        if _invariant(adj, v) < mine and _connected_without(adj, n, v):
            return False
    return True


def _children(parent: Graph, keep_child: Callable[[Graph], bool] | None, min_degree: int = 0) -> Iterator[Graph]:
    p = parent.n
    n = p + 1
    # vertices that must gain a neighbour to reach min_degree
    needy = sum(1 << v for v in range(p) if parent.adj[v].bit_count() < min_degree)
    if any(parent.adj[v].bit_count() < min_degree - 1 for v in range(p)):
        return
    for s in range(1, 1 << p):
        if s & needy != needy or s.bit_count() < min_degree:
            continue
        adj = list(parent.adj)
        for u in bits(s):
            adj[u] |= 1 << p
        adj.append(s)
        if not _is_generated_last(adj, n):
            continue
        child = Graph(n, tuple(adj))
        if keep_child is None or keep_child(child):
            yield child


def _level(parents: Sequence[Graph], keep_child, min_degree: int = 0, jobs: int = 1) -> list[Graph]:
    if jobs > 1 and len(parents) > 64:
        chunks = [parents[j::jobs * 4] for j in range(jobs * 4)]
        with ProcessPoolExecutor(jobs) as pool:
            parts = list(pool.map(_level_chunk, chunks, itertools.repeat(keep_child), itertools.repeat(min_degree)))
        forms = set().union(*parts)
    else:
        forms = _level_chunk(parents, keep_child, min_degree)
    return sorted((f.graph() for f in forms), key=to_graph6)


def _level_chunk(parents, keep_child, min_degree) -> set:
    forms = set()
    for parent in parents:
        for child in _children(parent, keep_child, min_degree):
            forms.add(canonical_form(child))
    return forms


def _hereditary_levels(n: int, keep: Callable[[Graph], bool] | None, jobs: int = 1) -> Iterator[list[Graph]]:
    """Levels 1..n of connected graphs satisfying a hereditary property."""
    level = [Graph(1, (0,))]
    yield level
    for _ in range(2, n + 1):
        level = _level(level, keep, jobs=jobs)
        yield level


def enumerate_connected(n: int, jobs: int = 1) -> Iterator[Graph]:
    """One canonically labelled representative per isomorphism class of
    connected graphs on ``n`` vertices, in graph6 order."""
    if not 1 <= n <= MAX_ENUM:
        raise ValueError(f"n must be in 1..{MAX_ENUM}")
    for i, level in enumerate(_hereditary_levels(n, None, jobs), start=1):
        if i == n:
            yield from level


@dataclass(frozen=True)
class _ColorableBelow:
    """Picklable predicate: ``g`` is ``k``-colourable."""
    k: int

    def __call__(self, g: Graph) -> bool:
        return is_k_colorable(g, self.k) is not None


@dataclass(frozen=True)
class _CriticalCandidate:
    k: int

    def __call__(self, g: Graph) -> bool:
        return is_k_colorable(g, self.k - 1) is None


def critical_graphs(n_max: int, k: int, jobs: int = 1) -> dict[int, list[Graph]]:
    """All ``k``-critical graphs with at most ``n_max`` vertices, by order.

    A ``k``-critical graph minus any vertex is connected and
    ``(k-1)``-colourable, so parents come from the hereditary class of
    connected ``(k-1)``-colourable graphs; children must have minimum degree
    ``k-1`` and must not be ``(k-1)``-colourable before the full test.
    """
    if n_max > MAX_ENUM:
        raise ValueError(f"n_max must be at most {MAX_ENUM}")
    if k < 2:
        raise ValueError("k must be at least 2")
    out: dict[int, list[Graph]] = {}
    if k == 2:
        out[2] = [Graph.from_edges(2, [(0, 1)])] if n_max >= 2 else []
        return out
    level = [Graph(1, (0,))]
    for n in range(2, n_max + 1):
        found = _level(level, _CriticalCandidate(k), min_degree=k - 1, jobs=jobs)
        out[n] = [g for g in found if is_critical(g, k)]
        if n < n_max:
            level = _level(level, _ColorableBelow(k - 1), jobs=jobs)
    return {n: gs for n, gs in out.items() if gs}


# reports --------------------------------------------------------------------

@dataclass
class ScanReport:
    scan: str
    params: dict
    classes: dict[str, list[str]]
    notes: dict = field(default_factory=dict)
    engine_version: str = __version__
    wall_ms: int = 0
    rows: list[dict] = field(default_factory=list)

    @property
    def counts(self) -> dict[str, int]:
        return {name: len(items) for name, items in self.classes.items()}

    def to_dict(self) -> dict:
        return {
            "scan": self.scan,
            "params": self.params,
            "counts": self.counts,
            "classes": self.classes,
            "notes": self.notes,
            "engine_version": self.engine_version,
            "wall_ms": self.wall_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.DictWriter(buf, CSV_FIELDS, lineterminator="\n")
        w.writeheader()
        for row in self.rows:
            w.writerow(row)
        return buf.getvalue()

    def graphs(self) -> Iterator[Graph]:
        seen = set()
        for items in self.classes.values():
            for s in items:
                if s not in seen:
                    seen.add(s)
                    yield parse_graph6(s)


CSV_FIELDS = ["graph6", "n", "m", "chi", "critical", "free_planar", "free_hadwiger4",
              "bracket_clique", "bracket_bipartite", "tag"]


def classify_row(g: Graph, tag: str = "") -> dict:
    """One CSV row; ``critical`` refers to 4-criticality."""
    c = bracket_or_none(g, CLIQUE_CHAIN)
    b = bracket_or_none(g, BIPARTITE_CHAIN)
    return {
        "graph6": to_graph6(g),
        "n": g.n,
        "m": g.m,
        "chi": chi(g),
        "critical": is_critical(g, 4),
        "free_planar": is_free_planar(g).verdict,
        "free_hadwiger4": is_free_hadwiger(g, 4).verdict,
        "bracket_clique": str(c) if c else "",
        "bracket_bipartite": str(b) if b else "",
        "tag": tag,
    }


def _timed(fn):
    def run(*args, **kwargs):
        t = time.perf_counter()
        report = fn(*args, **kwargs)
        report.wall_ms = round((time.perf_counter() - t) * 1000)
        return report
    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


@_timed
def find_k_critical(n_max: int, k: int, jobs: int = 1) -> ScanReport:
    if k not in (3, 4, 5):
        raise ValueError("k must be 3, 4 or 5")
    found = critical_graphs(n_max, k, jobs)
    classes = {f"n={n}": [to_graph6(g) for g in gs] for n, gs in sorted(found.items())}
    return ScanReport("critical", {"n_max": n_max, "k": k}, classes)


def _tagger(n_max: int) -> Callable[[Graph], str]:
    known = {}
    for i in range(3, n_max):
        known.setdefault(canonical_form(wheel(i)), f"odd wheel W{i}" if i % 2 else f"wheel W{i}")
        if i % 2:
            for s in SPLIT_INTERPRETATIONS:
                g = split_spoke_wheel(i, s)
                if g.n <= n_max:
                    known.setdefault(canonical_form(g), f"split-spoke wheel W{i} ({s})")
    return lambda g: known.get(canonical_form(g), "other")


@_timed
def question1_scan(n_max: int, jobs: int = 1) -> ScanReport:
    """4-critical graphs split by free-Hadwiger(4) and free-planar membership."""
    if n_max > MAX_ENUM:
        raise ValueError(f"n_max must be at most {MAX_ENUM}")
    tag = _tagger(n_max)
    classes = {"i": [], "ii": [], "iii": []}
    tags: dict[str, str] = {}
    violations: dict[str, str] = {}
    rows = []
    for n, graphs in sorted(critical_graphs(n_max, 4, jobs).items()):
        for g in graphs:
            s = to_graph6(g)
            fh = is_free_hadwiger(g, 4)
            fp = is_free_planar(g)
            if not fh.verdict:
                classes["iii"].append(s)
                violations[s] = fh.violating_pattern.name
                label = ""
            else:
                classes["i" if fp.verdict else "ii"].append(s)
                label = tags[s] = tag(g)
            rows.append(classify_row(g, label))
    notes = {
        "tags": tags,
        "violating_pattern": violations,
        "class_ii_empty": not classes["ii"],
        "statement": (f"class ii (free-Hadwiger, not free-planar, 4-critical) is "
                      f"{'empty' if not classes['ii'] else 'non-empty'} for n <= {n_max}"),
    }
    return ScanReport("question1", {"n_max": n_max}, classes, notes, rows=rows)


def _corner_orbits(d: int, size: int) -> list[tuple[int, ...]]:
    """Corner sets of ``Q_d`` up to the hypercube symmetry group."""
    n = 1 << d
    group = []
    for perm in itertools.permutations(range(d)):
        for flip in range(n):
            group.append([flip ^ sum(((v >> b) & 1) << perm[b] for b in range(d)) for v in range(n)])
    reps = {}
    for s in itertools.combinations(range(n), size):
        key = min(tuple(sorted(g[v] for v in s)) for g in group)
        reps.setdefault(key, key)
    return sorted(reps)


@_timed
def corner_cut_scan(d: int, max_cut: int) -> ScanReport:
    """Every truncation of ``Q_d`` by 1..max_cut corners (one per orbit of the
    cube's symmetry group, further merged by canonical form)."""
    if not 1 <= d <= 4 or not 1 <= max_cut <= 3:
        raise ValueError("corner_cut_scan needs d <= 4 and max_cut <= 3")
    q = hypercube(d)
    classes: dict[str, list[str]] = {}
    chis: dict[str, int] = {}
    corners: dict[str, list[int]] = {}
    critical5 = []
    rows = []
    for size in range(1, max_cut + 1):
        seen = {}
        for s in _corner_orbits(d, size):
            t = truncate_corners(q, s)
            seen.setdefault(canonical_form(t), (s, t))
        items = []
        for _, (s, t) in sorted(seen.items(), key=lambda kv: to_graph6(kv[1][1])):
            g6 = to_graph6(t)
            items.append(g6)
            c = chi(t)
            chis[g6] = c
            corners[g6] = list(s)
            if c == 5 and is_k_critical(t, 5).critical:
                critical5.append(g6)
            rows.append(classify_row(t, f"Q{d} minus {list(s)}"))
        classes[f"cut={size}"] = items
    classes["critical5"] = critical5
    notes = {
        "chi": chis,
        "corners": corners,
        "any_5_critical": bool(critical5),
        "max_chi_by_cut": {k: max((chis[g] for g in v), default=0) for k, v in classes.items() if k != "critical5"},
        "verified_range": f"d = {d} only; higher dimensions are not checked",
    }
    return ScanReport("corners", {"d": d, "max_cut": max_cut}, classes, notes, rows=rows)


# higher wheels --------------------------------------------------------------

def expand_by_uncontraction(g: Graph) -> list[Graph]:
    """All graphs, up to isomorphism, with an edge whose contraction gives ``g``.

    Vertex ``v`` becomes an adjacent pair ``v, n`` whose neighbourhoods cover
    ``N(v)`` (shared neighbours allowed).  Output is in graph6 order of the
    canonical representatives.
    """
    if g.n > 14:
        raise ValueError("expansion limited to n <= 14")
    forms = {}
    for v in range(g.n):
        nbrs = list(bits(g.adj[v]))
        # each neighbour goes to v only (0), the new vertex only (1), or both (2)
        for choice in itertools.product((0, 1, 2), repeat=len(nbrs)):
            h = _uncontract(g, v, nbrs, choice)
            forms.setdefault(canonical_form(h), h)
    return sorted((f.graph() for f in forms), key=to_graph6)


def _uncontract(g: Graph, v: int, nbrs: Sequence[int], choice: Sequence[int]) -> Graph:
    n = g.n
    adj = list(g.adj) + [0]
    for u, c in zip(nbrs, choice):
        if c == 1:
            adj[v] &= ~(1 << u)
            adj[u] &= ~(1 << v)
        if c:
            adj[n] |= 1 << u
            adj[u] |= 1 << n
    adj[v] |= 1 << n
    adj[n] |= 1 << v
    return Graph(n + 1, tuple(adj))


def _planar(g: Graph) -> bool:
    return nx.check_planarity(nx.Graph(list(g.edges())))[0] if g.m else True


def identify_higher_wheels(i: int, lower: Graph | None = None) -> list[Graph]:
    """Candidates for ``G_i``: two uncontractions of the ``G_{i-2}`` candidate
    that pass the higher-wheel checklist.

    A passing candidate has neither ``K_5`` nor ``K_{3,3}`` as a minor, hence
    is planar, and so is every intermediate graph (planarity is closed under
    contraction); non-planar graphs are discarded early.
    """
    if i not in (5, 7, 9):
        raise ValueError("i must be 5, 7 or 9")
    if lower is None:
        lower = higher_wheel_candidate(i - 2)
    middle = [h for h in expand_by_uncontraction(lower) if _planar(h)]
    final = {}
    for h in middle:
        for c in expand_by_uncontraction(h):
            if c.min_degree() < 3 or not _planar(c):
                continue
            if is_k_colorable(c, 3) is not None or not is_critical(c, 4):
                continue
            final.setdefault(canonical_form(c), c)
    out = []
    for c in sorted(final.values(), key=to_graph6):
        if verify_higher_wheel(c, i, lower=lower).passed:
            out.append(c)
    return out


@_timed
def identify_scan(i: int, lower: Graph | None = None) -> ScanReport:
    found = identify_higher_wheels(i, lower)
    notes = {"emitted": len(found),
             "statement": f"{len(found)} candidate(s) for G{i} pass the checklist" if found
             else f"no candidate for G{i} passes the checklist"}
    return ScanReport("identify", {"i": i}, {f"G{i}": [to_graph6(g) for g in found]}, notes,
                      rows=[classify_row(g, f"G{i} candidate") for g in found])


def revalidate(report: ScanReport) -> list[str]:
    """Fresh engine calls for every listed graph; returns the disagreements."""
    bad = []
    if report.scan == "question1":
        for cls, items in report.classes.items():
            for s in items:
                g = parse_graph6(s)
                fh = is_free_hadwiger(g, 4).verdict
                fp = is_free_planar(g).verdict
                got = "iii" if not fh else ("i" if fp else "ii")
                if got != cls or not is_k_critical(g, 4).critical:
                    bad.append(s)
                if cls == "iii":
                    p = pattern(report.notes["violating_pattern"][s])
                    model = has_minor(g, p.graph)
                    if model is None or not model.validate(g, p.graph):
                        bad.append(s)
    elif report.scan == "critical":
        k = report.params["k"]
        bad = [s for items in report.classes.values() for s in items if not is_k_critical(parse_graph6(s), k).critical]
    elif report.scan == "corners":
        bad = [s for s in report.classes["critical5"] if not is_k_critical(parse_graph6(s), 5).critical]
        bad += [s for s, c in report.notes["chi"].items() if chi(parse_graph6(s)) != c]
    elif report.scan == "identify":
        i = report.params["i"]
        bad = [s for items in report.classes.values() for s in items
               if not verify_higher_wheel(parse_graph6(s), i).passed]
    return bad


__all__ = [
    "CSV_FIELDS", "ScanReport", "classify_row", "corner_cut_scan", "critical_graphs",
    "enumerate_connected", "expand_by_uncontraction", "find_k_critical", "identify_higher_wheels",
    "identify_scan", "question1_scan", "revalidate",
]
