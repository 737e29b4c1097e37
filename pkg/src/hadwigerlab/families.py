"""Constructors for wheels, hypercubes, truncated cubes and higher-wheel candidates."""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .colorcrit import is_k_critical
from .graphcore import (
    Graph,
    GraphError,
    add_edge,
    bits,
    canonical_form,
    contract_edge,
    delete_vertices,
    is_isomorphic,
    parse_graph6,
    split_vertex,
    subdivide_edge,
    to_graph6,
    wheel_graph,
)
from .minorlab import (
    BIPARTITE_CHAIN,
    CLIQUE_CHAIN,
    K,
    W,
    bracket_or_none,
    has_minor,
    is_free_hadwiger,
    is_free_planar,
)

STORE_NAME = "higher_wheels.g6"
SPLIT_INTERPRETATIONS = ("subdivide_spoke", "split_hub_end", "split_rim_end", "uncontract_hub", "hajos_spoke")


class CandidateUnavailable(LookupError):
    pass


def wheel(i: int) -> Graph:
    """Rim ``C_i`` on ``0..i-1`` and hub ``i``."""
    if i < 3:
        raise GraphError("wheel needs i >= 3")
    return wheel_graph(i)


def hypercube(d: int) -> Graph:
    """``Q_d`` on the integers ``0..2^d-1``, adjacent when they differ in one bit."""
    if not 1 <= d <= 6:
        raise GraphError("hypercube dimension must be in 1..6")
    n = 1 << d
    return Graph.from_edges(n, [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)])


def truncate_corners(g: Graph, corners: Iterable[int]) -> Graph:
    """Cut off each corner: its surviving neighbours become a clique, then the
    corners are deleted (remaining vertices keep their relative order)."""
    cut = sorted(set(corners))
    if not cut:
        raise GraphError("no corners to cut")
    if cut[0] < 0 or cut[-1] >= g.n:
        raise GraphError("corner out of range")
    cut_mask = sum(1 << v for v in cut)
    h = g
    for v in cut:
        rest = sorted(bits(g.adj[v] & ~cut_mask))
        for a, b in itertools.combinations(rest, 2):
            if not h.has_edge(a, b):
                h = add_edge(h, (a, b))
    return delete_vertices(h, cut)


def split_spoke_wheel(i: int, interpretation: str) -> Graph:
    """``W_i`` with its spoke ``(hub, 0)`` split in one of several senses.

    subdivide_spoke  the spoke becomes a path hub-w-0
    split_hub_end    the hub splits into nonadjacent halves {0} / {1..i-1}
    split_rim_end    rim vertex 0 splits into nonadjacent halves {hub} / {1, i-1}
    uncontract_hub   the hub splits into adjacent halves seeing {0, 1} and
                     {2..i-1}; contracting the new edge gives back ``W_i``
    hajos_spoke      Hajós join with ``K_4`` along the spoke: the spoke becomes
                     hub={b,c}-a-0 where hub, a, b, c span ``K_4`` minus hub-a
    """
    if i < 3 or i % 2 == 0:
        raise GraphError("split-spoke wheels need an odd i >= 3")
    g = wheel(i)
    hub = i
    if interpretation == "subdivide_spoke":
        return subdivide_edge(g, (0, hub))
    if interpretation == "split_hub_end":
        return split_vertex(g, hub, [0], range(1, i))
    if interpretation == "split_rim_end":
        return split_vertex(g, 0, [hub], [1, i - 1])
    if interpretation == "uncontract_hub":
        h = split_vertex(g, hub, [0, 1], range(2, i))
        return add_edge(h, (hub, i + 1))
    if interpretation == "hajos_spoke":
        a, b, c = i + 1, i + 2, i + 3
        edges = [e for e in g.edges() if e != (0, hub)]
        edges += [(hub, b), (hub, c), (a, b), (a, c), (b, c), (0, a)]
        return Graph.from_edges(i + 4, edges)
    raise GraphError(f"unknown interpretation {interpretation!r}; expected one of {SPLIT_INTERPRETATIONS}")


def calibrate_split_interpretation(i: int = 5) -> dict[str, bool]:
    """Which readings of the split-spoke operation leave a 4-critical graph."""
    return {name: is_k_critical(split_spoke_wheel(i, name), 4).critical for name in SPLIT_INTERPRETATIONS}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple = ()

    def build(self) -> Graph:
        if self.kind == "wheel":
            return wheel(*self.params)
        if self.kind == "split_spoke_wheel":
            return split_spoke_wheel(*self.params)
        if self.kind == "hypercube":
            return hypercube(*self.params)
        if self.kind == "truncated_cube":
            d, corners = self.params
            return truncate_corners(hypercube(d), corners)
        if self.kind == "higher_wheel_candidate":
            return higher_wheel_candidate(*self.params)
        raise GraphError(f"unknown family {self.kind!r}")


# candidate store ------------------------------------------------------------

CHECK_NAMES = ("critical", "wheel_minor", "bracket_clique", "bracket_bipartite",
               "not_free_planar", "not_free_hadwiger", "contracts_to_lower")


def checklist_hash() -> str:
    return hashlib.sha256(",".join(CHECK_NAMES).encode()).hexdigest()[:12]


def _default_store() -> Path:
    return Path(str(resources.files("hadwigerlab") / "data" / STORE_NAME))


def read_store(path: str | Path | None = None) -> dict[int, list[Graph]]:
    """Parse a candidate store: ``# i=<i> ...`` header lines open a section."""
    path = Path(path) if path is not None else _default_store()
    out: dict[int, list[Graph]] = {}
    if not path.exists():
        return out
    current = None
    for line in path.read_text().splitlines():
        line = line.strip()
        if line.startswith("#"):
            fields = dict(f.split("=", 1) for f in line[1:].split() if "=" in f)
            if "i" in fields:
                current = int(fields["i"])
                out.setdefault(current, [])
            continue
        if line and current is not None:
            out[current].append(parse_graph6(line))
    return out


def write_store(store: dict[int, Sequence[Graph]], path: str | Path | None = None) -> Path:
    """Header per section: ``i``, count, checklist hash and the lower candidate
    (first entry of section ``i-2``) the section was expanded from."""
    path = Path(path) if path is not None else _default_store()
    lines = []
    for i in sorted(store):
        lower = store.get(i - 2, [g3()] if i == 5 else [])
        src = f" lower={to_graph6(lower[0])}" if lower else ""
        lines.append(f"# i={i} count={len(store[i])} checklist={checklist_hash()}{src}")
        lines.extend(to_graph6(g) for g in store[i])
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n")
    return path


def g3() -> Graph:
    """The cube with one corner cut off."""
    return truncate_corners(hypercube(3), [0])


def higher_wheel_candidate(i: int, override: str | Graph | None = None, store: str | Path | None = None) -> Graph:
    if override is not None:
        return parse_graph6(override) if isinstance(override, str) else override
    if i == 3:
        return g3()
    if i not in (5, 7, 9):
        raise GraphError("higher-wheel candidates exist for i in {3, 5, 7, 9}")
    found = read_store(store).get(i)
    if not found:
        raise CandidateUnavailable(f"no stored candidate for i={i}; run `hadwigerlab scan identify --i {i}`")
    return found[0]


# verification ---------------------------------------------------------------

@dataclass(frozen=True)
class HigherWheelReport:
    i: int
    checks: dict  # name -> True / False / None (not applicable)
    brackets: tuple[str | None, str | None]
    reaches_k4: bool

    @property
    def passed(self) -> bool:
        return all(v is not False for v in self.checks.values())

    def failed(self) -> list[str]:
        return [k for k, v in self.checks.items() if v is False]


def contraction_pairs_to(g: Graph, target: Graph) -> tuple[tuple[int, int], tuple[int, int]] | None:
    """Two successive contractions of ``g`` giving ``target`` up to isomorphism."""
    if g.n != target.n + 2:
        return None
    goal = canonical_form(target)
    seen = set()
    for e in g.edges():
        h = contract_edge(g, e)
        key = canonical_form(h)
        if key in seen:
            continue
        seen.add(key)
        for f in h.edges():
            if canonical_form(contract_edge(h, f)) == goal:
                return e, f
    return None


def _reaches_k4_by_contraction(g: Graph) -> bool:
    """Some sequence of edge contractions alone turns ``g`` into ``K_4``."""
    level = {canonical_form(g): g}
    while level:
        if any(h.n == 4 and h.m == 6 for h in level.values()):
            return True
        nxt = {}
        for h in level.values():
            if h.n <= 4:
                continue
            for e in h.edges():
                c = contract_edge(h, e)
                if c.m >= 6:
                    nxt.setdefault(canonical_form(c), c)
        level = nxt
    return False


def verify_higher_wheel(g: Graph, i: int, lower: Graph | None = None) -> HigherWheelReport:
    """Checklist for a first-order higher wheel ``G_i``; a report, not a gate."""
    clique = bracket_or_none(g, CLIQUE_CHAIN)
    bip = bracket_or_none(g, BIPARTITE_CHAIN)
    if lower is None and i > 3:
        try:
            lower = higher_wheel_candidate(i - 2)
        except CandidateUnavailable:
            lower = None
    checks = {
        "critical": is_k_critical(g, 4).critical,
        "wheel_minor": has_minor(g, W(i).graph) is not None,
        "bracket_clique": clique is not None and str(clique) == "K5-,K5",
        "bracket_bipartite": bip is not None and str(bip) == "K33-,K33",
        "not_free_planar": not is_free_planar(g).verdict,
        "not_free_hadwiger": not is_free_hadwiger(g, 4).verdict,
        "contracts_to_lower": None if lower is None else contraction_pairs_to(g, lower) is not None,
    }
    return HigherWheelReport(i, checks, (str(clique) if clique else None, str(bip) if bip else None),
                             _reaches_k4_by_contraction(g))


def wheel_isomorphic(g: Graph) -> int | None:
    """``i`` when ``g`` is the wheel ``W_i``."""
    i = g.n - 1
    if i >= 3 and g.m == 2 * i and is_isomorphic(g, wheel(i)):
        return i
    return None


__all__ = [
    "CandidateUnavailable", "FamilySpec", "HigherWheelReport", "SPLIT_INTERPRETATIONS", "K",
    "calibrate_split_interpretation", "checklist_hash", "contraction_pairs_to", "g3",
    "higher_wheel_candidate", "hypercube", "read_store", "split_spoke_wheel", "truncate_corners",
    "verify_higher_wheel", "wheel", "wheel_isomorphic", "write_store",
]
