"""Minor containment, the named pattern library, and free-class tests.

``has_minor`` places one branch set per pattern vertex.  Pattern vertices are
placed so each has an already placed neighbour; every branch set is enumerated
as a connected set rooted at its lowest host vertex.  Completeness of the
pruning rests on looking only for a model of minimum total size: in such a
model every branch set is an inclusion-minimal connected set touching the
branch sets of its pattern neighbours, and twin pattern vertices can be
ordered by their roots.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .graphcore import (
    Graph,
    GraphError,
    add_edge,
    bits,
    canonical_form,
    complete_bipartite,
    complete_graph,
    contract_edge,
    cycle_graph,
    delete_edge,
    automorphism_orbits,
    delete_vertex,
    induced_subgraph,
    parse_graph6,
    relabel,
    split_vertex,
    to_graph6,
    wheel_graph,
)


class UnsupportedPattern(ValueError):
    pass


class ChainError(ValueError):
    pass


# -- patterns ---------------------------------------------------------------


@dataclass(frozen=True)
class Pattern:
    name: str
    graph: Graph

    def __str__(self) -> str:
        return self.name


def K(k: int) -> Pattern:
    if k < 1:
        raise ValueError("K(k) needs k >= 1")
    return Pattern(f"K{k}", complete_graph(k))


def K_minus(k: int) -> Pattern:
    if k < 2:
        raise ValueError("K_minus(k) needs k >= 2")
    return Pattern(f"K{k}-", delete_edge(complete_graph(k), (0, 1)))


def K_split(k: int, p: int, q: int) -> Pattern:
    """``K_k`` with vertex ``k-1`` split into nonadjacent halves seeing ``p`` and ``q`` vertices."""
    if p < 1 or q < 1 or p + q != k - 1:
        raise ValueError(f"K_split({k},{p},{q}) needs p, q >= 1 and p + q = k - 1")
    g = split_vertex(complete_graph(k), k - 1, range(p), range(p, k - 1))
    return Pattern(f"K{k}^({p},{q})", g)


def K33() -> Pattern:
    return Pattern("K33", complete_bipartite(3, 3))


def K33_minus() -> Pattern:
    return Pattern("K33-", delete_edge(complete_bipartite(3, 3), (0, 3)))


def W(i: int) -> Pattern:
    return Pattern(f"W{i}", wheel_graph(i))


def C6_plus(chord: int = 3) -> Pattern:
    """Six-cycle plus the chord from vertex 0 to vertex ``chord`` (3 = antipodal)."""
    if chord not in (2, 3):
        raise ValueError("chord length must be 2 or 3")
    return Pattern("C6+", add_edge(cycle_graph(6), (0, chord)))


def custom(graph6: str) -> Pattern:
    return Pattern(graph6, parse_graph6(graph6))


_NAME = re.compile(
    # K33 names the bipartite graph, so it is tried before K<k>
    r"""^(?:
        K3,?3(?P<bminus>-)?
      | K(?P<k>\d+)(?P<minus>-)?(?:\^\(?(?P<p>\d+),(?P<q>\d+)\)?)?
      | W(?P<w>\d+)
      | C6\+
    )$""",
    re.X,
)


def pattern(name: str) -> Pattern:
    """Parse ``K5``, ``K5-``, ``K5^(2,2)``, ``K33``, ``K33-``, ``W4``, ``C6+`` or a graph6 string."""
    m = _NAME.match(name)
    if m is None:
        return custom(name)
    if m["w"]:
        return W(int(m["w"]))
    if name.startswith("C6"):
        return C6_plus()
    if m["k"] is None:
        return K33_minus() if m["bminus"] else K33()
    k = int(m["k"])
    if m["p"]:
        if m["minus"]:
            raise ValueError(f"cannot combine edge removal and splitting in {name!r}")
        return K_split(k, int(m["p"]), int(m["q"]))
    return K_minus(k) if m["minus"] else K(k)


def library(max_vertices: int = 7) -> list[Pattern]:
    """Every named pattern with at most ``max_vertices`` vertices."""
    pats: list[Pattern] = []
    for k in range(1, max_vertices + 1):
        pats.append(K(k))
        if k >= 3:
            pats.append(K_minus(k))
    for k in range(4, max_vertices):
        for p in range(1, (k - 1) // 2 + 1):
            pats.append(K_split(k, p, k - 1 - p))
    for i in range(3, max_vertices):
        pats.append(W(i))
    if max_vertices >= 6:
        pats += [K33(), K33_minus(), C6_plus()]
    return pats


# -- minor models -----------------------------------------------------------


@dataclass(frozen=True)
class MinorModel:
    branch_sets: tuple[tuple[int, ...], ...]

    def validate(self, g: Graph, h: Graph) -> bool:
        """Direct check of the model invariants against host ``g`` and pattern ``h``."""
        sets = self.branch_sets
        if len(sets) != h.n:
            return False
        seen: set[int] = set()
        for s in sets:
            if not s or seen.intersection(s) or any(not 0 <= v < g.n for v in s):
                return False
            seen.update(s)
            todo, reach = [s[0]], {s[0]}
            while todo:
                v = todo.pop()
                for u in s:
                    if u not in reach and g.has_edge(u, v):
                        reach.add(u)
                        todo.append(u)
            if len(reach) != len(s):
                return False
        for a, b in h.edges():
            if not any(g.has_edge(x, y) for x in sets[a] for y in sets[b]):
                return False
        return True


def _neighbourhood(adj: Sequence[int], mask: int) -> int:
    out = 0
    for v in bits(mask):
        out |= adj[v]
    return out & ~mask


def _components(adj: Sequence[int], within: int) -> list[int]:
    comps = []
    todo = within
    while todo:
        seen = frontier = todo & -todo
        while frontier:
            reach = 0
            f = frontier
            while f:
                low = f & -f
                reach |= adj[low.bit_length() - 1]
                f ^= low
            frontier = reach & todo & ~seen
            seen |= frontier
        comps.append(seen)
        todo &= ~seen
    return comps


@lru_cache(maxsize=4096)
def _pattern_plan(h: Graph):
    """Placement order, twin predecessors and per-step lookahead data for ``h``."""
    k = h.n
    deg = h.degrees()
    order = [max(range(k), key=lambda v: (deg[v], -v))]
    while len(order) < k:
        placed = set(order)
        best = max(
            (v for v in range(k) if v not in placed),
            key=lambda v: (sum(1 for u in order if h.has_edge(u, v)), deg[v], -v),
        )
        order.append(best)
    pos = {v: i for i, v in enumerate(order)}
    # twins: vertices interchangeable by a transposition automorphism
    twin_prev = [-1] * k
    for i, v in enumerate(order):
        for j in range(i - 1, -1, -1):
            u = order[j]
            if h.adj[u] & ~(1 << v) == h.adj[v] & ~(1 << u):
                twin_prev[i] = j
                break
    placed_nbrs = [[pos[u] for u in bits(h.adj[v]) if pos[u] < i] for i, v in enumerate(order)]
    later_nbrs = [sum(1 for u in bits(h.adj[v]) if pos[u] > i) for i, v in enumerate(order)]
    closing = [later_nbrs[i] == 0 for i in range(k)]
    # open demand of step j once steps < i are placed
    pending = [[sum(1 for u in bits(h.adj[order[j]]) if pos[u] >= i) for j in range(i)] for i in range(k + 1)]
    lookahead = []
    for i in range(k + 1):
        rest = 0
        for v in order[i:]:
            rest |= 1 << v
        groups = []
        todo = rest
        while todo:
            seen = frontier = todo & -todo
            while frontier:
                reach = 0
                for v in bits(frontier):
                    reach |= h.adj[v]
                frontier = reach & todo & ~seen
                seen |= frontier
            members = list(bits(seen))
            attach = sorted({pos[u] for v in members for u in bits(h.adj[v]) if pos[u] < i})
            demand = [sum(1 for v in members if h.adj[v] >> order[j] & 1) for j in attach]
            inner = sum((h.adj[v] & seen).bit_count() for v in members) // 2
            uniform = bool(attach) and all(d == len(members) for d in demand)
            hdeg = sorted((deg[v] for v in members), reverse=True)
            groups.append((len(members), attach, demand, inner, uniform, hdeg))
            todo &= ~seen
        lookahead.append(groups)
    return order, twin_prev, placed_nbrs, later_nbrs, closing, pending, lookahead


def _union_rows(adj: Sequence[int], mask: int) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= adj[low.bit_length() - 1]
        mask ^= low
    return out


def _is_connected_set(adj: Sequence[int], mask: int) -> bool:
    seen = frontier = mask & -mask
    while frontier:
        frontier = _union_rows(adj, frontier) & mask & ~seen
        seen |= frontier
    return seen == mask


def _can_host(adj: Sequence[int], comp: int, nbr: list[int], group) -> bool:
    """Cheap necessary conditions for one free component to hold a group of
    mutually connected, still unplaced pattern vertices."""
    size, attach, demand, inner, uniform, hdeg = group
    csize = comp.bit_count()
    if csize < size:
        return False
    for j, d in zip(attach, demand):
        if (comp & nbr[j]).bit_count() < d:
            return False
    if inner:
        # the component must carry one edge per pattern edge inside the group
        # plus a spanning tree of every branch set; unused vertices take their
        # edges with them
        local = []
        full_deg = []
        m = comp
        while m:
            low = m & -m
            v = low.bit_length() - 1
            local.append((adj[v] & comp).bit_count())
            full_deg.append(adj[v].bit_count())
            m ^= low
        edges = sum(local) // 2
        full_deg.sort(reverse=True)
        prefix = [0]
        for d in full_deg:
            prefix.append(prefix[-1] + d)
        least = 0
        for need in hdeg:
            s = 1
            while s < csize and prefix[s] - 2 * (s - 1) < need:
                s += 1
            least += s
        local.sort()
        lost = [0]
        for d in local:
            lost.append(lost[-1] + d)
        for used in range(csize, max(least, size) - 1, -1):
            x = csize - used
            if edges - max(0, lost[x] - x * (x - 1) // 2) >= inner + used - size:
                break
        else:
            return False
    if uniform and len(attach) > 1:
        # every set must touch all attached targets; a vertex touching c of the
        # a targets contributes c, and sets are disjoint
        a = len(attach)
        full = partial = 0
        m = comp
        while m:
            low = m & -m
            m ^= low
            c = 0
            for j in attach:
                if nbr[j] & low:
                    c += 1
            if c == a:
                full += 1
            else:
                partial += c
        if full + partial // a < size:
            return False
    return True


def _search_model(adj: Sequence[int], n: int, h: Graph, first_root: int = -1) -> list[int] | None:
    order, twin_prev, placed_nbrs, later_nbrs, closing, pending, lookahead = _pattern_plan(h)
    k = h.n
    sets = [0] * k
    reach = [0] * k  # union of adjacency rows over each placed set
    roots = [-1] * k

    def feasible(i: int, free: int) -> bool:
        if free.bit_count() < k - i:
            return False
        nbr = [reach[j] & free for j in range(i)]
        for j in range(i):
            if nbr[j].bit_count() < pending[i][j]:
                return False
            for private, near in leaf_info.get(sets[j], ()):
                if private & free:
                    continue
                if not any(
                    private & sets[a] and not sets[a] & near for a in all_nbrs[j] if a < i
                ):
                    return False
        comps = _components(adj, free)
        for group in lookahead[i]:
            if not any(_can_host(adj, c, nbr, group) for c in comps):
                return False
        return True

    leaf_info: dict[int, list[tuple[int, int]]] = {}
    position = {v: i for i, v in enumerate(order)}
    all_nbrs = [[position[u] for u in bits(h.adj[v])] for v in order]

    def every_vertex_needed(i: int, s: int, rest: int) -> bool:
        # in a minimum model each non-cut vertex x of a branch set is the only
        # contact to some neighbouring branch set (placed or still to come)
        if s & (s - 1) == 0:
            return True
        info = leaf_info.get(s)
        if info is None:
            info = []
            m = s
            while m:
                low = m & -m
                m ^= low
                others = s ^ low
                if _is_connected_set(adj, others):
                    near = _union_rows(adj, others)
                    info.append((adj[low.bit_length() - 1] & ~s & ~near, near))
            leaf_info[s] = info
        for private, near in info:
            if private & rest:
                continue
            if any(private & sets[j] and not sets[j] & near for j in placed_nbrs[i]):
                continue
            return False
        return True

    def place(i: int, free: int) -> bool:
        if i == k:
            return True
        targets = [reach[j] & free for j in placed_nbrs[i]]
        if not all(targets):
            return False
        region = free
        if targets:
            region = 0
            for c in _components(adj, free):
                if all(c & t for t in targets):
                    region |= c
        lo = roots[twin_prev[i]] + 1 if twin_prev[i] >= 0 else 0
        stop_when_hit = closing[i]
        need_out = later_nbrs[i]
        cand = region >> lo << lo
        if i == 0 and first_root >= 0:
            cand &= 1 << first_root
        while cand:
            low = cand & -cand
            r = low.bit_length() - 1
            cand ^= low
            allowed = region >> (r + 1) << (r + 1)
            roots[i] = r
            stack = [(low, adj[r] & allowed, 0, adj[r])]
            while stack:
                s, ext, excl, nb = stack.pop()
                hit = True
                for t in targets:
                    if not s & t:
                        hit = False
                        break
                if hit and stop_when_hit:
                    ext = 0
                if not ext:
                    if not hit:
                        continue
                    rest = free & ~s
                    if need_out and (nb & rest).bit_count() < need_out:
                        continue
                    if not every_vertex_needed(i, s, rest):
                        continue
                    sets[i] = s
                    reach[i] = nb & ~s
                    if feasible(i + 1, rest) and place(i + 1, rest):
                        return True
                    continue
                w = ext & -ext
                aw = adj[w.bit_length() - 1]
                stack.append((s | w, (ext | (aw & allowed)) & ~s & ~w & ~excl, excl, nb | aw))
                stack.append((s, ext & ~w, excl | w, nb))
        sets[i] = 0
        reach[i] = 0
        roots[i] = -1
        return False

    full = (1 << n) - 1
    if not feasible(0, full) or not place(0, full):
        return None
    out = [0] * k
    for i, v in enumerate(order):
        out[v] = sets[i]
    return out


def has_minor(g: Graph, h: Graph | Pattern) -> MinorModel | None:
    """Branch-set model of ``h`` in ``g``, or ``None`` when ``h`` is not a minor of ``g``."""
    if isinstance(h, Pattern):
        h = h.graph
    if h.n == 0 or not h.is_connected():
        raise UnsupportedPattern("patterns must be connected and nonempty")
    if h.n > g.n or h.m > g.m:
        return None
    if h.m == h.n * (h.n - 1) // 2 and h.n >= 4:
        return _clique_model(g, h)
    # host vertices by degree descending, index ascending
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    found = _search_model(relabel(g, _inverse(order)).adj, g.n, h)
    if found is None:
        return None
    return MinorModel(tuple(tuple(sorted(order[x] for x in bits(s))) for s in found))


def _inverse(order: Sequence[int]) -> list[int]:
    perm = [0] * len(order)
    for i, v in enumerate(order):
        perm[v] = i
    return perm


def _clique_model(g: Graph, h: Graph) -> MinorModel | None:
    """Complete patterns: all pattern vertices are twins, so the first branch
    set holds the least used host vertex.  If a model meets an automorphism
    orbit it can be moved onto any fixed vertex of that orbit, so each round
    searches models through one representative and then deletes the orbit."""
    alive = list(range(g.n))
    while len(alive) >= h.n:
        sub = induced_subgraph(g, alive)
        if sub.m < h.m:
            return None
        orbits = automorphism_orbits(sub)
        deg = sub.degrees()
        # a low-degree representative constrains the first set the most
        rep = min(range(sub.n), key=lambda v: (deg[v], v))
        order = [rep] + sorted((v for v in range(sub.n) if v != rep), key=lambda v: (-deg[v], v))
        found = _search_model(relabel(sub, _inverse(order)).adj, sub.n, h, first_root=0)
        if found is not None:
            return MinorModel(tuple(tuple(sorted(alive[order[x]] for x in bits(s))) for s in found))
        alive = [v for i, v in enumerate(alive) if orbits[i] != orbits[rep]]
    return None


def contains_minor(g: Graph, h: Graph | Pattern) -> bool:
    return has_minor(g, h) is not None


def has_minor_bruteforce(g: Graph, h: Graph | Pattern, max_host: int = 8) -> bool:
    """Independent oracle: search the deletion/contraction closure of ``g`` for ``h``."""
    if isinstance(h, Pattern):
        h = h.graph
    if g.n > max_host:
        raise ValueError(f"oracle limited to hosts with at most {max_host} vertices")
    target = canonical_form(h)
    if h.n > g.n or h.m > g.m:
        return False
    start = canonical_form(g)
    seen = {start}
    todo = [start]
    while todo:
        cf = todo.pop()
        if cf == target:
            return True
        x = cf.graph()
        children = [delete_edge(x, e) for e in x.edges()]
        if x.n > h.n:
            children += [delete_vertex(x, v) for v in range(x.n)]
            children += [contract_edge(x, e) for e in x.edges()]
        for y in children:
            if y.n < h.n or y.m < h.m:
                continue
            c = canonical_form(y)
            if c not in seen:
                seen.add(c)
                todo.append(c)
    return False


def has_subgraph(g: Graph, h: Graph) -> bool:
    """Is ``h`` isomorphic to a (not necessarily induced) subgraph of ``g``?"""
    if h.n > g.n or h.m > g.m:
        return False
    order = sorted(range(h.n), key=lambda v: -h.degree(v))
    image = [-1] * h.n

    def extend(i: int, used: int) -> bool:
        if i == h.n:
            return True
        v = order[i]
        for x in range(g.n):
            if used >> x & 1 or g.degree(x) < h.degree(v):
                continue
            if all(g.has_edge(x, image[u]) for u in bits(h.adj[v]) if image[u] >= 0):
                image[v] = x
                if extend(i + 1, used | 1 << x):
                    return True
                image[v] = -1
        return False

    return extend(0, 0)


# -- Hadwiger and free classes ----------------------------------------------


def hadwiger_number(g: Graph) -> int:
    """Order of the largest complete minor of ``g``."""
    if g.n == 0:
        return 0
    k = 1
    while k < g.n and (k + 1) * k // 2 <= g.m and has_minor(g, complete_graph(k + 1)) is not None:
        k += 1
    return k


def in_hadwiger_class(g: Graph, k: int) -> bool:
    """Membership in the class of graphs without a ``K_k`` minor."""
    if k < 2:
        raise ValueError("k must be at least 2")
    return has_minor(g, complete_graph(k)) is None


@dataclass(frozen=True)
class FreeVerdict:
    verdict: bool
    violating_pattern: Pattern | None = None
    model: MinorModel | None = None

    def __bool__(self) -> bool:
        return self.verdict


def free_hadwiger_patterns(k: int) -> list[Pattern]:
    """Forbidden minors of the graphs staying ``K_{k+1}``-minor-free after any edge addition."""
    return [K_minus(k + 1)] + [K_split(k + 1, p, k - p) for p in range(1, k // 2 + 1)]


FREE_PLANAR_PATTERNS = (K_minus(5), K33_minus())


def _first_violation(g: Graph, pats: Sequence[Pattern]) -> FreeVerdict:
    for p in pats:
        model = has_minor(g, p.graph)
        if model is not None:
            return FreeVerdict(False, p, model)
    return FreeVerdict(True)


def is_free_hadwiger(g: Graph, k: int) -> FreeVerdict:
    if k < 2:
        raise ValueError("k must be at least 2")
    return _first_violation(g, free_hadwiger_patterns(k))


def _closed_under_additions(g: Graph, excluded: Sequence[Graph]) -> bool:
    hosts = [g] + [add_edge(g, e) for e in g.non_edges()]
    return not any(has_minor(x, h) is not None for x in hosts for h in excluded)


def is_free_hadwiger_by_augmentation(g: Graph, k: int) -> bool:
    """``g`` and every ``g + uv`` are ``K_{k+1}``-minor-free."""
    if k < 2:
        raise ValueError("k must be at least 2")
    return _closed_under_additions(g, [complete_graph(k + 1)])


def is_free_planar(g: Graph) -> FreeVerdict:
    return _first_violation(g, FREE_PLANAR_PATTERNS)


def is_free_planar_by_augmentation(g: Graph) -> bool:
    """``g`` and every ``g + uv`` have neither a ``K5`` nor a ``K33`` minor."""
    return _closed_under_additions(g, [complete_graph(5), complete_bipartite(3, 3)])


# -- brackets ---------------------------------------------------------------


@dataclass(frozen=True)
class Bracket:
    lower: Pattern
    upper: Pattern

    def __str__(self) -> str:
        return f"{self.lower.name},{self.upper.name}"


CLIQUE_CHAIN = (W(4), K_minus(5), K(5))
BIPARTITE_CHAIN = (C6_plus(), K33_minus(), K33())
CHAINS = {"clique": CLIQUE_CHAIN, "bipartite": BIPARTITE_CHAIN}


@lru_cache(maxsize=64)
def _validate_chain(chain: tuple[Pattern, ...]) -> None:
    for a, b in zip(chain, chain[1:]):
        if has_minor(b.graph, a.graph) is None:
            raise ChainError(f"chain not ascending: {a.name} is not a minor of {b.name}")


def minor_bracket(g: Graph, chain: Sequence[Pattern]) -> Bracket:
    """Adjacent chain pair ``(a, b)`` with ``a`` a minor of ``g`` and ``b`` not."""
    chain = tuple(chain)
    if not chain:
        raise ChainError("empty chain")
    _validate_chain(chain)
    if has_minor(g, chain[0].graph) is None:
        raise ChainError(f"graph lies below the chain: {chain[0].name} is not a minor")
    if has_minor(g, chain[-1].graph) is not None:
        raise ChainError(f"graph lies above the chain: {chain[-1].name} is a minor")
    for a, b in zip(chain, chain[1:]):
        if has_minor(g, b.graph) is None:
            return Bracket(a, b)
    raise AssertionError("unreachable for a validated chain")


def bracket_or_none(g: Graph, chain: Sequence[Pattern]) -> Bracket | None:
    try:
        return minor_bracket(g, chain)
    except ChainError:
        return None


def calibrate_c6_plus() -> dict[int, dict[str, bool]]:
    """For each chord length, check the facts the bipartite chain must satisfy.

    ``in_chain``: C6+ is a minor of K33-; ``wheels``: C6+ is a minor of W5, W7, W9
    while K33- is not.
    """
    out = {}
    for chord in (3, 2):
        c6 = C6_plus(chord).graph
        wheels = all(
            has_minor(wheel_graph(i), c6) is not None
            and has_minor(wheel_graph(i), K33_minus().graph) is None
            for i in (5, 7, 9)
        )
        out[chord] = {"in_chain": has_minor(K33_minus().graph, c6) is not None, "wheels": wheels}
    return out


def pattern_graph6(p: Pattern) -> str:
    return to_graph6(p.graph)


__all__ = [
    "BIPARTITE_CHAIN",
    "Bracket",
    "C6_plus",
    "CHAINS",
    "CLIQUE_CHAIN",
    "ChainError",
    "FREE_PLANAR_PATTERNS",
    "FreeVerdict",
    "GraphError",
    "K",
    "K33",
    "K33_minus",
    "K_minus",
    "K_split",
    "MinorModel",
    "Pattern",
    "UnsupportedPattern",
    "W",
    "bracket_or_none",
    "calibrate_c6_plus",
    "contains_minor",
    "custom",
    "free_hadwiger_patterns",
    "has_minor",
    "has_minor_bruteforce",
    "has_subgraph",
    "hadwiger_number",
    "in_hadwiger_class",
    "is_free_hadwiger",
    "is_free_hadwiger_by_augmentation",
    "is_free_planar",
    "is_free_planar_by_augmentation",
    "library",
    "minor_bracket",
    "pattern",
]
