"""Small simple graphs as bitmask rows, edit operations, canonical forms and graph6 I/O.

A :class:`Graph` stores one integer per vertex; bit ``u`` of ``adj[v]`` is set
when ``u`` and ``v`` are adjacent.  Graphs are immutable values: every edit
returns a new graph with vertices relabelled compactly to ``0..n-1``.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    """An operation was called on a graph that does not satisfy its precondition."""


class GraphFormatError(ValueError):
    """Malformed graph6 input; ``offset`` is the index of the offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _drop_bit(mask: int, v: int) -> int:
    """Remove bit position ``v`` and shift the higher bits down by one."""
    return (mask & ((1 << v) - 1)) | ((mask >> (v + 1)) << v)


class Graph(NamedTuple):
    """Simple undirected graph on vertices ``0..n-1``."""

    n: int
    adj: tuple[int, ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if not 0 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    def is_valid(self) -> bool:
        if not 0 <= self.n <= MAX_VERTICES or len(self.adj) != self.n:
            return False
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full or row >> v & 1:
                return False
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    return False
        return True

    # -- queries ---------------------------------------------------------

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, row in enumerate(self.adj):
            for v in bits(row >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def non_edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if not self.adj[u] >> v & 1:
                    out.append((u, v))
        return out

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def min_degree(self) -> int:
        return min((row.bit_count() for row in self.adj), default=0)

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    def component_masks(self, within: int | None = None) -> list[int]:
        """Connected components of the subgraph induced on ``within`` (default: all)."""
        todo = (1 << self.n) - 1 if within is None else within
        comps = []
        while todo:
            seen = frontier = todo & -todo
            while frontier:
                reach = 0
                for v in bits(frontier):
                    reach |= self.adj[v]
                frontier = reach & todo & ~seen
                seen |= frontier
            comps.append(seen)
            todo &= ~seen
        return comps

    def is_connected(self) -> bool:
        return len(self.component_masks()) <= 1

    def is_bipartite(self) -> bool:
        side = [-1] * self.n
        for start in range(self.n):
            if side[start] >= 0:
                continue
            side[start] = 0
            stack = [start]
            while stack:
                v = stack.pop()
                for u in bits(self.adj[v]):
                    if side[u] < 0:
                        side[u] = 1 - side[v]
                        stack.append(u)
                    elif side[u] == side[v]:
                        return False
        return True

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, g6={to_graph6(self)!r})"


def complete_graph(k: int) -> Graph:
    full = (1 << k) - 1
    return Graph(k, tuple(full & ~(1 << v) for v in range(k)))


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Graph:
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def wheel_graph(i: int) -> Graph:
    """Rim cycle on ``0..i-1`` and hub ``i``."""
    if i < 3:
        raise GraphError("a wheel needs a rim of at least 3 vertices")
    rim = [(j, (j + 1) % i) for j in range(i)]
    return Graph.from_edges(i + 1, rim + [(j, i) for j in range(i)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


# -- edits ------------------------------------------------------------------


def _require_edge(g: Graph, e: tuple[int, int]) -> tuple[int, int]:
    u, v = e
    if u == v or not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    return (u, v) if u < v else (v, u)


def _require_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")


def _delete_vertex_rows(rows: Sequence[int], v: int) -> tuple[int, ...]:
    return tuple(_drop_bit(row, v) for i, row in enumerate(rows) if i != v)


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    u, v = _require_edge(g, e)
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def add_edge(g: Graph, e: tuple[int, int]) -> Graph:
    u, v = e
    _require_vertex(g, u)
    _require_vertex(g, v)
    if u == v or g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) cannot be added")
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    _require_vertex(g, v)
    return Graph(g.n - 1, _delete_vertex_rows(g.adj, v))


def delete_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    """Delete a vertex set; survivors keep their relative order."""
    doomed = to_mask(vertices)
    keep = [v for v in range(g.n) if not doomed >> v & 1]
    return induced_subgraph(g, keep)


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced on ``vertices``; vertex ``vertices[i]`` becomes ``i``."""
    pos = {v: i for i, v in enumerate(vertices)}
    rows = []
    for v in vertices:
        row = 0
        for u in bits(g.adj[v]):
            if u in pos:
                row |= 1 << pos[u]
        rows.append(row)
    return Graph(len(vertices), tuple(rows))


def contract_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Merge the ends of ``e`` into the lower-numbered slot; higher labels shift down."""
    u, v = _require_edge(g, e)
    merged = (g.adj[u] | g.adj[v]) & ~(1 << u | 1 << v)
    rows = list(g.adj)
    rows[u] = merged
    for w in bits(merged):
        rows[w] = (rows[w] & ~(1 << v)) | (1 << u)
    out = Graph(g.n - 1, _delete_vertex_rows(rows, v))
    assert out.is_valid()
    return out


def split_vertex(g: Graph, v: int, part1: Iterable[int], part2: Iterable[int]) -> Graph:
    """Replace ``v`` by nonadjacent ``v`` (neighbours ``part1``) and ``n`` (``part2``)."""
    _require_vertex(g, v)
    if g.n + 1 > MAX_VERTICES:
        raise GraphError("vertex limit reached")
    p1, p2 = to_mask(part1), to_mask(part2)
    if not p1 or not p2:
        raise GraphError("both parts of a split must be nonempty")
    if p1 & p2 or p1 | p2 != g.adj[v]:
        raise GraphError(f"parts do not partition the neighbourhood of {v}")
    new = g.n
    rows = list(g.adj)
    for w in bits(p2):
        rows[w] = (rows[w] & ~(1 << v)) | (1 << new)
    rows[v] = p1
    rows.append(p2)
    out = Graph(g.n + 1, tuple(rows))
    assert out.is_valid()
    return out


def subdivide_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Replace edge ``uv`` by the path ``u - w - v`` with ``w = n``."""
    u, v = _require_edge(g, e)
    new = g.n
    rows = list(g.adj)
    rows[u] = (rows[u] & ~(1 << v)) | (1 << new)
    rows[v] = (rows[v] & ~(1 << u)) | (1 << new)
    rows.append(1 << u | 1 << v)
    return Graph(g.n + 1, tuple(rows))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    rows = [0] * g.n
    for v, row in enumerate(g.adj):
        r = 0
        for u in bits(row):
            r |= 1 << perm[u]
        rows[perm[v]] = r
    return Graph(g.n, tuple(rows))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return Graph(g.n + h.n, g.adj + tuple(row << g.n for row in h.adj))


# -- canonical labelling ----------------------------------------------------


class CanonicalForm(NamedTuple):
    """Adjacency rows of the canonically relabelled graph (maximal over all labellings)."""

    n: int
    rows: tuple[int, ...]

    def graph(self) -> Graph:
        return Graph(self.n, self.rows)

    @property
    def graph6(self) -> str:
        return to_graph6(self.graph())


def _refine(adj: Sequence[int], cells: list[list[int]], splitters: list[int]) -> list[list[int]]:
    n = len(adj)
    i = 0
    while i < len(splitters) and len(cells) < n:
        w = splitters[i]
        i += 1
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            counts = [(adj[v] & w).bit_count() for v in cell]
            c0 = counts[0]
            if all(c == c0 for c in counts):
                out.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v, c in zip(cell, counts):
                groups.setdefault(c, []).append(v)
            for c in sorted(groups):
                part = groups[c]
                out.append(part)
                mask = 0
                for v in part:
                    mask |= 1 << v
                splitters.append(mask)
        cells = out
    return cells


def _orbit_roots(n: int, gens: list[list[int]]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x, y in enumerate(g):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    return [find(x) for x in range(n)]


def _canon_search(g: Graph) -> tuple[list[int], tuple[int, ...], list[list[int]]]:
    """Individualisation-refinement search over equitable partitions.

    Returns the labelling with the lexicographically largest relabelled
    adjacency, that adjacency, and the automorphisms met on the way (found
    between leaves with equal certificates and used to prune equivalent
    branches).
    """
    n, adj = g.n, g.adj
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(adj[v].bit_count(), []).append(v)
    cells = [by_degree[d] for d in sorted(by_degree)]
    cells = _refine(adj, cells, [to_mask(c) for c in cells])

    first: list = [None, None, None]  # labelling, certificate, path
    best: list = [None, None, None]
    gens: list[list[int]] = []

    def leaf(cells: list[list[int]], path: list[int]) -> int | None:
        lab = [c[0] for c in cells]
        pos = [0] * n
        for i, v in enumerate(lab):
            pos[v] = i
        cert = []
        for v in lab:
            row = adj[v]
            r = 0
            while row:
                low = row & -row
                r |= 1 << pos[low.bit_length() - 1]
                row ^= low
            cert.append(r)
        cert = tuple(cert)
        if first[0] is None:
            first[:] = [lab, cert, path]
            best[:] = [lab, cert, path]
            return None
        for ref in (first, best):
            if cert == ref[1]:
                gamma = [0] * n
                for a, b in zip(ref[0], lab):
                    gamma[a] = b
                gens.append(gamma)
                common = 0
                for a, b in zip(ref[2], path):
                    if a != b:
                        break
                    common += 1
                return common
        if cert > best[1]:
            best[:] = [lab, cert, path]
        return None

    def search(cells: list[list[int]], path: list[int]) -> int | None:
        if len(cells) == n:
            return leaf(cells, path)
        idx = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: len(cells[i]))
        cell = cells[idx]
        depth = len(path)
        explored: list[int] = []
        for v in cell:
            if explored:
                fixing = [gm for gm in gens if all(gm[p] == p for p in path)]
                if fixing:
                    roots = _orbit_roots(n, fixing)
                    if any(roots[v] == roots[u] for u in explored):
                        continue
            rest = [u for u in cell if u != v]
            child = cells[:idx] + [[v], rest] + cells[idx + 1:]
            child = _refine(adj, child, [1 << v])
            back = search(child, path + [v])
            explored.append(v)
            if back is not None and back < depth:
                return back
        return None

    search(cells, [])
    return best[0], best[1], gens


def canonical_labeling(g: Graph) -> tuple[list[int], CanonicalForm]:
    """Return ``(perm, form)`` where ``relabel(g, perm)`` equals ``form.graph()``."""
    if g.n == 0:
        return [], CanonicalForm(0, ())
    lab, cert, _ = _canon_search(g)
    perm = [0] * g.n
    for i, v in enumerate(lab):
        perm[v] = i
    return perm, CanonicalForm(g.n, cert)


def automorphism_orbits(g: Graph) -> list[int]:
    """Orbit representative (least vertex) for every vertex, under the
    automorphisms found by the canonical labelling search."""
    if g.n == 0:
        return []
    return _orbit_roots(g.n, _canon_search(g)[2])


def canonical_form(g: Graph) -> CanonicalForm:
    return canonical_labeling(g)[1]


def canonical_graph(g: Graph) -> Graph:
    return canonical_labeling(g)[1].graph()


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


# -- graph6 / DOT -----------------------------------------------------------


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    out = []
    acc = nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return head + "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.rstrip("\r\n")
    if s.startswith(">>graph6<<"):
        s = s[10:]
        base = 10
    else:
        base = 0
    if not s:
        raise GraphFormatError("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"byte {ch!r} outside graph6 range 63..126", base + i)
    if s[0] != "~":
        n, start = ord(s[0]) - 63, 1
    else:
        if len(s) < 4:
            raise GraphFormatError("truncated long header", base + len(s))
        if s[1] == "~":
            raise GraphFormatError("8-byte headers exceed the vertex limit", base + 1)
        n = ((ord(s[1]) - 63) << 12) | ((ord(s[2]) - 63) << 6) | (ord(s[3]) - 63)
        start = 4
        if n <= 62:
            raise GraphFormatError(f"long header used for n={n}", base)
    if n > MAX_VERTICES:
        raise GraphFormatError(f"n={n} exceeds the vertex limit {MAX_VERTICES}", base)
    need = (n * (n - 1) // 2 + 5) // 6
    payload = s[start:]
    if len(payload) < need:
        raise GraphFormatError(f"payload truncated: {len(payload)} of {need} bytes", base + len(s))
    if len(payload) > need:
        raise GraphFormatError("trailing bytes after payload", base + start + need)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(payload[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    total = n * (n - 1) // 2
    if total % 6 and (ord(payload[-1]) - 63) & ((1 << (6 - total % 6)) - 1):
        raise GraphFormatError("nonzero padding bits", base + start + need - 1)
    return Graph(n, tuple(rows))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse a newline-delimited graph6 corpus, skipping blank and ``#`` lines."""
    for line in lines:
        line = line.strip()
        if line and not line.startswith("#"):
            yield parse_graph6(line)


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
