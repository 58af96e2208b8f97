"""Immutable simple graphs and the structural toolkit built on them.

Vertices are dense integers 0..n-1. Adjacency is kept twice: as sorted
tuples for iteration and as bitmasks for the enumeration-heavy callers
(the oracle and the propagation engine). Everything here is pure; Graph
values are immutable and hashable.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass


class GraphFormatError(ValueError):
    """Malformed graph input: self-loops, bad tokens, unusable vertex ids."""


class NotConnectedError(ValueError):
    """The operation is only defined on connected graphs."""


def mask_of(vertices) -> int:
    """Bitmask with one bit per vertex in `vertices`."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int):
    """Yield the set bits of `mask` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A simple undirected graph on vertices 0..n-1.

    Instances are value-like: immutable after construction, hashable, and
    equal exactly when vertex count and edge set agree. `adj[v]` is the
    sorted neighbour tuple of v, `adj_bits[v]` the same set as a bitmask,
    and `edges` the lexicographically sorted (u, v) pairs with u < v.
    """

    __slots__ = ("n", "m", "adj", "adj_bits", "edges")

    def __init__(self, n: int, edges=()) -> None:
        if n < 0:
            raise GraphFormatError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.adj = tuple(tuple(sorted(s)) for s in nbrs)
        self.adj_bits = tuple(mask_of(s) for s in nbrs)
        self.edges = tuple((u, v) for u in range(n) for v in self.adj[u] if u < v)
        self.n = n
        self.m = len(self.edges)

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj_bits[u] >> v & 1)

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(pairs) -> tuple[Graph, tuple[int, ...]]:
    """Build a Graph from (u, v) pairs, collapsing duplicate edges.

    Vertex ids may be arbitrary non-negative integers; they are remapped to
    0..n-1 in ascending order of the original ids. Returns (graph, labels)
    where labels[i] is the original id of internal vertex i; the mapping is
    the identity whenever the input ids are already 0..n-1.
    """
    pairs = [(int(u), int(v)) for u, v in pairs]
    for u, v in pairs:
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}")
        if u < 0 or v < 0:
            raise GraphFormatError("negative vertex id")
    ids = sorted({x for e in pairs for x in e})
    index = {orig: i for i, orig in enumerate(ids)}
    g = Graph(len(ids), [(index[u], index[v]) for u, v in pairs])
    return g, tuple(ids)


def parse_edge_text(text: str) -> tuple[Graph, tuple[int, ...]]:
    """Parse the whitespace edge-list format: one `u v` pair per line.

    Blank lines and lines starting with `#` are ignored. Errors carry the
    offending line number.
    """
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two vertex ids, got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex id in {raw!r}") from None
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex id")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        pairs.append((u, v))
    if not pairs:
        raise GraphFormatError("no edges found")
    return from_edge_list(pairs)


def load_edge_file(path) -> tuple[Graph, tuple[int, ...]]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_text(fh.read())


def format_edge_text(g: Graph, labels=None) -> str:
    """Render a graph in the edge-list format, using `labels` if given."""
    if labels is None:
        labels = tuple(range(g.n))
    lines = [f"{labels[u]} {labels[v]}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Distances from `source`; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


@dataclass(frozen=True)
class DistanceProfile:
    """Per-vertex eccentricities plus the derived radius/diameter/center."""

    eccentricity: tuple[int, ...]
    radius: int
    diameter: int
    center: frozenset[int]


def distance_profile(g: Graph) -> DistanceProfile:
    """All-pairs BFS metrics. Raises NotConnectedError on disconnected input."""
    if g.n == 0:
        raise NotConnectedError("graph is empty")
    ecc = []
    for v in range(g.n):
        dist = bfs_distances(g, v)
        if min(dist) < 0:
            raise NotConnectedError("graph not connected")
        ecc.append(max(dist))
    radius = min(ecc)
    return DistanceProfile(
        eccentricity=tuple(ecc),
        radius=radius,
        diameter=max(ecc),
        center=frozenset(v for v in range(g.n) if ecc[v] == radius),
    )


def connected_components(g: Graph, removed_vertices=(), removed_edges=()) -> list[frozenset[int]]:
    """Components of g after deleting vertices/edges, ordered by smallest member.

    `removed_edges` takes unordered pairs; orientation does not matter.
    """
    gone = set(removed_vertices)
    cut = {(u, v) if u < v else (v, u) for u, v in removed_edges}
    seen = set(gone)
    comps = []
    for start in range(g.n):
        if start in seen:
            continue
        comp = {start}
        seen.add(start)
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w in seen:
                    continue
                if cut and ((u, w) if u < w else (w, u)) in cut:
                    continue
                seen.add(w)
                comp.add(w)
                queue.append(w)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return min(bfs_distances(g, 0)) >= 0


def is_dominating(g: Graph, d) -> bool:
    """True when every vertex outside `d` has a neighbour in `d`."""
    dm = mask_of(d)
    for v in range(g.n):
        if not (dm >> v & 1) and not (g.adj_bits[v] & dm):
            return False
    return True


def find_dominating_set(g: Graph, max_size: int) -> frozenset[int] | None:
    """Smallest dominating set of size <= max_size, or None.

    Exhaustive search; ties broken lexicographically (first combination in
    ascending order wins).
    """
    if max_size < 1:
        raise ValueError("max_size must be at least 1")
    for size in range(1, min(max_size, g.n) + 1):
        for combo in itertools.combinations(range(g.n), size):
            if is_dominating(g, combo):
                return frozenset(combo)
    return None


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None for acyclic graphs."""
    best = None
    for src in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    # Non-tree edge: closes a cycle through the BFS tree.
                    cand = dist[u] + dist[w] + 1
                    if best is None or cand < best:
                        best = cand
    return best


def find_induced(host: Graph, pattern: Graph) -> tuple[int, ...] | None:
    """First induced embedding of `pattern` in `host`, or None.

    The result maps pattern vertex i to result[i]. Pattern vertices are
    assigned in id order with host candidates scanned ascending, so the
    returned image tuple is the lexicographically first feasible one.
    """
    k = pattern.n
    if k == 0:
        return ()
    if k > host.n:
        return None
    edge_anchors = [[j for j in range(i) if pattern.has_edge(i, j)] for i in range(k)]
    image = [-1] * k
    used = [False] * host.n

    def extend(i: int) -> bool:
        if i == k:
            return True
        anchors = edge_anchors[i]
        candidates = host.adj[image[anchors[0]]] if anchors else range(host.n)
        need = pattern.adj_bits[i]
        for w in candidates:
            if used[w]:
                continue
            ok = True
            wbits = host.adj_bits[w]
            for j in range(i):
                if bool(wbits >> image[j] & 1) != bool(need >> j & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[i] = w
            used[w] = True
            if extend(i + 1):
                return True
            used[w] = False
        image[i] = -1
        return False

    return tuple(image) if extend(0) else None


def contains_induced(host: Graph, pattern: Graph) -> bool:
    return find_induced(host, pattern) is not None


# --- pattern catalog -------------------------------------------------------


def path_graph(r: int) -> Graph:
    if r < 1:
        raise ValueError("paths need at least one vertex")
    return Graph(r, [(i, i + 1) for i in range(r - 1)])


def cycle_graph(s: int) -> Graph:
    if s < 3:
        raise ValueError("cycles need at least three vertices")
    return Graph(s, [(i, (i + 1) % s) for i in range(s)])


def complete_graph(k: int) -> Graph:
    if k < 1:
        raise ValueError("complete graphs need at least one vertex")
    return Graph(k, itertools.combinations(range(k), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("both parts must be non-empty")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = [(u + g.n, v + g.n) for u, v in h.edges]
    return Graph(g.n + h.n, list(g.edges) + shifted)


def pattern_from_name(name: str) -> Graph:
    """Parse catalog names such as P6, C5, K4, K2,3 or unions like 2P3+P6.

    A leading multiplier repeats a term; `+` joins terms disjointly.
    """
    cleaned = name.replace(" ", "")
    if not cleaned:
        raise ValueError("empty pattern name")
    parts: list[Graph] = []
    for term in cleaned.split("+"):
        i = 0
        while i < len(term) and term[i].isdigit():
            i += 1
        count = int(term[:i]) if i else 1
        body = term[i:].upper()
        if count < 1 or not body:
            raise ValueError(f"bad pattern term {term!r}")
        kind, size = body[0], body[1:]
        try:
            if kind == "P":
                piece = path_graph(int(size))
            elif kind == "C":
                piece = cycle_graph(int(size))
            elif kind == "K" and "," in size:
                a, b = size.split(",")
                piece = complete_bipartite(int(a), int(b))
            elif kind == "K":
                piece = complete_graph(int(size))
            else:
                raise ValueError
        except ValueError:
            raise ValueError(f"unknown pattern term {term!r}") from None
        parts.extend([piece] * count)
    out = parts[0]
    for piece in parts[1:]:
        out = disjoint_union(out, piece)
    return out
