"""Shared test utilities: small-graph corpora and an independent cut check.

The removal-based oracle here deliberately avoids the colouring machinery
under test: it enumerates matchings edge by edge and checks disconnection
directly, so agreement with the package oracle is meaningful evidence.
"""

from __future__ import annotations

import itertools
import random

from matchcut import Graph, is_connected


def all_connected_graphs(n: int):
    """Every labelled connected graph on vertex set {0..n-1}."""
    if n == 1:
        yield Graph(1)
        return
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        if mask.bit_count() < n - 1:
            continue
        g = Graph(n, (pairs[i] for i in range(len(pairs)) if mask >> i & 1))
        if is_connected(g):
            yield g


def random_connected_graph(n: int, rng: random.Random, p: float | None = None) -> Graph:
    """Rejection-sample one connected G(n, p); p defaults to a random density."""
    while True:
        q = p if p is not None else rng.uniform(0.25, 0.75)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < q]
        g = Graph(n, edges)
        if is_connected(g):
            return g


def _disconnected_without(g: Graph, removed: frozenset) -> bool:
    seen = 1
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.neighbours(v):
            key = (v, w) if v < w else (w, v)
            if key in removed or seen >> w & 1:
                continue
            seen |= 1 << w
            stack.append(w)
    return seen != (1 << g.n) - 1


def has_cut_by_matching_removal(g: Graph) -> bool:
    """Ground truth by definition: some matching disconnects the graph.

    Enumerates matchings recursively (bounded by the Hosoya index, small
    for n <= 8) and BFS-checks connectivity of the leftover graph.
    """
    if g.n < 2 or not is_connected(g):
        return False
    edges = g.edges

    def rec(i: int, used: int, removed: tuple) -> bool:
        if i == len(edges):
            return bool(removed) and _disconnected_without(g, frozenset(removed))
        u, v = edges[i]
        if not (used >> u & 1 or used >> v & 1):
            if rec(i + 1, used | 1 << u | 1 << v, removed + (edges[i],)):
                return True
        return rec(i + 1, used, removed)

    return rec(0, 0, ())


def valid_blue_masks(g: Graph) -> list[int]:
    """Blue-side bitmasks of every valid colouring, ascending."""
    full = (1 << g.n) - 1
    out = []
    for blue in range(1, full):
        ok = True
        for v in range(g.n):
            own = blue if blue >> v & 1 else full ^ blue
            if (g.adj_bits[v] & ~own & full).bit_count() > 1:
                ok = False
                break
        if ok:
            out.append(blue)
    return out
