"""Decision strategies and the dispatcher that orders them.

Each strategy is exact on its stated input class and answers
"inapplicable" outside it; none of them guesses. Every yes-answer is
returned with a verified colouring/cut certificate pair.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace

from .graphs import (
    Graph,
    NotConnectedError,
    connected_components,
    contains_induced,
    disjoint_union,
    distance_profile,
    find_induced,
    is_connected,
    is_dominating,
    find_dominating_set,
    path_graph,
    pattern_from_name,
)
from .finisher import decide_monochromatic_extension
from .oracle import has_matching_cut_bruteforce
from .propagation import make_pair, propagate
from .redblue import (
    Colouring,
    MatchingCut,
    colouring_from_cut,
    cut_from_colouring,
    is_matching_cut,
    is_valid_colouring,
)


class BranchBudgetError(RuntimeError):
    """The branching strategy exceeded its configured option budget."""


class StructureSearchError(RuntimeError):
    """A structure guaranteed to exist on this input class was not found."""


@dataclass(frozen=True)
class SolveConfig:
    oracle_bound: int = 22
    domination_bound: int = 4
    branch_budget: int = 2_000_000


@dataclass
class SolveOutcome:
    answer: str  # "yes" | "no" | "inapplicable"
    strategy: str
    cut: MatchingCut | None = None
    colouring: Colouring | None = None
    reason: str | None = None
    trace: dict[str, int] = field(default_factory=dict)


def _yes(g: Graph, colouring: Colouring, strategy: str, trace=None) -> SolveOutcome:
    cut = cut_from_colouring(g, colouring)  # validates the colouring
    assert is_matching_cut(g, cut.edges)
    return SolveOutcome("yes", strategy, cut=cut, colouring=colouring, trace=dict(trace or {}))


def _no(strategy: str, reason: str, trace=None) -> SolveOutcome:
    return SolveOutcome("no", strategy, reason=reason, trace=dict(trace or {}))


def _inapplicable(strategy: str, reason: str) -> SolveOutcome:
    return SolveOutcome("inapplicable", strategy, reason=reason)


def pendant_cut(g: Graph) -> Colouring | None:
    """Colouring that splits off the first degree-1 vertex, if any."""
    if g.n < 2:
        return None
    for v in range(g.n):
        if g.degree(v) == 1:
            return Colouring(g.n, frozenset([v]))
    return None


def small_matching_cut(g: Graph, k: int = 2) -> MatchingCut | None:
    """First matching cut with at most `k` (<= 2) edges, or None."""
    if not 1 <= k <= 2:
        raise ValueError("only cut sizes 1 and 2 are supported")
    for e in g.edges:
        if len(connected_components(g, removed_edges=[e])) > 1:
            return MatchingCut.from_edges([e])
    if k == 2:
        for e, f in itertools.combinations(g.edges, 2):
            if e[0] in f or e[1] in f:
                continue
            if len(connected_components(g, removed_edges=[e, f])) > 1:
                return MatchingCut.from_edges([e, f])
    return None


def solve_monochromatic_dominating(g: Graph, d) -> SolveOutcome:
    """Decide existence of a valid colouring keeping `d` in one colour.

    With `d` dominating and single-coloured (red, without loss of
    generality), every component of g - d is single-coloured too and
    exactly one of them can be flipped blue, so there are only O(n)
    candidates. A "no" here rules out monochromatic-d colourings only.
    """
    d = frozenset(d)
    if not is_dominating(g, d):
        raise ValueError("the given set does not dominate the graph")
    comps = connected_components(g, removed_vertices=d)
    for comp in comps:
        colouring = Colouring(g.n, comp)
        if is_valid_colouring(g, colouring):
            return _yes(g, colouring, "monochromatic-dominating", {"flips_tried": len(comps)})
    return _no(
        "monochromatic-dominating",
        "no single residual component can take the opposite colour",
        {"flips_tried": len(comps)},
    )


def _extend_dominating(g: Graph, d_list: list[int], idx: int, assign: dict[int, bool]):
    """Recursive option enumeration for solve_with_dominating_set.

    For the next dominated vertex: if it already sees an opposite colour,
    all its unassigned neighbours take its own colour; otherwise branch on
    recolouring nothing or exactly one unassigned neighbour. Yields every
    completed assignment.
    """
    if idx == len(d_list):
        yield assign
        return
    v = d_list[idx]
    mine = assign[v]
    opposite = 0
    unassigned = []
    for w in g.adj[v]:
        got = assign.get(w)
        if got is None:
            unassigned.append(w)
        elif got != mine:
            opposite += 1
    if opposite >= 2:
        return  # v is already spoiled; colours never change once set
    branches: list[int | None] = [None]
    if opposite == 0:
        branches.extend(unassigned)
    for flip in branches:
        child = dict(assign)
        for w in unassigned:
            child[w] = (not mine) if w == flip else mine
        yield from _extend_dominating(g, d_list, idx + 1, child)


def solve_with_dominating_set(g: Graph, d) -> SolveOutcome:
    """Exact decision given any dominating set `d` (exponential in |d|).

    Tries every red/blue colouring of `d`; each member then either keeps
    all neighbours on its own colour or recolours exactly one. Since `d`
    dominates, every such option colours the whole graph, and validity of
    the candidates is checked directly.
    """
    d_list = sorted(set(d))
    if not is_dominating(g, d_list):
        raise ValueError("the given set does not dominate the graph")
    options = 0
    for pattern in range(1 << len(d_list)):
        seed = {v: bool(pattern >> i & 1) for i, v in enumerate(d_list)}
        for assign in _extend_dominating(g, d_list, 0, seed):
            options += 1
            if len(assign) != g.n:
                continue  # isolated-from-d vertices cannot occur (d dominates)
            colouring = Colouring(g.n, frozenset(v for v, b in assign.items() if b))
            if is_valid_colouring(g, colouring):
                return _yes(g, colouring, "bounded-domination", {"options": options})
    return _no("bounded-domination", "no valid colouring over the dominating set", {"options": options})


def solve_radius_le2(g: Graph) -> SolveOutcome:
    """Exact decision for graphs of radius at most 2.

    Radius <= 1: a matching cut exists exactly when some vertex has degree
    one. Radius 2: pick a center u; its closed neighbourhood dominates.
    Either that neighbourhood is monochromatic (O(n) candidates) or, up to
    swapping colours, u is red with exactly one blue neighbour v, and
    propagation from ({u}, {v}) pins everything but components the 2-SAT
    finisher decides.
    """
    if not is_connected(g):
        raise NotConnectedError("graph not connected")
    profile = distance_profile(g)
    if profile.radius > 2:
        return _inapplicable("radius2", f"radius {profile.radius} exceeds 2")
    if profile.radius <= 1:
        colouring = pendant_cut(g)
        if colouring is not None:
            return _yes(g, colouring, "radius2", {"case": 1})
        return _no("radius2", "dominating vertex and minimum degree 2", {"case": 1})
    u = min(profile.center)
    hood = frozenset((u, *g.adj[u]))
    mono = solve_monochromatic_dominating(g, hood)
    if mono.answer == "yes":
        return replace(mono, strategy="radius2")
    pairs_tried = 0
    for v in g.adj[u]:
        pairs_tried += 1
        four = propagate(g, make_pair(g, {u}, {v}))
        if four is None:
            continue
        colouring = decide_monochromatic_extension(g, four)
        if colouring is not None:
            return _yes(g, colouring, "radius2", {"case": 2, "pairs_tried": pairs_tried})
    return _no("radius2", "every centered seed pair is refuted", {"case": 2, "pairs_tried": pairs_tried})


@dataclass(frozen=True)
class DominatingStructure:
    """Either an induced 6-cycle (vertices in cycle order) or a complete
    bipartite subgraph (not necessarily induced), dominating the graph."""

    kind: str  # "cycle6" | "biclique"
    cycle: tuple[int, ...] = ()
    part_a: frozenset[int] = frozenset()
    part_b: frozenset[int] = frozenset()


def _induced_c6_order(g: Graph, combo) -> tuple[int, ...] | None:
    inside = [w for w in combo]
    deg = {}
    edge_count = 0
    for v in inside:
        nb = [w for w in g.adj[v] if w in combo]
        if len(nb) != 2:
            return None
        deg[v] = nb
        edge_count += 2
    if edge_count != 12:
        return None
    start = inside[0]
    order = [start, min(deg[start])]
    while len(order) < 6:
        a, b = deg[order[-1]]
        order.append(a if a != order[-2] else b)
    return tuple(order) if g.has_edge(order[-1], start) and len(set(order)) == 6 else None


def _grow_biclique(g: Graph, u: int, v: int) -> tuple[set[int], set[int]]:
    a = {u}
    b = {v}
    changed = True
    while changed:
        changed = False
        for w in range(g.n):
            if w in a or w in b:
                continue
            if all(g.has_edge(w, x) for x in b):
                a.add(w)
                changed = True
            elif all(g.has_edge(w, x) for x in a):
                b.add(w)
                changed = True
    return a, b


def find_dominating_structure_p6free(g: Graph, exhaustive_cap: int = 10) -> DominatingStructure:
    """Dominating induced C6 or dominating complete bipartite subgraph.

    Search order: induced 6-cycles over ascending 6-subsets, then greedy
    biclique growth from every ordered edge, then per-vertex stars, then
    an exhaustive sweep over part pairs up to `exhaustive_cap` total
    vertices. On P6-free connected input one of these must exist;
    exhausting the search anyway raises StructureSearchError.
    """
    if not is_connected(g):
        raise NotConnectedError("graph not connected")
    if contains_induced(g, path_graph(6)):
        raise ValueError("graph contains an induced six-vertex path")
    for combo in itertools.combinations(range(g.n), 6):
        if not is_dominating(g, combo):
            continue
        order = _induced_c6_order(g, frozenset(combo))
        if order is not None:
            return DominatingStructure("cycle6", cycle=order)
    seen: set[tuple] = set()
    for u, v in g.edges:
        for s, t in ((u, v), (v, u)):
            a, b = _grow_biclique(g, s, t)
            key = (frozenset(a), frozenset(b))
            if key in seen:
                continue
            seen.add(key)
            if is_dominating(g, a | b):
                return DominatingStructure("biclique", part_a=frozenset(a), part_b=frozenset(b))
    for u in range(g.n):
        if g.degree(u) >= 1 and is_dominating(g, {u, *g.adj[u]}):
            return DominatingStructure(
                "biclique", part_a=frozenset([u]), part_b=frozenset(g.adj[u])
            )
    cap = min(g.n, exhaustive_cap)
    for total in range(2, cap + 1):
        for support in itertools.combinations(range(g.n), total):
            if not is_dominating(g, support):
                continue
            for a_size in range(1, total):
                for part_a in itertools.combinations(support, a_size):
                    part_b = tuple(w for w in support if w not in part_a)
                    if all(g.has_edge(x, y) for x in part_a for y in part_b):
                        return DominatingStructure(
                            "biclique", part_a=frozenset(part_a), part_b=frozenset(part_b)
                        )
    raise StructureSearchError(
        "no dominating structure found; the P6-free guarantee is violated"
    )


def solve_p6_free(g: Graph) -> SolveOutcome:
    """Exact decision for graphs with no induced six-vertex path.

    Such graphs carry a dominating induced C6 or a dominating complete
    bipartite subgraph K_{r,s}, r <= s. C6: six dominating vertices, solve
    over them. r >= 2 and s >= 3: both sides of the biclique are forced
    monochromatic (any bichromatic seed edge inside it is refuted by
    propagation), so the monochromatic-dominating routine is exact. r = 1:
    the star makes the radius at most 2. Remaining case r = s = 2: four
    dominating vertices.
    """
    if not is_connected(g):
        raise NotConnectedError("graph not connected")
    if contains_induced(g, path_graph(6)):
        return _inapplicable("p6free", "graph contains an induced six-vertex path")
    structure = find_dominating_structure_p6free(g)
    if structure.kind == "cycle6":
        out = solve_with_dominating_set(g, structure.cycle)
        out.trace["structure"] = 6
    else:
        r = min(len(structure.part_a), len(structure.part_b))
        s = max(len(structure.part_a), len(structure.part_b))
        both = structure.part_a | structure.part_b
        if r >= 2 and s >= 3:
            out = solve_monochromatic_dominating(g, both)
        elif r == 1:
            out = solve_radius_le2(g)
            assert out.answer != "inapplicable"  # a dominating star forces radius <= 2
        else:  # r = s = 2
            out = solve_with_dominating_set(g, both)
        out.trace["structure"] = len(both)
    return replace(out, strategy="p6free")


def _region_options(g: Graph, order: list[int], idx: int, assign: dict[int, bool]):
    """Option enumeration around an induced pattern copy, as in
    _extend_dominating but over the copy's vertices only."""
    if idx == len(order):
        yield assign
        return
    v = order[idx]
    mine = assign[v]
    opposite = 0
    unassigned = []
    for w in g.adj[v]:
        got = assign.get(w)
        if got is None:
            unassigned.append(w)
        elif got != mine:
            opposite += 1
    if opposite >= 2:
        return
    branches: list[int | None] = [None]
    if opposite == 0:
        branches.extend(unassigned)
    for flip in branches:
        child = dict(assign)
        for w in unassigned:
            child[w] = (not mine) if w == flip else mine
        yield from _region_options(g, order, idx + 1, child)


def _locally_valid(g: Graph, assign: dict[int, bool]) -> bool:
    for v, mine in assign.items():
        opposite = sum(1 for w in g.adj[v] if assign.get(w) == (not mine))
        if opposite > 1:
            return False
    return True


def lift_h_plus_p3(
    g: Graph,
    h: Graph,
    subsolver,
    config: SolveConfig | None = None,
    strategy: str = "lift",
) -> SolveOutcome:
    """Exact decision for (h + P3)-free graphs, given a subsolver exact on
    h-free graphs.

    Cuts of size <= 2 are searched outright, so past that point the graph
    has minimum degree >= 2 and no small cut; together with
    (h + P3)-freeness this makes every residual component of a propagation
    fixpoint around an induced copy of h monochromatic. Branch on one
    bichromatic edge, all colourings of the copy, and at most one
    opposite-coloured neighbour per copy vertex; each branch seeds a
    generalized starting pair and ends in the 2-SAT finisher.
    """
    config = config or SolveConfig()
    if not is_connected(g):
        raise NotConnectedError("graph not connected")
    if contains_induced(g, disjoint_union(h, path_graph(3))):
        return _inapplicable(strategy, "graph is not (h + P3)-free")
    cut = small_matching_cut(g, 2)
    if cut is not None:
        return _yes(g, colouring_from_cut(g, cut), strategy, {"small_cut": len(cut)})
    witness = find_induced(g, h)
    if witness is None:
        out = subsolver(g)
        out.trace["delegated"] = 1
        return replace(out, strategy=f"{strategy}>{out.strategy}")
    copy = sorted(set(witness))
    trace = {"edges_tried": 0, "copy_colourings": 0, "options": 0, "seeds_propagated": 0}
    for u, v in g.edges:
        trace["edges_tried"] += 1
        base = {u: False, v: True}  # u red, v blue; swaps are covered below
        for pattern in range(1 << len(copy)):
            assign = dict(base)
            conflict = False
            for i, w in enumerate(copy):
                want = bool(pattern >> i & 1)
                if assign.get(w, want) != want:
                    conflict = True
                    break
                assign[w] = want
            if conflict:
                continue
            trace["copy_colourings"] += 1
            for region in _region_options(g, copy, 0, assign):
                trace["options"] += 1
                if trace["options"] > config.branch_budget:
                    raise BranchBudgetError(
                        f"more than {config.branch_budget} branch options"
                    )
                if not _locally_valid(g, region):
                    continue
                s_prime = {w for w, b in region.items() if not b}
                t_prime = {w for w, b in region.items() if b}
                pair = make_pair(g, s_prime, t_prime)
                trace["seeds_propagated"] += 1
                four = propagate(g, pair)
                if four is None:
                    continue
                colouring = decide_monochromatic_extension(g, four)
                if colouring is not None:
                    return _yes(g, colouring, strategy, trace)
    return _no(strategy, "every seed around the pattern copy is refuted", trace)


def solve_sp3_p6(g: Graph, s: int, config: SolveConfig | None = None) -> SolveOutcome:
    """Exact decision for (sP3 + P6)-free graphs, by peeling one P3 at a
    time down to the P6-free base case."""
    if s < 0:
        raise ValueError("s must be non-negative")
    config = config or SolveConfig()
    if s == 0:
        return solve_p6_free(g)
    h = pattern_from_name("P6") if s == 1 else pattern_from_name(f"{s - 1}P3+P6")
    return lift_h_plus_p3(
        g,
        h,
        lambda sub: solve_sp3_p6(sub, s - 1, config),
        config,
        strategy=f"sp3p6(s={s})",
    )


def run_strategy(g: Graph, name: str, config: SolveConfig | None = None) -> SolveOutcome:
    """Run one named strategy on its own, without dispatcher fallbacks.

    The certificate-only scans (degree1, smallcut) report inapplicable
    rather than "no" when they find nothing, since absence of their
    certificate does not settle the decision problem.
    """
    config = config or SolveConfig()
    if not is_connected(g):
        raise NotConnectedError("graph not connected")
    if name == "degree1":
        colouring = pendant_cut(g)
        if colouring is None:
            return _inapplicable("degree1", "no degree-1 vertex")
        return _yes(g, colouring, "degree1")
    if name == "smallcut":
        cut = small_matching_cut(g, 2)
        if cut is None:
            return _inapplicable("smallcut", "no matching cut of size at most 2")
        return _yes(g, colouring_from_cut(g, cut), "smallcut")
    if name == "radius2":
        return solve_radius_le2(g)
    if name == "p6free":
        return solve_p6_free(g)
    if name == "sp3p6":
        return solve_sp3_p6(g, 1, config)
    if name == "domination":
        dom = find_dominating_set(g, config.domination_bound)
        if dom is None:
            return _inapplicable(
                "domination",
                f"no dominating set of size at most {config.domination_bound}",
            )
        return solve_with_dominating_set(g, dom)
    if name == "oracle":
        cut = has_matching_cut_bruteforce(g, config.oracle_bound)
        if cut is None:
            return _no("oracle", "exhaustive bipartition search")
        return _yes(g, colouring_from_cut(g, cut), "oracle")
    raise ValueError(f"unknown strategy {name!r}")


def solve(g: Graph, config: SolveConfig | None = None) -> SolveOutcome:
    """Dispatcher: cheap certificates first, then every structural strategy
    in precondition order, then the bounded oracle, else inapplicable."""
    config = config or SolveConfig()
    if g.n == 0:
        raise NotConnectedError("graph is empty")
    if not is_connected(g):
        raise NotConnectedError("graph not connected")
    stages = 0

    stages += 1
    colouring = pendant_cut(g)
    if colouring is not None:
        return _yes(g, colouring, "degree1", {"stages": stages})

    stages += 1
    cut = small_matching_cut(g, 2)
    if cut is not None:
        out = _yes(g, colouring_from_cut(g, cut), "smallcut", {"stages": stages})
        return out

    stages += 1
    out = solve_radius_le2(g)
    if out.answer != "inapplicable":
        out.trace["stages"] = stages
        return out

    stages += 1
    out = solve_p6_free(g)
    if out.answer != "inapplicable":
        out.trace["stages"] = stages
        return out

    stages += 1
    out = solve_sp3_p6(g, 1, config)
    if out.answer != "inapplicable":
        out.trace["stages"] = stages
        return out

    stages += 1
    dom = find_dominating_set(g, config.domination_bound)
    if dom is not None:
        out = solve_with_dominating_set(g, dom)
        out.trace["stages"] = stages
        return out

    stages += 1
    if g.n <= config.oracle_bound:
        cut = has_matching_cut_bruteforce(g, config.oracle_bound)
        if cut is None:
            return _no("oracle", "exhaustive bipartition search", {"stages": stages})
        return _yes(g, colouring_from_cut(g, cut), "oracle", {"stages": stages})

    return _inapplicable("dispatch", "no exact strategy applies at this size")
