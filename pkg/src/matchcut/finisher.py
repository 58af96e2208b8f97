"""2-SAT finisher for propagation fixpoints.

Given a fixpoint (S, T, X, Y), decide whether a valid colouring exists
that colours X red, Y blue, and every residual component in a single
colour. One boolean per component (true = blue). A red vertex outside
the interface has its whole opposite-colour budget left, so components
tied to it by two or more edges are forced red and at most one incident
component may be blue; symmetrically for blue vertices outside the
interface. Interface vertices already spent their budget on their
partner, and at a fixpoint the residual cannot touch them at all.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .graphs import Graph, connected_components
from .propagation import FourTuple, check_fixpoint
from .redblue import Colouring, is_valid_colouring


@dataclass(frozen=True)
class TwoSatInstance:
    """CNF with two literals per clause; literal k is +-(variable index + 1).

    Unit constraints are stored as duplicated-literal clauses.
    """

    num_vars: int
    clauses: tuple[tuple[int, int], ...]


def _node(lit: int) -> int:
    v = abs(lit) - 1
    return 2 * v + (0 if lit > 0 else 1)


def solve_2sat(inst: TwoSatInstance) -> tuple[bool, ...] | None:
    """One satisfying assignment, or None. Deterministic for a fixed instance."""
    n_nodes = 2 * inst.num_vars
    succ = [[] for _ in range(n_nodes)]
    pred = [[] for _ in range(n_nodes)]
    for a, b in inst.clauses:
        for x, y in ((-a, b), (-b, a)):
            u, w = _node(x), _node(y)
            succ[u].append(w)
            pred[w].append(u)

    # Kosaraju: finish order on the implication graph, then components on
    # the transpose in reverse finish order, numbered in topological order.
    finished = []
    seen = [False] * n_nodes
    for start in range(n_nodes):
        if seen[start]:
            continue
        stack = [(start, 0)]
        seen[start] = True
        while stack:
            node, idx = stack.pop()
            if idx < len(succ[node]):
                stack.append((node, idx + 1))
                nxt = succ[node][idx]
                if not seen[nxt]:
                    seen[nxt] = True
                    stack.append((nxt, 0))
            else:
                finished.append(node)
    comp = [-1] * n_nodes
    label = 0
    for node in reversed(finished):
        if comp[node] != -1:
            continue
        comp[node] = label
        stack = [node]
        while stack:
            u = stack.pop()
            for w in pred[u]:
                if comp[w] == -1:
                    comp[w] = label
                    stack.append(w)
        label += 1

    values = []
    for v in range(inst.num_vars):
        if comp[2 * v] == comp[2 * v + 1]:
            return None
        values.append(comp[2 * v] > comp[2 * v + 1])
    return tuple(values)


def build_extension_instance(
    g: Graph, four: FourTuple
) -> tuple[TwoSatInstance, list[frozenset[int]]]:
    """Clauses over the residual components of g - (x u y).

    Returns the instance plus the component list (ordered by smallest
    member) that indexes its variables.
    """
    comps = connected_components(g, removed_vertices=four.x | four.y)
    comp_of = {}
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
    clauses: list[tuple[int, int]] = []
    for placed, sign in ((sorted(four.x - four.s), -1), (sorted(four.y - four.t), +1)):
        for v in placed:
            counts = Counter(comp_of[w] for w in g.adj[v] if w in comp_of)
            incident = sorted(counts)
            for f in incident:
                if counts[f] >= 2:
                    lit = sign * (f + 1)
                    clauses.append((lit, lit))
            for f, f2 in itertools.combinations(incident, 2):
                clauses.append((sign * (f + 1), sign * (f2 + 1)))
    return TwoSatInstance(len(comps), tuple(clauses)), comps


def decide_monochromatic_extension(g: Graph, four: FourTuple) -> Colouring | None:
    """A valid colouring extending the tuple with monochromatic residual
    components, or None when no such colouring exists.

    Raises ValueError if `four` is not a propagation fixpoint, and refuses
    to return an unverified witness.
    """
    check_fixpoint(g, four)
    inst, comps = build_extension_instance(g, four)
    model = solve_2sat(inst)
    if model is None:
        return None
    blue = set(four.y)
    for comp, is_blue in zip(comps, model):
        if is_blue:
            blue |= comp
    colouring = Colouring(g.n, frozenset(blue))
    if not is_valid_colouring(g, colouring):
        raise RuntimeError("finisher produced an invalid colouring; construction bug")
    return colouring
