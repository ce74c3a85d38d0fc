"""Partial solutions as explicit edge sets, and the DP steps over them.

This is the literal form of the dynamic programming: every representative is a
concrete set of edges of the current labeled graph, and every step enumerates
actual edges.  It is exact but slow, and serves as the reference for the
count-based engine in :mod:`cwham.solver.engine` as well as for the
reduce-free exhaustive run.  Both undirected and directed graphs are handled;
the mode comes from the labeled graph.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from ..cmgraph import BLUE, ColoredMultigraph, color_degrees, find_trail
from ..kexpr import Arc, CwExpr, Eta, ExprError, Leaf, LabeledGraph, Rho, Union_, subgraphs
from .. import oracle
from .signature import Signature, DirectedSignature, signature, signature_directed

__all__ = [
    "PartialSolution", "RepSet", "NotIrredundant", "InternalInvariantViolation",
    "aux_multigraph", "signature_of", "reduce", "identity_reduce", "plus_ij",
    "step_leaf", "step_rho", "step_union", "step_eta", "final_check", "extract_cycle",
    "ConcreteRun", "run_concrete", "is_partial_solution",
]


class NotIrredundant(ExprError):
    pass


class InternalInvariantViolation(AssertionError):
    pass


@dataclass(frozen=True)
class PartialSolution:
    """A set of edges of H inducing vertex-disjoint paths.

    Undirected edges are ``(u, v)`` with ``u < v``; arcs are ``(tail, head)``.
    """

    edges: frozenset[tuple[int, int]] = frozenset()

    def __len__(self) -> int:
        return len(self.edges)

    def __or__(self, other: "PartialSolution") -> "PartialSolution":
        return PartialSolution(self.edges | other.edges)

    def with_edge(self, u: int, v: int, directed: bool) -> "PartialSolution":
        e = (u, v) if directed or u < v else (v, u)
        return PartialSolution(self.edges | {e})

    def paths(self, vertices: Iterable[int], directed: bool) -> list[list[int]]:
        """Maximal paths as vertex lists; isolated vertices are one-vertex paths.

        Directed paths run from tail to head.  Undirected paths start at their
        smaller end.  The list is ordered by first vertex.
        """
        vs = sorted(vertices)
        nxt: dict[int, list[int]] = {v: [] for v in vs}
        indeg = {v: 0 for v in vs}
        for u, v in self.edges:
            nxt[u].append(v)
            indeg[v] += 1
            if not directed:
                nxt[v].append(u)
        seen: set[int] = set()
        out: list[list[int]] = []
        for s in vs:
            if s in seen:
                continue
            if directed:
                if indeg[s]:
                    continue
            elif len(nxt[s]) > 1:
                continue
            path = [s]
            seen.add(s)
            while True:
                step = [w for w in nxt[path[-1]] if w not in seen]
                if not step:
                    break
                path.append(step[0])
                seen.add(step[0])
            out.append(path)
        if len(seen) != len(vs):
            raise InternalInvariantViolation("edge set contains a cycle")
        return out


def is_partial_solution(H: LabeledGraph, P: PartialSolution) -> bool:
    if not P.edges <= H.edges:
        return False
    outd: dict[int, int] = {}
    ind: dict[int, int] = {}
    for u, v in P.edges:
        outd[u] = outd.get(u, 0) + 1
        ind[v] = ind.get(v, 0) + 1
    if H.directed:
        if any(c > 1 for c in outd.values()) or any(c > 1 for c in ind.values()):
            return False
    else:
        deg = {v: outd.get(v, 0) + ind.get(v, 0) for v in set(outd) | set(ind)}
        if any(c > 2 for c in deg.values()):
            return False
    try:
        P.paths(H.labels, H.directed)
    except InternalInvariantViolation:
        return False
    return True


def aux_multigraph(H: LabeledGraph, P: PartialSolution, k: int | None = None) -> ColoredMultigraph:
    """One red edge per maximal path, joining the slots of its end labels.

    For digraphs the edge is an arc from the label of the path's first vertex
    to the label of its last vertex.
    """
    if k is None:
        k = max(H.labels.values(), default=1)
    red = [(H.labels[p[0]], H.labels[p[-1]]) for p in P.paths(H.labels, H.directed)]
    return ColoredMultigraph.build(k, red=red, directed=H.directed)


def signature_of(H: LabeledGraph, P: PartialSolution, k: int) -> Signature | DirectedSignature:
    g = aux_multigraph(H, P, k)
    return signature_directed(g) if H.directed else signature(g)


@dataclass
class RepSet:
    """Representatives with their signatures, in insertion order.

    After :func:`reduce` every signature occurs once.  ``offered`` counts the
    candidates that were presented to the reduce that built this set.
    """

    entries: list[tuple[Signature | DirectedSignature, PartialSolution]] = field(default_factory=list)
    offered: int = 0

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return (p for _, p in self.entries)

    def solutions(self) -> list[PartialSolution]:
        return [p for _, p in self.entries]

    def signatures(self) -> list:
        return [s for s, _ in self.entries]

    def as_dict(self) -> dict:
        return dict(self.entries)


Reducer = Callable[[LabeledGraph, Iterable[PartialSolution], int], RepSet]


def reduce(H: LabeledGraph, A: Iterable[PartialSolution], k: int) -> RepSet:
    """Keep the first partial solution of every signature class."""
    kept: dict = {}
    offered = 0
    for P in A:
        offered += 1
        sig = signature_of(H, P, k)
        if sig not in kept:
            kept[sig] = P
    return RepSet(list(kept.items()), offered)


def identity_reduce(H: LabeledGraph, A: Iterable[PartialSolution], k: int) -> RepSet:
    """Keep everything (duplicate edge sets collapse, as in a set)."""
    kept: dict[frozenset, PartialSolution] = {}
    offered = 0
    for P in A:
        offered += 1
        kept.setdefault(P.edges, P)
    return RepSet([(signature_of(H, P, k), P) for P in kept.values()], offered)


def plus_ij(H: LabeledGraph, P: PartialSolution, i: int, j: int) -> list[PartialSolution]:
    """All ``P + uv`` with ``uv`` an i-j edge of H joining ends of distinct paths.

    Directed: ``u`` is the last vertex of a path labeled ``i`` and ``v`` the
    first vertex of another path labeled ``j``.
    """
    if i == j:
        raise ValueError("plus_ij needs distinct labels")
    lab = H.labels
    tails: list[tuple[int, int]] = []  # (vertex, path id) usable as u
    heads: list[tuple[int, int]] = []  # usable as v
    for pid, p in enumerate(P.paths(lab, H.directed)):
        if H.directed or len(p) == 1:
            ends = [(p[-1], p[0])]
        else:
            ends = [(p[0], p[-1]), (p[-1], p[0])]
        for last, first in ends:
            if lab[last] == i:
                tails.append((last, pid))
            if lab[first] == j:
                heads.append((first, pid))
    out = []
    for u, pu in sorted(tails):
        for v, pv in sorted(heads):
            if pu != pv and H.has_edge(u, v):
                out.append(P.with_edge(u, v, H.directed))
    return out


def step_leaf(H: LabeledGraph, k: int) -> RepSet:
    return reduce(H, [PartialSolution()], k)


def step_rho(H: LabeledGraph, A_D: RepSet, k: int) -> RepSet:
    """Same edge sets, signatures recomputed under the relabeled graph."""
    return RepSet([(signature_of(H, P, k), P) for P in A_D], len(A_D))


def step_union(H: LabeledGraph, A_D: RepSet, A_F: RepSet, k: int,
               reducer: Reducer = reduce) -> RepSet:
    return reducer(H, (P | Q for P in A_D for Q in A_F), k)


def step_eta(H: LabeledGraph, D: LabeledGraph, A_D: RepSet, i: int, j: int, k: int,
             reducer: Reducer = reduce) -> RepSet:
    """Add up to ``min(|V(H)|, |E_ij|)`` new i-j edges, one layer at a time."""
    if H.directed:
        new_edges = {(u, v) for u, v in H.edges if H.labels[u] == i and H.labels[v] == j}
    else:
        new_edges = {(u, v) for u, v in H.edges if {H.labels[u], H.labels[v]} == {i, j}}
    if new_edges & D.edges:
        raise NotIrredundant(f"({i},{j}) already has edges below this node")
    cap = min(len(H), len(new_edges))
    layers = [A_D.solutions()]
    while layers[-1] and len(layers) <= cap:
        grown = (Q for P in layers[-1] for Q in plus_ij(H, P, i, j))
        layers.append(reducer(H, grown, k).solutions())
    return reducer(H, (P for layer in layers for P in layer), k)


def final_check(H: LabeledGraph, A_D: RepSet, i: int, j: int, k: int) -> PartialSolution | None:
    """A representative whose red edges can be closed by i-j edges alone."""
    for P in A_D:
        g = aux_multigraph(H, P, k)
        if H.directed:
            sig = signature_directed(g)
            out, inn = sig.out_degrees, sig.in_degrees
            if out[j - 1] > 0 and out[j - 1] == inn[i - 1] and \
                    sum(out) == out[j - 1] and sum(inn) == inn[i - 1]:
                return P
        else:
            deg = signature(g).degrees
            if deg[i - 1] > 0 and deg[i - 1] == deg[j - 1] and \
                    sum(deg) == deg[i - 1] + deg[j - 1]:
                return P
    return None


def extract_cycle(G: LabeledGraph, D: LabeledGraph, P: PartialSolution, i: int, j: int,
                  k: int) -> list[int]:
    """Turn a representative that passed :func:`final_check` into a cycle of G.

    The red edges of ``aux(P)`` plus one blue i-j edge per unit of degree at
    slot i admit a red-blue trail; walking it visits the paths of P in an
    order where consecutive paths can be joined by a direct i-j edge.
    """
    paths = P.paths(D.labels, D.directed)
    aux = aux_multigraph(D, P, k)
    deg = color_degrees(aux)[i]
    d = deg.red_in if D.directed else deg.red
    g = aux
    for _ in range(d):
        g = g.add(i, j, BLUE)
    trail = find_trail(g)
    cycle: list[int] = []
    for t, eid in enumerate(trail.edges):
        if eid >= len(paths):
            continue  # blue connector
        p = paths[eid]
        if D.labels[p[0]] != trail.vertices[t]:
            p = p[::-1]
        cycle.extend(p)
    if not oracle.verify_cycle(G, cycle):
        raise InternalInvariantViolation(f"extracted sequence {cycle} is not a Hamiltonian cycle")
    return cycle


@dataclass
class ConcreteRun:
    hamiltonian: bool
    cycle: list[int] | None
    witness: tuple[int, int, int] | None
    sizes: dict[int, int]  # node index -> |A_H|


def run_concrete(expr: CwExpr, reducer: Reducer = reduce, k: int | None = None) -> ConcreteRun:
    """Bottom-up DP over explicit edge sets.  Expects an irredundant expression."""
    from ..kexpr import evaluate, width

    G = evaluate(expr)
    k = k or width(expr)
    n = len(G)
    sizes: dict[int, int] = {}
    if n < 3 or not G.is_connected():
        return ConcreteRun(False, None, None, sizes)
    sets: dict[int, RepSet] = {}
    graphs: dict[int, LabeledGraph] = {}
    for idx, H in subgraphs(expr):
        nd = expr.nodes[idx]
        if isinstance(nd, Leaf):
            A = step_leaf(H, k)
        elif isinstance(nd, Rho):
            A = step_rho(H, sets.pop(nd.child), k)
        elif isinstance(nd, Union_):
            A = step_union(H, sets.pop(nd.left), sets.pop(nd.right), k, reducer)
        else:
            assert isinstance(nd, (Eta, Arc))
            A_D, D = sets.pop(nd.child), graphs[nd.child]
            if len(H) == n:
                P = final_check(D, A_D, nd.i, nd.j, k)
                if P is not None:
                    cyc = extract_cycle(G, D, P, nd.i, nd.j, k)
                    return ConcreteRun(True, cyc, (idx, nd.i, nd.j), sizes)
            A = step_eta(H, D, A_D, nd.i, nd.j, k, reducer)
        sets[idx] = A
        graphs[idx] = H
        sizes[idx] = len(A)
    return ConcreteRun(False, None, None, sizes)
