"""Count-based dynamic programming over a k-expression.

A state is the auxiliary multigraph of one partial solution, stored as a
flat tuple of ``k*k`` path counts: entry ``x*k + y`` counts maximal paths
whose end labels are ``x+1`` and ``y+1`` (``x <= y`` for undirected graphs;
for digraphs first vertex labeled ``x+1``, last vertex ``y+1``).  Everything
the DP decides depends on this multigraph only, so an edge insertion at an
eta node is expanded per pair of path classes instead of per concrete edge,
and a concrete edge set is rebuilt from the derivation only when a
certificate is requested.

The same driver runs the representative engine (states keyed by signature)
and the naive engine (states keyed by the full multigraph).
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field, asdict
from functools import lru_cache
from typing import Any, Callable

from ..kexpr import CwExpr, Leaf, LabeledGraph, Rho, Union_, evaluate, normalize, walk, width
from .partial import InternalInvariantViolation, PartialSolution, extract_cycle
from .signature import canonical_partition, repset_bound
from ..cmgraph import _partition

__all__ = ["Witness", "SolveStats", "SolveResult", "Algebra", "run_dp", "solve"]


@dataclass(frozen=True)
class Witness:
    node: int
    i: int
    j: int


@dataclass
class SolveStats:
    n: int = 0
    k: int = 0
    nodes: int = 0
    max_repset: int = 0
    reduce_calls: int = 0
    elapsed_ms: int = 0
    node_states: list[int] = field(default_factory=list, repr=False)


@dataclass
class SolveResult:
    hamiltonian: bool
    cycle: list[str] | None
    witness: Witness | None
    stats: SolveStats
    engine: str = "rep"

    def to_dict(self, timing: bool = True) -> dict[str, Any]:
        stats = asdict(self.stats)
        del stats["node_states"]
        if not timing:
            del stats["elapsed_ms"]
        return {
            "hamiltonian": self.hamiltonian,
            "cycle": self.cycle,
            "witness": asdict(self.witness) if self.witness else None,
            "stats": stats,
            "engine": self.engine,
        }


class Algebra:
    """Memoized operations on count tuples for a fixed ``k`` and mode."""

    def __init__(self, k: int, directed: bool):
        self.k = k
        self.directed = directed
        self.relabel = lru_cache(maxsize=None)(self._relabel)
        self.combine = lru_cache(maxsize=None)(self._combine)
        self.grow = lru_cache(maxsize=None)(self._grow)
        self.signature = lru_cache(maxsize=None)(self._signature)
        self.passes = lru_cache(maxsize=None)(self._passes)

    def slot(self, x: int, y: int) -> int:
        if not self.directed and x > y:
            x, y = y, x
        return x * self.k + y

    def leaf(self, label: int) -> tuple[int, ...]:
        aux = [0] * (self.k * self.k)
        aux[self.slot(label - 1, label - 1)] = 1
        return tuple(aux)

    def _relabel(self, aux: tuple[int, ...], src: int, dst: int) -> tuple[int, ...]:
        k, s, d = self.k, src - 1, dst - 1
        out = [0] * (k * k)
        for idx, c in enumerate(aux):
            if c:
                x, y = divmod(idx, k)
                out[self.slot(d if x == s else x, d if y == s else y)] += c
        return tuple(out)

    def _combine(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(x + y for x, y in zip(a, b))

    def _grow(self, aux: tuple[int, ...], i: int, j: int) -> tuple[tuple[tuple[int, ...], int, int], ...]:
        """Every way to join an i-end and a j-end of two distinct paths.

        Returns ``(new aux, a, b)`` where the joined paths had other ends
        labeled ``a+1`` and ``b+1``.  Digraphs join the last vertex (label i)
        of one path to the first vertex (label j) of another.
        """
        k, i0, j0 = self.k, i - 1, j - 1
        out = []
        for a in range(k):
            ia = a * k + i0 if self.directed else self.slot(i0, a)
            if not aux[ia]:
                continue
            for b in range(k):
                jb = j0 * k + b if self.directed else self.slot(j0, b)
                c = aux[jb]
                if not c or (ia == jb and c < 2):
                    continue
                new = list(aux)
                new[ia] -= 1
                new[jb] -= 1
                new[self.slot(a, b)] += 1
                out.append((tuple(new), a, b))
        return tuple(out)

    def _signature(self, aux: tuple[int, ...]) -> tuple:
        k = self.k
        pairs = [divmod(idx, k) for idx, c in enumerate(aux) if c]
        if self.directed:
            out = [0] * k
            inn = [0] * k
            for (x, y), idx in zip(pairs, (i for i, c in enumerate(aux) if c)):
                out[x] += aux[idx]
                inn[y] += aux[idx]
            split = _partition(2 * k, [(2 * x + 1, 2 * y) for x, y in pairs])
            return tuple(out), tuple(inn), canonical_partition(split)
        deg = [0] * k
        for idx, c in enumerate(aux):
            if c:
                x, y = divmod(idx, k)
                deg[x] += c
                deg[y] += c
        return tuple(deg), canonical_partition(_partition(k, pairs))

    def _passes(self, aux: tuple[int, ...], i: int, j: int) -> bool:
        """Closable by i-j edges only (digraphs: every path runs from j to i)."""
        k = self.k
        if self.directed:
            ji = (j - 1) * k + (i - 1)
            return aux[ji] > 0 and sum(aux) == aux[ji]
        ii, jj, ij = self.slot(i - 1, i - 1), self.slot(j - 1, j - 1), self.slot(i - 1, j - 1)
        return aux[ii] == aux[jj] and aux[ii] + aux[jj] + aux[ij] > 0 and \
            sum(aux) == aux[ii] + aux[jj] + aux[ij]


def _labels_at(expr: CwExpr, wanted: set[int]) -> dict[int, dict[int, int]]:
    snaps: dict[int, dict[int, int]] = {}

    def on_node(idx, classes, edges, existing):
        if idx in wanted:
            snaps[idx] = {v: lab for lab, vs in classes.items() for v in vs}

    walk(expr, on_node)
    return snaps


def _replay(expr: CwExpr, deriv, directed: bool) -> PartialSolution:
    """Rebuild a concrete edge set with the path-class counts of ``deriv``."""
    wanted: set[int] = set()
    todo = [deriv]
    while todo:
        d = todo.pop()
        if d[0] == "union":
            todo += [d[1], d[2]]
        elif d[0] == "add":
            wanted.add(d[1])
            todo.append(d[2])
    labels = _labels_at(expr, wanted)

    # post-order over the derivation tree; each value is (mate, edges) where
    # undirected mate maps a path end to its other end, and directed mate is
    # the pair (end_of: first -> last, start_of: last -> first)
    results: list = []
    stack: list = [(deriv, False)]
    while stack:
        d, ready = stack.pop()
        kind = d[0]
        if kind == "leaf":
            v = d[1]
            results.append((({v: v}, {v: v}) if directed else {v: v}, []))
        elif not ready:
            stack.append((d, True))
            if kind == "union":
                stack += [(d[2], False), (d[1], False)]
            else:
                stack.append((d[2], False))
        elif kind == "union":
            right, left = results.pop(), results.pop()
            mate, edges = left
            if directed:
                mate[0].update(right[0][0])
                mate[1].update(right[0][1])
            else:
                mate.update(right[0])
            edges += right[1]
            results.append((mate, edges))
        else:  # add
            _, idx, _, a, b = d
            nd = expr.nodes[idx]
            lab = labels[idx]
            mate, edges = results[-1]
            i, j, a, b = nd.i, nd.j, a + 1, b + 1
            if directed:
                end_of, start_of = mate
                u = min(x for x, s in start_of.items() if lab[x] == i and lab[s] == a)
                su = start_of[u]
                v = min(x for x, e in end_of.items()
                        if lab[x] == j and lab[e] == b and x != su)
                ev = end_of[v]
                del start_of[u], end_of[v]
                end_of[su] = ev
                start_of[ev] = su
                edges.append((u, v))
            else:
                u = min(x for x, m in mate.items() if lab[x] == i and lab[m] == a)
                mu = mate[u]
                v = min(x for x, m in mate.items()
                        if lab[x] == j and lab[m] == b and x != mu)
                mv = mate[v]
                if mu != u:
                    del mate[u]
                if mv != v:
                    del mate[v]
                mate[mu] = mv
                mate[mv] = mu
                edges.append((min(u, v), max(u, v)))
    (_, edges), = results
    return PartialSolution(frozenset(edges))


def run_dp(expr: CwExpr, key: str = "rep", certificate: bool = False,
           check_bound: bool = True) -> SolveResult:
    """Run the DP on an irredundant expression.

    ``key`` is ``"rep"`` (one state per signature) or ``"naive"`` (one state
    per auxiliary multigraph).
    """
    started = time.perf_counter()
    G = evaluate(expr)
    n, k = len(G), width(expr)
    stats = SolveStats(n=n, k=k, nodes=len(expr))
    result = SolveResult(False, None, None, stats, key)

    def done() -> SolveResult:
        stats.elapsed_ms = int(round((time.perf_counter() - started) * 1000))
        return result

    if n < 3 or not G.is_connected():
        return done()

    alg = Algebra(k, expr.directed)
    keyf: Callable = alg.signature if key == "rep" else (lambda aux: aux)
    bound = repset_bound(n, k)
    states: list[list | None] = [None] * len(expr)
    sizes: list[list[int] | None] = [None] * len(expr)  # label class sizes
    next_vertex = 0

    for idx, nd in enumerate(expr.nodes):
        if isinstance(nd, Leaf):
            cur = [(alg.leaf(nd.label), ("leaf", next_vertex) if certificate else None)]
            cls = [0] * (k + 1)
            cls[nd.label] = 1
            next_vertex += 1
        elif isinstance(nd, Rho):
            cur = [(alg.relabel(aux, nd.src, nd.dst), d) for aux, d in states[nd.child]]
            cls = sizes[nd.child]
            cls[nd.dst] += cls[nd.src]
            cls[nd.src] = 0
        elif isinstance(nd, Union_):
            kept: dict = {}
            for la, ld in states[nd.left]:
                for ra, rd in states[nd.right]:
                    aux = alg.combine(la, ra)
                    kk = keyf(aux)
                    if kk not in kept:
                        kept[kk] = (aux, ("union", ld, rd) if certificate else None)
            stats.reduce_calls += 1
            cur = list(kept.values())
            cls = [x + y for x, y in zip(sizes[nd.left], sizes[nd.right])]
        else:
            child = states[nd.child]
            cls = sizes[nd.child]
            i, j = nd.i, nd.j
            if sum(cls) == n:
                for aux, d in child:
                    if alg.passes(aux, i, j):
                        result.hamiltonian = True
                        result.witness = Witness(idx, i, j)
                        if certificate:
                            result.cycle = _certificate(expr, G, d, nd.child, i, j, k)
                        return done()
            cap = min(sum(cls), cls[i] * cls[j])
            everything: dict = {}
            for aux, d in child:
                everything.setdefault(keyf(aux), (aux, d))
            layer, t = child, 0
            while layer and t < cap:
                t += 1
                nxt: dict = {}
                for aux, d in layer:
                    for new, a, b in alg.grow(aux, i, j):
                        kk = keyf(new)
                        if kk not in nxt:
                            nxt[kk] = (new, ("add", idx, d, a, b) if certificate else None)
                stats.reduce_calls += 1
                layer = list(nxt.values())
                for kk, st in nxt.items():
                    everything.setdefault(kk, st)
            stats.reduce_calls += 1
            cur = list(everything.values())
        for c in getattr(nd, "child", None), getattr(nd, "left", None), getattr(nd, "right", None):
            if c is not None:
                states[c] = None
                sizes[c] = None
        states[idx] = cur
        sizes[idx] = cls
        stats.node_states.append(len(cur))
        stats.max_repset = max(stats.max_repset, len(cur))
        if key == "rep" and check_bound and len(cur) > bound:
            raise InternalInvariantViolation(
                f"node {idx}: {len(cur)} representatives exceed the bound {bound}")
    return done()


def _certificate(expr: CwExpr, G: LabeledGraph, deriv, node: int, i: int, j: int,
                 k: int) -> list[str]:
    P = _replay(expr, deriv, expr.directed)
    labels = _labels_at(expr, {node})[node]
    D = LabeledGraph(G.names, labels,
                     frozenset(e for e in G.edges if e[0] in labels and e[1] in labels and
                               e not in _cross(G, labels, i, j)),
                     G.directed)
    cycle = extract_cycle(G, D, P, i, j, k)
    return [G.names[v] for v in cycle]


def _cross(G: LabeledGraph, labels: dict[int, int], i: int, j: int) -> set[tuple[int, int]]:
    # edges this eta/arc node adds; the node sees the whole vertex set
    out = set()
    for u, v in G.edges:
        if G.directed:
            if labels[u] == i and labels[v] == j:
                out.add((u, v))
        elif {labels[u], labels[v]} == {i, j}:
            out.add((u, v))
    return out


def solve(expr: CwExpr, certificate: bool = False, engine: str = "rep") -> SolveResult:
    """Decide Hamiltonian Cycle for the undirected graph denoted by ``expr``.

    Fully redundant eta nodes are dropped first; partially redundant input is
    rejected.  ``witness.node`` indexes the normalized expression.
    """
    if expr.directed:
        raise ValueError("solve() takes an undirected expression; use solve_directed()")
    if engine not in ("rep", "naive"):
        raise ValueError(f"unknown engine {engine!r}")
    return run_dp(normalize(expr), engine, certificate)
