"""Brute-force ground truth: Held-Karp Hamiltonicity and exhaustive trails."""
from __future__ import annotations

from itertools import permutations
from typing import Sequence

from .cmgraph import RED, ColoredMultigraph
from .kexpr import LabeledGraph

__all__ = ["TooLarge", "brute_force_hc", "permutation_hc", "enumerate_trail_exists",
           "verify_cycle"]

MAX_HC_VERTICES = 18
MAX_TRAIL_EDGES = 10


class TooLarge(ValueError):
    pass


def _out_masks(g: LabeledGraph) -> tuple[list[int], dict[int, int]]:
    order = g.vertices
    pos = {v: p for p, v in enumerate(order)}
    out = [0] * len(order)
    for u, v in g.edges:
        out[pos[u]] |= 1 << pos[v]
        if not g.directed:
            out[pos[v]] |= 1 << pos[u]
    return order, out


def brute_force_hc(g: LabeledGraph) -> list[int] | None:
    """One Hamiltonian cycle of ``g`` as a vertex list, or ``None``.

    Held-Karp over subsets containing the first vertex: ``ends[mask]`` is the
    bitmask of vertices where a path from the first vertex covering exactly
    ``mask`` can end.
    """
    n = len(g)
    if n > MAX_HC_VERTICES:
        raise TooLarge(f"{n} vertices exceeds the oracle limit of {MAX_HC_VERTICES}")
    if n < 3:
        return None  # a cycle needs at least three vertices in a simple graph
    order, out = _out_masks(g)
    full = (1 << n) - 1
    ends = [0] * (1 << n)
    ends[1] = 1
    for mask in range(1, 1 << n, 2):
        reach = ends[mask]
        while reach:
            low = reach & -reach
            v = low.bit_length() - 1
            reach ^= low
            nxt = out[v] & ~mask
            while nxt:
                bit = nxt & -nxt
                nxt ^= bit
                ends[mask | bit] |= bit
    closing = ends[full]
    closing_ends = [v for v in range(1, n) if closing >> v & 1 and out[v] & 1]
    if not closing_ends:
        return None
    # walk back from a closing end
    path = [closing_ends[0]]
    mask = full
    while len(path) < n:
        v = path[-1]
        prev_mask = mask & ~(1 << v)
        for u in range(n):
            if ends[prev_mask] >> u & 1 and out[u] >> v & 1:
                path.append(u)
                mask = prev_mask
                break
        else:  # pragma: no cover - the table guarantees a predecessor
            raise AssertionError("Held-Karp backtrack failed")
    path.reverse()
    return [order[p] for p in path]


def permutation_hc(g: LabeledGraph) -> list[int] | None:
    """Naive cycle search over all vertex orders; only for tiny graphs."""
    order = g.vertices
    if len(order) < 3:
        return None
    first, rest = order[0], order[1:]
    for perm in permutations(rest):
        cyc = [first, *perm]
        if verify_cycle(g, cyc):
            return cyc
    return None


def verify_cycle(g: LabeledGraph, cycle: Sequence[int]) -> bool:
    """True iff ``cycle`` lists every vertex once and consecutive pairs are edges."""
    if len(cycle) < 3 or len(cycle) != len(g) or set(cycle) != set(g.labels):
        return False
    return all(g.has_edge(cycle[t], cycle[(t + 1) % len(cycle)]) for t in range(len(cycle)))


def enumerate_trail_exists(g: ColoredMultigraph) -> bool:
    """Exhaustive search for a closed red-blue trail through every edge.

    A closed alternating trail can be rotated to start with any red edge, so
    the search fixes the lowest-id red edge first and tries both traversal
    directions.
    """
    m = len(g.edges)
    if m > MAX_TRAIL_EDGES:
        raise TooLarge(f"{m} edges exceeds the oracle limit of {MAX_TRAIL_EDGES}")
    if m == 0:
        return True
    reds = [e for e in g.edges if e.color is RED]
    if not reds:
        return False
    first = reds[0]
    starts = [(first.u, first.v)]
    if not g.directed and first.u != first.v:
        starts.append((first.v, first.u))

    def extend(cur: int, start: int, last_color, used: int) -> bool:
        if used == (1 << m) - 1:
            return cur == start and last_color is not RED
        for e in g.edges:
            if used >> e.id & 1 or e.color is last_color:
                continue
            if e.u == cur:
                nxt = e.v
            elif not g.directed and e.v == cur:
                nxt = e.u
            else:
                continue
            if extend(nxt, start, e.color, used | 1 << e.id):
                return True
        return False

    return any(extend(b, a, RED, 1 << first.id) for a, b in starts)
