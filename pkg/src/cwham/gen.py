"""Seeded generators of irredundant k-expressions."""
from __future__ import annotations

import random

from .kexpr import Arc, CwExpr, Eta, Leaf, Rho, Union_, parse, unparse

__all__ = ["BadParameters", "FAMILIES", "gen_family", "gen_random_expr"]

FAMILIES = ("cycle", "path", "complete", "complete_bipartite")


class BadParameters(ValueError):
    pass


class _Builder:
    def __init__(self, directed: bool):
        self.directed = directed
        self.nodes: list = []
        self.count = 0

    def _push(self, node) -> int:
        self.nodes.append(node)
        return len(self.nodes) - 1

    def leaf(self, label: int) -> int:
        self.count += 1
        return self._push(Leaf(label, f"v{self.count}"))

    def rho(self, src: int, dst: int, child: int) -> int:
        return self._push(Rho(src, dst, child))

    def join(self, i: int, j: int, child: int) -> int:
        """Edges between classes i and j (arcs i -> j in directed mode)."""
        return self._push(Arc(i, j, child) if self.directed else Eta(i, j, child))

    def both(self, i: int, j: int, child: int) -> int:
        """Undirected edges, or arcs in both directions."""
        top = self.join(i, j, child)
        return self.join(j, i, top) if self.directed else top

    def union(self, left: int, right: int) -> int:
        return self._push(Union_(left, right))

    def done(self) -> CwExpr:
        return CwExpr(tuple(self.nodes), self.directed)


def _mode(mode: str | bool) -> bool:
    if isinstance(mode, bool):
        return mode
    if mode not in ("undirected", "directed"):
        raise BadParameters(f"unknown mode {mode!r}")
    return mode == "directed"


def gen_family(kind: str, n: int, mode: str | bool = "undirected") -> CwExpr:
    """Expression of a cycle, path, complete or complete bipartite graph on n vertices.

    Vertices are named ``v1 .. vn``.  Directed cycles and paths are oriented
    ``v1 -> v2 -> ... -> vn``; complete graphs get arcs both ways.
    """
    directed = _mode(mode)
    if kind not in FAMILIES:
        raise BadParameters(f"unknown family {kind!r}; choose from {', '.join(FAMILIES)}")
    if not isinstance(n, int) or n < 1 or (kind == "cycle" and n < 3) or \
            (kind == "complete_bipartite" and n < 2):
        raise BadParameters(f"n={n!r} is out of range for family {kind}")
    b = _Builder(directed)
    if kind == "cycle":
        # 1 = first vertex, 2 = active end, 3 = interior, 4 = newcomer
        top = b.join(1, 2, b.union(b.leaf(1), b.leaf(2)))
        for _ in range(n - 3):
            top = b.join(2, 4, b.union(top, b.leaf(4)))
            top = b.rho(4, 2, b.rho(2, 3, top))
        top = b.join(2, 4, b.union(top, b.leaf(4)))
        b.join(4, 1, top) if directed else b.join(1, 4, top)
    elif kind == "path":
        top = b.leaf(1)
        for _ in range(n - 1):
            top = b.join(1, 3, b.union(top, b.leaf(3)))
            top = b.rho(3, 1, b.rho(1, 2, top))
    elif kind == "complete":
        top = b.leaf(1)
        for _ in range(n - 1):
            top = b.rho(2, 1, b.both(1, 2, b.union(top, b.leaf(2))))
    else:
        left = b.leaf(1)
        for _ in range((n + 1) // 2 - 1):
            left = b.union(left, b.leaf(1))
        right = b.leaf(2)
        for _ in range(n // 2 - 1):
            right = b.union(right, b.leaf(2))
        b.both(1, 2, b.union(left, right))
    return b.done()


def gen_random_expr(n: int, k: int, seed: int, mode: str | bool = "undirected",
                    join_prob: float = 0.7) -> CwExpr:
    """A random irredundant expression with n leaves and labels in 1..k.

    Subexpressions ("stubs") are merged pairwise at random; before each merge
    a stub receives up to k random unary operations.  An edge operation is
    only emitted for a pair of nonempty classes with no edges between them
    yet, so the result is irredundant by construction.  Uses ``random.Random``
    seeded with ``seed``, so output is identical across platforms.
    """
    directed = _mode(mode)
    if not isinstance(n, int) or n < 1:
        raise BadParameters(f"n must be a positive integer, got {n!r}")
    if not isinstance(k, int) or not 2 <= k <= 6:
        raise BadParameters(f"k must be in 2..6, got {k!r}")
    rng = random.Random(seed)
    b = _Builder(directed)

    # stub: [node index, labels present, linked pairs]
    stubs = [[b.leaf(lab), {lab}, set()] for lab in (rng.randint(1, k) for _ in range(n))]

    def relabel(stub, src, dst):
        stub[0] = b.rho(src, dst, stub[0])
        stub[1] = (stub[1] - {src}) | {dst}
        moved = set()
        for i, j in stub[2]:
            i, j = (dst if i == src else i), (dst if j == src else j)
            if i != j:
                moved.add((i, j) if directed or i < j else (j, i))
        stub[2] = moved

    def decorate(stub, low=0):
        for _ in range(rng.randint(low, k)):
            top, present, linked = stub
            pairs = [(i, j) for i in sorted(present) for j in sorted(present)
                     if i != j and (directed or i < j) and (i, j) not in linked]
            if pairs and rng.random() < join_prob:
                i, j = rng.choice(pairs)
                stub[0] = b.join(i, j, top)
                linked.add((i, j))
            elif len(present) > 1 or rng.random() < 0.5:
                src = rng.choice(sorted(present))
                relabel(stub, src, rng.choice([x for x in range(1, k + 1) if x != src]))

    while len(stubs) > 1:
        a = stubs.pop(rng.randrange(len(stubs)))
        c = stubs.pop(rng.randrange(len(stubs)))
        decorate(a)
        decorate(c)
        if a[1] == c[1] and len(a[1]) < k and rng.random() < 0.5:
            # give the right side a label of its own so the two can be joined
            relabel(c, rng.choice(sorted(c[1])),
                    rng.choice([x for x in range(1, k + 1) if x not in c[1]]))
        merged = [b.union(a[0], c[0]), a[1] | c[1], a[2] | c[2]]
        decorate(merged, 1)
        stubs.append(merged)
    # leaves were created up front; reparse to get the canonical post-order,
    # so node indices agree with the printed expression
    return parse(unparse(b.done()), "directed" if directed else "undirected")
