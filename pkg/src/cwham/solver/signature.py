"""Equivalence keys of auxiliary multigraphs.

Two partial solutions are interchangeable for every completion when their
auxiliary multigraphs agree on per-slot degrees and on which slots are
connected.  For digraphs the connectivity is taken in the split digraph (see
:mod:`cwham.cmgraph`), which is what the directed trail condition depends on.
"""
from __future__ import annotations

from typing import NamedTuple

from ..cmgraph import RED, ColoredMultigraph, _node_a, _node_b, _partition

__all__ = ["Signature", "DirectedSignature", "signature", "signature_directed",
           "canonical_partition", "repset_bound"]


class Signature(NamedTuple):
    degrees: tuple[int, ...]
    partition: tuple[int, ...]  # slot -> smallest slot of its component (1-based)


class DirectedSignature(NamedTuple):
    out_degrees: tuple[int, ...]
    in_degrees: tuple[int, ...]
    partition: tuple[int, ...]  # weak components, 1-based
    split: tuple[int, ...]  # components of the 2k split nodes, (v.a, v.b) per slot


def canonical_partition(roots: list[int]) -> tuple[int, ...]:
    """Map every element to the smallest element of its block."""
    low: dict[int, int] = {}
    for x, r in enumerate(roots):
        low.setdefault(r, x)
    return tuple(low[r] for r in roots)


def _check_red(g: ColoredMultigraph):
    if any(e.color is not RED for e in g.edges):
        raise ValueError("signatures are defined for all-red auxiliary multigraphs")


def signature(g: ColoredMultigraph) -> Signature:
    _check_red(g)
    deg = [0] * g.k
    for e in g.edges:
        deg[e.u - 1] += 1
        deg[e.v - 1] += 1
    roots = _partition(g.k, [(e.u - 1, e.v - 1) for e in g.edges])
    return Signature(tuple(deg), tuple(p + 1 for p in canonical_partition(roots)))


def signature_directed(g: ColoredMultigraph) -> DirectedSignature:
    _check_red(g)
    out = [0] * g.k
    inn = [0] * g.k
    for e in g.edges:
        out[e.u - 1] += 1
        inn[e.v - 1] += 1
    weak = _partition(g.k, [(e.u - 1, e.v - 1) for e in g.edges])
    # split node ids shifted so slot 1 maps to 0 and 1
    split = _partition(2 * g.k, [(_node_b(e.u) - 2, _node_a(e.v) - 2) for e in g.edges])
    return DirectedSignature(tuple(out), tuple(inn),
                             tuple(p + 1 for p in canonical_partition(weak)),
                             canonical_partition(split))


def repset_bound(n: int, k: int) -> int:
    """``n^k * 2^(k (log2 k + 1))`` as an exact integer; equals ``(2nk)^k``."""
    return n ** k * k ** k * 2 ** k
