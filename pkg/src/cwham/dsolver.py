"""Directed Hamiltonian Cycle on directed k-expressions.

Paths are oriented, so a maximal path contributes the arc from the label of
its first vertex to the label of its last one.  States are keyed by out- and
in-degrees plus the connectivity of the split digraph, where every slot is
split into a node where red arcs end and blue arcs start, and a node where
blue arcs end and red arcs start.  Connectivity of the auxiliary digraph
itself is not enough: red arcs 1->2, 2->1 with blue arcs 1->2, 2->1 are
balanced and strongly connected, yet an alternating walk that starts with
red 1->2 can only continue with blue 2->1 and is stuck after that.
"""
from __future__ import annotations

from .kexpr import CwExpr, LabeledGraph, normalize
from .cmgraph import ColoredMultigraph
from .solver.engine import SolveResult, run_dp
from .solver.partial import PartialSolution, aux_multigraph
from .solver.signature import DirectedSignature, signature_directed

__all__ = ["aux_directed", "signature_directed", "solve_directed", "DirectedSignature"]


def aux_directed(H: LabeledGraph, P: PartialSolution, k: int | None = None) -> ColoredMultigraph:
    if not H.directed:
        raise ValueError("aux_directed needs a directed labeled graph")
    return aux_multigraph(H, P, k)


def solve_directed(expr: CwExpr, certificate: bool = False, engine: str = "rep") -> SolveResult:
    """Decide Directed Hamiltonian Cycle; same contract as :func:`cwham.solver.solve`."""
    if not expr.directed:
        raise ValueError("solve_directed() takes a directed expression; use solve()")
    if engine not in ("rep", "naive"):
        raise ValueError(f"unknown engine {engine!r}")
    return run_dp(normalize(expr), engine, certificate)
