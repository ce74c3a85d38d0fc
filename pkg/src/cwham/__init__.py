"""Hamiltonian Cycle on graphs given by clique-width k-expressions."""
from .kexpr import CwExpr, LabeledGraph, evaluate, parse, unparse
from .solver import SolveResult, solve
from .dsolver import solve_directed
from .baseline import naive_solve

__all__ = ["CwExpr", "LabeledGraph", "evaluate", "parse", "unparse", "SolveResult",
           "solve", "solve_directed", "naive_solve"]
__version__ = "0.1.0"
