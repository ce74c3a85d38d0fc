"""The naive DP: one state per distinct auxiliary multigraph.

Two partial solutions with the same auxiliary multigraph behave identically,
which already gives an exact algorithm, but the number of multigraphs on k
slots grows like n^(k^2).  It shares the driver of the representative engine
and differs only in the state key, so both are directly comparable.
"""
from __future__ import annotations

from .kexpr import CwExpr, normalize
from .solver.engine import SolveResult, run_dp

__all__ = ["naive_solve"]


def naive_solve(expr: CwExpr, certificate: bool = False) -> SolveResult:
    """Decide Hamiltonicity of ``expr`` (either mode) with the naive engine."""
    return run_dp(normalize(expr), "naive", certificate)
