"""Representative-set DP for Hamiltonian Cycle on k-expressions."""
from .engine import Algebra, SolveResult, SolveStats, Witness, run_dp, solve
from .partial import (
    ConcreteRun, InternalInvariantViolation, NotIrredundant, PartialSolution, RepSet,
    aux_multigraph, extract_cycle, final_check, identity_reduce, is_partial_solution,
    plus_ij, reduce, run_concrete, signature_of, step_eta, step_leaf, step_rho, step_union,
)
from .signature import DirectedSignature, Signature, canonical_partition, repset_bound, signature

__all__ = [
    "Algebra", "SolveResult", "SolveStats", "Witness", "run_dp", "solve",
    "ConcreteRun", "InternalInvariantViolation", "NotIrredundant", "PartialSolution", "RepSet",
    "aux_multigraph", "extract_cycle", "final_check", "identity_reduce", "is_partial_solution",
    "plus_ij", "reduce", "run_concrete", "signature_of", "step_eta", "step_leaf", "step_rho",
    "step_union", "DirectedSignature", "Signature", "canonical_partition", "repset_bound",
    "signature",
]
