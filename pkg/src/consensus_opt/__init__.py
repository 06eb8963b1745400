"""Consensus-based zero-order global optimization.

Particle schemes (CBO, delta-CBO, consensus freezing, consensus hopping),
their mean-field Gaussian-flow counterparts, diagnostics and an experiment
harness with a command line interface.
"""

from consensus_opt.objectives import Objective, get_objective, OBJECTIVES
from consensus_opt.consensus import softmin_weights, consensus_point, hardmin_point
from consensus_opt.dynamics import SolverParams, TerminationRule, RunTrace, run

__all__ = [
    "Objective",
    "get_objective",
    "OBJECTIVES",
    "softmin_weights",
    "consensus_point",
    "hardmin_point",
    "SolverParams",
    "TerminationRule",
    "RunTrace",
    "run",
]
