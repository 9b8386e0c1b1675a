"""
sepax - Separation Axiom Workbench

Decides the separation axioms between T0 and T1 on finite topological spaces,
checks the implication diagram exhaustively and mines minimal counterexamples.
"""

__version__ = "1.0.0"
__author__ = "sepax developers"

from .models import FiniteSpace, PointSet, Preorder
from .axioms import AxiomId, AxiomVector, check_axiom, classify_space
from .catalog import catalog, lookup
from .miner import enumerate_topologies, mine_witness, verify_diagram, verify_propositions

__all__ = [
    "AxiomId",
    "AxiomVector",
    "FiniteSpace",
    "PointSet",
    "Preorder",
    "catalog",
    "check_axiom",
    "classify_space",
    "enumerate_topologies",
    "lookup",
    "mine_witness",
    "verify_diagram",
    "verify_propositions",
]
