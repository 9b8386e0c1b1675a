"""
Separation axioms: the registry, the implication diagram and the classifier.
"""

from .definitions import (
    AXIOMS,
    IMPLICATIONS,
    SEPARATION_AXIOMS,
    AxiomId,
    AxiomInfo,
    accepted_names,
    collapsed_classes,
    implication_closure,
    implication_graph,
    implies,
    resolve_axiom,
    resolve_axioms,
)
from .classifier import (
    AXIOM_CHECKS,
    AxiomVector,
    PointClass,
    Violation,
    check_axiom,
    check_claims,
    check_diagram,
    classify_point,
    classify_space,
)

__all__ = [
    "AXIOMS",
    "AXIOM_CHECKS",
    "IMPLICATIONS",
    "SEPARATION_AXIOMS",
    "AxiomId",
    "AxiomInfo",
    "AxiomVector",
    "PointClass",
    "Violation",
    "accepted_names",
    "check_axiom",
    "check_claims",
    "check_diagram",
    "classify_point",
    "classify_space",
    "collapsed_classes",
    "implication_closure",
    "implication_graph",
    "implies",
    "resolve_axiom",
    "resolve_axioms",
]
