"""
Enumeration of small topologies, exhaustive verification and witness mining.
"""

from .enumeration import EnumerationReport, enumerate_topologies, homeomorphism_classes, spaces_up_to
from .propositions import PROPOSITIONS, DiagramReport, PropositionReport, verify_diagram, verify_propositions
from .witnesses import StrictnessRow, WitnessMiner, WitnessReport, mine_witness, strictness_table

__all__ = [
    "PROPOSITIONS",
    "DiagramReport",
    "EnumerationReport",
    "PropositionReport",
    "StrictnessRow",
    "WitnessMiner",
    "WitnessReport",
    "enumerate_topologies",
    "homeomorphism_classes",
    "mine_witness",
    "spaces_up_to",
    "strictness_table",
    "verify_diagram",
    "verify_propositions",
]
