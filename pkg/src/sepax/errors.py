"""
Exception hierarchy for the sepax engine.
"""
from typing import Iterable, Optional, Tuple


class SepaxError(Exception):
    """Base class for every error raised by sepax"""


class InvalidInput(SepaxError):
    """Caller supplied something the engine cannot accept"""


class CarrierMismatch(InvalidInput):
    """Two sets or a set and a space live on different carriers"""


class CarrierTooLarge(InvalidInput):
    """Carrier exceeds the bound of the requested operation"""

    def __init__(self, size: int, limit: int, operation: str):
        super().__init__(f"{operation} supports at most {limit} points, got {size}")
        self.size = size
        self.limit = limit
        self.operation = operation


class NotATopology(InvalidInput):
    """Family of sets fails the topology axioms"""

    def __init__(self, message: str, offending: Optional[Tuple[int, ...]] = None):
        super().__init__(message)
        self.offending = offending


class InvalidPreorder(InvalidInput):
    """Relation is not reflexive and transitive"""


class EmptySubspace(InvalidInput):
    """Subspaces must have at least one point"""


class UnknownAxiom(InvalidInput):
    """Axiom name not recognised"""

    def __init__(self, name: str, accepted: Iterable[str]):
        self.name = name
        self.accepted = sorted(accepted)
        super().__init__(f"unknown axiom '{name}'; accepted: {', '.join(self.accepted)}")


class UnknownProperty(InvalidInput):
    """Property name not registered with the proposition suite"""

    def __init__(self, name: str, accepted: Iterable[str]):
        self.name = name
        self.accepted = sorted(accepted)
        super().__init__(f"unknown property '{name}'; accepted: {', '.join(self.accepted)}")


class UnknownCatalogEntry(InvalidInput):
    """No catalog entry with this name"""


class ContradictoryQuery(InvalidInput):
    """An axiom is required both to hold and to fail"""


class IncompleteVector(InvalidInput):
    """An axiom vector lacks values the diagram check needs"""

    def __init__(self, missing: Iterable[str]):
        self.missing = sorted(missing)
        super().__init__(f"axiom vector is missing: {', '.join(self.missing)}")


class SpaceFormatError(InvalidInput):
    """Space JSON could not be parsed or has the wrong shape"""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        location = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{message}{location}")
        self.line = line
        self.column = column


class InternalInconsistency(SepaxError):
    """Two independent computations that must agree disagree"""
