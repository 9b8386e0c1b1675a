"""
Minimal-witness search for the strictness of implications.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple, Union

from ..axioms.classifier import AxiomVector, classify_space
from ..axioms.definitions import SEPARATION_AXIOMS, AxiomId, implies, resolve_axiom
from ..catalog.entries import catalog, implied_claims
from ..config import EngineConfig
from ..errors import ContradictoryQuery
from ..models import FiniteSpace
from ..spaces.core import canonical_key, is_homeomorphic
from .enumeration import homeomorphism_classes

logger = logging.getLogger(__name__)

AxiomNames = Iterable[Union[AxiomId, str]]


@dataclass(frozen=True)
class WitnessReport:
    """Outcome of a search; witness is None when nothing exists up to searched_up_to points"""
    satisfy: FrozenSet[AxiomId]
    violate: FrozenSet[AxiomId]
    witness: Optional[FiniteSpace]
    searched_up_to: int
    minimal: bool = False
    known_as: Tuple[str, ...] = field(default_factory=tuple)
    analytic: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def found(self) -> bool:
        return self.witness is not None

    def describe(self) -> str:
        if self.witness is None:
            text = f"NONE_UP_TO({self.searched_up_to})"
            if self.analytic:
                text += f"; infinite witness: {', '.join(self.analytic)}"
            return text
        names = f" ({', '.join(self.known_as)})" if self.known_as else ""
        return f"{self.witness.carrier_size}-point witness{names}"


@dataclass(frozen=True)
class StrictnessRow:
    antecedent: AxiomId
    consequent: AxiomId
    implied: bool
    report: WitnessReport

    @property
    def status(self) -> str:
        if self.implied:
            return "implied"
        return "witness" if self.report.found else "open"

    @property
    def consistent(self) -> bool:
        """An implied pair must have no counterexample"""
        return not (self.implied and self.report.found)


def _axiom_set(names: AxiomNames) -> FrozenSet[AxiomId]:
    return frozenset(resolve_axiom(name) for name in names)


def analytic_witnesses(satisfy: Iterable[AxiomId], violate: Iterable[AxiomId]) -> Tuple[str, ...]:
    """Analytic catalog entries whose claims settle the query"""
    satisfy, violate = list(satisfy), list(violate)
    names = []
    for entry in catalog():
        if not entry.analytic:
            continue
        claims = implied_claims(entry)
        if all(claims.get(a) is True for a in satisfy) and all(claims.get(b) is False for b in violate):
            names.append(entry.name)
    return tuple(names)


class WitnessMiner:
    """Searches homeomorphism classes in (carrier size, canonical key) order

    Classifications are cached per miner, so a fresh miner picks up any change
    to the axiom checks.
    """

    def __init__(self, config: Optional[EngineConfig] = None):
        self.config = config or EngineConfig()
        self._classified: Dict[int, List[Tuple[FiniteSpace, AxiomVector]]] = {}

    def classified(self, n: int) -> List[Tuple[FiniteSpace, AxiomVector]]:
        if n not in self._classified:
            self._classified[n] = [(space, classify_space(space)) for space in homeomorphism_classes(n)]
            logger.debug("Classified %d homeomorphism classes on %d points", len(self._classified[n]), n)
        return self._classified[n]

    def known_names(self, space: FiniteSpace) -> Tuple[str, ...]:
        return tuple(
            entry.name
            for entry in catalog()
            if entry.space is not None
            and entry.space.carrier_size == space.carrier_size
            and is_homeomorphic(entry.space, space)
        )

    def mine_witness(self, satisfy: AxiomNames, violate: AxiomNames, max_n: int) -> WitnessReport:
        """Smallest, then canonically least, space with every satisfy axiom and no violate axiom"""
        wanted, unwanted = _axiom_set(satisfy), _axiom_set(violate)
        clash = wanted & unwanted
        if clash:
            raise ContradictoryQuery(
                f"{', '.join(sorted(a.value for a in clash))} cannot be both satisfied and violated"
            )
        for n in range(1, max_n + 1):
            for space, vector in self.classified(n):
                if vector.satisfies(wanted, unwanted):
                    logger.debug("Witness for %s / not %s on %d points", wanted, unwanted, n)
                    return WitnessReport(
                        wanted, unwanted, space, max_n, minimal=True, known_as=self.known_names(space)
                    )
        return WitnessReport(wanted, unwanted, None, max_n, analytic=analytic_witnesses(wanted, unwanted))

    def strictness_table(self, max_n: int) -> List[StrictnessRow]:
        """Every ordered pair of distinct separation axioms"""
        rows = []
        for a in SEPARATION_AXIOMS:
            for b in SEPARATION_AXIOMS:
                if a == b:
                    continue
                report = self.mine_witness([a], [b], max_n)
                rows.append(StrictnessRow(a, b, implies(a, b, finite=False), report))
        found = sum(1 for row in rows if row.report.found)
        logger.info("Strictness table up to %d points: %d pairs, %d witnessed", max_n, len(rows), found)
        return rows

    def witness_names(self, max_n: int) -> Dict[Tuple[AxiomId, AxiomId], str]:
        """Name of a known witness for every non-implied pair that has one"""
        names = {}
        for row in self.strictness_table(max_n):
            if row.implied:
                continue
            report = row.report
            if report.known_as:
                names[(row.antecedent, row.consequent)] = report.known_as[0]
            elif report.witness is not None:
                _, code = canonical_key(report.witness)
                names[(row.antecedent, row.consequent)] = f"mined{report.witness.carrier_size}:{code}"
            elif report.analytic:
                names[(row.antecedent, row.consequent)] = report.analytic[0]
        return names


def mine_witness(satisfy: AxiomNames, violate: AxiomNames, max_n: int) -> WitnessReport:
    return WitnessMiner().mine_witness(satisfy, violate, max_n)


def strictness_table(max_n: int) -> List[StrictnessRow]:
    return WitnessMiner().strictness_table(max_n)
