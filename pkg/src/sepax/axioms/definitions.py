"""
Axiom definitions, accepted spellings and the implication diagram.

Each separation axiom constrains every singleton {x}. The diagram is a grid:
columns are the three singleton patterns (closed-or, closed-and, nwd-or) and
rows are the levels an open-type set can sit at (regular open, open, G_inf).
T1, T_CLOSED_OR_NWD and T_NWD are the top rows.
"""
import unicodedata
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Tuple, Union

import networkx as nx

from ..errors import UnknownAxiom


class AxiomId(Enum):
    """Separation axioms of the diagram followed by auxiliary predicates"""
    T1 = "T1"
    T_CLOSED_OR_NWD = "T_CLOSED_OR_NWD"
    T_CLOSED_OR_RO = "T_CLOSED_OR_RO"
    T_CLOSED_MEETS_RO = "T_CLOSED_MEETS_RO"
    T_NWD_OR_RO = "T_NWD_OR_RO"
    T_HALF = "T_HALF"
    T_D = "T_D"
    T_OMEGA_BP = "T_OMEGA_BP"
    T_QUARTER = "T_QUARTER"
    T0 = "T0"
    T_INF_BP = "T_INF_BP"
    SYMMETRIC = "SYMMETRIC"
    SUBFIT = "SUBFIT"
    RO_SUBFIT = "RO_SUBFIT"
    NODEC = "NODEC"
    T_NWD = "T_NWD"

    def __str__(self) -> str:
        return self.value


class Pattern(Enum):
    CLOSED_OR = "closed or"
    CLOSED_AND = "closed and"
    NWD_OR = "nwd or"


@dataclass(frozen=True)
class AxiomInfo:
    """Diagram coordinates and documentation for one axiom"""
    axiom: AxiomId
    description: str
    pattern: Optional[Pattern] = None
    level: Optional[str] = None
    aliases: Tuple[str, ...] = field(default_factory=tuple)
    separation: bool = True


def create_axioms() -> Dict[AxiomId, AxiomInfo]:
    """Create the registry of every supported axiom"""
    return {
        AxiomId.T1: AxiomInfo(
            AxiomId.T1,
            "every singleton is closed",
            pattern=Pattern.CLOSED_OR,
            level="closed",
            aliases=("T_1", "T_Closed"),
        ),
        AxiomId.T_CLOSED_OR_NWD: AxiomInfo(
            AxiomId.T_CLOSED_OR_NWD,
            "every singleton is closed or nowhere dense",
            pattern=Pattern.CLOSED_OR,
            level="nwd",
            aliases=("alphaT1", "αT1", "αT₁", "T_ClosedOrNwd"),
        ),
        AxiomId.T_CLOSED_OR_RO: AxiomInfo(
            AxiomId.T_CLOSED_OR_RO,
            "every singleton is closed or regular open",
            pattern=Pattern.CLOSED_OR,
            level="regular open",
            aliases=("T_3/4", "T¾", "T_¾", "T_ClosedOrRO"),
        ),
        AxiomId.T_CLOSED_MEETS_RO: AxiomInfo(
            AxiomId.T_CLOSED_MEETS_RO,
            "every singleton is a closed set meeting a regular open set",
            pattern=Pattern.CLOSED_AND,
            level="regular open",
            aliases=("T_ClosedMeetsRO",),
        ),
        AxiomId.T_NWD_OR_RO: AxiomInfo(
            AxiomId.T_NWD_OR_RO,
            "every singleton is nowhere dense or regular open",
            pattern=Pattern.NWD_OR,
            level="regular open",
            aliases=("semi-T1", "semi-T₁", "T_NwdOrRO"),
        ),
        AxiomId.T_HALF: AxiomInfo(
            AxiomId.T_HALF,
            "every singleton is closed or open",
            pattern=Pattern.CLOSED_OR,
            level="open",
            aliases=("T_1/2", "T½", "T_½", "T_ES", "T_ClosedOrOpen", "T_ClosedOrG_omega"),
        ),
        AxiomId.T_D: AxiomInfo(
            AxiomId.T_D,
            "every singleton is locally closed",
            pattern=Pattern.CLOSED_AND,
            level="open",
            aliases=("T_Constructible", "T_omega-Borel", "T_kappa-Borel"),
        ),
        AxiomId.T_OMEGA_BP: AxiomInfo(
            AxiomId.T_OMEGA_BP,
            "every singleton is nowhere dense or open",
            pattern=Pattern.NWD_OR,
            level="open",
            aliases=("alphaT_D", "αT_D", "alphaT_1/2", "αT½", "αT_½", "T_omega-BP", "T_NwdOrOpen"),
        ),
        AxiomId.T_QUARTER: AxiomInfo(
            AxiomId.T_QUARTER,
            "every singleton is closed or an intersection of open sets",
            pattern=Pattern.CLOSED_OR,
            level="G_inf",
            aliases=("T_1/4", "T¼", "T_¼", "T_F", "T_ClosedOrGinf", "T_ClosedOrG∞"),
        ),
        AxiomId.T0: AxiomInfo(
            AxiomId.T0,
            "distinct points have distinct closures",
            pattern=Pattern.CLOSED_AND,
            level="G_inf",
            aliases=("T_0", "T_inf-Borel", "T_∞-Borel"),
        ),
        AxiomId.T_INF_BP: AxiomInfo(
            AxiomId.T_INF_BP,
            "every singleton is nowhere dense or an intersection of open sets",
            pattern=Pattern.NWD_OR,
            level="G_inf",
            aliases=("T_inf-BP", "T_∞-BP", "T_NwdOrGinf"),
        ),
        AxiomId.SYMMETRIC: AxiomInfo(
            AxiomId.SYMMETRIC,
            "topological separation of points is symmetric",
            aliases=("R0", "R_0"),
            separation=False,
        ),
        AxiomId.SUBFIT: AxiomInfo(
            AxiomId.SUBFIT,
            "every open neighbourhood of x contains the closure of a point of clo{x}",
            aliases=("omega-subfit", "kappa-subfit", "inf-subfit"),
            separation=False,
        ),
        AxiomId.RO_SUBFIT: AxiomInfo(
            AxiomId.RO_SUBFIT,
            "subfit with neighbourhoods restricted to regular open sets",
            separation=False,
        ),
        AxiomId.NODEC: AxiomInfo(
            AxiomId.NODEC,
            "every nowhere dense set is closed",
            separation=False,
        ),
        AxiomId.T_NWD: AxiomInfo(
            AxiomId.T_NWD,
            "every singleton is nowhere dense",
            pattern=Pattern.NWD_OR,
            level="nwd",
            aliases=("T_Nwd",),
            separation=False,
        ),
    }


AXIOMS = create_axioms()

SEPARATION_AXIOMS: Tuple[AxiomId, ...] = tuple(a for a in AxiomId if AXIOMS[a].separation)
AUXILIARY_PREDICATES: Tuple[AxiomId, ...] = tuple(a for a in AxiomId if not AXIOMS[a].separation)

# Edges valid for every topological space
IMPLICATIONS: Tuple[Tuple[AxiomId, AxiomId], ...] = (
    (AxiomId.T1, AxiomId.T_CLOSED_OR_NWD),
    (AxiomId.T1, AxiomId.T_CLOSED_OR_RO),
    (AxiomId.T_CLOSED_OR_NWD, AxiomId.T_NWD_OR_RO),
    (AxiomId.T_CLOSED_OR_RO, AxiomId.T_CLOSED_MEETS_RO),
    (AxiomId.T_CLOSED_MEETS_RO, AxiomId.T_NWD_OR_RO),
    (AxiomId.T_CLOSED_OR_RO, AxiomId.T_HALF),
    (AxiomId.T_CLOSED_MEETS_RO, AxiomId.T_D),
    (AxiomId.T_NWD_OR_RO, AxiomId.T_OMEGA_BP),
    (AxiomId.T_HALF, AxiomId.T_D),
    (AxiomId.T_D, AxiomId.T_OMEGA_BP),
    (AxiomId.T_HALF, AxiomId.T_QUARTER),
    (AxiomId.T_D, AxiomId.T0),
    (AxiomId.T_OMEGA_BP, AxiomId.T_INF_BP),
    (AxiomId.T_QUARTER, AxiomId.T0),
    (AxiomId.T0, AxiomId.T_INF_BP),
    (AxiomId.T_NWD, AxiomId.T_CLOSED_OR_NWD),
    (AxiomId.T1, AxiomId.SYMMETRIC),
    (AxiomId.T1, AxiomId.SUBFIT),
    (AxiomId.SUBFIT, AxiomId.RO_SUBFIT),
)

# G-levels collapse to open sets on finite carriers
FINITE_EQUIVALENCES: Tuple[Tuple[AxiomId, AxiomId], ...] = (
    (AxiomId.T_QUARTER, AxiomId.T_HALF),
    (AxiomId.T0, AxiomId.T_D),
    (AxiomId.T_INF_BP, AxiomId.T_OMEGA_BP),
    (AxiomId.SYMMETRIC, AxiomId.SUBFIT),
)

DIAGRAM = "diagram"
FINITE_COLLAPSE = "finite-collapse"


def _normalize(name: str) -> str:
    text = name.strip()
    for symbol, spelled in (("α", "alpha"), ("∞", "inf"), ("½", "1/2"), ("¼", "1/4"), ("¾", "3/4"),
                            ("κ", "kappa"), ("ω", "omega")):
        text = text.replace(symbol, spelled)
    # subscript digits
    text = unicodedata.normalize("NFKC", text)
    return "".join(ch for ch in text.lower() if ch not in "_- ")


@lru_cache(maxsize=1)
def _spellings() -> Dict[str, AxiomId]:
    table: Dict[str, AxiomId] = {}
    for axiom, info in AXIOMS.items():
        for spelling in (axiom.value,) + info.aliases:
            table[_normalize(spelling)] = axiom
    return table


def accepted_names() -> List[str]:
    names = []
    for axiom, info in AXIOMS.items():
        names.append(axiom.value)
        names.extend(info.aliases)
    return names


def resolve_axiom(name: Union[str, AxiomId]) -> AxiomId:
    """Map an enum name or any accepted alias to its AxiomId"""
    if isinstance(name, AxiomId):
        return name
    axiom = _spellings().get(_normalize(name))
    if axiom is None:
        raise UnknownAxiom(name, [a.value for a in AxiomId])
    return axiom


def resolve_axioms(names: str) -> FrozenSet[AxiomId]:
    """Comma-separated list of names, as given on the command line"""
    return frozenset(resolve_axiom(part) for part in names.split(",") if part.strip())


@lru_cache(maxsize=2)
def implication_graph(finite: bool = False) -> nx.DiGraph:
    """Direct edges; with finite=True the collapse equivalences are added both ways"""
    graph = nx.DiGraph()
    graph.add_nodes_from(AxiomId)
    graph.add_edges_from(IMPLICATIONS, source=DIAGRAM)
    if finite:
        for a, b in FINITE_EQUIVALENCES:
            for u, v in ((a, b), (b, a)):
                if not graph.has_edge(u, v):
                    graph.add_edge(u, v, source=FINITE_COLLAPSE)
    return graph


@lru_cache(maxsize=2)
def implication_closure(finite: bool = False) -> nx.DiGraph:
    """Every implication path as a single edge, tagged with where it comes from"""
    closure = nx.transitive_closure(implication_graph(finite), reflexive=None)
    full = nx.transitive_closure(implication_graph(False), reflexive=None)
    for u, v in closure.edges:
        closure[u][v]["source"] = DIAGRAM if full.has_edge(u, v) else FINITE_COLLAPSE
    return closure


def implies(a: AxiomId, b: AxiomId, finite: bool = False) -> bool:
    return a == b or implication_closure(finite).has_edge(a, b)


def collapsed_classes() -> List[FrozenSet[AxiomId]]:
    """Axioms indistinguishable on finite spaces, in diagram order"""
    condensed = nx.condensation(implication_graph(True))
    order = list(AxiomId)
    classes = [frozenset(condensed.nodes[c]["members"]) for c in condensed.nodes]
    return sorted(classes, key=lambda members: min(order.index(a) for a in members))
