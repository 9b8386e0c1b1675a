"""
Named example spaces with the classification each one is known to have.

Finite entries carry a computable space and are regression-checked against
the classifier. Analytic entries stand for infinite spaces: they carry only
their claims, which must respect the full (non-collapsed) implication diagram.
"""
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Tuple

from ..axioms.definitions import AxiomId, implication_closure
from ..errors import UnknownCatalogEntry
from ..models import FiniteSpace, PointSet
from ..spaces.core import antidiscrete_space, discrete_space
from .constructors import (
    attachment_space,
    khalimsky_interval,
    open_point_space,
    sierpinski,
    subspace,
)

A = AxiomId
COMPUTED = "direct computation from the open sets"


@dataclass(frozen=True)
class Claim:
    axiom: AxiomId
    value: bool
    citation: str = COMPUTED


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    space: Optional[FiniteSpace]
    expected: Tuple[Claim, ...]
    notes: str = ""
    aliases: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def analytic(self) -> bool:
        return self.space is None

    def expected_values(self) -> Dict[AxiomId, bool]:
        return {claim.axiom: claim.value for claim in self.expected}


def _claims(stated: Mapping[AxiomId, bool], citation: str,
            derived: Optional[Mapping[AxiomId, bool]] = None) -> Tuple[Claim, ...]:
    claims = [Claim(axiom, value, citation) for axiom, value in stated.items()]
    claims += [Claim(axiom, value) for axiom, value in (derived or {}).items() if axiom not in stated]
    return tuple(claims)


_SEPARATION_FALSE = {
    A.T1: False, A.T_CLOSED_OR_NWD: False, A.T_CLOSED_OR_RO: False, A.T_CLOSED_MEETS_RO: False,
    A.T_NWD_OR_RO: False, A.T_HALF: False, A.T_D: False, A.T_OMEGA_BP: False,
    A.T_QUARTER: False, A.T0: False, A.T_INF_BP: False,
}


def _antidiscrete_pair() -> CatalogEntry:
    return CatalogEntry(
        "antidiscrete2",
        antidiscrete_space(2),
        _claims(
            _SEPARATION_FALSE,
            "no singleton is closed, open or nowhere dense, so even T_INF_BP fails",
            {A.SYMMETRIC: True, A.SUBFIT: True, A.RO_SUBFIT: True, A.NODEC: True, A.T_NWD: False},
        ),
        "two points sharing every neighbourhood",
    )


def _sierpinski_entries() -> List[CatalogEntry]:
    entries = [
        CatalogEntry(
            "sierpinski2",
            sierpinski(2),
            _claims(
                {A.T_HALF: True, A.T_NWD_OR_RO: False, A.SUBFIT: False, A.RO_SUBFIT: True},
                "{1} is open but not regular open; the only regular open sets are the trivial ones",
                {A.T1: False, A.T_CLOSED_OR_NWD: False, A.T_CLOSED_OR_RO: False,
                 A.T_CLOSED_MEETS_RO: False, A.T_D: True, A.T_OMEGA_BP: True, A.T_QUARTER: True,
                 A.T0: True, A.T_INF_BP: True, A.SYMMETRIC: False, A.NODEC: True, A.T_NWD: False},
            ),
            "opens ∅, {1}, X",
            aliases=("S2",),
        ),
        CatalogEntry(
            "sierpinski3",
            sierpinski(3),
            _claims(
                {A.T_D: True, A.T_QUARTER: False, A.T_NWD_OR_RO: False},
                "the middle point is locally closed but neither closed nor open, and the top point is "
                "open but not regular open",
                {A.T1: False, A.T_CLOSED_OR_NWD: False, A.T_CLOSED_OR_RO: False,
                 A.T_CLOSED_MEETS_RO: False, A.T_HALF: False, A.T_OMEGA_BP: True, A.T0: True,
                 A.T_INF_BP: True, A.SYMMETRIC: False, A.SUBFIT: False, A.RO_SUBFIT: True,
                 A.NODEC: False, A.T_NWD: False},
            ),
            "alexandrov topology of the chain 0 <= 1 <= 2",
            aliases=("S3",),
        ),
    ]
    for n in range(4, 7):
        entries.append(CatalogEntry(
            f"sierpinski{n}",
            sierpinski(n),
            _claims(
                {A.T_D: True, A.T_HALF: False, A.T_OMEGA_BP: True, A.T_NWD: False},
                "finite truncation of the infinite chain: the maximum point is open, so T_NWD fails "
                "at every finite length",
            ),
            "finite stand-in for sierpinski_omega",
        ))
    return entries


def _khalimsky_entries() -> List[CatalogEntry]:
    return [
        CatalogEntry(
            "khalimsky3",
            khalimsky_interval(-1, 1),
            _claims(
                {A.T_CLOSED_OR_RO: True, A.T_CLOSED_OR_NWD: False},
                "odd singletons are regular open and not nowhere dense, the even singleton is closed",
                {A.T1: False, A.T_CLOSED_MEETS_RO: True, A.T_NWD_OR_RO: True, A.T_HALF: True,
                 A.T_D: True, A.T_OMEGA_BP: True, A.T_QUARTER: True, A.T0: True, A.T_INF_BP: True,
                 A.SYMMETRIC: False, A.SUBFIT: False, A.RO_SUBFIT: False, A.NODEC: True,
                 A.T_NWD: False},
            ),
            "one open segment -1, 0, 1 of the digital line",
        ),
        CatalogEntry(
            "khalimsky5",
            khalimsky_interval(-2, 2),
            _claims(
                {A.T_HALF: True, A.T_CLOSED_OR_RO: False, A.T_CLOSED_MEETS_RO: False, A.NODEC: True},
                "the even endpoint -2 sits in the interior of the closure of {-1}, "
                "so {-1} is open but not regular open",
            ),
            "segment -2..2 of the digital line; its subspace -1..1 is khalimsky3",
        ),
        CatalogEntry(
            "khalimsky_closed_segment",
            khalimsky_interval(0, 2),
            _claims(
                {A.T_NWD_OR_RO: False, A.T_HALF: True},
                "the odd point 1 is dense, so {1} is open but not regular open",
                {A.T_CLOSED_OR_NWD: False, A.T_CLOSED_MEETS_RO: False, A.RO_SUBFIT: True,
                 A.NODEC: True},
            ),
            "regular closed segment 0, 1, 2 of the digital line",
        ),
    ]


def _attachment() -> CatalogEntry:
    return CatalogEntry(
        "attachment5",
        attachment_space(),
        _claims(
            {A.T_CLOSED_MEETS_RO: True, A.T_CLOSED_OR_NWD: False, A.T_QUARTER: False},
            "{1_0} is the closed set {0, 1_0} meeting the regular open set {1_-1, 1_0, 1_1}; "
            "{-1} is open but neither closed nor nowhere dense, and {1_0} is neither closed nor open",
            {A.T1: False, A.T_CLOSED_OR_RO: False, A.T_NWD_OR_RO: True, A.T_HALF: False,
             A.T_D: True, A.T_OMEGA_BP: True, A.T0: True, A.T_INF_BP: True, A.SYMMETRIC: False,
             A.SUBFIT: False, A.RO_SUBFIT: False, A.NODEC: False, A.T_NWD: False},
        ),
        "points -1, 0, 1_-1, 1_0, 1_1 with subbasis {-1}, {1_-1, 1_0, 1_1}, {1_-1}, {1_1}",
    )


def _open_point_entries() -> List[CatalogEntry]:
    space = open_point_space(3)
    return [
        CatalogEntry(
            "open_point3",
            space,
            _claims(
                {A.T_OMEGA_BP: True},
                "0 is open and the other singletons are nowhere dense",
                {A.T_D: False, A.T0: False, A.T_HALF: False, A.T_NWD_OR_RO: False,
                 A.T_INF_BP: True, A.RO_SUBFIT: True, A.NODEC: False, A.T_NWD: False},
            ),
            "opens ∅, {0}, X on three points",
        ),
        CatalogEntry(
            "open_point3_tail",
            subspace(space, PointSet.of(3, [1, 2])),
            _claims(
                {A.T_INF_BP: False},
                "closed nowhere dense subspace {1, 2} of open_point3 is anti-discrete",
                {A.T_OMEGA_BP: False, A.SYMMETRIC: True},
            ),
            "subspace {1, 2} of open_point3",
        ),
    ]


def _discrete_entries() -> List[CatalogEntry]:
    everything = {axiom: True for axiom in AxiomId if axiom is not A.T_NWD}
    everything[A.T_NWD] = False
    return [
        CatalogEntry(
            f"discrete{n}",
            discrete_space(n),
            _claims({}, "", everything),
            "every set is open",
        )
        for n in (2, 3)
    ]


def _analytic_entries() -> List[CatalogEntry]:
    return [
        CatalogEntry(
            "kappa_space",
            None,
            _claims(
                {A.T0: True, A.T_QUARTER: True, A.T_INF_BP: True,
                 A.T_OMEGA_BP: False, A.T_D: False, A.T_HALF: False},
                "singletons are closed or intersections of kappa many open sets, "
                "never of fewer, and the non-closed ones are not nowhere dense",
            ),
            "uncountable example separating the G-levels; no finite surrogate exists",
        ),
        CatalogEntry(
            "sierpinski_omega",
            None,
            _claims(
                {A.T_D: True, A.T_NWD: True, A.T_QUARTER: False, A.T_CLOSED_MEETS_RO: False},
                "infinite chain: no maximum, so every singleton is nowhere dense",
            ),
            "alexandrov topology of an infinite increasing chain",
        ),
        CatalogEntry(
            "khalimsky_line",
            None,
            _claims(
                {A.T_CLOSED_OR_RO: True, A.T_CLOSED_OR_NWD: False},
                "even points are closed, odd points are regular open",
            ),
            "the digital line on all integers",
        ),
        CatalogEntry(
            "antidiscrete_times_interval",
            None,
            _claims(
                {A.T_NWD: True, A.T0: False},
                "the anti-discrete factor makes points indistinguishable; the interval makes "
                "every singleton nowhere dense",
            ),
            "anti-discrete doubleton times the unit interval",
        ),
        CatalogEntry(
            "khalimsky_square",
            None,
            _claims(
                {A.T_QUARTER: False, A.T_D: True, A.T_CLOSED_MEETS_RO: True},
                "mixed-parity points are locally closed but neither closed nor open",
            ),
            "product of the digital line with itself",
        ),
    ]


@lru_cache(maxsize=1)
def catalog() -> Tuple[CatalogEntry, ...]:
    """Every entry; finite entries first"""
    return tuple(
        [_antidiscrete_pair()]
        + _sierpinski_entries()
        + _khalimsky_entries()
        + [_attachment()]
        + _open_point_entries()
        + _discrete_entries()
        + _analytic_entries()
    )


def lookup(name: str) -> CatalogEntry:
    key = name.strip().lower()
    for entry in catalog():
        if key == entry.name.lower() or key in (alias.lower() for alias in entry.aliases):
            return entry
    raise UnknownCatalogEntry(
        f"no catalog entry '{name}'; known: {', '.join(e.name for e in catalog())}"
    )


def implied_claims(entry: CatalogEntry, finite: Optional[bool] = None) -> Dict[AxiomId, bool]:
    """Expected values closed under the diagram: truths flow forward, failures backward"""
    finite = not entry.analytic if finite is None else finite
    closure = implication_closure(finite)
    values = entry.expected_values()
    result = dict(values)
    for axiom, value in values.items():
        if value:
            result.update({b: True for b in closure.successors(axiom) if b not in values})
        else:
            result.update({a: False for a in closure.predecessors(axiom) if a not in values})
    return result
