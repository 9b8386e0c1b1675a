"""
Per-point classification and decision of every axiom on a FiniteSpace.

G-level singleton conditions (G_omega, G_delta, G_<kappa, G_inf) all reduce to
"the singleton is open" on a finite carrier, because a finite topology is
closed under arbitrary intersections. The checks for the G_inf row fold that
intersection explicitly and the checks for the open row test membership of
{x} among the opens, so the collapse is something the engine verifies.
"""
import logging
from dataclasses import dataclass
from functools import reduce
from itertools import product
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Tuple, Union

from ..catalog.constructors import subspace
from ..errors import CarrierMismatch, IncompleteVector
from ..models import FiniteSpace, PointSet, mask_members
from ..spaces.operators import (
    closed_masks,
    is_closed_mask,
    is_nodec,
    is_nwd_mask,
    regular_open_masks,
    ro_mask,
)
from .definitions import (
    DIAGRAM,
    AxiomId,
    implication_closure,
    resolve_axiom,
)

logger = logging.getLogger(__name__)

AxiomCheck = Callable[[FiniteSpace], bool]


@dataclass(frozen=True)
class PointClass:
    """How the singleton {x} sits in the space"""
    point: int
    is_closed: bool
    is_open: bool
    is_clopen: bool
    is_regular_open: bool
    is_nwd: bool
    is_locally_closed: bool
    min_nbhd: PointSet
    closure: PointSet


def _check_point(space: FiniteSpace, point: int):
    if not 0 <= point < space.carrier_size:
        raise CarrierMismatch(f"point {point} is outside a {space.carrier_size}-point carrier")


def classify_point(space: FiniteSpace, point: int) -> PointClass:
    _check_point(space, point)
    single = 1 << point
    closure = space.point_closure_masks[point]
    nbhd = space.min_nbhd_masks[point]
    closed = closure == single
    opened = nbhd == single
    return PointClass(
        point=point,
        is_closed=closed,
        is_open=opened,
        is_clopen=closed and opened,
        is_regular_open=ro_mask(space, single) == single,
        is_nwd=is_nwd_mask(space, single),
        is_locally_closed=closure & nbhd == single,
        min_nbhd=space.from_mask(nbhd),
        closure=space.from_mask(closure),
    )


# Singleton predicates

def _closed(space: FiniteSpace, x: int) -> bool:
    return space.point_closure_masks[x] == 1 << x


def _nwd(space: FiniteSpace, x: int) -> bool:
    return is_nwd_mask(space, 1 << x)


def _regular_open(space: FiniteSpace, x: int) -> bool:
    return ro_mask(space, 1 << x) == 1 << x


def _open(space: FiniteSpace, x: int) -> bool:
    return space.is_open_mask(1 << x)


def _g_infinity(space: FiniteSpace, x: int) -> bool:
    """{x} is the intersection of all open sets around x"""
    around = [bits for bits in space.open_masks if bits >> x & 1]
    return reduce(lambda a, b: a & b, around, space.full_mask) == 1 << x


# Axioms

def is_t1(space: FiniteSpace) -> bool:
    return all(_closed(space, x) for x in space.points)


def is_t_closed_or_nwd(space: FiniteSpace) -> bool:
    return all(_closed(space, x) or _nwd(space, x) for x in space.points)


def is_t_closed_or_ro(space: FiniteSpace) -> bool:
    return all(_closed(space, x) or _regular_open(space, x) for x in space.points)


def closed_meets_ro_witness(space: FiniteSpace, point: int) -> Optional[Tuple[PointSet, PointSet]]:
    """Closed F and regular open U with F ∩ U = {x}, searched exhaustively"""
    _check_point(space, point)
    for f, u in product(sorted(closed_masks(space)), sorted(regular_open_masks(space))):
        if f & u == 1 << point:
            return space.from_mask(f), space.from_mask(u)
    return None


def is_t_closed_meets_ro(space: FiniteSpace) -> bool:
    return all(closed_meets_ro_witness(space, x) is not None for x in space.points)


def is_t_nwd_or_ro(space: FiniteSpace) -> bool:
    return all(_nwd(space, x) or _regular_open(space, x) for x in space.points)


def is_t_half(space: FiniteSpace) -> bool:
    return all(_closed(space, x) or _open(space, x) for x in space.points)


def is_t_d(space: FiniteSpace) -> bool:
    """clo{x} \\ {x} is closed for every x"""
    return all(
        is_closed_mask(space, space.point_closure_masks[x] & ~(1 << x)) for x in space.points
    )


def is_t_omega_bp(space: FiniteSpace) -> bool:
    return all(_nwd(space, x) or _open(space, x) for x in space.points)


def is_t_quarter(space: FiniteSpace) -> bool:
    return all(_closed(space, x) or _g_infinity(space, x) for x in space.points)


def is_t0(space: FiniteSpace) -> bool:
    """Kolmogorov: distinct points have distinct closures"""
    return len(set(space.point_closure_masks)) == space.carrier_size


def is_t_inf_bp(space: FiniteSpace) -> bool:
    return all(_nwd(space, x) or _g_infinity(space, x) for x in space.points)


def is_t_nwd(space: FiniteSpace) -> bool:
    return all(_nwd(space, x) for x in space.points)


def _separated(space: FiniteSpace, x: int, y: int) -> bool:
    """Some open set contains x but not y"""
    return any(bits >> x & 1 and not bits >> y & 1 for bits in space.open_masks)


def is_symmetric(space: FiniteSpace) -> bool:
    return all(
        _separated(space, x, y) == _separated(space, y, x)
        for x in space.points
        for y in space.points
        if x < y
    )


def _subfit_over(space: FiniteSpace, neighbourhoods: Iterable[int]) -> bool:
    """For every x and every U ∋ x among the neighbourhoods: clo{y} ⊆ U for some y ∈ clo{x}"""
    closures = space.point_closure_masks
    for u in neighbourhoods:
        for x in mask_members(u):
            if not any(closures[y] & ~u == 0 for y in mask_members(closures[x])):
                return False
    return True


def is_subfit(space: FiniteSpace) -> bool:
    return _subfit_over(space, space.open_masks)


def is_ro_subfit(space: FiniteSpace) -> bool:
    return _subfit_over(space, regular_open_masks(space))


def is_infinity_subfit(space: FiniteSpace) -> bool:
    """Subfit with U ranging over the minimal neighbourhoods only"""
    closures = space.point_closure_masks
    return all(
        any(closures[y] & ~nbhd == 0 for y in mask_members(closures[x]))
        for x, nbhd in enumerate(space.min_nbhd_masks)
    )


def is_hereditarily_subfit(space: FiniteSpace) -> bool:
    return all(
        is_subfit(subspace(space, space.from_mask(bits)))
        for bits in space.all_subsets()
        if bits
    )


def is_t_quarter_by_separation(space: FiniteSpace) -> bool:
    """Every finite F and x ∉ F: x is separated from F or F is separated from x"""
    for f in space.all_subsets():
        for x in space.points:
            if f >> x & 1:
                continue
            x_from_f = any(u >> x & 1 and u & f == 0 for u in space.open_masks)
            f_from_x = any(f & ~u == 0 and not u >> x & 1 for u in space.open_masks)
            if not (x_from_f or f_from_x):
                return False
    return True


def t_quarter_three_point_criterion(space: FiniteSpace) -> bool:
    """No x, y, z other than x with x not separated from y and z not separated from x"""
    for x in space.points:
        for y in space.points:
            if y == x or _separated(space, x, y):
                continue
            for z in space.points:
                if z != x and not _separated(space, z, x):
                    return False
    return True


AXIOM_CHECKS: Dict[AxiomId, AxiomCheck] = {
    AxiomId.T1: is_t1,
    AxiomId.T_CLOSED_OR_NWD: is_t_closed_or_nwd,
    AxiomId.T_CLOSED_OR_RO: is_t_closed_or_ro,
    AxiomId.T_CLOSED_MEETS_RO: is_t_closed_meets_ro,
    AxiomId.T_NWD_OR_RO: is_t_nwd_or_ro,
    AxiomId.T_HALF: is_t_half,
    AxiomId.T_D: is_t_d,
    AxiomId.T_OMEGA_BP: is_t_omega_bp,
    AxiomId.T_QUARTER: is_t_quarter,
    AxiomId.T0: is_t0,
    AxiomId.T_INF_BP: is_t_inf_bp,
    AxiomId.SYMMETRIC: is_symmetric,
    AxiomId.SUBFIT: is_subfit,
    AxiomId.RO_SUBFIT: is_ro_subfit,
    AxiomId.NODEC: is_nodec,
    AxiomId.T_NWD: is_t_nwd,
}


def check_axiom(space: FiniteSpace, axiom: Union[AxiomId, str]) -> bool:
    """Decide one axiom; names and aliases are accepted"""
    return AXIOM_CHECKS[resolve_axiom(axiom)](space)


@dataclass(frozen=True)
class AxiomVector:
    """Truth value of every axiom for one space"""
    values: Mapping[AxiomId, bool]

    def __getitem__(self, axiom: AxiomId) -> bool:
        return self.values[axiom]

    def get(self, axiom: AxiomId) -> Optional[bool]:
        return self.values.get(axiom)

    def satisfies(self, satisfy: Iterable[AxiomId], violate: Iterable[AxiomId] = ()) -> bool:
        return all(self.values[a] for a in satisfy) and not any(self.values[a] for a in violate)

    def missing(self) -> List[AxiomId]:
        return [a for a in AxiomId if a not in self.values]

    def to_dict(self) -> Dict[str, bool]:
        return {a.value: self.values[a] for a in AxiomId if a in self.values}

    @classmethod
    def from_dict(cls, data: Mapping[str, bool]) -> "AxiomVector":
        return cls({resolve_axiom(name): bool(value) for name, value in data.items()})


def classify_space(space: FiniteSpace) -> AxiomVector:
    values = {axiom: AXIOM_CHECKS[axiom](space) for axiom in AxiomId}
    logger.debug("Classified %r: %s", space, [a.value for a, v in values.items() if v])
    return AxiomVector(values)


@dataclass(frozen=True)
class Violation:
    """An implication whose antecedent holds while its consequent fails"""
    antecedent: AxiomId
    consequent: AxiomId
    source: str = DIAGRAM

    def __str__(self) -> str:
        return f"{self.antecedent} ⇒ {self.consequent}"


def check_claims(values: Mapping[AxiomId, bool], finite: bool = True) -> List[Violation]:
    """Violations among the axioms present; absent axioms are not judged"""
    order = list(AxiomId)
    violations = []
    for a, b, data in implication_closure(finite).edges(data=True):
        if values.get(a) is True and values.get(b) is False:
            violations.append(Violation(a, b, data["source"]))
    return sorted(violations, key=lambda v: (order.index(v.antecedent), order.index(v.consequent)))


def check_diagram(vector: AxiomVector, finite: bool = True) -> List[Violation]:
    """Every violated implication; finite=False drops the finite-collapse equivalences"""
    missing = vector.missing()
    if missing:
        raise IncompleteVector(a.value for a in missing)
    return check_claims(vector.values, finite)
