"""
Topological operators and nearly open sets on a FiniteSpace.

Public functions take and return PointSet; the *_mask variants work on raw
int masks and back the exhaustive sweeps.
"""
from enum import Enum
from functools import lru_cache
from typing import FrozenSet, Optional, Tuple

from ..errors import CarrierMismatch, InternalInconsistency
from ..models import FiniteSpace, PointSet, mask_members
from .core import from_open_sets


class NearOpenKind(Enum):
    """The four classes of nearly open sets"""
    SEMI = "semi"
    PRE = "pre"
    ALPHA = "alpha"
    BETA = "beta"


def _bits(space: FiniteSpace, subset: PointSet) -> int:
    if subset.carrier_size != space.carrier_size:
        raise CarrierMismatch(f"{subset!r} does not live on the {space.carrier_size} points of the space")
    return subset.bits


# Mask-level operators

def closure_mask(space: FiniteSpace, bits: int) -> int:
    result = 0
    for x in mask_members(bits):
        result |= space.point_closure_masks[x]
    return result


def interior_mask(space: FiniteSpace, bits: int) -> int:
    result = 0
    for y, nbhd in enumerate(space.min_nbhd_masks):
        if nbhd & ~bits == 0:
            result |= 1 << y
    return result


def ro_mask(space: FiniteSpace, bits: int) -> int:
    return interior_mask(space, closure_mask(space, bits))


def is_nwd_mask(space: FiniteSpace, bits: int) -> bool:
    return ro_mask(space, bits) == 0


def is_dense_mask(space: FiniteSpace, bits: int) -> bool:
    return closure_mask(space, bits) == space.full_mask


def is_closed_mask(space: FiniteSpace, bits: int) -> bool:
    return space.is_open_mask(space.full_mask & ~bits)


def is_near_open_mask(space: FiniteSpace, bits: int, kind: NearOpenKind) -> bool:
    if kind is NearOpenKind.SEMI:
        bound = closure_mask(space, interior_mask(space, bits))
    elif kind is NearOpenKind.PRE:
        bound = interior_mask(space, closure_mask(space, bits))
    elif kind is NearOpenKind.ALPHA:
        bound = interior_mask(space, closure_mask(space, interior_mask(space, bits)))
    else:
        bound = closure_mask(space, interior_mask(space, closure_mask(space, bits)))
    return bits & ~bound == 0


# Families, cached per space

@lru_cache(maxsize=4096)
def closed_masks(space: FiniteSpace) -> FrozenSet[int]:
    return frozenset(space.full_mask & ~bits for bits in space.open_masks)


@lru_cache(maxsize=4096)
def regular_open_masks(space: FiniteSpace) -> FrozenSet[int]:
    """Regular open sets are exactly int(clo U) for U open"""
    return frozenset(ro_mask(space, bits) for bits in space.open_masks)


@lru_cache(maxsize=4096)
def nwd_masks(space: FiniteSpace) -> FrozenSet[int]:
    return frozenset(bits for bits in space.all_subsets() if is_nwd_mask(space, bits))


@lru_cache(maxsize=4096)
def dense_masks(space: FiniteSpace) -> FrozenSet[int]:
    return frozenset(bits for bits in space.all_subsets() if is_dense_mask(space, bits))


# PointSet API

def closure(space: FiniteSpace, subset: PointSet) -> PointSet:
    """Smallest closed superset"""
    return space.from_mask(closure_mask(space, _bits(space, subset)))


def interior(space: FiniteSpace, subset: PointSet) -> PointSet:
    """Largest open subset"""
    return space.from_mask(interior_mask(space, _bits(space, subset)))


def boundary(space: FiniteSpace, subset: PointSet) -> PointSet:
    return closure(space, subset) - interior(space, subset)


def is_open(space: FiniteSpace, subset: PointSet) -> bool:
    return space.is_open_mask(_bits(space, subset))


def is_closed(space: FiniteSpace, subset: PointSet) -> bool:
    return is_closed_mask(space, _bits(space, subset))


def is_nwd(space: FiniteSpace, subset: PointSet) -> bool:
    """Closure has empty interior"""
    return is_nwd_mask(space, _bits(space, subset))


def is_dense(space: FiniteSpace, subset: PointSet) -> bool:
    return is_dense_mask(space, _bits(space, subset))


def regular_open_interior(space: FiniteSpace, subset: PointSet) -> PointSet:
    """ro(A) = int(clo A)"""
    return space.from_mask(ro_mask(space, _bits(space, subset)))


def is_regular_open(space: FiniteSpace, subset: PointSet) -> bool:
    bits = _bits(space, subset)
    return ro_mask(space, bits) == bits


def is_near_open(space: FiniteSpace, subset: PointSet, kind: NearOpenKind) -> bool:
    """Operator form: SEMI A ⊆ clo int A, PRE A ⊆ int clo A, ALPHA A ⊆ int clo int A, BETA A ⊆ clo int clo A"""
    return is_near_open_mask(space, _bits(space, subset), kind)


def near_open_witness(
    space: FiniteSpace, subset: PointSet, kind: NearOpenKind
) -> Optional[Tuple[PointSet, ...]]:
    """Search for the open sets of the sandwich definition of each kind

    SEMI: U ⊆ A ⊆ clo U; PRE: A ⊆ U ⊆ clo A; ALPHA: U ⊆ A ⊆ V ⊆ clo U;
    BETA: A ⊆ clo U and U ⊆ clo A.
    """
    bits = _bits(space, subset)
    clo_a = closure_mask(space, bits)
    for u in sorted(space.open_masks):
        clo_u = closure_mask(space, u)
        if kind is NearOpenKind.SEMI and u & ~bits == 0 and bits & ~clo_u == 0:
            return (space.from_mask(u),)
        if kind is NearOpenKind.PRE and bits & ~u == 0 and u & ~clo_a == 0:
            return (space.from_mask(u),)
        if kind is NearOpenKind.BETA and bits & ~clo_u == 0 and u & ~clo_a == 0:
            return (space.from_mask(u),)
        if kind is NearOpenKind.ALPHA and u & ~bits == 0:
            for v in sorted(space.open_masks):
                if bits & ~v == 0 and v & ~clo_u == 0:
                    return space.from_mask(u), space.from_mask(v)
    return None


def open_dense_decomposition(space: FiniteSpace, subset: PointSet) -> Optional[Tuple[PointSet, PointSet]]:
    """Open U and dense D with A = U ∩ D, if any"""
    bits = _bits(space, subset)
    for u in sorted(space.open_masks):
        if bits & ~u:
            continue
        for d in sorted(dense_masks(space)):
            if u & d == bits:
                return space.from_mask(u), space.from_mask(d)
    return None


def alpha_open_masks(space: FiniteSpace) -> FrozenSet[int]:
    return frozenset(
        bits for bits in space.all_subsets() if is_near_open_mask(space, bits, NearOpenKind.ALPHA)
    )


def alpha_modification(space: FiniteSpace) -> FiniteSpace:
    """Topology of α-open sets, built twice: by the operator formula and as U \\ N"""
    by_formula = alpha_open_masks(space)
    by_difference = frozenset(u & ~n for u in space.open_masks for n in nwd_masks(space))
    if by_formula != by_difference:
        raise InternalInconsistency(
            f"α-open sets of {space!r} differ between int-clo-int and U \\ N constructions"
        )
    return from_open_sets(
        space.carrier_size, (space.from_mask(bits) for bits in by_formula), space.labels
    )


def is_nodec(space: FiniteSpace) -> bool:
    """Every nowhere dense set is closed.

    Nowhere dense sets are exactly the unions of nowhere dense points, so it is
    enough that every nowhere dense point is closed.
    """
    return all(
        space.point_closure_masks[x] == 1 << x
        for x in space.points
        if is_nwd_mask(space, 1 << x)
    )


def is_nodec_by_subsets(space: FiniteSpace) -> bool:
    """Same decision over the whole power set; bounded by the power-set limit"""
    return all(is_closed_mask(space, bits) for bits in nwd_masks(space))
