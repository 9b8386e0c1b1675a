"""
Construction, validation and canonicalization of finite topological spaces.

On a finite carrier a topology and its specialization preorder determine each
other: the opens are exactly the up-sets and x <= y iff x lies in clo{y}.
"""
from itertools import permutations, product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..errors import CarrierMismatch, CarrierTooLarge
from ..models import (
    CANONICAL_LIMIT,
    FiniteSpace,
    PointSet,
    Preorder,
    permute_mask,
    popcount,
)

CanonicalKey = Tuple[int, Tuple[int, ...]]


def _masks_for(carrier_size: int, family: Iterable[PointSet]) -> List[int]:
    masks = []
    for member in family:
        if member.carrier_size != carrier_size:
            raise CarrierMismatch(
                f"{member!r} does not live on a {carrier_size}-point carrier"
            )
        masks.append(member.bits)
    return masks


def union_closure(masks: Iterable[int]) -> set:
    """All unions of the given masks, the empty union included"""
    closed = {0}
    frontier = list(set(masks))
    while frontier:
        current = frontier.pop()
        if current in closed:
            continue
        fresh = [current | other for other in closed]
        closed.add(current)
        frontier.extend(m for m in fresh if m not in closed)
    return closed


def intersection_closure(masks: Iterable[int], full: int) -> set:
    """All finite intersections of the given masks, the empty one (full) included"""
    closed = {full}
    frontier = list(set(masks))
    while frontier:
        current = frontier.pop()
        if current in closed:
            continue
        fresh = [current & other for other in closed]
        closed.add(current)
        frontier.extend(m for m in fresh if m not in closed)
    return closed


def _space(carrier_size: int, masks: Iterable[int], labels: Optional[Sequence[str]]) -> FiniteSpace:
    opens = tuple(PointSet(carrier_size, bits) for bits in set(masks))
    return FiniteSpace(carrier_size, opens, tuple(labels) if labels else None)


def from_open_sets(
    carrier_size: int, family: Iterable[PointSet], labels: Optional[Sequence[str]] = None
) -> FiniteSpace:
    """Validate an explicit family of open sets; it must already be a topology"""
    masks = _masks_for(carrier_size, family)
    return _space(carrier_size, masks, labels)


def from_subbasis(
    carrier_size: int, family: Iterable[PointSet], labels: Optional[Sequence[str]] = None
) -> FiniteSpace:
    """Topology generated by a subbasis: unions of finite intersections"""
    full = PointSet.full(carrier_size).bits
    basis = intersection_closure(_masks_for(carrier_size, family), full)
    return _space(carrier_size, union_closure(basis), labels)


def from_preorder(preorder: Preorder, labels: Optional[Sequence[str]] = None) -> FiniteSpace:
    """Alexandrov topology: the open sets are the up-sets"""
    return _space(preorder.carrier_size, union_closure(preorder.up), labels)


def specialization_preorder(space: FiniteSpace) -> Preorder:
    """x <= y iff x ∈ clo{y}, i.e. y lies in the minimal neighbourhood of x"""
    return Preorder(space.carrier_size, space.min_nbhd_masks)


def min_nbhd(space: FiniteSpace, point: int) -> PointSet:
    """Smallest open set containing the point"""
    if not 0 <= point < space.carrier_size:
        raise CarrierMismatch(f"point {point} is outside a {space.carrier_size}-point carrier")
    return space.from_mask(space.min_nbhd_masks[point])


def discrete_space(carrier_size: int) -> FiniteSpace:
    return from_preorder(Preorder(carrier_size, tuple(1 << x for x in range(carrier_size))))


def antidiscrete_space(carrier_size: int) -> FiniteSpace:
    full = (1 << carrier_size) - 1
    return from_preorder(Preorder(carrier_size, (full,) * carrier_size))


def relabel(space: FiniteSpace, permutation: Sequence[int]) -> FiniteSpace:
    """Image of the space under the bijection x -> permutation[x]"""
    if sorted(permutation) != list(space.points):
        raise CarrierMismatch(f"{list(permutation)} is not a permutation of {space.carrier_size} points")
    labels = None
    if space.labels:
        moved = [""] * space.carrier_size
        for old, new in enumerate(permutation):
            moved[new] = space.labels[old]
        labels = moved
    return _space(space.carrier_size, (permute_mask(s.bits, permutation) for s in space.opens), labels)


def _admissible_permutations(space: FiniteSpace) -> Iterable[Tuple[int, ...]]:
    """Relabelings that list points by (up-set size, down-set size)"""
    n = space.carrier_size
    up = space.min_nbhd_masks
    down = space.point_closure_masks
    invariant = {x: (popcount(up[x]), popcount(down[x])) for x in range(n)}
    classes: Dict[Tuple[int, int], List[int]] = {}
    for x in range(n):
        classes.setdefault(invariant[x], []).append(x)
    blocks = [classes[key] for key in sorted(classes)]
    for arrangement in product(*(permutations(block) for block in blocks)):
        permutation = [0] * n
        position = 0
        for block in arrangement:
            for old in block:
                permutation[old] = position
                position += 1
        yield tuple(permutation)


def _encode(space: FiniteSpace, permutation: Sequence[int]) -> Tuple[int, ...]:
    rows = [0] * space.carrier_size
    for old, row in enumerate(space.min_nbhd_masks):
        rows[permutation[old]] = permute_mask(row, permutation)
    return tuple(rows)


def _best_permutation(space: FiniteSpace) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    if space.carrier_size > CANONICAL_LIMIT:
        raise CarrierTooLarge(space.carrier_size, CANONICAL_LIMIT, "canonicalization")
    best_code: Optional[Tuple[int, ...]] = None
    best_permutation: Tuple[int, ...] = ()
    for permutation in _admissible_permutations(space):
        code = _encode(space, permutation)
        if best_code is None or code < best_code:
            best_code, best_permutation = code, permutation
    assert best_code is not None
    return best_code, best_permutation


def canonical_key(space: FiniteSpace) -> CanonicalKey:
    """Total, relabeling-invariant encoding: (carrier size, least up-set tuple)"""
    code, _ = _best_permutation(space)
    return space.carrier_size, code


def canonical_form(space: FiniteSpace) -> FiniteSpace:
    """Representative of the homeomorphism class with the least encoding"""
    _, permutation = _best_permutation(space)
    return relabel(space, permutation)


def is_homeomorphic(a: FiniteSpace, b: FiniteSpace) -> bool:
    for space in (a, b):
        if space.carrier_size > CANONICAL_LIMIT:
            raise CarrierTooLarge(space.carrier_size, CANONICAL_LIMIT, "homeomorphism tests")
    if a.carrier_size != b.carrier_size or len(a.opens) != len(b.opens):
        return False
    return canonical_key(a) == canonical_key(b)


def homeomorphism(a: FiniteSpace, b: FiniteSpace) -> Optional[Tuple[int, ...]]:
    """A point bijection carrying a onto b, or None"""
    if not is_homeomorphic(a, b):
        return None
    _, to_canonical_a = _best_permutation(a)
    _, to_canonical_b = _best_permutation(b)
    from_canonical_b = [0] * b.carrier_size
    for old, new in enumerate(to_canonical_b):
        from_canonical_b[new] = old
    return tuple(from_canonical_b[to_canonical_a[x]] for x in a.points)
