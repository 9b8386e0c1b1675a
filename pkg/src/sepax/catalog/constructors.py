"""
Space constructors: subspaces, binary products and the named families.
"""
from typing import List

from ..errors import CarrierTooLarge, EmptySubspace, InvalidInput
from ..models import MAX_CARRIER, FiniteSpace, PointSet, Preorder, mask_of
from ..spaces.algebras import SetFamily, restrict_family
from ..spaces.core import from_open_sets, from_preorder, from_subbasis, union_closure


def subspace(space: FiniteSpace, subset: PointSet) -> FiniteSpace:
    """Subspace topology on subset, points re-indexed in increasing order"""
    if subset.carrier_size != space.carrier_size:
        raise InvalidInput(f"{subset!r} does not live on the {space.carrier_size} points of the space")
    if subset.is_empty():
        raise EmptySubspace("a subspace needs at least one point")
    traces = restrict_family(SetFamily(space.carrier_size, space.opens), subset)
    labels = [space.label(x) for x in subset] if space.labels else None
    return from_open_sets(len(subset), traces.sets, labels)


def product_point(a: FiniteSpace, b: FiniteSpace, x: int, y: int) -> int:
    """Row-major index of (x, y)"""
    return x * b.carrier_size + y


def _rectangle(a: FiniteSpace, b: FiniteSpace, u: int, v: int) -> int:
    bits = 0
    for x in range(a.carrier_size):
        if u >> x & 1:
            bits |= v << (x * b.carrier_size)
    return bits


def rectangle_pairs(a: FiniteSpace, b: FiniteSpace) -> int:
    """Number of open rectangles U × V before deduplication"""
    return len(a.opens) * len(b.opens)


def product(a: FiniteSpace, b: FiniteSpace) -> FiniteSpace:
    """Binary product; opens are all unions of open rectangles"""
    size = a.carrier_size * b.carrier_size
    if size > MAX_CARRIER:
        raise CarrierTooLarge(size, MAX_CARRIER, "products")
    rectangles = {_rectangle(a, b, u, v) for u in a.open_masks for v in b.open_masks}
    labels = None
    if a.labels or b.labels:
        labels = [f"({a.label(x)},{b.label(y)})" for x in a.points for y in b.points]
    opens = (PointSet(size, bits) for bits in union_closure(rectangles))
    return from_open_sets(size, opens, labels)


def sierpinski(carrier_size: int) -> FiniteSpace:
    """Chain 0 <= 1 <= ... <= n-1; the opens are the final segments"""
    if carrier_size > MAX_CARRIER:
        raise CarrierTooLarge(carrier_size, MAX_CARRIER, "sierpinski spaces")
    up = tuple(mask_of(range(x, carrier_size)) for x in range(carrier_size))
    return from_preorder(Preorder(carrier_size, up))


def khalimsky_interval(start: int, stop: int) -> FiniteSpace:
    """Integers start..stop as a subspace of the digital line

    The line has subbasis {2k-1, 2k, 2k+1}: even points are closed and odd
    points are open.
    """
    if start > stop:
        raise InvalidInput(f"empty interval [{start}, {stop}]")
    size = stop - start + 1
    if size > MAX_CARRIER:
        raise CarrierTooLarge(size, MAX_CARRIER, "khalimsky intervals")
    subbasis: List[PointSet] = []
    first_even = start - 1 + (start - 1) % 2
    for centre in range(first_even, stop + 2, 2):
        members = [z - start for z in (centre - 1, centre, centre + 1) if start <= z <= stop]
        subbasis.append(PointSet.of(size, members))
    return from_subbasis(size, subbasis, [str(z) for z in range(start, stop + 1)])


def attachment_space() -> FiniteSpace:
    """The open segment {1_-1, 1_0, 1_1} glued to the closed points -1 and 0

    Points are -1, 0, 1_-1, 1_0, 1_1 in that order.
    """
    subbasis = [PointSet.of(5, members) for members in ([0], [2, 3, 4], [2], [4])]
    return from_subbasis(5, subbasis, ["-1", "0", "1_-1", "1_0", "1_1"])


def open_point_space(carrier_size: int = 3) -> FiniteSpace:
    """Point 0 open, the only other nonempty open set is the whole carrier"""
    if carrier_size < 2:
        raise InvalidInput("an open point space needs at least two points")
    full = PointSet.full(carrier_size)
    return from_open_sets(carrier_size, [PointSet.empty(carrier_size), PointSet.singleton(carrier_size, 0), full])
