"""
Core data models for the sepax engine.

Points of an n-point carrier are the integers 0..n-1 and every subset is an
int bitmask, so a whole set fits one machine word for n <= 64.
"""
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import CarrierMismatch, CarrierTooLarge, InvalidInput, InvalidPreorder, NotATopology

MAX_CARRIER = 64
CANONICAL_LIMIT = 7
ENUMERATION_LIMIT = 5
POWERSET_LIMIT = 20


def mask_members(bits: int) -> Tuple[int, ...]:
    """Indices of the set bits, ascending"""
    members = []
    index = 0
    while bits:
        if bits & 1:
            members.append(index)
        bits >>= 1
        index += 1
    return tuple(members)


def mask_of(members: Iterable[int]) -> int:
    bits = 0
    for member in members:
        bits |= 1 << member
    return bits


def popcount(bits: int) -> int:
    return bin(bits).count("1")


def compress_mask(bits: int, within: int) -> int:
    """Re-index bits & within onto the points of within, order preserved"""
    result = 0
    for new_index, old_index in enumerate(mask_members(within)):
        if bits >> old_index & 1:
            result |= 1 << new_index
    return result


def expand_mask(bits: int, within: int) -> int:
    """Inverse of compress_mask: lift a subspace mask back to the carrier"""
    result = 0
    for new_index, old_index in enumerate(mask_members(within)):
        if bits >> new_index & 1:
            result |= 1 << old_index
    return result


def permute_mask(bits: int, permutation: Sequence[int]) -> int:
    """Send point i to permutation[i]"""
    result = 0
    for old_index in mask_members(bits):
        result |= 1 << permutation[old_index]
    return result


def _check_carrier(carrier_size: int):
    if carrier_size < 1:
        raise InvalidInput(f"carrier must have at least one point, got {carrier_size}")
    if carrier_size > MAX_CARRIER:
        raise CarrierTooLarge(carrier_size, MAX_CARRIER, "a carrier")


@dataclass(frozen=True)
class PointSet:
    """Subset of the carrier {0..carrier_size-1}"""
    carrier_size: int
    bits: int = 0

    def __post_init__(self):
        _check_carrier(self.carrier_size)
        if self.bits < 0 or self.bits >> self.carrier_size:
            raise CarrierMismatch(
                f"members {mask_members(abs(self.bits))} do not fit a {self.carrier_size}-point carrier"
            )

    @classmethod
    def empty(cls, carrier_size: int) -> "PointSet":
        return cls(carrier_size, 0)

    @classmethod
    def full(cls, carrier_size: int) -> "PointSet":
        return cls(carrier_size, (1 << carrier_size) - 1)

    @classmethod
    def of(cls, carrier_size: int, members: Iterable[int]) -> "PointSet":
        members = list(members)
        for member in members:
            if not 0 <= member < carrier_size:
                raise CarrierMismatch(f"point {member} is outside a {carrier_size}-point carrier")
        return cls(carrier_size, mask_of(members))

    @classmethod
    def singleton(cls, carrier_size: int, point: int) -> "PointSet":
        return cls.of(carrier_size, [point])

    @property
    def members(self) -> Tuple[int, ...]:
        return mask_members(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return popcount(self.bits)

    def __contains__(self, point: object) -> bool:
        return isinstance(point, int) and 0 <= point < self.carrier_size and bool(self.bits >> point & 1)

    def __repr__(self) -> str:
        return f"PointSet({{{', '.join(map(str, self.members))}}}/{self.carrier_size})"

    def _same_carrier(self, other: "PointSet"):
        if self.carrier_size != other.carrier_size:
            raise CarrierMismatch(
                f"cannot combine sets on {self.carrier_size} and {other.carrier_size} points"
            )

    def __or__(self, other: "PointSet") -> "PointSet":
        self._same_carrier(other)
        return PointSet(self.carrier_size, self.bits | other.bits)

    def __and__(self, other: "PointSet") -> "PointSet":
        self._same_carrier(other)
        return PointSet(self.carrier_size, self.bits & other.bits)

    def __sub__(self, other: "PointSet") -> "PointSet":
        self._same_carrier(other)
        return PointSet(self.carrier_size, self.bits & ~other.bits)

    def complement(self) -> "PointSet":
        return PointSet(self.carrier_size, ((1 << self.carrier_size) - 1) & ~self.bits)

    def issubset(self, other: "PointSet") -> bool:
        self._same_carrier(other)
        return self.bits & ~other.bits == 0

    def __le__(self, other: "PointSet") -> bool:
        return self.issubset(other)

    def is_empty(self) -> bool:
        return self.bits == 0

    def restrict(self, within: "PointSet") -> "PointSet":
        """self ∩ within, re-indexed onto the subspace carrier of within"""
        self._same_carrier(within)
        if within.is_empty():
            raise InvalidInput("cannot restrict to the empty set")
        return PointSet(len(within), compress_mask(self.bits, within.bits))

    def expand(self, within: "PointSet") -> "PointSet":
        """Lift a set on the subspace carrier of within back to the full carrier"""
        if self.carrier_size != len(within):
            raise CarrierMismatch(f"{self!r} does not live on the {len(within)} points of {within!r}")
        return PointSet(within.carrier_size, expand_mask(self.bits, within.bits))

    def permute(self, permutation: Sequence[int]) -> "PointSet":
        return PointSet(self.carrier_size, permute_mask(self.bits, permutation))

    def describe(self, labels: Optional[Sequence[str]] = None) -> str:
        names = [labels[x] if labels else str(x) for x in self.members]
        return "{" + ",".join(names) + "}"


@dataclass(frozen=True)
class Preorder:
    """Reflexive transitive relation; up[x] is the mask of all y with x <= y"""
    carrier_size: int
    up: Tuple[int, ...]

    def __post_init__(self):
        _check_carrier(self.carrier_size)
        object.__setattr__(self, "up", tuple(self.up))
        if len(self.up) != self.carrier_size:
            raise InvalidPreorder(f"expected {self.carrier_size} rows, got {len(self.up)}")
        full = (1 << self.carrier_size) - 1
        for x, row in enumerate(self.up):
            if row & ~full:
                raise InvalidPreorder(f"row {x} mentions points outside the carrier")
            if not row >> x & 1:
                raise InvalidPreorder(f"not reflexive at {x}")
        for x, row in enumerate(self.up):
            for y in mask_members(row):
                if self.up[y] & ~row:
                    z = mask_members(self.up[y] & ~row)[0]
                    raise InvalidPreorder(f"not transitive: {x} <= {y} <= {z} but not {x} <= {z}")

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[bool]]) -> "Preorder":
        rows = [mask_of(y for y, related in enumerate(row) if related) for row in matrix]
        return cls(len(rows), tuple(rows))

    @classmethod
    def generated_by(cls, carrier_size: int, pairs: Iterable[Tuple[int, int]]) -> "Preorder":
        """Reflexive transitive closure of the given (x, y) pairs meaning x <= y"""
        rows = [1 << x for x in range(carrier_size)]
        for x, y in pairs:
            rows[x] |= 1 << y
        changed = True
        while changed:
            changed = False
            for x in range(carrier_size):
                grown = rows[x]
                for y in mask_members(rows[x]):
                    grown |= rows[y]
                if grown != rows[x]:
                    rows[x] = grown
                    changed = True
        return cls(carrier_size, tuple(rows))

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def matrix(self) -> Tuple[Tuple[bool, ...], ...]:
        return tuple(
            tuple(self.leq(x, y) for y in range(self.carrier_size)) for x in range(self.carrier_size)
        )

    def is_partial_order(self) -> bool:
        return all(
            not (self.leq(x, y) and self.leq(y, x))
            for x, y in combinations(range(self.carrier_size), 2)
        )


@dataclass(frozen=True)
class FiniteSpace:
    """Finite topological space given by its explicit family of open sets"""
    carrier_size: int
    opens: Tuple[PointSet, ...]
    labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        _check_carrier(self.carrier_size)
        for open_set in self.opens:
            if open_set.carrier_size != self.carrier_size:
                raise CarrierMismatch(
                    f"open set {open_set!r} does not live on {self.carrier_size} points"
                )
        canonical = tuple(sorted(set(self.opens), key=lambda s: (len(s), s.bits)))
        object.__setattr__(self, "opens", canonical)
        if self.labels is not None:
            labels = tuple(str(label) for label in self.labels)
            if len(labels) != self.carrier_size:
                raise InvalidInput(f"expected {self.carrier_size} point labels, got {len(labels)}")
            object.__setattr__(self, "labels", labels)
        self._validate()

    def _validate(self):
        masks = self.open_masks
        if 0 not in masks:
            raise NotATopology("the empty set is not open", offending=())
        if self.full_mask not in masks:
            raise NotATopology("the whole carrier is not open", offending=tuple(range(self.carrier_size)))
        ordered = sorted(masks)
        for i, a in enumerate(ordered):
            for b in ordered[i + 1:]:
                if a | b not in masks:
                    raise NotATopology(
                        f"union of {self._describe(a)} and {self._describe(b)} is not open",
                        offending=(a, b),
                    )
                if a & b not in masks:
                    raise NotATopology(
                        f"intersection of {self._describe(a)} and {self._describe(b)} is not open",
                        offending=(a, b),
                    )

    def _describe(self, bits: int) -> str:
        return PointSet(self.carrier_size, bits).describe(self.labels)

    @cached_property
    def open_masks(self) -> frozenset:
        return frozenset(s.bits for s in self.opens)

    @property
    def full_mask(self) -> int:
        return (1 << self.carrier_size) - 1

    @property
    def points(self) -> range:
        return range(self.carrier_size)

    @cached_property
    def min_nbhd_masks(self) -> Tuple[int, ...]:
        """Smallest open set around each point"""
        result = []
        for x in self.points:
            nbhd = self.full_mask
            for bits in self.open_masks:
                if bits >> x & 1:
                    nbhd &= bits
            result.append(nbhd)
        return tuple(result)

    @cached_property
    def point_closure_masks(self) -> Tuple[int, ...]:
        """clo{x} = points whose minimal neighbourhood contains x"""
        return tuple(
            mask_of(y for y in self.points if self.min_nbhd_masks[y] >> x & 1) for x in self.points
        )

    def point_set(self, members: Iterable[int]) -> PointSet:
        return PointSet.of(self.carrier_size, members)

    def from_mask(self, bits: int) -> PointSet:
        return PointSet(self.carrier_size, bits)

    def is_open_mask(self, bits: int) -> bool:
        return bits in self.open_masks

    def label(self, point: int) -> str:
        return self.labels[point] if self.labels else str(point)

    def describe(self, subset: PointSet) -> str:
        return subset.describe(self.labels)

    def with_labels(self, labels: Optional[Sequence[str]]) -> "FiniteSpace":
        return FiniteSpace(self.carrier_size, self.opens, tuple(labels) if labels else None)

    def all_subsets(self) -> List[int]:
        """Every subset mask; refuses carriers where this is unaffordable"""
        if self.carrier_size > POWERSET_LIMIT:
            raise CarrierTooLarge(self.carrier_size, POWERSET_LIMIT, "power-set sweeps")
        return list(range(1 << self.carrier_size))

    def __repr__(self) -> str:
        opens = ", ".join(self.describe(s) for s in self.opens)
        return f"FiniteSpace(n={self.carrier_size}, opens=[{opens}])"
