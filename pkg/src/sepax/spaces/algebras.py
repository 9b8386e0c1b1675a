"""
Brute-force generation of set algebras on finite carriers.

On a finite carrier every algebra is automatically κ-additive for every κ,
and every G_{<κ}-set is open, so the transfinite stages used for infinite
spaces collapse: the constructible algebra is every κ-Borel algebra and the
algebra generated by opens and nowhere dense sets is every κ-BP algebra.
"""
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, Iterator, List, Tuple

from ..errors import CarrierMismatch, EmptySubspace
from ..models import FiniteSpace, PointSet, compress_mask, mask_members
from .operators import nwd_masks


@dataclass(frozen=True)
class SetFamily:
    """Deduplicated family of subsets of one carrier"""
    carrier_size: int
    sets: Tuple[PointSet, ...]

    def __post_init__(self):
        for member in self.sets:
            if member.carrier_size != self.carrier_size:
                raise CarrierMismatch(f"{member!r} does not live on {self.carrier_size} points")
        ordered = tuple(sorted(set(self.sets), key=lambda s: (len(s), s.bits)))
        object.__setattr__(self, "sets", ordered)

    @classmethod
    def from_masks(cls, carrier_size: int, masks: Iterable[int]) -> "SetFamily":
        return cls(carrier_size, tuple(PointSet(carrier_size, bits) for bits in set(masks)))

    @cached_property
    def masks(self) -> FrozenSet[int]:
        return frozenset(member.bits for member in self.sets)

    def __contains__(self, subset: object) -> bool:
        return (
            isinstance(subset, PointSet)
            and subset.carrier_size == self.carrier_size
            and subset.bits in self.masks
        )

    def __iter__(self) -> Iterator[PointSet]:
        return iter(self.sets)

    def __len__(self) -> int:
        return len(self.sets)


@dataclass(frozen=True)
class GeneratedAlgebra:
    """Least algebra containing base"""
    base: SetFamily
    sets: SetFamily

    def __contains__(self, subset: object) -> bool:
        return subset in self.sets

    def __len__(self) -> int:
        return len(self.sets)

    def contains_mask(self, bits: int) -> bool:
        return bits in self.sets.masks


def _fixpoint(full: int, seeds: Iterable[int]) -> FrozenSet[int]:
    """Worklist closure under complement and pairwise union"""
    algebra = set()
    pending = list({0, full} | set(seeds))
    while pending:
        current = pending.pop()
        if current in algebra:
            continue
        algebra.add(current)
        candidates = [full & ~current] + [current | other for other in algebra]
        pending.extend(m for m in candidates if m not in algebra)
    return frozenset(algebra)


def naive_fixpoint(full: int, seeds: Iterable[int]) -> FrozenSet[int]:
    """Round-based closure under complement, union and intersection; used as a cross-check"""
    family = frozenset({0, full} | set(seeds))
    while True:
        grown = set(family)
        for a in family:
            grown.add(full & ~a)
            for b in family:
                grown.add(a | b)
                grown.add(a & b)
        if grown == family:
            return family
        family = frozenset(grown)


def generate_algebra(carrier_size: int, base: SetFamily) -> GeneratedAlgebra:
    """Least family containing base, ∅ and X, closed under complement and union"""
    if base.carrier_size != carrier_size:
        raise CarrierMismatch(f"base family lives on {base.carrier_size} points, not {carrier_size}")
    full = PointSet.full(carrier_size).bits
    return GeneratedAlgebra(base, SetFamily.from_masks(carrier_size, _fixpoint(full, base.masks)))


def constructible_algebra(space: FiniteSpace) -> GeneratedAlgebra:
    """Algebra generated by the open sets"""
    return generate_algebra(space.carrier_size, SetFamily(space.carrier_size, space.opens))


def bp_algebra(space: FiniteSpace) -> GeneratedAlgebra:
    """Algebra generated by the open and the nowhere dense sets"""
    base = SetFamily.from_masks(space.carrier_size, space.open_masks | nwd_masks(space))
    return generate_algebra(space.carrier_size, base)


def nwd_ideal(space: FiniteSpace) -> SetFamily:
    return SetFamily.from_masks(space.carrier_size, nwd_masks(space))


def restrict_family(family: SetFamily, within: PointSet) -> SetFamily:
    """{A ∩ B : A in family}, re-indexed onto the points of B in increasing order"""
    if within.carrier_size != family.carrier_size:
        raise CarrierMismatch(f"{within!r} does not live on {family.carrier_size} points")
    if within.is_empty():
        raise EmptySubspace("cannot restrict a family to the empty set")
    return SetFamily.from_masks(
        len(within), (compress_mask(bits, within.bits) for bits in family.masks)
    )


def algebra_atoms(algebra: GeneratedAlgebra) -> List[PointSet]:
    """Minimal nonempty members; every member is a union of atoms"""
    masks = [bits for bits in algebra.sets.masks if bits]
    atoms = [
        bits for bits in masks
        if not any(other != bits and other & ~bits == 0 for other in masks)
    ]
    carrier_size = algebra.sets.carrier_size
    return sorted((PointSet(carrier_size, bits) for bits in atoms), key=lambda s: mask_members(s.bits))


def is_power_set(family: SetFamily) -> bool:
    return len(family) == 1 << family.carrier_size
