"""
Named properties verified exhaustively over small topologies, and the
whole-diagram sweep.

Each check walks every labeled topology on 1..n points and returns a
description of the first counterexample, or None.
"""
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product as all_tuples
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from ..axioms.classifier import (
    Violation,
    check_axiom,
    check_claims,
    check_diagram,
    classify_point,
    classify_space,
    is_hereditarily_subfit,
    is_infinity_subfit,
    is_t_quarter_by_separation,
    t_quarter_three_point_criterion,
)
from ..axioms.definitions import AxiomId
from ..catalog.constructors import attachment_space, product, product_point, sierpinski, subspace
from ..catalog.entries import catalog
from ..config import EngineConfig
from ..errors import CarrierTooLarge, InvalidInput, UnknownProperty
from ..models import FiniteSpace, compress_mask
from ..spaces.algebras import (
    SetFamily,
    bp_algebra,
    constructible_algebra,
    generate_algebra,
    naive_fixpoint,
    restrict_family,
)
from ..spaces.core import is_homeomorphic
from ..spaces.operators import (
    NearOpenKind,
    alpha_modification,
    closure_mask,
    dense_masks,
    interior_mask,
    is_closed_mask,
    is_near_open_mask,
    is_nodec,
    is_nodec_by_subsets,
    is_nwd_mask,
    near_open_witness,
    nwd_masks,
    open_dense_decomposition,
    regular_open_masks,
    ro_mask,
)
from .enumeration import ENUMERATION_LIMIT, homeomorphism_classes, labeled_spaces, spaces_up_to

logger = logging.getLogger(__name__)

A = AxiomId
PROPOSITION_LIMIT = 4
FACTOR_LIMIT = 3

Check = Callable[[int], Optional[str]]


@dataclass(frozen=True)
class Proposition:
    name: str
    description: str
    check: Check


PROPOSITIONS: Dict[str, Proposition] = {}


def proposition(name: str, description: str) -> Callable[[Check], Check]:
    """Register a check under a stable name"""
    def register(check: Check) -> Check:
        PROPOSITIONS[name] = Proposition(name, description, check)
        return check
    return register


@dataclass(frozen=True)
class PropositionResult:
    name: str
    passed: bool
    counterexample: Optional[str] = None
    elapsed: float = 0.0


@dataclass(frozen=True)
class PropositionReport:
    n: int
    results: Tuple[PropositionResult, ...]

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    @property
    def failures(self) -> List[PropositionResult]:
        return [result for result in self.results if not result.passed]


@dataclass(frozen=True)
class DiagramReport:
    n: int
    spaces_checked: int
    spaces_at_n: int
    violations: Tuple[Tuple[FiniteSpace, Violation], ...] = field(default_factory=tuple)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations


# Helpers

def _nonempty(space: FiniteSpace) -> Iterator[int]:
    return (bits for bits in space.all_subsets() if bits)


def _at(space: FiniteSpace, bits: Optional[int] = None) -> str:
    where = f"{space!r}"
    if bits is not None:
        where += f" at {space.describe(space.from_mask(bits))}"
    return where


def _sub(space: FiniteSpace, bits: int) -> FiniteSpace:
    return subspace(space, space.from_mask(bits))


def _factors(n: int) -> List[FiniteSpace]:
    return [s for size in range(1, min(n, FACTOR_LIMIT) + 1) for s in homeomorphism_classes(size)]


# Operators

@proposition("interior_closure_duality", "int A = X \\ clo(X \\ A)")
def _interior_closure_duality(n: int) -> Optional[str]:
    for space in spaces_up_to(n):
        full = space.full_mask
        for bits in space.all_subsets():
            if interior_mask(space, bits) != full & ~closure_mask(space, full & ~bits):
                return _at(space, bits)
    return None


@proposition("near_open_hierarchy", "alpha = semi and pre; semi and pre imply beta; opens are alpha")
def _near_open_hierarchy(n: int) -> Optional[str]:
    for space in spaces_up_to(n):
        for bits in space.all_subsets():
            semi = is_near_open_mask(space, bits, NearOpenKind.SEMI)
            pre = is_near_open_mask(space, bits, NearOpenKind.PRE)
            alpha = is_near_open_mask(space, bits, NearOpenKind.ALPHA)
            beta = is_near_open_mask(space, bits, NearOpenKind.BETA)
            if alpha != (semi and pre) or (semi and not beta) or (pre and not beta):
                return _at(space, bits)
            if space.is_open_mask(bits) and not alpha:
                return _at(space, bits)
    return None


@proposition("near_open_witness_forms", "operator and sandwich definitions of nearly open sets agree")
def _near_open_witness_forms(n: int) -> Optional[str]:
    for space in spaces_up_to(n):
        for bits in space.all_subsets():
            for kind in NearOpenKind:
                by_operator = is_near_open_mask(space, bits, kind)
                by_witness = near_open_witness(space, space.from_mask(bits), kind) is not None
                if by_operator != by_witness:
                    return f"{kind.value}-open: {_at(space, bits)}"
    return None


@proposition("pre_open_decomposition", "pre-open sets are exactly intersections of an open and a dense set")
def _pre_open_decomposition(n: int) -> Optional[str]:
    for space in spaces_up_to(n):
        for bits in space.all_subsets():
            pre = is_near_open_mask(space, bits, NearOpenKind.PRE)
            if pre != (open_dense_decomposition(space, space.from_mask(bits)) is not None):
                return _at(space, bits)
    return None


@proposition("alpha_modification", "tau is inside tau^alpha, same regular open and nwd sets, idempotent, nodec both ways")
def _alpha_modification(n: int) -> Optional[str]:
    for space in spaces_up_to(n):
        alpha = alpha_modification(space)
        if not space.open_masks <= alpha.open_masks:
            return f"{_at(space)}: some open set is not alpha-open"
        if regular_open_masks(alpha) != regular_open_masks(space):
            return f"{_at(space)}: regular open sets change"
        if nwd_masks(alpha) != nwd_masks(space):
            return f"{_at(space)}: nowhere dense sets change"
        if alpha_modification(alpha).open_masks != alpha.open_masks:
            return f"{_at(space)}: alpha-modification is not idempotent"
        if not is_nodec(alpha):
            return f"{_at(space)}: alpha-modification is not nodec"
        if is_nodec(space) != is_nodec_by_subsets(space):
            return f"{_at(space)}: pointwise and power-set nodec checks disagree"
    return None


@proposition("regular_open_basics", "regular open sets are open and ro is idempotent on opens")
def _regular_open_basics(n: int) -> Optional[str]:
    for space in spaces_up_to(n):
        for bits in space.all_subsets():
            if ro_mask(space, bits) == bits and not space.is_open_mask(bits):
                return _at(space, bits)
        for bits in space.open_masks:
            once = ro_mask(space, bits)
            if ro_mask(space, once) != once:
                return _at(space, bits)
    return None


# Algebras

@proposition("borel_oracle", "{x} is constructible iff it is locally closed")
def _borel_oracle(n: int) -> Optional[str]:
    for space in spaces_up_to(n):
        algebra = constructible_algebra(space)
        for x in space.points:
            if algebra.contains_mask(1 << x) != classify_point(space, x).is_locally_closed:
                return _at(space, 1 << x)
    return None


@proposition("bp_oracle", "{x} is in the BP algebra iff it is nowhere dense or open")
def _bp_oracle(n: int) -> Optional[str]:
    for space in spaces_up_to(n):
        algebra = bp_algebra(space)
        for x in space.points:
            point = classify_point(space, x)
            if algebra.contains_mask(1 << x) != (point.is_nwd or point.is_open):
                return _at(space, 1 << x)
    return None


@proposition("algebra_fixpoints_agree", "worklist and round-based algebra generation agree")
def _algebra_fixpoints_agree(n: int) -> Optional[str]:
    for space in spaces_up_to(n):
        for seeds in (space.open_masks, space.open_masks | nwd_masks(space)):
            base = SetFamily.from_masks(space.carrier_size, seeds)
            generated = generate_algebra(space.carrier_size, base).sets.masks
            if generated != naive_fixpoint(space.full_mask, seeds):
                return _at(space)
            if not all(space.full_mask & ~a in generated for a in generated):
                return f"{_at(space)}: not closed under complement"
    return None


@proposition("bp_restriction_beta_open", "BP(U) is the trace of BP(X) on a beta-open U")
def _bp_restriction_beta_open(n: int) -> Optional[str]:
    for space in spaces_up_to(n):
        algebra = bp_algebra(space)
        for bits in _nonempty(space):
            if not is_near_open_mask(space, bits, NearOpenKind.BETA):
                continue
            traced = restrict_family(algebra.sets, space.from_mask(bits)).masks
            if bp_algebra(_sub(space, bits)).sets.masks != traced:
                return _at(space, bits)
    return None


@proposition("bp_restriction_semi_open", "a semi-open U is in BP(X) and BP(U) = BP(X) ∩ P(U)")
def _bp_restriction_semi_open(n: int) -> Optional[str]:
    for space in spaces_up_to(n):
        algebra = bp_algebra(space)
        for bits in _nonempty(space):
            if not is_near_open_mask(space, bits, NearOpenKind.SEMI):
                continue
            if not algebra.contains_mask(bits):
                return f"{_at(space, bits)}: not in the BP algebra"
            inside = {compress_mask(a, bits) for a in algebra.sets.masks if a & ~bits == 0}
            if bp_algebra(_sub(space, bits)).sets.masks != inside:
                return _at(space, bits)
    return None


@proposition("t_nwd_beta_open", "nwd subsets of A stay nwd in A iff A is beta-open")
def _t_nwd_beta_open(n: int) -> Optional[str]:
    for space in spaces_up_to(n):
        for bits in _nonempty(space):
            sub = _sub(space, bits)
            kept = all(
                is_nwd_mask(sub, compress_mask(b, bits))
                for b in nwd_masks(space)
                if b & ~bits == 0
            )
            if kept != is_near_open_mask(space, bits, NearOpenKind.BETA):
                return _at(space, bits)
    return None


# Axioms

def _vector_check(predicate: Callable[[Dict[AxiomId, bool]], bool]) -> Check:
    def check(n: int) -> Optional[str]:
        for space in spaces_up_to(n):
            if not predicate(dict(classify_space(space).values)):
                return _at(space)
        return None
    return check


proposition("finite_collapse", "T_QUARTER = T_HALF, T0 = T_D, T_INF_BP = T_OMEGA_BP")(_vector_check(
    lambda v: v[A.T_QUARTER] == v[A.T_HALF] and v[A.T0] == v[A.T_D] and v[A.T_INF_BP] == v[A.T_OMEGA_BP]
))

proposition("t1_splits", "T1 iff T_CLOSED_OR_NWD and T_HALF")(_vector_check(
    lambda v: v[A.T1] == (v[A.T_CLOSED_OR_NWD] and v[A.T_HALF])
))

proposition("closed_or_ro_splits", "T_CLOSED_OR_RO iff T_NWD_OR_RO and T_HALF")(_vector_check(
    lambda v: v[A.T_CLOSED_OR_RO] == (v[A.T_NWD_OR_RO] and v[A.T_HALF])
))

proposition("subfit_t1", "T1 iff T_D and subfit; T1 iff T_CLOSED_MEETS_RO and RO-subfit")(_vector_check(
    lambda v: v[A.T1] == (v[A.T_D] and v[A.SUBFIT])
    and v[A.T1] == (v[A.T_CLOSED_MEETS_RO] and v[A.RO_SUBFIT])
))

proposition("subfit_closed_or_nwd",
            "T_OMEGA_BP and subfit, or T_NWD_OR_RO and RO-subfit, give T_CLOSED_OR_NWD")(_vector_check(
    lambda v: (not (v[A.T_OMEGA_BP] and v[A.SUBFIT]) or v[A.T_CLOSED_OR_NWD])
    and (not (v[A.T_NWD_OR_RO] and v[A.RO_SUBFIT]) or v[A.T_CLOSED_OR_NWD])
))

proposition("symmetric_collapse", "symmetric and T_INF_BP give T_CLOSED_OR_NWD; symmetric and T0 give T1")(
    _vector_check(
        lambda v: (not (v[A.SYMMETRIC] and v[A.T_INF_BP]) or v[A.T_CLOSED_OR_NWD])
        and (not (v[A.SYMMETRIC] and v[A.T0]) or v[A.T1])
    )
)

proposition("nodec_collapse", "in nodec spaces the closed-or and nwd-or columns coincide row by row")(
    _vector_check(
        lambda v: not v[A.NODEC] or (
            v[A.T_CLOSED_OR_NWD] == v[A.T1]
            and v[A.T_NWD_OR_RO] == v[A.T_CLOSED_OR_RO]
            and v[A.T_OMEGA_BP] == v[A.T_HALF]
        )
    )
)


@proposition("symmetric_subfit", "symmetric iff hereditarily subfit iff subfit over minimal neighbourhoods")
def _symmetric_subfit(n: int) -> Optional[str]:
    for space in spaces_up_to(n):
        symmetric = check_axiom(space, A.SYMMETRIC)
        if not symmetric == is_hereditarily_subfit(space) == is_infinity_subfit(space) == check_axiom(space, A.SUBFIT):
            return _at(space)
    return None


@proposition("alpha_correspondence", "axioms of X match stronger axioms of its alpha-modification")
def _alpha_correspondence(n: int) -> Optional[str]:
    for space in spaces_up_to(n):
        v = classify_space(space)
        va = classify_space(alpha_modification(space))
        if v[A.T_CLOSED_OR_NWD] != va[A.T1]:
            return f"{_at(space)}: T_CLOSED_OR_NWD vs T1 of the alpha-modification"
        if not v[A.T_NWD_OR_RO] == va[A.T_CLOSED_MEETS_RO] == va[A.T_CLOSED_OR_RO]:
            return f"{_at(space)}: T_NWD_OR_RO vs the regular open row of the alpha-modification"
        if not v[A.T_OMEGA_BP] == va[A.T_D] == va[A.T_HALF]:
            return f"{_at(space)}: T_OMEGA_BP vs the open row of the alpha-modification"
    return None


@proposition("dense_isolated_points", "T_OMEGA_BP iff isolated points of dense subspaces are isolated")
def _dense_isolated_points(n: int) -> Optional[str]:
    for space in spaces_up_to(n):
        inherited = True
        for dense in dense_masks(space):
            sub = _sub(space, dense)
            for index, x in enumerate(space.from_mask(dense)):
                if sub.min_nbhd_masks[index] == 1 << index and not space.is_open_mask(1 << x):
                    inherited = False
        if inherited != check_axiom(space, A.T_OMEGA_BP):
            return _at(space)
    return None


@proposition("t_quarter_criteria", "T_QUARTER agrees with the finite-set and three-point criteria")
def _t_quarter_criteria(n: int) -> Optional[str]:
    for space in spaces_up_to(n):
        quarter = check_axiom(space, A.T_QUARTER)
        if not quarter == is_t_quarter_by_separation(space) == t_quarter_three_point_criterion(space):
            return _at(space)
    return None


@proposition("hereditary_axioms",
             "T_D, T_HALF, T_QUARTER are hereditary; T0 and T1 are read off closed subspaces")
def _hereditary_axioms(n: int) -> Optional[str]:
    for space in spaces_up_to(n):
        subspaces = [(bits, _sub(space, bits)) for bits in _nonempty(space)]
        closed = [(bits, sub) for bits, sub in subspaces if is_closed_mask(space, bits)]
        for axiom in (A.T_D, A.T_HALF, A.T_QUARTER):
            if check_axiom(space, axiom) != all(check_axiom(sub, axiom) for _, sub in subspaces):
                return f"{_at(space)}: {axiom}"
        if check_axiom(space, A.T0) != all(check_axiom(sub, A.T_INF_BP) for _, sub in closed):
            return f"{_at(space)}: T0 vs closed subspaces"
        if check_axiom(space, A.T1) != all(check_axiom(sub, A.T_NWD_OR_RO) for _, sub in closed):
            return f"{_at(space)}: T1 vs closed subspaces"
    return None


@proposition("beta_open_heredity", "beta-open subspaces inherit T_OMEGA_BP and T_CLOSED_OR_NWD")
def _beta_open_heredity(n: int) -> Optional[str]:
    for space in spaces_up_to(n):
        held = [a for a in (A.T_OMEGA_BP, A.T_CLOSED_OR_NWD) if check_axiom(space, a)]
        for bits in _nonempty(space):
            if not held or not is_near_open_mask(space, bits, NearOpenKind.BETA):
                continue
            sub = _sub(space, bits)
            for axiom in held:
                if not check_axiom(sub, axiom):
                    return f"{_at(space, bits)}: {axiom}"
    return None


@proposition("pre_open_ro_restriction", "regular open sets of a pre-open subspace are traces of regular open sets")
def _pre_open_ro_restriction(n: int) -> Optional[str]:
    inherited = (A.T_CLOSED_OR_RO, A.T_CLOSED_MEETS_RO, A.T_NWD_OR_RO)
    for space in spaces_up_to(n):
        ro = SetFamily.from_masks(space.carrier_size, regular_open_masks(space))
        held = [a for a in inherited if check_axiom(space, a)]
        for bits in _nonempty(space):
            if not is_near_open_mask(space, bits, NearOpenKind.PRE):
                continue
            sub = _sub(space, bits)
            if regular_open_masks(sub) != restrict_family(ro, space.from_mask(bits)).masks:
                return _at(space, bits)
            for axiom in held:
                if not check_axiom(sub, axiom):
                    return f"{_at(space, bits)}: {axiom}"
    return None


@proposition("t1_via_subspaces", "T1 iff every subspace is T_INF_BP and subfit")
def _t1_via_subspaces(n: int) -> Optional[str]:
    for space in spaces_up_to(n):
        every = all(
            check_axiom(sub, A.T_INF_BP) and check_axiom(sub, A.SUBFIT)
            for sub in (_sub(space, bits) for bits in _nonempty(space))
        )
        if every != check_axiom(space, A.T1):
            return _at(space)
    return None


@proposition("closed_subspaces_t_d", "T_D iff every closed subspace is T_OMEGA_BP")
def _closed_subspaces_t_d(n: int) -> Optional[str]:
    for space in spaces_up_to(n):
        every = all(
            check_axiom(_sub(space, bits), A.T_OMEGA_BP)
            for bits in _nonempty(space)
            if is_closed_mask(space, bits)
        )
        if every != check_axiom(space, A.T_D):
            return _at(space)
    return None


@proposition("non_isolated_points_t1", "the non-isolated points of a T_HALF space form a T1 subspace")
def _non_isolated_points_t1(n: int) -> Optional[str]:
    for space in spaces_up_to(n):
        if not check_axiom(space, A.T_HALF):
            continue
        rest = space.full_mask & ~sum(1 << x for x in space.points if space.is_open_mask(1 << x))
        if rest and not check_axiom(_sub(space, rest), A.T1):
            return _at(space, rest)
    return None


@proposition("no_finite_t_nwd", "no nonempty finite space is T_NWD")
def _no_finite_t_nwd(n: int) -> Optional[str]:
    for space in spaces_up_to(n):
        if check_axiom(space, A.T_NWD):
            return _at(space)
    return None


@proposition("sierpinski_truncations", "finite chains are T_D and T_OMEGA_BP but never T_NWD or T_HALF past 2 points")
def _sierpinski_truncations(n: int) -> Optional[str]:
    for size in range(1, 7):
        v = classify_space(sierpinski(size))
        if not (v[A.T_D] and v[A.T_OMEGA_BP]) or v[A.T_NWD] or v[A.T_HALF] != (size <= 2):
            return f"sierpinski({size})"
    return None


# Catalog

@proposition("catalog_regression", "every finite catalog entry classifies as claimed; analytic claims fit the diagram")
def _catalog_regression(n: int) -> Optional[str]:
    for entry in catalog():
        if entry.space is None:
            violations = check_claims(entry.expected_values(), finite=False)
            if violations:
                return f"{entry.name}: {violations[0]}"
            continue
        vector = classify_space(entry.space)
        for claim in entry.expected:
            if vector[claim.axiom] != claim.value:
                return f"{entry.name}: expected {claim.axiom}={claim.value}"
    return None


@proposition("attachment_nwd_subspace", "the closed nowhere dense subspace {0, 1_0} of attachment5 is S2")
def _attachment_nwd_subspace(n: int) -> Optional[str]:
    space = attachment_space()
    bits = space.point_set([1, 3]).bits
    if not (is_closed_mask(space, bits) and is_nwd_mask(space, bits)):
        return "{0, 1_0} is not closed nowhere dense"
    if not is_homeomorphic(_sub(space, bits), sierpinski(2)):
        return "{0, 1_0} is not a Sierpinski pair"
    return None


@proposition("product_preservation", "binary products preserve T_D, T_OMEGA_BP, T_CLOSED_MEETS_RO, "
                                     "T_NWD_OR_RO and T_CLOSED_OR_NWD")
def _product_preservation(n: int) -> Optional[str]:
    preserved = (A.T_D, A.T_OMEGA_BP, A.T_CLOSED_MEETS_RO, A.T_NWD_OR_RO, A.T_CLOSED_OR_NWD)
    factors = _factors(n)
    for a, b in all_tuples(factors, repeat=2):
        both = [axiom for axiom in preserved if check_axiom(a, axiom) and check_axiom(b, axiom)]
        if not both:
            continue
        square = product(a, b)
        for axiom in both:
            if not check_axiom(square, axiom):
                return f"{axiom} lost in {a!r} x {b!r}"
    return None


@proposition("nwd_in_product", "{(x,y)} is nwd in a product iff {x} or {y} is nwd in its factor")
def _nwd_in_product(n: int) -> Optional[str]:
    for a, b in all_tuples(_factors(n), repeat=2):
        square = product(a, b)
        for x, y in all_tuples(a.points, b.points):
            direct = is_nwd_mask(square, 1 << product_point(a, b, x, y))
            if direct != (is_nwd_mask(a, 1 << x) or is_nwd_mask(b, 1 << y)):
                return f"({x},{y}) in {a!r} x {b!r}"
    return None


def _functions(domain: FiniteSpace, target: FiniteSpace) -> Iterator[Tuple[int, ...]]:
    return all_tuples(range(target.carrier_size), repeat=domain.carrier_size)


def _preimage(f: Tuple[int, ...], bits: int) -> int:
    return sum(1 << x for x, y in enumerate(f) if bits >> y & 1)


@proposition("borel_function", "a constructible map into a T_D space with T_D fibers has a T_D domain")
def _borel_function(n: int) -> Optional[str]:
    factors = _factors(n)
    for domain in factors:
        algebra = constructible_algebra(domain)
        for target in factors:
            if not check_axiom(target, A.T_D):
                continue
            for f in _functions(domain, target):
                if not all(algebra.contains_mask(_preimage(f, u)) for u in target.open_masks):
                    continue
                fibers = [_preimage(f, 1 << y) for y in target.points]
                if not all(check_axiom(_sub(domain, fiber), A.T_D) for fiber in fibers if fiber):
                    continue
                if not check_axiom(domain, A.T_D):
                    return f"{f} from {domain!r} to {target!r}"
    return None


@proposition("bp_function", "a BP map into a T_OMEGA_BP space with T_OMEGA_BP fibers and nwd-preserving "
                            "preimages has a T_OMEGA_BP domain")
def _bp_function(n: int) -> Optional[str]:
    factors = _factors(n)
    for domain in factors:
        algebra = bp_algebra(domain)
        for target in factors:
            if not check_axiom(target, A.T_OMEGA_BP):
                continue
            for f in _functions(domain, target):
                if not all(algebra.contains_mask(_preimage(f, u)) for u in target.open_masks):
                    continue
                fibers = [_preimage(f, 1 << y) for y in target.points]
                if not all(check_axiom(_sub(domain, fiber), A.T_OMEGA_BP) for fiber in fibers if fiber):
                    continue
                if not all(
                    is_nwd_mask(domain, 1 << x)
                    for nwd in nwd_masks(target)
                    for x in domain.from_mask(_preimage(f, nwd))
                ):
                    continue
                if not check_axiom(domain, A.T_OMEGA_BP):
                    return f"{f} from {domain!r} to {target!r}"
    return None


# Runners

def _check_limit(n: int, limit: int, operation: str):
    if n < 1:
        raise InvalidInput(f"need at least one point, got {n}")
    if n > limit:
        raise CarrierTooLarge(n, limit, operation)


def verify_propositions(n: int, which: Optional[str] = None) -> PropositionReport:
    """Run one named property, or all of them, over every topology on 1..n points"""
    _check_limit(n, PROPOSITION_LIMIT, "proposition sweeps")
    if which is not None and which not in PROPOSITIONS:
        raise UnknownProperty(which, PROPOSITIONS)
    names = [which] if which else list(PROPOSITIONS)
    results = []
    for name in names:
        started = time.perf_counter()
        counterexample = PROPOSITIONS[name].check(n)
        elapsed = time.perf_counter() - started
        results.append(PropositionResult(name, counterexample is None, counterexample, elapsed))
        if counterexample is None:
            logger.debug("%s holds up to %d points (%.2fs)", name, n, elapsed)
        else:
            logger.warning("%s fails: %s", name, counterexample)
    report = PropositionReport(n, tuple(results))
    logger.info("Verified %d properties up to %d points: %d failed", len(results), n, len(report.failures))
    return report


def _violations(space: FiniteSpace) -> List[Tuple[FiniteSpace, Violation]]:
    return [(space, violation) for violation in check_diagram(classify_space(space))]


def verify_diagram(n: int, config: Optional[EngineConfig] = None) -> DiagramReport:
    """classify_space and check_diagram on every topology on 1..n points"""
    _check_limit(n, ENUMERATION_LIMIT, "diagram verification")
    config = config or EngineConfig()
    started = time.perf_counter()
    spaces = list(spaces_up_to(n))
    if config.workers > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            found = list(pool.map(_violations, spaces))
    else:
        found = [_violations(space) for space in spaces]
    violations = tuple(item for batch in found for item in batch)
    elapsed = time.perf_counter() - started
    report = DiagramReport(n, len(spaces), len(labeled_spaces(n)), violations, elapsed)
    logger.info(
        "Diagram check up to %d points: %d violations / %d spaces in %.2fs",
        n, len(violations), len(spaces), elapsed,
    )
    return report
