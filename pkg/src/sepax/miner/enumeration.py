"""
Exhaustive enumeration of finite topologies through their specialization preorders.
"""
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Dict, Iterator, List, Optional, Tuple

import networkx as nx

from ..config import EngineConfig
from ..errors import CarrierTooLarge, InvalidInput
from ..models import ENUMERATION_LIMIT, FiniteSpace, Preorder, mask_of
from ..spaces.core import CanonicalKey, canonical_form, canonical_key, from_preorder

logger = logging.getLogger(__name__)

Rows = Tuple[int, ...]
NAIVE_LIMIT = 4


@dataclass(frozen=True)
class EnumerationReport:
    n: int
    labeled_count: int
    homeo_class_count: int
    elapsed: float

    def __post_init__(self):
        if not self.labeled_count >= self.homeo_class_count >= 1:
            raise InvalidInput(
                f"inconsistent counts: {self.labeled_count} labeled, {self.homeo_class_count} classes"
            )


def _check_size(n: int):
    if n < 1:
        raise InvalidInput(f"need at least one point, got {n}")
    if n > ENUMERATION_LIMIT:
        raise CarrierTooLarge(n, ENUMERATION_LIMIT, "enumeration")


def _row_candidates(n: int, x: int) -> List[int]:
    """Every up-set row for point x; x itself is always present"""
    return [bits for bits in range(1 << n) if bits >> x & 1]


def _compatible(rows: List[int], row: int, k: int) -> bool:
    """Pairwise transitivity between the new row k and the rows already placed"""
    for i, earlier in enumerate(rows):
        if earlier >> k & 1 and row & ~earlier:
            return False
        if row >> i & 1 and earlier & ~row:
            return False
    return True


def _extend(n: int, rows: List[int]) -> Iterator[Rows]:
    k = len(rows)
    if k == n:
        yield tuple(rows)
        return
    for row in _row_candidates(n, k):
        if _compatible(rows, row, k):
            rows.append(row)
            yield from _extend(n, rows)
            rows.pop()


def _partition(n: int, first_row: int) -> List[Rows]:
    return list(_extend(n, [first_row]))


_PREORDERS: Dict[int, Tuple[Rows, ...]] = {}


def labeled_preorders(n: int, workers: int = 1) -> Tuple[Rows, ...]:
    """Every preorder on n points as up-set rows, sorted; partitioned by first row"""
    _check_size(n)
    if n not in _PREORDERS:
        firsts = _row_candidates(n, 0)
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(lambda row: _partition(n, row), firsts))
        else:
            parts = [_partition(n, row) for row in firsts]
        _PREORDERS[n] = tuple(sorted(rows for part in parts for rows in part))
        logger.debug("Found %d preorders on %d points across %d partitions", len(_PREORDERS[n]), n, len(firsts))
    return _PREORDERS[n]


@lru_cache(maxsize=None)
def labeled_spaces(n: int) -> Tuple[FiniteSpace, ...]:
    return tuple(from_preorder(Preorder(n, rows)) for rows in labeled_preorders(n))


@lru_cache(maxsize=None)
def homeomorphism_classes(n: int) -> Tuple[FiniteSpace, ...]:
    """One canonical representative per class, ordered by canonical key"""
    classes: Dict[CanonicalKey, FiniteSpace] = {}
    for space in labeled_spaces(n):
        key = canonical_key(space)
        if key not in classes:
            classes[key] = canonical_form(space)
    return tuple(classes[key] for key in sorted(classes))


def enumerate_topologies(
    n: int, up_to_homeo: bool = False, config: Optional[EngineConfig] = None
) -> Tuple[List[FiniteSpace], EnumerationReport]:
    """All topologies on n labeled points, or one per homeomorphism class"""
    _check_size(n)
    config = config or EngineConfig()
    started = time.perf_counter()
    labeled_preorders(n, config.workers)
    labeled = labeled_spaces(n)
    classes = homeomorphism_classes(n)
    elapsed = time.perf_counter() - started
    report = EnumerationReport(n, len(labeled), len(classes), elapsed)
    logger.info(
        "Enumerated %d labeled topologies (%d classes) on %d points in %.2fs",
        report.labeled_count, report.homeo_class_count, n, elapsed,
    )
    return list(classes if up_to_homeo else labeled), report


def spaces_up_to(max_n: int, up_to_homeo: bool = False) -> Iterator[FiniteSpace]:
    """Spaces on 1..max_n points, smallest carriers first"""
    for n in range(1, max_n + 1):
        yield from (homeomorphism_classes(n) if up_to_homeo else labeled_spaces(n))


def naive_topology_count(n: int) -> int:
    """Test every reflexive relation for transitivity; an oracle for the enumerator"""
    if n > NAIVE_LIMIT:
        raise CarrierTooLarge(n, NAIVE_LIMIT, "the naive topology count")
    _check_size(n)
    pairs = [(x, y) for x in range(n) for y in range(n) if x != y]
    count = 0
    for chosen in product((False, True), repeat=len(pairs)):
        graph = nx.DiGraph()
        graph.add_nodes_from(range(n))
        graph.add_edges_from(pair for pair, keep in zip(pairs, chosen) if keep)
        if nx.transitive_closure(graph, reflexive=None).number_of_edges() == graph.number_of_edges():
            count += 1
    return count


def naive_preorders(n: int) -> List[Rows]:
    """Up-set rows of every preorder found by generate-and-filter"""
    if n > NAIVE_LIMIT:
        raise CarrierTooLarge(n, NAIVE_LIMIT, "the naive preorder list")
    _check_size(n)
    pairs = [(x, y) for x in range(n) for y in range(n) if x != y]
    found = []
    for chosen in product((False, True), repeat=len(pairs)):
        edges = [pair for pair, keep in zip(pairs, chosen) if keep]
        rows = [mask_of([x] + [y for a, y in edges if a == x]) for x in range(n)]
        if all(rows[y] & ~rows[x] == 0 for x in range(n) for y in range(n) if rows[x] >> y & 1):
            found.append(tuple(rows))
    return sorted(found)
