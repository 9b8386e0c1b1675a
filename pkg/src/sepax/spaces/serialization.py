"""
JSON space format.

    {"points": ["a", "b", "c"], "opens": [[], [0], [0, 1, 2]]}

"subbasis" may replace "opens", in which case the topology is generated.
"points" is optional when a "size" key gives the carrier size.
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Union

from ..errors import SpaceFormatError
from ..models import FiniteSpace, PointSet
from .core import from_open_sets, from_subbasis

logger = logging.getLogger(__name__)


def _members(raw: Any, carrier_size: int, key: str) -> List[PointSet]:
    if not isinstance(raw, list):
        raise SpaceFormatError(f"'{key}' must be a list of index lists")
    family = []
    for position, entry in enumerate(raw):
        if not isinstance(entry, list) or not all(
            isinstance(p, int) and not isinstance(p, bool) for p in entry
        ):
            raise SpaceFormatError(f"'{key}[{position}]' must be a list of point indices")
        bad = [p for p in entry if not 0 <= p < carrier_size]
        if bad:
            raise SpaceFormatError(
                f"'{key}[{position}]' names point {bad[0]} outside 0..{carrier_size - 1}"
            )
        family.append(PointSet.of(carrier_size, entry))
    return family


def space_from_dict(data: Dict[str, Any]) -> FiniteSpace:
    """Build a validated space; NotATopology propagates for bad open families"""
    if not isinstance(data, dict):
        raise SpaceFormatError("space document must be a JSON object")
    points = data.get("points")
    if points is not None:
        if not isinstance(points, list) or not points:
            raise SpaceFormatError("'points' must be a nonempty list of names")
        labels = [str(p) for p in points]
        carrier_size = len(labels)
    elif isinstance(data.get("size"), int):
        labels = None
        carrier_size = data["size"]
    else:
        raise SpaceFormatError("space document needs 'points' or 'size'")

    if "opens" in data and "subbasis" in data:
        raise SpaceFormatError("give either 'opens' or 'subbasis', not both")
    if "opens" in data:
        return from_open_sets(carrier_size, _members(data["opens"], carrier_size, "opens"), labels)
    if "subbasis" in data:
        return from_subbasis(carrier_size, _members(data["subbasis"], carrier_size, "subbasis"), labels)
    raise SpaceFormatError("space document needs 'opens' or 'subbasis'")


def space_to_dict(space: FiniteSpace) -> Dict[str, Any]:
    """Inverse of space_from_dict; opens in the stored canonical order"""
    return {
        "points": [space.label(x) for x in space.points],
        "opens": [list(s.members) for s in space.opens],
    }


def parse_space(text: str) -> FiniteSpace:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpaceFormatError(f"invalid JSON: {e.msg}", e.lineno, e.colno) from None
    return space_from_dict(data)


def load_space(path: Union[str, Path]) -> FiniteSpace:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise SpaceFormatError(f"cannot read {path}: {e.strerror}") from None
    space = parse_space(text)
    logger.debug("Loaded %d-point space with %d opens from %s", space.carrier_size, len(space.opens), path)
    return space


def dump_space(space: FiniteSpace) -> str:
    return json.dumps(space_to_dict(space))
