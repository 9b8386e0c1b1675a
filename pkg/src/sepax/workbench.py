"""
Command orchestrator: runs one engine operation and wraps the result in a Report.
"""
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Union

from .axioms.classifier import classify_point, classify_space
from .axioms.definitions import resolve_axioms
from .catalog.entries import CatalogEntry, catalog, lookup
from .config import EngineConfig
from .errors import InvalidInput
from .miner.enumeration import enumerate_topologies
from .miner.propositions import verify_diagram, verify_propositions
from .miner.witnesses import WitnessMiner
from .models import FiniteSpace
from .spaces.algebras import algebra_atoms, bp_algebra, constructible_algebra
from .spaces.serialization import load_space, space_to_dict
from .ui.report import Report, ReportFormat, diagram_payload

logger = logging.getLogger(__name__)

VERIFY_KINDS = ("diagram", "props")


def _point_rows(space: FiniteSpace) -> list:
    rows = []
    for x in space.points:
        point = classify_point(space, x)
        rows.append({
            "point": space.label(x),
            "closed": point.is_closed,
            "open": point.is_open,
            "clopen": point.is_clopen,
            "regular_open": point.is_regular_open,
            "nwd": point.is_nwd,
            "locally_closed": point.is_locally_closed,
            "min_nbhd": space.describe(point.min_nbhd),
            "closure": space.describe(point.closure),
        })
    return rows


def _entry_summary(entry: CatalogEntry) -> Dict[str, Any]:
    return {
        "name": entry.name,
        "points": None if entry.space is None else entry.space.carrier_size,
        "aliases": list(entry.aliases),
        "notes": entry.notes,
    }


class Workbench:
    """Runs workbench commands against one engine configuration"""

    def __init__(self, config: Optional[EngineConfig] = None, format: Optional[ReportFormat] = None,
                 timings: bool = False):
        self.config = config or EngineConfig.from_env()
        self.format = format
        self.timings = timings
        self.miner = WitnessMiner(self.config)

    def _report(self, command: str, payload: Dict[str, Any], exit_code: int = 0,
                default: ReportFormat = ReportFormat.MARKDOWN) -> Report:
        return Report(command, self.format or default, payload, exit_code, self.timings)

    def cmd_classify(self, path: Union[str, Path]) -> Report:
        """Axiom vector and per-point table of a space file"""
        space = load_space(path)
        vector = classify_space(space)
        logger.info("Classified %s: %d of %d axioms hold", path, sum(vector.values.values()), len(vector.values))
        return self._report("classify", {
            "source": str(path),
            "space": space_to_dict(space),
            "axioms": vector.to_dict(),
            "points": _point_rows(space),
            "atoms": {
                "constructible": [space.describe(a) for a in algebra_atoms(constructible_algebra(space))],
                "bp": [space.describe(a) for a in algebra_atoms(bp_algebra(space))],
            },
        })

    def cmd_catalog(self, name: Optional[str] = None) -> Report:
        """List every entry, or show one with its space and claims"""
        if name is None:
            return self._report("catalog", {"entries": [_entry_summary(e) for e in catalog()]})
        entry = lookup(name)
        payload = _entry_summary(entry)
        payload["space"] = None if entry.space is None else space_to_dict(entry.space)
        payload["claims"] = [
            {"axiom": claim.axiom.value, "value": claim.value, "citation": claim.citation}
            for claim in entry.expected
        ]
        return self._report("catalog", payload)

    def cmd_enumerate(self, n: int, up_to_homeo: bool = False) -> Report:
        self.config.check_points(n)
        spaces, report = enumerate_topologies(n, up_to_homeo, self.config)
        return self._report("enumerate", {
            "n": n,
            "labeled": report.labeled_count,
            "classes": report.homeo_class_count,
            "up_to_homeo": up_to_homeo,
            "elapsed": report.elapsed,
            "spaces": [space_to_dict(space) for space in spaces],
        })

    def cmd_verify(self, kind: str, n: int, prop: Optional[str] = None) -> Report:
        """Diagram or property sweep; exit code 1 when anything fails"""
        if kind not in VERIFY_KINDS:
            raise InvalidInput(f"verify takes one of {', '.join(VERIFY_KINDS)}, got '{kind}'")
        self.config.check_points(n)
        if kind == "diagram":
            if prop is not None:
                raise InvalidInput("--prop only applies to 'verify props'")
            diagram = verify_diagram(n, self.config)
            return self._report("verify", {
                "kind": kind,
                "n": n,
                "spaces_checked": diagram.spaces_checked,
                "spaces_at_n": diagram.spaces_at_n,
                "elapsed": diagram.elapsed,
                "violations": [
                    {"space": space_to_dict(space), "implication": str(v), "source": v.source}
                    for space, v in diagram.violations
                ],
            }, exit_code=0 if diagram.passed else 1)
        props = verify_propositions(n, prop)
        return self._report("verify", {
            "kind": kind,
            "n": n,
            "results": [
                {"name": r.name, "passed": r.passed, "counterexample": r.counterexample, "elapsed": r.elapsed}
                for r in props.results
            ],
        }, exit_code=0 if props.passed else 1)

    def cmd_mine(self, satisfy: str, violate: str, max_n: int) -> Report:
        """Smallest space meeting every --satisfy axiom and failing every --violate axiom"""
        self.config.check_points(max_n)
        report = self.miner.mine_witness(resolve_axioms(satisfy), resolve_axioms(violate), max_n)
        return self._report("mine", {
            "satisfy": sorted(a.value for a in report.satisfy),
            "violate": sorted(a.value for a in report.violate),
            "result": report.describe(),
            "searched_up_to": report.searched_up_to,
            "minimal": report.minimal,
            "witness": None if report.witness is None else space_to_dict(report.witness),
            "known_as": list(report.known_as),
            "analytic": list(report.analytic),
        })

    def cmd_export_diagram(self, max_n: Optional[int] = None) -> Report:
        """Both diagram forms, non-edges labelled with witnesses found up to max_n points"""
        max_n = max_n or self.config.max_points
        self.config.check_points(max_n)
        payload = diagram_payload(self.miner.witness_names(max_n))
        return self._report("export-diagram", payload, default=ReportFormat.DOT)
