"""
Report payloads and their json, markdown and dot renderings.
"""
import json
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, List, Mapping, Optional, Tuple

import networkx as nx

from ..axioms.definitions import (
    AXIOMS,
    FINITE_EQUIVALENCES,
    SEPARATION_AXIOMS,
    AxiomId,
    collapsed_classes,
    implication_graph,
    implies,
)
from ..errors import InvalidInput

Payload = Dict[str, Any]
WitnessNames = Mapping[Tuple[AxiomId, AxiomId], str]


class ReportFormat(Enum):
    JSON = "json"
    MARKDOWN = "markdown"
    DOT = "dot"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Report:
    """Structured result of one command"""
    command: str
    format: ReportFormat
    payload: Payload
    exit_code: int = 0
    timings: bool = False

    def render(self) -> str:
        if self.format is ReportFormat.JSON:
            return render_json(self.payload, self.timings)
        if self.format is ReportFormat.DOT:
            return render_dot(self.command, self.payload)
        return render_markdown(self.command, self.payload)


# JSON

def _without_timings(value: Any) -> Any:
    if isinstance(value, dict):
        return {k: _without_timings(v) for k, v in value.items() if k != "elapsed"}
    if isinstance(value, list):
        return [_without_timings(v) for v in value]
    return value


def render_json(payload: Payload, timings: bool = False) -> str:
    """Sorted keys; elapsed fields dropped unless timings is set"""
    return json.dumps(payload if timings else _without_timings(payload), indent=2, sort_keys=True,
                      ensure_ascii=False)


# Markdown

def _table(headers: List[str], rows: List[List[Any]]) -> List[str]:
    def cell(value: Any) -> str:
        if isinstance(value, bool):
            return "yes" if value else "no"
        return str(value) if value is not None else ""
    lines = ["| " + " | ".join(headers) + " |", "|" + "---|" * len(headers)]
    lines += ["| " + " | ".join(cell(v) for v in row) + " |" for row in rows]
    return lines


def _axiom_rows(axioms: Mapping[str, bool]) -> List[List[Any]]:
    return [[name, value] for name, value in axioms.items()]


def _space_block(space: Payload) -> List[str]:
    return ["```json", json.dumps(space), "```"]


def _markdown_classify(payload: Payload) -> List[str]:
    lines = [f"# {payload['source']}", "", f"{len(payload['space']['points'])} points, "
             f"{len(payload['space']['opens'])} open sets", "", "## Axioms", ""]
    lines += _table(["axiom", "holds"], _axiom_rows(payload["axioms"]))
    lines += ["", "## Points", ""]
    lines += _table(
        ["point", "closed", "open", "regular open", "nwd", "locally closed", "min nbhd", "closure"],
        [[p["point"], p["closed"], p["open"], p["regular_open"], p["nwd"], p["locally_closed"],
          p["min_nbhd"], p["closure"]] for p in payload["points"]],
    )
    lines += ["", "## Algebra atoms", ""]
    lines += [f"- {kind}: {' '.join(atoms)}" for kind, atoms in payload["atoms"].items()]
    return lines


def _markdown_catalog(payload: Payload) -> List[str]:
    if "entries" in payload:
        lines = ["# Catalog", ""]
        lines += _table(
            ["name", "points", "aliases", "notes"],
            [[e["name"], e["points"] if e["points"] is not None else "analytic",
              ", ".join(e["aliases"]), e["notes"]] for e in payload["entries"]],
        )
        return lines
    lines = [f"# {payload['name']}", "", payload["notes"], ""]
    if payload.get("space"):
        lines += _space_block(payload["space"]) + [""]
    else:
        lines += ["Analytic entry: an infinite space, known only by its claims.", ""]
    lines += _table(["axiom", "value", "citation"],
                    [[c["axiom"], c["value"], c["citation"]] for c in payload["claims"]])
    return lines


def _markdown_enumerate(payload: Payload) -> List[str]:
    lines = [f"# Topologies on {payload['n']} points", "",
             f"{payload['labeled']} labeled, {payload['classes']} classes"]
    if "elapsed" in payload:
        lines += ["", f"elapsed {payload['elapsed']:.2f}s"]
    if payload.get("spaces") and payload.get("up_to_homeo"):
        lines += ["", "## Representatives", ""]
        lines += [f"{i}. opens {space['opens']}" for i, space in enumerate(payload["spaces"], 1)]
    return lines


def _markdown_verify(payload: Payload) -> List[str]:
    if payload["kind"] == "diagram":
        lines = [
            f"# Diagram check up to {payload['n']} points", "",
            f"{len(payload['violations'])} violations / {payload['spaces_at_n']} spaces "
            f"({payload['spaces_checked']} checked on 1..{payload['n']} points)",
        ]
        if payload["violations"]:
            lines += [""] + _table(["space", "violated"],
                                   [[v["space"]["opens"], v["implication"]] for v in payload["violations"]])
        return lines
    lines = [f"# Properties up to {payload['n']} points", ""]
    lines += _table(["property", "holds", "counterexample"],
                    [[r["name"], r["passed"], r["counterexample"]] for r in payload["results"]])
    return lines


def _markdown_mine(payload: Payload) -> List[str]:
    query = f"{', '.join(payload['satisfy'])} but not {', '.join(payload['violate'])}"
    lines = [f"# Witness: {query}", "", payload["result"]]
    if payload.get("witness"):
        lines += [""] + _space_block(payload["witness"])
    if payload.get("analytic"):
        lines += ["", "Analytic witnesses: " + ", ".join(payload["analytic"])]
    return lines


def _markdown_diagram(payload: Payload) -> List[str]:
    lines = ["# Implication diagram", "", "## Collapsed on finite spaces", ""]
    lines += [f"- {' = '.join(node['members'])}" for node in payload["collapsed"]["nodes"]]
    lines += ["", "## Direct implications", ""]
    lines += [f"- {e['from']} ⇒ {e['to']}" for e in payload["full"]["edges"]]
    non_edges = payload["full"]["non_edges"]
    if non_edges:
        lines += ["", "## Non-implications", ""]
        lines += _table(["satisfies", "fails", "witness"],
                        [[e["from"], e["to"], e["witness"]] for e in non_edges])
    return lines


MARKDOWN: Dict[str, Callable[[Payload], List[str]]] = {
    "classify": _markdown_classify,
    "catalog": _markdown_catalog,
    "enumerate": _markdown_enumerate,
    "verify": _markdown_verify,
    "mine": _markdown_mine,
    "export-diagram": _markdown_diagram,
}


def render_markdown(command: str, payload: Payload) -> str:
    return "\n".join(MARKDOWN[command](payload)) + "\n"


# Diagram

def _node_id(members: List[str]) -> str:
    return "__".join(m.replace("-", "_") for m in members)


def diagram_payload(witnesses: Optional[WitnessNames] = None) -> Payload:
    """Both diagram forms as plain data: the full graph and the finite collapse"""
    witnesses = witnesses or {}
    full = nx.transitive_reduction(implication_graph(False))
    full_payload = {
        "nodes": [{"id": a.value, "members": [a.value], "separation": AXIOMS[a].separation} for a in AxiomId],
        "edges": sorted(({"from": a.value, "to": b.value} for a, b in full.edges),
                        key=lambda e: (e["from"], e["to"])),
        "collapse": [{"between": [a.value, b.value]} for a, b in FINITE_EQUIVALENCES],
        "non_edges": [
            {"from": a.value, "to": b.value, "witness": witnesses[(a, b)]}
            for a in SEPARATION_AXIOMS
            for b in SEPARATION_AXIOMS
            if a != b and not implies(a, b) and (a, b) in witnesses
        ],
    }

    classes = collapsed_classes()
    order = list(AxiomId)
    members = [sorted(c, key=order.index) for c in classes]
    index = {a: i for i, c in enumerate(classes) for a in c}
    quotient = nx.DiGraph()
    quotient.add_nodes_from(range(len(classes)))
    quotient.add_edges_from(
        (index[a], index[b]) for a, b in implication_graph(True).edges if index[a] != index[b]
    )
    reduced = nx.transitive_reduction(quotient)
    collapsed_non_edges = []
    for i, j in ((i, j) for i in range(len(classes)) for j in range(len(classes)) if i != j):
        if nx.has_path(quotient, i, j):
            continue
        names = [witnesses[(a, b)] for a in members[i] for b in members[j] if (a, b) in witnesses]
        if names:
            collapsed_non_edges.append({"from": _node_id([a.value for a in members[i]]),
                                        "to": _node_id([a.value for a in members[j]]),
                                        "witness": names[0]})
    collapsed_payload = {
        "nodes": [{"id": _node_id([a.value for a in m]), "members": [a.value for a in m]} for m in members],
        "edges": sorted(
            ({"from": _node_id([a.value for a in members[i]]), "to": _node_id([a.value for a in members[j]])}
             for i, j in reduced.edges),
            key=lambda e: (e["from"], e["to"]),
        ),
        "non_edges": collapsed_non_edges,
    }
    return {"full": full_payload, "collapsed": collapsed_payload}


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _dot_graph(name: str, graph: Payload, annotate_collapse: bool) -> List[str]:
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
    for node in graph["nodes"]:
        label = " = ".join(node["members"])
        style = "" if node.get("separation", True) else ", style=dashed"
        lines.append(f"  {_quote(node['id'])} [label={_quote(label)}{style}];")
    for edge in graph["edges"]:
        lines.append(f"  {_quote(edge['from'])} -> {_quote(edge['to'])};")
    if annotate_collapse:
        for pair in graph["collapse"]:
            a, b = pair["between"]
            lines.append(
                f"  {_quote(a)} -> {_quote(b)} [dir=both, style=dotted, color=blue, "
                f"constraint=false, label=\"finite\"];"
            )
    for edge in graph["non_edges"]:
        lines.append(
            f"  {_quote(edge['from'])} -> {_quote(edge['to'])} [style=dotted, color=gray, arrowhead=tee, constraint=false, "
            f"label={_quote('not: ' + edge['witness'])}];"
        )
    lines.append("}")
    return lines


def render_dot(command: str, payload: Payload) -> str:
    if command != "export-diagram":
        raise InvalidInput(f"dot output is only available for export-diagram, not {command}")
    lines = _dot_graph("full", payload["full"], annotate_collapse=True)
    lines += [""] + _dot_graph("collapsed", payload["collapsed"], annotate_collapse=False)
    return "\n".join(lines) + "\n"
