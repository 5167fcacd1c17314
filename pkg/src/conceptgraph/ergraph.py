"""Entity-relationship assembly, neighbor graphs, and graph serialization.

The model is deliberately simple: entities are term strings, relationships
are scored binary links between them, and the classification slots
(entity_sets / relationship_sets) are carried but left empty.  Graphs are
exported to json, graphml or dot with a stable element order so identical
inputs always serialize to identical bytes.
"""

from __future__ import annotations

import json
import xml.etree.ElementTree as ET
from dataclasses import dataclass

from .cooccur import DEFAULT_MEASURE, DEFAULT_NEIGHBORS, PairStats, TransactionSet, related_terms
from .errors import UsageError

EXPORT_FORMATS = ("json", "graphml", "dot")


@dataclass(frozen=True)
class ERModel:
    entities: frozenset[str]
    relationships: frozenset[tuple[str, str, str, float]]  # (a, b, measure, score), a < b
    entity_sets: dict[str, frozenset[str]]
    relationship_sets: dict[str, frozenset[tuple[str, str, str, float]]]

    def __post_init__(self):
        for a, b, _measure, _score in self.relationships:
            if a not in self.entities or b not in self.entities:
                raise ValueError(f"relationship endpoint not among entities: {(a, b)}")
        for members in self.entity_sets.values():
            if not members <= self.entities:
                raise ValueError("entity_sets may only reference known entities")
        for members in self.relationship_sets.values():
            if not members <= self.relationships:
                raise ValueError("relationship_sets may only reference known relationships")


@dataclass(frozen=True)
class GraphNode:
    term: str
    is_seed: bool = False


@dataclass(frozen=True)
class GraphEdge:
    source: str
    target: str
    score: float
    measure: str


@dataclass(frozen=True)
class ConceptGraph:
    nodes: tuple[GraphNode, ...]
    edges: tuple[GraphEdge, ...]

    def __post_init__(self):
        terms = {node.term for node in self.nodes}
        for edge in self.edges:
            if edge.source not in terms or edge.target not in terms:
                raise ValueError(f"edge endpoint not among nodes: {edge.source} -- {edge.target}")


def build_er_model(
    tx: TransactionSet,
    stats: list[PairStats],
    measure: str = DEFAULT_MEASURE,
    k: int = DEFAULT_NEIGHBORS,
) -> ERModel:
    """Entities from the transaction vocabulary, relationships from each
    entity's top-k neighbors, stored in canonical (a < b) orientation.

    For the asymmetric lr measure one unordered pair can appear twice with
    the two directional scores.  Classification slots stay empty.
    """
    relationships = set()
    for entity in sorted(tx.vocab):
        for neighbor, value in related_terms(stats, entity, measure, k):
            a, b = (entity, neighbor) if entity <= neighbor else (neighbor, entity)
            relationships.add((a, b, measure, value))
    return ERModel(tx.vocab, frozenset(relationships), {}, {})


def neighbor_graph(
    stats: list[PairStats],
    seeds: list[str],
    measure: str = DEFAULT_MEASURE,
    k: int = DEFAULT_NEIGHBORS,
    depth: int = 1,
) -> ConceptGraph:
    """Breadth-first concept graph around the seed terms.

    Every frontier term contributes edges to its top-k related terms; newly
    seen terms join the next frontier until depth is exhausted.  Unknown
    seeds simply stay isolated.
    """
    if depth < 1:
        raise UsageError("depth must be >= 1")
    seen: dict[str, bool] = {}
    for seed in seeds:
        if seed not in seen:
            seen[seed] = True
    edges = []
    frontier = list(seen)
    expanded = set()
    for _ in range(depth):
        next_frontier = []
        for term in frontier:
            if term in expanded:
                continue
            expanded.add(term)
            for neighbor, value in related_terms(stats, term, measure, k):
                edges.append(GraphEdge(term, neighbor, value, measure))
                if neighbor not in seen:
                    seen[neighbor] = False
                    next_frontier.append(neighbor)
        frontier = next_frontier
    nodes = tuple(GraphNode(term, is_seed) for term, is_seed in seen.items())
    return ConceptGraph(nodes, tuple(edges))


def _as_node_edge_lists(graph) -> tuple[list[tuple[str, bool]], list[tuple[str, str, str, float]]]:
    """Normalize a ConceptGraph or ERModel into sorted node/edge tuples."""
    if isinstance(graph, ConceptGraph):
        nodes = sorted((node.term, node.is_seed) for node in graph.nodes)
        edges = sorted((e.source, e.target, e.measure, e.score) for e in graph.edges)
    elif isinstance(graph, ERModel):
        nodes = sorted((term, False) for term in graph.entities)
        edges = sorted(graph.relationships)
    else:
        raise UsageError(f"cannot export object of type {type(graph).__name__}")
    return nodes, edges


def export_graph(graph, fmt: str = "json") -> bytes:
    """Serialize a graph deterministically: nodes by term, edges by (from, to)."""
    nodes, edges = _as_node_edge_lists(graph)
    if fmt == "json":
        return _export_json(nodes, edges)
    if fmt == "graphml":
        return _export_graphml(nodes, edges)
    if fmt == "dot":
        return _export_dot(nodes, edges)
    raise UsageError(f"unknown export format {fmt!r} (expected one of {', '.join(EXPORT_FORMATS)})")


def _export_json(nodes, edges) -> bytes:
    doc = {
        "nodes": [{"term": term, "seed": seed} for term, seed in nodes],
        "edges": [
            {"from": a, "to": b, "measure": measure, "score": score} for a, b, measure, score in edges
        ],
    }
    return json.dumps(doc, ensure_ascii=False, separators=(",", ":")).encode("utf-8")


def graph_from_json(data: bytes | str | dict) -> ConceptGraph:
    """Rebuild a ConceptGraph from the json export schema."""
    if isinstance(data, (bytes, str)):
        data = json.loads(data)
    nodes = tuple(GraphNode(n["term"], bool(n["seed"])) for n in data["nodes"])
    edges = tuple(GraphEdge(e["from"], e["to"], float(e["score"]), e["measure"]) for e in data["edges"])
    return ConceptGraph(nodes, edges)


def _export_graphml(nodes, edges) -> bytes:
    root = ET.Element("graphml", xmlns="http://graphml.graphdrawing.org/xmlns")
    ET.SubElement(root, "key", id="d0", attrib={"for": "node", "attr.name": "seed", "attr.type": "boolean"})
    ET.SubElement(root, "key", id="d1", attrib={"for": "edge", "attr.name": "measure", "attr.type": "string"})
    ET.SubElement(root, "key", id="d2", attrib={"for": "edge", "attr.name": "score", "attr.type": "double"})
    g = ET.SubElement(root, "graph", id="G", edgedefault="undirected")
    for term, seed in nodes:
        node_el = ET.SubElement(g, "node", id=term)
        ET.SubElement(node_el, "data", key="d0").text = "true" if seed else "false"
    for a, b, measure, score in edges:
        edge_el = ET.SubElement(g, "edge", source=a, target=b)
        ET.SubElement(edge_el, "data", key="d1").text = measure
        ET.SubElement(edge_el, "data", key="d2").text = repr(score)
    ET.indent(root)
    return ET.tostring(root, encoding="UTF-8", xml_declaration=True) + b"\n"


def _dot_quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _export_dot(nodes, edges) -> bytes:
    lines = ["graph concepts {"]
    for term, seed in nodes:
        lines.append(f"  {_dot_quote(term)} [seed={'true' if seed else 'false'}];")
    for a, b, measure, score in edges:
        lines.append(f"  {_dot_quote(a)} -- {_dot_quote(b)} [measure={_dot_quote(measure)}, score={score!r}];")
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")
