import json
import random
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

import oracles
from conceptgraph import (
    ConceptGraph,
    DocumentSet,
    GraphEdge,
    GraphNode,
    TokenizerConfig,
    TransactionSet,
    build_er_model,
    build_index,
    build_transactions,
    export_graph,
    graph_from_json,
    make_document,
    neighbor_graph,
    pair_counts,
    related_terms,
)
from conceptgraph.errors import UsageError

GOLDEN_DIR = Path(__file__).parent / "data" / "golden"


def test_empty_model():
    tx = TransactionSet.from_sets({})
    model = build_er_model(tx, [])
    assert model.entities == frozenset()
    assert model.relationships == frozenset()
    assert model.entity_sets == {} and model.relationship_sets == {}


def test_single_pair_model():
    tx = TransactionSet.from_sets({"a": {"y", "x"}, "b": {"y", "x"}})
    stats = pair_counts(tx, min_support=2)
    model = build_er_model(tx, stats, "pmi", 7)
    assert model.entities == frozenset({"x", "y"})
    ((a, b, measure, score),) = model.relationships
    assert (a, b, measure) == ("x", "y", "pmi")
    assert score == pytest.approx(0.0, abs=1e-12)  # both terms in both transactions


def test_f12_model_recomposes_from_related_terms(f12_tx, f12_pairs):
    for measure in ("pmi", "lr"):
        model = build_er_model(f12_tx, f12_pairs, measure, 7)
        expected = set()
        for entity in f12_tx.vocab:
            for neighbor, value in related_terms(f12_pairs, entity, measure, 7):
                a, b = min(entity, neighbor), max(entity, neighbor)
                expected.add((a, b, measure, value))
        assert model.relationships == frozenset(expected)
        assert model.entities == f12_tx.vocab
        for a, b, _, _ in model.relationships:
            assert a in model.entities and b in model.entities and a < b


def test_unknown_seed_is_isolated():
    graph = neighbor_graph([], ["mystery"])
    assert graph.nodes == (GraphNode("mystery", True),)
    assert graph.edges == ()


def test_two_seed_stars(f12_pairs):
    graph = neighbor_graph(f12_pairs, ["computer", "database"], "pmi", 7, 1)
    seeds = {node.term for node in graph.nodes if node.is_seed}
    assert seeds == {"computer", "database"}
    for seed in seeds:
        assert sum(1 for e in graph.edges if e.source == seed) <= 7
    assert {e.source for e in graph.edges} <= seeds
    node_terms = {node.term for node in graph.nodes}
    for edge in graph.edges:
        assert edge.target in node_terms


def test_depth2_matches_bfs_oracle(f12_tx, f12_pairs):
    table = oracles.pair_stats_table(dict(f12_tx.transactions), 2)
    for seeds in (["database"], ["computer", "science"], ["graph", "query"]):
        graph = neighbor_graph(f12_pairs, seeds, "pmi", 3, 2)
        assert {n.term for n in graph.nodes} == oracles.bfs_nodes(table, seeds, "pmi", 3, 2)


def test_node_count_geometric_bound(f12_pairs):
    for depth in (1, 2):
        for k in (2, 7):
            graph = neighbor_graph(f12_pairs, ["database", "science"], "pmi", k, depth)
            bound = 2 + 2 * sum(k**d for d in range(1, depth + 1))
            assert len(graph.nodes) <= bound
    with pytest.raises(UsageError):
        neighbor_graph(f12_pairs, ["database"], depth=0)


def test_empty_graph_json_bytes():
    graph = ConceptGraph((), ())
    assert export_graph(graph, "json") == b'{"nodes":[],"edges":[]}'


def test_single_edge_dot():
    graph = ConceptGraph(
        (GraphNode("a", True), GraphNode("b", False)),
        (GraphEdge("a", "b", 0.5, "pmi"),),
    )
    rendered = export_graph(graph, "dot").decode()
    assert rendered.count("--") == 1
    assert '"a" -- "b"' in rendered
    assert rendered.startswith("graph")


def test_unknown_format():
    with pytest.raises(UsageError):
        export_graph(ConceptGraph((), ()), "yaml")
    with pytest.raises(UsageError):
        export_graph(object(), "json")


def test_json_export_parse_export_fixed_point(f12_pairs):
    graph = neighbor_graph(f12_pairs, ["database", "computer"], "pmi", 7, 2)
    first = export_graph(graph, "json")
    reparsed = graph_from_json(first)
    assert export_graph(reparsed, "json") == first
    payload = json.loads(first)
    assert set(payload) == {"nodes", "edges"}
    for node in payload["nodes"]:
        assert set(node) == {"term", "seed"}
    for edge in payload["edges"]:
        assert set(edge) == {"from", "to", "measure", "score"}


def test_graphml_is_well_formed(f12_pairs):
    graph = neighbor_graph(f12_pairs, ["database"], "lr", 5, 1)
    blob = export_graph(graph, "graphml")
    root = ET.fromstring(blob)
    ns = "{http://graphml.graphdrawing.org/xmlns}"
    nodes = root.findall(f"{ns}graph/{ns}node")
    edges = root.findall(f"{ns}graph/{ns}edge")
    assert len(nodes) == len(graph.nodes)
    assert len(edges) == len(graph.edges)
    node_ids = {el.get("id") for el in nodes}
    for el in edges:
        assert el.get("source") in node_ids and el.get("target") in node_ids


def test_exports_are_byte_deterministic(f12_tx, f12_pairs):
    model = build_er_model(f12_tx, f12_pairs, "pmi", 7)
    for fmt in ("json", "graphml", "dot"):
        assert export_graph(model, fmt) == export_graph(model, fmt)


def test_golden_exports_stable(f12_tx, f12_pairs):
    model = build_er_model(f12_tx, f12_pairs, "pmi", 7)
    for fmt, name in (("json", "f12_er_pmi.json"), ("graphml", "f12_er_pmi.graphml"), ("dot", "f12_er_pmi.dot")):
        golden = (GOLDEN_DIR / name).read_bytes()
        assert export_graph(model, fmt) == golden


def test_er_invariants_on_random_corpora():
    rng = random.Random(99)
    config = TokenizerConfig(stopwords=frozenset(), min_term_length=1)
    for _ in range(5):
        docs = oracles.random_corpus(rng, max_docs=30)
        doc_set = DocumentSet(
            tuple(make_document(doc_id, doc_id, text, config) for doc_id, text in docs.items()),
            config,
        )
        index = build_index(doc_set)
        tx = build_transactions(index, k=5)
        stats = pair_counts(tx, 2)
        for measure in ("pmi", "lr"):
            model = build_er_model(tx, stats, measure, 4)
            assert model.entities == tx.vocab
            for a, b, m, _ in model.relationships:
                assert a < b and m == measure
                assert {a, b} <= model.entities
