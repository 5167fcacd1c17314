"""Assemble the entity-relationship model and export concept graphs."""

from pathlib import Path

from conceptgraph import (
    build_er_model,
    build_index,
    build_transactions,
    export_graph,
    ingest,
    neighbor_graph,
    pair_counts,
)

CORPUS = Path(__file__).resolve().parents[1] / "tests" / "data" / "f12.jsonl"

index = build_index(ingest(CORPUS, "jsonl"))
tx = build_transactions(index)
pairs = pair_counts(tx)

model = build_er_model(tx, pairs, measure="pmi", k=7)
print(f"er model: {len(model.entities)} entities, {len(model.relationships)} scored relationships")
print("classification slots (kept empty):", model.entity_sets, model.relationship_sets)

graph = neighbor_graph(pairs, seeds=["database", "computer"], measure="pmi", k=7, depth=1)
print(f"\nneighbor graph for seeds database+computer: {len(graph.nodes)} nodes, {len(graph.edges)} edges")
for edge in graph.edges[:8]:
    print(f"  {edge.source} -- {edge.target}  ({edge.measure}={edge.score:.4f})")

print("\njson export (first 200 bytes):")
print(" ", export_graph(graph, "json")[:200], b"...")

out_dir = Path(__file__).parent / "out"
out_dir.mkdir(exist_ok=True)
for fmt in ("json", "graphml", "dot"):
    path = out_dir / f"concepts.{fmt}"
    path.write_bytes(export_graph(graph, fmt))
    print(f"wrote {path}")
