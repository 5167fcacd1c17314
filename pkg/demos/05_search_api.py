"""Exercise every HTTP endpoint in-process (no sockets needed).

To serve the same API for real:  conceptgraph serve <indexfile> --port 8080
"""

from pathlib import Path

from fastapi.testclient import TestClient

from conceptgraph import build_index, build_transactions, create_app, ingest, pair_counts

CORPUS = Path(__file__).resolve().parents[1] / "tests" / "data" / "f12.jsonl"

index = build_index(ingest(CORPUS, "jsonl"))
pairs = pair_counts(build_transactions(index))
app = create_app(index, pairs)

with TestClient(app) as client:
    print("GET /api/health ->", client.get("/api/health").json())

    results = client.get("/api/search", params={"q": "computer science database"}).json()["results"]
    print("\nGET /api/search?q=computer science database")
    for row in results[:5]:
        print(f"  {row['score']:8.4f}  {row['doc_id']}  {row['title']}")

    body = client.get("/api/documents/d12").json()
    print("\nGET /api/documents/d12")
    print("  title:", body["title"])
    print("  keyphrases:", [" ".join(p["terms"]) for p in body["keyphrases"]][:5])
    print("  highlight spans:", body["highlights"][:5])

    graph = client.get("/api/graph", params={"term": "database", "measure": "lr", "k": 5}).json()
    print("\nGET /api/graph?term=database&measure=lr&k=5")
    for edge in graph["edges"]:
        print(f"  {edge['from']} -- {edge['to']}  ({edge['measure']}={edge['score']:.3f})")

    print("\nGET /api/suggest?prefix=co ->", client.get("/api/suggest", params={"prefix": "co"}).json())

    print("\nerror contract:")
    print("  stopword-only query ->", client.get("/api/search", params={"q": "the of"}).status_code)
    print("  unknown document    ->", client.get("/api/documents/ghost").status_code)
    print("  bad measure         ->", client.get("/api/graph", params={"term": "x", "measure": "zz"}).status_code)
