import pytest
from fastapi.testclient import TestClient

import oracles
from conceptgraph import create_app, export_graph, neighbor_graph, tokenize
from conceptgraph.service import search_scores, seed_terms


@pytest.fixture(scope="module")
def client(f12_index, f12_pairs):
    app = create_app(f12_index, f12_pairs)
    with TestClient(app) as c:
        yield c


def test_health(client, f12_index):
    response = client.get("/api/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok", "docs": f12_index.n}


def test_search_shape_and_ranking(client, f12_docs, f12_index):
    response = client.get("/api/search", params={"q": "computer science database", "limit": 10})
    assert response.status_code == 200
    results = response.json()["results"]
    assert results
    for row in results:
        assert set(row) == {"doc_id", "title", "score", "snippet"}
        assert len(row["snippet"]) <= 200

    # oracle: per-document sum of squared-variant scores over distinct query terms
    token_lists = {doc.id: [t.term for t in doc.tokens] for doc in f12_docs}
    tf, df, doc_len, n = oracles.count_stats(token_lists)
    query_terms = sorted({"computer", "science", "database"})
    expected = {}
    for doc_id in token_lists:
        total = 0.0
        hit = False
        for term in query_terms:
            if (doc_id, term) in tf:
                hit = True
                total += oracles.squared_score(tf[(doc_id, term)], n, df[term], doc_len[doc_id])
        if hit:
            expected[doc_id] = total
    want = sorted(expected.items(), key=lambda item: (-item[1], item[0]))[:10]
    assert [row["doc_id"] for row in results] == [doc_id for doc_id, _ in want]
    for row, (_, score) in zip(results, want):
        assert row["score"] == pytest.approx(score, abs=1e-9)


def test_search_single_term_reduces_to_score_sort(client, f12_index):
    response = client.get("/api/search", params={"q": "database"})
    docs_with_term = {doc_id for doc_id, _ in f12_index.postings["database"]}
    assert {row["doc_id"] for row in response.json()["results"]} == docs_with_term


def test_search_stopword_query_is_400(client):
    response = client.get("/api/search", params={"q": "the of and"})
    assert response.status_code == 400
    assert "error" in response.json()


def test_search_monotone_in_limit(client):
    small = client.get("/api/search", params={"q": "computer science database", "limit": 3}).json()
    big = client.get("/api/search", params={"q": "computer science database", "limit": 4}).json()
    assert big["results"][:3] == small["results"]


def test_document_shape_and_spans(client, f12_docs):
    doc = next(d for d in f12_docs if d.id == "d03")
    response = client.get("/api/documents/d03")
    assert response.status_code == 200
    body = response.json()
    assert set(body) == {"doc_id", "title", "text", "keyphrases", "highlights"}
    assert body["text"] == doc.text
    config = f12_docs.config
    assert body["keyphrases"]
    for phrase in body["keyphrases"]:
        for start, end in phrase["spans"]:
            sliced = body["text"][start:end]
            assert [t.term for t in tokenize(sliced, config)] == phrase["terms"]
    previous_end = -1
    for start, end in body["highlights"]:
        assert start >= previous_end
        previous_end = end


def test_document_unknown_is_404(client):
    response = client.get("/api/documents/ghost")
    assert response.status_code == 404
    assert "error" in response.json()


def test_graph_bytes_equal_offline_export(client, f12_index, f12_pairs):
    response = client.get(
        "/api/graph",
        params=[("term", "computer science"), ("term", "database"), ("measure", "pmi"), ("k", 7), ("depth", 1)],
    )
    assert response.status_code == 200
    assert response.headers["content-type"].startswith("application/json")
    seeds = seed_terms(["computer science", "database"], f12_index)
    assert seeds == ["computer", "science", "database"]
    offline = export_graph(neighbor_graph(f12_pairs, seeds, "pmi", 7, 1), "json")
    assert response.content == offline


def test_graph_bad_measure_is_400(client):
    response = client.get("/api/graph", params={"term": "database", "measure": "xyz"})
    assert response.status_code == 400
    assert "error" in response.json()


def test_graph_seed_edge_bound(client):
    body = client.get("/api/graph", params={"term": "database", "k": 7}).json()
    from_seed = [e for e in body["edges"] if e["from"] == "database"]
    assert len(from_seed) <= 7


def test_graph_unknown_seed_isolated(client):
    body = client.get("/api/graph", params={"term": "xylophone"}).json()
    assert body == {"nodes": [{"term": "xylophone", "seed": True}], "edges": []}


def test_suggest_matches_filter_oracle(client, f12_index):
    response = client.get("/api/suggest", params={"prefix": "data", "limit": 10})
    expected = sorted(t for t in f12_index.postings if t.startswith("data"))[:10]
    assert response.json() == {"terms": expected}
    assert expected == ["data", "database", "datasets"]


def test_suggest_no_match(client):
    assert client.get("/api/suggest", params={"prefix": "zzz"}).json() == {"terms": []}


def test_endpoints_are_pure(client):
    for url, params in [
        ("/api/search", {"q": "database"}),
        ("/api/documents/d01", {}),
        ("/api/graph", {"term": "database", "measure": "lr"}),
        ("/api/suggest", {"prefix": "s"}),
    ]:
        first = client.get(url, params=params)
        second = client.get(url, params=params)
        assert first.content == second.content


def test_cors_headers_present(client):
    response = client.get("/api/health", headers={"Origin": "http://elsewhere.test"})
    assert response.headers.get("access-control-allow-origin") == "*"


def test_search_scores_helper_ignores_absent_terms(f12_index):
    scores = search_scores(f12_index, ["database", "zzz", "database"])
    assert scores
    assert all(score > 0 for score in scores.values())


def test_keyword_free_document_and_empty_vocab_suggest():
    from conceptgraph import DocumentSet, TokenizerConfig, build_index, make_document

    config = TokenizerConfig()  # default stopwords swallow the whole text
    docs = DocumentSet(
        (make_document("dull", "Only Stopwords", "the of and to be", config),), config
    )
    index = build_index(docs)
    app = create_app(index, [])
    with TestClient(app) as client:
        body = client.get("/api/documents/dull").json()
        assert body["text"] == "the of and to be"
        assert body["keyphrases"] == []
        assert body["highlights"] == []
        assert client.get("/api/suggest", params={"prefix": ""}).json() == {"terms": []}
