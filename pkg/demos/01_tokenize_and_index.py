"""Walk through ingestion: raw text -> tokens with offsets -> count index."""

from pathlib import Path

from conceptgraph import TokenizerConfig, build_index, ingest, lookup_stats, tokenize

CORPUS = Path(__file__).resolve().parents[1] / "tests" / "data" / "f12.jsonl"

text = "The database engine parses SQL and runs each SQL query."
print("tokenizing:", repr(text))
for token in tokenize(text, TokenizerConfig()):
    print(f"  pos={token.position}  [{token.start:3d},{token.end:3d})  {token.term!r}"
          f"  (surface {text[token.start:token.end]!r})")

docs = ingest(CORPUS, "jsonl")
index = build_index(docs)
print(f"\nindexed {index.n} documents, {len(index.postings)} distinct terms")

for term in ("database", "computer", "science"):
    stats = lookup_stats(index, term)
    print(f"  df({term}) = {stats.df}")

stats = lookup_stats(index, "database", "d01")
print(f"\nwithin d01: tf(database) = {stats.tf}, |d01| = {stats.doc_len}")
print("postings for 'database':", index.postings["database"])
