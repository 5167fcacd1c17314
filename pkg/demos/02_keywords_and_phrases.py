"""Rank keywords per document, compare score variants, and build keyphrases."""

from pathlib import Path

from conceptgraph import build_index, combine_ngrams, extract_keywords, highlight_spans, ingest, make_document

CORPUS = Path(__file__).resolve().parents[1] / "tests" / "data" / "f12.jsonl"

docs = ingest(CORPUS, "jsonl")
index = build_index(docs)

doc_id = "d03"
title, text = index.doc_meta[doc_id]
print(f"document {doc_id}: {title}")
print(f"  {text}\n")

for variant in ("classic", "squared"):
    ranked = extract_keywords(index, doc_id, k=5, variant=variant)
    print(f"top 5 keywords ({variant}):")
    for ks in ranked:
        print(f"  {ks.score:9.6f}  {ks.term}")
    print()

doc = make_document(doc_id, title, text, index.config)
keywords = extract_keywords(index, doc_id, k=10)
phrases = combine_ngrams(doc, keywords, max_n=2)
print("keyphrases (adjacent keywords merged, up to 2 terms):")
for phrase in phrases:
    print(f"  {phrase.score:9.6f}  {' '.join(phrase.terms)}  ({len(phrase.spans)} occurrence(s))")

print("\nhighlighted text:")
marked = text
for start, end in reversed(highlight_spans(doc, phrases)):
    marked = marked[:start] + "[" + marked[start:end] + "]" + marked[end:]
print(f"  {marked}")
