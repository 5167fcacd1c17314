"""Score term relatedness two ways (pmi vs lr) over keyword co-occurrence."""

from pathlib import Path

from conceptgraph import build_index, build_transactions, ingest, pair_counts, related_terms

CORPUS = Path(__file__).resolve().parents[1] / "tests" / "data" / "f12.jsonl"

index = build_index(ingest(CORPUS, "jsonl"))
tx = build_transactions(index, k=10)
pairs = pair_counts(tx, min_support=2)
print(f"{tx.n} transactions over {len(tx.vocab)} keyword terms -> {len(pairs)} co-occurring pairs\n")

sample = pairs[0]
print(f"example pair ({sample.a}, {sample.b}): "
      f"c_a={sample.c_a} c_b={sample.c_b} c_ab={sample.c_ab} n={sample.n}\n")

for query in ("database", "computer"):
    for measure in ("pmi", "lr"):
        print(f"{measure} neighbors of {query!r}:")
        for neighbor, value in related_terms(pairs, query, measure, k=7):
            print(f"  {value:9.4f}  {neighbor}")
        print()
