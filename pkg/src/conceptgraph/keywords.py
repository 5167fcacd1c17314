"""Per-document keyword scoring, ranking, n-gram keyphrases and highlights.

Two score variants are supported for a term t in document d:

* ``classic``: tf * idf
* ``squared``: (tf^2 + idf) / doc_len, which damps long documents and was
  the better-behaved variant in practice; it is the package default.

where idf = 1 + ln(n / (df + 1)) with the natural logarithm.  Only terms
actually present in the document (tf >= 1) are scored.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .corpus import Document
from .errors import AbsentTermError, DocumentNotFoundError, EmptyCorpusError, UsageError
from .index import Index

VARIANTS = ("classic", "squared")
DEFAULT_VARIANT = "squared"
DEFAULT_K = 10
DEFAULT_MAX_N = 3


@dataclass(frozen=True)
class KeywordScore:
    term: str
    doc_id: str
    score: float
    variant: str


@dataclass(frozen=True)
class Keyphrase:
    terms: tuple[str, ...]
    score: float
    spans: tuple[tuple[int, int], ...]  # (char start, char end) per occurrence


def _check_variant(variant: str) -> None:
    if variant not in VARIANTS:
        raise UsageError(f"unknown score variant {variant!r} (expected one of {', '.join(VARIANTS)})")


def idf(index: Index, term: str) -> float:
    """Inverse document frequency: 1 + ln(n / (df + 1)).

    Well-defined for df = 0 (unseen term) and df = n (term in every doc).
    """
    if index.n == 0:
        raise EmptyCorpusError("cannot compute idf over an empty corpus")
    return 1.0 + math.log(index.n / (index.df.get(term, 0) + 1))


def score(index: Index, term: str, doc_id: str, variant: str = DEFAULT_VARIANT) -> float:
    """Score one term of one document under the given variant."""
    _check_variant(variant)
    if doc_id not in index.doc_meta:
        raise DocumentNotFoundError(f"unknown document id {doc_id!r}")
    tf = index.doc_tfs[doc_id].get(term, 0)
    if tf < 1:
        raise AbsentTermError(f"term {term!r} does not occur in document {doc_id!r}")
    if variant == "classic":
        return tf * idf(index, term)
    return (tf * tf + idf(index, term)) / index.doc_len[doc_id]


def extract_keywords(
    index: Index, doc_id: str, k: int = DEFAULT_K, variant: str = DEFAULT_VARIANT
) -> list[KeywordScore]:
    """Top k distinct terms of a document, score descending, ties by term.

    Returns fewer than k entries when the document has fewer distinct terms.
    """
    _check_variant(variant)
    if k < 1:
        raise UsageError("k must be >= 1")
    if doc_id not in index.doc_meta:
        raise DocumentNotFoundError(f"unknown document id {doc_id!r}")
    scored = [
        KeywordScore(term, doc_id, score(index, term, doc_id, variant), variant)
        for term in index.doc_tfs[doc_id]
    ]
    scored.sort(key=lambda ks: (-ks.score, ks.term))
    return scored[:k]


def combine_ngrams(doc: Document, keywords: list[KeywordScore], max_n: int = DEFAULT_MAX_N) -> list[Keyphrase]:
    """Merge adjacent keyword tokens into keyphrases of up to max_n terms.

    A run is a maximal stretch of consecutive kept tokens whose terms are all
    extracted keywords; runs longer than max_n are split greedily left to
    right.  Occurrences of the same term sequence share one Keyphrase whose
    spans list them all.  The phrase score is the mean of the member keyword
    scores.
    """
    if max_n < 1:
        raise UsageError("max_n must be >= 1")
    by_term = {ks.term: ks.score for ks in keywords}
    occurrences: dict[tuple[str, ...], list[tuple[int, int]]] = {}

    def flush(run):
        for i in range(0, len(run), max_n):
            segment = run[i : i + max_n]
            terms = tuple(token.term for token in segment)
            occurrences.setdefault(terms, []).append((segment[0].start, segment[-1].end))

    run = []
    for token in doc.tokens:
        if token.term in by_term:
            run.append(token)
        elif run:
            flush(run)
            run = []
    if run:
        flush(run)

    phrases = [
        Keyphrase(terms, sum(by_term[t] for t in terms) / len(terms), tuple(spans))
        for terms, spans in occurrences.items()
    ]
    phrases.sort(key=lambda p: (-p.score, p.terms))
    return phrases


def highlight_spans(doc: Document, phrases: list[Keyphrase]) -> list[tuple[int, int]]:
    """All phrase occurrence spans, sorted ascending with overlaps merged."""
    spans = sorted(span for phrase in phrases for span in phrase.spans)
    merged: list[tuple[int, int]] = []
    for start, end in spans:
        if merged and start < merged[-1][1]:
            merged[-1] = (merged[-1][0], max(merged[-1][1], end))
        else:
            merged.append((start, end))
    return merged


def phrase_surface(doc: Document, span: tuple[int, int]) -> str:
    """The raw text slice a highlight span points at."""
    return doc.text[span[0] : span[1]]
