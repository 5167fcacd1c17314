"""Concept graph extraction from text corpora.

Pipeline: ingest and tokenize documents, build an inverted index, extract
per-document keywords with tf-idf style scores, count document-level keyword
co-occurrence, score term relatedness with pmi or likelihood ratios, and
assemble the result into browsable, exportable concept graphs served over
HTTP.
"""

from .corpus import Document, DocumentSet, Token, TokenizerConfig, default_stopwords, ingest, make_document, tokenize
from .cooccur import (
    PairStats,
    TransactionSet,
    build_transactions,
    likelihood_ratio,
    pair_counts,
    pmi,
    related_terms,
)
from .ergraph import ConceptGraph, ERModel, GraphEdge, GraphNode, build_er_model, export_graph, graph_from_json, neighbor_graph
from .index import Index, TermStats, build_index, load_index, lookup_stats, save_index
from .keywords import (
    Keyphrase,
    KeywordScore,
    combine_ngrams,
    extract_keywords,
    highlight_spans,
    idf,
    score,
)
from .service import create_app

__version__ = "0.1.0"

__all__ = [
    "ConceptGraph",
    "Document",
    "DocumentSet",
    "ERModel",
    "GraphEdge",
    "GraphNode",
    "Index",
    "Keyphrase",
    "KeywordScore",
    "PairStats",
    "TermStats",
    "Token",
    "TokenizerConfig",
    "TransactionSet",
    "build_er_model",
    "build_index",
    "build_transactions",
    "combine_ngrams",
    "create_app",
    "default_stopwords",
    "export_graph",
    "extract_keywords",
    "graph_from_json",
    "highlight_spans",
    "idf",
    "ingest",
    "likelihood_ratio",
    "load_index",
    "lookup_stats",
    "make_document",
    "neighbor_graph",
    "pair_counts",
    "pmi",
    "related_terms",
    "save_index",
    "score",
    "tokenize",
]
