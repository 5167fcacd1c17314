"""Inverted index over a document set, with binary persistence.

The index holds every count the scoring formulas need: term frequencies per
document (postings), document frequencies, kept-token document lengths and
the corpus size.  Document titles and raw text ride along so a loaded index
is self-contained, and the tokenizer config is stored with it so queries can
be tokenized exactly like the corpus was.
"""

from __future__ import annotations

import json
import struct
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import NamedTuple

from .corpus import DocumentSet, TokenizerConfig
from .errors import DocumentNotFoundError, IndexFormatError, IndexVersionError

INDEX_MAGIC = b"CGIX"
INDEX_VERSION = 1


@dataclass(eq=True)
class Index:
    n: int
    postings: dict[str, tuple[tuple[str, int], ...]]  # term -> ((doc_id, tf), ...) sorted by doc_id
    df: dict[str, int]
    doc_len: dict[str, int]
    doc_meta: dict[str, tuple[str, str]]  # doc_id -> (title, text)
    config: TokenizerConfig

    @cached_property
    def doc_tfs(self) -> dict[str, dict[str, int]]:
        """Forward map doc_id -> {term: tf}, derived lazily from postings."""
        forward = {doc_id: {} for doc_id in self.doc_meta}
        for term, posting in self.postings.items():
            for doc_id, tf in posting:
                forward[doc_id][term] = tf
        return forward

    def __contains__(self, doc_id: str) -> bool:
        return doc_id in self.doc_meta


class TermStats(NamedTuple):
    tf: int | None
    df: int
    n: int
    doc_len: int | None


def build_index(docs: DocumentSet) -> Index:
    """Count term statistics over a document set.

    The result does not depend on document order: postings are sorted by
    doc_id, so any permutation of the same documents builds an equal Index.
    """
    tf_by_term: dict[str, dict[str, int]] = {}
    doc_len = {}
    doc_meta = {}
    for doc in docs:
        counts: dict[str, int] = {}
        for token in doc.tokens:
            counts[token.term] = counts.get(token.term, 0) + 1
        for term, tf in counts.items():
            tf_by_term.setdefault(term, {})[doc.id] = tf
        doc_len[doc.id] = len(doc.tokens)
        doc_meta[doc.id] = (doc.title, doc.text)
    postings = {term: tuple(sorted(by_doc.items())) for term, by_doc in tf_by_term.items()}
    df = {term: len(posting) for term, posting in postings.items()}
    return Index(len(docs), postings, df, doc_len, doc_meta, docs.config)


def lookup_stats(index: Index, term: str, doc_id: str | None = None) -> TermStats:
    """Fetch (tf, df, n, doc_len) for a term, optionally within one document.

    An unindexed term yields df=0 with tf absent (None); an unknown doc_id is
    an error.
    """
    df = index.df.get(term, 0)
    if doc_id is None:
        return TermStats(None, df, index.n, None)
    if doc_id not in index.doc_meta:
        raise DocumentNotFoundError(f"unknown document id {doc_id!r}")
    tf = index.doc_tfs[doc_id].get(term)
    return TermStats(tf, df, index.n, index.doc_len[doc_id])


def save_index(index: Index, path) -> None:
    """Write the index as magic + version + JSON payload."""
    payload = {
        "n": index.n,
        "postings": {term: [list(entry) for entry in posting] for term, posting in index.postings.items()},
        "df": index.df,
        "doc_len": index.doc_len,
        "doc_meta": {doc_id: list(meta) for doc_id, meta in index.doc_meta.items()},
        "config": {
            "stopwords": sorted(index.config.stopwords),
            "min_term_length": index.config.min_term_length,
            "fold_case": index.config.fold_case,
        },
    }
    body = json.dumps(payload, ensure_ascii=False, sort_keys=True).encode("utf-8")
    Path(path).write_bytes(INDEX_MAGIC + struct.pack(">I", INDEX_VERSION) + body)


def load_index(path) -> Index:
    """Read an index written by save_index; never returns a partial Index."""
    try:
        blob = Path(path).read_bytes()
    except OSError as exc:
        raise IndexFormatError(f"cannot read index file {path}: {exc}") from exc
    if len(blob) < 8 or blob[:4] != INDEX_MAGIC:
        raise IndexFormatError(f"{path} is not an index file (bad magic header)")
    (version,) = struct.unpack(">I", blob[4:8])
    if version != INDEX_VERSION:
        raise IndexVersionError(
            f"{path} uses index format version {version}, this build reads version {INDEX_VERSION}"
        )
    try:
        payload = json.loads(blob[8:].decode("utf-8"))
        config = TokenizerConfig(
            stopwords=frozenset(payload["config"]["stopwords"]),
            min_term_length=payload["config"]["min_term_length"],
            fold_case=payload["config"]["fold_case"],
        )
        index = Index(
            n=payload["n"],
            postings={
                term: tuple((doc_id, tf) for doc_id, tf in posting)
                for term, posting in payload["postings"].items()
            },
            df=payload["df"],
            doc_len=payload["doc_len"],
            doc_meta={doc_id: (meta[0], meta[1]) for doc_id, meta in payload["doc_meta"].items()},
            config=config,
        )
        _check_consistency(index)
        return index
    except (ValueError, KeyError, TypeError, IndexError) as exc:
        raise IndexFormatError(f"{path} is truncated or corrupt: {exc}") from exc


def _check_consistency(index: Index) -> None:
    """Reject payloads that parsed but cannot be a whole index."""
    if not isinstance(index.n, int) or index.n != len(index.doc_meta):
        raise ValueError("document count disagrees with doc_meta")
    if set(index.doc_len) != set(index.doc_meta):
        raise ValueError("doc_len and doc_meta cover different documents")
    if set(index.df) != set(index.postings):
        raise ValueError("df and postings cover different terms")
    for term, posting in index.postings.items():
        if index.df[term] != len(posting):
            raise ValueError(f"df({term!r}) disagrees with its posting list")
        for doc_id, tf in posting:
            if doc_id not in index.doc_meta or not isinstance(tf, int) or tf < 1:
                raise ValueError(f"bad posting entry for {term!r}")
