"""Corpus ingestion and tokenization.

Documents come from a jsonl file (one ``{"id","title","text"}`` object per
line) or from a directory of UTF-8 ``.txt`` files.  Tokenization lowers the
text to maximal alphanumeric runs, drops stopwords and short terms, and keeps
character offsets into the original text for later highlighting.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import DuplicateIdError, IngestError, UsageError

# Maximal runs of Unicode letters/digits; underscore and hyphen both split.
_WORD_RE = re.compile(r"[^\W_]+", re.UNICODE)

CORPUS_FORMATS = ("jsonl", "txt-dir")


def default_stopwords() -> frozenset[str]:
    """Packaged list of common English function words."""
    text = resources.files("conceptgraph").joinpath("data/stopwords_en.txt").read_text("utf-8")
    words = set()
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line)
    return frozenset(words)


def load_stopwords(path) -> frozenset[str]:
    """Read a user stopword file (same format as the packaged one)."""
    try:
        text = Path(path).read_text("utf-8")
    except OSError as exc:
        raise IngestError(f"cannot read stopword file {path}: {exc}") from exc
    return frozenset(
        line.strip() for line in text.splitlines() if line.strip() and not line.strip().startswith("#")
    )


@dataclass(frozen=True)
class TokenizerConfig:
    stopwords: frozenset[str] = field(default_factory=default_stopwords)
    min_term_length: int = 2
    fold_case: bool = True

    def __post_init__(self):
        if self.min_term_length < 1:
            raise UsageError("min_term_length must be >= 1")
        object.__setattr__(self, "stopwords", frozenset(self.stopwords))


@dataclass(frozen=True)
class Token:
    term: str
    start: int
    end: int
    position: int


@dataclass(frozen=True)
class Document:
    id: str
    title: str
    text: str
    tokens: tuple[Token, ...]


@dataclass(frozen=True)
class DocumentSet:
    documents: tuple[Document, ...]
    config: TokenizerConfig

    def __post_init__(self):
        seen = set()
        for doc in self.documents:
            if doc.id in seen:
                raise DuplicateIdError(f"duplicate document id {doc.id!r}")
            seen.add(doc.id)

    def __len__(self):
        return len(self.documents)

    def __iter__(self):
        return iter(self.documents)


def normalize(surface: str, config: TokenizerConfig) -> str:
    """Apply the config's case folding to a raw token surface form."""
    return surface.casefold() if config.fold_case else surface


def tokenize(text: str, config: TokenizerConfig | None = None) -> list[Token]:
    """Split text into kept tokens with offsets into the original string.

    A token is a maximal run of letters/digits.  Terms are case folded when
    the config says so, then stopwords and terms shorter than
    ``min_term_length`` are dropped.  Offsets always index the input text;
    positions number the kept tokens 0, 1, 2, ...
    """
    if config is None:
        config = TokenizerConfig()
    tokens = []
    for match in _WORD_RE.finditer(text):
        term = normalize(match.group(), config)
        if len(term) < config.min_term_length:
            continue
        if term in config.stopwords:
            continue
        tokens.append(Token(term, match.start(), match.end(), len(tokens)))
    return tokens


def make_document(doc_id: str, title: str, text: str, config: TokenizerConfig) -> Document:
    return Document(doc_id, title, text, tuple(tokenize(text, config)))


def ingest(source, fmt: str = "jsonl", config: TokenizerConfig | None = None) -> DocumentSet:
    """Read a corpus from disk and tokenize every document.

    ``fmt`` selects the source layout: ``jsonl`` (one object per line with
    exactly the keys id/title/text) or ``txt-dir`` (every ``*.txt`` file in a
    directory, filename stem as id).  Input order is preserved; for a
    directory that is the sorted filename order.
    """
    if config is None:
        config = TokenizerConfig()
    if fmt == "jsonl":
        docs = _ingest_jsonl(Path(source), config)
    elif fmt == "txt-dir":
        docs = _ingest_txt_dir(Path(source), config)
    else:
        raise UsageError(f"unknown corpus format {fmt!r} (expected one of {', '.join(CORPUS_FORMATS)})")
    return DocumentSet(tuple(docs), config)


def _ingest_jsonl(path: Path, config: TokenizerConfig) -> list[Document]:
    try:
        raw = path.read_text("utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise IngestError(f"cannot read corpus {path}: {exc}") from exc
    docs = []
    seen = {}
    for lineno, line in enumerate(raw.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise IngestError(f"{path}: malformed jsonl on line {lineno}: {exc}") from exc
        if not isinstance(record, dict) or set(record) != {"id", "title", "text"}:
            raise IngestError(
                f"{path}: line {lineno} must be an object with exactly the keys id, title, text"
            )
        if not all(isinstance(record[key], str) for key in ("id", "title", "text")):
            raise IngestError(f"{path}: line {lineno}: id, title and text must all be strings")
        doc_id = record["id"]
        if doc_id in seen:
            raise DuplicateIdError(
                f"{path}: duplicate document id {doc_id!r} on lines {seen[doc_id]} and {lineno}"
            )
        seen[doc_id] = lineno
        docs.append(make_document(doc_id, record["title"], record["text"], config))
    return docs


def _ingest_txt_dir(path: Path, config: TokenizerConfig) -> list[Document]:
    if not path.is_dir():
        raise IngestError(f"not a directory: {path}")
    docs = []
    for file in sorted(path.glob("*.txt")):
        try:
            text = file.read_text("utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            raise IngestError(f"cannot read {file}: {exc}") from exc
        docs.append(make_document(file.stem, file.stem, text, config))
    return docs
