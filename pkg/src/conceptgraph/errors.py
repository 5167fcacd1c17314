"""Exception types shared across the package.

Two families matter to callers: ``UsageError`` for bad arguments (the CLI
exits 1) and ``ConceptGraphError`` subclasses for data-level failures
(the CLI exits 2).
"""


class UsageError(ValueError):
    """An argument or flag was used incorrectly (unknown format, bad count)."""


class ConceptGraphError(Exception):
    """Base class for data-level errors."""


class IngestError(ConceptGraphError):
    """A corpus source could not be read or parsed."""


class DuplicateIdError(IngestError):
    """Two documents in one corpus carry the same id."""


class DocumentNotFoundError(ConceptGraphError):
    """A document id is not present in the index."""


class AbsentTermError(ConceptGraphError):
    """A term was scored against a document that does not contain it."""


class EmptyCorpusError(ConceptGraphError):
    """A statistic was requested from an index with zero documents."""


class IndexFormatError(ConceptGraphError):
    """An index file is not in the expected on-disk format."""


class IndexVersionError(IndexFormatError):
    """An index file was written by an incompatible format version."""


class ConditioningError(ConceptGraphError):
    """A conditional ratio was requested on a term present in every transaction."""
