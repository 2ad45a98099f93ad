"""Exception types raised across the package."""


class LetterStatsError(Exception):
    """Base class for all errors raised by this package."""


class EmptyDocumentError(LetterStatsError):
    """Document contains no alphabetic characters; it cannot yield frequencies."""


class EmptyCategoryError(LetterStatsError):
    """A category standard was requested from an empty document list."""


class NoStandardsError(LetterStatsError):
    """Classification was requested against an empty list of standards."""


class DuplicateCategoryError(LetterStatsError):
    """Two standards in one classification run share a category name."""


class AlphabetCollisionError(LetterStatsError):
    """Input text already contains '/' or '&', which the reduction encoding reserves."""


class ManifestError(LetterStatsError):
    """A corpus manifest failed to parse or validate."""

    def __init__(self, message, line_no=None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class DuplicateDocIdError(ManifestError):
    """Two manifest entries share a doc_id."""


class FetchError(LetterStatsError):
    """A remote document could not be fetched."""


class EmptyAfterStripError(LetterStatsError):
    """A document is empty once boilerplate is stripped."""


class MarkerOrderError(LetterStatsError):
    """Boilerplate markers are malformed (end before start, or unpaired)."""


class StandardFormatError(LetterStatsError):
    """A category-standard file failed to parse or validate."""
