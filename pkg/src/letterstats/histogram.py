"""Case-insensitive letter counting and percentage frequency vectors.

Counting is exact integer arithmetic over the 26 ASCII letters; division
happens only when a histogram is converted to percentages.  Histograms add,
so a large text can be counted in chunks (in parallel if desired) and the
partial histograms summed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._kernel import count_ascii_letters
from .errors import EmptyDocumentError

ALPHABET = "abcdefghijklmnopqrstuvwxyz"

#: Tolerance on "percentages sum to 100" for a valid FrequencyVector.
SUM_TOLERANCE = 1e-9


@dataclass(frozen=True)
class LetterHistogram:
    """Raw per-letter counts for one text, indexed a-z."""

    counts: tuple[int, ...]
    total: int

    def __post_init__(self):
        if len(self.counts) != 26:
            raise ValueError("counts must have exactly 26 entries")
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be nonnegative")
        if self.total != sum(self.counts):
            raise ValueError("total must equal the sum of counts")

    def __add__(self, other: "LetterHistogram") -> "LetterHistogram":
        merged = tuple(a + b for a, b in zip(self.counts, other.counts))
        return LetterHistogram(merged, self.total + other.total)

    def count_of(self, letter: str) -> int:
        return self.counts[ord(letter.lower()) - ord("a")]

    def as_dict(self) -> dict[str, int]:
        return dict(zip(ALPHABET, self.counts))


@dataclass(frozen=True)
class FrequencyVector:
    """26 percentage letter frequencies, indexed a-z, summing to 100."""

    percent: tuple[float, ...]

    def __post_init__(self):
        if len(self.percent) != 26:
            raise ValueError("percent must have exactly 26 entries")
        if any(p < 0 for p in self.percent):
            raise ValueError("percentages must be nonnegative")
        if abs(math.fsum(self.percent) - 100.0) > SUM_TOLERANCE:
            raise ValueError("percentages must sum to 100")

    @classmethod
    def from_percent(cls, values) -> "FrequencyVector":
        """Build a vector from 26 raw nonnegative values, normalizing to 100.

        Accepts a sequence indexed a-z or a mapping keyed by letter.  Used
        when reading standards back from disk and for reference distributions
        transcribed from published tables (which carry rounding error).
        """
        if hasattr(values, "keys"):
            values = [float(values.get(ch, 0.0)) for ch in ALPHABET]
        else:
            values = [float(v) for v in values]
        if len(values) != 26:
            raise ValueError("expected 26 values")
        if any(v < 0 for v in values):
            raise ValueError("values must be nonnegative")
        s = math.fsum(values)
        if s <= 0:
            raise ValueError("values must have a positive sum")
        return cls(tuple(100.0 * v / s for v in values))

    def percent_of(self, letter: str) -> float:
        return self.percent[ord(letter.lower()) - ord("a")]

    def as_dict(self) -> dict[str, float]:
        return dict(zip(ALPHABET, self.percent))


def count_letters(text: str) -> LetterHistogram:
    """Count occurrences of each ASCII letter in ``text``, ignoring case.

    Every non-letter character (punctuation, digits, whitespace, accented or
    non-Latin letters) contributes nothing.  The empty text is allowed and
    yields a histogram with total 0.
    """
    counts = count_ascii_letters(text)
    return LetterHistogram(tuple(counts), sum(counts))


def to_frequency(h: LetterHistogram) -> FrequencyVector:
    """Convert counts to percentage frequencies: 100 * count / total.

    Raises EmptyDocumentError when the histogram has no letters; callers
    must exclude such documents from standards and classification.
    """
    if h.total == 0:
        raise EmptyDocumentError("document has no alphabetic characters")
    return FrequencyVector(tuple(100.0 * c / h.total for c in h.counts))
