"""Published reference letter distributions for four categories of English
writing (percentages over n=20 documents per category, transcribed from a
printed ranking table; rounding makes each column sum to slightly under 100,
so vectors built from them are renormalized).

Useful as drop-in comparison standards when no local corpus is available.
The per-letter dispersions were not published, so the bundled standards
carry zero dispersion.
"""

from __future__ import annotations

from .histogram import ALPHABET, FrequencyVector
from .standards import CategoryStandard

REFERENCE_PERCENT: dict[str, dict[str, float]] = {
    "news": {
        "e": 11.91, "a": 9.03, "t": 8.56, "i": 7.71, "n": 7.60, "o": 7.20,
        "s": 6.69, "r": 6.47, "h": 4.51, "d": 4.31, "l": 3.93, "c": 3.13,
        "m": 2.69, "u": 2.59, "f": 2.31, "g": 2.07, "p": 2.03, "w": 1.77,
        "y": 1.77, "b": 1.32, "v": 1.03, "k": 0.78, "j": 0.22, "x": 0.18,
        "z": 0.14, "q": 0.08,
    },
    "novels": {
        "e": 12.39, "t": 9.03, "a": 8.12, "o": 7.72, "i": 6.94, "n": 6.87,
        "h": 6.45, "s": 6.16, "r": 5.68, "d": 4.53, "l": 4.00, "u": 2.91,
        "m": 2.72, "w": 2.43, "c": 2.26, "y": 2.20, "f": 2.17, "g": 2.02,
        "p": 1.59, "b": 1.48, "v": 1.04, "k": 0.84, "x": 0.15, "j": 0.13,
        "q": 0.10, "z": 0.06,
    },
    "plays": {
        "e": 11.93, "t": 8.65, "o": 8.27, "a": 7.73, "i": 6.79, "n": 6.49,
        "s": 6.43, "h": 6.13, "r": 6.11, "l": 4.55, "d": 3.93, "u": 3.34,
        "m": 2.94, "y": 2.54, "w": 2.34, "c": 2.33, "f": 2.11, "g": 1.88,
        "b": 1.60, "p": 1.48, "k": 1.00, "v": 0.98, "j": 0.14, "q": 0.13,
        "x": 0.13, "z": 0.05,
    },
    "science": {
        "e": 12.32, "t": 9.51, "i": 7.96, "a": 7.82, "o": 7.38, "n": 6.82,
        "s": 6.33, "r": 6.11, "h": 4.73, "l": 4.21, "c": 4.05, "d": 3.68,
        "f": 2.71, "m": 2.62, "u": 2.47, "p": 2.44, "g": 1.96, "b": 1.79,
        "y": 1.49, "w": 1.27, "v": 0.97, "k": 0.40, "x": 0.36, "q": 0.28,
        "j": 0.19, "z": 0.13,
    },
}

REFERENCE_CATEGORIES = tuple(sorted(REFERENCE_PERCENT))

#: Number of source documents behind each reference column.
REFERENCE_N_DOCS = 20


def reference_vector(category: str) -> FrequencyVector:
    """The reference distribution for ``category``, normalized to sum 100."""
    try:
        column = REFERENCE_PERCENT[category]
    except KeyError:
        raise KeyError(
            f"unknown reference category {category!r}; "
            f"choose from {REFERENCE_CATEGORIES}"
        ) from None
    return FrequencyVector.from_percent(column)


def reference_standard(category: str) -> CategoryStandard:
    """The reference distribution wrapped as a pooled CategoryStandard."""
    return CategoryStandard(
        category=category,
        mean_freq=reference_vector(category),
        dispersion=(0.0,) * 26,
        n_docs=REFERENCE_N_DOCS,
        mode="pooled",
    )


__all__ = [
    "ALPHABET",
    "REFERENCE_PERCENT",
    "REFERENCE_CATEGORIES",
    "REFERENCE_N_DOCS",
    "reference_vector",
    "reference_standard",
]
