"""Distance-based category prediction.

The distance between a test document and a category standard is the
Euclidean norm of the 26-entry difference of their percentage vectors.
Smaller distance means greater similarity; a document is assigned the
category of the nearest standard.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DuplicateCategoryError, NoStandardsError
from .histogram import FrequencyVector
from .standards import CategoryStandard


@dataclass(frozen=True)
class DistanceReport:
    """Distances from one document to every standard, plus the prediction."""

    doc_id: str
    per_standard: tuple[tuple[str, float], ...]
    predicted: str
    #: Categories tied with the winner at the minimum distance (usually empty).
    tied: tuple[str, ...] = field(default=())


@dataclass(frozen=True)
class BatchResult:
    """Distance matrix shaped (#standards x #docs) with per-row summaries."""

    categories: tuple[str, ...]
    doc_ids: tuple[str, ...]
    matrix: tuple[tuple[float, ...], ...]
    reports: tuple[DistanceReport, ...]
    row_mean: tuple[float, ...]
    row_std: tuple[float, ...]


def distance(std: FrequencyVector, test: FrequencyVector) -> float:
    """Euclidean distance between two percentage vectors."""
    return math.sqrt(
        math.fsum((a - b) ** 2 for a, b in zip(std.percent, test.percent))
    )


def _check_standards(standards: list[CategoryStandard]) -> None:
    if not standards:
        raise NoStandardsError("at least one standard is required")
    seen = set()
    for std in standards:
        if std.category in seen:
            raise DuplicateCategoryError(f"duplicate category {std.category!r}")
        seen.add(std.category)


def classify(
    doc: FrequencyVector,
    standards: list[CategoryStandard],
    doc_id: str = "",
) -> DistanceReport:
    """Compute the distance to every standard and predict the nearest.

    Distances are reported in the standards' input order; the prediction is
    the argmin, with exact ties broken by category name and surfaced in the
    report rather than hidden.
    """
    _check_standards(standards)
    per_standard = tuple(
        (std.category, distance(std.mean_freq, doc)) for std in standards
    )
    d_min = min(d for _, d in per_standard)
    at_min = sorted(cat for cat, d in per_standard if d == d_min)
    return DistanceReport(
        doc_id=doc_id,
        per_standard=per_standard,
        predicted=at_min[0],
        tied=tuple(at_min[1:]),
    )


def classify_batch(
    docs: list[tuple[str, FrequencyVector]],
    standards: list[CategoryStandard],
) -> BatchResult:
    """Classify many documents, returning the full distance matrix plus the
    per-standard mean and sample standard deviation across documents."""
    _check_standards(standards)
    if not docs:
        raise NoStandardsError("at least one document is required")

    reports = tuple(classify(vec, standards, doc_id) for doc_id, vec in docs)
    matrix = tuple(
        tuple(report.per_standard[i][1] for report in reports)
        for i in range(len(standards))
    )
    row_mean = tuple(math.fsum(row) / len(row) for row in matrix)
    row_std = []
    for row, mean in zip(matrix, row_mean):
        if len(row) < 2:
            row_std.append(0.0)
        else:
            row_std.append(
                math.sqrt(math.fsum((d - mean) ** 2 for d in row) / (len(row) - 1))
            )
    return BatchResult(
        categories=tuple(std.category for std in standards),
        doc_ids=tuple(doc_id for doc_id, _ in docs),
        matrix=matrix,
        reports=reports,
        row_mean=row_mean,
        row_std=tuple(row_std),
    )
