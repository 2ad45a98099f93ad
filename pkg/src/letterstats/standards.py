"""Category standards: aggregate document histograms, rank letters, and
derive least-common removal sets.

Two aggregation modes exist because they genuinely differ on real corpora:

* ``pooled`` (default): sum the raw counts over all documents and normalize
  once.  Long documents weigh more.
* ``mean``: average the per-document percentage vectors.  Every document
  weighs the same regardless of length.

Dispersion is always the sample standard deviation (n-1 denominator) of the
per-document percentage vectors, which keeps error bars in percent units.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import EmptyCategoryError, StandardFormatError
from .histogram import ALPHABET, FrequencyVector, LetterHistogram, to_frequency

AGGREGATION_MODES = ("pooled", "mean")


@dataclass(frozen=True)
class CategoryStandard:
    """A named category's aggregate frequency vector with per-letter spread."""

    category: str
    mean_freq: FrequencyVector
    dispersion: tuple[float, ...]
    n_docs: int
    mode: str

    def __post_init__(self):
        if len(self.dispersion) != 26 or any(d < 0 for d in self.dispersion):
            raise ValueError("dispersion must be 26 nonnegative entries")
        if self.n_docs < 1:
            raise ValueError("n_docs must be >= 1")
        if self.mode not in AGGREGATION_MODES:
            raise ValueError(f"mode must be one of {AGGREGATION_MODES}")


@dataclass(frozen=True)
class RankedDistribution:
    """Letters ordered by descending frequency with the running cumulative sum."""

    order: tuple[str, ...]
    sorted_percent: tuple[float, ...]
    cumulative: tuple[float, ...]


@dataclass(frozen=True)
class RemovalSet:
    """The letters to erase so that the kept set retains a target cumulative share."""

    letters: frozenset[str]
    retained_cumulative: float

    @property
    def kept(self) -> frozenset[str]:
        return frozenset(ALPHABET) - self.letters


def _sample_std(values: list[float]) -> float:
    n = len(values)
    if n < 2:
        return 0.0
    m = math.fsum(values) / n
    return math.sqrt(math.fsum((v - m) ** 2 for v in values) / (n - 1))


def build_standard(
    category: str,
    docs: list[LetterHistogram],
    mode: str = "pooled",
) -> CategoryStandard:
    """Aggregate per-document histograms into a category standard.

    Every document must contain at least one letter (EmptyDocumentError
    propagates otherwise); an empty ``docs`` list raises EmptyCategoryError.
    """
    if mode not in AGGREGATION_MODES:
        raise ValueError(f"mode must be one of {AGGREGATION_MODES}")
    if not docs:
        raise EmptyCategoryError(f"category {category!r} has no documents")

    per_doc = [to_frequency(h) for h in docs]

    if mode == "pooled":
        pooled = docs[0]
        for h in docs[1:]:
            pooled = pooled + h
        mean_freq = to_frequency(pooled)
    else:
        n = len(per_doc)
        mean_freq = FrequencyVector.from_percent(
            [math.fsum(f.percent[i] for f in per_doc) / n for i in range(26)]
        )

    dispersion = tuple(
        _sample_std([f.percent[i] for f in per_doc]) for i in range(26)
    )
    return CategoryStandard(category, mean_freq, dispersion, len(docs), mode)


def rank(f: FrequencyVector) -> RankedDistribution:
    """Sort letters by descending frequency (alphabetical tie-break) and
    accumulate the running sum of the sorted percentages."""
    pairs = sorted(zip(ALPHABET, f.percent), key=lambda p: (-p[1], p[0]))
    order = tuple(ch for ch, _ in pairs)
    sorted_percent = tuple(p for _, p in pairs)
    cumulative = []
    for p in sorted_percent:
        cumulative.append(math.fsum([cumulative[-1] if cumulative else 0.0, p]))
    return RankedDistribution(order, sorted_percent, tuple(cumulative))


def derive_removal_set(std: CategoryStandard, target_retention: float) -> RemovalSet:
    """Pick the top-k letters whose cumulative share is nearest the target and
    return the complement as the removal set.

    k is chosen to minimize |cumulative(k) - target_retention| over k = 0..26
    (smallest k wins ties), so a target of 0 removes the whole alphabet and a
    target of 100 removes nothing.  Nearest-cumulative selection, rather than
    first-exceeding, keeps the kept set from overshooting coarse targets.
    """
    if not 0.0 <= target_retention <= 100.0:
        raise ValueError("target_retention must be within [0, 100]")
    ranked = rank(std.mean_freq)
    best_k = 0
    best_err = abs(0.0 - target_retention)
    for k in range(1, 27):
        err = abs(ranked.cumulative[k - 1] - target_retention)
        if err < best_err:
            best_err = err
            best_k = k
    kept = set(ranked.order[:best_k])
    retained = ranked.cumulative[best_k - 1] if best_k else 0.0
    return RemovalSet(frozenset(ALPHABET) - kept, retained)


def emit_distribution_report(std: CategoryStandard) -> list[tuple]:
    """Rows of (rank 1-26, letter, percent, dispersion, cumulative percent)
    in ranked order, ready for tabular output."""
    ranked = rank(std.mean_freq)
    rows = []
    for i, letter in enumerate(ranked.order):
        idx = ord(letter) - ord("a")
        rows.append(
            (
                i + 1,
                letter,
                ranked.sorted_percent[i],
                std.dispersion[idx],
                ranked.cumulative[i],
            )
        )
    return rows


# --- standard file serialization ---------------------------------------
#
# Key-value text format, one "key = value" per line, keys emitted in
# lexicographic order so identical standards serialize byte-identically:
#   category, freq.a .. freq.z, mode, n_docs, sd.a .. sd.z
# Floats use repr() (shortest round-trip decimal).


def dump_standard(std: CategoryStandard) -> str:
    fields: dict[str, str] = {"category": std.category}
    for ch in ALPHABET:
        fields[f"freq.{ch}"] = repr(std.mean_freq.percent_of(ch))
    fields["mode"] = std.mode
    fields["n_docs"] = str(std.n_docs)
    for i, ch in enumerate(ALPHABET):
        fields[f"sd.{ch}"] = repr(std.dispersion[i])
    return "".join(f"{k} = {fields[k]}\n" for k in sorted(fields))


def load_standard(text: str) -> CategoryStandard:
    fields: dict[str, str] = {}
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise StandardFormatError(f"line {line_no}: expected 'key = value'")
        fields[key.strip()] = value.strip()
    try:
        category = fields["category"]
        mode = fields["mode"]
        n_docs = int(fields["n_docs"])
        freq = {ch: float(fields[f"freq.{ch}"]) for ch in ALPHABET}
        sd = tuple(float(fields[f"sd.{ch}"]) for ch in ALPHABET)
    except KeyError as exc:
        raise StandardFormatError(f"missing field {exc.args[0]!r}") from None
    except ValueError as exc:
        raise StandardFormatError(str(exc)) from None
    try:
        return CategoryStandard(
            category, FrequencyVector.from_percent(freq), sd, n_docs, mode
        )
    except ValueError as exc:
        raise StandardFormatError(str(exc)) from None


def write_standard(std: CategoryStandard, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dump_standard(std))


def read_standard(path) -> CategoryStandard:
    with open(path, "r", encoding="utf-8") as fh:
        return load_standard(fh.read())
