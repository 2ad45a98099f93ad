"""Passage reduction: erase a chosen letter set, or a random fraction of
letter occurrences, while keeping the text's shape readable.

Both modes use the same space encoding: every erased letter becomes ' ' and
every original space becomes '/', so word boundaries stay visible in the
reduced passage.  Character count is always preserved.

Inputs containing '/' or '&' are rejected (AlphabetCollisionError) because
those characters are reserved by the encoding; sanitize them first.  '&' is
refused even though this implementation never writes it, so that passages
stay interchangeable with tools that use '&' as the intermediate space mark.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import AlphabetCollisionError
from .histogram import ALPHABET, LetterHistogram, count_letters
from .standards import RemovalSet

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Deterministic 64-bit generator (SplitMix64), identical on every
    platform and Python version; each reduction call owns its own instance."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) by masked rejection (no modulo bias)."""
        if n <= 0:
            raise ValueError("n must be positive")
        if n == 1:
            return 0
        mask = (1 << (n - 1).bit_length()) - 1
        while True:
            v = self.next_u64() & mask
            if v < n:
                return v


def sample_without_replacement(n: int, k: int, seed: int) -> list[int]:
    """Choose k distinct indices from range(n), uniformly, deterministically.

    Draw order: a partial Fisher-Yates shuffle of [0..n-1] driven by
    SplitMix64(seed); the selected indices are the shuffled prefix of
    length k, returned in selection order.
    """
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    rng = SplitMix64(seed)
    pool = list(range(n))
    for j in range(k):
        swap = j + rng.below(n - j)
        pool[j], pool[swap] = pool[swap], pool[j]
    return pool[:k]


@dataclass(frozen=True)
class ReductionPlan:
    """Which letters to erase: an explicit set (least-common mode) or a
    seeded random fraction of letter occurrences (random mode)."""

    mode: str  # "least-common" | "random"
    removal_set: RemovalSet | None = None
    fraction: float | None = None
    seed: int | None = None

    def __post_init__(self):
        if self.mode == "least-common":
            if self.removal_set is None:
                raise ValueError("least-common mode requires removal_set")
        elif self.mode == "random":
            if self.fraction is None or self.seed is None:
                raise ValueError("random mode requires fraction and seed")
            if not 0.0 <= self.fraction <= 1.0:
                raise ValueError("fraction must be within [0, 1]")
        else:
            raise ValueError("mode must be 'least-common' or 'random'")


@dataclass(frozen=True)
class ReducedPassage:
    text: str
    erased_count: int
    original_letter_count: int


@dataclass(frozen=True)
class ReductionSummary:
    erased_count: int
    original_letter_count: int
    erased_fraction: float
    residual: LetterHistogram


def _check_encodable(text: str) -> None:
    if "/" in text or "&" in text:
        raise AlphabetCollisionError(
            "input already contains '/' or '&'; the space encoding would be ambiguous"
        )


def reduce_least_common(text: str, removal_set: RemovalSet) -> ReducedPassage:
    """Erase every occurrence (either case) of the removal-set letters.

    Spaces become '/', erased letters become ' ', everything else passes
    through unchanged.  Only U+0020 is treated as a space; newlines and
    tabs pass through.
    """
    _check_encodable(text)
    table = {ord(" "): "/"}
    for ch in removal_set.letters:
        table[ord(ch)] = " "
        table[ord(ch.upper())] = " "
    erased = sum(
        text.count(ch) + text.count(ch.upper()) for ch in removal_set.letters
    )
    original_letters = count_letters(text).total
    return ReducedPassage(text.translate(table), erased, original_letters)


def reduce_random(text: str, fraction: float, seed: int) -> ReducedPassage:
    """Erase exactly ceil(fraction * L) of the L letter occurrences, chosen
    uniformly without replacement by SplitMix64(seed); spaces become '/'.

    The same (text, fraction, seed) always produces the same output, on any
    platform.
    """
    if not 0.0 <= fraction <= 1.0:
        raise ValueError("fraction must be within [0, 1]")
    _check_encodable(text)
    letter_positions = [
        i for i, ch in enumerate(text) if ("a" <= ch <= "z") or ("A" <= ch <= "Z")
    ]
    n_letters = len(letter_positions)
    n_erase = math.ceil(fraction * n_letters)
    chosen = sample_without_replacement(n_letters, n_erase, seed)

    chars = list(text.translate({ord(" "): "/"}))
    for idx in chosen:
        chars[letter_positions[idx]] = " "
    return ReducedPassage("".join(chars), n_erase, n_letters)


def apply_plan(text: str, plan: ReductionPlan) -> ReducedPassage:
    if plan.mode == "least-common":
        return reduce_least_common(text, plan.removal_set)
    return reduce_random(text, plan.fraction, plan.seed)


def reduction_summary(p: ReducedPassage) -> ReductionSummary:
    """Quantify a reduction: erased fraction plus the residual letter histogram."""
    fraction = p.erased_count / p.original_letter_count if p.original_letter_count else 0.0
    return ReductionSummary(
        erased_count=p.erased_count,
        original_letter_count=p.original_letter_count,
        erased_fraction=fraction,
        residual=count_letters(p.text),
    )


__all__ = [
    "ALPHABET",
    "ReductionPlan",
    "ReducedPassage",
    "ReductionSummary",
    "SplitMix64",
    "sample_without_replacement",
    "reduce_least_common",
    "reduce_random",
    "apply_plan",
    "reduction_summary",
]
