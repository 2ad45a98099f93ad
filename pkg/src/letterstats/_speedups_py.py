"""Pure-Python counting kernel, used when the compiled extension is absent.

Counter(text) dispatches to the C helper in collections, so this path stays
usable on large corpora, just a few times slower than the extension.
"""

from collections import Counter

_UPPER = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
_LOWER = "abcdefghijklmnopqrstuvwxyz"


def count_ascii_letters(text):
    """Return a 26-entry list of counts for a-z (either case) in ``text``.

    Only the ASCII letters are counted; every other character (including
    accented or non-Latin letters) contributes nothing.  Counting is done
    without case-folding the input, so locale-surprising mappings such as
    'ß'.upper() == 'SS' can never invent letters.
    """
    c = Counter(text)
    return [c[lo] + c[up] for lo, up in zip(_LOWER, _UPPER)]
