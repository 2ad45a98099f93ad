# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled counting kernel: one pass over the text, 26 integer bins.

Must match letterstats._speedups_py.count_ascii_letters exactly; the parity
tests in tests/test_kernel.py hold both implementations to the same outputs.
"""


def count_ascii_letters(str text):
    cdef Py_ssize_t i, n = len(text)
    cdef Py_UCS4 ch
    cdef long long counts[26]
    for i in range(26):
        counts[i] = 0
    for i in range(n):
        ch = text[i]
        if u'a' <= ch <= u'z':
            counts[<int>ch - <int>u'a'] += 1
        elif u'A' <= ch <= u'Z':
            counts[<int>ch - <int>u'A'] += 1
    return [counts[i] for i in range(26)]
