"""Textbook SA-IS with explicit bucket and type arrays.

Deliberately not in-place: this module is the readable reference and the
second oracle. The in-place variants must agree with it everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import audit
from .textcore import Text

EMPTY = -1


@dataclass
class BucketTable:
    """First and last suffix-array slot of each character's bucket."""

    heads: list[int]
    tails: list[int]


def _type_map(t, n) -> bytearray:
    types = audit.scratch_bytes(n)  # 1 = S-type
    types[n - 1] = 1
    for i in range(n - 2, -1, -1):
        if t[i] != t[i + 1]:
            types[i] = 1 if t[i] < t[i + 1] else 0
        else:
            types[i] = types[i + 1]
    return types


def _is_lms(types, i) -> bool:
    return i > 0 and types[i] == 1 and types[i - 1] == 0


def bucket_boundaries(text: Text) -> BucketTable:
    """Counting pass plus prefix sums over the alphabet [0, sigma]."""
    t = text.symbols
    counts = audit.scratch_words(text.sigma + 1)
    for v in t:
        counts[v] += 1
    heads = audit.scratch_words(text.sigma + 1)
    tails = audit.scratch_words(text.sigma + 1)
    acc = 0
    for c in range(text.sigma + 1):
        heads[c] = acc
        acc += counts[c]
        tails[c] = acc - 1
    return BucketTable(heads=heads, tails=tails)


def induce_l(text: Text, sa, buckets: BucketTable, types) -> None:
    """Left-to-right scan placing L-suffixes at leftmost-free bucket slots.

    Empty entries are skipped, so seeding with LMS indices at bucket tails is
    enough to sort every L-suffix.
    """
    t = text.symbols
    n = len(t)
    lf = list(buckets.heads)
    for i in range(n):
        v = sa[i]
        if v == EMPTY or v == 0:
            continue
        j = v - 1
        if types[j] == 0:
            sa[lf[t[j]]] = j
            lf[t[j]] += 1


def induce_s(text: Text, sa, buckets: BucketTable, types) -> None:
    """Right-to-left scan placing S-suffixes at rightmost-free bucket slots."""
    t = text.symbols
    n = len(t)
    rf = list(buckets.tails)
    for i in range(n - 1, -1, -1):
        v = sa[i]
        if v == EMPTY or v == 0:
            continue
        j = v - 1
        if types[j] == 1:
            sa[rf[t[j]]] = j
            rf[t[j]] -= 1


def _lms_substring_equal(t, types, a: int, b: int) -> bool:
    # Spans are compared inclusive of both terminal LMS characters.
    k = 0
    while True:
        a_end = k > 0 and _is_lms(types, a + k)
        b_end = k > 0 and _is_lms(types, b + k)
        if a_end and b_end:
            return True
        if a_end != b_end:
            return False
        if t[a + k] != t[b + k]:
            return False
        k += 1


def sais(text: Text) -> list[int]:
    """Full SA-IS recursion with unrestricted workspace."""
    t = text.symbols
    n = len(t)
    sa = audit.scratch_words(n)
    _sais(t, n, text.sigma, sa)
    return sa


def _sais(t, n, sigma, sa) -> None:
    if n == 1:
        sa[0] = 0
        return
    types = _type_map(t, n)
    text = Text.__new__(Text)
    text.symbols = t
    text.sigma = sigma
    buckets = bucket_boundaries(text)

    # Step 1: sort LMS characters into bucket tails, then induce substrings.
    for i in range(n):
        sa[i] = EMPTY
    rf = list(buckets.tails)
    for i in range(n - 1, 0, -1):
        if _is_lms(types, i):
            c = t[i]
            sa[rf[c]] = i
            rf[c] -= 1
    induce_l(text, sa, buckets, types)
    induce_s(text, sa, buckets, types)

    # Step 2: rank LMS substrings in sorted order (sentinel substring rank 0).
    n1 = 0
    for i in range(n):
        if _is_lms(types, sa[i]) or sa[i] == n - 1:
            sa[n1] = sa[i]
            n1 += 1
    for i in range(n1, n):
        sa[i] = EMPTY
    rank = 0
    prev = sa[0]
    sa[n1 + prev // 2] = 0
    for k in range(1, n1):
        cur = sa[k]
        if not _lms_substring_equal(t, types, prev, cur):
            rank += 1
        sa[n1 + cur // 2] = rank
        prev = cur

    # Step 3: build the reduced text in text order and recurse if needed.
    t1 = audit.scratch_words(n1)
    w = 0
    for i in range(n1, n):
        if sa[i] != EMPTY:
            t1[w] = sa[i]
            w += 1
    sa1 = audit.scratch_words(n1)
    if rank + 1 == n1:
        for i, r in enumerate(t1):
            sa1[r] = i
    else:
        _sais(t1, n1, rank, sa1)

    # Step 4: map reduced ranks back to LMS positions and induce everything.
    lms = audit.scratch_words(n1)
    w = n1
    for i in range(n - 1, 0, -1):
        if _is_lms(types, i):
            w -= 1
            lms[w] = i
    for i in range(n):
        sa[i] = EMPTY
    rf = list(buckets.tails)
    for k in range(n1 - 1, -1, -1):
        v = lms[sa1[k]]
        c = t[v]
        sa[rf[c]] = v
        rf[c] -= 1
    induce_l(text, sa, buckets, types)
    induce_s(text, sa, buckets, types)
