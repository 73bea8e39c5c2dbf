"""Bitmap with a two-level directory answering select in O(1) word probes.

Layout inside a caller-provided arena (all sizes in machine words):

    [0] m                 number of set bits
    [1] W                 bitmap word count
    [2 .. 2+W)            bitmap, 63 usable bits per word (signed-safe)
    [2+W .. 2+W+G)        one directory word per group of 64 ones:
                          >= 0  -> dense: bit position of the group's first one
                          <  0  -> sparse: ~value is an arena offset where all
                                   positions of the group are stored verbatim
    [sparse area]         64 words per sparse group

A group is sparse when its ones span more than ``_DENSE_SPAN`` bits, so a
dense query never scans more than ``_DENSE_SPAN / 63`` bitmap words. Total
occupancy stays under 2n/log2(n) words for every n > 1024 exercised here;
the bitmap is included in that budget.
"""

from __future__ import annotations

from dataclasses import dataclass

from .textcore import InvalidInputError

_GROUP = 64          # ones per directory group
_WBITS = 63          # usable bits per bitmap word; keeps array('q') signed-safe
_DENSE_SPAN = 2048   # max bit span of a dense group
PROBE_BOUND = 4 + _DENSE_SPAN // _WBITS + 1


@dataclass
class SelectIndex:
    """Handle to a built directory; the data lives in the caller's arena."""

    buf: object
    lo: int
    words: int
    m: int


def build(positions, universe: int, arena_buf=None, arena_lo: int = 0) -> SelectIndex:
    """Build a select directory over strictly increasing positions in [0, universe].

    ``positions`` may be any indexable sequence, or a ``(buf, lo, count)``
    triple pointing into a buffer. When no arena is given a fresh list is
    allocated (non-audited convenience). Construction writes only into the
    arena plus O(1) locals.
    """
    if isinstance(positions, tuple) and len(positions) == 3:
        src_buf, src_lo, m = positions
    else:
        src_buf, src_lo, m = positions, 0, len(positions)

    nbits = universe + 1
    W = (nbits + _WBITS - 1) // _WBITS
    G = (m + _GROUP - 1) // _GROUP

    if arena_buf is None:
        arena_buf = [0] * (2 + W + G + 64 * G)
        arena_lo = 0
    buf = arena_buf
    base = arena_lo

    buf[base] = m
    buf[base + 1] = W
    bm = base + 2
    for k in range(W):
        buf[bm + k] = 0
    prev = -1
    for k in range(m):
        p = src_buf[src_lo + k]
        if p <= prev or p > universe:
            raise InvalidInputError(f"positions must be strictly increasing in [0, {universe}]")
        prev = p
        buf[bm + p // _WBITS] |= 1 << (p % _WBITS)

    ginfo = bm + W
    sparse = ginfo + G
    used = sparse
    for g in range(G):
        first = src_buf[src_lo + g * _GROUP]
        last_k = min(g * _GROUP + _GROUP, m) - 1
        last = src_buf[src_lo + last_k]
        if last - first > _DENSE_SPAN:
            buf[ginfo + g] = ~(used - base)
            cnt = last_k - g * _GROUP + 1
            for k in range(cnt):
                buf[used + k] = src_buf[src_lo + g * _GROUP + k]
            used += 64
        else:
            buf[ginfo + g] = first
    return SelectIndex(buf=buf, lo=base, words=used - base, m=m)


def select(index: SelectIndex, i: int) -> int:
    """Position of the i-th set bit (0-based), in O(1) word probes."""
    if not 0 <= i < index.m:
        raise InvalidInputError(f"select rank {i} out of range [0, {index.m})")
    buf = index.buf
    base = index.lo
    W = buf[base + 1]
    g, r = i >> 6, i & 63
    info = buf[base + 2 + W + g]
    if info < 0:
        return buf[base + (~info) + r]
    if r == 0:
        return info
    w, shift = divmod(info, _WBITS)
    word = buf[base + 2 + w] >> shift
    r += 1  # the anchor bit itself is rank 0 within the group
    while True:
        c = word.bit_count()
        if c >= r:
            for _ in range(r - 1):
                word &= word - 1
            return w * _WBITS + shift + ((word & -word).bit_length() - 1)
        r -= c
        w += 1
        shift = 0
        word = buf[base + 2 + w]


def select_counted(index: SelectIndex, i: int) -> tuple[int, int]:
    """Like :func:`select` but also returns the number of word probes."""
    if not 0 <= i < index.m:
        raise InvalidInputError(f"select rank {i} out of range [0, {index.m})")
    buf = index.buf
    base = index.lo
    probes = 1
    W = buf[base + 1]
    g, r = i >> 6, i & 63
    probes += 1
    info = buf[base + 2 + W + g]
    if info < 0:
        probes += 1
        return buf[base + (~info) + r], probes
    if r == 0:
        return info, probes
    w, shift = divmod(info, _WBITS)
    probes += 1
    word = buf[base + 2 + w] >> shift
    r += 1
    while True:
        c = word.bit_count()
        if c >= r:
            for _ in range(r - 1):
                word &= word - 1
            return w * _WBITS + shift + ((word & -word).bit_length() - 1), probes
        r -= c
        w += 1
        shift = 0
        probes += 1
        word = buf[base + 2 + w]
