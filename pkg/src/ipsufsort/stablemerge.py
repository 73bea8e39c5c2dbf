"""Stable merging and merge sort over regions of a shared buffer.

Three flavours:

* ``stable_merge``: comparator-only, O(1) auxiliary words (symmerge with a
  fixed-capacity explicit stack), works for arbitrary payloads.
* ``stable_merge_encoded``: linear moves for integer payloads below a bound,
  packing (value, destination) into one word during the pass. Used where the
  construction pipelines merge suffix indices, whose values always fit.
* scratch-assisted classic merge, used when the caller supplies a scratch
  region inside the same buffer.

The symmerge variant is O(n log n) in moves rather than strictly linear;
end-to-end scaling is asserted empirically by the acceptance suite instead of
per-merge linearity.
"""

from __future__ import annotations

from typing import Callable

# Fixed recursion stack: 3 words per frame, depth <= 64 covers any n < 2^62.
_STACK_CAP = 192


def _default_less(a, b) -> bool:
    return a < b


def _rotate(buf, lo: int, mid: int, hi: int) -> None:
    """Rotate buf[lo:hi] left so that buf[mid] becomes the first element."""
    _reverse(buf, lo, mid)
    _reverse(buf, mid, hi)
    _reverse(buf, lo, hi)


def _reverse(buf, lo: int, hi: int) -> None:
    hi -= 1
    while lo < hi:
        buf[lo], buf[hi] = buf[hi], buf[lo]
        lo += 1
        hi -= 1


def stable_merge(buf, lo: int, mid: int, hi: int, less: Callable = _default_less) -> None:
    """Stably merge the sorted halves buf[lo:mid] and buf[mid:hi] in place.

    Equal elements keep left-half-first order, then intra-half order.
    Auxiliary space is the fixed-capacity frame stack plus loop locals.
    """
    stack = [0] * _STACK_CAP
    top = 0
    a, m, b = lo, mid, hi
    while True:
        while a < m < b:
            if m - a == 1:
                # Insert the single left element by binary search + rotate.
                x = buf[a]
                s, r = m, b
                while s < r:
                    c = (s + r) // 2
                    if less(buf[c], x):
                        s = c + 1
                    else:
                        r = c
                for p in range(a, s - 1):
                    buf[p] = buf[p + 1]
                buf[s - 1] = x
                a = m = b
                break
            if b - m == 1:
                x = buf[m]
                s, r = a, m
                while s < r:
                    c = (s + r) // 2
                    if less(x, buf[c]):
                        r = c
                    else:
                        s = c + 1
                for p in range(m, s, -1):
                    buf[p] = buf[p - 1]
                buf[s] = x
                a = m = b
                break
            half = (a + b) // 2
            span = half + m
            if m > half:
                s, r = span - b, half
            else:
                s, r = a, m
            p = span - 1
            while s < r:
                c = (s + r) // 2
                if not less(buf[p - c], buf[c]):
                    s = c + 1
                else:
                    r = c
            end = span - s
            if s < m < end:
                _rotate(buf, s, m, end)
            # Iterate on the left subproblem, push the right one.
            if half < end < b:
                if top + 3 > _STACK_CAP:
                    raise RuntimeError("merge stack overflow")
                stack[top] = half
                stack[top + 1] = end
                stack[top + 2] = b
                top += 3
            b, m = half, s if a < s < half else half
            if not (a < s < half):
                a = half
        if top == 0:
            return
        top -= 3
        a, m, b = stack[top], stack[top + 1], stack[top + 2]


def stable_merge_encoded(buf, lo: int, mid: int, hi: int,
                         less: Callable = _default_less, bound: int = 0) -> None:
    """Stable merge with linear moves for integer payloads in [0, bound).

    Destinations are packed in-band as ``value + (dest_offset + 1) * bound``
    during a two-pointer pass, then resolved by cycle chasing. O(1) auxiliary
    words; every word stays below ``(hi - lo + 1) * bound``.
    """
    if bound <= 0:
        bound = max(buf[k] for k in range(lo, hi)) + 1 if hi > lo else 1
    i, j = lo, mid
    q = lo
    ai = buf[i] if i < mid else 0
    bj = buf[j] if j < hi else 0
    while i < mid or j < hi:
        if j >= hi or (i < mid and not less(bj, ai)):
            buf[i] = ai + (q - lo + 1) * bound
            i += 1
            if i < mid:
                ai = buf[i]
        else:
            buf[j] = bj + (q - lo + 1) * bound
            j += 1
            if j < hi:
                bj = buf[j]
        q += 1
    for s in range(lo, hi):
        enc = buf[s]
        if enc < bound:
            continue
        while True:
            val = enc % bound
            dest = enc // bound - 1 + lo
            enc = buf[dest]
            buf[dest] = val
            if dest == s or enc < bound:
                break


def _merge_with_scratch(buf, lo, mid, hi, less, scratch_buf, scratch_lo) -> None:
    # Copy the smaller half out, then a two-pointer merge back into place.
    if mid - lo <= hi - mid:
        ln = mid - lo
        for k in range(ln):
            scratch_buf[scratch_lo + k] = buf[lo + k]
        i, j, q = 0, mid, lo
        while i < ln and j < hi:
            a = scratch_buf[scratch_lo + i]
            b = buf[j]
            if less(b, a):
                buf[q] = b
                j += 1
            else:
                buf[q] = a
                i += 1
            q += 1
        while i < ln:
            buf[q] = scratch_buf[scratch_lo + i]
            i += 1
            q += 1
    else:
        rn = hi - mid
        for k in range(rn):
            scratch_buf[scratch_lo + k] = buf[mid + k]
        i, j, q = mid - 1, rn - 1, hi - 1
        while i >= lo and j >= 0:
            a = buf[i]
            b = scratch_buf[scratch_lo + j]
            if less(b, a):
                buf[q] = a
                i -= 1
            else:
                buf[q] = b
                j -= 1
            q -= 1
        while j >= 0:
            buf[q] = scratch_buf[scratch_lo + j]
            j -= 1
            q -= 1


def mergesort_inplace(buf, lo: int, hi: int, less: Callable = _default_less,
                      scratch: tuple | None = None, encoded_bound: int = 0) -> None:
    """Bottom-up stable merge sort of buf[lo:hi].

    ``scratch=(scratch_buf, scratch_lo)`` selects the faster scratch-assisted
    merge (the scratch region must hold at least (hi-lo+1)//2 words).
    ``encoded_bound > 0`` selects the linear in-band merge for integer
    payloads below that bound. Otherwise merges use the comparator-only
    in-place path.
    """
    n = hi - lo
    width = 1
    while width < n:
        start = lo
        while start + width < hi:
            mid = start + width
            end = mid + width
            if end > hi:
                end = hi
            if scratch is not None:
                _merge_with_scratch(buf, start, mid, end, less, scratch[0], scratch[1])
            elif encoded_bound > 0:
                stable_merge_encoded(buf, start, mid, end, less, encoded_bound)
            else:
                stable_merge(buf, start, mid, end, less)
            start = end
        width *= 2
