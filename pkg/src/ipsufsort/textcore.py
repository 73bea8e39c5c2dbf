"""Input text model, L/S type machinery, brute-force oracles, and BWT."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Callable, MutableSequence, Sequence

# Largest supported text length: five values above any index must still fit a
# 64-bit word so the in-place symbol coding always has its fast branch.
MAX_N = 2**62 - 8


class InvalidInputError(ValueError):
    """Raised when a text or suffix array violates its contract."""


@dataclass
class Text:
    """Integer text with a unique minimal sentinel 0 at the last position.

    ``symbols`` may be a list or an ``array('q')``; algorithms only index it.
    Non-sentinel symbols lie in [1, sigma].
    """

    symbols: MutableSequence[int]
    sigma: int

    def __post_init__(self) -> None:
        n = len(self.symbols)
        if n < 1:
            raise InvalidInputError("text must contain at least the sentinel")
        if n > MAX_N:
            raise InvalidInputError(f"text length {n} exceeds supported maximum {MAX_N}")
        if self.symbols[n - 1] != 0:
            raise InvalidInputError("text must end with the sentinel 0")
        if self.sigma < 0:
            raise InvalidInputError("sigma must be non-negative")

    def __len__(self) -> int:
        return len(self.symbols)

    def validate(self) -> None:
        """Full O(n) check of the sentinel and symbol-range invariants."""
        n = len(self.symbols)
        for i in range(n - 1):
            v = self.symbols[i]
            if v < 1 or v > self.sigma:
                raise InvalidInputError(f"symbol {v} at {i} outside [1, {self.sigma}]")
        if self.symbols[n - 1] != 0:
            raise InvalidInputError("text must end with the sentinel 0")


def make_text(symbols: Sequence[int], sigma: int | None = None) -> Text:
    """Convenience wrapper: append the sentinel to a raw symbol sequence.

    Not workspace-audited; it copies the input. ``sigma`` defaults to the
    maximum symbol present.
    """
    for i, v in enumerate(symbols):
        if v < 1:
            raise InvalidInputError(f"raw symbol {v} at {i} must be >= 1")
    buf = list(symbols)
    buf.append(0)
    if sigma is None:
        sigma = max(symbols) if len(symbols) else 0
    return Text(buf, sigma)


@dataclass(frozen=True)
class TypeCounts:
    """Suffix-type census of a text."""

    n_l: int
    n_s: int
    n_lms: int
    n_lml: int


def classify_types(text: Text, visit: Callable[[int, bool], None]) -> None:
    """Visit positions n-1 down to 0 with each suffix's S-type flag.

    The sentinel is S; T[i] < T[i+1] gives S; equal symbols inherit the type
    to the right. Uses O(1) state beyond the callback.
    """
    t = text.symbols
    n = len(t)
    is_s = True
    visit(n - 1, True)
    for i in range(n - 2, -1, -1):
        if t[i] != t[i + 1]:
            is_s = t[i] < t[i + 1]
        visit(i, is_s)


def next_s_type(text: Text, i: int) -> int:
    """Smallest k > i whose suffix is S-type, by a forward-only scan.

    The first strictly rising pair after i ends an S run; equal symbols
    immediately before it belong to the same run. The sentinel always
    qualifies, so the scan terminates.
    """
    t = text.symbols
    n = len(t)
    if not 0 <= i < n - 1:
        raise InvalidInputError(f"position {i} out of range [0, {n - 1})")
    j = i + 1
    while j < n - 1 and t[j] >= t[j + 1]:
        j += 1
    k = j
    while k - 1 > i and t[k - 1] == t[j]:
        k -= 1
    return k


def count_types(text: Text) -> TypeCounts:
    """Exact L/S/LMS/LML counts from one right-to-left scan."""
    t = text.symbols
    n = len(t)
    n_s = 1  # sentinel
    n_lms = 0
    n_lml = 0
    right_is_s = True
    for i in range(n - 2, -1, -1):
        if t[i] != t[i + 1]:
            is_s = t[i] < t[i + 1]
        else:
            is_s = right_is_s
        if is_s:
            n_s += 1
        if not is_s and right_is_s:
            n_lms += 1  # position i+1 is LMS
        if is_s and not right_is_s:
            n_lml += 1  # position i+1 is LML
        right_is_s = is_s
    return TypeCounts(n_l=n - n_s, n_s=n_s, n_lms=n_lms, n_lml=n_lml)


def compare_suffixes(text: Text, i: int, j: int) -> int:
    """Three-way lexicographic comparison of Suf(i) and Suf(j)."""
    if i == j:
        return 0
    t = text.symbols
    n = len(t)
    while i < n and j < n:
        a, b = t[i], t[j]
        if a != b:
            return -1 if a < b else 1
        i += 1
        j += 1
    # Unreachable with a unique sentinel, kept for non-sentinel callers.
    return -1 if i == n else 1


def naive_suffix_array(text: Text) -> list[int]:
    """Comparison-sort oracle; no time or space bounds."""
    n = len(text.symbols)
    return sorted(range(n), key=cmp_to_key(lambda a, b: compare_suffixes(text, a, b)))


def verify_suffix_array(text: Text, sa: Sequence[int]) -> bool:
    """Linear-time suffix array checker (permutation + rank-successor order).

    Adjacent entries must not decrease by first symbol; on ties the successor
    suffixes must already be ordered, which one rank pass over ``sa`` decides.
    Verification is not workspace-audited and may allocate.
    """
    t = text.symbols
    n = len(t)
    if len(sa) != n:
        raise InvalidInputError(f"suffix array length {len(sa)} != text length {n}")
    seen = bytearray(n)
    for v in sa:
        if not 0 <= v < n or seen[v]:
            return False
        seen[v] = 1
    rank = [0] * n
    for pos, v in enumerate(sa):
        rank[v] = pos
    for k in range(n - 1):
        a, b = sa[k], sa[k + 1]
        ca, cb = t[a], t[b]
        if ca > cb:
            return False
        if ca == cb:
            # Unique sentinel means a, b < n-1 here, so a+1 and b+1 are valid.
            if rank[a + 1] > rank[b + 1]:
                return False
    return True


def bwt(text: Text, sa: Sequence[int]) -> list[int]:
    """Burrows-Wheeler transform from a verified suffix array."""
    if not verify_suffix_array(text, sa):
        raise InvalidInputError("suffix array does not verify against the text")
    t = text.symbols
    n = len(t)
    return [t[v - 1] if v > 0 else t[n - 1] for v in sa]


def text_checksum(text: Text) -> int:
    """Order-sensitive checksum used by read-only contract tests."""
    h = 1469598103934665603
    for v in text.symbols:
        h = ((h ^ v) * 1099511628211) & 0xFFFFFFFFFFFFFFFF
    return h
