"""Workspace accounting: peak auxiliary words and allocation events.

Workspace is everything beyond the input text and the output suffix array.
The in-place cores acquire no buffers at all; they register a fixed census of
scalar registers instead. Reference algorithms allocate through the
``scratch_*`` helpers so their (non-constant) footprint shows up in reports.
Interpreter-internal transients (boxed ints, call frames) are excluded,
mirroring how native call-frame overhead is excluded from the paper-style
byte counts.
"""

from __future__ import annotations

import time
from dataclasses import dataclass


@dataclass
class WorkspaceReport:
    """Measured auxiliary footprint of one audited run."""

    algorithm: str
    n: int
    peak_aux_words: int
    alloc_events: int
    text_touched: bool
    recursion_depth: int
    elapsed: float

    def as_record(self) -> dict:
        return {
            "algo": self.algorithm,
            "n": self.n,
            "peak_aux_words": self.peak_aux_words,
            "alloc_events": self.alloc_events,
            "text_touched": self.text_touched,
            "recursion_depth": self.recursion_depth,
            "elapsed_ns": int(self.elapsed * 1e9),
        }


class AuditFailure(RuntimeError):
    """Raised when an audited run exceeds its workspace budget."""

    def __init__(self, message: str, report: WorkspaceReport):
        super().__init__(message)
        self.report = report


class _Meter:
    __slots__ = ("active", "cur_words", "peak_words", "alloc_events", "depth", "max_depth")

    def __init__(self) -> None:
        self.active = False
        self.reset()

    def reset(self) -> None:
        self.cur_words = 0
        self.peak_words = 0
        self.alloc_events = 0
        self.depth = 0
        self.max_depth = 0


_METER = _Meter()

# Fixed register budget declared per algorithm: loop locals, cursors, the
# symbol-coding fallback registers, and plan fields. Constant by construction,
# independent of n.
REGISTER_CENSUS = {
    "ip-int": 48,
    "ip-ro-int": 96,
    "ip-general": 64,
}

DEFAULT_BUDGET_WORDS = 128


def note_alloc(words: int) -> None:
    """Record a dynamic acquisition of ``words`` machine words."""
    if _METER.active:
        _METER.alloc_events += 1
        _METER.cur_words += words
        if _METER.cur_words > _METER.peak_words:
            _METER.peak_words = _METER.cur_words


def note_free(words: int) -> None:
    if _METER.active:
        _METER.cur_words -= words


def scratch_words(n: int) -> list[int]:
    """Allocate an n-word scratch array, counted against the active audit."""
    note_alloc(n)
    return [0] * n


def scratch_bytes(n: int) -> bytearray:
    """Allocate n bytes of scratch, counted as ceil(n/8) words."""
    note_alloc((n + 7) // 8)
    return bytearray(n)


def use_registers(words: int) -> None:
    """Declare a fixed set of named scalar registers as live."""
    if _METER.active:
        _METER.cur_words += words
        if _METER.cur_words > _METER.peak_words:
            _METER.peak_words = _METER.cur_words


def release_registers(words: int) -> None:
    if _METER.active:
        _METER.cur_words -= words


def enter_level() -> None:
    """Track recursion depth of the in-place cores."""
    _METER.depth += 1
    if _METER.depth > _METER.max_depth:
        _METER.max_depth = _METER.depth


def leave_level() -> None:
    _METER.depth -= 1


def audited_run(algorithm: str, text, budget_words: int = DEFAULT_BUDGET_WORDS):
    """Run one construction under instrumentation.

    Returns ``(sa, WorkspaceReport)``. For in-place algorithms a budget breach
    or any allocation event raises :class:`AuditFailure` carrying the report;
    reference algorithms are reported, not bounded. Audited runs must not
    overlap within a process.
    """
    from . import ipgeneral, ipint, iproint, textcore
    from .saisref import sais
    from .textcore import naive_suffix_array

    if _METER.active:
        raise RuntimeError("audited runs must not overlap")
    n = len(text.symbols)
    checksum_before = textcore.text_checksum(text)
    _METER.reset()
    _METER.active = True
    bounded = algorithm in ("ip-int", "ip-ro-int", "ip-general")
    if bounded:
        use_registers(REGISTER_CENSUS[algorithm])
    started = time.perf_counter()
    try:
        if algorithm == "ip-int":
            sa = [0] * n
            ipint.suffix_sort_int(text, sa)
        elif algorithm == "ip-ro-int":
            sa = [0] * n
            iproint.suffix_sort_readonly(text, sa)
        elif algorithm == "ip-general":
            sa = [0] * n
            cmp_text = ipgeneral.ComparatorText.from_text(text)
            ipgeneral.suffix_sort_general(cmp_text, sa)
        elif algorithm == "sais-ref":
            sa = sais(text)
        elif algorithm == "naive":
            note_alloc(n)
            sa = naive_suffix_array(text)
        else:
            raise ValueError(f"unknown algorithm {algorithm!r}")
    finally:
        elapsed = time.perf_counter() - started
        _METER.active = False
    touched = textcore.text_checksum(text) != checksum_before
    report = WorkspaceReport(
        algorithm=algorithm,
        n=n,
        peak_aux_words=_METER.peak_words,
        alloc_events=_METER.alloc_events,
        text_touched=touched,
        recursion_depth=_METER.max_depth,
        elapsed=elapsed,
    )
    if bounded:
        if report.alloc_events != 0:
            raise AuditFailure("in-place core performed a dynamic allocation", report)
        if report.peak_aux_words > budget_words:
            raise AuditFailure(
                f"workspace {report.peak_aux_words} words exceeds budget {budget_words}",
                report,
            )
        if algorithm in ("ip-ro-int", "ip-general") and touched:
            raise AuditFailure("read-only text was modified", report)
    return sa, report
