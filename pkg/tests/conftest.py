from __future__ import annotations

import random

import pytest

from ipsufsort.textcore import Text

# The worked example used throughout the traces: T = "2113311331210".
RUNNING = [2, 1, 1, 3, 3, 1, 1, 3, 3, 1, 2, 1, 0]
RUNNING_SA = [12, 11, 1, 5, 9, 2, 6, 10, 0, 4, 8, 3, 7]


@pytest.fixture
def running_text() -> Text:
    return Text(list(RUNNING), 3)


def random_text(rng: random.Random, n: int, sigma: int) -> Text:
    """Random effective-or-not text of total length n (sentinel included)."""
    assert n >= 1
    syms = [rng.randint(1, max(1, sigma)) for _ in range(n - 1)]
    syms.append(0)
    return Text(syms, max(1, sigma))


def all_texts(max_len: int, sigma: int):
    """Every text of non-sentinel length <= max_len over {1..sigma}."""
    yield Text([0], sigma)
    stack = [[]]
    while stack:
        prefix = stack.pop()
        if prefix:
            yield Text(prefix + [0], sigma)
        if len(prefix) < max_len:
            for c in range(1, sigma + 1):
                stack.append(prefix + [c])
