from __future__ import annotations

import random

from conftest import RUNNING_SA, all_texts, random_text
from ipsufsort.saisref import EMPTY, bucket_boundaries, induce_l, induce_s, sais
from ipsufsort.textcore import Text, naive_suffix_array, verify_suffix_array


def seed_lms_at_tails(text, buckets, types):
    """Place the *sorted* LMS suffixes at their bucket tails (Lemma 3 pre)."""
    n = len(text.symbols)
    sa = [EMPTY] * n
    if n == 1:
        sa[0] = 0  # lone sentinel is its own LMS seed
        return sa
    lms = [i for i in range(1, n) if types[i] and not types[i - 1]]
    order = {v: k for k, v in enumerate(naive_suffix_array(text))}
    lms.sort(key=order.__getitem__, reverse=True)
    rf = list(buckets.tails)
    for i in lms:
        c = text.symbols[i]
        sa[rf[c]] = i
        rf[c] -= 1
    return sa


def type_list(text):
    t = text.symbols
    n = len(t)
    types = [False] * n
    types[n - 1] = True
    for i in range(n - 2, -1, -1):
        types[i] = t[i] < t[i + 1] or (t[i] == t[i + 1] and types[i + 1])
    return types


class TestBuckets:
    def test_running_heads(self, running_text):
        b = bucket_boundaries(running_text)
        assert b.heads == [0, 1, 7, 9]
        assert b.tails == [0, 6, 8, 12]

    def test_single(self):
        b = bucket_boundaries(Text([0], 0))
        assert b.heads == [0] and b.tails == [0]

    def test_two_symbols(self):
        b = bucket_boundaries(Text([1, 2, 1, 2, 0], 2))
        assert b.heads == [0, 1, 3]
        assert b.tails == [0, 2, 4]


class TestInduction:
    def test_running_l_pass(self, running_text):
        types = type_list(running_text)
        buckets = bucket_boundaries(running_text)
        sa = seed_lms_at_tails(running_text, buckets, types)
        induce_l(running_text, sa, buckets, types)
        assert sa == [12, 11, EMPTY, EMPTY, 1, 5, 9, 10, 0, 4, 8, 3, 7]

    def test_running_s_pass_completes(self, running_text):
        types = type_list(running_text)
        buckets = bucket_boundaries(running_text)
        sa = seed_lms_at_tails(running_text, buckets, types)
        induce_l(running_text, sa, buckets, types)
        induce_s(running_text, sa, buckets, types)
        assert sa == RUNNING_SA

    def test_no_l_suffixes(self):
        text = Text([1, 0], 1)
        types = type_list(text)
        buckets = bucket_boundaries(text)
        sa = seed_lms_at_tails(text, buckets, types)
        before = list(sa)
        induce_l(text, sa, buckets, types)
        # Suf(0) = "10" is L: the seed 1 induces it; nothing else changes.
        assert sa[buckets.heads[1]] == 0 or sa == before

    def test_exhaustive_small(self):
        for text in all_texts(8, 3):
            types = type_list(text)
            buckets = bucket_boundaries(text)
            sa = seed_lms_at_tails(text, buckets, types)
            induce_l(text, sa, buckets, types)
            induce_s(text, sa, buckets, types)
            assert verify_suffix_array(text, sa), text.symbols


class TestSais:
    def test_running(self, running_text):
        assert sais(running_text) == RUNNING_SA

    def test_reduced_problem(self):
        assert sais(Text([1, 1, 2, 0], 2)) == [3, 0, 1, 2]

    def test_exhaustive_small(self):
        for text in all_texts(9, 3):
            assert sais(text) == naive_suffix_array(text), text.symbols

    def test_random_sweep(self):
        rng = random.Random(99)
        for _ in range(300):
            n = rng.randint(1, 512)
            sigma = rng.choice([1, 2, 4, 16, 64, n])
            text = random_text(rng, n, sigma)
            sa = sais(text)
            assert verify_suffix_array(text, sa)

    def test_random_vs_naive_midsize(self):
        rng = random.Random(5)
        for _ in range(40):
            text = random_text(rng, rng.randint(1, 300), 3)
            assert sais(text) == naive_suffix_array(text)
