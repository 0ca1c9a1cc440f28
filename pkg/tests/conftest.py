"""Shared random-instance generators for lemma hypotheses.

Each generator draws a set satisfying one witness lemma's preconditions,
uniformly-ish over small element ranges, for the randomized suites.
"""

from __future__ import annotations

import random

from sumsetlab.intset import IntegerSet


def _sample(rng: random.Random, population: range, k: int, pred, tries: int = 20000):
    for _ in range(tries):
        s = tuple(sorted(rng.sample(population, k)))
        if pred(s):
            return s
    raise RuntimeError(f"no admissible {k}-set found in {tries} draws")


def random_parity_split_instance(
    rng: random.Random, max_element: int = 50, h_lo: int = 3, h_hi: int = 6
):
    """(A, h, r): |A| = h+1 positive, first two share parity, #r differs."""
    h = rng.randint(h_lo, h_hi)
    k = h + 1

    def ok(s):
        if (s[1] - s[0]) % 2:
            return False
        return any((s[i] - s[0]) % 2 for i in range(2, k))

    s = _sample(rng, range(1, max_element + 1), k, ok)
    r = rng.choice([i + 1 for i in range(2, k) if (s[i] - s[0]) % 2])
    return IntegerSet(s), h, r


def random_odd_subsums_instance(
    rng: random.Random, max_element: int = 50, h_lo: int = 3, h_hi: int = 8
) -> IntegerSet:
    """An all-odd positive set of size h."""
    h = rng.randint(h_lo, h_hi)
    s = tuple(sorted(rng.sample(range(1, max_element + 1, 2), h)))
    return IntegerSet(s)


def random_mixed_a3_instance(
    rng: random.Random, max_element: int = 50, h_lo: int = 3, h_hi: int = 6
):
    """(A, h): |A| = h+1 positive, 2nd and 3rd differ in parity from the 1st."""
    h = rng.randint(h_lo, h_hi)
    k = h + 1

    def ok(s):
        return (s[1] - s[0]) % 2 == 1 and (s[2] - s[0]) % 2 == 1

    return IntegerSet(_sample(rng, range(1, max_element + 1), k, ok)), h


def random_mixed_a2_instance(
    rng: random.Random, max_element: int = 50, h_lo: int = 4, h_hi: int = 6
):
    """(A, h): |A| = h+1 positive, 2nd differs in parity, 3rd matches."""
    h = rng.randint(h_lo, h_hi)
    k = h + 1

    def ok(s):
        return (s[1] - s[0]) % 2 == 1 and (s[2] - s[0]) % 2 == 0

    return IntegerSet(_sample(rng, range(1, max_element + 1), k, ok)), h


def random_all_odd_instance(
    rng: random.Random, max_element: int = 50, h_lo: int = 3, h_hi: int = 6
):
    """(A, h): |A| = h+1, all odd positive."""
    h = rng.randint(h_lo, h_hi)
    s = tuple(sorted(rng.sample(range(1, max_element + 1, 2), h + 1)))
    return IntegerSet(s), h
