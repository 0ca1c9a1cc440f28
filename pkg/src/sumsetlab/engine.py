"""The four h-fold sumset operators over finite integer sets.

Variants for a set A = {a_1 < ... < a_k} and a fold count h, as coefficient
vectors (l_1, ..., l_k) applied to the elements:

  PLAIN             l_i in [0, h],   sum l_i   = h   (repetition allowed)
  RESTRICTED        l_i in {0, 1},   sum l_i   = h   (h distinct elements)
  SIGNED            l_i in [-h, h],  sum |l_i| = h
  RESTRICTED_SIGNED l_i in {-1,0,1}, sum |l_i| = h   (h distinct, signed)

Two independent routes compute each value set: compute_oracle enumerates
admissible coefficient vectors directly, compute_dp runs a layered dynamic
program over bit tables.  They must agree exactly; tests and the acceptance
suite sweep both.
"""

from __future__ import annotations

import enum
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Optional, Sequence

from .errors import BadParams, CostCapExceeded, FoldTooLarge, ZeroElement
from .intset import IntegerSet, SumsetResult

# Fold counts beyond this are rejected; with |a| <= 2^40 it keeps every
# internal sum inside signed 64-bit range.
MAX_FOLD = 64

# Hard ceiling on admissible coefficient vectors for the oracle route.
ORACLE_COST_CAP = 10**8


class SumsetVariant(enum.Enum):
    PLAIN = "plain"
    RESTRICTED = "restricted"
    SIGNED = "signed"
    RESTRICTED_SIGNED = "rss"

    @classmethod
    def from_name(cls, name: str) -> "SumsetVariant":
        for variant in cls:
            if variant.value == name:
                return variant
        raise BadParams(f"unknown variant {name!r}")


@dataclass(frozen=True)
class SumsetRequest:
    """One unit of work for compute_batch."""

    set: IntegerSet
    variant: SumsetVariant
    fold: int


def _check_fold(A: IntegerSet, variant: SumsetVariant, h: int) -> None:
    if h < 1:
        raise BadParams(f"fold count must be >= 1, got {h}")
    if h > MAX_FOLD:
        raise FoldTooLarge(f"fold count {h} exceeds supported cap {MAX_FOLD}")
    restricted = variant in (SumsetVariant.RESTRICTED, SumsetVariant.RESTRICTED_SIGNED)
    if restricted and h > len(A):
        raise FoldTooLarge(
            f"{variant.value} needs h <= |A|; got h={h} for a {len(A)}-element set"
        )


def oracle_cost(k: int, variant: SumsetVariant, h: int) -> int:
    """Number of admissible coefficient vectors the oracle would enumerate."""
    if variant is SumsetVariant.PLAIN:
        return math.comb(k + h - 1, h)
    if variant is SumsetVariant.RESTRICTED:
        return math.comb(k, h)
    if variant is SumsetVariant.RESTRICTED_SIGNED:
        return math.comb(k, h) * 2**h
    # SIGNED: choose s nonzero positions, a sign for each, and a composition
    # of h into s positive magnitudes.
    return sum(
        math.comb(k, s) * 2**s * math.comb(h - 1, s - 1)
        for s in range(1, min(k, h) + 1)
    )


def _signed_sums(elements: tuple[int, ...], h: int) -> set[int]:
    """All sums with per-element magnitudes summing to h, one sign each."""
    k = len(elements)
    out: set[int] = set()

    def rec(idx: int, remaining: int, acc: int) -> None:
        if idx == k - 1:
            if remaining == 0:
                out.add(acc)
            else:
                term = remaining * elements[idx]
                out.add(acc + term)
                out.add(acc - term)
            return
        rec(idx + 1, remaining, acc)
        for m in range(1, remaining + 1):
            term = m * elements[idx]
            rec(idx + 1, remaining - m, acc + term)
            rec(idx + 1, remaining - m, acc - term)

    rec(0, h, 0)
    return out


def compute_oracle(A: IntegerSet, variant: SumsetVariant, h: int) -> SumsetResult:
    """Brute-force route: enumerate every admissible coefficient vector."""
    _check_fold(A, variant, h)
    cost = oracle_cost(len(A), variant, h)
    if cost > ORACLE_COST_CAP:
        raise CostCapExceeded(
            f"oracle would enumerate {cost} vectors (cap {ORACLE_COST_CAP})"
        )
    e = A.elements
    if variant is SumsetVariant.PLAIN:
        values = {sum(c) for c in combinations_with_replacement(e, h)}
    elif variant is SumsetVariant.RESTRICTED:
        values = {sum(c) for c in combinations(e, h)}
    elif variant is SumsetVariant.RESTRICTED_SIGNED:
        values = set()
        for combo in combinations(e, h):
            sums = {0}
            for a in combo:
                sums = {s + a for s in sums} | {s - a for s in sums}
            values |= sums
    else:
        values = _signed_sums(e, h)
    return SumsetResult.from_values(values)


def _bits_to_values(bits: int, offset: int) -> tuple[int, ...]:
    values = []
    while bits:
        low = bits & -bits
        values.append(low.bit_length() - 1 - offset)
        bits ^= low
    return tuple(values)


def _shift(bits: int, delta: int) -> int:
    return bits << delta if delta >= 0 else bits >> (-delta)


def compute_dp(A: IntegerSet, variant: SumsetVariant, h: int) -> SumsetResult:
    """Dynamic-programming route: layered bit tables indexed by used weight.

    dp[j] is the set of sums reachable with total weight j, encoded as a bit
    table over [-h*max|a|, h*max|a|] (bit position = value + offset).
    Elements are folded in one at a time; restricted variants consume weight
    1 per element, PLAIN and SIGNED spend weight equal to the multiplicity.
    """
    _check_fold(A, variant, h)
    e = A.elements
    offset = h * max(abs(e[0]), abs(e[-1]))
    dp = [0] * (h + 1)
    dp[0] = 1 << offset

    if variant in (SumsetVariant.RESTRICTED, SumsetVariant.RESTRICTED_SIGNED):
        both = variant is SumsetVariant.RESTRICTED_SIGNED
        for a in e:
            for j in range(h, 0, -1):
                prev = dp[j - 1]
                if prev:
                    add = _shift(prev, a)
                    if both:
                        add |= _shift(prev, -a)
                    dp[j] |= add
    elif variant is SumsetVariant.PLAIN:
        # Ascending weight lets one element repeat within its own pass.
        for a in e:
            for j in range(1, h + 1):
                prev = dp[j - 1]
                if prev:
                    dp[j] |= _shift(prev, a)
    else:
        # SIGNED: a snapshot per element keeps one sign per element; mixing
        # +a and -a would fake a lower total weight.
        for a in e:
            prev = dp[:]
            for m in range(1, h + 1):
                delta = m * a
                for j in range(m, h + 1):
                    base = prev[j - m]
                    if base:
                        dp[j] |= _shift(base, delta) | _shift(base, -delta)

    return SumsetResult(_bits_to_values(dp[h], offset), dp[h].bit_count())


def independence_number(A: IntegerSet, t_max: int) -> Optional[int]:
    """Largest t <= t_max with 0 outside every signed h-fold sumset, h <= t.

    Returns None when even t_max qualifies (the true value is >= t_max and
    this scan cannot certify it).
    """
    if 0 in A:
        raise ZeroElement("independence number needs 0 outside the set")
    if t_max < 1:
        raise BadParams(f"t_max must be >= 1, got {t_max}")
    if t_max > MAX_FOLD:
        raise FoldTooLarge(f"t_max {t_max} exceeds supported cap {MAX_FOLD}")
    for h in range(1, t_max + 1):
        if 0 in compute_dp(A, SumsetVariant.SIGNED, h):
            return h - 1
    return None


def worker_count() -> int:
    """Worker pool size: SUMSETLAB_THREADS overrides detected CPU count."""
    env = os.environ.get("SUMSETLAB_THREADS")
    if env is not None:
        try:
            n = int(env)
        except ValueError:
            raise BadParams(f"SUMSETLAB_THREADS must be an integer, got {env!r}")
        if n < 1:
            raise BadParams(f"SUMSETLAB_THREADS must be >= 1, got {n}")
        return n
    return os.cpu_count() or 1


def compute_batch(
    requests: Sequence[SumsetRequest], workers: Optional[int] = None
) -> list[SumsetResult]:
    """Evaluate requests concurrently; results come back in request order."""
    if workers is None:
        workers = worker_count()
    if workers < 1:
        raise BadParams(f"workers must be >= 1, got {workers}")
    if len(requests) <= 1 or workers == 1:
        return [compute_dp(r.set, r.variant, r.fold) for r in requests]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda r: compute_dp(r.set, r.variant, r.fold), requests))
