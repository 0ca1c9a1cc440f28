"""Exhaustive minimum-cardinality search over small spaces of integer sets.

A SearchSpace fixes a set size k, a fold count h, a maximum element, and a
regime ("positive": k-subsets of [1, max]; "zero": {0} plus a (k-1)-subset
of [1, max]).  minimize() scans every set in the space, records the minimum
restricted-signed h-fold cardinality, tallies the structure classes of all
minimum-achieving sets, and compares against the regime's lower-bound
formula.  A report is falsified only when the regime's stated hypotheses
hold and either the minimum undercuts the bound or some minimizer falls
outside the predicted structure class.

Work is split into contiguous colexicographic rank ranges so any shard
count (and any worker count) produces a byte-identical report: each shard
returns its minimum, the exact count of minimum-achieving sets, the first
64 of them in colex order, and a structure-class tally; shards merge in
rank order.
"""

from __future__ import annotations

import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional

from .engine import SumsetVariant, compute_dp
from .errors import BadParams, SpaceTooLarge
from .intset import MAX_ELEMENT, IntegerSet, class_name, classify_structure

REGIME_POSITIVE = "positive"
REGIME_ZERO = "zero"
OUTSIDE_HYPOTHESES = "outside-stated-hypotheses"

SPACE_CAP = 10**9
MINIMIZER_CAP = 64


@dataclass(frozen=True)
class SearchSpace:
    """All k-element sets of a regime with elements bounded by max_element."""

    k: int
    h: int
    max_element: int
    regime: str = REGIME_POSITIVE
    gcd_reduce: bool = True
    allow_any_fold: bool = False

    def __post_init__(self) -> None:
        if self.regime not in (REGIME_POSITIVE, REGIME_ZERO):
            raise BadParams(f"unknown regime {self.regime!r}")
        if self.k < 2:
            raise BadParams(f"need k >= 2, got {self.k}")
        if not 1 <= self.max_element <= MAX_ELEMENT:
            raise BadParams(f"max_element out of range: {self.max_element}")
        if self.max_element < self.choose_k:
            raise BadParams(
                f"no {self.regime} sets of size {self.k} with elements <= {self.max_element}"
            )
        if not 1 <= self.h <= self.k:
            raise BadParams(f"need 1 <= h <= k = {self.k}, got h = {self.h}")
        if not self.allow_any_fold and not 3 <= self.h <= self.k - 1:
            raise BadParams(
                f"stated hypotheses need 3 <= h <= k-1 = {self.k - 1}, got h = "
                f"{self.h}; pass allow_any_fold to search outside them"
            )
        if self.total_sets > SPACE_CAP:
            raise SpaceTooLarge(
                f"space has {self.total_sets} sets, over the cap {SPACE_CAP}"
            )

    @property
    def choose_k(self) -> int:
        """Free positions per set: k, or k-1 once 0 is pinned."""
        return self.k - 1 if self.regime == REGIME_ZERO else self.k

    @property
    def total_sets(self) -> int:
        return math.comb(self.max_element, self.choose_k)

    @property
    def hypotheses_hold(self) -> bool:
        if not 3 <= self.h <= self.k - 1:
            return False
        if self.regime == REGIME_ZERO and self.k < 5:
            return False
        return True

    @property
    def bound(self) -> int:
        if self.regime == REGIME_ZERO:
            return 2 * self.h * self.k - self.h * (self.h + 1) + 1
        return 2 * self.h * self.k - self.h * self.h + 1

    @property
    def bound_status(self) -> str:
        return "conjecture" if self.regime == REGIME_ZERO else "theorem"

    @property
    def predicted_class(self) -> str:
        # Zero-regime predicted minimizers d*{0,1,...,k-1} sort with 0 first,
        # so they classify as arithmetic progressions starting at 0; no other
        # progression fits in the zero regime.
        if self.regime == REGIME_ZERO:
            return "ArithmeticProgression"
        return "DilatedOddProgression"

    @property
    def regime_label(self) -> str:
        if self.hypotheses_hold:
            return self.regime
        return f"{self.regime}/{OUTSIDE_HYPOTHESES}"

    def materialize(self, combo: tuple[int, ...]) -> tuple[int, ...]:
        """Turn a 0-based free-position combo into the actual element tuple."""
        elems = tuple(v + 1 for v in combo)
        if self.regime == REGIME_ZERO:
            return (0,) + elems
        return elems


def enumerate_space(space: SearchSpace) -> Iterator[IntegerSet]:
    """Yield every set of the space in lexicographic element order.

    The gcd filter is not applied here; this is the raw population.
    """
    import itertools

    for combo in itertools.combinations(range(space.max_element), space.choose_k):
        yield IntegerSet(space.materialize(combo))


def _colex_unrank(rank: int, k: int) -> list[int]:
    """The rank-th 0-based k-combination in colexicographic order."""
    combo = [0] * k
    r = rank
    for i in range(k, 0, -1):
        lo, hi = i - 1, i - 1
        # Grow hi geometrically, then binary-search the largest v with
        # comb(v, i) <= r.
        while math.comb(hi + 1, i) <= r:
            hi = 2 * hi + 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if math.comb(mid, i) <= r:
                lo = mid
            else:
                hi = mid - 1
        combo[i - 1] = lo
        r -= math.comb(lo, i)
    return combo


def _colex_advance(combo: list[int]) -> None:
    """Step to the successor combination in colexicographic order."""
    k = len(combo)
    for i in range(k):
        if i == k - 1 or combo[i] + 1 < combo[i + 1]:
            combo[i] += 1
            for j in range(i):
                combo[j] = j
            return


def partition_work(total: int, shards: int) -> list[tuple[int, int]]:
    """Split [0, total) into `shards` contiguous (start, count) ranges.

    Counts differ by at most one, larger ranges first, so the split is a
    pure function of (total, shards).
    """
    if shards < 1:
        raise BadParams(f"need at least 1 shard, got {shards}")
    base, extra = divmod(total, shards)
    ranges = []
    start = 0
    for i in range(shards):
        count = base + (1 if i < extra else 0)
        ranges.append((start, count))
        start += count
    return ranges


@dataclass(frozen=True)
class _ShardResult:
    minimum: Optional[int]
    minimizer_count: int
    minimizers: tuple[tuple[int, ...], ...]
    classes: dict[str, int]


def _scan_shard(args: tuple[SearchSpace, int, int]) -> _ShardResult:
    space, start, count = args
    if count == 0:
        return _ShardResult(None, 0, (), {})
    variant = SumsetVariant.RESTRICTED_SIGNED
    skip_imprimitive = space.gcd_reduce and space.regime == REGIME_POSITIVE
    combo = _colex_unrank(start, space.choose_k)
    best: Optional[int] = None
    n_best = 0
    minimizers: list[tuple[int, ...]] = []
    classes: dict[str, int] = {}
    for idx in range(count):
        elems = space.materialize(tuple(combo))
        if not (skip_imprimitive and math.gcd(*elems) > 1):
            A = IntegerSet(elems)
            card = compute_dp(A, variant, space.h).cardinality
            if best is None or card < best:
                best = card
                n_best = 1
                minimizers = [elems]
                classes = {class_name(classify_structure(A)): 1}
            elif card == best:
                n_best += 1
                if len(minimizers) < MINIMIZER_CAP:
                    minimizers.append(elems)
                name = class_name(classify_structure(A))
                classes[name] = classes.get(name, 0) + 1
        if idx + 1 < count:
            _colex_advance(combo)
    return _ShardResult(best, n_best, tuple(minimizers), classes)


@dataclass(frozen=True)
class SearchReport:
    k: int
    h: int
    max_element: int
    regime: str
    minimum: int
    bound: int
    minimizer_count: int
    minimizers: tuple[tuple[int, ...], ...]
    classes: dict[str, int]
    falsified: bool
    elapsed: float  # seconds; excluded from every serialized form

    @property
    def slack(self) -> int:
        return self.minimum - self.bound

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "h": self.h,
            "max": self.max_element,
            "regime": self.regime,
            "min": self.minimum,
            "bound": self.bound,
            "slack": self.slack,
            "minimizer_count": self.minimizer_count,
            "minimizers": [list(m) for m in self.minimizers],
            "classes": {name: self.classes[name] for name in sorted(self.classes)},
            "falsified": self.falsified,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    CSV_HEADER = "k,h,N,regime,min,bound,slack,minimizer_count,falsified"

    def to_csv_row(self) -> str:
        return ",".join(
            str(x)
            for x in (
                self.k,
                self.h,
                self.max_element,
                self.regime,
                self.minimum,
                self.bound,
                self.slack,
                self.minimizer_count,
                "true" if self.falsified else "false",
            )
        )

    def to_csv(self) -> str:
        return f"{self.CSV_HEADER}\n{self.to_csv_row()}\n"


def minimize(
    space: SearchSpace, shards: int = 1, workers: Optional[int] = None
) -> SearchReport:
    """Scan the whole space and report the minimum fold cardinality.

    The report is a pure function of the space: shard and worker counts
    change only how the scan is split, never its outcome.
    """
    t0 = time.perf_counter()
    tasks = [
        (space, start, count)
        for start, count in partition_work(space.total_sets, shards)
    ]
    if workers is not None and workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan_shard, tasks))
    else:
        results = [_scan_shard(t) for t in tasks]

    candidates = [r.minimum for r in results if r.minimum is not None]
    if not candidates:
        raise BadParams("search population is empty")
    minimum = min(candidates)
    minimizer_count = 0
    minimizers: list[tuple[int, ...]] = []
    classes: dict[str, int] = {}
    for r in results:
        if r.minimum != minimum:
            continue
        minimizer_count += r.minimizer_count
        for m in r.minimizers:
            if len(minimizers) < MINIMIZER_CAP:
                minimizers.append(m)
        for name, cnt in r.classes.items():
            classes[name] = classes.get(name, 0) + cnt

    falsified = space.hypotheses_hold and (
        minimum < space.bound
        or (
            minimum == space.bound
            and any(name != space.predicted_class for name in classes)
        )
    )
    return SearchReport(
        k=space.k,
        h=space.h,
        max_element=space.max_element,
        regime=space.regime_label,
        minimum=minimum,
        bound=space.bound,
        minimizer_count=minimizer_count,
        minimizers=tuple(minimizers),
        classes=classes,
        falsified=falsified,
        elapsed=time.perf_counter() - t0,
    )
