"""Direct lower-bound catalogue and extremal set constructors.

Each catalogue entry pairs a closed-form lower bound on a sumset cardinality
with a strict hypothesis predicate: the bound is claimed exactly when the
predicate holds, never by silent extension.  Entries tagged conjecture are
reported but excluded from hard verification gates.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable

from .engine import SumsetVariant
from .errors import BadParams, VariantMismatch
from .intset import IntegerSet, SumsetResult


def is_arithmetic_progression(elements: tuple[int, ...]) -> bool:
    """True when the sorted elements form an AP with positive difference."""
    if len(elements) < 2:
        return True
    d = elements[1] - elements[0]
    return d > 0 and all(
        elements[i] == elements[0] + i * d for i in range(len(elements))
    )


@dataclass(frozen=True)
class BoundCatalogEntry:
    """One direct bound: formula in (k, h) guarded by a hypothesis predicate."""

    id: str
    variant: SumsetVariant
    formula: Callable[[int, int], int]
    hypotheses: Callable[[IntegerSet, int], bool]
    formula_text: str
    hypotheses_text: str
    source: str
    status: str  # "proved" | "conjecture"

    def applies(self, A: IntegerSet, h: int) -> bool:
        return self.hypotheses(A, h)

    def value(self, k: int, h: int) -> int:
        return self.formula(k, h)


@dataclass(frozen=True)
class BoundReport:
    """Outcome of checking one catalogue entry against an observed sumset."""

    id: str
    k: int
    h: int
    bound: int
    observed: int
    slack: int
    met: bool

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "k": self.k,
            "h": self.h,
            "bound": self.bound,
            "observed": self.observed,
            "slack": self.slack,
            "met": self.met,
        }


def _positive(A: IntegerSet, h: int) -> bool:
    return A.min >= 1


def _nonneg_with_zero(A: IntegerSet, h: int) -> bool:
    return A.min == 0


def _mixed_case2_base(A: IntegerSet, h: int) -> bool:
    e = A.elements
    return (
        len(A) == h + 1
        and h >= 3
        and A.min >= 1
        and (e[1] - e[0]) % 2 == 1
        and (e[2] - e[0]) % 2 == 1
    )


def _mixed_case3_base(A: IntegerSet, h: int) -> bool:
    e = A.elements
    return (
        len(A) == h + 1
        and h >= 4
        and A.min >= 1
        and (e[1] - e[0]) % 2 == 1
        and (e[2] - e[0]) % 2 == 0
    )


def _without_second(A: IntegerSet) -> tuple[int, ...]:
    return A.elements[:1] + A.elements[2:]


_ENTRIES: list[BoundCatalogEntry] = [
    BoundCatalogEntry(
        id="RSS_direct",
        variant=SumsetVariant.RESTRICTED_SIGNED,
        formula=lambda k, h: 2 * h * k - h * h + 1,
        hypotheses=lambda A, h: _positive(A, h) and 3 <= h <= len(A) - 1,
        formula_text="2*h*k - h^2 + 1",
        hypotheses_text="A positive, 3 <= h <= k-1",
        source="restricted signed fold of any k positive integers; tight on dilated odd progressions",
        status="proved",
    ),
    BoundCatalogEntry(
        id="RSS_base",
        variant=SumsetVariant.RESTRICTED_SIGNED,
        formula=lambda k, h: h * h + 2 * h + 1,
        hypotheses=lambda A, h: _positive(A, h) and h >= 3 and len(A) == h + 1,
        formula_text="h^2 + 2*h + 1",
        hypotheses_text="A positive, k = h+1, h >= 3",
        source="base case of the direct bound, one element more than the fold count",
        status="proved",
    ),
    BoundCatalogEntry(
        id="RSS_weak_pos",
        variant=SumsetVariant.RESTRICTED_SIGNED,
        formula=lambda k, h: 2 * (h * k - h * h) + h * (h + 1) // 2 + 1,
        hypotheses=lambda A, h: _positive(A, h) and 1 <= h <= len(A),
        formula_text="2*(h*k - h^2) + h*(h+1)/2 + 1",
        hypotheses_text="A positive, 1 <= h <= k",
        source="weaker all-fold bound for positive sets; tight on dilated intervals",
        status="proved",
    ),
    BoundCatalogEntry(
        id="RSS_weak_zero",
        variant=SumsetVariant.RESTRICTED_SIGNED,
        formula=lambda k, h: 2 * (h * k - h * h) + h * (h - 1) // 2 + 1,
        hypotheses=lambda A, h: _nonneg_with_zero(A, h) and 1 <= h <= len(A),
        formula_text="2*(h*k - h^2) + h*(h-1)/2 + 1",
        hypotheses_text="0 in A, A nonnegative, 1 <= h <= k",
        source="weaker all-fold bound for sets containing 0; tight on dilated 0-based intervals",
        status="proved",
    ),
    BoundCatalogEntry(
        id="RSS_conj2",
        variant=SumsetVariant.RESTRICTED_SIGNED,
        formula=lambda k, h: 2 * h * k - h * (h + 1) + 1,
        hypotheses=lambda A, h: _nonneg_with_zero(A, h)
        and len(A) >= 5
        and 3 <= h <= len(A) - 1,
        formula_text="2*h*k - h*(h+1) + 1",
        hypotheses_text="0 in A, A nonnegative, k >= 5, 3 <= h <= k-1",
        source="conjectured sharp bound for sets containing 0",
        status="conjecture",
    ),
    BoundCatalogEntry(
        id="R_plain",
        variant=SumsetVariant.RESTRICTED,
        formula=lambda k, h: h * k - h * h + 1,
        hypotheses=lambda A, h: 1 <= h <= len(A),
        formula_text="h*k - h^2 + 1",
        hypotheses_text="any integers, 1 <= h <= k",
        source="unsigned restricted fold of any k integers; tight on arithmetic progressions",
        status="proved",
    ),
    BoundCatalogEntry(
        id="Odd_k_eq_h",
        variant=SumsetVariant.RESTRICTED_SIGNED,
        formula=lambda k, h: h * h - 1,
        hypotheses=lambda A, h: A.all_odd()
        and A.min >= 1
        and len(A) == h
        and h >= 3,
        formula_text="h^2 - 1",
        hypotheses_text="A odd positive, k = h, h >= 3",
        source="full fold of an all-odd set; counts its distinct subset sums",
        status="proved",
    ),
    BoundCatalogEntry(
        id="MixedParity_case1",
        variant=SumsetVariant.RESTRICTED_SIGNED,
        formula=lambda k, h: h * h + 3 * h + 2,
        hypotheses=lambda A, h: len(A) == h + 1
        and h >= 3
        and A.min >= 1
        and (A.elements[1] - A.elements[0]) % 2 == 0
        and any((a - A.elements[0]) % 2 == 1 for a in A.elements[2:]),
        formula_text="h^2 + 3*h + 2",
        hypotheses_text="k = h+1, h >= 3, A positive, first two elements share parity, some later element differs",
        status="proved",
        source="parity-split family: two full-fold subsums interleave",
    ),
    BoundCatalogEntry(
        id="MixedParity_case2a",
        variant=SumsetVariant.RESTRICTED_SIGNED,
        formula=lambda k, h: h * h + 3 * h,
        hypotheses=lambda A, h: _mixed_case2_base(A, h)
        and A.elements[2] == 2 * A.elements[0] + A.elements[1],
        formula_text="h^2 + 3*h",
        hypotheses_text="k = h+1, h >= 3, A positive, 2nd and 3rd elements differ in parity from the 1st, a3 = 2*a1 + a2",
        status="proved",
        source="mixed parity with the third element tied to the first two",
    ),
    BoundCatalogEntry(
        id="MixedParity_case2b",
        variant=SumsetVariant.RESTRICTED_SIGNED,
        formula=lambda k, h: h * h + 4 * h - 1,
        hypotheses=lambda A, h: _mixed_case2_base(A, h)
        and A.elements[2] != 2 * A.elements[0] + A.elements[1],
        formula_text="h^2 + 4*h - 1",
        hypotheses_text="k = h+1, h >= 3, A positive, 2nd and 3rd elements differ in parity from the 1st, a3 != 2*a1 + a2",
        status="proved",
        source="mixed parity with the third element free of the first two",
    ),
    BoundCatalogEntry(
        id="MixedParity_case3_notAP",
        variant=SumsetVariant.RESTRICTED_SIGNED,
        formula=lambda k, h: h * h + 2 * h + 2,
        hypotheses=lambda A, h: _mixed_case3_base(A, h)
        and not is_arithmetic_progression(_without_second(A)),
        formula_text="h^2 + 2*h + 2",
        hypotheses_text="k = h+1, h >= 4, A positive, only the 2nd element differs in parity from the 1st, A minus its 2nd element is not an AP",
        status="proved",
        source="odd second element over a non-progression remainder",
    ),
    BoundCatalogEntry(
        id="MixedParity_case3_ap_odd",
        variant=SumsetVariant.RESTRICTED_SIGNED,
        formula=lambda k, h: h * (3 * h - 1) // 2 + 4,
        hypotheses=lambda A, h: _mixed_case3_base(A, h)
        and is_arithmetic_progression(_without_second(A))
        and A.elements[1] % 2 == 1,
        formula_text="h*(3*h - 1)/2 + 4",
        hypotheses_text="k = h+1, h >= 4, A positive, only the 2nd element differs in parity from the 1st, A minus its 2nd element is an AP, 2nd element odd",
        status="proved",
        source="odd second element over an even progression remainder",
    ),
    BoundCatalogEntry(
        id="MixedParity_case3_ap_even_h4",
        variant=SumsetVariant.RESTRICTED_SIGNED,
        formula=lambda k, h: 26,
        hypotheses=lambda A, h: _mixed_case3_base(A, h)
        and h == 4
        and is_arithmetic_progression(_without_second(A))
        and A.elements[1] % 2 == 0,
        formula_text="26",
        hypotheses_text="k = 5, h = 4, A positive, only the 2nd element differs in parity from the 1st, A minus its 2nd element is an AP, 2nd element even",
        status="proved",
        source="even second element over an odd progression remainder, four folds",
    ),
    BoundCatalogEntry(
        id="MixedParity_case3_ap_even",
        variant=SumsetVariant.RESTRICTED_SIGNED,
        formula=lambda k, h: 2 * h * (h - 1),
        hypotheses=lambda A, h: _mixed_case3_base(A, h)
        and h >= 5
        and is_arithmetic_progression(_without_second(A))
        and A.elements[1] % 2 == 0,
        formula_text="2*h*(h - 1)",
        hypotheses_text="k = h+1, h >= 5, A positive, only the 2nd element differs in parity from the 1st, A minus its 2nd element is an AP, 2nd element even",
        status="proved",
        source="even second element over an odd progression remainder, five or more folds",
    ),
]


def bound_catalogue() -> list[BoundCatalogEntry]:
    """All registered bounds, in stable order."""
    return list(_ENTRIES)


def catalogue_to_json() -> str:
    """Render the catalogue as a canonical JSON document."""
    doc = [
        {
            "id": entry.id,
            "variant": entry.variant.value,
            "formula": entry.formula_text,
            "hypotheses": entry.hypotheses_text,
            "source": entry.source,
            "status": entry.status,
        }
        for entry in _ENTRIES
    ]
    return json.dumps(doc, indent=2)


def check_bounds(
    A: IntegerSet,
    h: int,
    result: SumsetResult,
    variant: SumsetVariant = SumsetVariant.RESTRICTED_SIGNED,
) -> list[BoundReport]:
    """Reports for every catalogue entry whose hypotheses hold for (A, h).

    The caller supplies the computed sumset for the matching variant; only
    entries of that variant are checked.
    """
    if variant not in (SumsetVariant.RESTRICTED, SumsetVariant.RESTRICTED_SIGNED):
        raise VariantMismatch(f"no catalogue bounds govern variant {variant.value!r}")
    k = len(A)
    reports = []
    for entry in _ENTRIES:
        if entry.variant is variant and entry.applies(A, h):
            bound = entry.value(k, h)
            observed = result.cardinality
            reports.append(
                BoundReport(
                    id=entry.id,
                    k=k,
                    h=h,
                    bound=bound,
                    observed=observed,
                    slack=observed - bound,
                    met=observed >= bound,
                )
            )
    return reports


# --- extremal constructors --------------------------------------------------


def odd_progression(d: int, k: int) -> IntegerSet:
    """d*{1, 3, ..., 2k-1}: attains the direct bound for every 3 <= h <= k-1."""
    if d < 1 or k < 1:
        raise BadParams("odd_progression needs d >= 1 and k >= 1")
    return IntegerSet(tuple(d * (2 * i + 1) for i in range(k)))


def interval(d: int, k: int, from_zero: bool = False) -> IntegerSet:
    """d*[1, k] (or d*[0, k-1]): attains the weak all-fold bounds."""
    if d < 1 or k < 1:
        raise BadParams("interval needs d >= 1 and k >= 1")
    start = 0 if from_zero else 1
    return IntegerSet(tuple(d * (start + i) for i in range(k)))


def sum_closure4(a1: int, a2: int, a3: int) -> IntegerSet:
    """{a1, a2, a3, a1+a2+a3}: 4-element full-fold minimizer."""
    if not 0 < a1 < a2 < a3:
        raise BadParams("sum_closure4 needs 0 < a1 < a2 < a3")
    return IntegerSet((a1, a2, a3, a1 + a2 + a3))


def diff_closure4(a1: int, a2: int, a3: int) -> IntegerSet:
    """{a1, a2, a3, a3+a2-a1}: 4-element full-fold minimizer."""
    if not 0 < a1 < a2 < a3:
        raise BadParams("diff_closure4 needs 0 < a1 < a2 < a3")
    return IntegerSet((a1, a2, a3, a3 + a2 - a1))


def pair_closure3(a1: int, a2: int) -> IntegerSet:
    """{a1, a2, a1+a2}: 3-element full-fold minimizer."""
    if not 0 < a1 < a2:
        raise BadParams("pair_closure3 needs 0 < a1 < a2")
    return IntegerSet((a1, a2, a1 + a2))


def zero_pair_closure4(a1: int, a2: int) -> IntegerSet:
    """{0, a1, a2, a1+a2}: 4-element full-fold minimizer containing 0."""
    if not 0 < a1 < a2:
        raise BadParams("zero_pair_closure4 needs 0 < a1 < a2")
    return IntegerSet((0, a1, a2, a1 + a2))


_EXTREMAL_KINDS: dict[str, Callable[..., IntegerSet]] = {
    "odd_progression": odd_progression,
    "interval": interval,
    "sum_closure4": sum_closure4,
    "diff_closure4": diff_closure4,
    "pair_closure3": pair_closure3,
    "zero_pair_closure4": zero_pair_closure4,
}


def extremal_set(kind: str, **params) -> IntegerSet:
    """Build a named extremal family member; BadParams on unknown kind."""
    builder = _EXTREMAL_KINDS.get(kind)
    if builder is None:
        raise BadParams(
            f"unknown extremal kind {kind!r}; known: {sorted(_EXTREMAL_KINDS)}"
        )
    try:
        return builder(**params)
    except TypeError as exc:
        raise BadParams(f"bad parameters for {kind}: {exc}") from exc
