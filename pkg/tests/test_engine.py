import itertools
import random

import pytest

from sumsetlab.engine import (
    MAX_FOLD,
    ORACLE_COST_CAP,
    SumsetRequest,
    SumsetVariant,
    compute_batch,
    compute_dp,
    compute_oracle,
    independence_number,
    oracle_cost,
    worker_count,
)
from sumsetlab.errors import (
    BadParams,
    CostCapExceeded,
    FoldTooLarge,
    ZeroElement,
)
from sumsetlab.intset import IntegerSet

ALL_VARIANTS = list(SumsetVariant)
RESTRICTED_VARIANTS = (SumsetVariant.RESTRICTED, SumsetVariant.RESTRICTED_SIGNED)


class TestVariantNames:
    def test_from_name(self):
        assert SumsetVariant.from_name("rss") is SumsetVariant.RESTRICTED_SIGNED
        assert SumsetVariant.from_name("plain") is SumsetVariant.PLAIN
        with pytest.raises(BadParams):
            SumsetVariant.from_name("bogus")


class TestFoldValidation:
    @pytest.mark.parametrize("variant", ALL_VARIANTS)
    def test_fold_below_one(self, variant):
        with pytest.raises(BadParams):
            compute_dp(IntegerSet((1, 2)), variant, 0)

    @pytest.mark.parametrize("variant", ALL_VARIANTS)
    def test_fold_cap(self, variant):
        big = IntegerSet.interval(1, MAX_FOLD + 1)
        with pytest.raises(FoldTooLarge):
            compute_dp(big, variant, MAX_FOLD + 1)

    @pytest.mark.parametrize("variant", RESTRICTED_VARIANTS)
    def test_restricted_needs_enough_elements(self, variant):
        with pytest.raises(FoldTooLarge):
            compute_dp(IntegerSet((1, 2)), variant, 3)

    @pytest.mark.parametrize("variant", (SumsetVariant.PLAIN, SumsetVariant.SIGNED))
    def test_unrestricted_allows_h_over_k(self, variant):
        assert compute_dp(IntegerSet((1, 2)), variant, 3).cardinality > 0


class TestKnownValues:
    def test_restricted_signed_extremal(self):
        # k=4, h=3 on the odd progression: 2hk - h^2 + 1 = 16.
        r = compute_dp(IntegerSet((1, 3, 5, 7)), SumsetVariant.RESTRICTED_SIGNED, 3)
        assert r.cardinality == 16

    def test_two_element_rss(self):
        r = compute_dp(IntegerSet((1, 2)), SumsetVariant.RESTRICTED_SIGNED, 2)
        assert r.values == (-3, -1, 1, 3)

    def test_plain_interval(self):
        # h{0,1,2} = [0, 2h]
        r = compute_dp(IntegerSet((0, 1, 2)), SumsetVariant.PLAIN, 4)
        assert r.values == tuple(range(9))

    def test_restricted_all_elements(self):
        r = compute_dp(IntegerSet((1, 4, 9)), SumsetVariant.RESTRICTED, 3)
        assert r.values == (14,)

    def test_signed_one_sign_per_element(self):
        # {1,2} at h=2: +-2, +-4, +-(1+2), +-(2-1); never 0 because +1 and
        # -1 cannot both be used for the same element.
        r = compute_dp(IntegerSet((1, 2)), SumsetVariant.SIGNED, 2)
        assert r.values == (-4, -3, -2, -1, 1, 2, 3, 4)

    def test_signed_symmetric(self):
        r = compute_dp(IntegerSet((2, 5, 6)), SumsetVariant.SIGNED, 3)
        assert r.values == tuple(-v for v in reversed(r.values))


class TestOracleCost:
    def test_formulas(self):
        import math

        assert oracle_cost(5, SumsetVariant.PLAIN, 3) == math.comb(7, 3)
        assert oracle_cost(5, SumsetVariant.RESTRICTED, 3) == math.comb(5, 3)
        assert oracle_cost(5, SumsetVariant.RESTRICTED_SIGNED, 3) == math.comb(5, 3) * 8
        # SIGNED k=2, h=2: (2,0) signs 2, (0,2) signs 2, (1,1) signs 4.
        assert oracle_cost(2, SumsetVariant.SIGNED, 2) == 8

    def test_cost_matches_signed_enumeration(self):
        # The closed form must count exactly the vectors the oracle visits.
        k, h = 3, 4
        count = 0
        for mags in itertools.product(range(h + 1), repeat=k):
            if sum(mags) != h:
                continue
            nonzero = sum(1 for m in mags if m)
            count += 2**nonzero
        assert count == oracle_cost(k, SumsetVariant.SIGNED, h)

    def test_cap_enforced(self):
        big = IntegerSet.interval(1, 40)
        assert oracle_cost(40, SumsetVariant.RESTRICTED_SIGNED, 30) > ORACLE_COST_CAP
        with pytest.raises(CostCapExceeded):
            compute_oracle(big, SumsetVariant.RESTRICTED_SIGNED, 30)


class TestDualRoutes:
    @pytest.mark.parametrize("variant", ALL_VARIANTS)
    def test_routes_agree_on_seeded_random_sets(self, variant):
        rng = random.Random(99)
        for _ in range(60):
            k = rng.randint(1, 5)
            elements = tuple(sorted(rng.sample(range(-9, 10), k)))
            A = IntegerSet(elements)
            h_hi = k if variant in RESTRICTED_VARIANTS else 5
            for h in range(1, h_hi + 1):
                assert compute_oracle(A, variant, h).values == (
                    compute_dp(A, variant, h).values
                ), (elements, variant, h)

    def test_routes_agree_with_zero_element(self):
        A = IntegerSet((-4, 0, 3))
        for variant in ALL_VARIANTS:
            for h in range(1, 4):
                assert (
                    compute_oracle(A, variant, h).values
                    == compute_dp(A, variant, h).values
                )


class TestIndependenceNumber:
    def test_known_values(self):
        assert independence_number(IntegerSet((1, 2)), 10) == 2
        assert independence_number(IntegerSet((2, 3)), 10) == 4

    def test_unresolved_returns_none(self):
        assert independence_number(IntegerSet((1,)), 10) is None

    def test_zero_element_rejected(self):
        with pytest.raises(ZeroElement):
            independence_number(IntegerSet((0, 1)), 5)

    def test_t_max_validation(self):
        with pytest.raises(BadParams):
            independence_number(IntegerSet((1, 2)), 0)
        with pytest.raises(FoldTooLarge):
            independence_number(IntegerSet((1, 2)), MAX_FOLD + 1)

    def test_scan_is_consistent_with_signed_folds(self):
        A = IntegerSet((3, 5))
        t = independence_number(A, 12)
        assert t is not None
        for h in range(1, t + 1):
            assert 0 not in compute_dp(A, SumsetVariant.SIGNED, h)
        assert 0 in compute_dp(A, SumsetVariant.SIGNED, t + 1)


class TestBatchAndWorkers:
    def test_batch_preserves_order(self):
        reqs = [
            SumsetRequest(IntegerSet((1, 3, 5)), SumsetVariant.RESTRICTED_SIGNED, 2),
            SumsetRequest(IntegerSet((1, 2)), SumsetVariant.PLAIN, 3),
            SumsetRequest(IntegerSet((2, 7)), SumsetVariant.SIGNED, 2),
        ]
        got = compute_batch(reqs, workers=3)
        want = [compute_dp(r.set, r.variant, r.fold) for r in reqs]
        assert got == want

    def test_batch_worker_validation(self):
        with pytest.raises(BadParams):
            compute_batch([], workers=0)

    def test_worker_count_env_override(self, monkeypatch):
        monkeypatch.setenv("SUMSETLAB_THREADS", "3")
        assert worker_count() == 3
        monkeypatch.setenv("SUMSETLAB_THREADS", "zero")
        with pytest.raises(BadParams):
            worker_count()
        monkeypatch.setenv("SUMSETLAB_THREADS", "0")
        with pytest.raises(BadParams):
            worker_count()
        monkeypatch.delenv("SUMSETLAB_THREADS")
        assert worker_count() >= 1
