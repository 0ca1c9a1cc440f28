"""Independence of a set: how many signed distinct terms avoid summing to zero.

independence_number(A, t_max) returns the largest h <= t_max such that no
signed sum of 1..h distinct elements of A vanishes (None if every fold up
to t_max avoids zero).  Sets without small coincidences have high
independence; tight arithmetic structure collapses it.
"""

from sumsetlab import IntegerSet, SumsetVariant, compute_dp, independence_number

CASES = [
    (1,),
    (1, 2),
    (2, 3),
    (1, 2, 3),
    (3, 5, 7),
    (1, 10, 100),
    (4, 6, 10),
    (1, 2, 4, 8),
]

for elems in CASES:
    A = IntegerSet(elems)
    value = independence_number(A, 8)
    shown = "over 8" if value is None else str(value)
    print(f"A = {A!s:<14} independence = {shown}")
print()

A = IntegerSet((2, 3))
print(f"Why A = {A} has independence 4: the signed folds grow until")
for h in range(1, 6):
    fold = compute_dp(A, SumsetVariant.SIGNED, h)
    marker = "  <- first fold containing 0" if 0 in fold.values else ""
    values = ",".join(str(v) for v in fold.values)
    print(f"  h={h}: {{{values}}}{marker}")
print()
print("Three copies of 2 cancel two copies of 3 (3*2 - 2*3 = 0), which takes")
print("five terms; no shorter signed combination vanishes (each element keeps")
print("a single sign), so the independence number is 4.")
