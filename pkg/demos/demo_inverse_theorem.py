"""Inverse direction: what equality at the bound forces a set to look like.

inverse_verdict compares a set's fold cardinality against its regime's
bound and, at equality, checks the predicted structure.  Strict inequality
is the generic outcome; equality pins the set down.
"""

from sumsetlab import IntegerSet, RegimeUnsupported, inverse_verdict

CASES = [
    ((1, 3, 5, 7), 3),      # direct window: equality, progression
    ((2, 6, 10, 14), 3),    # same up to dilation
    ((1, 2, 3, 4), 3),      # generic set: strict
    ((1, 3, 5, 9), 4),      # full fold, odd: equality via a sum closure
    ((1, 3, 7, 13), 4),     # full fold, odd: strict
    ((1, 2, 3, 4), 4),      # full fold, positive: equality, interval
    ((0, 1, 2, 3), 4),      # full fold with zero: equality, interval
    ((0, 1, 2, 5), 4),      # full fold with zero: strict
]

for elems, h in CASES:
    verdict = inverse_verdict(IntegerSet(elems), h)
    print(f"A={{{','.join(str(v) for v in elems)}}} h={h}")
    print(f"  regime={verdict.regime} bound={verdict.bound} observed={verdict.observed}")
    print(f"  verdict={verdict.verdict}")
    print(f"  classification={verdict.classification} "
          f"(prediction holds: {verdict.prediction_holds})")
    print()

print("Outside the covered regimes the question is not posed:")
try:
    inverse_verdict(IntegerSet((1, 3, 5, 7)), 2)
except RegimeUnsupported as ex:
    print(f"  h=2 -> RegimeUnsupported: {ex}")
