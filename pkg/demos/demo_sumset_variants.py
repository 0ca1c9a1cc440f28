"""Tour of the four fold variants and the subset-sum helper.

Each variant answers the same question -- which integers are reachable by
combining h choices from a set -- under a different coefficient discipline.
"""

from sumsetlab import IntegerSet, SumsetVariant, compute_dp, compute_oracle, subsums

A = IntegerSet((1, 3, 5, 7))
h = 3
print(f"base set A = {A}, fold count h = {h}")
print()

for variant in SumsetVariant:
    result = compute_dp(A, variant, h)
    values = ",".join(str(v) for v in result.values)
    print(f"{variant.value:>10}: {result.cardinality:3d} values  [{values}]")

print()
print("The restricted variants forbid reusing an element, the signed ones")
print("let each chosen element enter with either sign; 'rss' applies both")
print("rules at once.")
print()

sums = subsums(A)
print(f"subset sums of A ({sums.cardinality} values): "
      + ",".join(str(v) for v in sums.values))
print()

print("Every cardinality above is reproduced by the brute-force route:")
for variant in SumsetVariant:
    fast = compute_dp(A, variant, h)
    slow = compute_oracle(A, variant, h)
    tag = "ok" if fast.values == slow.values else "MISMATCH"
    print(f"{variant.value:>10}: bit-table {fast.cardinality}, "
          f"enumeration {slow.cardinality} -> {tag}")
