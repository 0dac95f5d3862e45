"""The rational candidates for sets with few sums and a repeated product."""
from sumprod.realsearch import small_sumset_a_values, small_sumset_candidate_count, small_sumset_pairs

for n in range(4, 8):
    vals = small_sumset_a_values(n)
    print(f"n={n}: {len(vals)} offsets, {small_sumset_candidate_count(n)} candidate sets")

print()
print("offsets for n = 6:", ", ".join(str(a) for a in small_sumset_a_values(6)))
print()
for (i, j), W in sorted(small_sumset_pairs(5).items()):
    print(f"  n=5 ({i},{j})  {W}")
