"""Exact sum-product pairs for n <= 6, with the real-only extras.

Every point of the grid [2n-1, n(n+1)/2]^2 is either witnessed by an integer
set or ruled out, and the certificate says which rule did it.
"""
from collections import Counter

from sumprod.exactspp import compute_exact

for n in range(3, 7):
    res = compute_exact(n)
    statuses = Counter(e.status for e in res.proof_log)
    print(f"n={n}: {len(res.integer_pairs)} integer pairs, {len(res.real_delta)} real-only "
          f"({dict(statuses)})")

res = compute_exact(4)
print()
print("SPP(4) with minimal-maximum witnesses:")
for (i, j), W in res.integer_pairs.items():
    print(f"  ({i:2d},{j:2d})  {set(W)}")
print("pairs only reachable with an irrational ratio r:")
for (i, j), w in res.real_delta.items():
    print(f"  ({i:2d},{j:2d})  {w.describe()}")
