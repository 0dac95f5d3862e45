"""Friable prefixes sit low in both coordinates; list the ones in the envelope region."""
from sumprod.generators import friable_prefixes_upto
from sumprod.normalize import norm_K
from sumprod.store import Dataset

ds = Dataset()
for y in (3, 5, 7):
    for fs in friable_prefixes_upto(y, 2**12, n_min=3):
        if fs.n <= 40:
            ds.ingest(fs.elements, f"psi{y}")

print(f"{len(ds)} distinct (n, |A+A|, |AA|) keys from friable prefixes")
for rec in ds.envelope_report(4.0)[:12]:
    n, i, j = rec.triple
    print(f"  n={n:2d} ({i:3d},{j:3d})  K=({norm_K(n, i):.3f},{norm_K(n, j):.3f})  max={rec.max_element}")
