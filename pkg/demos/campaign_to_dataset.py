"""A tiny campaign end to end: generate, merge, check and export."""
import tempfile
from pathlib import Path

from sumprod.bounds import golden_conjecture_holds, solymosi_holds
from sumprod.generators import Campaign, campaign_blocks
from sumprod.store import Dataset

runs = [Campaign("ExhaustiveInterval", N=14, nMax=6),
        Campaign("DivisorSubsets", N=120, nMin=3, nMax=8),
        Campaign("RandomInterval", N=60, nMin=6, nMax=8, seed=2024, sampleCount=500)]
ds = Dataset()
for c in runs:
    part = Dataset()
    for block in campaign_blocks(c):
        part.ingest_block(block, c.sourceTag)
    print(f"{c.strategy:20s} {len(part):5d} keys")
    ds = ds.merge(part)

print(f"merged: {len(ds)} keys; revalidation problems: {len(ds.revalidate())}")
print("Solymosi holds everywhere:", all(solymosi_holds(t) for t in ds.records))
print("golden conjecture holds everywhere:", all(golden_conjecture_holds(t) for t in ds.records if t.n >= 2))
for n in (6, 7, 8):
    a, b = ds.coverage(n)
    print(f"n={n}: {len(ds.spp_set(n))} pairs, {float(b):.0%} of the corollary bound")

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "demo.csv"
    ds.write(path)
    print(path.read_text().splitlines()[:4])
