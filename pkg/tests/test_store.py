import random
from fractions import Fraction

import numpy as np
import pytest

from sumprod.core import SppTriple, spp_of, spp_rows
from sumprod.generators import friable_prefix, interval_subset_blocks
from sumprod.store import EXPORT_HEADER, HEADER, Dataset, WitnessRecord, dataset_from_sets


def test_ingest_examples():
    ds = Dataset()
    assert ds.ingest((1, 2, 3, 4, 6, 8, 9, 12), "friable") == "new"
    assert (8, 20, 22) in ds.records
    assert ds.ingest((1, 2, 3, 4, 6, 8, 9, 12), "friable") == "unchanged"
    assert ds.ingest((2, 4, 6, 8, 12, 16, 18, 24), "friable") == "unchanged"


def test_ingest_rejects_wrong_claim():
    with pytest.raises(ValueError):
        Dataset().ingest((1, 2, 3), "x", (3, 6, 6))
    with pytest.raises(ValueError):
        Dataset().ingest((1, 2, 3), "bad,tag")


def test_minimal_maximum_rule():
    a = Dataset()
    a.ingest((1, 2, 4, 16), "a")  # (4, 10, 8), max 16
    b = Dataset()
    b.ingest((1, 2, 4, 8), "b")  # different key
    t = spp_of((1, 2, 4, 16))
    c = Dataset([WitnessRecord(t, (1, 2, 4, 16), "a")])
    rec12 = WitnessRecord(t, (1, 2, 4, 12), "z")  # pretend record with a smaller max
    merged = c.merge(Dataset([rec12]))
    assert merged.records[t].max_element == 12
    assert c.merge(Dataset()) == c and c.merge(c) == c


def _random_dataset(rng):
    ds = Dataset()
    for _ in range(rng.randint(0, 30)):
        k = rng.randint(1, 5)
        ds.ingest(sorted(rng.sample(range(1, 30), k)), rng.choice(["p", "q", "r"]))
    return ds


def test_merge_laws():
    rng = random.Random(2024)
    for _ in range(100):
        a, b, c = (_random_dataset(rng) for _ in range(3))
        assert a.merge(b) == b.merge(a)
        assert a.merge(b).merge(c) == a.merge(b.merge(c))
        assert a.merge(a) == a
        assert a.merge(b).to_text() == b.merge(a).to_text()


def test_block_ingest_matches_single_ingest():
    rows = np.vstack(list(interval_subset_blocks(14, 4)))
    fast = Dataset()
    fast.ingest_block(rows, "t")
    slow = dataset_from_sets(rows.tolist(), "t")
    assert fast == slow
    given = Dataset()
    given.ingest_block(2 * rows, "t", spp_rows(rows))
    assert given == slow


def test_round_trip_bytes(tmp_path):
    ds = Dataset()
    for block in interval_subset_blocks(12, 5):
        ds.ingest_block(block, "interval12")
    ds.ingest(friable_prefix(14, 3).elements, "friable")
    path = tmp_path / "a.csv"
    ds.write(path)
    first = path.read_bytes()
    assert first.startswith((HEADER + "\n").encode())
    again = Dataset.read(path)
    again.write(tmp_path / "b.csv")
    assert (tmp_path / "b.csv").read_bytes() == first
    assert again == ds


@pytest.mark.parametrize("text", [
    "n,sum,prod\n",
    HEADER + "\n3,5,6,3,1 2 3\n",
    HEADER + "\n3,6,5,3,1 2 3,x\n",  # wrong pair for {1,2,3}
    HEADER + "\n3,6,5,8,2 4 8,x\n",  # not primitive
])
def test_malformed_files(text):
    with pytest.raises(ValueError):
        Dataset.from_text(text)


def test_spp_set_and_coverage(exact_results):
    assert Dataset().spp_set(3) == set()
    for n in (3, 4):
        ds = Dataset()
        for (i, j), W in exact_results[n].integer_pairs.items():
            ds.ingest(W, "exact", (n, i, j))
        assert ds.spp_set(n) == set(exact_results[n].integer_pairs)
    ds3 = Dataset()
    for W in exact_results[3].integer_pairs.values():
        ds3.ingest(W, "exact")
    assert ds3.coverage(3) == (Fraction(3, 4), Fraction(1))
    ds4 = Dataset()
    for W in exact_results[4].integer_pairs.values():
        ds4.ingest(W, "exact")
    assert ds4.coverage(4)[1] == 1
    assert Dataset().coverage(5) == (0, 0)


def test_usage_histogram():
    ds = Dataset()
    ds.ingest((1, 2, 3), "x")
    assert ds.usage_histogram(3, 3) == [1, 1, 1]
    assert Dataset().usage_histogram(3, 4) == [0, 0, 0, 0]


def test_minimax():
    ds = Dataset()
    for block in interval_subset_blocks(16, 6):
        ds.ingest_block(block, "interval")
    rec = ds.minimax_report(6)
    assert max(rec.triple[1:]) == 15
    ds.ingest(friable_prefix(8, 3).elements, "friable")
    assert ds.minimax_report(8).triple == (8, 20, 22)
    one = Dataset()
    one.ingest((1,), "x")
    assert one.minimax_report(1).triple == (1, 1, 1)
    with pytest.raises(KeyError):
        one.minimax_report(2)


def test_envelope():
    ds = Dataset()
    ds.ingest(friable_prefix(14, 3).elements, "friable")
    ds.ingest(friable_prefix(16, 3).elements, "friable")
    ds.ingest((1, 2, 3), "x")
    keys = [r.triple for r in ds.envelope_report(4)]
    assert SppTriple(14, 55, 43) in keys and SppTriple(16, 72, 50) in keys
    assert SppTriple(3, 5, 6) not in keys


def test_revalidate_flags_tampering():
    ds = Dataset()
    ds.ingest((1, 2, 4), "x")
    assert ds.revalidate() == []
    t = SppTriple(3, 6, 5)
    ds.records[SppTriple(3, 5, 5)] = WitnessRecord(t, (1, 2, 4), "x")
    assert ds.revalidate()


def test_export():
    ds = Dataset()
    ds.ingest((1, 2), "x")
    ds.ingest((1, 2, 3), "x")
    lines = ds.export_normalized().splitlines()
    assert lines[0] == EXPORT_HEADER
    assert len(lines) == 2 and lines[1].startswith("3,5,6,1,2,")
