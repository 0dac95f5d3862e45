"""Witness dataset keyed by (n, |A+A|, |AA|).

Each key keeps one gcd-primitive witness: the one with the smallest maximum,
then the lexicographically smallest set, then the smallest source tag.  That
total order makes :meth:`Dataset.merge` associative, commutative and
idempotent.

File format (UTF-8, LF)::

    n,sum,prod,max,set,source
    8,20,22,12,1 2 3 4 6 8 9 12,friable
"""
from __future__ import annotations

import io
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable

import numpy as np

from .bounds import easy_bounds, sez_excludes, spp_count_upper
from .core import SppTriple, as_set, canonicalize, format_set, parse_set, row_gcd, spp_of, spp_rows
from .normalize import norm_K, normalize

HEADER = "n,sum,prod,max,set,source"
EXPORT_HEADER = "n,i,j,kx,ky,lx,ly,k2x,k2y,k3x,k3y"


@dataclass(frozen=True)
class WitnessRecord:
    triple: SppTriple
    witness: tuple[int, ...]
    source: str

    @property
    def max_element(self) -> int:
        return self.witness[-1]

    def rank(self) -> tuple:
        return self.witness[-1], self.witness, self.source

    def to_line(self) -> str:
        n, i, j = self.triple
        return f"{n},{i},{j},{self.max_element},{format_set(self.witness)},{self.source}"


def _check_source(source: str) -> str:
    if "," in source or "\n" in source:
        raise ValueError(f"source tag may not contain commas or newlines: {source!r}")
    return source


class Dataset:
    def __init__(self, records: Iterable[WitnessRecord] = ()):
        self.records: dict[SppTriple, WitnessRecord] = {}
        self.log: list[tuple[SppTriple, str, str]] = []
        for rec in records:
            self._offer(rec)

    def __len__(self):
        return len(self.records)

    def __eq__(self, other):
        return isinstance(other, Dataset) and self.records == other.records

    def __repr__(self):
        return f"Dataset({len(self.records)} records)"

    def _offer(self, rec: WitnessRecord) -> str:
        old = self.records.get(rec.triple)
        if old is None:
            status = "new"
        elif rec.rank() < old.rank():
            status = "improved"
        else:
            return "unchanged"
        self.records[rec.triple] = rec
        self.log.append((rec.triple, status, rec.source))
        return status

    def ingest(self, A, source: str, triple=None) -> str:
        """Add a set; returns ``"new"``, ``"improved"`` or ``"unchanged"``."""
        W = canonicalize(A)
        computed = spp_of(W)
        if triple is not None and SppTriple(*triple) != computed:
            raise ValueError(f"claimed pair {tuple(triple)} but {format_set(W)} gives {tuple(computed)}")
        return self._offer(WitnessRecord(computed, W, _check_source(source)))

    def ingest_block(self, arr: np.ndarray, source: str, sizes=None) -> int:
        """Vectorised ingest of many same-size sets (one sorted set per row).

        ``sizes`` may pass in ``spp_rows(arr)`` when the caller already has it.
        Returns the number of keys that were added or improved.
        """
        _check_source(source)
        arr = np.asarray(arr, dtype=np.int64)
        if len(arr) == 0:
            return 0
        arr = arr // row_gcd(arr)[:, None]
        # dilation leaves both sizes unchanged, so sizes of the raw rows still apply
        sums, prods = spp_rows(arr) if sizes is None else sizes
        n = arr.shape[1]
        keys = [arr[:, c] for c in range(n - 1, -1, -1)] + [arr[:, -1], prods, sums]
        order = np.lexsort(keys)
        s, p = sums[order], prods[order]
        first = np.ones(len(order), dtype=bool)
        first[1:] = (s[1:] != s[:-1]) | (p[1:] != p[:-1])
        changed = 0
        for row in order[first]:
            rec = WitnessRecord(SppTriple(n, int(sums[row]), int(prods[row])),
                                tuple(arr[row].tolist()), source)
            if self._offer(rec) != "unchanged":
                changed += 1
        return changed

    def merge(self, other: "Dataset") -> "Dataset":
        out = Dataset(self.records.values())
        for rec in other.records.values():
            out._offer(rec)
        out.log = []
        return out

    # -- reports ---------------------------------------------------------------

    def spp_set(self, n: int) -> set[tuple[int, int]]:
        return {(i, j) for (m, i, j) in self.records if m == n}

    def coverage(self, n: int) -> tuple[Fraction, Fraction]:
        """|SPP| found over the easy-box size and over the exclusion-zone bound."""
        found = len(self.spp_set(n))
        box = (n * n - 3 * n + 4) ** 2 // 4
        return Fraction(found, box), Fraction(found, spp_count_upper(n))

    def usage_histogram(self, n: int, k_max: int) -> list[int]:
        counts = [0] * (k_max + 1)
        for (m, _, _), rec in self.records.items():
            if m == n:
                for a in rec.witness:
                    if a <= k_max:
                        counts[a] += 1
        return counts[1:]

    def minimax_report(self, n: int) -> WitnessRecord:
        """Record minimising max(i, j); ties by smaller i + j, then smaller i."""
        keys = [t for t in self.records if t.n == n]
        if not keys:
            raise KeyError(f"no records with n = {n}")
        best = min(keys, key=lambda t: (max(t.sum_size, t.prod_size),
                                        t.sum_size + t.prod_size, t.sum_size))
        return self.records[best]

    def envelope_report(self, threshold: float = 4.0) -> list[WitnessRecord]:
        """Records with K_n(|A+A|) + 2 K_n(|AA|) <= threshold (n >= 3)."""
        out = []
        for t in sorted(self.records):
            if t.n >= 3 and norm_K(t.n, t.sum_size) + 2 * norm_K(t.n, t.prod_size) <= threshold:
                out.append(self.records[t])
        return out

    def revalidate(self) -> list[str]:
        """Full scan; returns a description of every inconsistent record."""
        problems = []
        for key, rec in sorted(self.records.items()):
            if rec.triple != key:
                problems.append(f"{key}: stored under the wrong key")
            if spp_of(rec.witness) != rec.triple:
                problems.append(f"{key}: witness gives {tuple(spp_of(rec.witness))}")
            if canonicalize(rec.witness) != rec.witness:
                problems.append(f"{key}: witness is not gcd-primitive")
            lo, hi = easy_bounds(key.n)
            if not (lo <= key.sum_size <= hi and lo <= key.prod_size <= hi):
                problems.append(f"{key}: outside the easy bounds")
            if key.n >= 3 and sez_excludes(*key):
                problems.append(f"{key}: inside the Sidon exclusion zone")
        return problems

    # -- files ------------------------------------------------------------------

    def to_text(self) -> str:
        lines = [HEADER] + [self.records[t].to_line() for t in sorted(self.records)]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Dataset":
        lines = text.splitlines()
        if not lines or lines[0].strip() != HEADER:
            raise ValueError(f"dataset must start with the header {HEADER!r}")
        ds = cls()
        for lineno, line in enumerate(lines[1:], start=2):
            if not line.strip():
                continue
            parts = line.split(",")
            if len(parts) != 6:
                raise ValueError(f"line {lineno}: expected 6 fields")
            n, i, j, top = (int(v) for v in parts[:4])
            W = parse_set(parts[4])
            if W != canonicalize(W) or W[-1] != top or len(W) != n:
                raise ValueError(f"line {lineno}: malformed witness record")
            try:
                ds.ingest(W, parts[5], (n, i, j))
            except ValueError as exc:
                raise ValueError(f"line {lineno}: {exc}") from None
        ds.log = []
        return ds

    def write(self, path) -> None:
        Path(path).write_bytes(self.to_text().encode("utf-8"))

    @classmethod
    def read(cls, path) -> "Dataset":
        return cls.from_text(Path(path).read_bytes().decode("utf-8"))

    def export_normalized(self) -> str:
        """Plot CSV with every normalisation of both coordinates (n >= 3)."""
        out = io.StringIO()
        out.write(EXPORT_HEADER + "\n")
        for n, i, j in sorted(self.records):
            if n < 3:
                continue
            cols = [n, i, j]
            for scheme in ("K", "L", "K2", "K3"):
                cols += [f"{normalize(n, i, scheme):.15g}", f"{normalize(n, j, scheme):.15g}"]
            out.write(",".join(map(str, cols)) + "\n")
        return out.getvalue()


def dataset_from_sets(sets: Iterable, source: str) -> Dataset:
    ds = Dataset()
    for A in sets:
        ds.ingest(as_set(A), source)
    ds.log = []
    return ds
