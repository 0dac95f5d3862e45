"""Exact SPP(n) for small n, the partial n = 7 check, and the witness tables.

Every point of the grid [2n-1, n(n+1)/2]^2 gets a status:

* ``witnessed``: some searched integer set has the pair;
* ``sezExcluded``: at most 3n-4 products and a non-maximal sumset;
* ``searchExcluded``: at most 3n-4 sums and a repeated product, but the
  small-sumset search, which is complete there, never produced it;
* ``unresolved``: none of the above.
"""
from __future__ import annotations

import itertools
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from math import comb, lcm

import numpy as np

from . import polynomials as P
from .bounds import sez_excludes, witness_max_bound
from .core import format_set, spp_of
from .generators import (MAX_DIVISOR_COUNT, combination_indices, divisor_subset_blocks, divisors,
                         friable_prefix)
from .realsearch import (AlgebraicNumber, AlgebraicSet, RealWitness, alg_spp,
                         small_sumset_candidate_count, small_sumset_pairs, spp_real_delta)
from .store import Dataset

STATUSES = ("witnessed", "sezExcluded", "searchExcluded", "unresolved")


@dataclass(frozen=True)
class ProofEntry:
    pair: tuple[int, int]
    status: str
    evidence: str


@dataclass
class ExactResult:
    n: int
    integer_pairs: dict[tuple[int, int], tuple[int, ...]]
    real_delta: dict[tuple[int, int], RealWitness]
    proof_log: list[ProofEntry]
    search_sizes: dict[str, int] = field(default_factory=dict)

    @property
    def unresolved(self) -> set[tuple[int, int]]:
        return {e.pair for e in self.proof_log if e.status == "unresolved"}

    def certificate(self) -> str:
        lines = ["n,i,j,status,evidence"]
        for e in self.proof_log:
            lines.append(f"{self.n},{e.pair[0]},{e.pair[1]},{e.status},{e.evidence}")
        for (i, j), w in self.real_delta.items():
            lines.append(f"{self.n},{i},{j},realOnly,{w.describe()}")
        return "\n".join(lines) + "\n"


def _scan_interval(args) -> list:
    """Witnesses among the n-subsets of [N] whose maximum is ``top``."""
    n, top, source = args
    ds = Dataset()
    if n == 1:
        ds.ingest((top,), source)
    else:
        idx = combination_indices(top - 1, n - 1)
        for start in range(0, len(idx), 250_000):
            part = idx[start:start + 250_000].astype(np.int64) + 1
            ds.ingest_block(np.hstack([part, np.full((len(part), 1), top, dtype=np.int64)]), source)
    return list(ds.records.values())


def integer_witnesses(n: int, interval_N: int = 36, divisor_limit: int = 512,
                      jobs: int = 1) -> tuple[Dataset, dict[str, int]]:
    """Witness dataset for n-sets from every targeted integer search.

    Sources: all n-subsets of [interval_N]; all n-subsets of the powers of two
    up to the conjectured witness bound; n-subsets of divisors(M) for
    M <= divisor_limit; friable prefixes; the small-sumset candidates.
    Parallel and serial runs give the same dataset, since merging is
    order-independent.
    """
    sizes: dict[str, int] = {}
    ds = Dataset()
    tasks = [(n, top, f"interval{interval_N}") for top in range(n, interval_N + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            parts = list(pool.map(_scan_interval, tasks))
    else:
        parts = [_scan_interval(t) for t in tasks]
    for part in parts:
        for rec in part:
            ds._offer(rec)
    sizes["interval"] = comb(interval_N, n)

    top_exp = witness_max_bound(n).bit_length() - 1 if n >= 2 else 0
    powers = [2**e for e in range(top_exp + 1)]
    gp_sets = list(itertools.combinations(powers, n))
    for A in gp_sets:
        ds.ingest(A, "powers2")
    sizes["powers2"] = len(gp_sets)

    count = 0
    for M in range(1, divisor_limit + 1):
        if n <= len(divisors(M)) <= MAX_DIVISOR_COUNT:
            for block in divisor_subset_blocks(M, [n]):
                ds.ingest_block(block, "divisors")
                count += len(block)
    sizes["divisors"] = count

    for y in (2, 3, 5, 7):
        ds.ingest(friable_prefix(n, y).elements, "friable")

    if 3 <= n <= 10:
        for (i, j), A in small_sumset_pairs(n).items():
            ds.ingest(A, "smallsumset", (n, i, j))
        sizes["smallsumset"] = small_sumset_candidate_count(n)
    ds.log = []
    return ds, sizes


def classify_grid(n: int, witnessed: dict[tuple[int, int], str],
                  search_complete: bool) -> list[ProofEntry]:
    lo, top = 2 * n - 1, n * (n + 1) // 2
    log = []
    for i in range(lo, top + 1):
        for j in range(lo, top + 1):
            if (i, j) in witnessed:
                entry = ProofEntry((i, j), "witnessed", witnessed[(i, j)])
            elif n >= 3 and sez_excludes(n, i, j):
                entry = ProofEntry((i, j), "sezExcluded", f"|AA|={j}<=3n-4={3 * n - 4} forces a Sidon set")
            elif search_complete and n >= 3 and i <= 3 * n - 4 and j < top:
                entry = ProofEntry((i, j), "searchExcluded",
                                   f"small-sumset search complete for |A+A|<={3 * n - 4}")
            else:
                entry = ProofEntry((i, j), "unresolved", "no witness and no excluding rule")
            log.append(entry)
    return log


def compute_exact(n: int, divisor_limit: int = 512, jobs: int = 1,
                  with_real: bool = True) -> ExactResult:
    """SPP(n) with a status for every grid point, plus the real-only pairs."""
    if not 1 <= n <= 6:
        raise ValueError("exact computation covers 1 <= n <= 6")
    ds, sizes = integer_witnesses(n, divisor_limit=divisor_limit, jobs=jobs)
    found = {(t.sum_size, t.prod_size): rec for t, rec in ds.records.items() if t.n == n}
    witnessed = {ij: f"{{{format_set(rec.witness)}}} via {rec.source}" for ij, rec in found.items()}
    log = classify_grid(n, witnessed, search_complete=True)
    if any(e.status == "unresolved" for e in log):
        bad = sorted(e.pair for e in log if e.status == "unresolved")
        raise RuntimeError(f"unresolved grid points for n={n}: {bad}")
    pairs = {ij: found[ij].witness for ij in sorted(found)}
    delta = spp_real_delta(n) if with_real and n >= 3 else {}
    return ExactResult(n, pairs, delta, log, sizes)


@dataclass
class PartialReport:
    n: int
    witnessed: set[tuple[int, int]]
    unresolved: set[tuple[int, int]]
    proof_log: list[ProofEntry]


def check_spp7_partial(divisor_limit: int = 512, jobs: int = 1) -> PartialReport:
    """Small-sumset search (i <= 17) and SEZ (j <= 17) for n = 7, plus witnesses."""
    n = 7
    ds, _ = integer_witnesses(n, divisor_limit=divisor_limit, jobs=jobs)
    witnessed = {(t.sum_size, t.prod_size): f"{{{format_set(rec.witness)}}} via {rec.source}"
                 for t, rec in ds.records.items() if t.n == n}
    log = classify_grid(n, witnessed, search_complete=True)
    return PartialReport(n, set(witnessed), {e.pair for e in log if e.status == "unresolved"}, log)


# -- witness tables -------------------------------------------------------------

@dataclass(frozen=True)
class TableRow:
    table: str
    n: int
    sum_size: int
    prod_size: int
    witness: str
    extra: str


@dataclass(frozen=True)
class TableCheck:
    row: TableRow
    recomputed: tuple[int, int, int]
    ok: bool
    note: str = ""


def load_witness_tables(text: str | None = None) -> list[TableRow]:
    if text is None:
        text = resources.files("sumprod").joinpath("data/witness_tables.txt").read_text("utf-8")
    rows = []
    for line in text.splitlines():
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = [p.strip() for p in line.split("|")]
        if len(parts) != 6:
            raise ValueError(f"bad fixture line {line!r}")
        rows.append(TableRow(parts[0], int(parts[1]), int(parts[2]), int(parts[3]), parts[4], parts[5]))
    return rows


_PSI = re.compile(r"^Psi\((\d+),(\d+)\)(?:\s*(u|\\)\s*\{([\d,\s]*)\})?$")


def parse_integer_witness(text: str) -> tuple[int, ...]:
    text = text.strip()
    m = _PSI.match(text)
    if m:
        base = set(friable_prefix(int(m.group(1)), int(m.group(2))).elements)
        extra = {int(v) for v in m.group(4).split(",")} if m.group(4) else set()
        if m.group(3) == "u":
            if base & extra:
                raise ValueError(f"{text}: union adds elements already present")
            base |= extra
        elif m.group(3) == "\\":
            if not extra <= base:
                raise ValueError(f"{text}: removes elements that are absent")
            base -= extra
        return tuple(sorted(base))
    if text.startswith("{") and text.endswith("}"):
        return tuple(sorted(int(v) for v in text[1:-1].split(",")))
    raise ValueError(f"cannot parse witness {text!r}")


def parse_exponents(text: str) -> tuple[int, ...]:
    out = []
    for tok in text.strip()[1:-1].split(","):
        tok = tok.strip()
        if tok == "1":
            out.append(0)
        elif tok == "r":
            out.append(1)
        elif tok.startswith("r^"):
            out.append(int(tok[2:]))
        else:
            raise ValueError(f"bad power of r {tok!r}")
    return tuple(out)


def verify_witness_tables(rows: list[TableRow] | None = None) -> list[TableCheck]:
    rows = load_witness_tables() if rows is None else rows
    checks = []
    for row in rows:
        claimed = (row.n, row.sum_size, row.prod_size)
        note = ""
        if row.table.startswith("real"):
            ratio = AlgebraicNumber.root_in(P.parse(row.extra, "r"), 1, 2)
            got = tuple(alg_spp(AlgebraicSet(ratio, parse_exponents(row.witness))))
            ok = got == claimed
        else:
            A = parse_integer_witness(row.witness)
            got = tuple(spp_of(A))
            ok = got == claimed
            if row.extra.startswith("lcm="):
                want = int(row.extra[4:])
                if lcm(*A) != want:
                    ok = False
                    note = f"lcm is {lcm(*A)}, table says {want}"
        checks.append(TableCheck(row, got, ok, note))
    return checks
