"""Candidate-set generators: exhaustive, divisor, random, friable and closures.

Every generator is a plain Python iterator of sorted tuples.  The exhaustive
strategies also have ``*_blocks`` variants that yield 2-D numpy arrays (one set
per row) for the vectorised kernels in :mod:`sumprod.core`.

Random sampling uses SplitMix64 so that a seed pins the output on any
platform and in any language::

    state = (state + 0x9E3779B97F4A7C15) mod 2^64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2^64
    output z ^ (z >> 31)

A bounded draw in ``[0, m)`` rejects outputs ``>= 2^64 - (2^64 mod m)`` and
returns ``v mod m``.  An ``n``-subset of a list of length ``M`` is drawn with
Floyd's algorithm: for ``j = M-n .. M-1`` draw ``t`` in ``[0, j]`` and add
``j`` if ``t`` is already taken, else ``t``.
"""
from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field, fields
from functools import lru_cache
from math import comb, isqrt
from typing import Iterable, Iterator

import numpy as np

from .core import ELEMENT_CAP, as_set

MASK64 = (1 << 64) - 1
MAX_DIVISOR_COUNT = 32


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, m: int) -> int:
        if m <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % m)
        while True:
            v = self.next()
            if v < limit:
                return v % m

    def sample(self, population, n: int) -> tuple:
        """Uniform ``n``-subset of ``population`` (returned sorted)."""
        M = len(population)
        if n > M:
            raise ValueError(f"cannot draw {n} items from {M}")
        chosen: set[int] = set()
        for j in range(M - n, M):
            t = self.below(j + 1)
            chosen.add(j if t in chosen else t)
        return tuple(sorted(population[k] for k in chosen))


# -- exhaustive ---------------------------------------------------------------

@lru_cache(maxsize=64)
def combination_indices(d: int, k: int) -> np.ndarray:
    """All k-subsets of range(d) as a (C(d,k), k) array in lexicographic order."""
    count = comb(d, k)
    flat = np.fromiter(itertools.chain.from_iterable(itertools.combinations(range(d), k)),
                       dtype=np.int16, count=count * k)
    flat.flags.writeable = False
    return flat.reshape(count, k)


def enumerate_interval_subsets(N: int, n_max: int) -> Iterator[tuple[int, ...]]:
    """Every nonempty subset of {1..N} with at most ``n_max`` elements."""
    if not 1 <= N <= 64:
        raise ValueError(f"N must lie in 1..64, got {N}")
    for k in range(1, min(n_max, N) + 1):
        yield from itertools.combinations(range(1, N + 1), k)


def interval_subset_blocks(N: int, n: int, chunk: int = 250_000) -> Iterator[np.ndarray]:
    """All n-subsets of {1..N} as arrays, ordered by maximum then lexicographically.

    The ordering makes the first occurrence of any sum-product pair its
    minimal-maximum, lexicographically smallest witness.
    """
    if not 1 <= N <= 64:
        raise ValueError(f"N must lie in 1..64, got {N}")
    for top in range(n, N + 1):
        if n == 1:
            yield np.array([[top]], dtype=np.int64)
            continue
        idx = combination_indices(top - 1, n - 1)
        for start in range(0, len(idx), chunk):
            part = idx[start:start + chunk].astype(np.int64) + 1
            yield np.hstack([part, np.full((len(part), 1), top, dtype=np.int64)])


def enumerate_diameter_family(d_max: int, dil_max: int, shift_max: int) -> Iterator[tuple[int, ...]]:
    """Sets c*B + t for every pattern B of {0..d_max} containing 0 and d_max.

    The triple (B, c, t) is recoverable from the emitted set (t is its minimum,
    c its diameter over d_max) so no two triples collide.
    """
    if d_max < 1:
        raise ValueError("d_max must be at least 1")
    interior = range(1, d_max)
    for mask in range(1 << (d_max - 1)):
        pattern = [0] + [b for k, b in enumerate(interior) if mask >> k & 1] + [d_max]
        for c in range(1, dil_max + 1):
            for t in range(1, shift_max + 1):
                yield tuple(c * b + t for b in pattern)


# -- divisors -----------------------------------------------------------------

def divisors(N: int) -> tuple[int, ...]:
    if N < 1:
        raise ValueError("N must be positive")
    small, large = [], []
    for d in range(1, isqrt(N) + 1):
        if N % d == 0:
            small.append(d)
            if d * d != N:
                large.append(N // d)
    return tuple(small + large[::-1])


def _checked_divisors(N: int) -> tuple[int, ...]:
    divs = divisors(N)
    if len(divs) > MAX_DIVISOR_COUNT:
        raise ValueError(f"{N} has {len(divs)} divisors; the subset sweep allows at most "
                         f"{MAX_DIVISOR_COUNT}")
    return divs


def divisor_subsets(N: int) -> Iterator[tuple[int, ...]]:
    divs = _checked_divisors(N)
    for k in range(1, len(divs) + 1):
        yield from itertools.combinations(divs, k)


def divisor_subset_blocks(N: int, sizes: Iterable[int] | None = None,
                          chunk: int = 250_000) -> Iterator[np.ndarray]:
    divs = np.array(_checked_divisors(N), dtype=np.int64)
    d = len(divs)
    for k in (range(1, d + 1) if sizes is None else sizes):
        if not 1 <= k <= d:
            continue
        idx = combination_indices(d, k)
        for start in range(0, len(idx), chunk):
            yield divs[idx[start:start + chunk]]


# -- random -------------------------------------------------------------------

def random_interval_subset(N: int, n: int, seed: int) -> tuple[int, ...]:
    if n > N:
        raise ValueError(f"n={n} exceeds N={N}")
    return SplitMix64(seed).sample(range(1, N + 1), n)


def random_divisor_subset(N: int, n: int, seed: int) -> tuple[int, ...]:
    divs = divisors(N)
    if n > len(divs):
        raise ValueError(f"n={n} exceeds the {len(divs)} divisors of {N}")
    return SplitMix64(seed).sample(divs, n)


# -- friable ------------------------------------------------------------------

def primes_upto(y: int) -> list[int]:
    return [p for p in range(2, y + 1) if all(p % q for q in range(2, isqrt(p) + 1))]


def smooth_numbers(y: int) -> Iterator[int]:
    """The y-smooth integers in increasing order, by merging the streams p*seq."""
    primes = primes_upto(y)
    seq = [1]
    yield 1
    pos = {p: 0 for p in primes}
    heap = [(p, p) for p in primes]
    heapq.heapify(heap)
    while heap:
        v, p = heapq.heappop(heap)
        if v > seq[-1]:
            seq.append(v)
            yield v
        pos[p] += 1
        heapq.heappush(heap, (seq[pos[p]] * p, p))


@dataclass(frozen=True)
class FriableSet:
    y: int
    n: int
    elements: tuple[int, ...]


def friable_prefix(n: int, y: int) -> FriableSet:
    """The n smallest y-friable positive integers."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if y < 2 or primes_upto(y)[-1] != y:
        raise ValueError(f"y must be prime, got {y}")
    elements = tuple(itertools.islice(smooth_numbers(y), n))
    if elements[-1] > ELEMENT_CAP:
        raise OverflowError(f"the {n}th {y}-friable number exceeds 2^31")
    return FriableSet(y, n, elements)


def friable_prefixes_upto(y: int, bound: int, n_min: int = 1) -> Iterator[FriableSet]:
    """Every prefix Psi_n^y (n >= n_min) whose maximum is at most ``bound``."""
    elements: list[int] = []
    for v in smooth_numbers(y):
        if v > bound:
            return
        elements.append(v)
        if len(elements) >= n_min:
            yield FriableSet(y, len(elements), tuple(elements))


# -- closures -----------------------------------------------------------------

def shift_closure(A, t_max: int) -> Iterator[tuple[int, ...]]:
    A = as_set(A)
    for t in range(1, t_max + 1):
        yield tuple(a + t for a in A)


def augment_closure(A, b_max: int) -> Iterator[tuple[int, ...]]:
    A = as_set(A)
    present = set(A)
    for b in range(1, b_max + 1):
        if b not in present:
            yield tuple(sorted(A + (b,)))


# -- campaigns ----------------------------------------------------------------

STRATEGIES = ("ExhaustiveInterval", "DiameterFamily", "DivisorSubsets", "RandomInterval",
              "RandomDivisors", "FriablePrefix", "Shift", "Augment")
RANDOM_STRATEGIES = ("RandomInterval", "RandomDivisors")


@dataclass
class Campaign:
    """One search campaign; serialises to ``key=value`` lines.

    Parameter use per strategy:

    * ExhaustiveInterval: subsets of [N] with nMin..nMax elements
    * DiameterFamily: diameter N, dilations up to dilMax, shifts up to shiftMax
    * DivisorSubsets: subsets of divisors(M) for every M <= N
    * RandomInterval: sampleCount random n-subsets of [N] per n
    * RandomDivisors: sampleCount random n-subsets of divisors(M), every M <= N
    * FriablePrefix: Psi_n^p for primes p <= y, max element <= N (0: no bound)
    * Shift / Augment: closures of an input dataset by shiftMax / augmentMax
    """
    strategy: str
    N: int = 0
    nMin: int = 1
    nMax: int = 64
    y: int = 2
    seed: int | None = None
    sampleCount: int = 1
    shiftMax: int = 1
    augmentMax: int = 1
    dilMax: int = 1
    sourceTag: str = field(default="")

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.nMin < 1 or self.nMax > 64 or self.nMin > self.nMax:
            raise ValueError(f"need 1 <= nMin <= nMax <= 64, got {self.nMin}..{self.nMax}")
        if self.strategy in RANDOM_STRATEGIES and self.seed is None:
            raise ValueError(f"{self.strategy} needs an explicit seed")
        if not self.sourceTag:
            self.sourceTag = self.strategy.lower()

    @classmethod
    def from_text(cls, text: str) -> "Campaign":
        known = {f.name: f for f in fields(cls)}
        kwargs = {}
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = (s.strip() for s in line.partition("="))
            if not sep or key not in known:
                raise ValueError(f"bad campaign line {raw!r}")
            kwargs[key] = value if key in ("strategy", "sourceTag") else int(value)
        return cls(**kwargs)

    def to_text(self) -> str:
        lines = []
        for f in fields(self):
            value = getattr(self, f.name)
            if value is not None:
                lines.append(f"{f.name}={value}")
        return "\n".join(lines) + "\n"


def _sizes_ok(c: Campaign, A) -> bool:
    return c.nMin <= len(A) <= c.nMax


def campaign_sets(c: Campaign, base: Iterable[tuple[int, ...]] = ()) -> Iterator[tuple[int, ...]]:
    """Stream the sets of a campaign; ``base`` feeds the Shift/Augment closures."""
    s = c.strategy
    if s == "ExhaustiveInterval":
        for k in range(c.nMin, min(c.nMax, c.N) + 1):
            yield from itertools.combinations(range(1, c.N + 1), k)
    elif s == "DiameterFamily":
        for A in enumerate_diameter_family(c.N, c.dilMax, c.shiftMax):
            if _sizes_ok(c, A):
                yield A
    elif s == "DivisorSubsets":
        for M in range(1, c.N + 1):
            divs = divisors(M)
            if len(divs) > MAX_DIVISOR_COUNT:
                continue
            for k in range(c.nMin, min(c.nMax, len(divs)) + 1):
                yield from itertools.combinations(divs, k)
    elif s == "RandomInterval":
        rng = SplitMix64(c.seed)
        for k in range(c.nMin, min(c.nMax, c.N) + 1):
            for _ in range(c.sampleCount):
                yield rng.sample(range(1, c.N + 1), k)
    elif s == "RandomDivisors":
        rng = SplitMix64(c.seed)
        for M in range(1, c.N + 1):
            divs = divisors(M)
            for k in range(c.nMin, min(c.nMax, len(divs)) + 1):
                for _ in range(c.sampleCount):
                    yield rng.sample(divs, k)
    elif s == "FriablePrefix":
        for p in primes_upto(c.y):
            if c.N:
                for fs in friable_prefixes_upto(p, c.N, c.nMin):
                    if fs.n > c.nMax:
                        break
                    yield fs.elements
            else:
                for k in range(c.nMin, c.nMax + 1):
                    yield friable_prefix(k, p).elements
    elif s == "Shift":
        for A in base:
            yield from shift_closure(A, c.shiftMax)
    elif s == "Augment":
        for A in base:
            for B in augment_closure(A, c.augmentMax):
                if _sizes_ok(c, B):
                    yield B


def group_blocks(sets: Iterable[tuple[int, ...]], chunk: int = 100_000) -> Iterator[np.ndarray]:
    """Batch an iterator of sets into equal-width arrays."""
    pending: dict[int, list] = {}
    for A in sets:
        bucket = pending.setdefault(len(A), [])
        bucket.append(A)
        if len(bucket) >= chunk:
            yield np.array(bucket, dtype=np.int64)
            bucket.clear()
    for width in sorted(pending):
        if pending[width]:
            yield np.array(pending[width], dtype=np.int64)


def campaign_blocks(c: Campaign, base: Iterable[tuple[int, ...]] = ()) -> Iterator[np.ndarray]:
    if c.strategy == "ExhaustiveInterval":
        for k in range(c.nMin, min(c.nMax, c.N) + 1):
            yield from interval_subset_blocks(c.N, k)
    elif c.strategy == "DivisorSubsets":
        for M in range(1, c.N + 1):
            if len(divisors(M)) <= MAX_DIVISOR_COUNT:
                yield from divisor_subset_blocks(M, range(c.nMin, c.nMax + 1))
    else:
        yield from group_blocks(campaign_sets(c, base))
