"""Exact sumset / product-set sizes and structural classification of sets.

A set is represented as a sorted tuple of distinct positive ints.  The
vectorised helpers (:func:`spp_rows`) work on 2-D numpy arrays where each row
is one set, which is what the exhaustive searches use.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, NamedTuple

import numpy as np

ELEMENT_CAP = 2**31


class SppTriple(NamedTuple):
    n: int
    sum_size: int
    prod_size: int


@dataclass(frozen=True)
class Classification:
    is_ap: bool
    is_gp: bool
    is_sidon: bool
    is_mult_sidon: bool


def as_set(elements: Iterable[int]) -> tuple[int, ...]:
    """Validate and return ``elements`` as a strictly increasing tuple."""
    A = tuple(int(a) for a in elements)
    if not A:
        raise ValueError("set must be nonempty")
    for a, b in zip(A, A[1:]):
        if b <= a:
            raise ValueError(f"elements must be strictly increasing: {a} then {b}")
    if A[0] < 1:
        raise ValueError(f"elements must be positive, got {A[0]}")
    if A[-1] > ELEMENT_CAP:
        raise ValueError(f"element {A[-1]} exceeds the cap 2^31")
    return A


def parse_set(text: str) -> tuple[int, ...]:
    """Parse the space-separated literal form, e.g. ``"1 2 3 4 6 8 9 12"``."""
    try:
        return as_set(int(tok) for tok in text.split())
    except ValueError as exc:
        raise ValueError(f"bad set literal {text!r}: {exc}") from None


def format_set(A: Iterable[int]) -> str:
    return " ".join(str(a) for a in A)


def _distinct_count(values: list[int]) -> int:
    values.sort()
    count = 1
    for prev, cur in zip(values, values[1:]):
        if cur != prev:
            count += 1
    return count


def sumset_size(A) -> int:
    A = as_set(A)
    return _distinct_count([x + y for k, x in enumerate(A) for y in A[k:]])


def product_size(A) -> int:
    A = as_set(A)
    return _distinct_count([x * y for k, x in enumerate(A) for y in A[k:]])


def spp_of(A) -> SppTriple:
    A = as_set(A)
    return SppTriple(len(A), sumset_size(A), product_size(A))


def easy_range(n: int) -> tuple[int, int]:
    return 2 * n - 1, n * (n + 1) // 2


def is_ap(A) -> bool:
    A = as_set(A)
    if len(A) <= 2:
        return True
    d = A[1] - A[0]
    return all(a == A[0] + k * d for k, a in enumerate(A))


def is_gp(A) -> bool:
    A = as_set(A)
    if len(A) <= 2:
        return True
    ratio = Fraction(A[1], A[0])
    return all(Fraction(a) == A[0] * ratio**k for k, a in enumerate(A))


def classify(A) -> Classification:
    n, s, p = spp_of(A)
    top = n * (n + 1) // 2
    return Classification(is_ap(A), is_gp(A), s == top, p == top)


def canonicalize(A) -> tuple[int, ...]:
    """Divide out the gcd; both sizes are dilation invariant."""
    A = as_set(A)
    g = reduce(gcd, A)
    return tuple(a // g for a in A)


# -- vectorised kernels -------------------------------------------------------

_PAIR_INDEX: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _pairs(n: int):
    if n not in _PAIR_INDEX:
        _PAIR_INDEX[n] = np.triu_indices(n)
    return _PAIR_INDEX[n]


def _row_distinct(values: np.ndarray) -> np.ndarray:
    values.sort(axis=1)
    return 1 + np.count_nonzero(values[:, 1:] != values[:, :-1], axis=1)


def spp_rows(arr: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Sumset and product-set sizes for each row of ``arr`` (sorted rows).

    Rows must hold distinct positive integers; products are formed in int64,
    or int32 when that cannot overflow.
    """
    arr = np.asarray(arr)
    if arr.ndim != 2:
        raise ValueError("expected a 2-D array of sets")
    m, n = arr.shape
    if m == 0:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty.copy()
    top = int(arr.max())
    dtype = np.int32 if top * top < 2**31 else np.int64
    arr = arr.astype(dtype, copy=False)
    a, b = _pairs(n)
    sums = _row_distinct(arr[:, a] + arr[:, b])
    prods = _row_distinct(arr[:, a] * arr[:, b])
    return sums, prods


def row_gcd(arr: np.ndarray) -> np.ndarray:
    return np.gcd.reduce(np.asarray(arr, dtype=np.int64), axis=1)
