"""Exclusion regions and conjecture checks on sum-product pairs.

Everything that can be decided in integers or rationals is; only the
golden-ratio check needs real arithmetic, and it uses interval evaluation
with rising precision so the verdict is certified.  Bloom's improvement of the
4/3 exponent (to 4/3 + 2/951) is not used anywhere here.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from mpmath import iv

from .core import SppTriple
from .normalize import NormalizedPair, nspp_point


def easy_bounds(n: int) -> tuple[int, int]:
    if n < 1:
        raise ValueError("n must be positive")
    return 2 * n - 1, n * (n + 1) // 2


def sez_excludes(n: int, i: int, j: int) -> bool:
    """True if no n-set of positive integers has the pair (i, j).

    A product set of at most 3n-4 elements forces a Sidon set, so every
    non-maximal sumset size is ruled out there.
    """
    return j <= 3 * n - 4 and i < n * (n + 1) // 2


def spp_count_upper(n: int) -> int:
    if n < 3:
        raise ValueError("the bound is stated for n >= 3")
    return (n * n - 3 * n + 4) ** 2 // 4 - (n - 2) ** 2 * (n - 1) // 2


def solymosi_holds(t: SppTriple) -> bool:
    n, i, j = t
    return i * i * j * (1 + (n.bit_length() - 1)) >= n**4


def in_solymosi_void(p: NormalizedPair) -> bool:
    if p.scheme != "K":
        raise ValueError("the void is drawn in K coordinates")
    return 2 * p.x + p.y <= 4


def chang_bound_holds(t: SppTriple, C) -> bool:
    """|A+A| >= 36^(-C) n^2 whenever |AA| < C n, compared exactly."""
    C = Fraction(C)
    if C <= 0:
        raise ValueError("C must be positive")
    n, i, j = t
    if j >= C * n:
        return True
    p, q = C.numerator, C.denominator
    # i >= 36^(-p/q) n^2  <=>  i^q 36^p >= n^(2q)
    return i**q * 36**p >= n ** (2 * q)


def conjecture_sv_holds(t: SppTriple, variant: str = "printed") -> bool:
    """|A+A| |AA|^2 >= n(n+1)/2 * c^2 with c = 2n+1 ("printed") or 2n-1 ("gp")."""
    n, i, j = t
    if variant == "printed":
        c = 2 * n + 1
    elif variant == "gp":
        c = 2 * n - 1
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return i * j * j >= n * (n + 1) // 2 * c * c


def golden_conjecture_holds(t: SppTriple) -> bool:
    n, i, j = t
    total = i + j
    if n == 1:
        return total >= 1
    # n^phi is transcendental for n >= 2, so the loop always separates
    saved = iv.prec
    try:
        prec = 64
        while True:
            iv.prec = prec
            phi = (1 + iv.sqrt(5)) / 2
            power = iv.exp(phi * iv.log(n))
            if total >= power.b:
                return True
            if total < power.a:
                return False
            prec *= 2
            if prec > 1 << 16:
                raise ArithmeticError("could not separate n^phi from an integer")
    finally:
        iv.prec = saved


def witness_max_bound(n: int) -> int:
    if n < 2:
        raise ValueError("n must be at least 2")
    return 2 ** ((3 * n - 4) // 2)


@dataclass(frozen=True)
class RegionVerdict:
    pair: SppTriple
    excluded_by_sez: bool
    in_solymosi_void: bool
    sv_as_printed: bool
    sv_variant: bool
    golden: bool


def verdict(t: SppTriple) -> RegionVerdict:
    t = SppTriple(*t)
    void = t.n >= 3 and in_solymosi_void(nspp_point(t, "K"))
    golden = golden_conjecture_holds(t) if t.n >= 2 else True
    return RegionVerdict(t, sez_excludes(*t), void, conjecture_sv_holds(t, "printed"),
                         conjecture_sv_holds(t, "gp"), golden)


VERDICT_HEADER = ["n", "i", "j", "sez", "void", "sv_as_printed", "sv_variant", "golden"]


def verdict_csv(triples: Iterable[SppTriple]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(VERDICT_HEADER)
    for t in sorted(triples):
        v = verdict(t)
        writer.writerow([*v.pair, *(int(b) for b in (v.excluded_by_sez, v.in_solymosi_void,
                                                     v.sv_as_printed, v.sv_variant, v.golden))])
    return out.getvalue()
