"""Logarithmic normalisations that map [2n-1, n(n+1)/2] onto [1, 2]."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .core import SppTriple

SCHEMES = ("K", "L", "K2", "K3")


@dataclass(frozen=True)
class NormalizedPair:
    n: int
    x: float
    y: float
    scheme: str


def _check_n(n: int) -> None:
    if n < 3:
        raise ValueError(f"normalisation needs n >= 3, got {n}")


def norm_L(n: int, x: float) -> float:
    _check_n(n)
    if x < 1:
        raise ValueError(f"L needs x >= 1, got {x}")
    return math.log(x) / math.log(n)


def k_coefficients(n: int) -> tuple[float, float]:
    """Slope and intercept of the affine correction added to log_n."""
    _check_n(n)
    ln = math.log(n)
    c = math.comb(n - 1, 2)
    top = n * (n + 1) / 2
    slope = math.log((4 * n - 2) / (n + 1)) / ln / c
    intercept = ((n * n - 7 * n + 4) / (n * n - 3 * n + 2)
                 + ((2 * n - 1) * math.log(top) - top * math.log(2 * n - 1)) / ln / c)
    return slope, intercept


def norm_K(n: int, x: float) -> float:
    _check_n(n)
    lo, hi = 2 * n - 1, n * (n + 1) // 2
    if not lo <= x <= hi:
        raise ValueError(f"K_{n} is defined on [{lo}, {hi}], got {x}")
    slope, intercept = k_coefficients(n)
    return math.log(x) / math.log(n) + slope * x + intercept


def norm_K2(n: int, x: float) -> float:
    _check_n(n)
    if 2 * x <= 3 * n:
        raise ValueError(f"K2_{n} needs x > {3 * n / 2}, got {x}")
    return math.log((2 * x - 3 * n) / (1 - 2 / n)) / math.log(n)


def norm_K3(n: int, x: float) -> float:
    _check_n(n)
    if x < 1:
        raise ValueError(f"K3 needs x >= 1, got {x}")
    num = math.log(n * (n + 1) * x / (2 * (1 - 2 * n) ** 2))
    return num / math.log(n * (n + 1) / (4 * n - 2))


_FUNCS = {"K": norm_K, "L": norm_L, "K2": norm_K2, "K3": norm_K3}


def normalize(n: int, x: float, scheme: str = "K") -> float:
    try:
        func = _FUNCS[scheme]
    except KeyError:
        raise ValueError(f"unknown scheme {scheme!r}; choose from {SCHEMES}") from None
    return func(n, x)


def nspp_point(t: SppTriple, scheme: str = "K") -> NormalizedPair:
    n, i, j = t
    return NormalizedPair(n, normalize(n, i, scheme), normalize(n, j, scheme), scheme)
