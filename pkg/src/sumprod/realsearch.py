"""Sum-product pairs of positive reals in the two Freiman regimes.

Small sumset: a set with at most 3n-4 sums and a repeated product is, up to
dilation, a subset of ``a + {0, ..., 2n-3}`` for one of finitely many
rationals ``a``.  Clearing denominators turns every candidate into an integer
set, so the integer kernels decide them.

Small product set: the set is a dilate of a subset of ``{1, r, ..., r^(2n-4)}``
with ``r`` an irrational root in (1, 2) of a polynomial
``x^l + ... + x^(j-1) - (1 + ... + x^(k-1))``.  Those roots are handled as
exact algebraic numbers: a square-free integer polynomial plus an isolating
rational interval.  Equality of two polynomial expressions in ``r`` is
decided by a gcd with the defining polynomial; order by interval refinement.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterator, Sequence

import numpy as np

from . import polynomials as P
from .core import SppTriple, canonicalize, spp_rows
from .generators import combination_indices

MAX_BISECTIONS = 256


class AlgebraicNumber:
    """A real root of ``poly`` certified to be the only one in ``(lo, hi)``."""

    def __init__(self, poly, lo, hi):
        poly = P.square_free(tuple(poly))
        lo, hi = Fraction(lo), Fraction(hi)
        if P.degree(poly) < 1:
            raise ValueError("a defining polynomial needs positive degree")
        if not lo < hi:
            raise ValueError("empty isolating interval")
        if P.evaluate(poly, lo) == 0 or P.evaluate(poly, hi) == 0:
            raise ValueError("interval endpoints must not be roots")
        if P.count_roots(poly, lo, hi) != 1:
            raise ValueError(f"{P.to_string(poly)} does not have exactly one root in ({lo}, {hi})")
        self.poly = poly
        self.lo, self.hi = lo, hi
        self.initial = (lo, hi)
        self.exact: Fraction | None = None
        self._bisections = 0

    @classmethod
    def root_in(cls, poly, lo=1, hi=2) -> "AlgebraicNumber":
        return cls(poly, lo, hi)

    def __repr__(self):
        return f"AlgebraicNumber({P.to_string(self.poly)}, ({self.lo}, {self.hi}))"

    def __float__(self):
        self.refine(Fraction(1, 2**60))
        return float((self.lo + self.hi) / 2)

    def bisect(self) -> None:
        if self.exact is not None:
            return
        self._bisections += 1
        mid = (self.lo + self.hi) / 2
        s = P.sign_at(self.poly, mid)
        if s == 0:
            self.exact = self.lo = self.hi = mid
        elif s == P.sign_at(self.poly, self.lo):
            self.lo = mid
        else:
            self.hi = mid

    def refine(self, width: Fraction) -> None:
        while self.exact is None and self.hi - self.lo > width:
            self.bisect()

    def key(self) -> tuple:
        """Hashable identity: (defining polynomial, initial interval)."""
        return self.poly, self.initial


def alg_is_zero(q, r: AlgebraicNumber) -> bool:
    q = P.trim(q)
    if not q:
        return True
    if r.exact is not None:
        return P.evaluate(q, r.exact) == 0
    g = P.poly_gcd(q, r.poly)
    if P.degree(g) < 1:
        return False
    # g divides the square-free defining polynomial, so its roots are simple
    # and the only candidate in (lo, hi) is r itself
    return P.sign_at(g, r.lo) * P.sign_at(g, r.hi) < 0


def alg_compare(p, q, r: AlgebraicNumber) -> int:
    """Sign of p(r) - q(r): -1, 0 or 1."""
    d = P.sub(P.trim(p), P.trim(q))
    if alg_is_zero(d, r):
        return 0
    for _ in range(MAX_BISECTIONS + 1):
        a, b = P.interval_eval(d, r.lo, r.hi)
        if a > 0:
            return 1
        if b < 0:
            return -1
        r.bisect()
    raise RuntimeError("refinement limit reached although the difference is nonzero")


def _distinct_classes(polys: Sequence, r: AlgebraicNumber, width=Fraction(1, 2**64)) -> list[int]:
    """Label each polynomial by the class of its value at r."""
    r.refine(width)
    boxes = [P.interval_eval(p, r.lo, r.hi) for p in polys]
    order = sorted(range(len(polys)), key=lambda k: boxes[k][0])
    labels = [-1] * len(polys)
    next_label = 0
    cluster: list[int] = []
    reach = None

    def settle(members):
        nonlocal next_label
        reps: list[int] = []
        for k in members:
            for rep in reps:
                if alg_is_zero(P.sub(polys[k], polys[rep]), r):
                    labels[k] = labels[rep]
                    break
            else:
                labels[k] = next_label
                next_label += 1
                reps.append(k)

    for k in order:
        lo, hi = boxes[k]
        if cluster and lo > reach:
            settle(cluster)
            cluster = []
        if not cluster:
            reach = hi
        cluster.append(k)
        reach = max(reach, hi)
    if cluster:
        settle(cluster)
    return labels


@dataclass
class AlgebraicSet:
    ratio: AlgebraicNumber
    exponents: tuple[int, ...]

    def __post_init__(self):
        self.exponents = tuple(self.exponents)
        if not self.exponents or any(b <= a for a, b in zip(self.exponents, self.exponents[1:])):
            raise ValueError("exponents must be strictly increasing")
        if self.exponents[0] < 0:
            raise ValueError("exponents must be nonnegative")
        if self.ratio.initial[0] < 1 or alg_is_zero((-1, 1), self.ratio):
            raise ValueError("the ratio must exceed 1")


def alg_spp(S: AlgebraicSet) -> SppTriple:
    E = S.exponents
    pairs = [(a, b) for k, a in enumerate(E) for b in E[k:]]
    sums = [P.add(P.monomial(a), P.monomial(b)) for a, b in pairs]
    labels = _distinct_classes(sums, S.ratio)
    # r > 1, so r^s = r^t only when s = t
    prods = {a + b for a, b in pairs}
    return SppTriple(len(E), len(set(labels)), len(prods))


# -- small sumset ------------------------------------------------------------

def small_sumset_a_values(n: int) -> list[Fraction]:
    """The positive offsets (ij - kl)/(k + l - i - j), 0 <= i < k <= l < j <= 2n-4."""
    if n < 3:
        raise ValueError("n must be at least 3")
    m = 2 * n - 4
    values = set()
    for i in range(m + 1):
        for k in range(i + 1, m + 1):
            for l in range(k, m + 1):
                for j in range(l + 1, m + 1):
                    den = k + l - i - j
                    if den:
                        a = Fraction(i * j - k * l, den)
                        if a > 0:
                            values.add(a)
    return sorted(values)


def small_sumset_candidates(n: int) -> list[tuple[Fraction, ...]]:
    """Ambient progressions a + {0, ..., 2n-3}, one per offset a."""
    return [tuple(a + t for t in range(2 * n - 2)) for a in small_sumset_a_values(n)]


def _candidate_blocks(n: int) -> Iterator[np.ndarray]:
    idx = combination_indices(2 * n - 2, n).astype(np.int64)
    for a in small_sumset_a_values(n):
        base = a.numerator + a.denominator * np.arange(2 * n - 2, dtype=np.int64)
        yield base[idx]


def small_sumset_candidate_count(n: int) -> int:
    return sum(len(block) for block in _candidate_blocks(n))


def small_sumset_pairs(n: int) -> dict[tuple[int, int], tuple[int, ...]]:
    """Every pair with i <= 3n-4 reached by the candidate sets, with a witness.

    Witnesses are the gcd-primitive integer images with the smallest maximum
    (ties: lexicographically smallest).  For pairs with a repeated product this
    list is complete over the positive reals.
    """
    if not 3 <= n <= 10:
        raise ValueError("the search is only tractable for 3 <= n <= 10")
    best: dict[tuple[int, int], tuple[int, ...]] = {}
    for block in _candidate_blocks(n):
        sums, prods = spp_rows(block)
        for row in np.nonzero(sums <= 3 * n - 4)[0]:
            key = (int(sums[row]), int(prods[row]))
            A = canonicalize(block[row].tolist())
            old = best.get(key)
            if old is None or (A[-1], A) < (old[-1], old):
                best[key] = A
    return best


# -- small product set ---------------------------------------------------------

def family_polynomial(k: int, l: int, j: int) -> tuple:
    """sum_{d=l}^{j-1} x^d - sum_{d=0}^{k-1} x^d."""
    c = [0] * j
    for d in range(l, j):
        c[d] += 1
    for d in range(k):
        c[d] -= 1
    return P.trim(c)


def _strip_rational_and_cyclotomic(p):
    p = P.primitive(p)
    for root in P.rational_roots(p):
        lin = P.primitive((-root, 1))
        while P.degree(p) > 0 and not P.rem_q(p, lin):
            p = P.exact_quotient(p, lin)
    for m in range(2, 2 * max(P.degree(p), 1) + 1):
        cyc = P.trim([-1] + [0] * (m - 1) + [1])
        g = P.poly_gcd(p, cyc)
        while P.degree(g) > 0:
            p = P.exact_quotient(p, g)
            g = P.poly_gcd(p, cyc)
    return p


@dataclass
class _RootClass:
    ratio: AlgebraicNumber
    members: list = field(default_factory=list)


def ratio_roots(n: int, sum_cap: int | None = None) -> list[AlgebraicNumber]:
    """Distinct irrational ratios in (1, 2) from the family with j <= min(sumCap-n, 2n-4).

    Each returned number is defined by a reduced representative: the gcd of all
    family members sharing the root, with rational and cyclotomic factors
    divided out.  Sorted by value.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    if sum_cap is None:
        sum_cap = n * (n + 1) // 2 - 1
    top_j = min(sum_cap - n, 2 * n - 4)
    classes: list[_RootClass] = []
    for j in range(2, top_j + 1):
        for l in range(1, j):
            for k in range(1, l + 1):
                q = family_polynomial(k, l, j)
                # one sign change: a unique positive root, and q(2) > 0
                if P.evaluate(q, 1) >= 0:
                    continue
                for cls in classes:
                    if P.count_roots(P.poly_gcd(q, cls.members[0]), 1, 2) > 0:
                        cls.members.append(q)
                        break
                else:
                    classes.append(_RootClass(AlgebraicNumber.root_in(q, 1, 2), [q]))
    out = []
    for cls in classes:
        g = cls.members[0]
        for q in cls.members[1:]:
            g = P.poly_gcd(g, q)
        rep = _strip_rational_and_cyclotomic(g)
        if any(1 < x < 2 for x in P.rational_roots(rep)):
            continue
        out.append(AlgebraicNumber.root_in(rep, 1, 2))
    out.sort(key=lambda r: (float(r), r.poly))
    return out


def ratio_polynomials(n: int, sum_cap: int | None = None) -> list[tuple]:
    return [r.poly for r in ratio_roots(n, sum_cap)]


@dataclass(frozen=True)
class RealWitness:
    poly: tuple
    interval: tuple[Fraction, Fraction]
    exponents: tuple[int, ...]

    def ratio(self) -> AlgebraicNumber:
        return AlgebraicNumber(self.poly, *self.interval)

    def describe(self) -> str:
        coeffs = " ".join(str(c) for c in self.poly)
        return (f"poly=[{coeffs}] root in ({self.interval[0]},{self.interval[1]}) "
                f"exponents={{{','.join(map(str, self.exponents))}}}")


def real_gp_pairs(n: int) -> dict[tuple[int, int], RealWitness]:
    """Pairs of every n-subset (containing exponent 0) of {1, r, ..., r^(2n-4)}."""
    m = 2 * n - 4
    out: dict[tuple[int, int], RealWitness] = {}
    pairs = [(a, b) for a in range(m + 1) for b in range(a, m + 1)]
    pair_pos = {ab: k for k, ab in enumerate(pairs)}
    for r in ratio_roots(n):
        sums = [P.add(P.monomial(a), P.monomial(b)) for a, b in pairs]
        labels = _distinct_classes(sums, r)
        for rest in itertools.combinations(range(1, m + 1), n - 1):
            E = (0,) + rest
            sub = [(a, b) for k, a in enumerate(E) for b in E[k:]]
            i = len({labels[pair_pos[ab]] for ab in sub})
            j = len({a + b for a, b in sub})
            out.setdefault((i, j), RealWitness(r.poly, r.initial, E))
    return out


def spp_real_delta(n: int) -> dict[tuple[int, int], RealWitness]:
    """Pairs realised by positive reals but by no set of positive integers.

    Such a pair has at most 3n-4 products and a non-maximal sumset: the
    integer side of that region is empty by the Sidon exclusion zone, and the
    real side is exhausted by the geometric-progression search.
    """
    if not 3 <= n <= 6:
        raise ValueError("real deltas are computed for 3 <= n <= 6")
    top = n * (n + 1) // 2
    return {ij: w for ij, w in sorted(real_gp_pairs(n).items())
            if ij[1] <= 3 * n - 4 and ij[0] < top}


def rational_set_to_integers(elements: Sequence[Fraction]) -> tuple[int, ...]:
    den = lcm(*(Fraction(e).denominator for e in elements))
    return canonicalize([int(Fraction(e) * den) for e in elements])
