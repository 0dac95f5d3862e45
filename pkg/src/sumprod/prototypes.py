"""Prototypes of order n and the types of addition tables they realise.

A prototype ranks the pairs (i, j), 1 <= i <= j <= n, so that rank(i, j) is
below both rank(i+1, j) and rank(i, j+1).  Pairs are kept in row-major order
(1,1), (1,2), ..., (1,n), (2,2), ...; the text form writes one row per i,
rows separated by ``;``, e.g. ``0 1 2;2 3;4`` for {1, 2, 3}.

Realisability is decided with exact rationals: fix a_1 = 0, impose the ties as
equalities and each step between consecutive rank classes as a gap of at
least 1 (the system is invariant under positive scaling), then run
Fourier-Motzkin elimination and back-substitute a witness.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator, Sequence

MAX_ORDER = 7


@lru_cache(maxsize=None)
def pair_list(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i in range(1, n + 1) for j in range(i, n + 1))


@lru_cache(maxsize=None)
def _predecessor_masks(n: int) -> tuple[int, ...]:
    index = {p: k for k, p in enumerate(pair_list(n))}
    masks = []
    for i, j in pair_list(n):
        mask = 0
        if i > 1:
            mask |= 1 << index[(i - 1, j)]
        if j - 1 >= i:
            mask |= 1 << index[(i, j - 1)]
        masks.append(mask)
    return tuple(masks)


@dataclass(frozen=True)
class Prototype:
    n: int
    ranks: tuple[int, ...]

    def __post_init__(self):
        pairs = pair_list(self.n)
        if len(self.ranks) != len(pairs):
            raise ValueError(f"order {self.n} needs {len(pairs)} ranks, got {len(self.ranks)}")
        if sorted(set(self.ranks)) != list(range(max(self.ranks) + 1)):
            raise ValueError("ranks must be contiguous from 0")
        rank = dict(zip(pairs, self.ranks))
        for (i, j), r in rank.items():
            if i + 1 <= j and rank[(i + 1, j)] <= r:
                raise ValueError(f"rank({i},{j}) must be below rank({i + 1},{j})")
            if j + 1 <= self.n and rank[(i, j + 1)] <= r:
                raise ValueError(f"rank({i},{j}) must be below rank({i},{j + 1})")

    def rank_of(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        return self.ranks[pair_list(self.n).index((i, j))]

    def classes(self) -> list[list[tuple[int, int]]]:
        out: list[list[tuple[int, int]]] = [[] for _ in range(max(self.ranks) + 1)]
        for pair, r in zip(pair_list(self.n), self.ranks):
            out[r].append(pair)
        return out

    def to_text(self) -> str:
        rows, k = [], 0
        for i in range(1, self.n + 1):
            width = self.n - i + 1
            rows.append(" ".join(map(str, self.ranks[k:k + width])))
            k += width
        return ";".join(rows)

    @classmethod
    def from_text(cls, text: str) -> "Prototype":
        rows = [row.split() for row in text.strip().split(";")]
        return cls(len(rows), tuple(int(v) for row in rows for v in row))


def _dense_ranks(values: Sequence) -> tuple[int, ...]:
    order = {v: r for r, v in enumerate(sorted(set(values)))}
    return tuple(order[v] for v in values)


def addition_type(A: Sequence) -> Prototype:
    """The prototype induced by a_i + a_j for an increasing sequence of reals."""
    A = list(A)
    if any(b <= a for a, b in zip(A, A[1:])):
        raise ValueError("elements must be strictly increasing")
    n = len(A)
    return Prototype(n, _dense_ranks([A[i - 1] + A[j - 1] for i, j in pair_list(n)]))


def multiplication_type(A: Sequence) -> Prototype:
    A = list(A)
    if any(b <= a for a, b in zip(A, A[1:])) or A[0] <= 0:
        raise ValueError("elements must be positive and strictly increasing")
    n = len(A)
    return Prototype(n, _dense_ranks([A[i - 1] * A[j - 1] for i, j in pair_list(n)]))


# -- enumeration --------------------------------------------------------------

def _check_order(n: int) -> None:
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"order must lie in 1..{MAX_ORDER}, got {n}")


def _submasks(mask: int) -> list[tuple[int, tuple[int, ...]]]:
    out = []
    s = mask
    while s:
        out.append((s, tuple(b for b in range(s.bit_length()) if s >> b & 1)))
        s = (s - 1) & mask
    return out


def iter_prototype_ranks(n: int) -> Iterator[tuple[int, ...]]:
    """Rank tuples of every prototype of order n, each exactly once.

    Rank classes are laid down one at a time; each class is a nonempty set of
    pairs whose predecessors are all placed, so no invalid order is built.
    """
    _check_order(n)
    preds = _predecessor_masks(n)
    m = len(preds)
    full = (1 << m) - 1
    ranks = [0] * m
    choices: dict[int, list] = {}

    def options(placed: int):
        opts = choices.get(placed)
        if opts is None:
            ready = 0
            for k in range(m):
                if not placed >> k & 1 and preds[k] & placed == preds[k]:
                    ready |= 1 << k
            opts = choices[placed] = _submasks(ready)
        return opts

    stack = [(0, 0, iter(options(0)))]
    while stack:
        placed, rank, it = stack[-1]
        step = next(it, None)
        if step is None:
            stack.pop()
            continue
        s, bits = step
        for b in bits:
            ranks[b] = rank
        new = placed | s
        if new == full:
            yield tuple(ranks)
        else:
            stack.append((new, rank + 1, iter(options(new))))


def iter_prototypes(n: int) -> Iterator[Prototype]:
    for ranks in iter_prototype_ranks(n):
        yield Prototype(n, ranks)


def enumerate_prototypes(n: int, sink: Callable[[tuple[int, ...]], object] | None = None) -> int:
    """Stream rank tuples to ``sink`` (if given) and return how many there are."""
    count = 0
    for ranks in iter_prototype_ranks(n):
        if sink is not None:
            sink(ranks)
        count += 1
    return count


def count_prototypes(n: int) -> int:
    """Number of prototypes, by dynamic programming over placed downsets."""
    _check_order(n)
    preds = _predecessor_masks(n)
    m = len(preds)
    full = (1 << m) - 1

    @lru_cache(maxsize=None)
    def ways(placed: int) -> int:
        if placed == full:
            return 1
        ready = 0
        for k in range(m):
            if not placed >> k & 1 and preds[k] & placed == preds[k]:
                ready |= 1 << k
        total = 0
        s = ready
        while s:
            total += ways(placed | s)
            s = (s - 1) & ready
        return total

    return ways(0)


# -- realisability --------------------------------------------------------------

Row = tuple[tuple[Fraction, ...], Fraction]  # coeffs . x >= const


def _pair_vector(i: int, j: int, nvars: int) -> list[Fraction]:
    v = [Fraction(0)] * nvars
    for k in (i, j):
        if k > 1:
            v[k - 2] += 1
    return v


def _normalize(coeffs, const) -> Row | None:
    lead = next((c for c in coeffs if c), None)
    if lead is None:
        return None
    scale = abs(lead)
    return tuple(c / scale for c in coeffs), const / scale


def _add_row(rows: dict, coeffs, const) -> bool:
    """Insert a row, keeping the tightest constant; False if trivially infeasible."""
    norm = _normalize(coeffs, const)
    if norm is None:
        return const <= 0
    c, d = norm
    if c not in rows or rows[c] < d:
        rows[c] = d
    return True


def _fourier_motzkin(rows: dict, nvars: int):
    """Eliminate every variable; returns per-stage rows for back-substitution or None."""
    stages = []
    current = rows
    for v in range(nvars):
        stages.append(current)
        pos, neg, nxt = [], [], {}
        for c, d in current.items():
            if c[v] > 0:
                pos.append((c, d))
            elif c[v] < 0:
                neg.append((c, d))
            elif not _add_row(nxt, c, d):
                return None
        for cp, dp in pos:
            for cn, dn in neg:
                sp, sn = 1 / cp[v], 1 / -cn[v]
                coeffs = tuple(a * sp + b * sn for a, b in zip(cp, cn))
                if not _add_row(nxt, coeffs, dp * sp + dn * sn):
                    return None
        current = nxt
    if any(d > 0 for d in current.values()):
        return None
    return stages


def _solve_equalities(eqs: list[list[Fraction]], nvars: int):
    """Reduced row echelon form of homogeneous equalities: pivot -> expression."""
    pivots: dict[int, list[Fraction]] = {}
    for eq in eqs:
        eq = list(eq)
        for p, expr in pivots.items():
            if eq[p]:
                f = eq[p]
                eq = [a - f * b for a, b in zip(eq, expr)]
        piv = next((k for k in range(nvars) if eq[k]), None)
        if piv is None:
            continue
        f = eq[piv]
        expr = [a / f for a in eq]
        for p in pivots:
            g = pivots[p][piv]
            if g:
                pivots[p] = [a - g * b for a, b in zip(pivots[p], expr)]
        pivots[piv] = expr
    return pivots


def is_realizable(p: Prototype) -> tuple[bool, tuple[Fraction, ...] | None]:
    """Decide whether some a_1 < ... < a_n induces ``p``; return a rational witness."""
    n = p.n
    if n == 1:
        return True, (Fraction(0),)
    nvars = n - 1
    classes = p.classes()
    eqs = []
    for cls in classes:
        first = _pair_vector(*cls[0], nvars)
        for pair in cls[1:]:
            eqs.append([a - b for a, b in zip(_pair_vector(*pair, nvars), first)])
    pivots = _solve_equalities(eqs, nvars)
    free = [k for k in range(nvars) if k not in pivots]

    def reduce(vec):
        out = list(vec)
        for piv, expr in pivots.items():
            f = out[piv]
            if f:
                # x_piv = -sum_{k != piv} expr[k] x_k
                out = [a - f * b for a, b in zip(out, expr)]
        return [out[k] for k in free]

    rows: dict = {}
    for lower, upper in zip(classes, classes[1:]):
        diff = [a - b for a, b in zip(_pair_vector(*upper[0], nvars), _pair_vector(*lower[0], nvars))]
        if not _add_row(rows, tuple(reduce(diff)), Fraction(1)):
            return False, None
    stages = _fourier_motzkin(rows, len(free))
    if stages is None:
        return False, None
    values = [Fraction(0)] * len(free)
    for v in range(len(free) - 1, -1, -1):
        lo, hi = None, None
        for c, d in stages[v].items():
            if not c[v]:
                continue
            rest = sum(c[k] * values[k] for k in range(v + 1, len(free)))
            bound = (d - rest) / c[v]
            if c[v] > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        values[v] = lo if lo is not None else hi if hi is not None else Fraction(0)
    x = [Fraction(0)] * nvars
    for k, val in zip(free, values):
        x[k] = val
    for piv, expr in pivots.items():
        x[piv] = -sum(expr[k] * x[k] for k in range(nvars) if k != piv)
    witness = (Fraction(0), *x)
    if addition_type(witness) != p:
        raise AssertionError(f"witness {witness} does not realise {p.to_text()}")
    return True, witness


def count_types(n: int) -> int:
    """Number of prototypes of order n realised by some set of reals."""
    return sum(1 for proto in iter_prototypes(n) if is_realizable(proto)[0])
