"""Dense integer polynomials with exact real-root tools.

A polynomial is a tuple of ints, constant term first, with no trailing zeros
(the zero polynomial is ``()``).  Division happens over the rationals and
results are scaled back to primitive integer polynomials with a positive
leading coefficient, which keeps every sign used by Sturm sequences intact.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, isqrt
from typing import Sequence

Poly = tuple


def trim(coeffs: Sequence) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def degree(p: Poly) -> int:
    return len(p) - 1


def add(p: Poly, q: Poly) -> Poly:
    m = max(len(p), len(q))
    return trim((p[k] if k < len(p) else 0) + (q[k] if k < len(q) else 0) for k in range(m))


def neg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, neg(q))


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for a, x in enumerate(p):
        if x:
            for b, y in enumerate(q):
                out[a + b] += x * y
    return trim(out)


def monomial(e: int, c: int = 1) -> Poly:
    return trim([0] * e + [c])


def derivative(p: Poly) -> Poly:
    return trim(k * c for k, c in enumerate(p) if k)


def evaluate(p: Poly, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def sign_at(p: Poly, x) -> int:
    v = evaluate(p, x)
    return (v > 0) - (v < 0)


def primitive(p: Sequence) -> Poly:
    """Scale a rational polynomial to a primitive integer one, leading coefficient > 0."""
    p = trim(Fraction(c) for c in p)
    if not p:
        return ()
    den = reduce(lambda a, b: a * b // gcd(a, b), (c.denominator for c in p), 1)
    ints = [int(c * den) for c in p]
    g = reduce(gcd, ints)
    if ints[-1] < 0:
        g = -g
    return tuple(c // g for c in ints)


def divmod_q(p: Poly, q: Poly) -> tuple[tuple, tuple]:
    """Quotient and remainder over the rationals (Fraction coefficients)."""
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = [Fraction(c) for c in p]
    lead = Fraction(q[-1])
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    for shift in range(len(p) - len(q), -1, -1):
        c = rem[shift + len(q) - 1] / lead
        quot[shift] = c
        if c:
            for k, qc in enumerate(q):
                rem[shift + k] -= c * qc
    return trim(quot), trim(rem[:len(q) - 1])


def rem_q(p: Poly, q: Poly) -> tuple:
    return divmod_q(p, q)[1]


def exact_quotient(p: Poly, q: Poly) -> Poly:
    """p / q when q divides p, as a primitive integer polynomial."""
    quot, r = divmod_q(p, q)
    if r:
        raise ValueError("divisor does not divide exactly")
    return primitive(quot)


def poly_gcd(p: Poly, q: Poly) -> Poly:
    a, b = primitive(p), primitive(q)
    while b:
        a, b = b, primitive(rem_q(a, b))
    return a


def square_free(p: Poly) -> Poly:
    p = primitive(p)
    g = poly_gcd(p, derivative(p))
    return p if degree(g) < 1 else exact_quotient(p, g)


def sturm_sequence(p: Poly) -> list[Poly]:
    head = primitive(p)
    seq = [head, _positive_scale(derivative(head))]
    while seq[-1] and degree(seq[-1]) > 0:
        r = rem_q(seq[-2], seq[-1])
        if not r:
            break
        # positive rescaling keeps the sign pattern of -rem
        seq.append(_positive_scale(tuple(-c for c in r)))
    return [s for s in seq if s]


def _positive_scale(p: Sequence[Fraction]) -> Poly:
    prim = primitive(p)
    # primitive() may flip the sign; undo that so only a positive factor is applied
    if (prim[-1] > 0) != (p[-1] > 0):
        prim = neg(prim)
    return prim


def _variations(seq: list[Poly], x) -> int:
    signs = [s for s in (sign_at(p, x) for p in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(p: Poly, lo, hi) -> int:
    """Distinct real roots of p in the half-open interval (lo, hi]."""
    if not p or degree(p) < 1:
        return 0
    # the square-free part keeps a multiple root at an endpoint from zeroing the whole sequence
    seq = sturm_sequence(square_free(p))
    return _variations(seq, Fraction(lo)) - _variations(seq, Fraction(hi))


def _divisors(m: int) -> list[int]:
    m = abs(m)
    out = set()
    for d in range(1, isqrt(m) + 1):
        if m % d == 0:
            out.update((d, m // d))
    return sorted(out)


def rational_roots(p: Poly) -> list[Fraction]:
    """All rational roots, by the rational-root theorem."""
    p = primitive(p)
    if not p:
        raise ValueError("the zero polynomial has every root")
    roots = set()
    if p[0] == 0:
        roots.add(Fraction(0))
        k = next(k for k, c in enumerate(p) if c)
        p = p[k:]
    if degree(p) < 1:
        return sorted(roots)
    for num in _divisors(p[0]):
        for den in _divisors(p[-1]):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if evaluate(p, cand) == 0:
                    roots.add(cand)
    return sorted(roots)


def interval_eval(p: Poly, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Enclosure of p over [lo, hi] by interval Horner evaluation."""
    a = b = Fraction(0)
    for c in reversed(p):
        prods = (a * lo, a * hi, b * lo, b * hi)
        a, b = min(prods) + c, max(prods) + c
    return a, b


def to_string(p: Poly, var: str = "x") -> str:
    if not p:
        return "0"
    terms = []
    for e in range(len(p) - 1, -1, -1):
        c = p[e]
        if not c:
            continue
        mag = abs(c)
        body = var if e == 1 else f"{var}^{e}" if e else ""
        text = body if mag == 1 and e else f"{mag}{body}"
        terms.append(("-" if c < 0 else "+", text))
    head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    return head + "".join(f"{s}{t}" for s, t in terms[1:])


def parse(text: str, var: str = "x") -> Poly:
    """Parse forms like ``x^3-x-1`` or ``r^2 - r - 1`` (integer coefficients)."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    coeffs: dict[int, int] = {}
    k = 0
    while k < len(s):
        sign = -1 if s[k] == "-" else 1
        k += 1
        start = k
        while k < len(s) and s[k] not in "+-":
            k += 1
        term = s[start:k]
        if not term:
            raise ValueError(f"bad polynomial {text!r}")
        if var in term:
            c_txt, _, e_txt = term.partition(var)
            c_txt = c_txt.rstrip("*")
            c = int(c_txt) if c_txt else 1
            e = int(e_txt[1:]) if e_txt.startswith("^") else 1
            if e_txt and not e_txt.startswith("^"):
                raise ValueError(f"bad term {term!r}")
        else:
            c, e = int(term), 0
        coeffs[e] = coeffs.get(e, 0) + sign * c
    top = max(coeffs)
    return trim(coeffs.get(e, 0) for e in range(top + 1))
