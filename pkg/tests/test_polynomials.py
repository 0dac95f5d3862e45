from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from sumprod import polynomials as P

x = sympy.Symbol("x")
coeffs = st.lists(st.integers(-6, 6), min_size=1, max_size=7).map(P.trim)


def to_sympy(p):
    return sympy.Poly(list(reversed(p)) or [0], x)


@settings(max_examples=150, deadline=None)
@given(coeffs, coeffs)
def test_arithmetic_matches_sympy(p, q):
    assert to_sympy(P.mul(p, q)) == to_sympy(p) * to_sympy(q)
    assert to_sympy(P.add(p, q)) == to_sympy(p) + to_sympy(q)


@settings(max_examples=150, deadline=None)
@given(coeffs, coeffs)
def test_gcd_matches_sympy(p, q):
    if not p or not q:
        return
    g = P.poly_gcd(p, q)
    ref = sympy.gcd(to_sympy(p), to_sympy(q))
    if ref.degree() <= 0:
        assert P.degree(g) == 0
    else:
        assert to_sympy(g) == ref.primitive()[1] * (1 if ref.LC() > 0 else -1) or \
            to_sympy(g).monic() == ref.monic()


@settings(max_examples=150, deadline=None)
@given(coeffs, st.integers(-3, 3), st.integers(1, 4))
def test_root_counts_match_sympy(p, lo, width):
    if P.degree(p) < 1:
        return
    hi = lo + width
    got = P.count_roots(p, lo, hi)
    roots = set(sympy.real_roots(to_sympy(p)))
    assert got == sum(1 for r in roots if lo < r <= hi)


@settings(max_examples=100, deadline=None)
@given(coeffs)
def test_rational_roots_match_sympy(p):
    if P.degree(p) < 1:
        return
    ref = sorted({Fraction(int(r.p), int(r.q)) for r in sympy.roots(to_sympy(p), filter="Q")})
    assert P.rational_roots(p) == ref


def test_square_free():
    p = P.mul(P.mul((-1, 1), (-1, 1)), (1, 0, 1))
    assert P.square_free(p) == P.mul((-1, 1), (1, 0, 1))


def test_sturm_with_negative_leading_input():
    p = (1, 1, 0, -1)  # -(x^3 - x - 1)
    assert P.count_roots(p, 1, 2) == 1
    assert P.count_roots(p, -10, 10) == 1


def test_interval_eval_encloses():
    p = P.parse("x^3-2x+1")
    lo, hi = Fraction(1, 3), Fraction(3, 2)
    a, b = P.interval_eval(p, lo, hi)
    for k in range(101):
        t = lo + (hi - lo) * k / 100
        assert a <= P.evaluate(p, t) <= b


def test_text_round_trip():
    for text in ("x^3-x-1", "2x^2+3", "-x", "x^4-x^2-1"):
        assert P.to_string(P.parse(text)) == text
    assert P.parse("r^2 - r - 1", "r") == (-1, -1, 1)
    with pytest.raises(ValueError):
        P.parse("")
