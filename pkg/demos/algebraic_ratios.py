"""Exact comparisons in Q(r) for the ratios behind the real-only pairs."""
from sumprod import polynomials as P
from sumprod.realsearch import AlgebraicNumber, AlgebraicSet, alg_compare, alg_spp, ratio_roots

phi = AlgebraicNumber.root_in(P.parse("x^2-x-1"))
print("phi^3 vs phi + 1:", alg_compare(P.parse("x^3"), P.parse("x+1"), phi))
print("phi^2 vs phi + 1:", alg_compare(P.parse("x^2"), P.parse("x+1"), phi))
print("{1, phi, phi^2, phi^3}:", tuple(alg_spp(AlgebraicSet(phi, (0, 1, 2, 3)))))

print()
print("candidate ratios for n = 5:")
for r in ratio_roots(5):
    print(f"  {float(r):.12f}  root of {P.to_string(r.poly)}")
