"""Characteristic classes and Riemann-Roch, in exact rational arithmetic.

Run with:  python demos/riemann_roch.py
"""

from fractions import Fraction

from schubert import (
    GrassmannRing,
    RankTwoData,
    euler_characteristic,
    euler_polynomial,
    line_bundle,
    rank_two_chern,
    tangent_bundle,
)

P3 = GrassmannRing(0, 3)
G = GrassmannRing(1, 4)

# Todd classes come out of exact truncated power series, never a lookup table.
print("td(P^3)    =", tangent_bundle(P3).todd())
print("td(G(1,4)) =", tangent_bundle(G).todd())

T = tangent_bundle(G)
print("\ntangent bundle of G(1,4): rank", T.rank, " c1 =", T.c[1])
print("Euler number: int c6(T) =", T.c[6].integrate())

# chi(O(k)) on G(1,4) -- a degree-6 integer-valued polynomial in k.
poly = euler_polynomial(line_bundle(G, 0))
print("\nchi(O(k)) on G(1,4) has coefficients", poly.coefficients)
print("values at k = -5..5:", [poly(k) for k in range(-5, 6)])

# Rank-two data (e, a, b) means c1 = e*s(1), c2 = a*s(2) + b*s(1,1).
taut = RankTwoData(-1, 0, 1)  # the tautological rank-two subbundle
print("\nchi of twists of the tautological bundle:",
      [euler_characteristic(rank_two_chern(G, taut.twisted(k))) for k in range(6)])

# The value that kills the heaviest filter survivor: chi(E(5)) for (-1,6,6).
heavy = RankTwoData(-1, 6, 6)
print("chi(E(5)) for data (-1,6,6):",
      euler_characteristic(rank_two_chern(G, heavy.twisted(5))))

# Integrality is what the candidate filter leans on: an Euler polynomial
# of fractional content flags impossible Chern data.
bogus = euler_polynomial(rank_two_chern(G, RankTwoData(0, 1, 0)))
print("\nchi values for the impossible data (0,1,0):",
      [bogus(k) for k in range(4)])
print("integer-valued?", bogus.is_integer_valued())

# Q-twists by rational amounts are allowed at the level of Chern data;
# they power the positivity filters.
shifted = RankTwoData(0, -6, -6).twisted(Fraction(5, 2))
print("\n(0,-6,-6) twisted by 5/2 ->", shifted, " (both coordinates land at 1/4)")
