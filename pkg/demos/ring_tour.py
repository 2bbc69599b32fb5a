"""A tour of the Chow ring engine: Schubert classes, products, duality.

Run with:  python demos/ring_tour.py
"""

from schubert import GrassmannRing, dual_partition

G = GrassmannRing(1, 4)  # lines in P^4

print("G(1,4): dimension", G.dimension, "- Schubert basis by degree:")
for d in range(G.dimension + 1):
    print(f"  degree {d}: {G.basis(d)}")

# Products expand through Littlewood-Richardson coefficients, truncated
# to the 2x3 box.
s1 = G.sigma((1,))
print("\nhyperplane squared:            s(1)^2   =", s1 * s1)
print("lines-in-a-P3 class squared:   s(1,1)^2 =", G.sigma((1, 1)) ** 2)
print("a product that leaves the box:", G.sigma((3, 3)) * s1)

# The classical enumerative anchor: the top self-intersection of the
# hyperplane class is the degree under the Pluecker embedding.
print("\nintegral of s(1)^6 =", (s1**6).integrate(), " (Pluecker degree of G(1,4))")
print("degrees of G(1,n) for n = 2..6:", [GrassmannRing(1, n).plucker_degree() for n in range(2, 7)])

# Poincare duality: each basis class pairs to 1 with its box complement.
print("\nduality pairings on the degree-3 basis:")
for la in G.basis(3):
    for mu in G.basis(3):
        val = (G.sigma(la) * G.sigma(mu)).integrate()
        print(f"  int s{la} * s{mu} = {val}", "(dual)" if mu == dual_partition(G, la) else "")

# The incidence dictionary for lines: omega(i, j) is the class of lines
# contained in a j-plane and meeting an i-plane.
print("\nincidence classes on G(1,4):")
for i, j in ((2, 4), (1, 4), (2, 3), (0, 4), (1, 3), (1, 2)):
    print(f"  omega({i},{j}) = {G.omega(i, j)}")

# The identity behind restricting second Chern classes to a P^3 of lines
# through a point: the (1,1) class kills the P^3 cycle.
print("\ns(1,1) * omega(0,4) =", G.sigma((1, 1)) * G.omega(0, 4))
