"""
Graded polynomials over GF(2)
=============================

"""

# A ring is a list of generators with a cohomological degree and a weight.
from sqalg import Generator, PolyRing

ring = PolyRing([Generator("w2'", 2, 0), Generator("w2''", 2, 0),
                 Generator("w3'", 3, 1), Generator("w3''", 3, 1)])

# Apostrophes are part of generator names; coefficients live in GF(2).
x = ring.parse("w2'^3*w2''^2*w3' + w2'*w2''^4*w3'")
print(x, "| degree", x.degree(), "| weights", sorted(x.weight_components()))
print("x + x =", x + x)
print("(w2' + w3')^2 =", ring.parse("(w2' + w3')^2"))

# Printing is canonical (grevlex by degree, declared generator order), so
# printed text always parses back to the same polynomial.
assert ring.parse(str(x)) == x

# Exact division by a monomial.
print(ring.parse("w2'^4*w3'^2 + w3'^4").divide_exact(ring.parse("w3'^2")))

# Monomial bases of a graded slice.
print([ring.format_monomial(m) for m in ring.monomials(8, weight=2)])
