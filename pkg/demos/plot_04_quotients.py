"""
Groebner bases, normal forms and Poincare series
================================================

"""

from sqalg import get_presentation, quotient_basis
from sqalg.groebner import mult_injective, regular_sequence_check
from sqalg.series import series_coefficients

n_alg = get_presentation("N")
gb = quotient_basis(n_alg)

# Reduced Groebner basis of the two relations in grevlex order.
for g in gb.polys():
    print("  ", g)

# Standard monomials give a basis in every (degree, weight) slice.
print("N, degree 5, weight 1:", [n_alg.ring.format_monomial(m) for m in gb.standard_monomials(5, 1)])

# Dimensions against the closed-form series.
series = "(1-t^5)(1-t^9)/((1-t^2)^2(1-t^3)^2)"
dims = gb.dims_by_degree(20)
print("dims   ", dims)
print("series ", series_coefficients(series, 20))

# The relations form a regular sequence, and the weight-3 one is a
# non-zero-divisor already in M.
rels = list(n_alg.relations)
print("regular through degree 20:", regular_sequence_check(n_alg, rels, 20).ok)
m_alg = get_presentation("M")
print("injective on M through degree 20:", mult_injective(quotient_basis(m_alg), m_alg.parse(str(rels[1])), 20).ok)

# Multiplication by w3' has a kernel in N; the check returns a witness.
res = mult_injective(gb, n_alg.parse("w3'"), 12)
print("w3' on N:", res.failure)
