"""
A nonzero class killed by every Q_m
===================================

"""

from sqalg import get_presentation, milnor, quotient_basis
from sqalg.builtins import builtin_homs

n_alg = get_presentation("N")
bso3 = get_presentation("BSO3")
gb = quotient_basis(n_alg)
pi1 = builtin_homs()["Bpi1_N"]

# x = pi1(Q_1 w2) * w2''^2 * (w2'^2 + w2''^2)
x = pi1(milnor.q_derivation(1, bso3.gen("w2"), bso3)) * n_alg.parse("w2''^2*(w2'^2 + w2''^2)")
print("x       =", x, "(degree", x.degree(), ")")
print("NF(x)   =", gb.normal_form(x))

# Q_1 x vanishes before reduction; Q_m x for m >= 2 factors through w3'^4 w2''^2 (w2'^2 + w2''^2),
# which is zero in N.
tail = n_alg.parse("w3'^4*w2''^2*(w2'^2 + w2''^2)")
print("NF(w3'^4 w2''^2 (w2'^2 + w2''^2)) =", gb.normal_form(tail))
for m in range(1, 13):
    qx = milnor.q_derivation(m, x, n_alg)
    assert not gb.normal_form(qx)
    if m >= 2:
        assert qx == pi1(milnor.g_poly(m)) * tail
    print(f"Q_{m:<2d} x: {len(qx):3d} terms before reduction, 0 in N")

# Q_0 x is not zero, and nothing claims it should be.
print("Q_0 x   =", gb.normal_form(milnor.q_derivation(0, x, n_alg)))

# Without the weight-3 relation the cancellation fails.
m_alg = get_presentation("M")
print("Q_2 x in M =", quotient_basis(m_alg).normal_form(milnor.q_derivation(2, m_alg.parse(str(x)), m_alg)))
