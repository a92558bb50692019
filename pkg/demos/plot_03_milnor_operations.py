"""
Milnor operations Q_m on BSO(3)
===============================

"""

from sqalg import milnor
from sqalg.builtins import get_presentation

bso3 = get_presentation("BSO3")
w2, w3 = bso3.gen("w2"), bso3.gen("w3")

# Q_0 = Sq^1 and Q_m = [Sq^(2^m), Q_(m-1)]; the recursion and the derivation
# built from generator values agree.
for m in range(4):
    a = milnor.q_recursive(m, w2, bso3)
    b = milnor.q_derivation(m, w2, bso3)
    assert a == b
    print(f"Q_{m} w2 =", a)

print("Q_0 Q_1 w2 =", milnor.q_derivation(0, milnor.q_derivation(1, w2, bso3), bso3))

# Q_m x = f_{m,1} Q_1 x + f_{m,0} Q_0 x, with (f_{m,1}, f_{m,0}) the top row of a
# product of 2x2 matrices over GF(2)[w2^2, w3^2].
for m in (2, 3, 4):
    f1, f0 = milnor.f_polys(m)
    print(f"f_{m},1 = {f1}    f_{m},0 = {f0}    g_{m} = {milnor.g_poly(m)}")

# Q_m Q_1 w2 = g_m w3^4, far beyond the hand-computed range.
for m in range(2, 11):
    lhs = milnor.q_derivation(m, milnor.q_derivation(1, w2, bso3), bso3)
    assert lhs == milnor.g_poly(m) * w3 ** 4
print("Q_m Q_1 w2 = g_m w3^4 for 2 <= m <= 10; g_10 has", len(milnor.g_poly(10)), "terms")

# Over B(Z/2)^2 the operator D_m vanishes identically.
bz = get_presentation("BZ2xBZ2")
x = bz.parse("s1^5*s2^3 + s1*s2^7")
print("D_5(x) =", milnor.d_operator(5, x, bz))
