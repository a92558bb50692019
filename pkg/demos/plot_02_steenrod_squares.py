"""
Steenrod squares and the restriction to B(Z/2)^2
=================================================

"""

from sqalg import builtin_homs, get_presentation
from sqalg.steenrod import check_sq_equivariance

bso3 = get_presentation("BSO3")
p = bso3.parse

# The generator table; everything else follows from the Cartan formula.
for i, name in [(1, "w2"), (2, "w2"), (1, "w3"), (2, "w3"), (3, "w3")]:
    print(f"Sq^{i} {name} =", bso3.sq(i, p(name)))

print("Sq^2(w2^2) =", bso3.sq(2, p("w2^2")))
print("total Sq(w2 w3) =", bso3.total_sq(p("w2*w3")))

# On a line class the total square is s + s^2, so Sq^i s^k = binom(k, i) s^(k+i).
bz = get_presentation("BZ2xBZ2")
print("Sq^2 s1^3 =", bz.sq(2, bz.parse("s1^3")))

# Bi sends w2, w3 to the Dickson invariants and commutes with every Sq^i.
bi = builtin_homs()["Bi"]
print("Bi(w2) =", bi(p("w2")), "  Bi(w3) =", bi(p("w3")))
res = check_sq_equivariance(bi, max_degree=20)
print("Bi equivariant through degree 20:", res.ok, f"({res.checked} comparisons)")

# A corrupted table is caught at the generator that was changed.
broken = bso3.with_sq_entry("w2", 1, None)
from sqalg import RingHom

res = check_sq_equivariance(RingHom("Bi", broken, bz, bi.images, validate=False))
print("with Sq^1 w2 := 0:", res.failure)
