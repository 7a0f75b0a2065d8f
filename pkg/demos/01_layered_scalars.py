"""Layered scalars: values with ghost layers.

A scalar is a pair value:layer written <v>^l.  Values add under
multiplication (logarithmic notation) and the larger value wins under
addition -- except on ties, where the layers add up.  The layer
therefore counts "how many ways" the maximum was attained, which is the
whole point of the construction.
"""

from fractions import Fraction as F

import laytrop as lt

x = lt.scalar(5, 1)
y = lt.scalar(3, 7)
print("x =", x, " y =", y)
print("x * y =", lt.ls_mul(x, y, lt.NAT))
print("x + y =", lt.ls_add(x, y, lt.NAT), " (the nu-larger value wins)")
print("x + x =", lt.ls_add(x, x, lt.NAT), " (tie: layers add)")

# the same arithmetic under different sorting semirings
print()
for sort in (lt.UNIT, lt.SUPER, lt.truncated(3), lt.NAT, lt.POSQ):
    print(f"sort {str(sort):8}  x + x = {lt.ls_add(x, x, sort)}")

# ghosts and the surpassing relation
print()
g = lt.scalar(5, 4)
print(f"{g} is a 1-ghost under nat:", lt.is_ell_ghost(g, 1, lt.NAT))
print(f"{g} surpasses {x}:", lt.surpasses_L(g, x, lt.NAT))
print(f"{x} surpasses {g}:", lt.surpasses_L(x, g, lt.NAT))

# Frobenius: (x+y)^n surpasses x^n + y^n, and is always nu-equal to it
print()
n = 3
lhs = lt.ls_pow(lt.ls_add(x, y, lt.NAT), n, lt.NAT)
rhs = lt.ls_add(lt.ls_pow(x, n, lt.NAT), lt.ls_pow(y, n, lt.NAT), lt.NAT)
print(f"(x+y)^{n} = {lhs},  x^{n} + y^{n} = {rhs}")
print("surpasses:", lt.surpasses_L(lhs, rhs, lt.NAT))

# rational layer powers need the posq sort
print()
z = lt.scalar(2, 4)
print(f"{z} ** 1/2 over posq =", lt.ls_pow(z, F(1, 2), lt.POSQ))
