"""Primary decomposition and the transfer to classical polynomials.

Every polynomial splits (uniquely up to nu-value) into primary factors
with strictly decreasing roots.  A primary factor's coefficient layers
form a classical polynomial over Q whose root multiplicities recover
layered linear divisibility.
"""

from fractions import Fraction as F

import laytrop as lt

f = lt.parse_poly("x^2 + 2:1*x + 3:1")
d = lt.primary_decomposition(f, lt.POSQ)
print("f =", lt.format_poly(f))
print("unit:", d.unit)
for pf in d.factors:
    print(f"  root {pf.root_value}, degree {pf.degree}: {lt.format_poly(pf.poly)}")
print("reconstruction:", lt.format_poly(d.product(lt.POSQ)))

# a ghost middle coefficient forces a fractional factor layer
print()
g = lt.poly({2: lt.ONE, 1: lt.scalar(3, 2), 0: lt.scalar(4, 1)})
d = lt.primary_decomposition(g, lt.POSQ)
print("g =", lt.format_poly(g))
for pf in d.factors:
    print(f"  root {pf.root_value}: {lt.format_poly(pf.poly)}")

# strictly convex polynomials split into linear factors directly
print()
factors = lt.separable_factor(f, lt.POSQ)
print("separable factors of f:", [lt.format_poly(h) for h in factors])

# psi reads off the layers; multiplicity comes from synthetic division
print()
double = lt.p_pow(lt.parse_poly("x + 2:1"), 2, lt.POSQ)
print("(x + <2>)^2 =", lt.format_poly(double))
print("psi =", lt.psi_a(double), "(classical coefficients, ascending)")
print("multiplicity of (x + <2>^1):", lt.linear_multiplicity(double, 1))

# the closed-form evaluation layer agrees with direct evaluation
print()
d = lt.primary_decomposition(double, lt.POSQ)
for v in (1, 2, 3):
    b = lt.scalar(v, 1)
    closed = lt.eval_sort(d, b, lt.POSQ)
    direct = lt.p_eval(lt.full_form(double), b, lt.POSQ)
    print(f"  at {b}: closed-form layer {closed}, direct {direct}")
