"""Univariate polynomials and their canonical forms.

The essential form drops every monomial strictly below the upper
concave hull of the coefficient values; the full form fills every gap
with the hull-interpolated value at layer 0.  Both are equal to the
original as functions, which the demo spot-checks.
"""

import laytrop as lt

f = lt.parse_poly("x^2 + 1:1*x + 3:1")
print("f            =", lt.format_poly(f))
print("essential(f) =", lt.format_poly(lt.essential_form(f)))
print("full(f)      =", lt.format_poly(lt.full_form(f)))

for v, l in [(0, 1), (1, 1), (2, 2), (5, 1)]:
    x = lt.scalar(v, l)
    print(
        f"  f({x}) = {lt.p_eval(f, x, lt.NAT)}"
        f"   essential gives {lt.p_eval(lt.essential_form(f), x, lt.NAT)}"
    )

# slopes and homogeneous parts of a degree-4 example with two runs
print()
g = lt.poly(
    {
        4: lt.ONE,
        3: lt.scalar(2, 3),
        2: lt.scalar(4, 2),
        1: lt.scalar(5, 5),
        0: lt.scalar(6, 1),
    }
)
full = lt.full_form(g)
print("g =", lt.format_poly(g))
print("slopes (corner roots with position runs):", lt.slopes(full))
for part in lt.homogeneous_parts(full):
    print("  part:", lt.format_poly(part))
print("corner roots with multiplicities:", lt.corner_roots(g))

# evaluating at a corner root raises the layer; m-fold roots give 2^m
print()
for m in (1, 2, 3):
    h = lt.p_pow(lt.parse_poly("x + 2:1"), m, lt.NAT)
    print(f"(x + <2>)^{m} at <2>^1 ->", lt.p_eval(h, lt.scalar(2, 1), lt.NAT))
