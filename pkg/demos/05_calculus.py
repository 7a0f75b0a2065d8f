"""Layered derivative, antiderivative and the discriminant.

The derivative multiplies each coefficient layer by its exponent.  The
discriminant res(f, f') of a separable tangible polynomial has a layer
depending only on the degree (3, 15, 105, 945 for m = 2..5), so the
discriminant layer detects multiple corner roots without finding roots.
"""

import laytrop as lt

f = lt.parse_poly("x^2 + 3:1*x + 5:1")
print("f  =", lt.format_poly(f))
print("f' =", lt.format_poly(lt.derivative(f, lt.NAT)))

# the antiderivative divides the layer; it may leave the naturals
g = lt.poly({1: lt.scalar(3, 2)})
print()
print("antiderivative of", lt.format_poly(g), "=",
      lt.format_poly(lt.antiderivative(g, lt.POSQ)))
try:
    lt.antiderivative(lt.poly({2: lt.scalar(3, 1)}), lt.NAT)
except lt.LayerNotDivisible as err:
    print("over nat:", err)

# discriminants: separable vs repeated roots
print()
sep = lt.p_mul(lt.parse_poly("x + 2:1"), lt.parse_poly("x + 1:1"), lt.POSQ)
double = lt.p_pow(lt.parse_poly("x + 2:1"), 2, lt.POSQ)
print("separable  ", lt.format_poly(sep), "-> disc", lt.discriminant(sep, lt.POSQ))
print("double root", lt.format_poly(double), "-> disc", lt.discriminant(double, lt.POSQ))
print("expected separable layers m=2..5:",
      [lt.separable_sort(m) for m in range(2, 6)])
print("is_separable(sep):   ", lt.is_separable(sep, lt.POSQ))
print("is_separable(double):", lt.is_separable(double, lt.POSQ))

# the layer is the same for any choice of distinct roots
print()
for roots in [(1, 4, 9), (2, 30, 77)]:
    h = lt.monomial(0, lt.ONE)
    for r in roots:
        h = lt.p_mul(h, lt.poly({1: lt.ONE, 0: lt.scalar(r, 1)}), lt.POSQ)
    print(f"roots {roots}: disc layer", lt.discriminant(h, lt.POSQ).layer)
