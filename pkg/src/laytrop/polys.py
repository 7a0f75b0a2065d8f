"""Sparse univariate layered polynomials.

Coefficients are stored as a map exponent -> LayeredScalar with no
BOTTOM entries; the empty map is the zero polynomial.  The essential and
full canonical forms are computed from the upper concave hull of the
points (exponent, coefficient value), entirely over Q by
cross-multiplication.  A polynomial carries a ``form`` tag ("essential",
"full" or None); consumers that require a form check the tag instead of
assuming it.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotFullForm
from .scalars import BOTTOM, ONE, LayeredScalar, ls_add, ls_mul, ls_pow, ls_sum
from .sorts import Sort


class LayeredPoly:
    """Immutable by convention; equality compares coefficients only."""

    __slots__ = ("coeffs", "form")

    def __init__(self, coeffs, form=None):
        clean = {}
        for exp, c in coeffs.items():
            if c is BOTTOM:
                continue
            if not isinstance(exp, int) or exp < 0:
                raise ValueError(f"exponent must be a non-negative integer, got {exp!r}")
            clean[exp] = c
        self.coeffs = dict(sorted(clean.items()))
        self.form = form

    def __eq__(self, other):
        if not isinstance(other, LayeredPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def __repr__(self):
        if self.is_zero:
            return "LayeredPoly(0)"
        terms = " + ".join(
            f"{coeff!r}*x^{exp}" for exp, coeff in sorted(self.coeffs.items(), reverse=True)
        )
        return f"LayeredPoly({terms})"

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if self.is_zero:
            raise ValueError("the zero polynomial has no degree")
        return max(self.coeffs)

    @property
    def min_exp(self) -> int:
        if self.is_zero:
            raise ValueError("the zero polynomial has no minimal exponent")
        return min(self.coeffs)

    def coeff(self, exp: int):
        """The coefficient at ``exp``, or BOTTOM when absent."""
        return self.coeffs.get(exp, BOTTOM)

    def terms(self):
        """(exponent, coefficient) pairs in ascending exponent order."""
        return list(self.coeffs.items())


def poly(coeffs, form=None) -> LayeredPoly:
    return LayeredPoly(coeffs, form)


def zero_poly() -> LayeredPoly:
    return LayeredPoly({})


def monomial(exp: int, coeff: LayeredScalar) -> LayeredPoly:
    return LayeredPoly({exp: coeff})


def p_add(f: LayeredPoly, g: LayeredPoly, sort: Sort) -> LayeredPoly:
    out = dict(f.coeffs)
    for exp, c in g.coeffs.items():
        out[exp] = ls_add(out[exp], c, sort) if exp in out else c
    return LayeredPoly(out)


def p_mul(f: LayeredPoly, g: LayeredPoly, sort: Sort) -> LayeredPoly:
    out = {}
    for e1, c1 in f.coeffs.items():
        for e2, c2 in g.coeffs.items():
            exp = e1 + e2
            prod = ls_mul(c1, c2, sort)
            out[exp] = ls_add(out[exp], prod, sort) if exp in out else prod
    return LayeredPoly(out)


def p_scale(f: LayeredPoly, c: LayeredScalar, sort: Sort) -> LayeredPoly:
    return LayeredPoly({exp: ls_mul(coeff, c, sort) for exp, coeff in f.coeffs.items()})


def p_pow(f: LayeredPoly, n: int, sort: Sort) -> LayeredPoly:
    out = monomial(0, ONE)
    for _ in range(n):
        out = p_mul(out, f, sort)
    return out


def p_eval(f: LayeredPoly, x: LayeredScalar, sort: Sort):
    """Evaluate f at x; the zero polynomial evaluates to BOTTOM."""
    return ls_sum(
        (ls_mul(c, ls_pow(x, exp, sort), sort) for exp, c in f.coeffs.items()), sort
    )


def _hull_classify(points):
    """Classify points of an upper concave envelope.

    ``points`` is a list of (x, y) with strictly increasing x, all exact
    Fractions.  Returns (vertices, status) where status[i] is one of
    "vertex", "edge" (on the envelope but not a corner) or "below".
    """
    n = len(points)
    if n <= 2:
        return list(points), ["vertex"] * n
    hull = []
    for p in points:
        while len(hull) >= 2:
            o, a = hull[-2], hull[-1]
            cross = (a[0] - o[0]) * (p[1] - o[1]) - (a[1] - o[1]) * (p[0] - o[0])
            if cross >= 0:  # a is not a strict corner of the cap
                hull.pop()
            else:
                break
        hull.append(p)
    status = []
    vi = 0
    for p in points:
        if vi + 1 < len(hull) and p[0] >= hull[vi + 1][0]:
            vi += 1
        if p == hull[vi]:
            status.append("vertex")
            continue
        o, a = hull[vi], hull[vi + 1]
        lhs = (p[1] - o[1]) * (a[0] - o[0])
        rhs = (a[1] - o[1]) * (p[0] - o[0])
        status.append("edge" if lhs == rhs else "below")
    return hull, status


def hull_vertices(f: LayeredPoly):
    """Exponents sitting at corners of the coefficient hull."""
    if f.is_zero:
        return set()
    pts = [(Fraction(exp), c.value) for exp, c in f.terms()]
    _, status = _hull_classify(pts)
    return {exp for (exp, _), st in zip(f.terms(), status) if st == "vertex"}


def essential_form(f: LayeredPoly) -> LayeredPoly:
    """Drop every monomial strictly below the coefficient hull.

    Monomials on the hull survive: corners are essential, edge-interior
    ones are quasi-essential and kept unless their layer is 0 (a 0-layer
    coefficient on an edge contributes nothing to the function).
    """
    if f.is_zero:
        return LayeredPoly({}, form="essential")
    pts = [(Fraction(exp), c.value) for exp, c in f.terms()]
    _, status = _hull_classify(pts)
    out = {}
    for (exp, c), st in zip(f.terms(), status):
        if st == "below":
            continue
        if st == "edge" and c.layer == 0:
            continue
        out[exp] = c
    return LayeredPoly(out, form="essential")


def full_form(f: LayeredPoly) -> LayeredPoly:
    """Insert the hull-interpolated 0-layer coefficient at every gap.

    The result has a coefficient at every exponent between the lowest
    and highest essential exponents; inserted ones carry layer 0 and the
    value interpolated linearly on the hull edge.
    """
    base = essential_form(f)
    if base.is_zero:
        return LayeredPoly({}, form="full")
    out = dict(base.coeffs)
    exps = sorted(base.coeffs)
    for lo, hi in zip(exps, exps[1:]):
        if hi == lo + 1:
            continue
        v_lo = base.coeffs[lo].value
        v_hi = base.coeffs[hi].value
        step = Fraction(v_hi - v_lo, hi - lo)
        for exp in range(lo + 1, hi):
            out[exp] = LayeredScalar(v_lo + step * (exp - lo), Fraction(0))
    return LayeredPoly(out, form="full")


def _require_full(f: LayeredPoly):
    if f.form != "full":
        raise NotFullForm("operation requires a polynomial flagged as full form")


def slopes(f: LayeredPoly):
    """Corner-root values of a full-form polynomial, grouped into runs.

    Returns [(slope, (start, end)), ...] where positions count down from
    the leading coefficient (position p is exponent degree - p) and the
    slope of positions (p, p+1) is the value difference
    value(exp d-p-1) - value(exp d-p).  Runs of constant slope are the
    homogeneous parts; the list starts at the top part, so the slopes
    weakly decrease along it.
    """
    _require_full(f)
    if f.is_zero or len(f.coeffs) == 1:
        return []
    exps = sorted(f.coeffs, reverse=True)
    values = [f.coeffs[e].value for e in exps]
    diffs = [values[i + 1] - values[i] for i in range(len(values) - 1)]
    runs = []
    start = 0
    for i in range(1, len(diffs)):
        if diffs[i] != diffs[start]:
            runs.append((diffs[start], (start, i)))
            start = i
    runs.append((diffs[start], (start, len(diffs))))
    return runs


def homogeneous_parts(f: LayeredPoly):
    """The coefficient slices of the slope runs, top part first.

    Neighbouring parts share their boundary monomial.  A monomial has
    no corner and yields [].
    """
    runs = slopes(f)
    deg = f.degree if not f.is_zero else 0
    parts = []
    for _, (start, end) in runs:
        part = {deg - p: f.coeffs[deg - p] for p in range(start, end + 1)}
        parts.append(LayeredPoly(part))
    return parts


def corner_roots(f: LayeredPoly):
    """(root value, multiplicity) pairs, largest root first.

    The multiplicity of a root is the length of its slope run in the
    full form, which is the degree of its primary factor.
    """
    return [(slope, end - start) for slope, (start, end) in slopes(full_form(f))]


def p_shift(f: LayeredPoly, u: int) -> LayeredPoly:
    """Multiply by x**u (u may be negative when every exponent allows it)."""
    return LayeredPoly({exp + u: c for exp, c in f.coeffs.items()})
