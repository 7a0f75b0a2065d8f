"""Primary polynomials, primary decomposition and the classical transfer.

A monic polynomial is a-primary when every coefficient value fits the
line value(alpha_j) = (deg - j) * a; equivalently all its corner roots
are nu-equivalent to a.  Any polynomial factors uniquely (up to
nu-value) as unit * f_{a_1} ... f_{a_d} with strictly decreasing roots;
the factors are split off bottom-part-first.  The map psi_a reads off
the coefficient layers of an a-primary polynomial as a classical
polynomial over Q, which carries multiplicity information.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import sorts
from .errors import NotMonic, NotPrimary, NotSeparable, PreconditionViolated
from .polys import LayeredPoly, full_form, monomial, p_mul, p_shift, poly
from .scalars import ONE, LayeredScalar, ls_mul, s
from .sorts import NAT, POSQ, RAT, Sort, layer_valid


@dataclass(frozen=True)
class PrimaryFactor:
    root_value: Fraction
    poly: LayeredPoly
    degree: int


@dataclass(frozen=True)
class PrimaryDecomposition:
    unit: LayeredScalar
    factors: tuple  # PrimaryFactor, strictly decreasing root_value
    lambda_power: int = 0
    promoted_sort: bool = False

    def product(self, sort: Sort, include_lambda: bool = True) -> LayeredPoly:
        out = monomial(0, self.unit)
        for factor in self.factors:
            out = p_mul(out, factor.poly, sort)
        if include_lambda and self.lambda_power:
            out = p_shift(out, self.lambda_power)
        return out


def is_primary(f: LayeredPoly):
    """The common root value when f is primary, else None.

    Requires a monic input (leading value 0); polynomials divisible by
    the variable or reduced to a single monomial are never primary.
    """
    if f.is_zero:
        return None
    t = f.degree
    lead = f.coeffs[t]
    if lead.value != 0:
        raise NotMonic("is_primary needs a monic polynomial (leading value 0)")
    if t == 0 or f.min_exp != 0:
        return None
    a = Fraction(f.coeffs[0].value, t)
    for exp, c in f.terms():
        if c.value != (t - exp) * a:
            return None
    return a


def _layer_quotient(k, l, sort: Sort):
    return sorts.layer_div(k, l, sort)


def primary_decomposition(f: LayeredPoly, sort: Sort) -> PrimaryDecomposition:
    """Split f into a unit, a power of the variable and primary factors.

    Needs divisible layers; under the Naturals sort the computation is
    promoted to positive rationals and the result flagged accordingly.
    The factor list is ordered by strictly decreasing root value, and the
    reconstruction product is checked against the full form before
    returning.
    """
    if f.is_zero:
        raise PreconditionViolated("cannot decompose the zero polynomial")
    work_sort = POSQ if sort == NAT else sort
    u = f.min_exp
    base = p_shift(f, -u) if u else f
    lead = base.coeffs[base.degree]
    inv_lead = LayeredScalar(-lead.value, _layer_quotient(Fraction(1), lead.layer, work_sort))
    monic = full_form(poly({e: ls_mul(c, inv_lead, work_sort) for e, c in base.terms()}))

    factors = []
    rest = monic
    while rest.degree > 0:
        exps = sorted(rest.coeffs)
        lo = exps[0]
        values = [rest.coeffs[e].value for e in exps]
        slope0 = values[0] - values[1]
        j = 1
        while j + 1 < len(exps) and values[j] - values[j + 1] == slope0:
            j += 1
        pivot = rest.coeffs[exps[j]]
        factor_coeffs = {}
        for e in exps[: j + 1]:
            c = rest.coeffs[e]
            factor_coeffs[e - lo] = LayeredScalar(
                c.value - pivot.value, _layer_quotient(c.layer, pivot.layer, work_sort)
            )
        fpoly = LayeredPoly(factor_coeffs, form="full")
        degree = exps[j] - lo
        root = Fraction(values[0] - values[j], degree)
        factors.append(PrimaryFactor(root, fpoly, degree))
        rest = LayeredPoly(
            {e - exps[j]: rest.coeffs[e] for e in exps[j:]}, form="full"
        )

    factors.reverse()
    promoted = False
    if sort == NAT:
        layers = [lead.layer] + [
            c.layer for factor in factors for c in factor.poly.coeffs.values()
        ]
        promoted = not all(layer_valid(l, NAT, allow_zero=True) for l in layers)
    decomp = PrimaryDecomposition(lead, tuple(factors), u, promoted)
    if decomp.product(work_sort, include_lambda=False) != full_form(base):
        raise AssertionError("primary decomposition failed its reconstruction check")
    return decomp


def separable_factor(f: LayeredPoly, sort: Sort):
    """Linear factors of a strictly convex monic polynomial.

    Returns [x + <beta_i>^{k_i}, ...] with the largest root first, where
    beta_i is the value difference of consecutive coefficients and k_i
    the layer ratio.  Raises NotSeparable when any slope repeats (a
    multiple corner root) or an interior coefficient survives on a hull
    edge.
    """
    from .polys import essential_form

    if f.is_zero:
        raise NotSeparable("the zero polynomial has no linear factorization")
    if f.coeffs[f.degree].value != 0:
        raise NotMonic("separable_factor needs a monic polynomial")
    ess = essential_form(f)
    t = ess.degree
    if ess.min_exp != 0:
        raise NotSeparable("divisible by the variable; no linear factorization over R")
    exps = sorted(ess.coeffs)
    if exps != list(range(t + 1)):
        raise NotSeparable("slope runs longer than 1: repeated corner root")
    values = [ess.coeffs[e].value for e in exps]
    diffs = [values[i] - values[i + 1] for i in range(len(values) - 1)]
    if any(d2 <= d1 for d1, d2 in zip(diffs, diffs[1:])):
        raise NotSeparable("slope runs longer than 1: repeated corner root")
    out = []
    for i in range(len(exps) - 1, 0, -1):
        hi, lo = ess.coeffs[exps[i]], ess.coeffs[exps[i - 1]]
        beta = lo.value - hi.value
        k = _layer_quotient(lo.layer, hi.layer, POSQ if sort == NAT else sort)
        out.append(poly({1: ONE, 0: LayeredScalar(beta, k)}))
    return out


def _as_poly(f):
    return f.poly if isinstance(f, PrimaryFactor) else f


def psi_a(f):
    """Coefficient layers of a primary polynomial, as a classical poly.

    Returns the dense ascending coefficient list over Q; absent
    monomials contribute 0.
    """
    p = _as_poly(f)
    if is_primary(p) is None:
        raise NotPrimary("psi_a needs a primary polynomial")
    t = p.degree
    out = []
    for exp in range(t + 1):
        c = p.coeffs.get(exp)
        if c is None:
            out.append(Fraction(0))
        elif sorts.is_inf(c.layer):
            raise NotPrimary("psi_a needs finite layers")
        else:
            out.append(Fraction(c.layer))
    return out


def _synthetic_division(coeffs, r):
    """Divide by (x - r); returns (quotient coefficients, remainder)."""
    quotient = [Fraction(0)] * (len(coeffs) - 1)
    carry = Fraction(0)
    for i in range(len(coeffs) - 1, 0, -1):
        carry = coeffs[i] + carry * r
        quotient[i - 1] = carry
    remainder = coeffs[0] + carry * r
    return quotient, remainder


def classical_eval(coeffs, x):
    out = Fraction(0)
    for c in reversed(coeffs):
        out = out * x + c
    return out


def classical_multiplicity(coeffs, root):
    """Multiplicity of ``root`` in a classical polynomial over Q."""
    coeffs = list(coeffs)
    count = 0
    while len(coeffs) > 1:
        quotient, remainder = _synthetic_division(coeffs, root)
        if remainder != 0:
            break
        count += 1
        coeffs = quotient
    return count


def linear_multiplicity(f, l) -> int:
    """How often (x + <a>^l) divides an a-primary polynomial.

    This is the classical multiplicity of -l as a root of psi_a(f),
    computed by exact synthetic division.
    """
    psi = psi_a(f)
    return classical_multiplicity(psi, -Fraction(l))


def linear_divides_via_zero_layer(f, l, sort: Sort) -> bool:
    """Zero-layer divisibility probe, available under the rational sort.

    Evaluates the primary polynomial at its root value with layer -l;
    landing in the 0 layer is equivalent to (x + <a>^l) dividing it.
    """
    from .polys import p_eval

    if sort != RAT:
        raise PreconditionViolated("the zero-layer probe needs the rational sort")
    p = _as_poly(f)
    a = is_primary(p)
    if a is None:
        raise NotPrimary("the zero-layer probe needs a primary polynomial")
    value = p_eval(p, LayeredScalar(a, -Fraction(l)), sort)
    return value.layer == 0


def eval_sort(decomp: PrimaryDecomposition, b: LayeredScalar, sort: Sort):
    """Closed-form layer of f(b) from the primary decomposition.

    The factor whose root b crosses contributes the sort-evaluated layer
    sum of all its coefficients; factors with larger roots contribute
    their constant-term layer; factors with smaller roots contribute
    k**degree where k is b's layer.  The unit layer and, when a power of
    the variable was divided out, k**lambda_power multiply in.
    """
    k = b.layer
    out = s(decomp.unit)
    if decomp.lambda_power:
        out = sorts.layer_mul(out, sorts.layer_pow_int(k, decomp.lambda_power, sort), sort)
    for factor in decomp.factors:
        if b.value == factor.root_value:
            acc = None
            for exp, c in factor.poly.terms():
                term = sorts.layer_mul(c.layer, sorts.layer_pow_int(k, exp, sort), sort)
                acc = term if acc is None else sorts.layer_add(acc, term, sort)
            out = sorts.layer_mul(out, acc, sort)
        elif b.value < factor.root_value:
            out = sorts.layer_mul(out, factor.poly.coeffs[0].layer, sort)
        else:
            out = sorts.layer_mul(out, sorts.layer_pow_int(k, factor.degree, sort), sort)
    return out
