"""Multivariate layered polynomials and the layering map.

A MultiPoly maps exponent vectors (rational exponents allowed) to
coefficients; a Point is a vector of layered scalars.  The layering map
sends a point to the layer of the evaluated polynomial; corner supports,
corner roots and components are pointwise queries, and finite sample
grids stand in for the full function space.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import sorts
from .errors import ArityMismatch, PreconditionViolated
from .scalars import BOTTOM, LayeredScalar, ls_add, ls_mul, ls_pow, ls_sum
from .sorts import Sort, as_layer


@dataclass(frozen=True)
class MultiPoly:
    arity: int
    monomials: tuple  # ((exponent tuple, LayeredScalar), ...) sorted

    def terms(self):
        return self.monomials


def multipoly(arity: int, monomials) -> MultiPoly:
    items = dict(monomials).items() if isinstance(monomials, dict) else monomials
    cleaned = []
    for exps, coeff in items:
        exps = tuple(Fraction(e) for e in exps)
        if len(exps) != arity:
            raise ArityMismatch(f"exponent vector {exps} does not have arity {arity}")
        cleaned.append((exps, coeff))
    cleaned.sort(key=lambda t: t[0])
    return MultiPoly(arity, tuple(cleaned))


def mp_mul(F: MultiPoly, G: MultiPoly, sort: Sort) -> MultiPoly:
    if F.arity != G.arity:
        raise ArityMismatch("arities differ")
    out = {}
    for e1, c1 in F.terms():
        for e2, c2 in G.terms():
            key = tuple(a + b for a, b in zip(e1, e2))
            prod = ls_mul(c1, c2, sort)
            out[key] = ls_add(out[key], prod, sort) if key in out else prod
    return multipoly(F.arity, out)


def _check_point(F: MultiPoly, point):
    if len(point) != F.arity:
        raise ArityMismatch(
            f"point of arity {len(point)} against polynomial of arity {F.arity}"
        )


def monomial_value(exps, coeff, point, sort: Sort) -> LayeredScalar:
    out = coeff
    for e, x in zip(exps, point):
        if e == 0:
            continue
        out = ls_mul(out, ls_pow(x, e, sort), sort)
    return out


def mp_eval(F: MultiPoly, point, sort: Sort):
    _check_point(F, point)
    return ls_sum(
        (monomial_value(e, c, point, sort) for e, c in F.terms()), sort
    )


def theta(F: MultiPoly, point, sort: Sort):
    """The layering map: the layer of F at the point."""
    value = mp_eval(F, point, sort)
    if value is BOTTOM:
        raise PreconditionViolated("the layering map is undefined on the empty polynomial")
    return value.layer


def theta_min(Fs, point, sort: Sort):
    """Pointwise minimum of the layering maps of finitely many generators."""
    if not Fs:
        raise PreconditionViolated("theta_min needs at least one generator")
    layers = [theta(F, point, sort) for F in Fs]
    out = layers[0]
    for layer in layers[1:]:
        if sorts.layer_cmp(layer, out) < 0:
            out = layer
    return out


def corner_support(F: MultiPoly, point, sort: Sort):
    """Exponent vectors of positive-layer monomials nu-tied with the value."""
    _check_point(F, point)
    total = mp_eval(F, point, sort)
    if total is BOTTOM:
        return set()
    out = set()
    for exps, coeff in F.terms():
        value = monomial_value(exps, coeff, point, sort)
        positive = sorts.is_inf(value.layer) or value.layer > 0
        if positive and value.value == total.value:
            out.add(exps)
    return out


def is_corner_root(F: MultiPoly, point, sort: Sort) -> bool:
    return len(corner_support(F, point, sort)) >= 2


def is_ell_root(F: MultiPoly, point, l, sort: Sort) -> bool:
    value = mp_eval(F, point, sort)
    if value is BOTTOM:
        return False
    return sorts.is_ghost_sort(value.layer, as_layer(l), sort)


def component_index(F: MultiPoly, point, sort: Sort):
    """The unique monomial the polynomial equals at the point, or None.

    Equality is exact (value and layer); corner points where layers add
    have no component.
    """
    _check_point(F, point)
    total = mp_eval(F, point, sort)
    if total is BOTTOM:
        return None
    hits = [
        exps
        for exps, coeff in F.terms()
        if monomial_value(exps, coeff, point, sort) == total
    ]
    return hits[0] if len(hits) == 1 else None


class GridRow(NamedTuple):
    point: tuple  # coordinate values (Fractions)
    value: Fraction  # value of the evaluated polynomial
    theta: object  # Layer
    csupp: int
    component: object  # exponent tuple or None


def axis_points(lo, hi, step):
    lo, hi, step = Fraction(lo), Fraction(hi), Fraction(step)
    if step <= 0:
        raise PreconditionViolated("grid steps must be positive")
    out = []
    x = lo
    while x <= hi:
        out.append(x)
        x += step
    return out


def _grid(region):
    axes = [axis_points(*axis) for axis in region]
    points = [()]
    for axis in axes:
        points = [p + (x,) for p in points for x in axis]
    return points


def grid_scan(F: MultiPoly, region, coord_layers, sort: Sort):
    """Rasterize the layering map over a lattice region.

    ``region`` is one (lo, hi, step) triple per axis; ``coord_layers``
    fixes the layer of each coordinate.  Rows come back in lexicographic
    order of the coordinate values.
    """
    if len(region) != F.arity or len(coord_layers) != F.arity:
        raise ArityMismatch("region and layer vectors must match the polynomial arity")
    layers = [as_layer(l) for l in coord_layers]
    rows = []
    for values in _grid(region):
        point = tuple(LayeredScalar(v, l) for v, l in zip(values, layers))
        ev = mp_eval(F, point, sort)
        if ev is BOTTOM:
            raise PreconditionViolated("cannot rasterize the empty polynomial")
        rows.append(
            GridRow(
                values,
                ev.value,
                ev.layer,
                len(corner_support(F, point, sort)),
                component_index(F, point, sort),
            )
        )
    return rows


def corner_locus_on_grid(Fs, region, coord_layers, sort: Sort):
    """Lattice points where every generator has a corner root.

    An empty generator list returns the whole grid (empty intersection
    convention).
    """
    layers = [as_layer(l) for l in coord_layers]
    out = []
    for values in _grid(region):
        point = tuple(LayeredScalar(v, l) for v, l in zip(values, layers))
        if all(is_corner_root(F, point, sort) for F in Fs):
            out.append(values)
    return out
