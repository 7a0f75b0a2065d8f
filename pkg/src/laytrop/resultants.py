"""Layered permanents, Sylvester matrices and resultants.

The layered permanent sums the permutation products under layered
addition, so every nu-maximal transversal contributes its layer; this is
why the optimized enumerator uses dominance pruning (it may discard only
strictly dominated branches, never ties) and why inclusion-exclusion
shortcuts are unsound here.  The naive full enumeration is kept as the
oracle.

For two primary polynomials with the same root, the resultant is
determined by the classical permanent of the layer Sylvester matrix:
value m*n*a at that layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from . import sorts
from .errors import (
    DegreeZero,
    NotPrimaryPair,
    NotSquare,
    OutOfRange,
    PreconditionViolated,
)
from .factor import is_primary
from .polys import LayeredPoly, full_form
from .scalars import BOTTOM, LayeredScalar, ls_add, ls_mul, ls_pow
from .sorts import INF, Sort


@dataclass(frozen=True)
class LayeredMatrix:
    rows: int
    cols: int
    entries: tuple  # tuple of row tuples; entries LayeredScalar or BOTTOM

    def __getitem__(self, rc):
        return self.entries[rc[0]][rc[1]]


@dataclass(frozen=True)
class LayerMatrix:
    size: int
    entries: tuple  # tuple of row tuples of Fractions (0 for empty)


def layered_matrix(rows) -> LayeredMatrix:
    entries = tuple(tuple(row) for row in rows)
    n = len(entries)
    m = len(entries[0]) if entries else 0
    if any(len(row) != m for row in entries):
        raise ValueError("ragged matrix")
    return LayeredMatrix(n, m, entries)


def layered_permanent_naive(matrix: LayeredMatrix, sort: Sort):
    """Oracle: plain sum over all permutations."""
    if matrix.rows != matrix.cols:
        raise NotSquare("permanent needs a square matrix")
    n = matrix.rows
    total = BOTTOM
    for perm in permutations(range(n)):
        term = None
        for i in range(n):
            e = matrix.entries[i][perm[i]]
            if e is BOTTOM:
                term = None
                break
            term = e if term is None else ls_mul(term, e, sort)
        if term is None:
            continue
        total = term if total is BOTTOM else ls_add(total, term, sort)
    return total


def _layer_ops(sort: Sort):
    """Raw add/mul closures for pre-validated layers (hot permanent loop)."""
    if sort.kind == "trunc":
        q = Fraction(sort.q)

        def mul(a, b):
            if a == 0 or b == 0:
                return Fraction(0)
            return min(a * b, q)

        def add(a, b):
            if a == 0:
                return b
            if b == 0:
                return a
            return min(a + b, q)

        return add, mul
    if sort.kind == "unit":
        def mul(a, b):
            return Fraction(0) if a == 0 or b == 0 else Fraction(1)

        def add(a, b):
            return b if a == 0 else (a if b == 0 else Fraction(1))

        return add, mul
    if sort.kind == "super":
        def mul(a, b):
            if a == 0 or b == 0:
                return Fraction(0)
            return Fraction(1) if a == b == 1 else INF

        def add(a, b):
            if a == 0:
                return b
            if b == 0:
                return a
            return INF

        return add, mul

    def mul(a, b):
        return a * b

    def add(a, b):
        return a + b

    return add, mul


def layered_permanent(matrix: LayeredMatrix, sort: Sort):
    """Permutation sum with exact dominance pruning.

    Depth-first over rows; a branch is cut only when its value plus the
    per-row maxima of the remaining rows falls strictly below the best
    value found, so all nu-ties survive and their layers accumulate.
    """
    if matrix.rows != matrix.cols:
        raise NotSquare("permanent needs a square matrix")
    n = matrix.rows
    rows = []
    for i in range(n):
        cells = []
        for j, e in enumerate(matrix.entries[i]):
            if e is BOTTOM:
                continue
            sorts.require_layer(e.layer, sort)
            cells.append((1 << j, e.value, e.layer))
        if not cells:
            return BOTTOM
        rows.append(cells)
    suffix_max = [Fraction(0)] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_max[i] = suffix_max[i + 1] + max(v for _, v, _ in rows[i])
    layer_add_raw, layer_mul_raw = _layer_ops(sort)

    best = [None, None]  # best value, accumulated layer

    def descend(i, used, value, layer):
        if i == n:
            if best[0] is None or value > best[0]:
                best[0] = value
                best[1] = layer
            elif value == best[0]:
                best[1] = layer_add_raw(best[1], layer)
            return
        if best[0] is not None and value + suffix_max[i] < best[0]:
            return
        for bit, v, l in rows[i]:
            if used & bit:
                continue
            descend(i + 1, used | bit, value + v, layer_mul_raw(layer, l))

    descend(0, 0, Fraction(0), Fraction(1))
    return BOTTOM if best[0] is None else LayeredScalar(best[0], best[1])


def sylvester(f: LayeredPoly, g: LayeredPoly, sort: Sort) -> LayeredMatrix:
    """The (m+n) x (m+n) staircase of full-form coefficients.

    Inputs are normalized to full form first; absent exponents (below a
    power of the variable dividing the input) stay BOTTOM.
    """
    f = full_form(f)
    g = full_form(g)
    if f.is_zero or g.is_zero or f.degree < 1 or g.degree < 1:
        raise DegreeZero("sylvester needs two polynomials of degree >= 1")
    m, n = f.degree, g.degree
    size = m + n
    rows = []
    for r in range(n):
        row = [BOTTOM] * size
        for e, c in f.terms():
            row[r + e] = c
        rows.append(row)
    for r in range(m):
        row = [BOTTOM] * size
        for e, c in g.terms():
            row[r + e] = c
        rows.append(row)
    return layered_matrix(rows)


def resultant(f: LayeredPoly, g: LayeredPoly, sort: Sort):
    """Layered resultant; constant inputs use the power rule."""
    if f.is_zero or g.is_zero:
        return BOTTOM
    if f.degree == 0:
        return ls_pow(f.coeffs[0], g.degree, sort)
    if g.degree == 0:
        return ls_pow(g.coeffs[0], f.degree, sort)
    return layered_permanent(sylvester(f, g, sort), sort)


def layer_sylvester(f: LayeredPoly, g: LayeredPoly, sort: Sort) -> LayerMatrix:
    """Layers of the Sylvester matrix of two primary polynomials.

    Both inputs must be monic and primary with nu-equivalent roots.
    """
    a = is_primary(full_form(f))
    b = is_primary(full_form(g))
    if a is None or b is None or a != b:
        raise NotPrimaryPair("layer Sylvester matrix needs an equal-root primary pair")
    matrix = sylvester(f, g, sort)
    if any(
        e is not BOTTOM and sorts.is_inf(e.layer)
        for row in matrix.entries
        for e in row
    ):
        raise NotPrimaryPair("layer matrix needs finite layers")
    entries = tuple(
        tuple(
            Fraction(0) if e is BOTTOM else Fraction(e.layer)
            for e in row
        )
        for row in matrix.entries
    )
    return LayerMatrix(matrix.rows, entries)


def layer_permanent(matrix: LayerMatrix) -> Fraction:
    """Classical permanent over Q by exhaustive permutation enumeration."""
    entries = matrix.entries
    n = len(entries)
    if any(len(row) != n for row in entries):
        raise NotSquare("permanent needs a square matrix")
    if n > 12:
        raise OutOfRange("layer permanents are enumerated only up to size 12")

    def descend(i, used):
        if i == n:
            return Fraction(1)
        total = Fraction(0)
        row = entries[i]
        for j in range(n):
            bit = 1 << j
            if used & bit or row[j] == 0:
                continue
            total += row[j] * descend(i + 1, used | bit)
        return total

    return descend(0, 0)


def reduction(f: LayeredPoly, u: int) -> LayeredPoly:
    """Drop the u lowest coefficients and shift down by u."""
    if f.is_zero:
        raise OutOfRange("cannot reduce the zero polynomial")
    if u < 0 or u > f.degree:
        raise OutOfRange(f"reduction index {u} outside 0..{f.degree}")
    return LayeredPoly({e - u: c for e, c in f.terms() if e >= u})


def primary_pair_resultant(f: LayeredPoly, g: LayeredPoly, sort: Sort) -> LayeredScalar:
    """Closed form for an equal-root primary pair.

    The value is m*n*a (logarithmic notation) and the layer is the
    classical permanent of the layer Sylvester matrix.
    """
    if sort.kind in ("unit", "super"):
        raise PreconditionViolated(
            "the layer-permanent closed form needs ordinary layer arithmetic"
        )
    a = is_primary(full_form(f))
    b = is_primary(full_form(g))
    if a is None or b is None or a != b:
        raise NotPrimaryPair("closed form needs an equal-root primary pair")
    m, n = f.degree, g.degree
    layer = layer_permanent(layer_sylvester(f, g, sort))
    if sort.kind == "trunc":
        layer = sorts.truncate_layer(layer, sort.q)
    return LayeredScalar(Fraction(m * n) * a, layer)
