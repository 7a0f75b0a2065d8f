"""The sorting semiring of layers.

A layer is encoded universally as an exact ``Fraction`` or the infinite
element ``INF``; which encodings are legal depends on the active sort:

* ``UNIT``          -- only layer 1 (max-plus; 1+1 = 1).
* ``SUPER``         -- layers {1, INF}; 1*1 = 1, every other sum/product INF.
* ``truncated(q)``  -- layers {1, ..., q}; sums and products cap at q.
* ``NAT``           -- positive integers with ordinary arithmetic.
* ``POSQ``          -- positive rationals with ordinary arithmetic.
* ``RAT``           -- arbitrary rationals; 0 absorbs multiplicatively.

Layer 0 additionally appears in *every* sort as the formal marker of
inessential full-form coefficients.  Arithmetic treats it uniformly:
0 + l = l and 0 * l = 0.  It is not a member of the sort (except under
``RAT``) and ``layer_valid`` rejects it elsewhere; the ``allow_zero``
flag used internally by the arithmetic admits it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidLayer, LayerNotDivisible, NonInvertibleLayer

INF = float("inf")

_UNIT = "unit"
_SUPER = "super"
_TRUNC = "trunc"
_NAT = "nat"
_POSQ = "posq"
_RAT = "q"


@dataclass(frozen=True)
class Sort:
    """One instance of the sorting semiring; see the module docstring."""

    kind: str
    q: int | None = None

    def __str__(self):
        if self.kind == _TRUNC:
            return f"trunc:{self.q}"
        return self.kind

    def __repr__(self):
        return f"Sort({self})"


UNIT = Sort(_UNIT)
SUPER = Sort(_SUPER)
NAT = Sort(_NAT)
POSQ = Sort(_POSQ)
RAT = Sort(_RAT)


def truncated(q: int) -> Sort:
    if not isinstance(q, int) or q < 1:
        raise InvalidLayer(f"truncation bound must be a positive integer, got {q!r}")
    return Sort(_TRUNC, q)


def parse_sort(text: str) -> Sort:
    """Parse the CLI grammar ``unit|super|trunc:<q>|nat|posq|q``."""
    plain = {"unit": UNIT, "super": SUPER, "nat": NAT, "posq": POSQ, "q": RAT}
    if text in plain:
        return plain[text]
    if text.startswith("trunc:"):
        try:
            return truncated(int(text[len("trunc:"):]))
        except ValueError:
            pass
    raise InvalidLayer(f"unknown sort {text!r}")


Layer = object  # Fraction or INF; kept loose on purpose


def is_inf(layer) -> bool:
    return layer == INF


def as_layer(value) -> Layer:
    """Normalize an int/Fraction/INF into the universal layer encoding."""
    if is_inf(value):
        return INF
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise InvalidLayer(f"not a layer: {value!r}")


def layer_valid(layer, sort: Sort, allow_zero: bool = False) -> bool:
    """Membership of ``layer`` in the sort (optionally admitting formal 0)."""
    if is_inf(layer):
        return sort.kind == _SUPER
    if not isinstance(layer, (int, Fraction)):
        return False
    layer = Fraction(layer)
    if allow_zero and layer == 0:
        return True
    if sort.kind == _UNIT:
        return layer == 1
    if sort.kind == _SUPER:
        return layer == 1
    if sort.kind == _TRUNC:
        return layer.denominator == 1 and 1 <= layer <= sort.q
    if sort.kind == _NAT:
        return layer.denominator == 1 and layer >= 1
    if sort.kind == _POSQ:
        return layer > 0
    return True  # RAT


def require_layer(layer, sort: Sort, allow_zero: bool = True) -> Layer:
    layer = as_layer(layer)
    if not layer_valid(layer, sort, allow_zero=allow_zero):
        raise InvalidLayer(f"layer {format_layer(layer)} is not valid under sort {sort}")
    return layer


def infinite_layer(layer, sort: Sort) -> bool:
    """True when layer + p = layer for every positive p (Def. of finiteness)."""
    if sort.kind == _UNIT:
        return layer == 1
    if sort.kind == _SUPER:
        return is_inf(layer)
    if sort.kind == _TRUNC:
        return layer == sort.q
    return False


def layer_add(k, l, sort: Sort) -> Layer:
    k = require_layer(k, sort)
    l = require_layer(l, sort)
    if k == 0:
        return l
    if l == 0:
        return k
    if sort.kind == _UNIT:
        return Fraction(1)
    if sort.kind == _SUPER:
        return INF
    if sort.kind == _TRUNC:
        return min(k + l, Fraction(sort.q))
    return k + l


def layer_mul(k, l, sort: Sort) -> Layer:
    k = require_layer(k, sort)
    l = require_layer(l, sort)
    if k == 0 or l == 0:
        return Fraction(0)
    if sort.kind == _UNIT:
        return Fraction(1)
    if sort.kind == _SUPER:
        return Fraction(1) if k == l == 1 else INF
    if sort.kind == _TRUNC:
        return min(k * l, Fraction(sort.q))
    return k * l


def layer_cmp(k, l) -> int:
    """Total order on the universal encoding; INF is maximal."""
    k = as_layer(k)
    l = as_layer(l)
    if k == l:
        return 0
    return -1 if k < l else 1


def is_ghost_sort(l, base, sort: Sort) -> bool:
    """True iff l = base + p for some positive p of the sort.

    Under a totally ordered L this is: l > base, or l = base infinite.
    """
    l = require_layer(l, sort)
    base = require_layer(base, sort)
    if layer_cmp(l, base) > 0:
        return True
    return l == base and infinite_layer(l, sort)


def truncate_layer(l, q) -> Layer:
    """Quotient map collapsing every layer >= q to q."""
    l = as_layer(l)
    q = as_layer(q)
    if is_inf(q) or q <= 0:
        raise InvalidLayer("truncation bound must be finite and positive")
    return l if layer_cmp(l, q) < 0 else q


def layer_nmul(n: int, l, sort: Sort) -> Layer:
    """The n-fold sum l + ... + l inside the sort (n >= 1)."""
    if n < 1:
        raise InvalidLayer(f"n-fold sum needs n >= 1, got {n}")
    l = require_layer(l, sort)
    if n == 1 or l == 0:
        return l
    if sort.kind == _UNIT:
        return Fraction(1)
    if sort.kind == _SUPER:
        return INF
    if sort.kind == _TRUNC:
        return min(n * l, Fraction(sort.q))
    return n * l


def layer_ndiv(n: int, l, sort: Sort) -> Layer:
    """Solve layer_nmul(n, x, sort) == l for x, or raise LayerNotDivisible."""
    if n < 1:
        raise InvalidLayer(f"n-fold quotient needs n >= 1, got {n}")
    l = require_layer(l, sort)
    if n == 1 or l == 0:
        return l
    if sort.kind == _UNIT:
        return Fraction(1)
    if sort.kind == _SUPER:
        if is_inf(l):
            return INF
        raise LayerNotDivisible(f"layer {format_layer(l)} has no {n}-fold half under {sort}")
    x = l / n
    if not layer_valid(x, sort):
        raise LayerNotDivisible(f"{n} does not divide layer {format_layer(l)} under {sort}")
    return x


def layer_div(k, l, sort: Sort) -> Layer:
    """Exact quotient k / l inside the sort, where it exists."""
    k = require_layer(k, sort)
    l = require_layer(l, sort)
    if l == 0:
        raise NonInvertibleLayer("layer 0 is not invertible")
    if sort.kind == _UNIT:
        return Fraction(1)
    if sort.kind == _SUPER:
        if l == 1:
            return k
        raise NonInvertibleLayer("layer inf is not invertible under the supertropical sort")
    if sort.kind == _TRUNC:
        # capping destroys cancellation; quotients are not well defined
        raise LayerNotDivisible(f"layer division is not defined under {sort}")
    if k == 0:
        return Fraction(0)
    x = k / l
    if not layer_valid(x, sort):
        raise LayerNotDivisible(
            f"layer {format_layer(k)} is not divisible by {format_layer(l)} under {sort}"
        )
    return x


def layer_pow_int(l, n: int, sort: Sort) -> Layer:
    """l multiplied with itself n times (n >= 0); n = 0 gives layer 1."""
    if n < 0:
        raise InvalidLayer("integer layer power needs n >= 0")
    out = Fraction(1)
    for _ in range(n):
        out = layer_mul(out, l, sort)
    return out


def format_layer(l) -> str:
    if is_inf(l):
        return "inf"
    l = Fraction(l)
    return str(l.numerator) if l.denominator == 1 else f"{l.numerator}/{l.denominator}"
