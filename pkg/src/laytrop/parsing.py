"""Text grammar for scalars, layers and polynomials.

Scalar: ``v:l`` with v a rational (``p/q`` or integer) and l a rational
or ``inf``, e.g. ``5:2``, ``3/2:inf``, ``-3:1/2``.

Polynomial: sum of ``v:l*x^e`` terms; ``*`` and ``^1`` are optional and
a bare ``x^e`` carries the unit coefficient ``0:1``.  Univariate
exponents are non-negative integers.  The multivariate grammar uses
``x1 .. xn`` and admits rational (also negative) exponents.  Parsing is
exact and ``parse(format(x)) == x`` bit for bit.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError
from .multivar import MultiPoly, multipoly
from .polys import LayeredPoly
from .scalars import ONE, LayeredScalar, ls_add
from .sorts import INF, NAT, Sort, format_layer


def format_value(v: Fraction) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def format_scalar(x: LayeredScalar) -> str:
    return f"{format_value(x.value)}:{format_layer(x.layer)}"


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] == " ":
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, char):
        if self.peek() == char:
            self.pos += 1
            return True
        return False

    def fail(self, message):
        raise ParseError(message, self.pos)

    def rational(self):
        self.skip_ws()
        start = self.pos
        if self.take("-"):
            pass
        digits = 0
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
            digits += 1
        if digits == 0:
            self.pos = start
            self.fail("expected a rational number")
        if self.pos < len(self.text) and self.text[self.pos] == "/":
            self.pos += 1
            den = 0
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
                den += 1
            if den == 0:
                self.fail("expected a denominator")
        return Fraction(self.text[start:self.pos])

    def layer(self):
        self.skip_ws()
        if self.text.startswith("inf", self.pos):
            self.pos += 3
            return INF
        return self.rational()


def parse_layer(text: str):
    sc = _Scanner(text)
    layer = sc.layer()
    sc.skip_ws()
    if sc.pos != len(text):
        sc.fail("trailing input after layer")
    return layer


def parse_scalar(text: str) -> LayeredScalar:
    sc = _Scanner(text)
    x = _scalar(sc)
    sc.skip_ws()
    if sc.pos != len(text):
        sc.fail("trailing input after scalar")
    return x


def _scalar(sc: _Scanner) -> LayeredScalar:
    value = sc.rational()
    if not sc.take(":"):
        sc.fail("expected ':' between value and layer")
    return LayeredScalar(value, sc.layer())


def _term(sc: _Scanner):
    """One term: (coefficient, [(index or None, exponent), ...])."""
    coeff = None
    ch = sc.peek()
    if ch.isdigit() or ch == "-":
        coeff = _scalar(sc)
        sc.take("*")
    factors = []
    while sc.peek() == "x":
        sc.pos += 1
        digits = ""
        while sc.pos < len(sc.text) and sc.text[sc.pos].isdigit():
            digits += sc.text[sc.pos]
            sc.pos += 1
        index = int(digits) if digits else None
        if index == 0:
            sc.fail("variable indices start at 1")
        exp = Fraction(1)
        if sc.take("^"):
            exp = sc.rational()
        factors.append((index, exp))
        if not sc.take("*"):
            break
    if coeff is None and not factors:
        sc.fail("expected a term")
    return (coeff if coeff is not None else ONE), factors


def parse_poly(text: str, sort: Sort = NAT):
    """Parse a polynomial; duplicate exponents merge by layered addition.

    Returns a LayeredPoly when only the bare variable ``x`` occurs (or
    no variable at all) and a MultiPoly when indexed variables
    ``x1 .. xn`` occur; mixing the two styles is an error.
    """
    sc = _Scanner(text)
    terms = [_term(sc)]
    while True:
        sc.skip_ws()
        if sc.pos == len(text):
            break
        if not sc.take("+"):
            sc.fail("expected '+' between terms")
        terms.append(_term(sc))

    indices = {i for _, factors in terms for i, _ in factors}
    if None in indices and len(indices) > 1:
        sc.fail("cannot mix 'x' with indexed variables")
    if indices and None not in indices:
        arity = max(indices)
        out = {}
        for coeff, factors in terms:
            exps = [Fraction(0)] * arity
            for i, e in factors:
                exps[i - 1] += e
            key = tuple(exps)
            out[key] = ls_add(out[key], coeff, sort) if key in out else coeff
        return multipoly(arity, out)

    out = {}
    for coeff, factors in terms:
        exp = sum((e for _, e in factors), Fraction(0))
        if exp.denominator != 1 or exp < 0:
            sc.fail("univariate exponents must be non-negative integers")
        exp = int(exp)
        out[exp] = ls_add(out[exp], coeff, sort) if exp in out else coeff
    return LayeredPoly(out)


def _format_power(name: str, exp) -> str:
    exp = Fraction(exp)
    return name if exp == 1 else f"{name}^{format_value(exp)}"


def format_poly(f) -> str:
    """Canonical text of a polynomial, highest exponents first."""
    if isinstance(f, MultiPoly):
        parts = []
        for exps, coeff in sorted(f.terms(), key=lambda t: t[0], reverse=True):
            vars_part = "*".join(
                _format_power(f"x{i + 1}", e) for i, e in enumerate(exps) if e != 0
            )
            if not vars_part:
                parts.append(format_scalar(coeff))
            elif coeff == ONE:
                parts.append(vars_part)
            else:
                parts.append(f"{format_scalar(coeff)}*{vars_part}")
        return " + ".join(parts) if parts else "0"
    if f.is_zero:
        return "0"  # the formal zero polynomial; not part of the grammar
    parts = []
    for exp, coeff in sorted(f.terms(), reverse=True):
        if exp == 0:
            parts.append(format_scalar(coeff))
        elif coeff == ONE:
            parts.append(_format_power("x", exp))
        else:
            parts.append(f"{format_scalar(coeff)}*{_format_power('x', exp)}")
    return " + ".join(parts)


def to_multipoly(f, arity: int = 1) -> MultiPoly:
    """View a univariate polynomial as a MultiPoly in x1."""
    if isinstance(f, MultiPoly):
        return f
    pad = (Fraction(0),) * (arity - 1)
    return multipoly(
        arity, {(Fraction(exp),) + pad: coeff for exp, coeff in f.terms()}
    )
