"""Rational functions over Q and the radial extension used on charts.

Polynomial arithmetic is delegated to sympy's sparse ``QQ(x_1..x_d)`` field
with graded lexicographic order.  :class:`RadialFunction` adjoins
``rho = sqrt(x_1^2 + ... + x_4^2)`` so that conformal factors ``|z|^{-k}``
with odd ``k`` stay exact.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from sympy import QQ
from sympy.polys.fields import field
from sympy.polys.orderings import grlex

from .errors import ParseError, StructureError
from .exact import ComplexPair, rational, rational_str


def _q(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


class RationalFunctionField:
    """``Q(x_1, ..., x_d)`` with grlex monomial order."""

    def __init__(self, d: int, prefix: str = "x"):
        self.d = d
        self.names = [f"{prefix}{i + 1}" for i in range(d)]
        self.field, *self.gens = field(",".join(self.names), QQ, grlex)
        self.ring = self.field.ring
        self.poly_gens = self.ring.gens

    def __call__(self, value):
        if isinstance(value, Fraction):
            return self.field(QQ(value.numerator, value.denominator))
        if isinstance(value, str):
            return self(rational(value))
        return self.field(value)

    def var(self, i: int):
        return self.gens[i]

    def diff(self, f, i: int):
        return f.diff(self.gens[i])

    def evaluate(self, f, point) -> Fraction:
        subs = [(g, QQ(p.numerator, p.denominator)) for g, p in zip(self.poly_gens, point)]
        num = f.numer.evaluate(subs) if self.d else f.numer
        den = f.denom.evaluate(subs) if self.d else f.denom
        if den == 0:
            raise ZeroDivisionError("rational function evaluated on its pole")
        return _q(num) / _q(den)

    def compose_linear(self, f, images):
        """``f(A x)`` where ``images[i]`` is the polynomial replacing ``x_i``."""
        pairs = list(zip(self.poly_gens, images))
        return self.field.new(f.numer.compose(pairs), f.denom.compose(pairs))


def canonical_form(f) -> tuple:
    """``(numerator_terms, denominator_terms)`` with integer, content-free
    coefficients, grlex-sorted, positive leading denominator coefficient."""
    num = [(m, _q(c)) for m, c in f.numer.terms()]
    den = [(m, _q(c)) for m, c in f.denom.terms()]
    scale = Fraction(reduce(lcm, (c.denominator for _, c in num + den), 1))
    num = [(m, c * scale) for m, c in num]
    den = [(m, c * scale) for m, c in den]
    content = reduce(gcd, (c.numerator for _, c in den), 0)
    num_content = reduce(gcd, (c.numerator for _, c in num), 0)
    g = gcd(content, num_content) if num else content
    if den and den[0][1] < 0:
        g = -g
    return (tuple((m, c / g) for m, c in num), tuple((m, c / g) for m, c in den))


def poly_to_json(poly) -> list:
    return [[list(m), rational_str(_q(c))] for m, c in poly.terms()]


def poly_from_json(rf: RationalFunctionField, data) -> object:
    try:
        terms = {tuple(int(e) for e in m): QQ(rational(c).numerator, rational(c).denominator)
                 for m, c in data}
    except (TypeError, ValueError) as exc:
        raise ParseError(f"malformed polynomial {data!r}") from exc
    if any(len(m) != rf.d for m in terms):
        raise ParseError("exponent vector has the wrong length")
    return rf.ring.from_dict(terms) if terms else rf.ring.zero


def _foreign(other) -> bool:
    return (getattr(other, "is_form", False) or hasattr(other, "shape")
            or isinstance(other, ComplexPair))


class RadialFunction:
    """``a + b * rho`` with ``a, b`` in ``Q(x)`` and ``rho^2 = x_1^2 + .. + x_4^2``.

    Since ``rho`` is not in ``Q(x)``, ``(1, rho)`` is a basis and equality is
    componentwise.
    """

    __slots__ = ("a", "b", "ctx")

    def __init__(self, ctx: "RadialContext", a, b=None):
        self.ctx = ctx
        self.a = a
        self.b = ctx.rf.field.zero if b is None else b

    def _lift(self, other):
        if isinstance(other, RadialFunction):
            if other.ctx is not self.ctx:
                raise StructureError("radial functions from different charts")
            return other
        return RadialFunction(self.ctx, self.ctx.rf(other))

    def __add__(self, other):
        if _foreign(other):
            return NotImplemented
        o = self._lift(other)
        return RadialFunction(self.ctx, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return RadialFunction(self.ctx, -self.a, -self.b)

    def __sub__(self, other):
        if _foreign(other):
            return NotImplemented
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if _foreign(other):
            return NotImplemented
        o = self._lift(other)
        r2 = self.ctx.r2
        return RadialFunction(self.ctx, self.a * o.a + self.b * o.b * r2,
                              self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def inverse(self):
        norm = self.a * self.a - self.b * self.b * self.ctx.r2
        if norm == 0:
            raise ZeroDivisionError("division by zero radial function")
        return RadialFunction(self.ctx, self.a / norm, -self.b / norm)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = RadialFunction(self.ctx, self.ctx.rf.field.one)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if _foreign(other):
            return NotImplemented
        try:
            o = self._lift(other)
        except Exception:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def is_rational(self) -> bool:
        return self.b == 0

    def diff(self, i: int) -> "RadialFunction":
        rf = self.ctx.rf
        da = rf.diff(self.a, i)
        db = rf.diff(self.b, i)
        if i < self.ctx.radial:
            # d rho / dx_i = x_i / rho = x_i rho / r^2
            db = db + self.b * rf.var(i) / self.ctx.r2
        return RadialFunction(self.ctx, da, db)

    def evaluate(self, point, radius: Fraction) -> Fraction:
        rf = self.ctx.rf
        value = rf.evaluate(self.a, point)
        if self.b != 0:
            value += rf.evaluate(self.b, point) * radius
        return value

    def __repr__(self):
        if self.b == 0:
            return str(self.a)
        return f"({self.a}) + ({self.b})*rho"

    def to_json(self) -> dict:
        out = {"num": poly_to_json(self.a.numer), "den": poly_to_json(self.a.denom)}
        if self.b != 0:
            out["rho"] = {"num": poly_to_json(self.b.numer), "den": poly_to_json(self.b.denom)}
        return out


class RadialContext:
    """Scalar ring of a chart: ``Q(x_1..x_d)[rho]`` with ``rho`` the norm of the
    first ``radial`` coordinates."""

    def __init__(self, d: int, radial: int = 4):
        if radial > d:
            raise StructureError("radial block larger than the chart")
        self.d = d
        self.radial = radial
        self.rf = RationalFunctionField(d)
        self.r2 = sum((self.rf.var(i) ** 2 for i in range(radial)), self.rf.field.zero)
        self.r2_poly = self.r2.numer
        self.zero = RadialFunction(self, self.rf.field.zero)
        self.one = RadialFunction(self, self.rf.field.one)

    def __call__(self, value) -> RadialFunction:
        if isinstance(value, RadialFunction):
            return value
        return RadialFunction(self, self.rf(value))

    def var(self, i: int) -> RadialFunction:
        return RadialFunction(self, self.rf.var(i))

    @property
    def rho(self) -> RadialFunction:
        return RadialFunction(self, self.rf.field.zero, self.rf.field.one)

    def radius_power(self, k: int) -> RadialFunction:
        """``rho^k`` for any integer ``k``."""
        if k % 2 == 0:
            return RadialFunction(self, self.r2 ** (k // 2))
        return RadialFunction(self, self.rf.field.zero, self.r2 ** ((k - 1) // 2))

    def is_manifestly_positive(self, value: RadialFunction) -> bool:
        """True when ``value = c * rho^m`` with ``c > 0``: positive off the origin."""
        if (value.a == 0) == (value.b == 0):
            return False
        part = value.a if value.b == 0 else value.b
        return all(self._positive_r2_monomial(p) for p in (part.numer, part.denom))

    def _positive_r2_monomial(self, poly) -> bool:
        while True:
            q, r = poly.div(self.r2_poly)
            if r != 0 or q == 0:
                break
            poly = q
        return poly.is_ground and _q(poly.LC) > 0

    def from_json(self, data) -> RadialFunction:
        if isinstance(data, str):
            return self(rational(data))
        a = self.rf.field.new(poly_from_json(self.rf, data["num"]), poly_from_json(self.rf, data["den"]))
        b = None
        if "rho" in data:
            b = self.rf.field.new(poly_from_json(self.rf, data["rho"]["num"]),
                                  poly_from_json(self.rf, data["rho"]["den"]))
        return RadialFunction(self, a, b)


def scalar_to_json(value):
    if isinstance(value, RadialFunction):
        if value.b == 0 and value.a.numer.is_ground and value.a.denom.is_ground:
            return rational_str(_q(value.a.numer.LC) / _q(value.a.denom.LC))
        return value.to_json()
    if isinstance(value, Fraction) or isinstance(value, int):
        return rational_str(value)
    return str(value)
