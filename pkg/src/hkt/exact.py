"""Exact scalars and small dense linear algebra over a field.

Matrices are numpy arrays with ``dtype=object`` whose entries are exact field
elements (:class:`fractions.Fraction` for Lie algebra data, rational or radial
functions on charts, :class:`ComplexPair` for complexified forms).  Nothing in
here ever produces a float.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import ParseError, StructureError


def rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` literal to a Fraction.

    Floats are rejected: a verdict path must never see one.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParseError(f"not a rational literal: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            if "/" in text:
                p, q = text.split("/")
                return Fraction(int(p), int(q))
            return Fraction(int(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational literal: {value!r}") from exc
    if hasattr(value, "numerator") and hasattr(value, "denominator") and not isinstance(value, float):
        return Fraction(int(value.numerator), int(value.denominator))
    raise ParseError(f"not a rational literal: {value!r}")


def rational_str(q: Fraction) -> str:
    q = rational(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class ComplexPair:
    """``re + i*im`` over any real field; used to complexify forms exactly."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=0):
        self.re = re
        self.im = im

    @staticmethod
    def _lift(other):
        return other if isinstance(other, ComplexPair) else ComplexPair(other, 0 * other)

    def __add__(self, other):
        other = self._lift(other)
        return ComplexPair(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return ComplexPair(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, np.ndarray) or getattr(other, "is_form", False):
            return NotImplemented
        if not isinstance(other, ComplexPair):
            return ComplexPair(self.re * other, self.im * other)
        return ComplexPair(self.re * other.re - self.im * other.im,
                           self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def conjugate(self):
        return ComplexPair(self.re, -self.im)

    def __truediv__(self, other):
        if not isinstance(other, ComplexPair):
            return ComplexPair(self.re / other, self.im / other)
        norm = other.re * other.re + other.im * other.im
        num = self * other.conjugate()
        return ComplexPair(num.re / norm, num.im / norm)

    def __eq__(self, other):
        other = self._lift(other)
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"({self.re}{'+' if not str(self.im).startswith('-') else ''}{self.im}i)"


I_UNIT = ComplexPair(Fraction(0), Fraction(1))


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

def qmatrix(rows: Sequence[Sequence], coerce: Callable = rational) -> np.ndarray:
    """Build a square object matrix, coercing every entry."""
    rows = [list(r) for r in rows]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise StructureError("matrix must be square")
    out = np.empty((n, n), dtype=object)
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            out[i, j] = coerce(x)
    return out


def qvector(entries: Iterable, coerce: Callable = rational) -> np.ndarray:
    entries = list(entries)
    out = np.empty(len(entries), dtype=object)
    for i, x in enumerate(entries):
        out[i] = coerce(x)
    return out


def zeros(n: int, zero=Fraction(0)) -> np.ndarray:
    out = np.empty((n, n), dtype=object)
    out.fill(zero)
    return out


def identity(n: int, one=Fraction(1)) -> np.ndarray:
    out = zeros(n, 0 * one)
    for i in range(n):
        out[i, i] = one
    return out


def unit_vector(n: int, i: int, one=Fraction(1)) -> np.ndarray:
    v = np.empty(n, dtype=object)
    v.fill(0 * one)
    v[i] = one
    return v


def map_entries(m: np.ndarray, f: Callable) -> np.ndarray:
    out = np.empty(m.shape, dtype=object)
    for idx, x in np.ndenumerate(m):
        out[idx] = f(x)
    return out


def block_diag(*blocks: np.ndarray) -> np.ndarray:
    n = sum(b.shape[0] for b in blocks)
    zero = next((x * 0 for b in blocks for x in b.flat), Fraction(0))
    out = zeros(n, zero)
    pos = 0
    for b in blocks:
        k = b.shape[0]
        out[pos:pos + k, pos:pos + k] = b
        pos += k
    return out


def is_zero(m) -> bool:
    return all(x == 0 for x in np.asarray(m, dtype=object).flat)


def equal(a, b) -> bool:
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def is_symmetric(m: np.ndarray) -> bool:
    return equal(m, m.T)


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def trace(m: np.ndarray):
    total = m[0, 0] * 0
    for i in range(m.shape[0]):
        total = total + m[i, i]
    return total


def det(m: np.ndarray):
    """Determinant by fraction-exact Gaussian elimination."""
    a = np.array(m, dtype=object, copy=True)
    n = a.shape[0]
    if n == 0:
        return Fraction(1)
    result = a[0, 0] * 0 + 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r, col] != 0), None)
        if pivot is None:
            return a[0, 0] * 0
        if pivot != col:
            a[[col, pivot]] = a[[pivot, col]]
            result = -result
        p = a[col, col]
        result = result * p
        for r in range(col + 1, n):
            if a[r, col] != 0:
                f = a[r, col] / p
                a[r, col:] = a[r, col:] - f * a[col, col:]
    return result


def leading_minors(m: np.ndarray) -> list:
    return [det(m[:k, :k]) for k in range(1, m.shape[0] + 1)]


def is_positive_definite(m: np.ndarray) -> bool:
    """Sylvester's criterion on a symmetric rational matrix."""
    return is_symmetric(m) and all(x > 0 for x in leading_minors(m))


def inverse(m: np.ndarray) -> np.ndarray:
    n = m.shape[0]
    one = m[0, 0] * 0 + 1
    a = np.concatenate([np.array(m, dtype=object, copy=True), identity(n, one)], axis=1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r, col] != 0), None)
        if pivot is None:
            raise StructureError("matrix is singular")
        if pivot != col:
            a[[col, pivot]] = a[[pivot, col]]
        a[col] = a[col] / a[col, col]
        for r in range(n):
            if r != col and a[r, col] != 0:
                a[r] = a[r] - a[r, col] * a[col]
    return a[:, n:]


def row_reduce(rows: list) -> list:
    """Reduced row echelon form of a list of equal-length object vectors.

    Returns the nonzero rows only, so ``len(row_reduce(rows))`` is the rank.
    """
    a = [np.array(r, dtype=object, copy=True) for r in rows]
    if not a:
        return []
    width = len(a[0])
    out_rows = 0
    for col in range(width):
        pivot = next((r for r in range(out_rows, len(a)) if a[r][col] != 0), None)
        if pivot is None:
            continue
        a[out_rows], a[pivot] = a[pivot], a[out_rows]
        a[out_rows] = a[out_rows] / a[out_rows][col]
        for r in range(len(a)):
            if r != out_rows and a[r][col] != 0:
                a[r] = a[r] - a[r][col] * a[out_rows]
        out_rows += 1
    return a[:out_rows]


def rank(rows: list) -> int:
    return len(row_reduce(rows))


def matrix_to_json(m: np.ndarray) -> list:
    return [[rational_str(x) for x in row] for row in m]
