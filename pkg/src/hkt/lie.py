"""Lie algebras given by rational structure constants.

``c[i, j, k]`` is the coefficient of ``e_k`` in ``[e_i, e_j]``.  The
Chevalley-Eilenberg differential uses the convention
``d a(X, Y) = -a([X, Y])`` on 1-forms and is extended as a graded derivation.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Mapping

import numpy as np

from .errors import ParseError, StructureError
from .exact import inverse, is_positive_definite, rational, rational_str
from .forms import AlternatingForm, pullback, wedge
from .report import Report


class LieAlgebra:
    """A finite-dimensional real Lie algebra over the rationals."""

    def __init__(self, n: int, brackets: Mapping[tuple, Mapping[int, object]] | None = None,
                 name: str = ""):
        self.n = n
        self.name = name
        c = np.empty((n, n, n), dtype=object)
        c.fill(Fraction(0))
        for pair, out in (brackets or {}).items():
            i, j = pair
            if not (0 <= i < j < n):
                raise StructureError(
                    f"brackets must be given for index pairs i<j within range, got {pair}")
            for k, value in out.items():
                if not 0 <= k < n:
                    raise StructureError(f"output index {k} out of range")
                value = rational(value)
                c[i, j, k] = value
                c[j, i, k] = -value
        self.c = c
        self._validated = None

    @classmethod
    def from_tensor(cls, c: np.ndarray, name: str = "") -> "LieAlgebra":
        n = c.shape[0]
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if c[i, j, k] != -c[j, i, k]:
                        raise StructureError("structure constants are not antisymmetric")
        brackets = {}
        for i, j in itertools.combinations(range(n), 2):
            out = {k: c[i, j, k] for k in range(n) if c[i, j, k] != 0}
            if out:
                brackets[(i, j)] = out
        return cls(n, brackets, name)

    @classmethod
    def abelian(cls, n: int) -> "LieAlgebra":
        return cls(n, {}, name=f"R^{n}")

    @property
    def dim(self) -> int:
        return self.n

    def brackets(self) -> dict:
        out = {}
        for i, j in itertools.combinations(range(self.n), 2):
            col = {k: self.c[i, j, k] for k in range(self.n) if self.c[i, j, k] != 0}
            if col:
                out[(i, j)] = col
        return out

    def is_abelian(self) -> bool:
        return all(x == 0 for x in self.c.flat)

    # scalar ring hooks shared with charts
    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def coerce(x):
        return rational(x)

    @staticmethod
    def is_positive_definite(G: np.ndarray) -> bool:
        return is_positive_definite(G)

    def basis_bracket(self, i: int, j: int) -> np.ndarray:
        return self.c[i, j, :].copy()

    def bracket(self, X, Y) -> np.ndarray:
        X = np.asarray(X, dtype=object)
        Y = np.asarray(Y, dtype=object)
        out = np.empty(self.n, dtype=object)
        out.fill(0 * (X[0] if self.n else 0))
        for i in range(self.n):
            if X[i] == 0:
                continue
            for j in range(self.n):
                if Y[j] == 0 or i == j:
                    continue
                out = out + (X[i] * Y[j]) * self.c[i, j, :]
        return out

    def ad(self, i: int) -> np.ndarray:
        """Matrix of ``ad(e_i)``: column ``j`` is ``[e_i, e_j]``."""
        return np.array(self.c[i, :, :].T, dtype=object)

    def d(self, a: AlternatingForm) -> AlternatingForm:
        return ce_differential(self, a)

    def transport(self, P: np.ndarray) -> "LieAlgebra":
        """Structure constants in the basis ``f_j = sum_i P[i, j] e_i``."""
        Pinv = inverse(P)
        n = self.n
        c = np.empty((n, n, n), dtype=object)
        cols = [P[:, j] for j in range(n)]
        for a in range(n):
            for b in range(n):
                c[a, b, :] = Pinv @ self.bracket(cols[a], cols[b])
        return LieAlgebra.from_tensor(c, name=self.name)

    def __repr__(self):
        return f"LieAlgebra(n={self.n}, name={self.name!r})"

    # -- JSON ---------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "dim": self.n,
            "brackets": [
                {"x": i + 1, "y": j + 1,
                 "out": {str(k + 1): rational_str(v) for k, v in sorted(out.items())}}
                for (i, j), out in sorted(self.brackets().items())
            ],
        }

    @classmethod
    def from_json(cls, data: dict, name: str = "") -> "LieAlgebra":
        try:
            n = int(data["dim"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError("missing or invalid 'dim'", "dim") from exc
        brackets: dict = {}
        for pos, entry in enumerate(data.get("brackets", [])):
            loc = f"brackets[{pos}]"
            try:
                i, j = int(entry["x"]) - 1, int(entry["y"]) - 1
                out = {int(k) - 1: rational(v) for k, v in entry["out"].items()}
            except (KeyError, TypeError, ValueError, AttributeError) as exc:
                raise ParseError(f"malformed bracket entry {entry!r}", loc) from exc
            if not (0 <= i < j < n):
                raise ParseError(f"bracket indices must satisfy 1 <= x < y <= {n}", loc)
            if (i, j) in brackets:
                raise ParseError(f"bracket [{i + 1},{j + 1}] given twice", loc)
            if any(not 0 <= k < n for k in out):
                raise ParseError("output index out of range", loc)
            brackets[(i, j)] = out
        return cls(n, brackets, name)


def validate_jacobi(g: LieAlgebra) -> Report:
    """Scan every triple ``i<j<k`` for the Jacobi identity."""
    n = g.n
    failures = []
    for i, j, k in itertools.combinations(range(n), 3):
        ei, ej, ek = (np.array([Fraction(int(t == s)) for t in range(n)], dtype=object)
                      for s in (i, j, k))
        residual = (g.bracket(g.bracket(ei, ej), ek) + g.bracket(g.bracket(ej, ek), ei)
                    + g.bracket(g.bracket(ek, ei), ej))
        if any(x != 0 for x in residual):
            failures.append(((i + 1, j + 1, k + 1), [rational_str(x) for x in residual]))
    witness = None
    if failures:
        triple, residual = failures[0]
        witness = {"triple": list(triple), "residual": residual, "count": len(failures)}
    g._validated = not failures
    return Report("jacobi", not failures, witness=witness)


def ce_differential(g: LieAlgebra, a: AlternatingForm) -> AlternatingForm:
    """Chevalley-Eilenberg differential of a left-invariant form."""
    if a.n != g.n:
        raise StructureError(f"form on R^{a.n} given to algebra of dimension {g.n}")
    n = g.n
    if a.p >= n:
        return AlternatingForm(n, a.p + 1)
    d1 = [_d_basis_covector(g, k) for k in range(n)]
    one_forms = [AlternatingForm.basis(n, k) for k in range(n)]
    out = AlternatingForm(n, a.p + 1)
    for key, value in a.items():
        for pos, k in enumerate(key):
            if d1[k].is_zero():
                continue
            left = AlternatingForm(n, 0, {(): Fraction(1)})
            for t in key[:pos]:
                left = wedge(left, one_forms[t])
            right = AlternatingForm(n, 0, {(): Fraction(1)})
            for t in key[pos + 1:]:
                right = wedge(right, one_forms[t])
            term = wedge(wedge(left, d1[k]), right)
            out = out + term * (value if pos % 2 == 0 else -value)
    return out


def ce_differential_direct(g: LieAlgebra, a: AlternatingForm) -> AlternatingForm:
    """The same differential from the evaluation formula.

    ``(da)(X_0..X_p) = sum_{i<j} (-1)^{i+j} a([X_i, X_j], X_0, ^i, ^j, ..)``.
    Slower; kept as an independent route for cross-checks.
    """
    n, p = g.n, a.p
    dense = a.dense() if p else None
    out = {}
    for key in itertools.combinations(range(n), p + 1):
        total = Fraction(0)
        for s, t in itertools.combinations(range(p + 1), 2):
            br = g.c[key[s], key[t], :]
            rest = [key[u] for u in range(p + 1) if u not in (s, t)]
            val = Fraction(0)
            for m in range(n):
                if br[m] != 0:
                    val += br[m] * (dense[(m, *rest)] if p else 0)
            total += val if (s + t) % 2 == 0 else -val
        if total != 0:
            out[key] = total
    return AlternatingForm(n, p + 1, out)


def _d_basis_covector(g: LieAlgebra, k: int) -> AlternatingForm:
    n = g.n
    return AlternatingForm(n, 2, {(i, j): -g.c[i, j, k]
                                  for i, j in itertools.combinations(range(n), 2)
                                  if g.c[i, j, k] != 0})


def transport_form(a: AlternatingForm, P: np.ndarray) -> AlternatingForm:
    """Components of ``a`` in the basis given by the columns of ``P``."""
    return pullback(a, P)


def transport_endomorphism(L: np.ndarray, P: np.ndarray) -> np.ndarray:
    return inverse(P) @ L @ P


def transport_metric(G: np.ndarray, P: np.ndarray) -> np.ndarray:
    return P.T @ G @ P


def direct_sum(*algebras: LieAlgebra, name: str = "") -> LieAlgebra:
    n = sum(g.n for g in algebras)
    c = np.empty((n, n, n), dtype=object)
    c.fill(Fraction(0))
    pos = 0
    for g in algebras:
        k = g.n
        c[pos:pos + k, pos:pos + k, pos:pos + k] = g.c
        pos += k
    return LieAlgebra.from_tensor(c, name=name)
