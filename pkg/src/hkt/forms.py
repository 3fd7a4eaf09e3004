"""Sparse alternating multilinear forms with exact coefficients."""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Iterable, Mapping

import numpy as np

from .errors import StructureError


def sort_with_sign(indices) -> tuple[int, tuple]:
    """Sort ``indices`` and return ``(sign, sorted)``; sign 0 on a repeat."""
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return 0, ()
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(idx)


class AlternatingForm:
    """A degree-``p`` alternating form on an ``n``-dimensional space.

    Coefficients are stored only on strictly increasing index tuples
    (0-based); a missing tuple means zero.  Instances are treated as
    immutable values.
    """

    __slots__ = ("n", "p", "_coeffs")
    is_form = True

    def __init__(self, n: int, p: int, coeffs: Mapping[tuple, object] | None = None):
        if not 0 <= p:
            raise StructureError(f"negative degree {p}")
        self.n = n
        self.p = p
        clean = {}
        for key, value in (coeffs or {}).items():
            key = tuple(key)
            if len(key) != p:
                raise StructureError(f"index {key} does not have length {p}")
            if any(not 0 <= i < n for i in key):
                raise StructureError(f"index {key} out of range for n={n}")
            sign, skey = sort_with_sign(key)
            if sign == 0 or value == 0:
                continue
            value = value if sign > 0 else -value
            if skey in clean:
                value = clean[skey] + value
                if value == 0:
                    del clean[skey]
                    continue
            clean[skey] = value
        self._coeffs = clean

    # -- construction -----------------------------------------------------
    @classmethod
    def zero(cls, n: int, p: int) -> "AlternatingForm":
        return cls(n, p)

    @classmethod
    def basis(cls, n: int, *indices: int, coeff=Fraction(1)) -> "AlternatingForm":
        """``coeff * e^{i1} ^ ... ^ e^{ip}`` (0-based indices)."""
        return cls(n, len(indices), {tuple(indices): coeff})

    @classmethod
    def from_covector(cls, row: Iterable) -> "AlternatingForm":
        row = list(row)
        return cls(len(row), 1, {(i,): x for i, x in enumerate(row) if x != 0})

    @classmethod
    def from_matrix(cls, m: np.ndarray) -> "AlternatingForm":
        """The 2-form with ``a(e_i, e_j) = m[i, j]``; ``m`` must be antisymmetric."""
        n = m.shape[0]
        for i in range(n):
            for j in range(i, n):
                if m[i, j] != -m[j, i]:
                    raise StructureError("matrix is not antisymmetric")
        return cls(n, 2, {(i, j): m[i, j] for i in range(n) for j in range(i + 1, n)})

    # -- access -----------------------------------------------------------
    def items(self):
        return self._coeffs.items()

    @property
    def coeffs(self) -> dict:
        return dict(self._coeffs)

    def __getitem__(self, key):
        if isinstance(key, int):
            key = (key,)
        sign, skey = sort_with_sign(key)
        if sign == 0:
            return 0
        value = self._coeffs.get(skey)
        if value is None:
            return 0
        return value if sign > 0 else -value

    def is_zero(self) -> bool:
        return not self._coeffs

    def __len__(self):
        return len(self._coeffs)

    # -- linear structure -------------------------------------------------
    def _check(self, other: "AlternatingForm"):
        if not isinstance(other, AlternatingForm):
            raise StructureError(f"expected a form, got {type(other).__name__}")
        if other.n != self.n or other.p != self.p:
            raise StructureError(
                f"shape mismatch: ({self.n},{self.p}) vs ({other.n},{other.p})")

    def __add__(self, other):
        self._check(other)
        out = dict(self._coeffs)
        for k, v in other._coeffs.items():
            out[k] = out[k] + v if k in out else v
        return AlternatingForm(self.n, self.p, out)

    def __neg__(self):
        return AlternatingForm(self.n, self.p, {k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, AlternatingForm):
            return wedge(self, scalar)
        return AlternatingForm(self.n, self.p, {k: v * scalar for k, v in self._coeffs.items()})

    def __rmul__(self, scalar):
        return AlternatingForm(self.n, self.p, {k: scalar * v for k, v in self._coeffs.items()})

    def __xor__(self, other):
        return wedge(self, other)

    def __eq__(self, other):
        if not isinstance(other, AlternatingForm):
            return NotImplemented
        if (self.n, self.p) != (other.n, other.p):
            return False
        keys = set(self._coeffs) | set(other._coeffs)
        return all(self[k] == other[k] for k in keys)

    __hash__ = None

    def map_coeffs(self, f: Callable) -> "AlternatingForm":
        return AlternatingForm(self.n, self.p, {k: f(v) for k, v in self._coeffs.items()})

    def __repr__(self):
        if not self._coeffs:
            return f"AlternatingForm(n={self.n}, p={self.p}, 0)"
        terms = " + ".join(
            f"({v})e^{''.join(str(i + 1) for i in k) if self.n < 10 else k}"
            for k, v in sorted(self._coeffs.items()))
        return f"AlternatingForm(n={self.n}, p={self.p}, {terms})"

    # -- tensor views -----------------------------------------------------
    def dense(self) -> np.ndarray:
        """Full antisymmetric array of shape ``(n,)*p``."""
        zero = next(iter(self._coeffs.values())) * 0 if self._coeffs else Fraction(0)
        out = np.empty((self.n,) * self.p, dtype=object)
        out.fill(zero)
        for key, value in self._coeffs.items():
            for perm in itertools.permutations(range(self.p)):
                sign, _ = sort_with_sign(perm)
                out[tuple(key[i] for i in perm)] = value if sign > 0 else -value
        return out


def wedge(a: AlternatingForm, b: AlternatingForm) -> AlternatingForm:
    if not isinstance(a, AlternatingForm) or not isinstance(b, AlternatingForm):
        raise StructureError("wedge expects two forms")
    if a.n != b.n:
        raise StructureError(f"dimension mismatch: {a.n} vs {b.n}")
    p = a.p + b.p
    if p > a.n:
        return AlternatingForm(a.n, p)
    out: dict = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            sign, key = sort_with_sign(ka + kb)
            if sign == 0:
                continue
            term = va * vb if sign > 0 else -(va * vb)
            out[key] = out[key] + term if key in out else term
    return AlternatingForm(a.n, p, out)


def wedge_all(forms, n: int) -> AlternatingForm:
    result = AlternatingForm(n, 0, {(): Fraction(1)})
    for f in forms:
        result = wedge(result, f)
    return result


def evaluate(a: AlternatingForm, vectors):
    """``a(v_1, ..., v_p)`` for coordinate vectors ``v_k``."""
    vectors = [np.asarray(v, dtype=object) for v in vectors]
    if len(vectors) != a.p:
        raise StructureError(f"form of degree {a.p} evaluated on {len(vectors)} vectors")
    if any(v.shape != (a.n,) for v in vectors):
        raise StructureError(f"vectors must have {a.n} entries")
    total = 0
    perms = [(sort_with_sign(perm)[0], perm) for perm in itertools.permutations(range(a.p))]
    for key, value in a.items():
        minor = 0
        for sign, perm in perms:
            prod = 1
            for slot, k in enumerate(perm):
                prod = prod * vectors[slot][key[k]]
                if prod == 0:
                    break
            minor = minor + (prod if sign > 0 else -prod)
        total = total + value * minor
    return total


def pullback(a: AlternatingForm, P: np.ndarray) -> AlternatingForm:
    """``(P^* a)(v_1, ..., v_p) = a(P v_1, ..., P v_p)``."""
    P = np.asarray(P, dtype=object)
    if P.shape != (a.n, a.n):
        raise StructureError(f"pullback by a {P.shape} matrix on n={a.n}")
    rows = [AlternatingForm.from_covector(P[i, :]) for i in range(a.n)]
    out = AlternatingForm(a.n, a.p)
    for key, value in a.items():
        term = wedge_all((rows[i] for i in key), a.n)
        out = out + term * value
    return out


def act(L: np.ndarray, a: AlternatingForm) -> AlternatingForm:
    """``(L a)(X, Y, ...) = a(LX, LY, ...)``; an alias of :func:`pullback`."""
    return pullback(a, L)


def form_to_json(a: AlternatingForm, scalar_to_json: Callable = None) -> dict:
    from .exact import rational_str
    enc = scalar_to_json or rational_str
    return {
        "n": a.n,
        "p": a.p,
        "coeffs": [{"idx": [i + 1 for i in k], "c": enc(v)} for k, v in sorted(a.items())],
    }


def form_from_json(data: dict, scalar_from_json: Callable = None) -> AlternatingForm:
    from .exact import rational
    dec = scalar_from_json or rational
    return AlternatingForm(
        data["n"], data["p"],
        {tuple(i - 1 for i in t["idx"]): dec(t["c"]) for t in data.get("coeffs", [])})
