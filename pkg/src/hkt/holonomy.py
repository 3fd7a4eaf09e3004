"""Curvature of left-invariant connections and the infinitesimal holonomy
algebra."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import StructureError
from .exact import commutator, equal, is_zero, rank, row_reduce, trace, zeros
from .forms import AlternatingForm
from .hermitian import Connection, HermitianStructure, bismut_connection
from .report import Report


def curvature(g, conn: Connection) -> dict:
    """``R(e_i, e_j) = [G_i, G_j] - G_{[e_i, e_j]}`` for ``i < j``."""
    n = g.n
    if conn.n != n:
        raise StructureError("connection and algebra have different dimensions")
    out = {}
    for i, j in itertools.combinations(range(n), 2):
        R = commutator(conn[i], conn[j])
        for k in range(n):
            if g.c[i, j, k] != 0:
                R = R - g.c[i, j, k] * conn[k]
        out[(i, j)] = R
    return out


def _hermitian_of(h) -> HermitianStructure:
    return h if isinstance(h, HermitianStructure) else h["I"]


def bismut_flat_check(h) -> Report:
    """All ``R^B(e_i, e_j)`` vanish; a hyperhermitian input uses its ``I``."""
    hs = _hermitian_of(h)
    conn = bismut_connection(hs)
    R = curvature(hs.carrier, conn)
    bad = [(i + 1, j + 1) for (i, j), m in R.items() if not is_zero(m)]
    return Report("bismut-flat", not bad,
                  witness={"pair": list(bad[0]), "count": len(bad)} if bad else None)


@dataclass
class HolonomyAlgebra:
    basis: list
    n: int
    log: list = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, A: np.ndarray) -> bool:
        return _span_rank(self.basis + [A]) == self.dim

    def is_bracket_closed(self) -> bool:
        return all(self.contains(commutator(A, B))
                   for A, B in itertools.combinations(self.basis, 2))


def _flat(A: np.ndarray) -> np.ndarray:
    return np.array(A, dtype=object).reshape(-1)


def _span_rank(mats) -> int:
    return rank([_flat(m) for m in mats]) if mats else 0


def holonomy_algebra(g, conn: Connection) -> HolonomyAlgebra:
    """Smallest space containing every ``R(e_i, e_j)`` that is closed under
    ``A -> [G_i, A]`` and under commutators."""
    n = g.n
    log = []
    rows: list = []
    pending = [m for m in curvature(g, conn).values() if not is_zero(m)]
    basis: list = []
    steps = 0
    while pending:
        steps += 1
        if steps > n * n + 1:
            raise RuntimeError("holonomy saturation did not terminate")
        fresh = []
        for A in pending:
            candidate = row_reduce(rows + [_flat(A)])
            if len(candidate) > len(rows):
                rows = candidate
                basis.append(A)
                fresh.append(A)
        log.append({"round": steps, "dim": len(basis)})
        pending = []
        for A in fresh:
            pending += [commutator(conn[i], A) for i in range(n)]
            pending += [commutator(A, B) for B in basis]
        pending = [m for m in pending if not is_zero(m)]
    reduced = [r.reshape(n, n) for r in rows]
    return HolonomyAlgebra(reduced, n, log)


def algebra_containment(hol: HolonomyAlgebra, h, target: str) -> Report:
    """``sp``: skew and commuting with I, J; ``u``: skew and commuting with I;
    ``su``: ``u`` plus ``trace(I A) = 0``."""
    if target not in ("sp", "su", "u"):
        raise StructureError(f"unknown target {target!r}")
    G = h.G
    I = h.I if hasattr(h, "I") else h.J
    commute = [I]
    if target == "sp":
        commute.append(h.J)
    for pos, A in enumerate(hol.basis):
        if not is_zero(A.T @ G + G @ A):
            return Report(f"holonomy-in-{target}", False, witness={"element": pos, "fails": "skew"})
        for L in commute:
            if not is_zero(commutator(A, L)):
                return Report(f"holonomy-in-{target}", False,
                              witness={"element": pos, "fails": "commutation"})
        if target == "su" and trace(I @ A) != 0:
            return Report(f"holonomy-in-{target}", False, witness={"element": pos, "fails": "trace"})
    return Report(f"holonomy-in-{target}", True, notes={"dim": hol.dim})


def bismut_ricci_form(h) -> AlternatingForm:
    """``rho(X, Y) = 1/2 trace(R^B(X, Y) o J)``."""
    hs = _hermitian_of(h)
    R = curvature(hs.carrier, bismut_connection(hs))
    half = Fraction(1, 2)
    return AlternatingForm(hs.n, 2, {k: half * trace(m @ hs.J) for k, m in R.items()})


def cyt_check(h) -> Report:
    rho = bismut_ricci_form(h)
    return Report("cyt", rho.is_zero(), witness=None if rho.is_zero() else rho,
                  artifacts={"ricci": rho})
