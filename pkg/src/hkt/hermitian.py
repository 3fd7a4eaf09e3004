"""One complex structure at a time: integrability, fundamental form,
the Gauduchon line of Hermitian connections and the Bismut torsion.

A *carrier* is either a :class:`~hkt.lie.LieAlgebra` (left-invariant data on
the basis ``e_i``) or a :class:`~hkt.chart.Chart` (coordinate frame, constant
endomorphisms).  Carriers provide ``n``, ``bracket``, ``d`` and ``coerce``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import PreconditionError, StructureError
from .exact import equal, identity, inverse, is_symmetric, is_zero, rational_str, unit_vector
from .forms import AlternatingForm, act
from .report import Report

# Fundamental form convention.  "g(JX,Y)" is the default; "g(X,JY)" exists so
# the convention self-test can be shown to catch a flipped sign.
OMEGA_CONVENTION = "g(JX,Y)"


def check_complex_structure(J: np.ndarray, name: str = "J") -> None:
    n = J.shape[0]
    if J.shape != (n, n):
        raise StructureError(f"{name} is not square")
    if n % 2:
        raise StructureError(f"{name} acts on an odd-dimensional space")
    one = next(iter(J.flat)) * 0 + 1
    if not equal(J @ J, -identity(n, one)):
        raise StructureError(f"{name}^2 != -Id")


@dataclass
class HermitianStructure:
    """A carrier with a complex structure ``J`` and compatible metric ``G``."""

    carrier: object
    J: np.ndarray
    G: np.ndarray
    name: str = "J"

    def __post_init__(self):
        n = self.carrier.n
        if self.J.shape != (n, n) or self.G.shape != (n, n):
            raise StructureError("J and G must be n x n for the carrier")
        check_complex_structure(self.J, self.name)
        if not is_symmetric(self.G):
            raise StructureError("metric is not symmetric")
        if not self.carrier.is_positive_definite(self.G):
            raise StructureError("metric is not positive definite")
        if not equal(self.J.T @ self.G @ self.J, self.G):
            raise StructureError(f"metric is not {self.name}-invariant")

    @property
    def n(self):
        return self.carrier.n


@dataclass
class Connection:
    """Left-invariant connection: ``gammas[i]`` is the matrix of ``nabla_{e_i}``."""

    gammas: list
    label: str = ""

    def __getitem__(self, i):
        return self.gammas[i]

    @property
    def n(self):
        return len(self.gammas)

    def torsion(self, carrier) -> np.ndarray:
        """``T[i, j]`` is the vector ``nabla_i e_j - nabla_j e_i - [e_i, e_j]``."""
        n = self.n
        T = np.empty((n, n, n), dtype=object)
        for i in range(n):
            for j in range(n):
                T[i, j, :] = self.gammas[i][:, j] - self.gammas[j][:, i] - carrier.basis_bracket(i, j)
        return T

    def lowered_torsion(self, carrier, G) -> np.ndarray:
        T = self.torsion(carrier)
        n = self.n
        out = np.empty((n, n, n), dtype=object)
        for i in range(n):
            for j in range(n):
                out[i, j, :] = T[i, j, :] @ G
        return out

    def torsion_form(self, carrier, G) -> AlternatingForm | None:
        """The 3-form ``g(T(X, Y), Z)`` when it is totally antisymmetric, else None."""
        L = self.lowered_torsion(carrier, G)
        n = self.n
        for i, j, k in itertools.product(range(n), repeat=3):
            if L[i, j, k] != -L[i, k, j]:
                return None
        return AlternatingForm(n, 3, {key: L[key] for key in itertools.combinations(range(n), 3)})

    def is_metric(self, G) -> bool:
        return all(is_zero(G @ g + g.T @ G) for g in self.gammas)

    def preserves(self, L) -> bool:
        return all(is_zero(g @ L - L @ g) for g in self.gammas)

    def __eq__(self, other):
        return (isinstance(other, Connection) and self.n == other.n
                and all(equal(a, b) for a, b in zip(self.gammas, other.gammas)))


def nijenhuis(carrier, J: np.ndarray) -> Report:
    """``N(X,Y) = [JX,JY] - J[JX,Y] - J[X,JY] - [X,Y]`` on all basis pairs."""
    n = carrier.n
    br = carrier.bracket
    nonzero = {}
    cols = [J[:, i] for i in range(n)]
    one = carrier.one
    for i, j in itertools.combinations(range(n), 2):
        ei, ej = unit_vector(n, i, one), unit_vector(n, j, one)
        N = (br(cols[i], cols[j]) - J @ br(cols[i], ej) - J @ br(ei, cols[j])
             - br(ei, ej))
        if not is_zero(N):
            nonzero[(i + 1, j + 1)] = [str(x) for x in N]
    witness = None
    if nonzero:
        pair = next(iter(nonzero))
        witness = {"pair": list(pair), "N": nonzero[pair], "count": len(nonzero)}
    return Report("nijenhuis", not nonzero, witness=witness)


def fundamental_form(h: HermitianStructure) -> AlternatingForm:
    if OMEGA_CONVENTION == "g(JX,Y)":
        M = h.J.T @ h.G
    elif OMEGA_CONVENTION == "g(X,JY)":
        M = h.G @ h.J
    else:
        raise StructureError(f"unknown convention {OMEGA_CONVENTION!r}")
    return AlternatingForm.from_matrix(M)


def d_omega(h: HermitianStructure) -> AlternatingForm:
    return h.carrier.d(fundamental_form(h))


def dc_omega(h: HermitianStructure) -> AlternatingForm:
    """``d^c omega = -J d omega`` with ``(J a)(X,Y,Z) = a(JX,JY,JZ)``."""
    return -act(h.J, d_omega(h))


def _require_integrable(h: HermitianStructure, what: str) -> None:
    rep = nijenhuis(h.carrier, h.J)
    if not rep.verdict:
        raise PreconditionError(f"{what}: {h.name} is not integrable", rep)


def bismut_torsion(h: HermitianStructure) -> AlternatingForm:
    """``H(X,Y,Z) = d omega(JX,JY,JZ)``."""
    _require_integrable(h, "bismut_torsion")
    return act(h.J, d_omega(h))


def skt_check(h: HermitianStructure) -> Report:
    H = bismut_torsion(h)
    dH = h.carrier.d(H)
    return Report("skt", dH.is_zero(), witness=None if dH.is_zero() else dH,
                  artifacts={"H": H, "dH": dH})


def levi_civita(g, G: np.ndarray) -> Connection:
    """Koszul formula ``2g(D_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y)``."""
    n = g.n
    cg = np.empty((n, n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            cg[i, j, :] = g.c[i, j, :] @ G
    half = Fraction(1, 2)
    L = np.empty((n, n, n), dtype=object)
    for i, j, k in itertools.product(range(n), repeat=3):
        L[i, j, k] = half * (cg[i, j, k] - cg[j, k, i] + cg[k, i, j])
    conn = _raise_index(L, G, "levi-civita")
    T = conn.torsion(g)
    if not is_zero(T) or not conn.is_metric(G):
        raise AssertionError("Levi-Civita connection failed torsion-free/metric check")
    return conn


def _raise_index(L: np.ndarray, G: np.ndarray, label: str) -> Connection:
    Ginv = inverse(G)
    n = G.shape[0]
    return Connection([Ginv @ np.array(L[i].T, dtype=object) for i in range(n)], label)


def _dense3(form: AlternatingForm) -> np.ndarray:
    if form.is_zero():
        out = np.empty((form.n,) * 3, dtype=object)
        out.fill(Fraction(0))
        return out
    return form.dense()


def gauduchon_connection(h: HermitianStructure, t) -> Connection:
    """The Hermitian connection ``nabla^t`` on a Lie algebra carrier.

    ``g(D^t_X Y, Z) = g(D^LC_X Y, Z) + (t-1)/4 d^c w(X,Y,Z) + (t+1)/4 d^c w(X,JY,JZ)``.
    ``t = -1`` is Bismut, ``t = 1`` is Chern.
    """
    from .exact import rational
    t = rational(t)
    _require_integrable(h, "gauduchon_connection")
    g = h.carrier
    if not hasattr(g, "c"):
        raise StructureError("connections are only built on Lie algebra carriers")
    n = g.n
    lc = levi_civita(g, h.G)
    L_lc = np.empty((n, n, n), dtype=object)
    for i in range(n):
        L_lc[i] = (h.G @ lc[i]).T
    dc = _dense3(dc_omega(h))
    J = h.J
    dcJ = np.empty((n, n, n), dtype=object)
    for i in range(n):
        dcJ[i] = J.T @ np.array(dc[i], dtype=object) @ J
    L = L_lc + (t - 1) / 4 * dc + (t + 1) / 4 * dcJ
    conn = _raise_index(L, h.G, f"gauduchon t={rational_str(t)}")
    return conn


def bismut_connection(h: HermitianStructure) -> Connection:
    return gauduchon_connection(h, -1)


def chern_connection(h: HermitianStructure) -> Connection:
    return gauduchon_connection(h, 1)


def convention_self_test(h: HermitianStructure) -> Report:
    """Three routes to the Bismut torsion must agree exactly.

    The lowered torsion of ``nabla^{-1}``, ``d omega(J., J., J.)`` and
    ``-d^c omega``; and ``nabla^{-1}`` must be Hermitian.
    """
    conn = bismut_connection(h)
    T = conn.torsion_form(h.carrier, h.G)
    H = bismut_torsion(h)
    minus_dc = -dc_omega(h)
    hermitian = conn.is_metric(h.G) and conn.preserves(h.J)
    ok = T is not None and T == H and H == minus_dc and hermitian
    return Report("convention-self-test", ok,
                  witness=None if ok else {"skew_torsion": T is not None,
                                           "hermitian": hermitian},
                  artifacts={"H": H},
                  notes={"omega": OMEGA_CONVENTION, "dc": "-J d omega",
                         "ce": "d a(X,Y) = -a([X,Y])"})
