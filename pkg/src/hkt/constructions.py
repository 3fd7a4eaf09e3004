"""Joyce builders and sp(1)-extensions.

Quaternions act on ``H = R^4`` in the basis ``(1, i, j, k)``; ``left(q)`` and
``right(q)`` are the matrices of ``v -> q v`` and ``v -> v q``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import PreconditionError, StructureError
from .exact import block_diag, commutator, equal, identity, is_zero, qmatrix, rational, zeros
from .hypercomplex import (Hypercomplex, Hyperhermitian, hkt_check, strong_hkt_check,
                           validate_hypercomplex)
from .lie import LieAlgebra, validate_jacobi

_UNITS = {"1": 0, "i": 1, "j": 2, "k": 3}
# (a, b) -> (sign, c) with e_a e_b = sign * e_c
_TABLE = {
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def _mult_matrix(unit: str, side: str) -> np.ndarray:
    q = _UNITS[unit]
    m = zeros(4)
    for b in range(4):
        sign, c = _TABLE[(q, b)] if side == "left" else _TABLE[(b, q)]
        m[c, b] = Fraction(sign)
    return m


def left(unit: str, copies: int = 1) -> np.ndarray:
    return block_diag(*([_mult_matrix(unit, "left")] * copies))


def right(unit: str, copies: int = 1) -> np.ndarray:
    return block_diag(*([_mult_matrix(unit, "right")] * copies))


def left_triple(copies: int = 1):
    """``(L_i, L_j, L_k)``; satisfies ``L_i L_j = L_k``."""
    return left("i", copies), left("j", copies), left("k", copies)


def right_triple(copies: int = 1):
    """``(R_i, R_j, -R_k)``; right multiplications reverse products, so the
    third member is negated to keep ``IJ = K``."""
    return right("i", copies), right("j", copies), -right("k", copies)


def conjugate_triple(copies: int = 1):
    """``(-R_i, -R_j, -R_k)``: left multiplication seen through ``v -> conj(v)``."""
    return -right("i", copies), -right("j", copies), -right("k", copies)


FIBER_TRIPLES = {"left": left_triple, "right": right_triple, "conjugate": conjugate_triple}


# ---------------------------------------------------------------------------
# Joyce
# ---------------------------------------------------------------------------

@dataclass
class JoyceModule:
    block: int
    actions: tuple  # (A1, A2, A3), each 4k x 4k

    @property
    def size(self):
        return self.actions[0].shape[0]


@dataclass
class JoyceSpec:
    """``m`` su(2) blocks, an ``R^m`` summand and optional modules.

    ``scale`` is the su(2) normalization ``[i_1, i_2] = scale * i_3``.
    """

    m: int
    modules: list = field(default_factory=list)
    scale: Fraction = Fraction(2)
    abelian_dim: int | None = None

    def __post_init__(self):
        self.scale = rational(self.scale)
        if self.abelian_dim is None:
            self.abelian_dim = self.m
        if self.abelian_dim != self.m:
            raise StructureError("the abelian summand must have dimension m")
        if self.m < 1:
            raise StructureError("need at least one su(2) block")
        for mod in self.modules:
            if not 0 <= mod.block < self.m:
                raise StructureError(f"module attached to missing block {mod.block}")
            A1, A2, A3 = mod.actions
            n = A1.shape[0]
            if n % 4:
                raise StructureError("module dimension must be a multiple of 4")
            minus = -identity(n)
            if not all(equal(A @ A, minus) for A in (A1, A2, A3)) or not equal(A1 @ A2, A3):
                raise StructureError("module actions must satisfy quaternion relations")

    @classmethod
    def from_json(cls, data: dict) -> "JoyceSpec":
        modules = [JoyceModule(int(mod["block"]) - 1,
                               tuple(qmatrix(A) for A in mod["actions"]))
                   for mod in data.get("modules", [])]
        return cls(int(data["m"]), modules, rational(data.get("scale", "2")))

    def to_json(self) -> dict:
        from .exact import matrix_to_json, rational_str
        return {"m": self.m, "scale": rational_str(self.scale),
                "modules": [{"block": mod.block + 1,
                             "actions": [matrix_to_json(A) for A in mod.actions]}
                            for mod in self.modules]}


def joyce_layout(spec: JoyceSpec) -> list:
    """Basis labels: per block ``i1, i2, i3, e0``, then module vectors."""
    labels = []
    for j in range(spec.m):
        labels += [f"d{j + 1}.i1", f"d{j + 1}.i2", f"d{j + 1}.i3", f"b{j + 1}"]
    for t, mod in enumerate(spec.modules):
        labels += [f"f{t + 1}.{s + 1}" for s in range(mod.size)]
    return labels


def joyce_build(spec: JoyceSpec, check: bool = True) -> Hyperhermitian:
    """Left-invariant hypercomplex structure on ``R^m + sum su(2) + sum f_j``.

    On each 4-block ``(e0, i1, i2, i3)`` the structures are
    ``I_a e0 = i_a, I_a i_a = -e0, I_a i_b = i_c, I_a i_c = -i_b`` for
    ``(a, b, c)`` cyclic; on a module ``I_a v = [i_a, v]``.  Metric: identity.
    """
    n = 4 * spec.m + sum(mod.size for mod in spec.modules)
    brackets: dict = {}

    def put(i, j, k, v):
        if i > j:
            i, j, v = j, i, -v
        brackets.setdefault((i, j), {})
        brackets[(i, j)][k] = brackets[(i, j)].get(k, 0) + v

    for j in range(spec.m):
        base = 4 * j
        for a, b, c in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
            put(base + a, base + b, base + c, spec.scale)
    pos = 4 * spec.m
    for mod in spec.modules:
        base = 4 * mod.block
        for a, A in enumerate(mod.actions):
            for s in range(mod.size):
                for t in range(mod.size):
                    if A[t, s] != 0:
                        put(base + a, pos + s, pos + t, A[t, s])
        pos += mod.size
    g = LieAlgebra(n, brackets, name=f"joyce(m={spec.m})")
    jac = validate_jacobi(g)
    if not jac.verdict:
        raise PreconditionError("joyce_build: module action breaks the Jacobi identity", jac)

    # (i1, i2, i3, e0) ordering of the quaternion basis (1, i, j, k)
    perm = qmatrix([[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]])
    block = [perm @ L @ perm.T for L in left_triple()]
    mats = []
    for a in range(3):
        parts = [block[a]] * spec.m + [mod.actions[a] for mod in spec.modules]
        mats.append(block_diag(*parts))
    h = Hyperhermitian(g, Hypercomplex(*mats), identity(n), name=g.name)
    if check:
        _require(validate_hypercomplex(h.hc, g), "joyce_build")
        _require(hkt_check(h), "joyce_build")
        _require(strong_hkt_check(h), "joyce_build")
    return h


def _require(rep, where):
    if not rep.verdict:
        raise PreconditionError(f"{where}: {rep.check} failed", rep)


# ---------------------------------------------------------------------------
# sp(1)-extensions
# ---------------------------------------------------------------------------

@dataclass
class RhoRep:
    """A representation ``rho: g -> gl(4k, R)``, one matrix per basis vector."""

    source: LieAlgebra
    k: int
    rho: list

    def __post_init__(self):
        if len(self.rho) != self.source.n:
            raise StructureError("need one matrix per basis vector of the source")
        if any(m.shape != (4 * self.k, 4 * self.k) for m in self.rho):
            raise StructureError(f"rho matrices must be {4 * self.k} x {4 * self.k}")

    def homomorphism_report(self):
        from .report import Report
        g = self.source
        for i, j in itertools.combinations(range(g.n), 2):
            lhs = sum((g.c[i, j, t] * self.rho[t] for t in range(g.n)), zeros(4 * self.k))
            if not equal(lhs, commutator(self.rho[i], self.rho[j])):
                return Report("homomorphism", False, witness={"pair": [i + 1, j + 1]})
        return Report("homomorphism", True)

    def is_skew(self) -> bool:
        return all(is_zero(m + m.T) for m in self.rho)

    def commutes_with(self, triple) -> bool:
        return all(is_zero(commutator(m, q)) for m in self.rho for q in triple)

    def sp_membership(self) -> dict:
        """Which quaternionic multiplication ``rho`` is ``sp(k)``-linear for."""
        skew = self.is_skew()
        return {"skew": skew,
                "commutes_with_right": self.commutes_with(right_triple(self.k)),
                "commutes_with_left": self.commutes_with(left_triple(self.k))}

    def to_json(self) -> dict:
        from .exact import matrix_to_json
        return {"k": self.k, "rho": [matrix_to_json(m) for m in self.rho]}

    @classmethod
    def from_json(cls, data: dict, source: LieAlgebra) -> "RhoRep":
        return cls(source, int(data["k"]), [qmatrix(m) for m in data["rho"]])


def bf_extend(h: Hyperhermitian, rep: RhoRep, fiber: str = "right") -> Hyperhermitian:
    """``T_rho g = g + H^k`` with ``[(X,U),(Y,V)] = ([X,Y], rho_X V - rho_Y U)``.

    The fiber carries the constant hypercomplex triple ``FIBER_TRIPLES[fiber]``
    and the standard metric, orthogonal to ``g``.
    """
    g = h.carrier
    if rep.source is not g and rep.source.n != g.n:
        raise StructureError("representation is defined on a different algebra")
    hom = rep.homomorphism_report()
    if not hom.verdict:
        raise PreconditionError("bf_extend: rho is not a Lie algebra homomorphism", hom)
    n, m = g.n, 4 * rep.k
    N = n + m
    c = np.empty((N, N, N), dtype=object)
    c.fill(Fraction(0))
    c[:n, :n, :n] = g.c
    for x in range(n):
        R = rep.rho[x]
        for s in range(m):
            for t in range(m):
                if R[t, s] != 0:
                    c[x, n + s, n + t] = R[t, s]
                    c[n + s, x, n + t] = -R[t, s]
    ext = LieAlgebra.from_tensor(c, name=f"T_rho({g.name})")
    fI, fJ, fK = FIBER_TRIPLES[fiber](rep.k)
    hc = Hypercomplex(block_diag(h.I, fI), block_diag(h.J, fJ), block_diag(h.K, fK))
    return Hyperhermitian(ext, hc, block_diag(h.G, identity(m)), name=ext.name)
