"""Hypercomplex and hyperhermitian data, HKT and strong HKT checks,
generalized hyperkaehler pairs."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import PreconditionError, StructureError
from .exact import I_UNIT, ComplexPair, equal, identity, map_entries, unit_vector
from .forms import AlternatingForm, act
from .hermitian import HermitianStructure, fundamental_form, nijenhuis
from .report import Report


@dataclass
class Hypercomplex:
    """A triple ``(I, J, K)``.  ``K`` is recomputed as ``IJ``; a supplied
    ``K`` that disagrees is an input error."""

    I: np.ndarray
    J: np.ndarray
    K: np.ndarray | None = None

    def __post_init__(self):
        if self.I.shape != self.J.shape:
            raise StructureError("I and J have different shapes")
        IJ = self.I @ self.J
        if self.K is None:
            self.K = IJ
        elif not equal(self.K, IJ):
            raise StructureError("supplied K differs from IJ")

    @property
    def n(self):
        return self.I.shape[0]

    def triple(self):
        return (("I", self.I), ("J", self.J), ("K", self.K))


def validate_hypercomplex(h: Hypercomplex, carrier) -> Report:
    n = carrier.n
    if h.n != n:
        raise StructureError(f"structure of size {h.n} on carrier of dimension {n}")
    one = carrier.one
    minus_id = -identity(n, one)
    failures = {}
    for name, L in h.triple():
        if not equal(L @ L, minus_id):
            failures[f"{name}^2"] = "not -Id"
    for lhs, rhs, name in ((h.I @ h.J, h.K, "IJ=K"), (h.J @ h.K, h.I, "JK=I"),
                           (h.K @ h.I, h.J, "KI=J"), (h.I @ h.J + h.J @ h.I, 0 * minus_id, "IJ=-JI")):
        if not equal(lhs, rhs):
            failures[name] = "fails"
    if not failures:
        for name, L in h.triple():
            rep = nijenhuis(carrier, L)
            if not rep.verdict:
                failures[f"N_{name}"] = rep.witness
    return Report("hypercomplex", not failures, witness=failures or None)


def abelian_check(g, h: Hypercomplex) -> Report:
    """``[LX, LY] = [X, Y]`` for ``L`` in ``I, J, K`` on all basis pairs."""
    n = g.n
    for name, L in h.triple():
        for i, j in itertools.combinations(range(n), 2):
            lhs = g.bracket(L[:, i], L[:, j])
            rhs = g.basis_bracket(i, j)
            if not equal(lhs, rhs):
                return Report("abelian", False, witness={"structure": name, "pair": [i + 1, j + 1]})
    return Report("abelian", True)


class Hyperhermitian:
    """Hypercomplex structure plus a metric for which ``I, J, K`` are orthogonal."""

    def __init__(self, carrier, hc: Hypercomplex, G: np.ndarray, name: str = ""):
        self.carrier = carrier
        self.hc = hc
        self.G = G
        self.name = name
        self.structures = {key: HermitianStructure(carrier, L, G, key) for key, L in hc.triple()}

    @classmethod
    def from_matrices(cls, carrier, I, J, G, K=None, name: str = ""):
        return cls(carrier, Hypercomplex(I, J, K), G, name)

    @property
    def n(self):
        return self.carrier.n

    @property
    def I(self):
        return self.hc.I

    @property
    def J(self):
        return self.hc.J

    @property
    def K(self):
        return self.hc.K

    def __getitem__(self, key) -> HermitianStructure:
        return self.structures[key]

    def forms(self) -> dict:
        return {key: fundamental_form(s) for key, s in self.structures.items()}

    def torsions(self) -> dict:
        """``L d omega_L`` for each of ``I, J, K``."""
        out = {}
        for key, s in self.structures.items():
            out[key] = act(s.J, self.carrier.d(fundamental_form(s)))
        return out

    def __repr__(self):
        return f"Hyperhermitian(n={self.n}, name={self.name!r})"


def _first_difference(a: AlternatingForm, b: AlternatingForm):
    for key in sorted(set(dict(a.items())) | set(dict(b.items()))):
        if a[key] != b[key]:
            return [i + 1 for i in key], str(a[key]), str(b[key])
    return None


def hkt_check(h: Hyperhermitian) -> Report:
    """``I d w_I = J d w_J = K d w_K``; on success ``H`` is attached."""
    T = h.torsions()
    witness = None
    for a, b in (("I", "J"), ("I", "K")):
        diff = _first_difference(T[a], T[b])
        if diff is not None:
            triple, va, vb = diff
            witness = {"pair": f"{a}d w_{a} vs {b}d w_{b}", "triple": triple,
                       a: va, b: vb}
            break
    ok = witness is None
    return Report("hkt", ok, witness=witness,
                  artifacts={"H": T["I"]} if ok else {"H_I": T["I"], "H_J": T["J"], "H_K": T["K"]})


def _complex_d(carrier, form: AlternatingForm) -> AlternatingForm:
    re = form.map_coeffs(lambda z: z.re)
    im = form.map_coeffs(lambda z: z.im)
    dre, dim_ = carrier.d(re), carrier.d(im)
    keys = set(dict(dre.items())) | set(dict(dim_.items()))
    return AlternatingForm(form.n, form.p + 1,
                           {k: ComplexPair(dre[k], dim_[k]) for k in keys})


def type_projector(L: np.ndarray, holomorphic: bool = True) -> np.ndarray:
    """``(Id - iL)/2`` (onto (1,0)) or ``(Id + iL)/2``, applied slot-wise to forms."""
    n = L.shape[0]
    one = next(iter(L.flat)) * 0 + 1
    half = one / 2
    sign = -1 if holomorphic else 1
    Id = identity(n, one)
    return map_entries(Id, lambda x: ComplexPair(x * half, 0 * x)) + map_entries(
        L, lambda x: ComplexPair(0 * x, sign * x * half))


def hkt_check_dolbeault(h: Hyperhermitian) -> Report:
    """``d_I(w_J + i w_K) = 0``, i.e. the (3,0)-part of ``d Omega`` vanishes."""
    w = h.forms()
    zero = h.carrier.zero
    keys = set(dict(w["J"].items())) | set(dict(w["K"].items()))
    Omega = AlternatingForm(h.n, 2, {k: ComplexPair(w["J"][k] + zero, w["K"][k] + zero) for k in keys})
    P = type_projector(h.I, holomorphic=True)
    is_20 = act(P, Omega) == Omega
    dOmega = _complex_d(h.carrier, Omega)
    d30 = act(P, dOmega)
    ok = d30.is_zero()
    witness = None
    if not ok:
        key, value = next(iter(sorted(d30.items())))
        witness = {"component": [i + 1 for i in key], "value": str(value)}
    return Report("hkt-dolbeault", ok, witness=witness,
                  notes={"omega_is_type_20": is_20})


def strong_hkt_check(h: Hyperhermitian) -> Report:
    rep = hkt_check(h)
    if not rep.verdict:
        raise PreconditionError("strong_hkt_check: structure is not HKT", rep)
    H = rep.artifacts["H"]
    dH = h.carrier.d(H)
    return Report("strong-hkt", dH.is_zero(), witness=None if dH.is_zero() else dH,
                  artifacts={"H": H, "dH": dH},
                  notes={"hyperkahler": H.is_zero()})


@dataclass
class GHKPair:
    A: Hyperhermitian
    B: Hyperhermitian

    def __post_init__(self):
        if self.A.carrier is not self.B.carrier and self.A.n != self.B.n:
            raise StructureError("pair members live on different carriers")
        if not equal(self.A.G, self.B.G):
            raise StructureError("pair members must share the metric")


def generalized_hk_check(pair: GHKPair) -> Report:
    ra, rb = hkt_check(pair.A), hkt_check(pair.B)
    if not (ra.verdict and rb.verdict):
        return Report("generalized-hk", False,
                      witness={"hkt_A": ra.verdict, "hkt_B": rb.verdict})
    HA, HB = ra.artifacts["H"], rb.artifacts["H"]
    dHA, dHB = pair.A.carrier.d(HA), pair.B.carrier.d(HB)
    opposite = (HA + HB).is_zero()
    closed = dHA.is_zero() and dHB.is_zero()
    ok = opposite and closed
    witness = None if ok else {"opposite": opposite, "closed_A": dHA.is_zero(),
                               "closed_B": dHB.is_zero()}
    return Report("generalized-hk", ok, witness=witness,
                  artifacts={"H_A": HA, "H_B": HB, "dH_A": dHA, "dH_B": dHB})
