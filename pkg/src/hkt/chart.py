"""Coordinate charts ``C^2 \\ {0} x T`` with constant hypercomplex structures.

Coordinates ``x_1..x_4`` are the quaternion ``q = x_1 + x_2 i + x_3 j + x_4 k``
(so ``z_1 = x_1 + i x_2``, ``z_2 = x_3 + i x_4``); the remaining coordinates
belong to a flat torus factor with the standard constant hyperkaehler triple.
The metric is ``|q|^{-k} Id`` on the first block and ``Id`` on the torus.
"""
from __future__ import annotations

import random
from fractions import Fraction

import numpy as np
from sympy import QQ

from .constructions import left_triple, right_triple
from .errors import PreconditionError, StructureError
from .exact import block_diag, commutator, equal, identity, is_zero, leading_minors, map_entries
from .forms import AlternatingForm, pullback, sort_with_sign
from .hypercomplex import (GHKPair, Hypercomplex, Hyperhermitian, generalized_hk_check,
                           hkt_check, validate_hypercomplex)
from .ratfunc import RadialContext, RadialFunction
from .report import Report

HOPF_DIM = 4


class Chart:
    """``R^d`` minus the origin of the first four coordinates."""

    def __init__(self, d: int, radial: int = HOPF_DIM):
        self.n = d
        self.ctx = RadialContext(d, radial)
        self.excluded_locus = f"x1=...=x{radial}=0"
        self.zero = self.ctx.zero
        self.one = self.ctx.one

    @property
    def dim(self):
        return self.n

    def coerce(self, value) -> RadialFunction:
        return self.ctx(value)

    # coordinate vector fields commute
    def bracket(self, X, Y) -> np.ndarray:
        out = np.empty(self.n, dtype=object)
        out.fill(self.zero)
        return out

    def basis_bracket(self, i, j) -> np.ndarray:
        return self.bracket(None, None)

    def d(self, a: AlternatingForm) -> AlternatingForm:
        return chart_d(a, self)

    def is_positive_definite(self, G: np.ndarray) -> bool:
        G = map_entries(G, self.coerce)
        return equal(G, G.T) and all(self.ctx.is_manifestly_positive(m)
                                     for m in leading_minors(G))

    def coerce_form(self, a: AlternatingForm) -> AlternatingForm:
        return a.map_coeffs(self.coerce)

    def __repr__(self):
        return f"Chart(d={self.n})"


def chart_d(a: AlternatingForm, chart: Chart) -> AlternatingForm:
    """Exterior derivative of a form with radial-function coefficients."""
    if a.n != chart.n:
        raise StructureError(f"form on R^{a.n} given to a chart of dimension {chart.n}")
    out: dict = {}
    for key, coeff in a.items():
        f = chart.coerce(coeff)
        for j in range(chart.n):
            sign, skey = sort_with_sign((j,) + key)
            if sign == 0:
                continue
            df = f.diff(j)
            if df == 0:
                continue
            term = df if sign > 0 else -df
            out[skey] = out[skey] + term if skey in out else term
    return AlternatingForm(chart.n, a.p + 1, out)


# ---------------------------------------------------------------------------
# structures
# ---------------------------------------------------------------------------

def hopf_family(family: str):
    """Constant triple on the ``q`` block: ``left`` is ``q -> i q`` etc.,
    ``right`` is ``q -> q i, q j, -q k``."""
    if family == "left":
        return left_triple()
    if family == "right":
        return right_triple()
    raise StructureError(f"unknown family {family!r}")


class ChartHyperhermitian(Hyperhermitian):
    """Hopf block with conformal metric ``|q|^{-k}`` times a flat torus block."""

    def __init__(self, exponent: int, torus_dim: int = 0, family: str = "left",
                 chart: Chart | None = None):
        if torus_dim % 4:
            raise StructureError("torus dimension must be a multiple of 4")
        self.exponent = int(exponent)
        self.torus_dim = torus_dim
        self.family = family
        chart = chart or Chart(HOPF_DIM + torus_dim)
        if chart.n != HOPF_DIM + torus_dim:
            raise StructureError("chart dimension does not match the blocks")
        hI, hJ, hK = hopf_family(family)
        tI, tJ, tK = left_triple(torus_dim // 4) if torus_dim else (None,) * 3
        mats = [block_diag(*(m for m in (h, t) if m is not None))
                for h, t in ((hI, tI), (hJ, tJ), (hK, tK))]
        ctx = chart.ctx
        factor = ctx.radius_power(-self.exponent)
        G = np.empty((chart.n, chart.n), dtype=object)
        G.fill(chart.zero)
        for i in range(chart.n):
            G[i, i] = factor if i < HOPF_DIM else chart.one
        super().__init__(chart, Hypercomplex(*mats), G,
                         name=f"{family}(k={self.exponent}, torus={torus_dim})")

    def forms(self) -> dict:
        return {k: self.carrier.coerce_form(v) for k, v in super().forms().items()}


def sample_points(chart: Chart, count: int = 3, seed: int = 0) -> list:
    """Random rational points whose ``q`` part has rational norm.

    Returns ``(point, radius)`` pairs.  Uses inverse stereographic projection
    of a random rational point of ``R^3`` onto the sphere of radius ``s``.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        a, b, c = (Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(3))
        s = Fraction(rng.randint(1, 9), rng.randint(1, 4))
        norm = a * a + b * b + c * c
        q = [2 * a * s / (norm + 1), 2 * b * s / (norm + 1), 2 * c * s / (norm + 1),
             (norm - 1) * s / (norm + 1)]
        rest = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(chart.n - HOPF_DIM)]
        out.append((q + rest, s))
    return out


def evaluate_form(a: AlternatingForm, chart: Chart, point, radius) -> dict:
    return {k: chart.coerce(v).evaluate(point, radius) for k, v in a.items()}


def point_checks(forms: dict, chart: Chart, count: int = 3, seed: int = 0) -> list:
    """Evaluate each named form exactly at sample points; record whether it vanishes."""
    rows = []
    for point, radius in sample_points(chart, count, seed):
        values = {name: evaluate_form(f, chart, point, radius) for name, f in forms.items()}
        rows.append({"point": [str(x) for x in point],
                     "vanishes": {name: all(v == 0 for v in vals.values())
                                  for name, vals in values.items()}})
    return rows


def _symbolic_vs_points(report_forms: dict, chart: Chart) -> tuple:
    """A symbolic zero must vanish at every point; a symbolic nonzero must not
    vanish at all of them."""
    checks = point_checks(report_forms, chart)
    consistent = all(
        all(row["vanishes"][name] for row in checks) == form.is_zero()
        for name, form in report_forms.items())
    return checks, consistent


def _hkt_strong(data: ChartHyperhermitian, check_name: str) -> Report:
    hc = validate_hypercomplex(data.hc, data.carrier)
    hkt = hkt_check(data)
    if not hkt.verdict:
        return Report(check_name, False, witness={"hypercomplex": hc.verdict, "hkt": False},
                      notes={"hkt": False})
    H = hkt.artifacts["H"]
    dH = data.carrier.d(H)
    checks, consistent = _symbolic_vs_points({"dH": dH}, data.carrier)
    strong = dH.is_zero()
    return Report(check_name, strong and hc.verdict,
                  witness=None if strong else dH,
                  artifacts={"H": H, "dH": dH},
                  notes={"hypercomplex": hc.verdict, "hkt": True, "strong": strong,
                         "hyperkahler": H.is_zero(), "exponent": data.exponent,
                         "point_checks": checks, "points_consistent": consistent})


def hopf_strong_hkt(exponent: int) -> Report:
    """Left Hopf structure on ``H \\ {0}`` with metric ``|q|^{-k}``."""
    if exponent < 0:
        raise StructureError("exponent must be non-negative")
    return _hkt_strong(ChartHyperhermitian(exponent, 0, "left"), "hopf-strong-hkt")


def hopf_exponent_sweep(exponents=range(0, 5)) -> dict:
    """Which exponents make the left Hopf structure strong HKT."""
    return {k: hopf_strong_hkt(k).verdict for k in exponents}


def product_strong_hkt(torus_dim: int, exponent: int) -> Report:
    return _hkt_strong(ChartHyperhermitian(exponent, torus_dim, "left"), "product-strong-hkt")


def chart_generalized_hk(exponent: int, families=("left", "right"), torus_dim: int = 0) -> Report:
    chart = Chart(HOPF_DIM + torus_dim)
    A = ChartHyperhermitian(exponent, torus_dim, families[0], chart)
    B = ChartHyperhermitian(exponent, torus_dim, families[1], chart)
    rep = generalized_hk_check(GHKPair(A, B))
    if rep.artifacts:
        residual = {"H_A+H_B": rep.artifacts["H_A"] + rep.artifacts["H_B"],
                    "dH_A": rep.artifacts["dH_A"], "dH_B": rep.artifacts["dH_B"]}
        checks, consistent = _symbolic_vs_points(residual, chart)
        rep.notes.update(point_checks=checks, points_consistent=consistent)
    rep.notes["families"] = list(families)
    rep.notes["exponent"] = exponent
    return rep


# ---------------------------------------------------------------------------
# Z-action
# ---------------------------------------------------------------------------

def _compose_coeff(value: RadialFunction, chart: Chart, Phi: np.ndarray, scale: Fraction):
    rf = chart.ctx.rf
    images = []
    for i in range(chart.n):
        poly = rf.ring.zero
        for j in range(chart.n):
            if Phi[i, j] != 0:
                c = Fraction(Phi[i, j])
                poly = poly + rf.poly_gens[j] * QQ(c.numerator, c.denominator)
        images.append(poly)
    a = rf.compose_linear(value.a, images)
    b = rf.compose_linear(value.b, images) * rf(scale)
    return RadialFunction(chart.ctx, a, b)


def pullback_by_map(a: AlternatingForm, chart: Chart, Phi: np.ndarray, scale: Fraction):
    """``(Phi^* a)(x) = a(Phi x)(Phi ., ..., Phi .)`` for a linear ``Phi`` whose
    ``q`` block is ``scale`` times an orthogonal matrix."""
    moved = a.map_coeffs(lambda v: _compose_coeff(chart.coerce(v), chart, Phi, scale))
    return pullback(moved, Phi)


def _finite_order(psi: np.ndarray, bound: int = 24) -> int | None:
    n = psi.shape[0]
    power = psi
    for order in range(1, bound + 1):
        if equal(power, identity(n)):
            return order
        power = power @ psi
    return None


def z_action_invariance(data: ChartHyperhermitian, psi: np.ndarray, factor: int = 2) -> Report:
    """Invariance of ``w_I, w_J, w_K`` and ``G`` under ``(p, q) -> (psi p, 2 q)``."""
    t = data.torus_dim
    psi = np.asarray(psi, dtype=object)
    if psi.shape != (t, t):
        raise StructureError(f"psi must be {t} x {t}")
    if any(Fraction(x).denominator != 1 for x in psi.flat):
        raise PreconditionError("psi must be an integer matrix")
    psi = map_entries(psi, Fraction)
    if t and not equal(psi.T @ psi, identity(t)):
        raise PreconditionError("psi is not an isometry",
                                Report("psi", False, witness={"fails": "psi^T psi != Id"}))
    order = _finite_order(psi) if t else 1
    if order is None:
        raise PreconditionError("psi does not have finite order <= 24",
                                Report("psi", False, witness={"fails": "order"}))
    if t:
        for name, L in zip("IJK", left_triple(t // 4)):
            if not is_zero(commutator(psi, L)):
                raise PreconditionError(
                    f"psi does not commute with the torus {name}",
                    Report("psi", False, witness={"fails": f"[psi, {name}] != 0"}))
    chart = data.carrier
    scale = Fraction(factor)
    Phi = block_diag(scale * identity(HOPF_DIM), psi) if t else scale * identity(HOPF_DIM)
    failures = []
    for name, w in data.forms().items():
        if not (pullback_by_map(w, chart, Phi, scale) - w).is_zero():
            failures.append(f"omega_{name}")
    G_moved = map_entries(data.G, lambda v: _compose_coeff(chart.coerce(v), chart, Phi, scale))
    if not equal(Phi.T @ G_moved @ Phi, data.G):
        failures.append("G")
    return Report("z-action-invariance", not failures, witness=failures or None,
                  notes={"psi_order": order, "exponent": data.exponent, "factor": factor})
