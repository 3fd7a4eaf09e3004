"""Named checks over structure bundles, and the convention fingerprint."""
from __future__ import annotations

import itertools
from fractions import Fraction

from . import hermitian
from .bundle import Bundle
from .errors import PreconditionError
from .exact import is_zero
from .hermitian import bismut_connection, bismut_torsion, convention_self_test, levi_civita, skt_check
from .holonomy import algebra_containment, bismut_flat_check, cyt_check, holonomy_algebra
from .hypercomplex import (abelian_check, hkt_check, hkt_check_dolbeault, strong_hkt_check,
                           validate_hypercomplex)
from .lie import validate_jacobi
from .report import Report


def _need_hyper(b: Bundle, check: str):
    if b.hyper is None:
        raise PreconditionError(f"{check}: subject carries no hypercomplex structure")
    return b.hyper


def _need_hermitian(b: Bundle, check: str):
    if b.hermitian is None:
        raise PreconditionError(f"{check}: subject carries no complex structure")
    return b.hermitian


def _nijenhuis(b: Bundle) -> Report:
    return hermitian.nijenhuis(b.algebra, _need_hermitian(b, "nijenhuis").J)


def _hypercomplex(b: Bundle) -> Report:
    return validate_hypercomplex(_need_hyper(b, "hypercomplex").hc, b.algebra)


def _abelian(b: Bundle) -> Report:
    return abelian_check(b.algebra, _need_hyper(b, "abelian").hc)


def _hkt(b: Bundle) -> Report:
    return hkt_check(_need_hyper(b, "hkt"))


def _dolbeault(b: Bundle) -> Report:
    return hkt_check_dolbeault(_need_hyper(b, "hkt-dolbeault"))


def _strong(b: Bundle) -> Report:
    return strong_hkt_check(_need_hyper(b, "strong-hkt"))


def _hyperkahler(b: Bundle) -> Report:
    rep = hkt_check(_need_hyper(b, "hyperkahler"))
    ok = rep.verdict and rep.artifacts["H"].is_zero()
    return Report("hyperkahler", ok, witness=None if ok else {"hkt": rep.verdict})


def _skt(b: Bundle) -> Report:
    return skt_check(_need_hermitian(b, "skt"))


def _bismut_flat(b: Bundle) -> Report:
    return bismut_flat_check(_need_hermitian(b, "bismut-flat"))


def _cyt(b: Bundle) -> Report:
    return cyt_check(_need_hermitian(b, "cyt"))


def _holonomy(b: Bundle) -> Report:
    """Bismut holonomy inside ``sp`` (triples) or ``u`` (one structure);
    Levi-Civita holonomy inside ``so`` for a bare metric."""
    if b.structure is None:
        conn = levi_civita(b.algebra, b.G)
        hol = holonomy_algebra(b.algebra, conn)
        ok = all(is_zero(A.T @ b.G + b.G @ A) for A in hol.basis)
        return Report("holonomy", ok, notes={"connection": "levi-civita", "target": "so",
                                             "dim": hol.dim})
    hs = b.hermitian
    hol = holonomy_algebra(b.algebra, bismut_connection(hs))
    target = "sp" if b.hyper is not None else "u"
    rep = algebra_containment(hol, b.hyper if b.hyper is not None else hs, target)
    rep.notes.update(connection="bismut", target=target, dim=hol.dim)
    return rep


def _convention(b: Bundle) -> Report:
    return convention_self_test(_need_hermitian(b, "convention"))


def torsion_identity(b: Bundle) -> Report:
    """``H(X,Y,Z) = s * b([X,Y],Z)`` on every basis triple, ``s`` the recorded
    fingerprint sign."""
    h = _need_hyper(b, "torsion-identity")
    rep = hkt_check(h)
    if not rep.verdict:
        raise PreconditionError("torsion-identity: structure is not HKT", rep)
    H = rep.artifacts["H"]
    g, G = b.algebra, b.G
    sign = RECORDED_FINGERPRINT["torsion_sign"]
    for i, j, k in itertools.combinations(range(g.n), 3):
        expected = sign * (g.c[i, j, :] @ G)[k]
        if H[(i, j, k)] != expected:
            return Report("torsion-identity", False,
                          witness={"triple": [i + 1, j + 1, k + 1], "H": str(H[(i, j, k)]),
                                   "expected": str(expected)},
                          notes={"sign": sign})
    return Report("torsion-identity", True, notes={"sign": sign})


CHECKS = {
    "jacobi": lambda b: validate_jacobi(b.algebra),
    "nijenhuis": _nijenhuis,
    "hypercomplex": _hypercomplex,
    "abelian": _abelian,
    "hkt": _hkt,
    "hkt-dolbeault": _dolbeault,
    "strong-hkt": _strong,
    "hyperkahler": _hyperkahler,
    "skt": _skt,
    "bismut-flat": _bismut_flat,
    "holonomy": _holonomy,
    "cyt": _cyt,
    "convention": _convention,
    "torsion-identity": torsion_identity,
}


def default_checks(b: Bundle) -> list:
    out = ["jacobi"]
    if b.hyper is not None:
        out += ["hypercomplex", "hkt", "hkt-dolbeault"]
    elif b.hermitian is not None:
        out += ["nijenhuis", "skt"]
    out.append("holonomy")
    return out


def run_check(name: str, b: Bundle) -> Report:
    rep = CHECKS[name](b)
    rep.check = name
    return rep


# ---------------------------------------------------------------------------
# convention fingerprint
# ---------------------------------------------------------------------------

# Recorded once from the self-test below; regress compares against it.
RECORDED_FINGERPRINT = {"omega": "g(JX,Y)", "dc": "-J d omega",
                        "ce": "d a(X,Y) = -a([X,Y])", "torsion_sign": -1}


def convention_fingerprint() -> dict:
    """Sign choices as resolved on the su(2)+R datum.

    ``torsion_sign`` is ``s`` in ``H(X,Y,Z) = s * b([X,Y],Z)``; the self-test
    must also pass for the fingerprint to be trusted.
    """
    from .constructions import JoyceSpec, joyce_build
    h = joyce_build(JoyceSpec(1), check=False)
    st = convention_self_test(h["I"])
    H = bismut_torsion(h["I"])
    g = h.carrier
    i, j, k = 0, 1, 2
    bracket_term = (g.c[i, j, :] @ h.G)[k]
    ratio = Fraction(H[(i, j, k)]) / bracket_term
    out = dict(st.notes)
    out["torsion_sign"] = int(ratio) if ratio in (1, -1) else str(ratio)
    out["self_test"] = bool(st.verdict)
    return out


def fingerprint_matches(fp: dict | None = None) -> bool:
    fp = fp or convention_fingerprint()
    return fp.get("self_test", False) and all(fp.get(k) == v for k, v in RECORDED_FINGERPRINT.items())
