"""Concrete structures with their expected verdicts.

Every entry is rebuilt from its defining data on each call (builders are pure)
and carries the verdicts the engine must reproduce; ``regress`` turns those
into assertions.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .bundle import Bundle
from .constructions import JoyceSpec, RhoRep, bf_extend, joyce_build, left_triple
from .errors import StructureError
from .exact import identity, qmatrix, zeros
from .hypercomplex import Hypercomplex, Hyperhermitian
from .lie import LieAlgebra


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    summary: str
    builder: Callable[[], Bundle]
    expected: dict
    dims: dict = field(default_factory=dict)
    notes: tuple = ()

    def build(self) -> Bundle:
        return self.builder()

    def describe(self) -> dict:
        return {"name": self.name, "summary": self.summary,
                "expected": dict(self.expected), "dims": dict(self.dims),
                "notes": list(self.notes)}


def _algebra(n: int, table, name: str) -> LieAlgebra:
    """``table`` holds 1-based ``(x, y, out, coeff)`` rows."""
    brackets: dict = {}
    for x, y, out, coeff in table:
        i, j, c = x - 1, y - 1, Fraction(coeff)
        if i > j:
            i, j, c = j, i, -c
        brackets.setdefault((i, j), {})[out - 1] = c
    return LieAlgebra(n, brackets, name)


def _rotation(n: int, pairs) -> "np.ndarray":
    """Endomorphism with ``L e_s = v e_t`` and ``L e_t = -v e_s`` for each ``(s, t, v)``."""
    m = zeros(n)
    for s, t, v in pairs:
        m[t - 1, s - 1] = Fraction(v)
        m[s - 1, t - 1] = Fraction(-v)
    return m


def r_h7() -> Bundle:
    g = _algebra(8, [(1, 2, 6, -1), (3, 4, 6, -1), (1, 3, 7, -1), (2, 4, 7, 1),
                     (1, 4, 8, -1), (2, 3, 8, -1)], "r-h7")
    I = _rotation(8, [(1, 2, 1), (3, 4, 1), (5, 6, 1), (7, 8, 1)])
    J = _rotation(8, [(1, 3, 1), (2, 4, -1), (5, 7, 1), (6, 8, -1)])
    h = Hyperhermitian(g, Hypercomplex(I, J), identity(8), name="r-h7")
    return Bundle.from_structure(h, "r-h7")


def hopf_su2_r() -> Bundle:
    h = joyce_build(JoyceSpec(1))
    return Bundle.from_structure(h, "hopf-su2-r")


HALF = Fraction(1, 2)


def bf_rho() -> list:
    """The three generators acting on ``H`` (and zero on the centre)."""
    r1 = qmatrix([[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]) * HALF
    r2 = qmatrix([[0, 0, 1, 0], [0, 0, 0, -1], [-1, 0, 0, 0], [0, 1, 0, 0]]) * HALF
    r3 = qmatrix([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]) * HALF
    return [r1, r2, r3, zeros(4)]


def bf_base() -> Hyperhermitian:
    """su(2)+R with ``[e_1, e_2] = e_3`` normalization."""
    return joyce_build(JoyceSpec(1, scale=1))


def bf_8dim() -> Bundle:
    base = bf_base()
    h = bf_extend(base, RhoRep(base.carrier, 1, bf_rho()))
    return Bundle.from_structure(h, "bf-8dim")


def flat_r4n() -> Bundle:
    g = LieAlgebra.abelian(8)
    g.name = "flat-r4n"
    h = Hyperhermitian(g, Hypercomplex(*left_triple(2)[:2]), identity(8), name="flat-r4n")
    return Bundle.from_structure(h, "flat-r4n")


def su2_levi_civita_demo() -> Bundle:
    g = _algebra(3, [(1, 2, 3, 1), (2, 3, 1, 1), (3, 1, 2, 1)], "su2-levi-civita-demo")
    return Bundle(g, identity(3), None, g.name)


_HKT_FULL = {"jacobi": True, "hypercomplex": True, "hkt": True, "hkt-dolbeault": True,
             "strong-hkt": True, "convention": True}

CATALOG = {e.name: e for e in [
    CatalogEntry(
        "r-h7", "R x H7: nilpotent, hypercomplex, not abelian, no HKT with the identity metric",
        r_h7,
        {"jacobi": True, "hypercomplex": True, "abelian": False, "hkt": False,
         "hkt-dolbeault": False, "hyperkahler": False},
        notes=("the printed J(e_2) is labelled I(e_2); J(e_2) = -e_4 is meant",)),
    CatalogEntry(
        "hopf-su2-r", "su(2)+R with the Joyce structure and bi-invariant metric",
        hopf_su2_r,
        {**_HKT_FULL, "abelian": False, "hyperkahler": False, "bismut-flat": True,
         "holonomy": True, "cyt": True, "torsion-identity": True},
        dims={"holonomy": 0},
        notes=("su(2) normalized as [i_1,i_2] = 2 i_3 and cyclic",
               "the printed [i_2,i_3] = 2 i_4 is read as the cyclic 2 i_1")),
    CatalogEntry(
        "bf-8dim", "extension of su(2)+R by H through the given rho",
        bf_8dim,
        {**_HKT_FULL, "abelian": False, "hyperkahler": False, "bismut-flat": True,
         "holonomy": True, "cyt": True},
        dims={"holonomy": 0},
        notes=("built from the rho matrices; the printed sign of [e_1,e_8] violates Jacobi, "
               "the built value is -1/2 e_5",
               "fiber structures are right multiplications (R_i, R_j, -R_k); rho is left "
               "multiplication, so only right multiplications commute with it")),
    CatalogEntry(
        "flat-r4n", "abelian R^8 with the standard quaternionic matrices",
        flat_r4n,
        {**_HKT_FULL, "abelian": True, "hyperkahler": True, "bismut-flat": True,
         "holonomy": True, "cyt": True},
        dims={"holonomy": 0}),
    CatalogEntry(
        "su2-levi-civita-demo", "su(2) with the bi-invariant metric and no complex structure",
        su2_levi_civita_demo,
        {"jacobi": True, "holonomy": True},
        dims={"holonomy": 3}),
]}


def names() -> list:
    return list(CATALOG)


def entry(name: str) -> CatalogEntry:
    try:
        return CATALOG[name]
    except KeyError:
        raise StructureError(f"unknown catalog entry {name!r}; known: {', '.join(CATALOG)}") from None


def catalog(name: str) -> Bundle:
    return entry(name).build()
