import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hkt.catalog import CATALOG
from hkt.errors import ParseError, StructureError
from hkt.exact import identity
from hkt.forms import AlternatingForm
from hkt.lie import (LieAlgebra, ce_differential, ce_differential_direct, direct_sum,
                     transport_form, validate_jacobi)

from conftest import random_form, random_gl


def brute_jacobi_ok(c, n):
    """Independent scan: sum_cyclic [[e_i, e_j], e_k] = 0 from raw constants."""
    for i, j, k in itertools.product(range(n), repeat=3):
        for out in range(n):
            total = 0
            for a, b, d in ((i, j, k), (j, k, i), (k, i, j)):
                total += sum(c[a][b][m] * c[m][d][out] for m in range(n))
            if total:
                return False
    return True


@pytest.mark.parametrize("name", list(CATALOG))
def test_catalog_jacobi_matches_brute_force(name):
    g = CATALOG[name].build().algebra
    c = [[[g.c[i, j, k] for k in range(g.n)] for j in range(g.n)] for i in range(g.n)]
    assert validate_jacobi(g).verdict == brute_jacobi_ok(c, g.n) is True


def test_printed_eight_dim_table_fails_jacobi():
    # as printed: [e1,e8] = +1/2 e5 together with the remaining rho brackets
    h = Fraction(1, 2)
    rows = [(1, 2, 3, 1), (2, 3, 1, 1), (3, 1, 2, 1),
            (1, 8, 5, h), (2, 7, 5, -h), (3, 6, 5, h), (1, 7, 6, -h), (2, 8, 6, -h),
            (3, 5, 6, h), (1, 6, 7, h), (2, 5, 7, -h), (3, 8, 7, -h), (1, 5, 8, h),
            (2, 6, 8, h), (3, 7, 8, -h)]
    br = {}
    for x, y, out, v in rows:
        i, j, v = (x - 1, y - 1, Fraction(v)) if x < y else (y - 1, x - 1, -Fraction(v))
        br.setdefault((i, j), {})[out - 1] = v
    rep = validate_jacobi(LieAlgebra(8, br))
    assert not rep.verdict and rep.witness["triple"]


def test_built_eight_dim_signs(bf8):
    g = bf8.algebra
    assert g.c[0, 7, 4] == Fraction(-1, 2)
    assert g.c[0, 4, 7] == Fraction(1, 2)
    assert g.c[0, 5, 6] == Fraction(1, 2)
    assert g.c[0, 6, 5] == Fraction(-1, 2)
    assert g.c[0, 1, 2] == 1


def test_jacobi_failure_has_witness():
    g = LieAlgebra(3, {(0, 1): {2: 1}, (1, 2): {1: 1}})
    rep = validate_jacobi(g)
    assert not rep.verdict
    assert len(rep.witness["triple"]) == 3


def test_bracket_antisymmetry_and_input_checks():
    g = LieAlgebra(3, {(0, 1): {2: 1}})
    assert g.c[1, 0, 2] == -1
    with pytest.raises(StructureError):
        LieAlgebra(3, {(1, 0): {2: 1}})
    with pytest.raises(StructureError):
        LieAlgebra(3, {(0, 1): {3: 1}})


def test_one_form_differential_convention():
    # d e^3 (e_1, e_2) = -e^3([e_1, e_2])
    g = LieAlgebra(3, {(0, 1): {2: 1}})
    assert g.d(AlternatingForm.basis(3, 2)) == AlternatingForm.basis(3, 0, 1, coeff=Fraction(-1))


@pytest.mark.parametrize("name", list(CATALOG))
def test_d_squared_zero_random_forms(name):
    g = CATALOG[name].build().algebra
    rng = random.Random(name)
    for trial in range(50):
        p = 1 + trial % min(3, g.n - 1)
        a = random_form(rng, g.n, p)
        assert g.d(g.d(a)).is_zero()


@pytest.mark.parametrize("name", list(CATALOG))
def test_ce_matches_direct_formula(name):
    g = CATALOG[name].build().algebra
    rng = random.Random(1)
    for p in range(0, min(4, g.n)):
        a = random_form(rng, g.n, p) if p else AlternatingForm(g.n, 0, {(): Fraction(3)})
        assert ce_differential(g, a) == ce_differential_direct(g, a)


@given(st.integers(0, 10_000))
@settings(max_examples=15, deadline=None)
def test_d_commutes_with_transport(seed):
    rng = random.Random(seed)
    g = CATALOG["hopf-su2-r"].build().algebra
    P = random_gl(rng, g.n)
    a = random_form(rng, g.n, 2)
    h = g.transport(P)
    assert h.d(transport_form(a, P)) == transport_form(g.d(a), P)
    assert validate_jacobi(h).verdict


def test_transport_identity_is_noop():
    g = CATALOG["bf-8dim"].build().algebra
    assert (g.transport(identity(8)).c == g.c).all()


def test_json_roundtrip_and_errors():
    g = CATALOG["r-h7"].build().algebra
    back = LieAlgebra.from_json(g.to_json())
    assert (back.c == g.c).all()
    with pytest.raises(ParseError, match="brackets\\[0\\]"):
        LieAlgebra.from_json({"dim": 2, "brackets": [{"x": 2, "y": 1, "out": {"1": "1"}}]})
    with pytest.raises(ParseError):
        LieAlgebra.from_json({"dim": 2, "brackets": [{"x": 1, "y": 2, "out": {"1": "0.5"}}]})
    with pytest.raises(ParseError, match="dim"):
        LieAlgebra.from_json({"brackets": []})


def test_direct_sum_and_abelian():
    su2 = CATALOG["su2-levi-civita-demo"].build().algebra
    s = direct_sum(su2, LieAlgebra.abelian(1))
    assert s.n == 4 and validate_jacobi(s).verdict
    assert LieAlgebra.abelian(3).is_abelian()
    assert not su2.is_abelian()
