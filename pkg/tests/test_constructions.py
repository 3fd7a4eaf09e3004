from fractions import Fraction

import pytest

from hkt.catalog import bf_base, bf_rho
from hkt.constructions import (JoyceModule, JoyceSpec, RhoRep, bf_extend, conjugate_triple,
                               joyce_build, left, left_triple, right, right_triple)
from hkt.errors import PreconditionError, StructureError
from hkt.exact import commutator, equal, identity, is_zero, zeros
from hkt.hypercomplex import (Hypercomplex, Hyperhermitian, hkt_check, strong_hkt_check,
                              validate_hypercomplex)
from hkt.lie import LieAlgebra, validate_jacobi

MINUS = -identity(4)


@pytest.mark.parametrize("triple", [left_triple, right_triple, conjugate_triple])
def test_quaternion_triples(triple):
    I, J, K = triple()
    assert all(equal(A @ A, MINUS) for A in (I, J, K))
    assert equal(I @ J, K) and equal(J @ K, I) and equal(K @ I, J)


def test_left_and_right_commute():
    for a in "ijk":
        for b in "ijk":
            assert is_zero(commutator(left(a), right(b)))


def test_left_multiplication_table():
    # i * j = k: L_i sends basis vector j (index 2) to k (index 3)
    assert left("i")[3, 2] == 1
    assert right("i")[3, 2] == -1  # j * i = -k


@pytest.mark.parametrize("m", [1, 2])
def test_joyce_blocks_strong(m):
    h = joyce_build(JoyceSpec(m))
    assert validate_jacobi(h.carrier).verdict
    rep = strong_hkt_check(h)
    assert rep.verdict and not rep.notes["hyperkahler"]


@pytest.mark.parametrize("m", [1, 2])
def test_joyce_torsion_is_bracket_form(m):
    # H(X,Y,Z) = -b([X,Y],Z) with the recorded sign
    h = joyce_build(JoyceSpec(m))
    H = hkt_check(h).artifacts["H"]
    g = h.carrier
    for key in [(i, j, k) for i in range(g.n) for j in range(i + 1, g.n) for k in range(j + 1, g.n)]:
        i, j, k = key
        assert H[key] == -(g.c[i, j, :] @ h.G)[k]


def test_joyce_su2_normalization():
    g = joyce_build(JoyceSpec(1)).carrier
    assert g.c[0, 1, 2] == 2 and g.c[1, 2, 0] == 2 and g.c[2, 0, 1] == 2
    assert g.c[0, 1, 2] == 2 * joyce_build(JoyceSpec(1, scale=1)).carrier.c[0, 1, 2]


def test_joyce_module_is_a_lie_algebra_but_not_hkt():
    spec = JoyceSpec(1, modules=[JoyceModule(0, left_triple())])
    h = joyce_build(spec, check=False)
    assert h.carrier.n == 8
    assert validate_jacobi(h.carrier).verdict
    assert validate_hypercomplex(h.hc, h.carrier).verdict
    assert not hkt_check(h).verdict
    with pytest.raises(PreconditionError):
        joyce_build(spec)


def test_joyce_module_breaking_jacobi_is_refused():
    # any quaternionic triple has [A_1, A_2] = 2 A_3, which clashes with scale 1
    bad = JoyceModule(0, left_triple())
    with pytest.raises(PreconditionError) as info:
        joyce_build(JoyceSpec(1, modules=[bad], scale=1), check=False)
    assert info.value.report.check == "jacobi"


def test_joyce_spec_validation():
    with pytest.raises(StructureError):
        JoyceSpec(0)
    with pytest.raises(StructureError):
        JoyceSpec(1, abelian_dim=2)
    with pytest.raises(StructureError):
        JoyceSpec(1, modules=[JoyceModule(0, (identity(4), identity(4), identity(4)))])
    spec = JoyceSpec(1, modules=[JoyceModule(0, left_triple())])
    again = JoyceSpec.from_json(spec.to_json())
    assert again.m == 1 and equal(again.modules[0].actions[2], left("k"))


def test_rho_is_homomorphism_and_sp_for_right():
    base = bf_base()
    rep = RhoRep(base.carrier, 1, bf_rho())
    assert rep.homomorphism_report().verdict
    sp = rep.sp_membership()
    assert sp == {"skew": True, "commutes_with_right": True, "commutes_with_left": False}


def test_bf_extension_strong():
    base = bf_base()
    h = bf_extend(base, RhoRep(base.carrier, 1, bf_rho()))
    assert validate_jacobi(h.carrier).verdict
    assert validate_hypercomplex(h.hc, h.carrier).verdict
    assert strong_hkt_check(h).verdict


def test_bf_left_fiber_is_not_integrable():
    base = bf_base()
    h = bf_extend(base, RhoRep(base.carrier, 1, bf_rho()), fiber="left")
    assert not validate_hypercomplex(h.hc, h.carrier).verdict


def test_bf_restricts_to_base_torsion():
    base = bf_base()
    h = bf_extend(base, RhoRep(base.carrier, 1, bf_rho()))
    H = hkt_check(h).artifacts["H"]
    H0 = hkt_check(base).artifacts["H"]
    for key, value in H.items():
        if max(key) < 4:
            assert H0[key] == value
    for key, value in H0.items():
        assert H[key] == value


def test_bf_zero_rep_on_flat_is_hyperkahler():
    g = LieAlgebra.abelian(4)
    base = Hyperhermitian(g, Hypercomplex(*left_triple()[:2]), identity(4))
    h = bf_extend(base, RhoRep(g, 1, [zeros(4)] * 4))
    assert h.carrier.is_abelian()
    rep = strong_hkt_check(h)
    assert rep.verdict and rep.notes["hyperkahler"]


def test_bf_non_skew_rep_is_not_strong():
    # rho(e_4) = Id on the centre: a homomorphism into gl(1,H) but not sp(1)
    base = bf_base()
    rep = RhoRep(base.carrier, 1, [zeros(4)] * 3 + [identity(4)])
    assert rep.homomorphism_report().verdict and not rep.is_skew()
    h = bf_extend(base, rep)
    hkt = hkt_check(h)
    assert not (hkt.verdict and strong_hkt_check(h).verdict)


def test_bf_refuses_non_homomorphism():
    base = bf_base()
    r = bf_rho()
    r[0] = r[0] * 2
    with pytest.raises(PreconditionError):
        bf_extend(base, RhoRep(base.carrier, 1, r))


def test_rho_shape_checks():
    base = bf_base()
    with pytest.raises(StructureError):
        RhoRep(base.carrier, 1, bf_rho()[:3])
    with pytest.raises(StructureError):
        RhoRep(base.carrier, 2, bf_rho())


def test_rho_json_roundtrip():
    base = bf_base()
    rep = RhoRep(base.carrier, 1, bf_rho())
    back = RhoRep.from_json(rep.to_json(), base.carrier)
    assert all(equal(a, b) for a, b in zip(rep.rho, back.rho))
    assert back.rho[0][3, 0] == Fraction(1, 2)
