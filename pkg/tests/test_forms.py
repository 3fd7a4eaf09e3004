import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hkt.errors import StructureError
from hkt.exact import qmatrix, qvector
from hkt.forms import (AlternatingForm, evaluate, form_from_json, form_to_json, pullback,
                       sort_with_sign, wedge)

from conftest import forms, small_q

N = 5
vectors = st.lists(small_q, min_size=N, max_size=N).map(qvector)
matrices = st.lists(st.lists(small_q, min_size=N, max_size=N), min_size=N, max_size=N).map(qmatrix)


def test_sort_with_sign():
    assert sort_with_sign((2, 0, 1)) == (1, (0, 1, 2))
    assert sort_with_sign((1, 0)) == (-1, (0, 1))
    assert sort_with_sign((1, 1))[0] == 0


def test_storage_is_signed_and_sparse():
    a = AlternatingForm(4, 2, {(1, 0): 3, (2, 3): 0})
    assert dict(a.items()) == {(0, 1): -3}
    assert a[(1, 0)] == 3 and a[(0, 0)] == 0


def test_shape_errors():
    with pytest.raises(StructureError):
        AlternatingForm(3, 2, {(0, 3): 1})
    with pytest.raises(StructureError):
        AlternatingForm(3, 1) + AlternatingForm(3, 2)


def test_basis_wedge():
    e = [AlternatingForm.basis(3, i) for i in range(3)]
    assert (e[1] ^ e[0]) == AlternatingForm.basis(3, 0, 1, coeff=Fraction(-1))
    assert (e[0] ^ e[0]).is_zero()


@given(forms(N), forms(N))
@settings(max_examples=80, deadline=None)
def test_wedge_graded_commutative(a, b):
    sign = (-1) ** (a.p * b.p)
    assert wedge(a, b) == wedge(b, a) * sign


@given(forms(N, max_terms=3), forms(N, max_terms=3), forms(N, max_terms=3))
@settings(max_examples=50, deadline=None)
def test_wedge_associative(a, b, c):
    assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))


@given(forms(N, 3), st.lists(vectors, min_size=3, max_size=3), st.permutations(range(3)))
@settings(max_examples=60, deadline=None)
def test_evaluate_alternating(a, vs, perm):
    sign, _ = sort_with_sign(perm)
    assert evaluate(a, [vs[i] for i in perm]) == sign * evaluate(a, vs)


@given(forms(N, 2), st.lists(vectors, min_size=2, max_size=2))
@settings(max_examples=60, deadline=None)
def test_dense_matches_evaluate(a, vs):
    D = a.dense()
    direct = sum(D[i, j] * vs[0][i] * vs[1][j] for i in range(N) for j in range(N))
    assert direct == evaluate(a, vs)


@given(forms(N, 2), matrices, matrices)
@settings(max_examples=40, deadline=None)
def test_pullback_functorial(a, P, Q):
    # (PQ)^* = Q^* P^*
    assert pullback(a, P @ Q) == pullback(pullback(a, P), Q)


@given(forms(N, 2), matrices, st.lists(vectors, min_size=2, max_size=2))
@settings(max_examples=40, deadline=None)
def test_pullback_definition(a, P, vs):
    assert evaluate(pullback(a, P), vs) == evaluate(a, [P @ v for v in vs])


@given(forms(N, 1, 3), forms(N, 2, 3), matrices)
@settings(max_examples=40, deadline=None)
def test_pullback_respects_wedge(a, b, P):
    assert pullback(wedge(a, b), P) == wedge(pullback(a, P), pullback(b, P))


@given(forms(N))
def test_json_roundtrip(a):
    assert form_from_json(form_to_json(a)) == a


def test_from_matrix_requires_antisymmetry():
    with pytest.raises(StructureError):
        AlternatingForm.from_matrix(qmatrix([[0, 1], [1, 0]]))
