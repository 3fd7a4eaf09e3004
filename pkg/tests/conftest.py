import random
import sys
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import strategies as st

from hkt.catalog import CATALOG
from hkt.exact import det, identity, zeros
from hkt.forms import AlternatingForm

small_q = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def forms(draw, n, p=None, max_terms=6):
    if p is None:
        p = draw(st.integers(0, n))
    keys = draw(st.lists(st.lists(st.integers(0, n - 1), min_size=p, max_size=p, unique=True),
                         max_size=max_terms))
    return AlternatingForm(n, p, {tuple(k): draw(small_q) for k in keys})


def random_form(rng: random.Random, n: int, p: int, terms: int = 4) -> AlternatingForm:
    coeffs = {}
    for _ in range(terms):
        key = tuple(rng.sample(range(n), p))
        coeffs[key] = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
    return AlternatingForm(n, p, coeffs)


def random_gl(rng: random.Random, n: int, steps: int = None) -> np.ndarray:
    """Invertible rational matrix: a product of elementary and scaling moves."""
    P = identity(n)
    for _ in range(steps or 2 * n):
        i, j = rng.sample(range(n), 2)
        E = identity(n)
        if rng.random() < 0.8:
            E[i, j] = Fraction(rng.choice([-2, -1, 1, 2]), rng.choice([1, 2]))
        else:
            E[i, i] = Fraction(rng.choice([-2, -1, 2, 3]), rng.choice([1, 2]))
        P = P @ E
    assert det(P) != 0
    return P


@pytest.fixture(scope="session")
def bundles():
    return {name: e.build() for name, e in CATALOG.items()}


@pytest.fixture(scope="session")
def hopf(bundles):
    return bundles["hopf-su2-r"]


@pytest.fixture(scope="session")
def bf8(bundles):
    return bundles["bf-8dim"]


@pytest.fixture(scope="session")
def rh7(bundles):
    return bundles["r-h7"]


def zero_matrix(n):
    return zeros(n)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
