import pytest

from hkt.bundle import bundle_from_json
from hkt.catalog import CATALOG, catalog, entry, names
from hkt.checks import CHECKS, run_check
from hkt.errors import ParseError, StructureError
from hkt.lie import validate_jacobi
from hkt.hypercomplex import validate_hypercomplex


def test_names():
    assert names() == ["r-h7", "hopf-su2-r", "bf-8dim", "flat-r4n", "su2-levi-civita-demo"]
    with pytest.raises(StructureError):
        catalog("nope")


@pytest.mark.parametrize("name", list(CATALOG))
def test_entry_is_valid(name):
    b = catalog(name)
    assert validate_jacobi(b.algebra).verdict
    if b.hyper is not None:
        assert validate_hypercomplex(b.hyper.hc, b.algebra).verdict


@pytest.mark.parametrize("name", list(CATALOG))
def test_expected_flags_reproduce(name):
    e = entry(name)
    b = e.build()
    for check, want in e.expected.items():
        rep = run_check(check, b)
        assert bool(rep.verdict) is want, check
        if check in e.dims:
            assert rep.notes["dim"] == e.dims[check]


@pytest.mark.parametrize("name", list(CATALOG))
def test_bundle_json_roundtrip(name):
    b = catalog(name)
    back = bundle_from_json(b.to_json())
    assert back.to_json() == b.to_json()
    for check in entry(name).expected:
        assert run_check(check, back).verdict == run_check(check, b).verdict


def test_every_check_name_is_known():
    for e in CATALOG.values():
        assert set(e.expected) <= set(CHECKS)


def test_dims():
    assert catalog("bf-8dim").n == 8
    assert catalog("r-h7").n == 8
    assert catalog("hopf-su2-r").n == 4


@pytest.mark.parametrize("bad, where", [
    ({"dim": 2, "metric": [[1, 0]]}, "metric"),
    ({"dim": 2, "endos": {"Q": [[0, -1], [1, 0]]}}, "endos"),
    ({"dim": 2, "endos": {"J": [[0, 1], [1, 0]]}}, "endos"),
    ({"dim": 2, "metric": [[1, 0], [0, -1]]}, "metric"),
    ([1, 2], "$"),
])
def test_bundle_parse_errors(bad, where):
    with pytest.raises(ParseError) as info:
        bundle_from_json(bad)
    assert info.value.location == where


def test_single_structure_bundle():
    b = bundle_from_json({"dim": 2, "endos": {"J": [[0, -1], [1, 0]]}})
    assert b.hyper is None and b.hermitian is not None
    assert run_check("nijenhuis", b).verdict
