"""Acceptance criteria, one test each.

Every test prints a single ``criterion N: PASS|FAIL`` line; the lines are
collected again in the terminal summary.  Run standalone with
``python3 tests/test_acceptance.py``.
"""
import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hkt.catalog import CATALOG, bf_base, bf_rho
from hkt.chart import ChartHyperhermitian, chart_generalized_hk, hopf_strong_hkt, z_action_invariance
from hkt.checks import RECORDED_FINGERPRINT, run_check
from hkt.cli import CheckRequest, run
from hkt.constructions import RhoRep, bf_extend
from hkt.errors import PreconditionError
from hkt.exact import identity, zeros
from hkt.hermitian import gauduchon_connection, nijenhuis
from hkt.hypercomplex import abelian_check, hkt_check, hkt_check_dolbeault, strong_hkt_check

from conftest import random_form, random_gl

RESULTS = {}


def record(n, ok, detail, seconds=None, limit=None):
    timing = "" if seconds is None else f" [{seconds:.2f}s" + (f" < {limit}s]" if limit else "]")
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail}{timing}"
    RESULTS[n] = line
    print(line)
    return ok


def timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def criterion_1():
    checks = ["jacobi", "hypercomplex", "hkt", "hkt-dolbeault", "strong-hkt", "bismut-flat",
              "holonomy", "abelian"]
    rr, secs = timed(lambda: run(CheckRequest("bf-8dim", checks)))
    got = {r.check: r for r in rr.reports}
    ok = (all(got[c].verdict for c in checks[:-1]) and not got["abelian"].verdict
          and got["holonomy"].notes["dim"] == 0 and got["holonomy"].notes["target"] == "sp"
          and got["hkt"].verdict == got["hkt-dolbeault"].verdict and rr.verdict)
    return ok, "bf-8dim: Jacobi, hypercomplex, HKT = Dolbeault, strong, Bismut flat, hol 0 in sp(2), not abelian", secs, 5


def criterion_2():
    checks = ["strong-hkt", "holonomy", "torsion-identity"]
    rr, secs = timed(lambda: run(CheckRequest("hopf-su2-r", checks)))
    got = {r.check: r for r in rr.reports}
    H = got["strong-hkt"].artifacts["H"]
    ok = (got["strong-hkt"].verdict and not H.is_zero() and got["holonomy"].notes["dim"] == 0
          and got["torsion-identity"].verdict
          and got["torsion-identity"].notes["sign"] == RECORDED_FINGERPRINT["torsion_sign"]
          == rr.fingerprint["torsion_sign"])
    sign = "-" if RECORDED_FINGERPRINT["torsion_sign"] < 0 else "+"
    return ok, f"hopf-su2-r: strong, H != 0, hol 0, H = {sign}b([X,Y],Z) on all triples", secs, 1


def criterion_3():
    def body():
        b = CATALOG["r-h7"].build()
        integrable = all(nijenhuis(b.algebra, L).verdict for _, L in b.hyper.hc.triple())
        ab = abelian_check(b.algebra, b.hyper.hc)
        hkt = hkt_check(b.hyper)
        return integrable, ab, hkt
    (integrable, ab, hkt), secs = timed(body)
    ok = integrable and not ab.verdict and not hkt.verdict and len(hkt.witness["triple"]) == 3
    return ok, f"r-h7: N = 0 for I,J,K, not abelian, no HKT (witness {hkt.witness['triple']})", secs, 2


def criterion_4():
    def body():
        base = bf_base()
        strong_base = strong_hkt_check(base).verdict
        sp_rep = RhoRep(base.carrier, 1, bf_rho())
        good = bf_extend(base, sp_rep)
        good_ok = sp_rep.sp_membership()["skew"] and strong_hkt_check(good).verdict
        bad_rep = RhoRep(base.carrier, 1, [zeros(4)] * 3 + [identity(4)])
        bad = bf_extend(base, bad_rep)
        bad_hkt = hkt_check(bad).verdict
        bad_strong = bad_hkt and strong_hkt_check(bad).verdict
        return strong_base, good_ok, bad_rep.is_skew(), bad_strong
    (strong_base, good_ok, bad_skew, bad_strong), secs = timed(body)
    ok = strong_base and good_ok and not bad_skew and not bad_strong
    return ok, "sp(1) rep on strong base gives strong; non-skew rep gives no strong HKT", secs, None


def criterion_5():
    def body():
        hopf = hopf_strong_hkt(2)
        pair = chart_generalized_hk(2)
        return hopf, pair
    (hopf, pair), secs = timed(body)
    HA, HB = pair.artifacts["H_A"], pair.artifacts["H_B"]
    ok = (hopf.verdict and hopf.notes["points_consistent"] and len(hopf.notes["point_checks"]) >= 3
          and pair.verdict and (HA + HB).is_zero() and pair.artifacts["dH_A"].is_zero()
          and pair.artifacts["dH_B"].is_zero() and pair.notes["points_consistent"]
          and len(pair.notes["point_checks"]) >= 3 and secs < 10)
    return ok, "chart k=2: strong, H+ = -H-, dH+ = dH- = 0, exact and at 3 rational points", secs, 10


def criterion_6():
    def body():
        k2 = z_action_invariance(ChartHyperhermitian(2, 4), -identity(4))
        k1 = z_action_invariance(ChartHyperhermitian(1, 4), -identity(4))
        return k2, k1
    (k2, k1), secs = timed(body)
    ok = k2.verdict and not k1.verdict and {"omega_I", "omega_J", "omega_K"} <= set(k1.witness)
    return ok, "psi = -Id, x2: invariant at k=2; Hopf forms not scale invariant at k=1", secs, None


def criterion_7():
    def body():
        names = list(CATALOG)
        bundles = {n: CATALOG[n].build() for n in names}
        hyper = [n for n in names if bundles[n].hyper is not None]
        rng = random.Random(7)
        # (a) HKT iff Dolbeault, catalog plus 20 basis changes
        a = all(hkt_check(bundles[n].hyper).verdict == hkt_check_dolbeault(bundles[n].hyper).verdict
                for n in hyper)
        for i in range(20):
            b = bundles[hyper[i % len(hyper)]]
            moved = b.transport(random_gl(rng, b.n))
            a &= hkt_check(moved.hyper).verdict == hkt_check_dolbeault(moved.hyper).verdict
        # (b) d o d = 0 on 50 random forms per algebra
        bb = True
        for n in names:
            g = bundles[n].algebra
            for t in range(50):
                form = random_form(rng, g.n, 1 + t % min(3, g.n - 1))
                bb &= g.d(g.d(form)).is_zero()
        # (c) Gauduchon connections are Hermitian
        c = True
        for n in hyper:
            for key in "IJK":
                hs = bundles[n].hyper[key]
                for t in (-1, 0, 1, 2):
                    conn = gauduchon_connection(hs, t)
                    c &= conn.is_metric(hs.G) and conn.preserves(hs.J)
        # (d) verdicts survive a random GL(n, Q) transport
        d = True
        for n in names:
            moved = bundles[n].transport(random_gl(rng, bundles[n].n))
            for check in CATALOG[n].expected:
                before, after = run_check(check, bundles[n]), run_check(check, moved)
                d &= before.verdict == after.verdict
                d &= before.notes.get("dim") == after.notes.get("dim")
        return a, bb, c, d
    (a, bb, c, d), secs = timed(body)
    ok = a and bb and c and d and secs < 60
    return ok, f"properties: hkt<->dolbeault {a}, dd=0 {bb}, hermitian nabla^t {c}, GL-invariance {d}", secs, 60


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7]


@pytest.mark.parametrize("n", range(1, 8))
def test_criterion(n):
    ok, detail, secs, limit = CRITERIA[n - 1]()
    within = limit is None or secs < limit
    record(n, ok and within, detail, secs, limit)
    assert ok, detail
    assert within, f"took {secs:.2f}s, limit {limit}s"


if __name__ == "__main__":
    results = []
    for n, fn in enumerate(CRITERIA, start=1):
        try:
            ok, detail, secs, limit = fn()
        except PreconditionError as exc:
            ok, detail, secs, limit = False, f"refused: {exc}", None, None
        results.append(record(n, ok and (limit is None or secs < limit), detail, secs, limit))
    sys.exit(0 if all(results) else 1)
