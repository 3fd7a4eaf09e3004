"""Command-line front end.

Exit codes: 0 all verdicts as expected, 1 a verdict mismatch, 2 unparseable
input, 3 a check refused on a precondition.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .bundle import Bundle, bundle_from_json, load_bundle, read_json, write_json
from .catalog import CATALOG, entry
from .checks import CHECKS, convention_fingerprint, default_checks, fingerprint_matches, run_check
from .errors import ParseError, PreconditionError, StructureError
from .exact import qmatrix
from .report import Report

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_REFUSED = 0, 1, 2, 3


@dataclass
class CheckRequest:
    subject: str
    checks: list = field(default_factory=list)
    output: str = "text"

    def __post_init__(self):
        unknown = [c for c in self.checks if c not in CHECKS]
        if unknown:
            raise ParseError(f"unknown checks {unknown}; known: {', '.join(CHECKS)}", "--checks")
        if self.output not in ("text", "json"):
            raise ParseError(f"unknown output mode {self.output!r}")


@dataclass
class RunReport:
    subject: str
    reports: list
    expected: dict
    seconds: float
    fingerprint: dict
    mismatches: list = field(default_factory=list)
    version: str = __version__

    @property
    def verdict(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {"subject": self.subject, "verdict": self.verdict, "version": self.version,
                "seconds": round(self.seconds, 3), "fingerprint": self.fingerprint,
                "mismatches": self.mismatches,
                "reports": [dict(r.to_json(), expected=self.expected.get(r.check))
                            for r in self.reports]}

    def lines(self) -> list:
        out = []
        for r in self.reports:
            exp = self.expected.get(r.check)
            mark = "ok " if exp is None or exp == r.verdict else "BAD"
            extra = f" dim={r.notes['dim']}" if "dim" in r.notes else ""
            want = "" if exp is None else f" (expected {str(exp).lower()})"
            out.append(f"  [{mark}] {r.check:<16} {str(bool(r.verdict)).lower()}{want}{extra}")
        status = "PASS" if self.verdict else "FAIL: " + "; ".join(self.mismatches)
        out.append(f"{self.subject}: {status} ({self.seconds:.2f}s)")
        return out


def resolve_subject(subject: str) -> tuple:
    """``(bundle, expected, dims)``; catalog names win over paths.  A file may
    embed ``expected``/``dims`` as written by ``catalog show --json``."""
    if subject in CATALOG:
        e = entry(subject)
        return e.build(), dict(e.expected), dict(e.dims)
    data = read_json(subject)
    bundle = bundle_from_json(data, name=Path(subject).stem)
    expected = data.get("expected")
    if expected is not None and not (isinstance(expected, dict)
                                     and all(isinstance(v, bool) for v in expected.values())):
        raise ParseError("'expected' must map check names to booleans", "expected")
    return bundle, expected, dict(data.get("dims") or {})


def run(req: CheckRequest, fingerprint: dict | None = None) -> RunReport:
    start = time.perf_counter()
    bundle, expected, dims = resolve_subject(req.subject)
    checks = req.checks or (list(expected) if expected else default_checks(bundle))
    reports = [run_check(c, bundle) for c in checks]
    mismatches = []
    if expected is None:
        expected = {}
        mismatches = [f"{r.check} is false" for r in reports if not r.verdict]
    else:
        mismatches = [f"{r.check}: got {bool(r.verdict)}, expected {expected[r.check]}"
                      for r in reports if r.check in expected and bool(r.verdict) != expected[r.check]]
        for r in reports:
            if r.check in dims and r.notes.get("dim") != dims[r.check]:
                mismatches.append(f"{r.check}: dim {r.notes.get('dim')}, expected {dims[r.check]}")
    return RunReport(req.subject, reports, expected, time.perf_counter() - start,
                     fingerprint if fingerprint is not None else convention_fingerprint(),
                     mismatches)


# ---------------------------------------------------------------------------
# chart suite
# ---------------------------------------------------------------------------

def chart_reports(kind: str, exponent: int = 2, torus_dim: int = 4, psi=None,
                  families=("left", "right")) -> Report:
    from . import chart
    if kind == "hopf":
        return chart.hopf_strong_hkt(exponent)
    if kind == "product":
        return chart.product_strong_hkt(torus_dim, exponent)
    if kind == "ghk":
        return chart.chart_generalized_hk(exponent, tuple(families))
    if kind == "mapping-torus":
        psi = qmatrix(psi) if psi is not None else None
        data = chart.ChartHyperhermitian(exponent, psi.shape[0] if psi is not None else torus_dim)
        if psi is None:
            from .exact import identity
            psi = identity(data.torus_dim)
        return chart.z_action_invariance(data, psi)
    raise StructureError(f"unknown chart check {kind!r}")


# Expected chart verdicts at the regression exponents; k=1 is the negative control.
CHART_SUITE = [
    ("hopf", {"exponent": 0}, True),
    ("hopf", {"exponent": 1}, False),
    ("hopf", {"exponent": 2}, True),
    ("product", {"exponent": 2, "torus_dim": 4}, True),
    ("product", {"exponent": 1, "torus_dim": 4}, False),
    ("ghk", {"exponent": 0}, True),
    ("ghk", {"exponent": 1}, False),
    ("ghk", {"exponent": 2}, True),
    ("mapping-torus", {"exponent": 2, "psi": [[-1 if i == j else 0 for j in range(4)]
                                              for i in range(4)]}, True),
    ("mapping-torus", {"exponent": 1, "torus_dim": 4}, False),
]


def regress() -> tuple:
    """Every catalog entry against its expectations, then the chart suite."""
    fp = convention_fingerprint()
    lines, failures = [], []
    if not fingerprint_matches(fp):
        failures.append("convention fingerprint")
        lines.append(f"convention fingerprint: FAIL {fp}")
    else:
        lines.append(f"convention fingerprint: ok {fp}")
    runs = []
    for name in CATALOG:
        try:
            rr = run(CheckRequest(name), fp)
        except PreconditionError as exc:
            failures.append(name)
            lines.append(f"{name}: REFUSED {exc}")
            continue
        runs.append(rr)
        lines += rr.lines()
        if not rr.verdict:
            failures.append(name)
    for kind, kwargs, want in CHART_SUITE:
        label = f"chart {kind} " + " ".join(f"{k}={v}" for k, v in kwargs.items() if k != "psi")
        rep = chart_reports(kind, **kwargs)
        ok = bool(rep.verdict) == want and rep.notes.get("points_consistent", True)
        lines.append(f"  [{'ok ' if ok else 'BAD'}] {label}: {str(bool(rep.verdict)).lower()}"
                     f" (expected {str(want).lower()})")
        if not ok:
            failures.append(label)
    lines.append("regress: PASS" if not failures else "regress: FAIL " + ", ".join(failures))
    return not failures, lines, runs


# ---------------------------------------------------------------------------
# argparse
# ---------------------------------------------------------------------------

def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hkt", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"hkt {__version__}")
    sub = p.add_subparsers(dest="cmd", required=True)

    v = sub.add_parser("validate", help="parse a structure file and check Jacobi/integrability")
    v.add_argument("file")
    v.add_argument("--json", action="store_true")

    c = sub.add_parser("check", help="run checks on a catalog entry or structure file")
    c.add_argument("subject")
    c.add_argument("--checks", default="", help=f"comma list from: {', '.join(CHECKS)}")
    c.add_argument("--json", action="store_true")

    cat = sub.add_parser("catalog", help="list or dump catalog entries")
    catsub = cat.add_subparsers(dest="action", required=True)
    catsub.add_parser("list")
    show = catsub.add_parser("show")
    show.add_argument("name")
    show.add_argument("--json", action="store_true")

    b = sub.add_parser("build", help="run a builder and write a structure file")
    bsub = b.add_subparsers(dest="builder", required=True)
    bj = bsub.add_parser("joyce")
    bj.add_argument("spec")
    bj.add_argument("-o", "--output", required=True)
    bb = bsub.add_parser("bf-extend")
    bb.add_argument("base")
    bb.add_argument("rho")
    bb.add_argument("--fiber", default="right", choices=["right", "left", "conjugate"])
    bb.add_argument("-o", "--output", required=True)

    ch = sub.add_parser("chart", help="exact checks on coordinate charts")
    chsub = ch.add_subparsers(dest="action", required=True)
    cv = chsub.add_parser("verify")
    cv.add_argument("kind", choices=["hopf", "product", "ghk", "mapping-torus", "sweep"])
    cv.add_argument("--exponent", type=int, default=2)
    cv.add_argument("--torus-dim", type=int, default=4)
    cv.add_argument("--psi", help="JSON file with an integer matrix (or {\"psi\": matrix})")
    cv.add_argument("--families", default="left,right")
    cv.add_argument("--max-exponent", type=int, default=4)
    cv.add_argument("--json", action="store_true")

    r = sub.add_parser("regress", help="catalog expectations plus the chart suite")
    r.add_argument("--json", action="store_true")
    return p


def _emit(obj, as_json: bool, text: str):
    print(json.dumps(obj, indent=2) if as_json else text)


def _cmd_validate(args) -> int:
    bundle = load_bundle(args.file)
    checks = ["jacobi"]
    if bundle.hyper is not None:
        checks.append("hypercomplex")
    elif bundle.hermitian is not None:
        checks.append("nijenhuis")
    reports = [run_check(c, bundle) for c in checks]
    ok = all(r.verdict for r in reports)
    _emit({"subject": args.file, "verdict": ok, "reports": [r.to_json() for r in reports]},
          args.json, "\n".join(f"{r.check}: {str(bool(r.verdict)).lower()}" for r in reports))
    return EXIT_OK if ok else EXIT_MISMATCH


def _cmd_check(args) -> int:
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    rr = run(CheckRequest(args.subject, checks, "json" if args.json else "text"))
    _emit(rr.to_json(), args.json, "\n".join(rr.lines()))
    return EXIT_OK if rr.verdict else EXIT_MISMATCH


def _cmd_catalog(args) -> int:
    if args.action == "list":
        for name, e in CATALOG.items():
            print(f"{name:<22} {e.summary}")
        return EXIT_OK
    e = entry(args.name)
    data = e.build().to_json()
    data["expected"] = e.describe()["expected"]
    data["dims"] = dict(e.dims)
    data["notes"] = list(e.notes)
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        print(f"{e.name}: {e.summary}")
        print(f"  dim {data['dim']}, {len(data['brackets'])} nonzero brackets")
        for k, v in e.expected.items():
            print(f"  expect {k} = {str(v).lower()}")
        for note in e.notes:
            print(f"  note: {note}")
    return EXIT_OK


def _cmd_build(args) -> int:
    from .constructions import JoyceSpec, RhoRep, bf_extend, joyce_build
    if args.builder == "joyce":
        data = read_json(args.spec)
        try:
            spec = JoyceSpec.from_json(data)
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed Joyce spec: {exc}", args.spec) from exc
        h = joyce_build(spec)
    else:
        base = load_bundle(args.base)
        if base.hyper is None:
            raise ParseError("base must carry I and J", args.base)
        try:
            rep = RhoRep.from_json(read_json(args.rho), base.algebra)
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed representation: {exc}", args.rho) from exc
        h = bf_extend(base.hyper, rep, args.fiber)
    bundle = Bundle.from_structure(h, Path(args.output).stem)
    write_json(bundle.to_json(), args.output)
    print(f"wrote {args.output} (dim {bundle.n})")
    return EXIT_OK


def _cmd_chart(args) -> int:
    from . import chart
    if args.kind == "sweep":
        sweep = chart.hopf_exponent_sweep(range(0, args.max_exponent + 1))
        strong = [k for k, ok in sweep.items() if ok]
        _emit({"sweep": {str(k): v for k, v in sweep.items()}, "strong": strong}, args.json,
              "\n".join(f"k={k}: strong={str(v).lower()}" for k, v in sweep.items()))
        return EXIT_OK
    psi = None
    if args.psi:
        data = read_json(args.psi)
        psi = data["psi"] if isinstance(data, dict) else data
        if not isinstance(psi, list):
            raise ParseError("psi must be a matrix", args.psi)
    rep = chart_reports(args.kind, args.exponent, args.torus_dim, psi,
                        [f.strip() for f in args.families.split(",")])
    text = f"{rep.check}: {str(bool(rep.verdict)).lower()}"
    if "points_consistent" in rep.notes:
        text += f" (point checks consistent: {str(rep.notes['points_consistent']).lower()})"
    _emit(rep.to_json(), args.json, text)
    return EXIT_OK if rep.verdict else EXIT_MISMATCH


def _cmd_regress(args) -> int:
    ok, lines, runs = regress()
    if args.json:
        print(json.dumps({"verdict": ok, "runs": [r.to_json() for r in runs], "log": lines},
                         indent=2))
    else:
        print("\n".join(lines))
    return EXIT_OK if ok else EXIT_MISMATCH


COMMANDS = {"validate": _cmd_validate, "check": _cmd_check, "catalog": _cmd_catalog,
            "build": _cmd_build, "chart": _cmd_chart, "regress": _cmd_regress}


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return COMMANDS[args.cmd](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        if exc.report is not None and exc.report.witness is not None:
            print(f"witness: {json.dumps(exc.report.to_json()['witness'])}", file=sys.stderr)
        return EXIT_REFUSED
    except StructureError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
