"""Command-line interface: ``orderpoly compute | verify | scan``.

Every command prints one JSON object per line on stdout.  Exit codes:
0 pass, 1 theorem finding, 2 unreadable input, 3 precondition violated.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .errors import OrderPolyError, ParseError, PreconditionViolated, TheoremViolation
from .order import order_polynomial_binom, strict_order_polynomial_binom
from .psi import chromatic, delta_histogram, delta_poly, graph_defect, psi, witnesses
from .relabel import theorem_defect
from .scan import scan
from .structures import AcyclicDigraph, LabeledGraph
from .suites import ALIASES, SUITES, get_suite, run_suite
from .textio import dumps, load

EXIT_OK, EXIT_FINDING, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3

WHAT = ("chromatic", "psi", "omega", "strict-omega", "delta", "witnesses", "defect")


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _read(path: str):
    try:
        return load(path)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    except ParseError:
        raise
    except OrderPolyError as exc:
        raise ParseError(str(exc)) from exc


def _both(p) -> dict:
    return {"binom": p.to_json(), "monomial": p.to_monomial().to_json()}


def compute(obj, what: str) -> dict:
    if what == "chromatic":
        if not isinstance(obj, LabeledGraph):
            raise PreconditionViolated("chromatic needs a graph")
        return {"monomial": chromatic(obj).to_json()}
    if what == "psi":
        return _both(psi(obj))
    if what in ("omega", "strict-omega"):
        if not isinstance(obj, AcyclicDigraph):
            raise PreconditionViolated(f"{what} needs a digraph")
        f = order_polynomial_binom if what == "omega" else strict_order_polynomial_binom
        return _both(f(obj))
    if what == "delta":
        return {"delta": delta_poly(obj).to_json(), "histogram": delta_histogram(obj)}
    if what == "witnesses":
        return witnesses(obj).to_json()
    if what == "defect":
        if obj.n < 3:
            raise PreconditionViolated("defect needs at least 3 vertices")
        d = graph_defect(obj) if isinstance(obj, LabeledGraph) else theorem_defect(obj)
        return {"d": d.vector(), **_both(d)}
    raise PreconditionViolated(f"unknown quantity {what!r}")


def _alpha(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma-separated integers") from None


def cmd_compute(args) -> int:
    obj = _read(args.path)
    t0 = time.perf_counter()
    rep = {"command": "compute", "what": args.what, "instance": dumps(obj)}
    try:
        rep["result"] = compute(obj, args.what)
    except TheoremViolation as exc:
        rep["findings"] = [exc.to_record()]
        _emit(_timed(rep, args, t0))
        return EXIT_FINDING
    _emit(_timed(rep, args, t0))
    return EXIT_OK


def cmd_verify(args) -> int:
    obj = _read(args.path)
    t0 = time.perf_counter()
    s = get_suite(args.theorem)
    params = {}
    for name in s.params:
        v = getattr(args, name, None)
        if v is not None:
            params[name] = v
    extra = {k for k in ("vertex", "m", "alpha") if getattr(args, k) is not None} - set(params)
    if extra:
        raise PreconditionViolated(f"{s.name} does not take {', '.join(sorted(extra))}")
    try:
        res = run_suite(s.name, obj, **params)
        findings = res.findings
        results = res.results
    except TheoremViolation as exc:
        findings, results = [exc.to_record()], {}
    rep = {
        "command": "verify",
        "theorem": s.name,
        "instance": dumps(obj),
        "params": {k: list(v) if isinstance(v, tuple) else v for k, v in sorted(params.items())},
        "status": "finding" if findings else "pass",
        "results": results,
        "findings": findings,
    }
    _emit(_timed(rep, args, t0))
    return EXIT_FINDING if findings else EXIT_OK


def cmd_scan(args) -> int:
    t0 = time.perf_counter()
    rep = scan(args.cls, args.order, args.check, jobs=args.jobs, up_to=args.up_to,
               pool=args.pool, max_findings=args.max_findings)
    rep = {"command": "scan", **rep}
    _emit(_timed(rep, args, t0))
    return EXIT_FINDING if rep["total_findings"] else EXIT_OK


def _timed(rep: dict, args, t0: float) -> dict:
    if getattr(args, "timing", False):
        rep["timing_seconds"] = round(time.perf_counter() - t0, 6)
    return rep


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="orderpoly", description="Psi polynomials, order polynomials and witness triples.")
    p.add_argument("--timing", action="store_true", help="include wall-clock time in reports")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="print one polynomial or set for an instance")
    c.add_argument("path")
    c.add_argument("--what", choices=WHAT, required=True)
    c.set_defaults(func=cmd_compute)

    names = sorted(set(SUITES) | set(ALIASES))
    v = sub.add_parser("verify", help="run one check suite on an instance")
    v.add_argument("path")
    v.add_argument("--theorem", choices=names, required=True)
    v.add_argument("--vertex", type=int)
    v.add_argument("--m", type=int, help="large label for the large-relabel suite")
    v.add_argument("--alpha", type=_alpha, help="sink-elimination ordering, e.g. 2,1,3")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("scan", help="run a check suite over every small instance")
    s.add_argument("--class", dest="cls", choices=("graphs", "digraphs", "trees"), required=True)
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--check", choices=names, required=True)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--up-to", action="store_true", help="include every smaller order too")
    s.add_argument("--pool", type=int, help="digraph labels come from 1..POOL (default: the limit)")
    s.add_argument("--max-findings", type=int, default=10)
    s.set_defaults(func=cmd_scan)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"orderpoly: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except TheoremViolation as exc:
        _emit({"command": args.command, "findings": [exc.to_record()]})
        return EXIT_FINDING
    except OrderPolyError as exc:
        print(f"orderpoly: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
