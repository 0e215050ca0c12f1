"""Exhaustive scans: enumerate a class of instances and run one suite on each.

Results are merged in generation order, so the report does not depend on the
number of worker processes.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor

from .errors import LimitExceeded, PreconditionViolated
from .generate import all_graphs, digraphs_with_labels, unlabeled_trees
from .suites import get_suite, run_suite
from .textio import dumps, parse

DEFAULT_LIMITS = {"graphs": 6, "digraphs": 4, "pool": 6, "trees": 9}


def limits() -> dict[str, int]:
    """Scan bounds, each overridable through ``ORDERPOLY_LIMIT_<NAME>``."""
    out = {}
    for k, v in DEFAULT_LIMITS.items():
        raw = os.environ.get(f"ORDERPOLY_LIMIT_{k.upper()}")
        out[k] = int(raw) if raw else v
    return out


def instances(cls: str, order: int, up_to: bool = False, pool: int | None = None) -> list[str]:
    """Canonical texts of every instance in the class, in a fixed order.

    Graphs and digraphs take exactly ``order`` vertices unless ``up_to``;
    trees are always taken up to ``order`` (one per isomorphism class).
    """
    lim = limits()
    if cls == "graphs":
        if order > lim["graphs"]:
            raise LimitExceeded(f"graph scans are limited to {lim['graphs']} vertices")
        orders = range(1 if up_to else order, order + 1)
        return [dumps(g) for k in orders for g in all_graphs(k)]
    if cls == "digraphs":
        pool = lim["pool"] if pool is None else pool
        if order > lim["digraphs"] or pool > lim["pool"]:
            raise LimitExceeded(f"digraph scans are limited to {lim['digraphs']} vertices from {{1..{lim['pool']}}}")
        if order > pool:
            raise PreconditionViolated("order exceeds the label pool")
        orders = range(1 if up_to else order, order + 1)
        return [dumps(d) for k in orders for d in digraphs_with_labels(k, pool)]
    if cls == "trees":
        if order > lim["trees"]:
            raise LimitExceeded(f"tree scans are limited to {lim['trees']} vertices")
        return [dumps(t) for k in range(1, order + 1) for _, t in unlabeled_trees(k)]
    raise PreconditionViolated(f"unknown class {cls!r}")


_TARGET = {"graphs": ("graph",), "digraphs": ("digraph",), "trees": ("tree", "graph")}


def _work(job: tuple[str, str]) -> tuple[list[dict], dict]:
    check, text = job
    res = run_suite(check, parse(text))
    for rec in res.findings:
        rec.setdefault("instance", text)
    return res.findings, dict(res.stats)


def scan(cls: str, order: int, check: str, jobs: int = 1, up_to: bool = False,
         pool: int | None = None, max_findings: int = 10) -> dict:
    """Run ``check`` on every instance of ``cls``; returns a JSON-ready report."""
    try:
        s = get_suite(check)
    except KeyError:
        raise PreconditionViolated(f"unknown check {check!r}") from None
    if s.target not in _TARGET.get(cls, ()):
        raise PreconditionViolated(f"check {check!r} does not apply to {cls}")
    texts = instances(cls, order, up_to, pool)
    jobs_list = [(s.name, t) for t in texts]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_work, jobs_list, chunksize=max(1, len(jobs_list) // (8 * jobs))))
    else:
        results = [_work(j) for j in jobs_list]
    stats: Counter = Counter()
    findings: list[dict] = []
    failing = 0
    for f, st in results:
        stats.update(st)
        failing += bool(f)
        for rec in f:
            if len(findings) < max_findings:
                findings.append({"check": s.name, **rec})
    return {
        "class": cls,
        "order": order,
        "up_to": up_to or cls == "trees",
        "check": s.name,
        "instances": len(texts),
        "failing_instances": failing,
        "total_findings": stats.get("findings", 0),
        "stats": {k: v for k, v in sorted(stats.items())},
        "findings": findings,
    }
