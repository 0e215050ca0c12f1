"""Named check suites, one instance at a time.

A suite takes a parsed object and optional parameters and returns results,
findings and counters.  The same suites back ``verify`` (one instance) and
``scan`` (a whole class), so every scan finding can be replayed through
``verify`` with the recorded parameters.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

from .errors import (
    ConjectureCounterexample,
    FormulaMismatch,
    HypothesisNotMet,
    IffViolation,
    NotATree,
    PreconditionViolated,
    TheoremViolation,
)
from .gn import (
    caterpillar_labeling,
    end_vertex_reduction,
    gn_membership,
    is_caterpillar,
    is_complete_multipartite,
    multipartite_random_check,
    structured_membership,
    vanishing_characterization,
)
from .order import (
    order_polynomial,
    order_polynomial_binom,
    reciprocity_check,
    strict_order_polynomial,
    strict_order_polynomial_binom,
)
from .psi import (
    chromatic,
    chromatic_interpolated,
    delta_poly,
    digraph_witnesses_literal,
    psi,
    psi_decomposition_check,
    verify_graph_identity,
    witnesses,
)
from .relabel import (
    algorithm_A,
    d_interpretation_check,
    delta_diff_large_relabel,
    delta_diff_turning,
    delta_insertion_poly,
    insertion_context,
    large_labels,
    n_set,
    relabel_by_L,
    sink_elimination_orderings,
    sink_elimination_sequence,
    theorem_defect,
    turning_vertex,
)
from .structures import AcyclicDigraph, LabeledGraph
from .textio import dumps


@dataclass
class SuiteResult:
    results: dict = field(default_factory=dict)
    findings: list[dict] = field(default_factory=list)
    stats: Counter = field(default_factory=Counter)

    def add(self, exc: TheoremViolation, **params) -> None:
        rec = exc.to_record()
        if params:
            rec["params"] = {k: list(v) if isinstance(v, tuple) else v for k, v in sorted(params.items())}
        self.findings.append(rec)


@dataclass(frozen=True)
class Suite:
    name: str
    target: str  # "graph", "digraph" or "tree"
    run: Callable[..., SuiteResult]
    params: tuple[str, ...] = ()


SUITES: dict[str, Suite] = {}
ALIASES = {"identity-iff": "identity", "thnew2": "defect"}


def suite(name: str, target: str, params: tuple[str, ...] = ()):
    def wrap(fn):
        SUITES[name] = Suite(name, target, fn, params)
        return fn

    return wrap


def get_suite(name: str) -> Suite:
    return SUITES[ALIASES.get(name, name)]


def run_suite(name: str, obj, **params) -> SuiteResult:
    s = get_suite(name)
    want = LabeledGraph if s.target in ("graph", "tree") else AcyclicDigraph
    if not isinstance(obj, want):
        raise PreconditionViolated(f"suite {s.name!r} expects a {s.target}")
    if s.target == "tree" and not obj.is_tree():
        raise NotATree("input is not a tree")
    out = s.run(obj, **params)
    out.stats["instances"] += 1
    out.stats["findings"] += len(out.findings)
    return out


# ---------------------------------------------------------------------------
# graphs


@suite("identity", "graph")
def _identity(g: LabeledGraph) -> SuiteResult:
    out = SuiteResult()
    rep = verify_graph_identity(g)
    out.results = rep.to_json()
    for rec in rep.findings:
        out.findings.append(rec)
    if chromatic(g) != chromatic_interpolated(g):
        out.add(FormulaMismatch("deletion-contraction disagrees with counted colorings", dumps(g)))
    out.stats["identity_holds"] += rep.holds
    out.stats["witness_free"] += not rep.witnesses
    return out


@suite("decomposition", "graph")
def _decomposition(g: LabeledGraph) -> SuiteResult:
    rep = psi_decomposition_check(g)
    out = SuiteResult(rep.to_json())
    if not rep.holds:
        out.add(FormulaMismatch("sum over acyclic orientations failed", dumps(g), report=rep.to_json()))
    out.stats["orientations"] += rep.orientations
    return out


@suite("characterization", "graph")
def _characterization(g: LabeledGraph) -> SuiteResult:
    out = SuiteResult()
    try:
        ok = vanishing_characterization(g)
        out.results["witness_free"] = ok
        out.stats["witness_free"] += ok
    except TheoremViolation as exc:
        out.add(exc)
    try:
        rows = end_vertex_reduction(g)
        out.results["end_vertex_reduction"] = [list(r) for r in rows]
        out.stats["end_vertex_cases"] += len(rows)
    except TheoremViolation as exc:
        out.add(exc)
    return out


@suite("membership", "graph")
def _membership(g: LabeledGraph) -> SuiteResult:
    out = SuiteResult()
    inst = dumps(g)
    try:
        w = gn_membership(g)
    except TheoremViolation as exc:
        out.add(exc)
        return out
    out.results = w.to_json()
    out.stats["members"] += w.member
    if w.member:
        for u in g.vertices:
            if not gn_membership(g.delete_vertex(u)).member:
                out.add(TheoremViolation("a vertex-deleted subgraph of a member is not a member", inst, u=u))
    comps = g.components()
    if len(comps) > 1:
        parts = all(gn_membership(g.induced_subgraph(c)).member for c in comps)
        if parts != w.member:
            out.add(IffViolation("membership of a disconnected graph differs from its components", inst))
    if is_complete_multipartite(g):
        out.stats["complete_multipartite"] += 1
        if not (w.member and multipartite_random_check(g)):
            out.add(TheoremViolation("complete multipartite graph has a labeling with witnesses", inst))
    try:
        sr = structured_membership(g)
        out.results["structured"] = sr.to_json()
        out.stats["structured"] += 1
        if not w.member:
            out.add(TheoremViolation("structured labeling found but search says non-member", inst))
    except HypothesisNotMet:
        pass
    except TheoremViolation as exc:
        out.add(exc)
    return out


# ---------------------------------------------------------------------------
# digraphs


@suite("defect", "digraph")
def _defect(d: AcyclicDigraph) -> SuiteResult:
    out = SuiteResult()
    W = witnesses(d)
    out.results["witnesses"] = W.to_json()
    out.stats["witness_free"] += not W
    if d.n < 3:
        if psi(d) != order_polynomial_binom(d) or W:
            out.add(TheoremViolation("small digraph with Psi != Omega", dumps(d)))
        return out
    try:
        df = theorem_defect(d)
        out.results["defect"] = df.to_json()
        out.stats["nonzero_defect"] += not df.is_zero()
    except TheoremViolation as exc:
        out.add(exc)
    return out


@suite("stan1", "digraph")
def _stan1(d: AcyclicDigraph) -> SuiteResult:
    out = SuiteResult()
    inst = dumps(d)
    equal = psi(d) == order_polynomial_binom(d)
    W = witnesses(d)
    if W.triples != digraph_witnesses_literal(d).triples:
        out.add(TheoremViolation("two witness definitions disagree", inst))
    if not d.inversions():
        out.stats["no_inversions"] += 1
        if not equal:
            out.add(TheoremViolation("no inverted arcs but Psi != Omega", inst))
    if not W:
        out.stats["witness_free"] += 1
        if not equal:
            out.add(TheoremViolation("no witnesses but Psi != Omega", inst))
    out.results = {"psi_equals_omega": equal, "inversions": len(d.inversions()), "witnesses": len(W)}
    return out


@suite("lmap", "digraph")
def _lmap(d: AcyclicDigraph) -> SuiteResult:
    out = SuiteResult()
    inst = dumps(d)
    L = algorithm_A(d)
    out.results["L"] = {str(k): v for k, v in sorted(L.items())}
    if sorted(L.values()) != list(range(1, d.n + 1)):
        out.add(TheoremViolation("L is not a bijection onto [n]", inst))
        return out
    for a in d.vertices:
        for b in d.reach(a):
            if not L[a] < L[b]:
                out.add(TheoremViolation("reachability not respected by L", inst, a=a, b=b))
    DL = relabel_by_L(d)
    if DL.inversions():
        out.add(TheoremViolation("D_L has inverted arcs", inst))
    W = witnesses(d)
    if not W and delta_poly(d) != delta_poly(DL):
        out.add(TheoremViolation("no witnesses but Delta(D) != Delta(D_L)", inst))
    for b in d.vertices:
        for c in d.vertices:
            if b == c:
                continue
            if not d.reaches(b, c):
                N = n_set(d, c, b, L)
                if c not in N or (d.reach(c) <= d.reach(b) and N != {c}):
                    out.add(TheoremViolation("N[c,b] membership rule failed", inst, b=b, c=c))
            if d.incomparable(b, c):
                lhs = L[c] < L[b]
                rhs = min(n_set(d, c, b, L)) < min(n_set(d, b, c, L))
                if lhs != rhs:
                    out.add(IffViolation("L order vs N-set minima failed", inst, b=b, c=c))
                if lhs and b < c:
                    pool = d.reach_closed(c) - d.reach_closed(b)
                    if not any((x, b, y) in W for x in pool for y in pool if x != y):
                        out.add(TheoremViolation("no witness through b from R[c] - R[b]", inst, b=b, c=c))
            if not W and b < c and not d.reaches(c, b) and not L[b] < L[c]:
                out.add(TheoremViolation("witness-free digraph with L out of order", inst, b=b, c=c))
    return out


@suite("large", "digraph", ("vertex", "m"))
def _large(d: AcyclicDigraph, vertex: int | None = None, m: int | None = None) -> SuiteResult:
    out = SuiteResult()
    rows = []
    for a in [vertex] if vertex is not None else d.sorted_vertices():
        for pi0 in d.delete_vertex(a).iter_extensions() if d.n >= 2 else ():
            try:
                delta_insertion_poly(d, insertion_context(d, a, pi0))
            except TheoremViolation as exc:
                out.add(exc, vertex=a)
        for mm in [m] if m is not None else large_labels(d, a):
            try:
                diff = delta_diff_large_relabel(d, a, mm)
                rows.append({"vertex": a, "m": mm, "delta_diff": diff.to_json()})
                out.stats["pairs"] += 1
            except TheoremViolation as exc:
                out.add(exc, vertex=a, m=mm)
    out.results["relabels"] = rows
    return out


@suite("turning", "digraph", ("vertex",))
def _turning(d: AcyclicDigraph, vertex: int | None = None) -> SuiteResult:
    out = SuiteResult()
    rows = []
    if d.n < 3:
        return out
    for a in [vertex] if vertex is not None else d.sorted_vertices():
        if not turning_vertex(d, a):
            if vertex is not None:
                raise PreconditionViolated(f"{a} is not a turning vertex")
            continue
        try:
            t = delta_diff_turning(d, a, strict=False)
        except TheoremViolation as exc:
            out.add(exc, vertex=a)
            continue
        rows.append(t.to_json())
        out.stats["pairs"] += 1
        out.stats["stretched"] += t.stretched
        if not t.iff_holds:
            out.stats["iff_failures"] += 1
            out.add(
                IffViolation("Delta unchanged by the turning relabel although W(D,a) is non-empty", dumps(d), vertex=a, r=t.r),
                vertex=a,
            )
    out.results["relabels"] = rows
    return out


@suite("gamma", "digraph", ("alpha",))
def _gamma(d: AcyclicDigraph, alpha: tuple[int, ...] | None = None) -> SuiteResult:
    out = SuiteResult()
    orders = [tuple(alpha)] if alpha is not None else list(sink_elimination_orderings(d))
    rows = []
    for al in orders:
        try:
            g = sink_elimination_sequence(d, al)
        except TheoremViolation as exc:
            out.add(exc, alpha=al)
            continue
        out.stats["sequences"] += 1
        rows.append(g.to_json())
        for step in g.step_iff_failures:
            out.stats["step_iff_failures"] += 1
            out.add(
                IffViolation("step quotient vanished although the witness count dropped", dumps(d), alpha=al, step=step),
                alpha=al,
            )
    out.results["sequences"] = rows
    return out


@suite("interpretation", "digraph", ("vertex",))
def _interpretation(d: AcyclicDigraph, vertex: int | None = None) -> SuiteResult:
    out = SuiteResult()
    rows = []
    for u in [vertex] if vertex is not None else d.sorted_vertices():
        try:
            rep = d_interpretation_check(d, u)
        except HypothesisNotMet:
            out.stats["skipped"] += 1
            continue
        except TheoremViolation as exc:
            out.add(exc, vertex=u)
            continue
        out.stats["checked"] += 1
        rows.append({"vertex": u, **rep.to_json()})
        if not rep.holds:
            out.add(FormulaMismatch("wedged-ordering counts differ from the defect", dumps(d), vertex=u, counts=rep.counts, defect=rep.defect), vertex=u)
    out.results["checks"] = rows
    return out


@suite("reciprocity", "digraph")
def _reciprocity(d: AcyclicDigraph) -> SuiteResult:
    out = SuiteResult()
    inst = dumps(d)
    p = d.closure()
    rep = reciprocity_check(p)
    out.results = rep.to_json()
    if not rep.holds:
        out.add(FormulaMismatch("strict order polynomial is not (-1)^n Omega(-x)", inst))
    if order_polynomial(p) != order_polynomial_binom(p).to_monomial():
        out.add(FormulaMismatch("descent formula disagrees with counted order-preserving maps", inst))
    if strict_order_polynomial(p) != strict_order_polynomial_binom(p).to_monomial():
        out.add(FormulaMismatch("ascent formula disagrees with counted strict maps", inst))
    return out


# ---------------------------------------------------------------------------
# trees


@suite("conjecture", "tree")
def _conjecture(t: LabeledGraph) -> SuiteResult:
    out = SuiteResult()
    member = gn_membership(t).member
    predicted = is_caterpillar(t)
    out.results = {"member": member, "predicted": predicted}
    out.stats["members"] += member
    if member != predicted:
        out.add(ConjectureCounterexample("membership differs from the core-is-a-path prediction", dumps(t), member=member))
    return out


@suite("caterpillar", "tree")
def _caterpillar(t: LabeledGraph) -> SuiteResult:
    out = SuiteResult()
    if not is_caterpillar(t):
        out.results["caterpillar"] = False
        return out
    try:
        omega = caterpillar_labeling(t)
        out.results = {"caterpillar": True, "omega": {str(k): v for k, v in sorted(omega.items())}}
        out.stats["labeled"] += 1
    except TheoremViolation as exc:
        out.add(exc)
    return out
