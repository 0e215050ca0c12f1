"""The delta statistic, Psi, witness triples, chromatic polynomials.

``Psi(G, x)`` sums ``C(x + delta(pi), n)`` over all orderings of a graph;
``Psi(D, x)`` does the same over the linear extensions of an acyclic digraph.
Both are stored as a delta histogram, which is simultaneously the coefficient
vector of ``Psi`` in the binomial basis and of ``Delta(z)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial
from typing import Iterator, Union

from .errors import IffViolation, NegativeCoefficient, NotRepresentable, TheoremViolation, UnknownVertex
from .order import order_polynomial_binom, strict_order_polynomial_binom
from .polys import BinomPoly, RatPoly, ZPoly, interpolate, monomial_to_binom
from .structures import AcyclicDigraph, LabeledGraph, Ordering
from .textio import dumps

Context = Union[LabeledGraph, AcyclicDigraph]


def _vertices(ctx: Context) -> list[int]:
    return list(ctx.vertices) if isinstance(ctx, LabeledGraph) else ctx.sorted_vertices()


def delta_pair(ctx: Context, u: int, v: int) -> int:
    """1 if ``u < v`` or ``u -> v`` is an arc / ``uv`` an edge, else 0."""
    if isinstance(ctx, LabeledGraph):
        if not (1 <= u <= ctx.n and 1 <= v <= ctx.n):
            raise UnknownVertex((u, v))
        return int(u < v or ctx.has_edge(u, v))
    if u not in ctx.vertices or v not in ctx.vertices:
        raise UnknownVertex((u, v))
    return int(u < v or (u, v) in ctx.arcs)


def delta_ordering(ctx: Context, pi: Ordering) -> int:
    return sum(delta_pair(ctx, a, b) for a, b in zip(pi, pi[1:]))


def _weight_matrix(ctx: Context, verts: list[int]) -> list[list[int]]:
    return [[0 if u == v else delta_pair(ctx, u, v) for v in verts] for u in verts]


def heap_delta_histogram(g: LabeledGraph) -> list[int]:
    """Delta histogram over all ``n!`` orderings.

    Orderings are produced by Heap's algorithm; each step is a single swap,
    so only the (at most four) adjacent pairs touching the swapped slots are
    re-scored.
    """
    n = g.n
    hist = [0] * max(n, 1)
    if n == 0:
        return [1]
    verts = list(range(1, n + 1))
    w = _weight_matrix(g, verts)
    a = list(range(n))
    cur = sum(w[a[k]][a[k + 1]] for k in range(n - 1))
    hist[cur] += 1
    c = [0] * n
    i = 1
    while i < n:
        if c[i] < i:
            p = 0 if i % 2 == 0 else c[i]
            q = i
            touched = {k for k in (p - 1, p, q - 1, q) if 0 <= k < n - 1}
            cur -= sum(w[a[k]][a[k + 1]] for k in touched)
            a[p], a[q] = a[q], a[p]
            cur += sum(w[a[k]][a[k + 1]] for k in touched)
            hist[cur] += 1
            c[i] += 1
            i = 1
        else:
            c[i] = 0
            i += 1
    return hist


def naive_delta_histogram(g: LabeledGraph) -> list[int]:
    hist = [0] * max(g.n, 1)
    for pi in permutations(range(1, g.n + 1)):
        hist[delta_ordering(g, pi)] += 1
    return hist


def digraph_delta_histogram(d: AcyclicDigraph) -> list[int]:
    """Delta histogram over ``OP(D)`` (cached on the digraph)."""
    hit = d._cache.get("hist")
    if hit is not None:
        return list(hit)
    verts = d.sorted_vertices()
    n = len(verts)
    idx = {v: i for i, v in enumerate(verts)}
    w = _weight_matrix(d, verts)
    pred = [0] * n
    for u, v in d.arcs:
        pred[idx[v]] |= 1 << idx[u]
    hist = [0] * max(n, 1)
    full = (1 << n) - 1

    def rec(used: int, last: int, acc: int):
        if used == full:
            hist[acc] += 1
            return
        for j in range(n):
            bit = 1 << j
            if not used & bit and pred[j] & used == pred[j]:
                rec(used | bit, j, acc + (w[last][j] if last >= 0 else 0))

    if n == 0:
        hist = [1]
    else:
        rec(0, -1, 0)
    d._cache["hist"] = tuple(hist)
    return hist


def delta_histogram(ctx: Context) -> list[int]:
    if isinstance(ctx, LabeledGraph):
        return heap_delta_histogram(ctx)
    return digraph_delta_histogram(ctx)


def psi(ctx: Context) -> BinomPoly:
    n = ctx.n
    return BinomPoly(n, dict(enumerate(delta_histogram(ctx))))


def psi_graph(g: LabeledGraph) -> BinomPoly:
    return psi(g)


def psi_digraph(d: AcyclicDigraph) -> BinomPoly:
    return psi(d)


def delta_poly(ctx: Context) -> ZPoly:
    """``Delta(z) = sum_pi z^delta(pi)``."""
    return ZPoly.from_histogram(delta_histogram(ctx))


def psi_from_delta(p: ZPoly, n: int) -> BinomPoly:
    return BinomPoly(n, p.coeffs)


# ---------------------------------------------------------------------------
# witness triples


@dataclass(frozen=True)
class WitnessSet:
    triples: frozenset[tuple[int, int, int]]
    kind: str  # "graph" or "digraph"

    def __bool__(self) -> bool:
        return bool(self.triples)

    def __len__(self) -> int:
        return len(self.triples)

    def __iter__(self) -> Iterator[tuple[int, int, int]]:
        return iter(sorted(self.triples))

    def __contains__(self, item) -> bool:
        return tuple(sorted(item)) in self.triples

    def containing(self, u: int) -> "WitnessSet":
        return WitnessSet(frozenset(t for t in self.triples if u in t), self.kind)

    def to_json(self) -> dict:
        return {"kind": self.kind, "triples": [list(t) for t in sorted(self.triples)]}


def witnesses(ctx: Context) -> WitnessSet:
    """``W(G)`` or ``W(D)``.

    Graph: ``a<b<c`` with ``ac`` the only edge among the three.
    Digraph: ``(c, a)`` an arc, ``c`` does not reach ``b``, ``b`` does not reach ``a``.
    """
    out = set()
    if isinstance(ctx, LabeledGraph):
        for a, c in ctx.edges:
            na, nc = ctx.neighborhood(a), ctx.neighborhood(c)
            for b in range(a + 1, c):
                if b not in na and b not in nc:
                    out.add((a, b, c))
        return WitnessSet(frozenset(out), "graph")
    for c, a in ctx.arcs:
        if c < a:
            continue
        for b in ctx.vertices:
            if a < b < c and not ctx.reaches(c, b) and not ctx.reaches(b, a):
                out.add((a, b, c))
    return WitnessSet(frozenset(out), "digraph")


def witnesses_at(d: Context, u: int) -> WitnessSet:
    """``W(D, u)``."""
    return witnesses(d).containing(u)


# ---------------------------------------------------------------------------
# chromatic polynomials


@lru_cache(maxsize=None)
def _chromatic_coeffs(nverts: int, edges: frozenset) -> tuple[int, ...]:
    if not edges:
        return (0,) * nverts + (1,)
    e = min(edges, key=lambda t: (t[0], t[1]))
    u, v = e
    rest = edges - {e}
    deleted = _chromatic_coeffs(nverts, rest)
    merged = set()
    for x, y in rest:
        x = u if x == v else x
        y = u if y == v else y
        if x != y:
            merged.add((min(x, y), max(x, y)))
    contracted = _chromatic_coeffs(nverts - 1, frozenset(merged))
    out = list(deleted)
    for k, c in enumerate(contracted):
        out[k] -= c
    return tuple(out)


def chromatic(g: LabeledGraph) -> RatPoly:
    """Chromatic polynomial by deletion-contraction."""
    return RatPoly(_chromatic_coeffs(g.n, g.edges))


def count_colorings(g: LabeledGraph, k: int) -> int:
    """Proper colorings with ``k`` colors, by backtracking."""
    n = g.n
    col = [0] * (n + 1)

    def rec(v: int) -> int:
        if v > n:
            return 1
        total = 0
        for c in range(1, k + 1):
            if all(col[w] != c for w in g.neighborhood(v) if w < v):
                col[v] = c
                total += rec(v + 1)
        col[v] = 0
        return total

    return rec(1)


def chromatic_interpolated(g: LabeledGraph) -> RatPoly:
    return interpolate([(k, count_colorings(g, k)) for k in range(0, g.n + 1)], g.n)


def acyclic_orientations(g: LabeledGraph) -> list[AcyclicDigraph]:
    """All acyclic orientations, by orienting edges one at a time.

    An edge ``u-v`` may be oriented ``u -> v`` only if ``v`` cannot already
    reach ``u``.
    """
    edges = sorted(g.edges)
    verts = list(g.vertices)
    out: list[AcyclicDigraph] = []
    reach = {v: {v} for v in verts}  # reflexive reach sets
    arcs: list[tuple[int, int]] = []

    def orient(u: int, v: int):
        saved = {x: set(s) for x, s in reach.items()}
        for x in verts:
            if u in reach[x]:
                reach[x] |= reach[v]
        return saved

    def rec(k: int):
        nonlocal reach
        if k == len(edges):
            out.append(AcyclicDigraph(verts, arcs))
            return
        a, b = edges[k]
        for u, v in ((a, b), (b, a)):
            if u not in reach[v]:
                saved = orient(u, v)
                arcs.append((u, v))
                rec(k + 1)
                arcs.pop()
                reach = saved

    rec(0)
    return out


# ---------------------------------------------------------------------------
# identity checks


@dataclass
class GraphIdentityReport:
    holds: bool
    psi: BinomPoly
    reciprocal_chromatic: RatPoly
    witnesses: WitnessSet
    defect: BinomPoly | None
    findings: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.findings

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "psi": self.psi.to_json(),
            "psi_monomial": self.psi.to_monomial().to_json(),
            "reciprocal_chromatic": self.reciprocal_chromatic.to_json(),
            "witnesses": self.witnesses.to_json(),
            "defect": None if self.defect is None else self.defect.to_json(),
        }


def graph_defect(g: LabeledGraph) -> BinomPoly:
    """``Psi(G,x) - (-1)^n chi(G,-x)`` in the degree-(n-2) binomial basis."""
    n = g.n
    diff = psi_graph(g).to_monomial() - chromatic(g).reciprocal(n)
    try:
        return monomial_to_binom(diff, n - 2)
    except NotRepresentable as exc:
        raise TheoremViolation(f"defect not representable: {exc}", dumps(g)) from exc


def verify_graph_identity(g: LabeledGraph) -> GraphIdentityReport:
    """Check ``Psi(G) == (-1)^n chi(G,-x)`` against ``W(G)``.

    For ``n >= 3`` the defect must have non-negative coefficients in the
    degree-(n-2) basis and vanish exactly when there are no witnesses.
    """
    n = g.n
    ps = psi_graph(g)
    rc = chromatic(g).reciprocal(n)
    W = witnesses(g)
    holds = ps.to_monomial() == rc
    findings: list[dict] = []
    defect = None
    if n >= 3:
        try:
            defect = graph_defect(g)
        except TheoremViolation as exc:
            findings.append(exc.to_record())
        else:
            if not defect.nonnegative():
                findings.append(NegativeCoefficient("negative defect coefficient", dumps(g), defect=defect).to_record())
            if defect.is_zero() != (not W):
                findings.append(IffViolation("defect vanishes iff W(G) empty failed", dumps(g), defect=defect, witnesses=W).to_record())
    elif holds != (not W):
        findings.append(IffViolation("identity iff W(G) empty failed", dumps(g)).to_record())
    return GraphIdentityReport(holds, ps, rc, W, defect, findings)


@dataclass
class DecompositionReport:
    holds: bool
    orientations: int
    extension_counts: list[int]
    partition_ok: bool
    psi_sum_ok: bool
    stanley_sum_ok: bool
    chromatic_sum_ok: bool
    orientation_count_ok: bool

    def to_json(self) -> dict:
        return dict(self.__dict__)


def psi_decomposition_check(g: LabeledGraph) -> DecompositionReport:
    """Orderings split over acyclic orientations; Psi and Omega sums agree.

    Checks: the extension sets of the orientations partition all ``n!``
    orderings; ``Psi(G) = sum Psi(D)``; ``(-1)^n chi(G,-x) = sum Omega(D-bar)``;
    ``chi(G) = sum strict Omega(D-bar)``; ``|AO(G)| = (-1)^n chi(G,-1)``.
    """
    n = g.n
    aos = acyclic_orientations(g)
    seen: dict[Ordering, int] = {}
    counts = []
    partition_ok = True
    for k, d in enumerate(aos):
        exts = list(d.iter_extensions())
        counts.append(len(exts))
        for pi in exts:
            if pi in seen:
                partition_ok = False
            seen[pi] = k
    partition_ok &= len(seen) == factorial(n)
    psi_sum = BinomPoly(n)
    om_sum = RatPoly()
    strict_sum = RatPoly()
    for d in aos:
        psi_sum = psi_sum + psi_digraph(d)
        om_sum = om_sum + order_polynomial_binom(d).to_monomial()
        strict_sum = strict_sum + strict_order_polynomial_binom(d).to_monomial()
    chi = chromatic(g)
    psi_ok = psi_sum == psi_graph(g)
    stanley_ok = om_sum == chi.reciprocal(n)
    chrom_ok = strict_sum == chi
    count_ok = len(aos) == (-1) ** n * chi(-1)
    holds = partition_ok and psi_ok and stanley_ok and chrom_ok and count_ok
    return DecompositionReport(holds, len(aos), counts, partition_ok, psi_ok, stanley_ok, chrom_ok, count_ok)


def digraph_witnesses_literal(d: AcyclicDigraph) -> WitnessSet:
    """``W(D)`` straight from the definition (incomparability form)."""
    out = set()
    for a, b, c in combinations(d.sorted_vertices(), 3):
        if (c, a) in d.arcs and d.incomparable(a, b) and d.incomparable(c, b):
            out.add((a, b, c))
    return WitnessSet(frozenset(out), "digraph")
