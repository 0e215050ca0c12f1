"""Graphs that admit a labeling with no witness triple.

``G`` is a member when some bijection ``omega: V -> [n]`` makes
``W(G_omega)`` empty.  Membership depends only on the isomorphism class.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .errors import (
    HypothesisNotMet,
    IffViolation,
    LimitExceeded,
    NotATree,
    NotCaterpillar,
    TheoremViolation,
)
from .generate import unlabeled_trees
from .psi import witnesses
from .structures import LabeledGraph
from .textio import dumps

DEFAULT_LIMIT = 9


def vanishing_characterization(g: LabeledGraph) -> bool:
    """Every edge ``ac`` (``a < c``) sees each label strictly between as a neighbour of ``a`` or ``c``."""
    for a, c in g.edges:
        cover = g.neighborhood(a) | g.neighborhood(c)
        if any(b not in cover for b in range(a + 1, c)):
            ok = False
            break
    else:
        ok = True
    if ok != (not witnesses(g)):
        raise IffViolation("edge-cover test disagrees with W(G)", dumps(g))
    return ok


def _checked(g: LabeledGraph, omega: dict[int, int], what: str) -> dict[int, int]:
    if witnesses(g.relabel(omega)):
        raise TheoremViolation(f"{what} labeling leaves witness triples", dumps(g), omega=omega)
    return omega


@dataclass
class RelabelWitness:
    omega: dict[int, int] | None
    searched: int

    @property
    def member(self) -> bool:
        return self.omega is not None

    def to_json(self) -> dict:
        return {
            "member": self.member,
            "omega": None if self.omega is None else {str(k): v for k, v in sorted(self.omega.items())},
            "searched": self.searched,
        }


def gn_membership(g: LabeledGraph, limit: int = DEFAULT_LIMIT) -> RelabelWitness:
    """Backtracking search for ``omega`` with ``W(G_omega)`` empty.

    Labels ``1, 2, ...`` are handed out in order, each to some unplaced
    vertex (smallest vertex first).  When a vertex receives label ``k``,
    every edge to an earlier vertex is complete and all labels between
    its ends are already placed, so the edge is checked at once.  The
    first success is the least labeling in the order of ``omega^-1``.
    """
    n = g.n
    if n > limit:
        raise LimitExceeded(f"membership search limited to {limit} vertices")
    at: list[int] = []  # at[k-1] = vertex carrying label k
    label: dict[int, int] = {}
    searched = 0

    def fits(v: int, k: int) -> bool:
        Nv = g.neighborhood(v)
        for w in Nv:
            lw = label.get(w)
            if lw is None:
                continue
            Nw = g.neighborhood(w)
            for b in range(lw + 1, k):
                x = at[b - 1]
                if x not in Nv and x not in Nw:
                    return False
        return True

    def rec() -> bool:
        nonlocal searched
        searched += 1
        k = len(at) + 1
        if k > n:
            return True
        for v in g.vertices:
            if v in label or not fits(v, k):
                continue
            label[v] = k
            at.append(v)
            if rec():
                return True
            at.pop()
            del label[v]
        return False

    if rec():
        return RelabelWitness(_checked(g, dict(label), "search"), searched)
    return RelabelWitness(None, searched)


def is_complete_multipartite(g: LabeledGraph) -> bool:
    """Non-adjacency is an equivalence relation (the complement is a union of cliques)."""
    for u in g.vertices:
        same = {v for v in g.vertices if v != u and not g.has_edge(u, v)}
        for v in same:
            other = {w for w in g.vertices if w != v and not g.has_edge(v, w)}
            if (same - {v}) | {u} != other:
                return False
    return True


def multipartite_random_check(g: LabeledGraph, trials: int = 20, seed: int = 0) -> bool:
    """For a complete multipartite ``g``, random relabelings all leave ``W`` empty."""
    rng = random.Random(seed)
    verts = list(g.vertices)
    for _ in range(trials):
        img = verts[:]
        rng.shuffle(img)
        if witnesses(g.relabel(dict(zip(verts, img)))):
            return False
    return True


def complete_multipartite(parts) -> LabeledGraph:
    """``K_{p1,...,pr}`` with parts filled by consecutive labels."""
    blocks, nxt = [], 1
    for p in parts:
        blocks.append(range(nxt, nxt + p))
        nxt += p
    edges = [(u, v) for A, B in combinations(blocks, 2) for u in A for v in B]
    return LabeledGraph(nxt - 1, edges)


# ---------------------------------------------------------------------------
# trees


def tree_core(t: LabeledGraph) -> list[int]:
    """Vertices of degree at least 2."""
    return [v for v in t.vertices if t.degree(v) >= 2]


def core_path(t: LabeledGraph) -> list[int] | None:
    """The core in path order, or None if the core is not a path."""
    core = tree_core(t)
    if not core:
        return []
    S = set(core)
    deg = {v: len(t.neighborhood(v) & S) for v in core}
    if any(x > 2 for x in deg.values()):
        return None
    start = min(v for v in core if deg[v] <= 1)
    path, prev = [start], None
    while True:
        nxt = [w for w in t.neighborhood(path[-1]) & S if w != prev]
        if not nxt:
            break
        prev = path[-1]
        path.append(nxt[0])
    return path if len(path) == len(core) else None


def is_caterpillar(t: LabeledGraph) -> bool:
    return t.n <= 2 or core_path(t) is not None


def caterpillar_labeling(t: LabeledGraph) -> dict[int, int]:
    """Label core vertex ``u_i`` by ``c_1+...+c_i+i`` and its leaves just below it."""
    if not t.is_tree():
        raise NotATree("input is not a tree")
    if t.n <= 2:
        return _checked(t, {v: v for v in t.vertices}, "caterpillar")
    path = core_path(t)
    if path is None:
        raise NotCaterpillar("removing the leaves does not leave a path")
    core = set(path)
    omega: dict[int, int] = {}
    nxt = 1
    for u in path:
        for leaf in sorted(w for w in t.neighborhood(u) if w not in core):
            omega[leaf] = nxt
            nxt += 1
        omega[u] = nxt
        nxt += 1
    return _checked(t, omega, "caterpillar")


def spider(legs) -> LabeledGraph:
    """A centre (label 1) with paths of the given lengths hanging off it."""
    edges, nxt = [], 2
    for length in legs:
        prev = 1
        for _ in range(length):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    return LabeledGraph(nxt - 1, edges)


@dataclass
class TreeScanReport:
    max_n: int
    rows: list[dict] = field(default_factory=list)

    @property
    def disagreements(self) -> list[dict]:
        return [r for r in self.rows if r["member"] != r["predicted"]]

    def to_json(self) -> dict:
        by_n: dict[int, dict[str, int]] = {}
        for r in self.rows:
            s = by_n.setdefault(r["n"], {"trees": 0, "members": 0, "predicted": 0})
            s["trees"] += 1
            s["members"] += r["member"]
            s["predicted"] += r["predicted"]
        return {
            "max_n": self.max_n,
            "by_order": {str(k): v for k, v in sorted(by_n.items())},
            "agreement": not self.disagreements,
            "disagreements": self.disagreements,
        }


def tree_conjecture_scan(max_n: int, limit: int = DEFAULT_LIMIT) -> TreeScanReport:
    """Compare membership with the core-is-a-path predicate on every tree up to ``max_n``.

    Disagreements are reported, never raised.
    """
    if max_n > limit:
        raise LimitExceeded(f"tree scan limited to {limit} vertices")
    rep = TreeScanReport(max_n)
    for n in range(1, max_n + 1):
        for code, t in unlabeled_trees(n):
            member = gn_membership(t, limit).member
            rep.rows.append({
                "n": n,
                "code": code,
                "instance": dumps(t),
                "member": member,
                "predicted": is_caterpillar(t),
            })
    return rep


# ---------------------------------------------------------------------------
# constructive labelings from structural hypotheses


def end_vertex_reduction(g: LabeledGraph) -> list[tuple[int, bool, bool]]:
    """For each end label ``u`` in ``{1, n}`` whose neighbours form the adjacent block
    ``{2..k}`` (or ``{k..n-1}``), compare ``W(G)`` empty with ``W(G-u)`` empty.

    Returns ``(u, W(G) empty, W(G-u) empty)`` rows; the two flags must agree.
    """
    n = g.n
    rows = []
    for u in {1, n} if n else ():
        N = sorted(g.neighborhood(u))
        if u == 1:
            ok = N == list(range(2, 2 + len(N)))
        else:
            ok = N == list(range(n - len(N), n))
        if not ok:
            continue
        a, b = not witnesses(g), not witnesses(g.delete_vertex(u))
        if a != b:
            raise IffViolation("end-vertex reduction changed W emptiness", dumps(g), u=u)
        rows.append((u, a, b))
    return sorted(rows)


@dataclass
class StructuredResult:
    hypothesis: str
    vertices: tuple[int, ...]
    omega: dict[int, int]

    def to_json(self) -> dict:
        return {
            "hypothesis": self.hypothesis,
            "vertices": list(self.vertices),
            "omega": {str(k): v for k, v in sorted(self.omega.items())},
        }


def _fill(omega: dict[int, int], verts, start: int) -> int:
    for v in sorted(verts):
        omega[v] = start
        start += 1
    return start


def _minus(g: LabeledGraph, drop) -> tuple[LabeledGraph, list[int]]:
    keep = [v for v in g.vertices if v not in drop]
    return g.induced_subgraph(keep), keep


def single_vertex_labeling(g: LabeledGraph, u: int) -> dict[int, int]:
    """``u -> 1``, its neighbours next, everything else after."""
    omega = {u: 1}
    Nu = g.neighborhood(u)
    nxt = _fill(omega, Nu, 2)
    _fill(omega, set(g.vertices) - Nu - {u}, nxt)
    return omega


def pair_labeling(g: LabeledGraph, u: int, v: int) -> tuple[str, dict[int, int]]:
    """``u -> 1`` and ``v -> n`` with ``N(u)`` packed low and ``N(v)`` packed high.

    Needs ``u, v`` non-adjacent and either dominating the rest (shared
    neighbours go in the middle) or with disjoint neighbourhoods (the
    remaining vertices go in the middle).
    """
    n = g.n
    if g.has_edge(u, v):
        raise HypothesisNotMet(f"{u} and {v} are adjacent")
    Nu, Nv = g.neighborhood(u), g.neighborhood(v)
    rest = set(g.vertices) - {u, v}
    n1, n2 = len(Nu), len(Nv)
    omega = {u: 1, v: n}
    if Nu | Nv >= rest:
        _fill(omega, Nu - Nv, 2)
        _fill(omega, Nu & Nv, n - n2)
        _fill(omega, Nv - Nu, n1 + 2)
        return "dominating", omega
    if not Nu & Nv:
        nxt = _fill(omega, Nu, 2)
        _fill(omega, rest - Nu - Nv, nxt)
        _fill(omega, Nv, n - n2)
        return "disjoint", omega
    raise HypothesisNotMet(f"{u} and {v} neither dominate nor have disjoint neighbourhoods")


def structured_membership(g: LabeledGraph) -> StructuredResult:
    """Build a witness-free labeling when ``G - u`` or ``G - {u, v}`` is complete multipartite.

    Tries every single vertex first, then every independent pair.
    """
    for u in g.vertices:
        if is_complete_multipartite(_minus(g, {u})[0]):
            omega = single_vertex_labeling(g, u)
            return StructuredResult("single", (u,), _checked(g, omega, "single-vertex"))
    for u, v in combinations(g.vertices, 2):
        if g.has_edge(u, v) or not is_complete_multipartite(_minus(g, {u, v})[0]):
            continue
        try:
            kind, omega = pair_labeling(g, u, v)
        except HypothesisNotMet:
            continue
        return StructuredResult(kind, (u, v), _checked(g, omega, f"{kind}-pair"))
    raise HypothesisNotMet("no vertex or independent pair leaves a complete multipartite graph")
