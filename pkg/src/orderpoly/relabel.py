"""Relabeling calculus for acyclic digraphs.

Relabeling one vertex changes ``Delta(D, z)`` by ``(z-1)^2`` times an
explicit polynomial.  Every closed form here is evaluated alongside a direct
enumeration of both sides and the two are compared; a disagreement raises a
``TheoremViolation`` carrying the instance.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    ClosedFormMismatch,
    DivisibilityFailure,
    FormulaMismatch,
    HypothesisNotMet,
    IffViolation,
    NegativeCoefficient,
    NegativeQuotient,
    NotAnExtension,
    NotFactorable,
    NotRepresentable,
    NotSinkElimination,
    NotTurning,
    PreconditionViolated,
    TheoremViolation,
    UnknownVertex,
)
from .order import order_polynomial_binom
from .polys import BinomPoly, ZPoly, binom_basis_collapse, monomial_to_binom
from .psi import delta_ordering, delta_pair, delta_poly, psi, witnesses
from .structures import AcyclicDigraph, Ordering, remove_from_ordering
from .textio import dumps

# ---------------------------------------------------------------------------
# Algorithm A


def algorithm_A(d: AcyclicDigraph) -> dict[int, int]:
    """Repeatedly give label ``|S|`` to the largest sink of ``D[S]`` and drop it."""
    S = set(d.vertices)
    out_left = {v: set(d.out_neighbors(v)) for v in S}
    L: dict[int, int] = {}
    while S:
        u = max(v for v in S if not out_left[v])
        L[u] = len(S)
        S.remove(u)
        for v in d.in_neighbors(u):
            out_left[v].discard(u)
    return L


def relabel_by_L(d: AcyclicDigraph) -> AcyclicDigraph:
    """``D_L``."""
    return d.relabel(algorithm_A(d))


def n_set(d: AcyclicDigraph, c: int, b: int, L: dict[int, int] | None = None) -> frozenset[int]:
    """``N_D[c, b]``: vertices of ``R[c] - R[b]`` whose L-label is below every common descendant."""
    if c == b:
        raise ValueError("n_set needs distinct vertices")
    for v in (c, b):
        if v not in d.vertices:
            raise UnknownVertex(v)
    L = L or algorithm_A(d)
    common = d.reach(c) & d.reach(b)
    return frozenset(
        x for x in d.reach_closed(c) - d.reach_closed(b) if all(L[x] < L[y] for y in common)
    )


# ---------------------------------------------------------------------------
# inserting one vertex into an extension of D - a


@dataclass(frozen=True)
class InsertionContext:
    """Where ``a`` may be inserted into ``pi0`` (an extension of ``D - a``).

    Positions are 1-based: ``pi0 = (a_1, ..., a_{n-1})``.  ``s`` is the last
    in-neighbour position (0 if none), ``t`` the first out-neighbour
    position (``n`` if none).  Gaps ``s..t-1`` are the legal insertion slots.
    """

    a: int
    pi0: Ordering
    s: int
    t: int
    U1: frozenset[int]
    U2: frozenset[int]
    Q: frozenset[int]
    p: int

    @property
    def gaps(self) -> range:
        return range(self.s, self.t)


def _el(pi0: Ordering, k: int) -> int | None:
    """``a_k`` for ``1 <= k <= n-1``; None for the boundary slots ``a_0`` / ``a_n``."""
    return pi0[k - 1] if 1 <= k <= len(pi0) else None


def _dd(d: AcyclicDigraph, x: int | None, y: int | None) -> int:
    # boundary convention: any delta involving a_0 or a_n equals 1
    if x is None or y is None:
        return 1
    return delta_pair(d, x, y)


def insertion_context(d: AcyclicDigraph, a: int, pi0: Ordering) -> InsertionContext:
    if a not in d.vertices:
        raise UnknownVertex(a)
    if d.n < 2:
        # with an empty pi0 the two boundary slots coincide
        raise PreconditionViolated("insertion contexts need at least 2 vertices")
    rest = d.delete_vertex(a)
    pi0 = tuple(pi0)
    if not rest.is_extension(pi0):
        raise NotAnExtension(f"{pi0} is not a linear extension of D - {a}")
    n = d.n
    B, F = d.in_neighbors(a), d.out_neighbors(a)
    s = max((k for k in range(1, n) if _el(pi0, k) in B), default=0)
    t = min((k for k in range(1, n) if _el(pi0, k) in F), default=n)
    inner = range(s + 1, t - 1)
    U1 = frozenset(i for i in inner if _el(pi0, i) > a > _el(pi0, i + 1))
    U2 = frozenset(i for i in inner if _el(pi0, i) < a < _el(pi0, i + 1))
    Q = frozenset(i for i in U1 if d.has_arc(_el(pi0, i), _el(pi0, i + 1)))
    a_s, a_s1 = _el(pi0, s), _el(pi0, s + 1)
    a_t1, a_t = _el(pi0, t - 1), _el(pi0, t)
    p = (1 - _dd(d, a_s, a_s1)) * _dd(d, a, a_s1) - (1 - _dd(d, a_t1, a_t)) * _dd(d, a, a_t1)
    return InsertionContext(a, pi0, s, t, U1, U2, Q, p)


def insertions(ctx: InsertionContext) -> list[Ordering]:
    """``OP(D, pi0)``: ``a`` placed after ``a_i`` for each legal gap ``i``."""
    pi0 = ctx.pi0
    return [pi0[:i] + (ctx.a,) + pi0[i:] for i in ctx.gaps]


def delta_insertion_poly(d: AcyclicDigraph, ctx: InsertionContext) -> ZPoly:
    """``Delta_{D,pi0}(z) = sum z^(delta(pi) - delta(pi0))`` over legal insertions.

    The gap-by-gap closed form is evaluated too and must agree.  When the
    two end slots coincide (``t = s+1``) there is one insertion, not two.
    """
    a, pi0 = ctx.a, ctx.pi0
    rest = d.delete_vertex(a)
    base = delta_ordering(rest, pi0)
    direct = ZPoly()
    for pi in insertions(ctx):
        direct = direct + ZPoly({delta_ordering(d, pi) - base: 1})

    s, t = ctx.s, ctx.t
    el = lambda k: _el(pi0, k)  # noqa: E731
    if t <= s:
        closed = ZPoly()
    elif t == s + 1:
        closed = ZPoly({2 - _dd(d, el(s), el(s + 1)): 1})
    else:
        terms = {}

        def put(e):
            terms[e] = terms.get(e, 0) + 1

        put(1 + _dd(d, a, el(s + 1)) - _dd(d, el(s), el(s + 1)))
        put(1 + _dd(d, el(t - 1), a) - _dd(d, el(t - 1), el(t)))
        for i in range(s + 1, t - 1):
            dl = _dd(d, el(i), el(i + 1))
            if i in ctx.U1:
                put(-dl)
            elif i in ctx.U2:
                put(2 - dl)
            else:
                put(1 - dl)
        closed = ZPoly(terms)
    if closed != direct:
        raise ClosedFormMismatch(
            f"insertion polynomial: closed form {closed!r} != direct {direct!r}",
            dumps(d), vertex=a, pi0=list(pi0),
        )
    return direct


# ---------------------------------------------------------------------------
# relabeling a vertex by a large number


def large_label_ok(d: AcyclicDigraph, a: int, m: int) -> bool:
    outside = d.vertices - d.reach_closed(a)
    return m not in d.vertices and m >= 1 and all(m > y for y in outside)


def large_labels(d: AcyclicDigraph, a: int) -> list[int]:
    """Every valid large label up to ``max V + 1``."""
    outside = d.vertices - d.reach_closed(a)
    lo = max(outside, default=0) + 1
    return [m for m in range(lo, max(d.vertices) + 2) if m not in d.vertices]


def large_relabel_formula(d: AcyclicDigraph, a: int, literal: bool = False) -> ZPoly:
    """``(z-1)^2 * sum_{pi0} [p + |Q| z^-1] z^delta(pi0)``.

    Extensions ``pi0`` of ``D - a`` with ``t <= s + 1`` admit at most one
    insertion slot and contribute nothing to the difference; they are
    skipped unless ``literal`` is set, which sums every ``pi0`` as written
    and is kept only to exhibit that the unguarded sum can be wrong.
    """
    rest = d.delete_vertex(a)
    acc = ZPoly()
    if d.n < 2:
        return acc
    for pi0 in rest.iter_extensions():
        ctx = insertion_context(d, a, pi0)
        if not literal and ctx.t <= ctx.s + 1:
            continue
        term = ZPoly({0: ctx.p}) + ZPoly({-1: len(ctx.Q)})
        acc = acc + term.shift(delta_ordering(rest, pi0))
    return acc.times_z_minus_1_squared()


def delta_diff_large_relabel(d: AcyclicDigraph, a: int, m: int) -> ZPoly:
    """``Delta(D) - Delta(D_{a->m})``, by enumeration and by the closed form."""
    if a not in d.vertices:
        raise UnknownVertex(a)
    if not large_label_ok(d, a, m):
        raise PreconditionViolated(f"label {m} is not fresh and larger than every vertex outside R[{a}]")
    direct = delta_poly(d) - delta_poly(d.relabel_vertex(a, m))
    formula = large_relabel_formula(d, a)
    if direct != formula:
        raise FormulaMismatch(
            f"large relabel: formula {formula!r} != direct {direct!r}", dumps(d), vertex=a, m=m
        )
    return direct


# ---------------------------------------------------------------------------
# turning vertices


def p_set(d: AcyclicDigraph, u: int) -> frozenset[int]:
    """``B[u]`` together with every vertex that has an arc to a smaller label."""
    return d.in_neighbors(u) | {u} | {c for c, b in d.arcs if b < c}


def turning_vertex(d: AcyclicDigraph, u: int) -> bool:
    F = d.out_neighbors(u)
    return not F or min(F) >= 2 + max(p_set(d, u))


def stretch(d: AcyclicDigraph, factor: int = 2) -> AcyclicDigraph:
    """Multiply every label by ``factor``; order-preserving, so Delta and W are unchanged."""
    return d.relabel({v: factor * v for v in d.vertices})


@dataclass(frozen=True)
class Admissible:
    digraph: AcyclicDigraph
    vertex: int
    r: int
    stretched: bool


def admissible_r(d: AcyclicDigraph, a: int) -> Admissible:
    """Largest fresh label strictly between ``max P_D(a)`` and ``min F_D(a)``.

    With no out-neighbours the answer is ``max V + 1``.  If the window has
    no fresh integer, labels are doubled once (which always opens one).
    """
    if not turning_vertex(d, a):
        raise NotTurning(f"{a} is not a turning vertex")
    for stretched in (False, True):
        dd, aa = (stretch(d), 2 * a) if stretched else (d, a)
        F = dd.out_neighbors(aa)
        if not F:
            return Admissible(dd, aa, max(dd.vertices) + 1, stretched)
        lo, hi = max(p_set(dd, aa)), min(F)
        cands = [r for r in range(hi - 1, lo, -1) if r not in dd.vertices]
        if cands:
            return Admissible(dd, aa, cands[0], stretched)
    raise AssertionError("doubling always opens a fresh label")  # pragma: no cover


@dataclass(frozen=True)
class CStats:
    c: tuple[int, ...]
    cprime: tuple[int, ...]

    def is_zero(self) -> bool:
        return not any(self.c) and not any(self.cprime)

    def defect_vector(self) -> list[int]:
        """``c_{j+2} + c'_j`` for ``j = 0..n-3``."""
        n = len(self.c)
        return [self.c[j + 2] + self.cprime[j] for j in range(n - 2)]


def c_stats(d: AcyclicDigraph, a: int) -> CStats:
    """Tally extensions with ``a`` wedged inside a witness triple, by delta value.

    ``c``: the left neighbour of ``a`` has an arc into ``a``.
    ``c'``: the two neighbours of ``a`` are joined by an arc.
    """
    n = d.n
    if n < 3:
        raise PreconditionViolated("c_stats needs at least 3 vertices")
    W = witnesses(d)
    c = [0] * n
    cp = [0] * n
    for pi in d.iter_extensions():
        k = pi.index(a)
        if k == 0 or k == n - 1:
            continue
        left, right = pi[k - 1], pi[k + 1]
        if (left, a, right) not in W:
            continue
        j = delta_ordering(d, pi)
        if d.has_arc(left, a):
            c[j] += 1
        if d.has_arc(left, right):
            cp[j] += 1
    out = CStats(tuple(c), tuple(cp))
    if c[0] or c[1] or any(cp[n - 2:]):
        raise TheoremViolation("c-statistics vanish where required", dumps(d), vertex=a, c=c, cprime=cp)
    return out


@dataclass
class TurningResult:
    digraph: AcyclicDigraph
    vertex: int
    r: int
    stretched: bool
    delta_diff: ZPoly
    defect: BinomPoly
    stats: CStats
    iff_holds: bool = True

    def to_json(self) -> dict:
        return {
            "vertex": self.vertex,
            "r": self.r,
            "stretched": self.stretched,
            "delta_diff": self.delta_diff.to_json(),
            "defect": self.defect.to_json(),
            "c": list(self.stats.c),
            "cprime": list(self.stats.cprime),
            "iff_holds": self.iff_holds,
        }


def delta_diff_turning(d: AcyclicDigraph, a: int, strict: bool = True) -> TurningResult:
    """Compare ``D`` with ``D_{a->r}`` for a turning vertex ``a``.

    Checks the c-statistic formula for the Delta difference, its Psi form in
    the degree-(n-2) basis, the vanishing criterion ``W(D, a) = {}``, and
    that the relabeled vertex lies in no witness triple afterwards.  The
    vanishing criterion can fail while the formula holds; with ``strict``
    off that outcome is recorded in ``iff_holds`` instead of raised.
    """
    n = d.n
    if n < 3:
        raise PreconditionViolated("turning-vertex relabeling needs n >= 3")
    adm = admissible_r(d, a)
    D, u, r = adm.digraph, adm.vertex, adm.r
    inst = dumps(d)
    if adm.stretched and delta_poly(D) != delta_poly(d):
        raise TheoremViolation("doubling labels changed Delta", inst)
    Dr = D.relabel_vertex(u, r)
    direct = delta_poly(D) - delta_poly(Dr)
    stats = c_stats(D, u)
    vec = stats.defect_vector()
    formula = ZPoly(dict(enumerate(vec))).times_z_minus_1_squared()
    if formula != direct:
        raise FormulaMismatch(f"turning relabel: formula {formula!r} != direct {direct!r}", inst, vertex=a, r=r)
    defect = BinomPoly(n - 2, dict(enumerate(vec)))
    psi_diff = psi(D) - psi(Dr)
    if binom_basis_collapse(psi_diff) != defect or monomial_to_binom(psi_diff.to_monomial(), n - 2) != defect:
        raise FormulaMismatch("turning relabel: Psi difference disagrees with c-statistics", inst, vertex=a)
    W_at = witnesses(D).containing(u)
    iff_holds = direct.is_zero() == (not W_at)
    if strict and not iff_holds:
        raise IffViolation("Delta unchanged iff W(D,a) empty failed", inst, vertex=a)
    if witnesses(Dr).triples != witnesses(D.delete_vertex(u)).triples:
        raise TheoremViolation("W(D_{a->r}) != W(D - a)", inst, vertex=a, r=r)
    return TurningResult(D, u, r, adm.stretched, direct, defect, stats, iff_holds)


# ---------------------------------------------------------------------------
# ideal sets and sink-elimination sequences


def ideal_set_check(d: AcyclicDigraph, S) -> bool:
    S = frozenset(S)
    if not S:
        return True
    if not S <= d.vertices:
        raise UnknownVertex(sorted(S - d.vertices))
    for y in S:
        if not d.reach(y) <= S:
            return False
        F = d.out_neighbors(y)
        if F and not y < min(F):
            return False
    if S == d.vertices:
        return min(S) >= 2
    return min(S) >= 2 + max(d.vertices - S)


def is_sink_elimination(d: AcyclicDigraph, alpha: Ordering) -> bool:
    alpha = tuple(alpha)
    if sorted(alpha) != d.sorted_vertices():
        return False
    removed: set[int] = set()
    for u in alpha:
        if not d.out_neighbors(u) <= removed:
            return False
        removed.add(u)
    return True


def sink_elimination_orderings(d: AcyclicDigraph):
    """Reverses of linear extensions, which are exactly the sink-elimination orderings."""
    for pi in d.iter_extensions():
        yield tuple(reversed(pi))


@dataclass
class SuccEvidence:
    quotient: ZPoly
    witnesses_before: int
    witnesses_after: int
    iff_holds: bool = True


def succeq_evidence(
    d1: AcyclicDigraph, d2: AcyclicDigraph, mu: dict[int, int], strict: bool = True
) -> SuccEvidence:
    """Check that ``d1`` dominates ``d2 = d1`` relabeled by ``mu``.

    (a) no new witness triple appears under the relabeling;
    (b) ``Delta(d1) - Delta(d2) = (z-1)^2 P`` with ``P`` zero or a
        non-negative polynomial of degree ``<= n-3``, and ``P = 0`` iff the
        witness counts agree.

    The last clause can fail on its own; with ``strict`` off it is reported
    through ``iff_holds`` rather than raised.
    """
    inst = dumps(d1)
    W1, W2 = witnesses(d1), witnesses(d2)
    fwd = {v: mu.get(v, v) for v in d1.vertices}
    image = {tuple(sorted(fwd[v] for v in t)) for t in W1.triples}
    if not W2.triples <= image:
        raise TheoremViolation("relabeling created a new witness triple", inst, mapping=mu)
    diff = delta_poly(d1) - delta_poly(d2)
    try:
        P = diff.divide_by_z_minus_1_squared()
    except NotFactorable as exc:
        raise DivisibilityFailure(str(exc), inst, mapping=mu) from exc
    if any(c < 0 for c in P.coeffs.values()) or (not P.is_zero() and (P.min_exponent() < 0 or P.max_exponent() > d1.n - 3)):
        raise NegativeQuotient(f"quotient {P!r} is not a non-negative polynomial of degree <= n-3", inst, mapping=mu)
    iff_holds = P.is_zero() == (len(W1) == len(W2))
    if strict and not iff_holds:
        raise IffViolation("P = 0 iff |W| unchanged failed", inst, mapping=mu)
    return SuccEvidence(P, len(W1), len(W2), iff_holds)


@dataclass
class GammaSequence:
    alpha: Ordering
    M: int
    digraphs: list[AcyclicDigraph]
    evidence: list[SuccEvidence]
    total_quotient: ZPoly
    defect: BinomPoly | None = None
    ideal_ok: list[bool] = field(default_factory=list)

    @property
    def step_iff_failures(self) -> list[int]:
        """Steps whose quotient vanished although the witness count dropped (or vice versa)."""
        return [i + 1 for i, e in enumerate(self.evidence) if not e.iff_holds]

    def to_json(self) -> dict:
        return {
            "alpha": list(self.alpha),
            "M": self.M,
            "steps": [
                {"vertices": d.sorted_vertices(), "arcs": [list(x) for x in sorted(d.arcs)]}
                for d in self.digraphs
            ],
            "quotients": [e.quotient.to_json() for e in self.evidence],
            "step_iff_failures": self.step_iff_failures,
            "total_quotient": self.total_quotient.to_json(),
            "defect": None if self.defect is None else self.defect.to_json(),
        }


def sink_elimination_sequence(d: AcyclicDigraph, alpha: Ordering) -> GammaSequence:
    """Relabel ``u_i`` as ``M - i`` in turn (``M = n + 1 + max V``) and check each step."""
    alpha = tuple(alpha)
    if not is_sink_elimination(d, alpha):
        raise NotSinkElimination(f"{alpha} is not a sink-elimination ordering")
    n = d.n
    inst = dumps(d)
    M = n + 1 + max(d.vertices)
    seq = [d]
    ev: list[SuccEvidence] = []
    ideal = [True]
    total = ZPoly()
    for i in range(1, n):
        prev = seq[-1]
        nxt = prev.relabel_vertex(alpha[i - 1], M - i)
        seq.append(nxt)
        e = succeq_evidence(prev, nxt, {alpha[i - 1]: M - i}, strict=False)
        ev.append(e)
        total = total + e.quotient
        ideal.append(ideal_set_check(nxt, {M - j for j in range(1, i + 1)}))
    if not all(ideal):
        raise TheoremViolation("relabeled block is not ideal", inst, alpha=list(alpha))
    if seq[-1].inversions():
        raise TheoremViolation("final digraph still has inverted arcs", inst, alpha=list(alpha))
    if (delta_poly(d) - delta_poly(seq[-1])) != total.times_z_minus_1_squared():
        raise FormulaMismatch("telescoped quotients disagree with endpoint difference", inst, alpha=list(alpha))
    if total.is_zero() != (not witnesses(d)):
        raise IffViolation("endpoint quotient vanishes iff W(D) empty failed", inst, alpha=list(alpha))
    defect = BinomPoly(n - 2, total.coeffs) if n >= 3 else None
    return GammaSequence(alpha, M, seq, ev, total, defect, ideal)


# ---------------------------------------------------------------------------
# the main defect


def theorem_defect(d: AcyclicDigraph) -> BinomPoly:
    """``Psi(D) - Omega(D-bar)`` in the degree-(n-2) basis; non-negative, zero iff no witnesses."""
    n = d.n
    if n < 3:
        raise PreconditionViolated("defect is defined for n >= 3")
    inst = dumps(d)
    diff = psi(d) - order_polynomial_binom(d)
    try:
        out = monomial_to_binom(diff.to_monomial(), n - 2)
    except NotRepresentable as exc:
        raise TheoremViolation(f"Psi - Omega not representable: {exc}", inst) from exc
    if not out.nonnegative():
        raise NegativeCoefficient(f"negative defect {out!r}", inst)
    if out.is_zero() != (not witnesses(d)):
        raise IffViolation("defect vanishes iff W(D) empty failed", inst, defect=out)
    return out


def interpretation_hypothesis(d: AcyclicDigraph, u: int) -> bool:
    sinks = d.sinks()
    if u in sinks:
        return True
    R = d.reach(u)
    if not max(d.vertices - R) < min(R):
        return False
    return all(y < min(d.reach(y)) for y in R - sinks)


@dataclass
class InterpretationReport:
    holds: bool
    counts: list[int]
    defect: list[int]

    def to_json(self) -> dict:
        return dict(self.__dict__)


def d_interpretation_check(d: AcyclicDigraph, u: int) -> InterpretationReport:
    """Count witness-wedged extensions of ``u`` and compare with the defect vector."""
    n = d.n
    if n < 3:
        raise HypothesisNotMet("needs n >= 3")
    if not interpretation_hypothesis(d, u):
        raise HypothesisNotMet(f"reachability hypothesis fails at {u}")
    W = witnesses(d)
    if W.triples != W.containing(u).triples:
        raise HypothesisNotMet(f"some witness triple avoids {u}")
    counts = [0] * (n - 2)
    for pi in d.iter_extensions():
        k = pi.index(u)
        if k == 0 or k == n - 1:
            continue
        left, right = pi[k - 1], pi[k + 1]
        if (left, u, right) not in W:
            continue
        j = delta_ordering(d, pi)
        if left > right > u:
            j -= 2
        elif not (left > u > right):
            continue
        if 0 <= j < n - 2:
            counts[j] += 1
    defect = theorem_defect(d).vector()
    return InterpretationReport(counts == defect, counts, defect)


__all__ = [
    "Admissible", "CStats", "GammaSequence", "InsertionContext", "InterpretationReport",
    "SuccEvidence", "TurningResult", "admissible_r", "algorithm_A", "c_stats",
    "d_interpretation_check", "delta_diff_large_relabel", "delta_diff_turning",
    "delta_insertion_poly", "ideal_set_check", "insertion_context", "insertions",
    "interpretation_hypothesis", "is_sink_elimination", "large_label_ok", "large_labels",
    "large_relabel_formula", "n_set", "p_set", "relabel_by_L", "remove_from_ordering",
    "sink_elimination_orderings", "sink_elimination_sequence", "stretch", "succeq_evidence",
    "theorem_defect", "turning_vertex",
]
