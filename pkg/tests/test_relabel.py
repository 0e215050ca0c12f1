import pytest
from hypothesis import assume, given, settings

from oracles import digraph_hist, digraph_witnesses
from orderpoly import AcyclicDigraph
from orderpoly.errors import HypothesisNotMet, IffViolation, NotAnExtension, NotSinkElimination, NotTurning, PreconditionViolated
from orderpoly.polys import BinomPoly, ZPoly
from orderpoly.psi import delta_poly, psi, witnesses
from orderpoly.relabel import (
    admissible_r,
    algorithm_A,
    c_stats,
    d_interpretation_check,
    delta_diff_large_relabel,
    delta_diff_turning,
    delta_insertion_poly,
    ideal_set_check,
    insertion_context,
    insertions,
    large_labels,
    large_relabel_formula,
    n_set,
    p_set,
    relabel_by_L,
    sink_elimination_orderings,
    sink_elimination_sequence,
    stretch,
    succeq_evidence,
    theorem_defect,
    turning_vertex,
)
from strategies import digraphs

SQ = ZPoly({2: 1, 1: -2, 0: 1})  # (z-1)^2


def test_algorithm_A_examples(d1, d2):
    assert algorithm_A(d2) == {2: 3, 1: 2, 3: 1}
    assert relabel_by_L(d2).arcs == {(1, 2)}
    assert algorithm_A(d1) == {1: 1, 2: 2, 3: 3}
    assert algorithm_A(AcyclicDigraph([1, 2, 3])) == {1: 1, 2: 2, 3: 3}


def test_n_set_examples(d1, d2):
    assert n_set(d1, 2, 1) == {2}
    assert n_set(d2, 3, 2) == {1, 3}


def test_insertion_context_source_and_sink(d2):
    ctx = insertion_context(d2, 2, (3, 1))
    assert (ctx.s, ctx.t) == (0, 3)
    assert set(insertions(ctx)) == {(2, 3, 1), (3, 2, 1), (3, 1, 2)}
    assert ctx.U1 == {1} and ctx.U2 == set() and ctx.Q == {1}
    assert ctx.p == 0
    # Table delta values 2, 0, 2 minus delta(3,1) = 1
    assert delta_insertion_poly(d2, ctx) == ZPoly({1: 2, -1: 1})


def test_insertion_poly_middle_vertex(d1):
    ctx = insertion_context(d1, 2, (1, 3))
    assert delta_insertion_poly(d1, ctx) == ZPoly({1: 1, 0: 2})


def test_insertion_two_vertices():
    d = AcyclicDigraph([1, 2])
    ctx = insertion_context(d, 2, (1,))
    assert (ctx.s, ctx.t) == (0, 2)
    assert len(insertions(ctx)) == 2
    with pytest.raises(NotAnExtension):
        insertion_context(AcyclicDigraph([1, 2, 3], [(1, 3)]), 2, (3, 1))
    with pytest.raises(PreconditionViolated):
        insertion_context(AcyclicDigraph([1]), 1, ())


def test_large_relabel_examples(d1, d2):
    assert delta_diff_large_relabel(d2, 2, 4) == SQ
    assert delta_poly(d2) - delta_poly(d2.relabel_vertex(2, 4)) == SQ
    assert delta_diff_large_relabel(d1, 2, 4).is_zero()
    assert delta_diff_large_relabel(AcyclicDigraph([1, 2, 3], [(1, 2)]), 3, 9).is_zero()
    with pytest.raises(PreconditionViolated):
        delta_diff_large_relabel(d2, 2, 3)


def test_adjacent_end_slots_contribute_nothing():
    # a=3 has in-neighbour 2 and out-neighbour 1; in pi0 = (2, 1) they are adjacent,
    # so a has a single slot.  Summing that pi0 anyway gives (z-1)^2 instead of 0.
    d = AcyclicDigraph([1, 2, 3], [(2, 3), (3, 1)])
    ctx = insertion_context(d, 3, (2, 1))
    assert (ctx.s, ctx.t, ctx.p) == (1, 2, 1)
    assert delta_diff_large_relabel(d, 3, 4).is_zero()
    assert large_relabel_formula(d, 3, literal=True) == SQ


def test_turning_examples(d1, d2):
    assert turning_vertex(d2, 2) and p_set(d2, 2) == {2, 3}
    assert turning_vertex(d1, 1) and p_set(d1, 1) == {1}
    assert not turning_vertex(AcyclicDigraph([1, 2], [(1, 2)]), 1)
    with pytest.raises(NotTurning):
        admissible_r(AcyclicDigraph([1, 2], [(1, 2)]), 1)


def test_admissible_r(d1, d2):
    assert admissible_r(d2, 2).r == 4
    adm = admissible_r(stretch(d1), 2)
    assert (adm.r, adm.stretched) == (5, False)
    # window (1, 3) holds only the used label 2, so labels are doubled first
    adm = admissible_r(d1, 1)
    assert adm.stretched and adm.vertex == 2 and adm.r == 5
    assert adm.digraph == AcyclicDigraph([2, 4, 6], [(2, 6)])


def test_c_stats_examples(d1, d2):
    st = c_stats(d2, 2)
    assert st.c == (0, 0, 0) and st.cprime == (1, 0, 0)
    assert c_stats(d1, 2).is_zero()


def test_turning_difference(d1, d2):
    t = delta_diff_turning(d2, 2)
    assert t.r == 4 and t.delta_diff == SQ
    assert t.defect == BinomPoly(1, {0: 1})
    assert delta_diff_turning(d1, 2).delta_diff.is_zero()


def test_turning_vanishing_criterion_can_fail():
    # W(D,2) = {(2,3,4)} but 1 always sits between 4 and 2, so no extension
    # places 2 inside that triple and Delta does not move
    d = AcyclicDigraph([1, 2, 3, 4], [(1, 2), (4, 1), (4, 2)])
    assert witnesses(d).containing(2).triples == {(2, 3, 4)}
    t = delta_diff_turning(d, 2, strict=False)
    assert t.delta_diff.is_zero() and not t.iff_holds
    assert t.stats.is_zero()
    with pytest.raises(IffViolation):
        delta_diff_turning(d, 2)


def test_ideal_sets(d2):
    assert ideal_set_check(d2, set())
    assert not ideal_set_check(d2, d2.vertices)
    d = d2.relabel_vertex(2, 6)
    assert ideal_set_check(d, {6})
    assert ideal_set_check(AcyclicDigraph([2, 3]), {2, 3})


def test_gamma_on_one_arc(d2):
    g = sink_elimination_sequence(d2, (2, 1, 3))
    assert g.M == 7
    assert g.digraphs[1] == AcyclicDigraph([1, 3, 6], [(3, 1)])
    assert g.digraphs[2] == AcyclicDigraph([3, 5, 6], [(3, 5)])
    assert not g.digraphs[-1].inversions()
    assert g.total_quotient == ZPoly({0: 1})
    assert g.defect == theorem_defect(d2)
    with pytest.raises(NotSinkElimination):
        sink_elimination_sequence(d2, (3, 1, 2))


def test_gamma_edgeless():
    d = AcyclicDigraph([1, 2, 3])
    g = sink_elimination_sequence(d, (1, 2, 3))
    assert all(e.quotient.is_zero() for e in g.evidence)


def test_gamma_from_L(d2):
    L = algorithm_A(d2)
    alpha = tuple(sorted(L, key=lambda v: -L[v]))
    g = sink_elimination_sequence(d2, alpha)
    final = g.digraphs[-1]
    # final digraph is D_L up to an order-preserving relabel
    rank = {v: i + 1 for i, v in enumerate(sorted(final.vertices))}
    assert final.relabel(rank) == relabel_by_L(d2)
    assert (psi(d2) == psi(relabel_by_L(d2))) == (not witnesses(d2))


def test_step_vanishing_criterion_can_fail():
    d = AcyclicDigraph([1, 2, 3, 4], [(1, 2), (4, 1), (4, 2)])
    g = sink_elimination_sequence(d, (2, 1, 3, 4))
    assert g.step_iff_failures == [1]
    e = g.evidence[0]
    assert e.quotient.is_zero() and e.witnesses_before == 2 and e.witnesses_after == 1
    with pytest.raises(IffViolation):
        succeq_evidence(d, g.digraphs[1], {2: g.M - 1})
    # the endpoint still sees every witness
    assert g.defect == theorem_defect(d) and not g.defect.is_zero()


def test_theorem_defect_examples(d1, d2, d3):
    assert theorem_defect(d2) == BinomPoly(1, {0: 1})
    assert theorem_defect(d1).is_zero() and theorem_defect(d3).is_zero()
    with pytest.raises(PreconditionViolated):
        theorem_defect(AcyclicDigraph([1, 2]))


def test_interpretation_examples(d1, d2):
    rep = d_interpretation_check(d2, 2)
    assert rep.holds and rep.counts == [1]
    assert d_interpretation_check(d1, 2).counts == [0]
    with pytest.raises(HypothesisNotMet):
        d_interpretation_check(AcyclicDigraph([1, 2, 3], [(2, 1)]), 2)


@settings(max_examples=60, deadline=None)
@given(digraphs(min_n=3, max_n=5, pool=7))
def test_defect_properties(d):
    df = theorem_defect(d)
    assert df.nonnegative()
    assert df.is_zero() == (not digraph_witnesses(d.vertices, d.arcs))
    if not d.inversions():
        assert df.is_zero()


@settings(max_examples=60, deadline=None)
@given(digraphs(min_n=2, max_n=5, pool=7))
def test_large_relabel_formula_property(d):
    for a in sorted(d.vertices):
        for m in large_labels(d, a):
            direct = ZPoly(dict(enumerate(digraph_hist(d.vertices, d.arcs))))
            moved = d.relabel_vertex(a, m)
            direct = direct - ZPoly(dict(enumerate(digraph_hist(moved.vertices, moved.arcs))))
            assert delta_diff_large_relabel(d, a, m) == direct


@settings(max_examples=60, deadline=None)
@given(digraphs(min_n=3, max_n=5, pool=7))
def test_turning_formula_property(d):
    turning = [a for a in sorted(d.vertices) if turning_vertex(d, a)]
    assume(turning)
    for a in turning:
        t = delta_diff_turning(d, a, strict=False)
        assert witnesses(t.digraph.relabel_vertex(t.vertex, t.r)).triples == witnesses(t.digraph.delete_vertex(t.vertex)).triples
        if not witnesses(d).containing(a):
            assert t.delta_diff.is_zero() and t.iff_holds


@settings(max_examples=30, deadline=None)
@given(digraphs(min_n=3, max_n=4, pool=7))
def test_gamma_property(d):
    td = theorem_defect(d)
    for alpha in sink_elimination_orderings(d):
        g = sink_elimination_sequence(d, alpha)
        assert g.defect == td
        assert all(g.ideal_ok)


@settings(max_examples=60, deadline=None)
@given(digraphs(max_n=5, pool=7))
def test_L_respects_reachability(d):
    L = algorithm_A(d)
    assert sorted(L.values()) == list(range(1, d.n + 1))
    assert all(L[u] < L[v] for u, v in d.arcs)
    assert not relabel_by_L(d).inversions()
    if not witnesses(d):
        assert delta_poly(d) == delta_poly(relabel_by_L(d))
