# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
# ---

# %% [markdown]
# # Psi, order polynomials and witness triples
#
# Three labelings of one arc plus an isolated vertex.  Only the labeling
# with the arc pointing down (3 -> 1) has a witness, and only there does
# Psi differ from the order polynomial.

# %%
from orderpoly import AcyclicDigraph, LabeledGraph, order_polynomial_binom, psi, theorem_defect, witnesses
from orderpoly.psi import chromatic, delta_ordering, graph_defect, verify_graph_identity

labelings = {"D1": [(1, 3)], "D2": [(3, 1)], "D3": [(2, 1)]}
for name, arcs in labelings.items():
    d = AcyclicDigraph([1, 2, 3], arcs)
    rows = {pi: delta_ordering(d, pi) for pi in d.iter_extensions()}
    print(name, rows)
    print("   Psi   =", psi(d))
    print("   Omega =", order_polynomial_binom(d))
    print("   W     =", sorted(witnesses(d).triples))

# %% [markdown]
# The difference for D2 lives in the degree n-2 binomial basis.

# %%
d2 = AcyclicDigraph([1, 2, 3], [(3, 1)])
print(theorem_defect(d2), theorem_defect(d2).vector())

# %% [markdown]
# ## Graphs
#
# For a graph, Psi sums over all n! orderings and is compared with the
# reciprocal chromatic polynomial.  The path 1-2-3 has no witness; the
# single edge 13 with 2 isolated does.

# %%
for g in (LabeledGraph.path(3), LabeledGraph(3, [(1, 3)])):
    rep = verify_graph_identity(g)
    print(g, "chi =", chromatic(g), "holds:", rep.holds, "W:", sorted(rep.witnesses.triples))
    if not rep.holds:
        print("   defect:", graph_defect(g))

# %% [markdown]
# Counting over every graph on five vertices: the identity holds exactly
# on the witness-free labelings.

# %%
from collections import Counter

from orderpoly.generate import all_graphs

tally = Counter()
for g in all_graphs(5):
    rep = verify_graph_identity(g)
    tally[(rep.holds, not rep.witnesses)] += 1
print(tally)
