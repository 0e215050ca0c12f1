# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
# ---

# %% [markdown]
# # Relabeling one vertex at a time
#
# Moving a vertex to a large label changes Delta(D, z) by (z-1)^2 times a
# polynomial with non-negative coefficients.  Repeating this along a
# sink-elimination ordering reaches a digraph with no inverted arcs, and
# the accumulated quotients give the defect Psi - Omega.

# %%
from orderpoly import AcyclicDigraph, delta_poly, theorem_defect
from orderpoly.relabel import (
    delta_diff_large_relabel,
    delta_diff_turning,
    large_relabel_formula,
    sink_elimination_orderings,
    sink_elimination_sequence,
)

d2 = AcyclicDigraph([1, 2, 3], [(3, 1)])
print("Delta(D2)         =", delta_poly(d2))
print("Delta(D2, 2 -> 4) =", delta_poly(d2.relabel_vertex(2, 4)))
print("difference       =", delta_diff_large_relabel(d2, 2, 4))

# %% [markdown]
# ## Degenerate insertion gaps
#
# When an extension of D - a leaves a single slot for a, that extension
# contributes nothing.  Summing the closed form over every extension
# anyway gives the wrong answer on this instance.

# %%
d = AcyclicDigraph([1, 2, 3], [(2, 3), (3, 1)])
direct = delta_poly(d) - delta_poly(d.relabel_vertex(3, 4))
print("direct  :", direct)
print("guarded :", large_relabel_formula(d, 3))
print("literal :", large_relabel_formula(d, 3, literal=True))

# %% [markdown]
# ## Sink-elimination sequences

# %%
for alpha in sink_elimination_orderings(d2):
    g = sink_elimination_sequence(d2, alpha)
    print(alpha, [sorted(x.arcs) for x in g.digraphs], "defect", g.defect)
print("theorem_defect:", theorem_defect(d2))

# %% [markdown]
# ## A vanishing difference with a witness present
#
# Here 1 always sits between 4 and 2, so relabeling 2 upward does not
# change Delta, although 2 lies in the witness (2, 3, 4).  The formula
# still holds; only the claim that the difference vanishes exactly when
# the vertex is in no witness fails.

# %%
d = AcyclicDigraph([1, 2, 3, 4], [(1, 2), (4, 1), (4, 2)])
t = delta_diff_turning(d, 2, strict=False)
print("r =", t.r, "difference =", t.delta_diff, "iff holds:", t.iff_holds)
for alpha in sink_elimination_orderings(d):
    g = sink_elimination_sequence(d, alpha)
    if g.step_iff_failures:
        print(alpha, "steps with zero quotient but fewer witnesses:", g.step_iff_failures)
        break
