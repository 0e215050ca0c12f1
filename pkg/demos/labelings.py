# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
# ---

# %% [markdown]
# # Graphs with a witness-free labeling
#
# A graph belongs to the class when some relabeling leaves no witness
# triple.  Complete multipartite graphs belong under every labeling;
# caterpillars have an explicit labeling; among trees, membership seems
# to coincide with being a caterpillar.

# %%
from orderpoly import LabeledGraph, gn_membership, witnesses
from orderpoly.gn import caterpillar_labeling, complete_multipartite, multipartite_random_check, spider, structured_membership

k = complete_multipartite([2, 3])
print("K_{2,3} survives 20 random relabelings:", multipartite_random_check(k, trials=20))

# %%
cat = LabeledGraph(7, [(1, 2), (2, 3), (3, 4), (2, 5), (3, 6), (3, 7)])
omega = caterpillar_labeling(cat)
print("caterpillar labeling:", omega, "witnesses after:", sorted(witnesses(cat.relabel(omega)).triples))

# %% [markdown]
# The spider with three legs of length 2 is the smallest tree that is
# not a caterpillar, and the search finds no labeling for it.

# %%
s = spider([2, 2, 2])
print(s, gn_membership(s).to_json())

# %%
g = LabeledGraph(6, [(1, 4), (1, 5), (1, 6), (2, 3)])
print(structured_membership(g).to_json())

# %%
from orderpoly import tree_conjecture_scan

rep = tree_conjecture_scan(8).to_json()
print(rep["by_order"], "agreement:", rep["agreement"])
