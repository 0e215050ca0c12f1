"""Exhaustive generators for small instances, in a fixed canonical order."""

from __future__ import annotations

import itertools
from typing import Iterator

from .errors import CycleDetected
from .structures import AcyclicDigraph, LabeledGraph


def all_graphs(n: int) -> Iterator[LabeledGraph]:
    """All ``2^C(n,2)`` labeled graphs on ``[n]``; edge subsets in binary-counter order."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield LabeledGraph(n, [p for k, p in enumerate(pairs) if mask >> k & 1])


def all_acyclic_digraphs(vertices) -> Iterator[AcyclicDigraph]:
    """Every acyclic digraph on the given vertex set (each pair: none, forward, backward)."""
    verts = sorted(vertices)
    pairs = list(itertools.combinations(verts, 2))
    for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
        arcs = [(u, v) if c == 1 else (v, u) for (u, v), c in zip(pairs, choice) if c]
        try:
            yield AcyclicDigraph(verts, arcs)
        except CycleDetected:
            continue


def digraphs_with_labels(order: int, pool: int) -> Iterator[AcyclicDigraph]:
    """Acyclic digraphs on every ``order``-subset of ``{1..pool}``."""
    for verts in itertools.combinations(range(1, pool + 1), order):
        yield from all_acyclic_digraphs(verts)


def scanned_digraphs(max_order: int, pool: int) -> Iterator[AcyclicDigraph]:
    for k in range(1, max_order + 1):
        yield from digraphs_with_labels(k, pool)


def prufer_decode(seq, n: int) -> LabeledGraph:
    degree = [1] * (n + 1)
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(v for v in range(1, n + 1) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (w for w in range(1, n + 1) if degree[w] == 1)
    edges.append((u, v))
    return LabeledGraph(n, edges)


def labeled_trees(n: int) -> Iterator[LabeledGraph]:
    """All ``n^(n-2)`` labeled trees on ``[n]`` via Prufer sequences."""
    if n == 1:
        yield LabeledGraph(1, [])
        return
    if n == 2:
        yield LabeledGraph(2, [(1, 2)])
        return
    for seq in itertools.product(range(1, n + 1), repeat=n - 2):
        yield prufer_decode(seq, n)


def tree_centers(t: LabeledGraph) -> list[int]:
    deg = {v: t.degree(v) for v in t.vertices}
    layer = [v for v in t.vertices if deg[v] <= 1]
    left = t.n
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            for w in t.neighborhood(v):
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def _encode(t: LabeledGraph, v: int, parent: int | None) -> str:
    kids = sorted(_encode(t, w, v) for w in t.neighborhood(v) if w != parent)
    return "(" + "".join(kids) + ")"


def tree_canonical_form(t: LabeledGraph) -> str:
    """Rooted-at-center parenthesis encoding; equal iff the trees are isomorphic."""
    return min(_encode(t, c, None) for c in tree_centers(t))


def unlabeled_trees(n: int) -> Iterator[tuple[str, LabeledGraph]]:
    """One representative per isomorphism class, first Prufer occurrence, sorted by code."""
    seen: dict[str, LabeledGraph] = {}
    for t in labeled_trees(n):
        seen.setdefault(tree_canonical_form(t), t)
    for code in sorted(seen):
        yield code, seen[code]
