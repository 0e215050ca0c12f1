"""Brute-force reference implementations straight from the definitions.

Nothing here imports the package; tests compare package output against these.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product
from math import comb


def reach_sets(vertices, arcs):
    verts = sorted(vertices)
    R = {v: set() for v in verts}
    for u, v in arcs:
        R[u].add(v)
    changed = True
    while changed:
        changed = False
        for u in verts:
            new = set(R[u])
            for w in R[u]:
                new |= R[w]
            if new != R[u]:
                R[u] = new
                changed = True
    return R


def extensions(vertices, arcs):
    arcs = set(arcs)
    out = []
    for pi in permutations(sorted(vertices)):
        pos = {v: i for i, v in enumerate(pi)}
        if all(pos[u] < pos[v] for u, v in arcs):
            out.append(pi)
    return out


def delta_digraph(pi, arcs):
    arcs = set(arcs)
    return sum(1 for u, v in zip(pi, pi[1:]) if u < v or (u, v) in arcs)


def delta_graph(pi, edges):
    E = {frozenset(e) for e in edges}
    return sum(1 for u, v in zip(pi, pi[1:]) if u < v or frozenset((u, v)) in E)


def histogram(deltas, n):
    h = [0] * max(n, 1)
    for d in deltas:
        h[d] += 1
    return h


def digraph_hist(vertices, arcs):
    return histogram([delta_digraph(p, arcs) for p in extensions(vertices, arcs)], len(vertices))


def graph_hist(n, edges):
    return histogram([delta_graph(p, edges) for p in permutations(range(1, n + 1))], n)


def psi_at(hist, n, x):
    return sum(c * comb(x + i, n) for i, c in enumerate(hist))


def omega_count(vertices, arcs, m, strict=False):
    """Order-preserving maps of the reachability order into [m], by full product."""
    verts = sorted(vertices)
    R = reach_sets(verts, arcs)
    pairs = [(u, v) for u in verts for v in R[u]]
    idx = {v: i for i, v in enumerate(verts)}
    total = 0
    for f in product(range(1, m + 1), repeat=len(verts)):
        if all((f[idx[u]] < f[idx[v]]) if strict else (f[idx[u]] <= f[idx[v]]) for u, v in pairs):
            total += 1
    return total


def proper_colorings(n, edges, k):
    return sum(
        1 for f in product(range(k), repeat=n) if all(f[u - 1] != f[v - 1] for u, v in edges)
    )


def lagrange(points):
    """Coefficients (low degree first) of the interpolant through the points."""
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    n = len(pts)
    out = [Fraction(0)] * n
    for j, (xj, yj) in enumerate(pts):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for m, (xm, _) in enumerate(pts):
            if m == j:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xm * basis[k + 1]
            denom *= xj - xm
        for k in range(len(basis)):
            out[k] += yj * basis[k] / denom
    while out and out[-1] == 0:
        out.pop()
    return out


def graph_witnesses(n, edges):
    E = {frozenset(e) for e in edges}
    return {
        (a, b, c)
        for a, b, c in combinations(range(1, n + 1), 3)
        if frozenset((a, c)) in E and frozenset((a, b)) not in E and frozenset((b, c)) not in E
    }


def digraph_witnesses(vertices, arcs):
    R = reach_sets(vertices, arcs)
    arcs = set(arcs)
    return {
        (a, b, c)
        for a, b, c in combinations(sorted(vertices), 3)
        if (c, a) in arcs and b not in R[c] and a not in R[b]
    }


def acyclic_orientation_count(n, edges):
    edges = list(edges)
    count = 0
    for bits in product((0, 1), repeat=len(edges)):
        arcs = [(u, v) if b else (v, u) for (u, v), b in zip(edges, bits)]
        R = reach_sets(range(1, n + 1), arcs)
        if all(v not in R[v] for v in range(1, n + 1)):
            count += 1
    return count


def delta_counts(vertices, arcs):
    """Delta(D, z) as ``{exponent: count}``."""
    out = {}
    for pi in extensions(vertices, arcs):
        k = delta_digraph(pi, arcs)
        out[k] = out.get(k, 0) + 1
    return out


def poly_sub(p, q):
    out = dict(p)
    for k, v in q.items():
        out[k] = out.get(k, 0) - v
    return {k: v for k, v in out.items() if v}


def times_z_minus_1_squared(p):
    out = {}
    for k, v in p.items():
        for s, c in ((2, 1), (1, -2), (0, 1)):
            out[k + s] = out.get(k + s, 0) + c * v
    return {k: v for k, v in out.items() if v}


def defect_vector(vertices, arcs):
    """Solve ``Psi - Omega = sum_j d_j C(x+j, n-2)`` from values at ``x = 1..n-2``.

    At ``x`` only ``j >= n-2-x`` contribute and ``d_{n-2-x}`` has weight 1,
    so the system is triangular.
    """
    n = len(vertices)
    hist = digraph_hist(vertices, arcs)
    d = [0] * (n - 2)
    for x in range(1, n - 1):
        val = psi_at(hist, n, x) - omega_count(vertices, arcs, x)
        j0 = n - 2 - x
        d[j0] = val - sum(d[j] * comb(x + j, n - 2) for j in range(j0 + 1, n - 2))
    return d
