"""Labeled graphs, acyclic digraphs and posets.

Labels matter: every statistic in this package reads the natural order of
the integer vertex labels, so two isomorphic objects with different
labelings are different objects here.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Mapping

from .errors import CycleDetected, LabelCollision, PreconditionViolated, UnknownVertex

Ordering = tuple[int, ...]


class LabeledGraph:
    """Simple undirected graph on the vertex set ``[n] = {1..n}``."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise ValueError("n must be non-negative")
        norm = set()
        for e in edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise UnknownVertex(f"edge {u}-{v} leaves [1..{n}]")
            norm.add((min(u, v), max(u, v)))
        self.n = n
        self.edges = frozenset(norm)
        adj = {v: set() for v in range(1, n + 1)}
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: frozenset(s) for v, s in adj.items()}

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighborhood(self, u: int) -> frozenset[int]:
        try:
            return self._adj[u]
        except KeyError:
            raise UnknownVertex(u) from None

    def degree(self, u: int) -> int:
        return len(self.neighborhood(u))

    def relabel(self, omega: Mapping[int, int]) -> "LabeledGraph":
        """``G_omega``: vertex ``v`` becomes ``omega[v]``; ``omega`` must permute ``[n]``."""
        if sorted(omega) != list(self.vertices) or sorted(omega.values()) != list(self.vertices):
            raise LabelCollision("relabeling of a LabeledGraph must be a bijection of [n]")
        return LabeledGraph(self.n, ((omega[u], omega[v]) for u, v in self.edges))

    def induced_subgraph(self, S: Iterable[int]) -> "LabeledGraph":
        """``G[S]`` relabeled order-preservingly onto ``[|S|]``.

        Order-preserving relabeling leaves every label-order statistic
        (delta, witnesses, Psi) unchanged.
        """
        keep = sorted(set(S))
        for v in keep:
            if v not in self._adj:
                raise UnknownVertex(v)
        pos = {v: i + 1 for i, v in enumerate(keep)}
        return LabeledGraph(len(keep), ((pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos))

    def delete_vertex(self, u: int) -> "LabeledGraph":
        return self.induced_subgraph(v for v in self.vertices if v != u)

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for s in self.vertices:
            if s in seen:
                continue
            comp, stack = [], [s]
            seen.add(s)
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self._adj[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def is_tree(self) -> bool:
        return self.n >= 1 and len(self.edges) == self.n - 1 and self.is_connected()

    def __eq__(self, other) -> bool:
        return isinstance(other, LabeledGraph) and (self.n, self.edges) == (other.n, other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"LabeledGraph({self.n}, {sorted(self.edges)})"

    @classmethod
    def complete(cls, n: int) -> "LabeledGraph":
        return cls(n, combinations(range(1, n + 1), 2))

    @classmethod
    def path(cls, n: int) -> "LabeledGraph":
        return cls(n, ((i, i + 1) for i in range(1, n)))


class AcyclicDigraph:
    """Acyclic digraph on a finite set of positive-integer labels.

    Reachability is computed once at construction; ``reaches(u, v)`` is true
    iff a directed path with at least one arc leads from ``u`` to ``v``.
    """

    __slots__ = ("vertices", "arcs", "_out", "_in", "_reach", "_topo", "_cache")

    def __init__(self, vertices: Iterable[int] = (), arcs: Iterable[tuple[int, int]] = ()):
        arcs = frozenset((int(u), int(v)) for u, v in arcs)
        verts = set(int(v) for v in vertices)
        for u, v in arcs:
            if u == v:
                raise CycleDetected(f"loop at {u}")
            verts.add(u)
            verts.add(v)
        if any(v < 1 for v in verts):
            raise ValueError("vertex labels must be positive integers")
        self.vertices = frozenset(verts)
        self.arcs = arcs
        out = {v: set() for v in verts}
        inn = {v: set() for v in verts}
        for u, v in arcs:
            out[u].add(v)
            inn[v].add(u)
        self._out = {v: frozenset(s) for v, s in out.items()}
        self._in = {v: frozenset(s) for v, s in inn.items()}
        self._topo = self._toposort()
        reach: dict[int, frozenset[int]] = {}
        for v in reversed(self._topo):
            r = set()
            for w in self._out[v]:
                r.add(w)
                r |= reach[w]
            reach[v] = frozenset(r)
        self._reach = reach
        self._cache: dict = {}

    def _toposort(self) -> list[int]:
        indeg = {v: len(self._in[v]) for v in self.vertices}
        ready = sorted(v for v, d in indeg.items() if d == 0)
        order = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            for w in sorted(self._out[v]):
                indeg[w] -= 1
                if indeg[w] == 0:
                    ready.append(w)
            ready.sort()
        if len(order) != len(self.vertices):
            raise CycleDetected("arcs contain a directed cycle")
        return order

    # -- basic queries -------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.vertices)

    def sorted_vertices(self) -> list[int]:
        return sorted(self.vertices)

    def _check(self, u: int) -> None:
        if u not in self.vertices:
            raise UnknownVertex(u)

    def out_neighbors(self, u: int) -> frozenset[int]:
        """``F_D(u)``."""
        self._check(u)
        return self._out[u]

    def in_neighbors(self, u: int) -> frozenset[int]:
        """``B_D(u)``."""
        self._check(u)
        return self._in[u]

    def reach(self, u: int) -> frozenset[int]:
        """``R_D(u)``: vertices reachable from ``u`` by a non-empty path."""
        self._check(u)
        return self._reach[u]

    def reach_closed(self, u: int) -> frozenset[int]:
        """``R_D[u] = R_D(u) | {u}``."""
        return self.reach(u) | {u}

    def reaches(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._reach[u]

    def incomparable(self, u: int, v: int) -> bool:
        return not self.reaches(u, v) and not self.reaches(v, u)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def sinks(self) -> frozenset[int]:
        return frozenset(v for v in self.vertices if not self._out[v])

    def sources(self) -> frozenset[int]:
        return frozenset(v for v in self.vertices if not self._in[v])

    def inversions(self) -> frozenset[tuple[int, int]]:
        """``Re(D)``: arcs ``(a, b)`` with ``a > b``."""
        return frozenset((a, b) for a, b in self.arcs if a > b)

    def topological_order(self) -> list[int]:
        return list(self._topo)

    # -- derived digraphs ----------------------------------------------
    def relabel(self, mapping: Mapping[int, int]) -> "AcyclicDigraph":
        """Rename vertices by ``mapping`` (unmapped vertices keep their label)."""
        for u in mapping:
            self._check(u)
        f = {v: mapping.get(v, v) for v in self.vertices}
        if len(set(f.values())) != len(f):
            raise LabelCollision(f"relabeling {dict(mapping)} is not injective on {sorted(self.vertices)}")
        return AcyclicDigraph(f.values(), ((f[u], f[v]) for u, v in self.arcs))

    def relabel_vertex(self, a: int, r: int) -> "AcyclicDigraph":
        """``D_{a->r}``."""
        return self.relabel({a: r})

    def induced(self, S: Iterable[int]) -> "AcyclicDigraph":
        S = frozenset(S)
        for v in S:
            self._check(v)
        return AcyclicDigraph(S, ((u, v) for u, v in self.arcs if u in S and v in S))

    def delete_vertex(self, u: int) -> "AcyclicDigraph":
        self._check(u)
        return self.induced(self.vertices - {u})

    def closure(self) -> "Poset":
        return Poset.from_digraph(self)

    # -- linear extensions ---------------------------------------------
    def is_extension(self, seq: Iterable[int]) -> bool:
        seq = tuple(seq)
        if len(seq) != self.n or set(seq) != self.vertices:
            return False
        pos = {v: i for i, v in enumerate(seq)}
        return all(pos[u] < pos[v] for u, v in self.arcs)

    def iter_extensions(self) -> Iterator[Ordering]:
        """All ``D``-respecting orderings in lexicographic order."""
        verts = self.sorted_vertices()
        indeg = {v: len(self._in[v]) for v in verts}
        seq: list[int] = []
        used: set[int] = set()
        n = len(verts)

        def rec():
            if len(seq) == n:
                yield tuple(seq)
                return
            for v in verts:
                if v not in used and indeg[v] == 0:
                    used.add(v)
                    seq.append(v)
                    for w in self._out[v]:
                        indeg[w] -= 1
                    yield from rec()
                    for w in self._out[v]:
                        indeg[w] += 1
                    seq.pop()
                    used.discard(v)

        yield from rec()

    def __eq__(self, other) -> bool:
        return isinstance(other, AcyclicDigraph) and (self.vertices, self.arcs) == (other.vertices, other.arcs)

    def __hash__(self) -> int:
        return hash((self.vertices, self.arcs))

    def __repr__(self) -> str:
        return f"AcyclicDigraph({sorted(self.vertices)}, {sorted(self.arcs)})"


def reachability_closure(d: AcyclicDigraph) -> AcyclicDigraph:
    """Populate reachability.  Construction already does this, so it is the identity."""
    return d


def linear_extensions(d: AcyclicDigraph) -> list[Ordering]:
    """``OP(D)`` in lexicographic order."""
    return list(d.iter_extensions())


def sinks(d: AcyclicDigraph) -> frozenset[int]:
    return d.sinks()


def sources(d: AcyclicDigraph) -> frozenset[int]:
    return d.sources()


def remove_from_ordering(pi: Ordering, a: int) -> Ordering:
    """``pi - a``."""
    return tuple(v for v in pi if v != a)


def substitute_in_ordering(pi: Ordering, a: int, m: int) -> Ordering:
    """``pi_{a->m}``."""
    return tuple(m if v == a else v for v in pi)


def map_ordering(pi: Ordering, f: Mapping[int, int]) -> Ordering:
    return tuple(f[v] for v in pi)


class Poset:
    """Finite poset on positive integers, stored as its strict relation."""

    __slots__ = ("elements", "_above")

    def __init__(self, elements: Iterable[int], less: Iterable[tuple[int, int]] = ()):
        self.elements = frozenset(elements)
        above = {v: set() for v in self.elements}
        for u, v in less:
            if u not in above or v not in above:
                raise UnknownVertex((u, v))
            above[u].add(v)
        # transitive closure, then check antisymmetry
        changed = True
        while changed:
            changed = False
            for u in above:
                extra = set()
                for v in above[u]:
                    extra |= above[v]
                if not extra <= above[u]:
                    above[u] |= extra
                    changed = True
        for u in above:
            if u in above[u]:
                raise CycleDetected("relation is not antisymmetric")
        self._above = {u: frozenset(s) for u, s in above.items()}

    @classmethod
    def from_digraph(cls, d: AcyclicDigraph) -> "Poset":
        """Reflexive-transitive closure ``D-bar``."""
        p = cls.__new__(cls)
        p.elements = d.vertices
        p._above = {v: d.reach(v) for v in d.vertices}
        return p

    @classmethod
    def chain(cls, n: int) -> "Poset":
        return cls(range(1, n + 1), ((i, i + 1) for i in range(1, n)))

    @classmethod
    def antichain(cls, n: int) -> "Poset":
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self.elements)

    def lt(self, u: int, v: int) -> bool:
        return v in self._above[u]

    def leq(self, u: int, v: int) -> bool:
        return u == v or self.lt(u, v)

    def above(self, u: int) -> frozenset[int]:
        return self._above[u]

    def strict_pairs(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u in self.elements for v in self._above[u])

    def as_digraph(self) -> AcyclicDigraph:
        """The comparability digraph (all strict relations as arcs)."""
        return AcyclicDigraph(self.elements, self.strict_pairs())

    def linear_extensions(self) -> list[Ordering]:
        return linear_extensions(self.as_digraph())

    def __eq__(self, other) -> bool:
        return isinstance(other, Poset) and self.elements == other.elements and self._above == other._above

    def __hash__(self) -> int:
        return hash((self.elements, tuple(sorted(self.strict_pairs()))))

    def __repr__(self) -> str:
        return f"Poset({sorted(self.elements)}, {self.strict_pairs()})"


def require(cond: bool, msg: str) -> None:
    if not cond:
        raise PreconditionViolated(msg)
