"""Canonical text format.

Graph::

    graph 3
    1 3

Digraph::

    digraph
    vertex 2
    1 -> 3

Whitespace separated; ``#`` starts a comment.  ``format_*`` always emits
every vertex line and sorted edges, so equal objects serialize to equal text.
"""

from __future__ import annotations

from pathlib import Path

from .errors import ParseError
from .structures import AcyclicDigraph, LabeledGraph


def _lines(text: str):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def parse(text: str) -> LabeledGraph | AcyclicDigraph:
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty input")
    head = lines[0].split()
    try:
        if head[0] == "graph":
            if len(head) != 2:
                raise ParseError("expected 'graph <n>'")
            n = int(head[1])
            edges = []
            for line in lines[1:]:
                parts = line.split()
                if len(parts) != 2:
                    raise ParseError(f"bad edge line {line!r}")
                edges.append((int(parts[0]), int(parts[1])))
            return LabeledGraph(n, edges)
        if head[0] == "digraph":
            if len(head) != 1:
                raise ParseError("expected bare 'digraph' header")
            verts, arcs = [], []
            for line in lines[1:]:
                parts = line.split()
                if parts[0] == "vertex" and len(parts) == 2:
                    verts.append(int(parts[1]))
                elif len(parts) == 3 and parts[1] == "->":
                    arcs.append((int(parts[0]), int(parts[2])))
                else:
                    raise ParseError(f"bad digraph line {line!r}")
            return AcyclicDigraph(verts, arcs)
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    raise ParseError(f"unknown header {lines[0]!r}")


def load(path: str | Path) -> LabeledGraph | AcyclicDigraph:
    return parse(Path(path).read_text())


def format_graph(g: LabeledGraph) -> str:
    out = [f"graph {g.n}"]
    out += [f"{u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(out) + "\n"


def format_digraph(d: AcyclicDigraph) -> str:
    out = ["digraph"]
    out += [f"vertex {v}" for v in d.sorted_vertices()]
    out += [f"{u} -> {v}" for u, v in sorted(d.arcs)]
    return "\n".join(out) + "\n"


def dumps(obj: LabeledGraph | AcyclicDigraph) -> str:
    if isinstance(obj, LabeledGraph):
        return format_graph(obj)
    return format_digraph(obj)
