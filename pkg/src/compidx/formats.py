"""Digraph text format and Graphviz DOT export.

Text format (UTF-8, line oriented, ``#`` starts a comment)::

    digraph <n>
    parts <p0> <p1> ... <p{n-1}>    # optional
    <u> <v>                          # one arc per line
"""

from __future__ import annotations

from pathlib import Path

from .core import Digraph, SimpleGraph, build_digraph
from .errors import FormatError


def parse_digraph(text: str, require_multipartite: bool = False) -> Digraph:
    n = None
    parts = None
    arcs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        try:
            if tokens[0] == "digraph":
                if n is not None or len(tokens) != 2:
                    raise FormatError(f"line {lineno}: bad header")
                n = int(tokens[1])
            elif tokens[0] == "parts":
                if n is None:
                    raise FormatError(f"line {lineno}: 'parts' before header")
                parts = [int(t) for t in tokens[1:]]
            else:
                if n is None:
                    raise FormatError(f"line {lineno}: arc before header")
                if len(tokens) != 2:
                    raise FormatError(f"line {lineno}: expected '<u> <v>'")
                arcs.append((int(tokens[0]), int(tokens[1])))
        except ValueError as exc:
            if isinstance(exc, FormatError):
                raise
            raise FormatError(f"line {lineno}: {exc}") from None
    if n is None:
        raise FormatError("missing 'digraph <n>' header")
    return build_digraph(n, arcs, parts, require_multipartite=require_multipartite)


def format_digraph(d: Digraph) -> str:
    lines = [f"digraph {d.n}"]
    if d.partition is not None:
        lines.append("parts " + " ".join(map(str, d.partition)))
    lines.extend(f"{u} {v}" for u, v in d.arcs)
    return "\n".join(lines) + "\n"


def read_digraph(path, require_multipartite: bool = False) -> Digraph:
    return parse_digraph(Path(path).read_text(encoding="utf-8"), require_multipartite)


def write_digraph(d: Digraph, path) -> None:
    Path(path).write_text(format_digraph(d), encoding="utf-8")


def digraph_to_dot(d: Digraph, name: str = "D") -> str:
    lines = [f"digraph {name} {{"]
    lines.extend(f"  v{v};" for v in range(d.n))
    lines.extend(f"  v{u} -> v{v};" for u, v in d.arcs)
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_dot(g: SimpleGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  v{v};" for v in range(g.n))
    lines.extend(f"  v{u} -- v{v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_graph_dot(text: str) -> SimpleGraph:
    """Read back a graph written by :func:`graph_to_dot`."""
    n = 0
    edges = []
    for raw in text.splitlines():
        line = raw.strip().rstrip(";")
        if "--" in line:
            u, v = (int(t.strip()[1:]) for t in line.split("--"))
            edges.append((u, v))
        elif line.startswith("v"):
            n = max(n, int(line[1:]) + 1)
    return SimpleGraph.from_edges(n, edges)


def parse_digraph_dot(text: str) -> Digraph:
    """Read back a digraph written by :func:`digraph_to_dot`."""
    n = 0
    arcs = []
    for raw in text.splitlines():
        line = raw.strip().rstrip(";")
        if "->" in line:
            u, v = (int(t.strip()[1:]) for t in line.split("->"))
            arcs.append((u, v))
        elif line.startswith("v"):
            n = max(n, int(line[1:]) + 1)
    return build_digraph(n, arcs)
