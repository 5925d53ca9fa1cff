"""Plain-text file formats for hypergraphs and digraphs.

Hypergraph files carry one ``vertices`` header line with ascending labels and
one ``edge`` line per hyperedge (labels ascending, lines in canonical family
order).  Digraph files carry ``vertices`` plus sorted ``arc u v`` lines.
Blank lines and ``#`` comments are ignored on input; rendering is canonical,
so parse(render(h)) round-trips bit-exactly.
"""

from __future__ import annotations

from .core import Digraph, Hypergraph, InvalidInput, make_digraph, make_hypergraph


class FileFormatError(InvalidInput):
    pass


def _content_lines(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def _parse_labels(parts: list[str], line: str) -> list[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise FileFormatError(f"non-integer vertex label in line: {line!r}") from None


def render_hypergraph(h: Hypergraph) -> str:
    lines = ["vertices " + " ".join(map(str, h.vertices)) if h.vertices else "vertices"]
    lines += ["edge " + " ".join(map(str, e)) for e in h.edges]
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> Hypergraph:
    vertices: list[int] | None = None
    edges: list[list[int]] = []
    for line in _content_lines(text):
        parts = line.split()
        if parts[0] == "vertices":
            if vertices is not None:
                raise FileFormatError("duplicate vertices line")
            vertices = _parse_labels(parts[1:], line)
        elif parts[0] == "edge":
            edges.append(_parse_labels(parts[1:], line))
        else:
            raise FileFormatError(f"unrecognized line: {line!r}")
    if vertices is None:
        raise FileFormatError("missing vertices line")
    return make_hypergraph(vertices, edges)


def render_digraph(d: Digraph) -> str:
    lines = ["vertices " + " ".join(map(str, d.vertices)) if d.vertices else "vertices"]
    lines += [f"arc {u} {v}" for u, v in d.arcs]
    return "\n".join(lines) + "\n"


def parse_digraph(text: str) -> Digraph:
    vertices: list[int] | None = None
    arcs: list[tuple[int, int]] = []
    for line in _content_lines(text):
        parts = line.split()
        if parts[0] == "vertices":
            if vertices is not None:
                raise FileFormatError("duplicate vertices line")
            vertices = _parse_labels(parts[1:], line)
        elif parts[0] == "arc":
            labels = _parse_labels(parts[1:], line)
            if len(labels) != 2:
                raise FileFormatError(f"arc line needs exactly two labels: {line!r}")
            arcs.append((labels[0], labels[1]))
        else:
            raise FileFormatError(f"unrecognized line: {line!r}")
    if vertices is None:
        raise FileFormatError("missing vertices line")
    return make_digraph(vertices, arcs)
