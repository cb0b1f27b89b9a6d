"""Text, DOT and JSON renderings of Munn trees and Cayley-digraph balls."""
from __future__ import annotations

from .cayley import EdgeKind, ball_edges
from .fim import MunnTree
from .monogenic import Interval, element_label, enumerate_ball, normal_form


def munn_ascii(m: Interval) -> str:
    """Draw the Munn tree as a horizontal path; ``*`` is the out-vertex, label ``0`` the in-vertex.

    >>> print(munn_ascii(Interval(0, 2, 1)))
    o---*---o
    0   1   2
    """
    labels = [str(i) for i in range(m.a, m.b + 1)]
    width = max(len(s) for s in labels) + 3
    nodes, marks = [], []
    for i, label in zip(range(m.a, m.b + 1), labels):
        glyph = "*" if i == m.t else "o"
        last = i == m.b
        nodes.append(glyph if last else glyph + "-" * (width - 1))
        marks.append(label if last else label.ljust(width))
    return "\n".join(["".join(nodes), "".join(marks)])


def munn_tree_ascii(tree: MunnTree) -> str:
    """Indented listing of a general Munn tree, one vertex per line."""
    lines = []
    for v in sorted(tree.vertices):
        name = v or "1"
        tags = []
        if not v:
            tags.append("in")
        if v == tree.out:
            tags.append("out")
        suffix = f" ({', '.join(tags)})" if tags else ""
        lines.append("  " * len(v) + name + (" *" if v == tree.out else "") + suffix)
    return "\n".join(lines)


def munn_dot(m: Interval) -> str:
    lines = ["digraph munn {", "  rankdir=LR;", "  node [shape=circle];"]
    for i in range(m.a, m.b + 1):
        attrs = [f'label="{i}"']
        if i == 0:
            attrs.append("shape=doublecircle")
        if i == m.t:
            attrs.append("style=filled fillcolor=black fontcolor=white")
        lines.append(f"  v{i - m.a} [{' '.join(attrs)}];")
    for i in range(m.a, m.b):
        lines.append(f'  v{i - m.a} -> v{i + 1 - m.a} [label="x"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def munn_tree_dot(tree: MunnTree) -> str:
    order = tree.sorted_vertices()
    index = {v: i for i, v in enumerate(order)}
    lines = ["digraph munn {", "  node [shape=circle];"]
    for v in order:
        attrs = [f'label="{v or "1"}"']
        if not v:
            attrs.append("shape=doublecircle")
        if v == tree.out:
            attrs.append("style=filled fillcolor=black fontcolor=white")
        lines.append(f"  v{index[v]} [{' '.join(attrs)}];")
    for u, letter, w in tree.edges():
        lines.append(f'  v{index[u]} -> v{index[w]} [label="{letter}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def munn_json(m: Interval) -> dict:
    return {
        "interval": m.to_json(),
        "normal_form": normal_form(m).to_json(),
        "label": element_label(m),
        "vertices": list(range(m.a, m.b + 1)),
        "out": m.t,
    }


def cayley_edges_json(N: int) -> list[dict]:
    return [{**e.to_json(), **cls.to_json()} for e, cls in ball_edges(N)]


_EDGE_STYLE = {
    EdgeKind.TREE: "style=solid",
    EdgeKind.STRONG: "style=dashed",
    EdgeKind.TRANSITION: "style=bold",
}


def cayley_dot(N: int) -> str:
    vertices = enumerate_ball(N)
    index = {v: i for i, v in enumerate(vertices)}
    lines = [f"digraph cayley_ball_{N} {{", "  node [shape=box];"]
    for v in vertices:
        lines.append(f'  n{index[v]} [label="{element_label(v)}"];')
    for e, cls in ball_edges(N):
        attrs = [f'label="{e.gen}"', _EDGE_STYLE[cls.kind]]
        if cls.kind is EdgeKind.TRANSITION:
            attrs[0] = f'label="{e.gen} w={cls.weight}"'
        lines.append(f"  n{index[e.source]} -> n{index[e.target]} [{' '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cayley_ascii(N: int) -> str:
    rows = []
    for e, cls in ball_edges(N):
        tag = cls.kind.value if cls.weight in (None, 0) else f"{cls.kind.value} w={cls.weight}"
        rows.append(f"{element_label(e.source)} --{e.gen}--> {element_label(e.target)}  [{tag}]")
    return "\n".join(rows)
