"""Renderings of weighted snake graphs: ASCII, SVG, TikZ and a JSON dump.

Weighted edges follow the blue (q) / red (1/q) palette; weight-1 edges are
thin and black.  All output is deterministic: edges are emitted in sorted
order on a fixed unit-square scale.
"""

from __future__ import annotations

import json

from .snake import SnakeGraph

CELL_W = 6
CELL_H = 2

_LABEL = {1: "q", -1: "q^-1"}


def ascii_render(g: SnakeGraph) -> str:
    """Character-grid picture; weighted vertical edges carry their label
    just inside the box, horizontal ones inline in the edge."""
    assert g.weight_exp is not None
    max_x = max(v[0] for v in g.vertices)
    max_y = max(v[1] for v in g.vertices)
    width = max_x * CELL_W + 1
    height = max_y * CELL_H + 1
    canvas = [[" "] * width for _ in range(height)]

    def at(x, y):
        return (max_y - y) * CELL_H, x * CELL_W

    for (x1, y1), (x2, y2) in g.edges:
        exp = g.weight_exp[((x1, y1), (x2, y2))]
        row, col = at(x1, y1)
        if y1 == y2:  # horizontal
            body = "-" * (CELL_W - 1) if exp == 0 else _LABEL[exp].center(CELL_W - 1, "-")
            canvas[row][col + 1:col + CELL_W] = body
        else:  # vertical
            canvas[row - 1][col] = "|"
            if exp:
                label = _LABEL[exp]
                canvas[row - 1][col + 1:col + 1 + len(label)] = label
    for x, y in g.vertices:
        row, col = at(x, y)
        canvas[row][col] = "+"
    return "\n".join("".join(line).rstrip() for line in canvas)


def svg_render(g: SnakeGraph, scale: int = 40, margin: int = 20) -> str:
    assert g.weight_exp is not None
    max_x = max(v[0] for v in g.vertices)
    max_y = max(v[1] for v in g.vertices)
    width = max_x * scale + 2 * margin
    height = max_y * scale + 2 * margin

    def pt(v):
        return margin + v[0] * scale, margin + (max_y - v[1]) * scale

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
             f'height="{height}" viewBox="0 0 {width} {height}">']
    labels = []
    for e in g.edges:
        (x1, y1), (x2, y2) = pt(e[0]), pt(e[1])
        exp = g.weight_exp[e]
        color = "blue" if exp == 1 else ("red" if exp == -1 else "black")
        sw = 3 if exp else 1.5
        parts.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
                     f'stroke="{color}" stroke-width="{sw}"/>')
        if exp:
            mx, my = (x1 + x2) / 2, (y1 + y2) / 2
            text = "q" if exp == 1 else "q⁻¹"
            if e[0][0] == e[1][0]:  # vertical: label to the left
                labels.append(f'<text x="{mx - 6}" y="{my + 4}" font-size="13" '
                              f'fill="{color}" text-anchor="end">{text}</text>')
            else:  # horizontal: label below
                labels.append(f'<text x="{mx}" y="{my + 16}" font-size="13" '
                              f'fill="{color}" text-anchor="middle">{text}</text>')
    parts.extend(labels)
    parts.append("</svg>")
    return "\n".join(parts)


def tikz_render(g: SnakeGraph) -> str:
    assert g.weight_exp is not None
    lines = ["\\begin{tikzpicture}[scale=0.7]"]
    for e in g.edges:
        (x1, y1), (x2, y2) = e
        exp = g.weight_exp[e]
        if exp == 0:
            lines.append(f"\\draw[line width=0.7pt] ({x1},{y1}) -- ({x2},{y2});")
        else:
            color = "blue" if exp == 1 else "red"
            label = "$q$" if exp == 1 else "$q^{-1}$"
            anchor = "left" if x1 == x2 else "below"
            lines.append(f"\\draw[line width=2pt,{color}] ({x1},{y1}) -- "
                         f"node[{anchor}]{{{label}}} ({x2},{y2});")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines)


def graph_json(g: SnakeGraph) -> dict:
    assert g.weight_exp is not None and g.orientation is not None
    return {
        "boxes": [list(b) for b in g.boxes],
        "black": [list(v) for v in g.black_vertices],
        "white": [list(v) for v in g.white_vertices],
        "edges": [
            {
                "u": list(e[0]),
                "v": list(e[1]),
                "weight_exp": g.weight_exp[e],
                "tail": list(g.orientation[e][0]),
                "head": list(g.orientation[e][1]),
            }
            for e in g.edges
        ],
    }


def render(g: SnakeGraph, fmt: str) -> str:
    if fmt == "ascii":
        return ascii_render(g)
    if fmt == "svg":
        return svg_render(g)
    if fmt == "tikz":
        return tikz_render(g)
    if fmt == "json":
        return json.dumps(graph_json(g), indent=2)
    raise ValueError(f"unknown render format {fmt!r}")
