"""Static SVG rendering of an instance and, optionally, a tree inside it."""

from __future__ import annotations

from typing import Iterable

from .graphs import Edge, GeometricGraph

# Styling constants: the viewBox is the bounding box plus MARGIN_FRACTION
# on each side; stroke widths and point radii scale with the box.
MARGIN_FRACTION = 0.05
POINT_RADIUS_FRACTION = 0.012
EDGE_WIDTH_FRACTION = 0.003
TREE_WIDTH_FRACTION = 0.009
EDGE_COLOR = "#b8b8b8"
TREE_COLOR = "#c0392b"
POINT_COLOR = "#2c3e50"


def render_svg(g: GeometricGraph, tree_edges: Iterable[Edge] | None = None) -> str:
    xs = [p.x for p in g.ps]
    ys = [p.y for p in g.ps]
    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    span = max(max_x - min_x, max_y - min_y, 1)
    margin = max(1, round(span * MARGIN_FRACTION))
    vb_x = min_x - margin
    vb_y = min_y - margin
    vb_w = (max_x - min_x) + 2 * margin
    vb_h = (max_y - min_y) + 2 * margin

    radius = max(1, round(span * POINT_RADIUS_FRACTION))
    edge_w = max(1, round(span * EDGE_WIDTH_FRACTION))
    tree_w = max(1, round(span * TREE_WIDTH_FRACTION))

    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{vb_x} {vb_y} {vb_w} {vb_h}">',
        # Flip the y axis so the picture matches mathematical orientation.
        f'<g transform="translate(0 {vb_y + vb_y + vb_h}) scale(1 -1)">',
    ]
    for i, j in sorted(g.edges):
        a, b = g.ps[i], g.ps[j]
        lines.append(
            f'<line x1="{a.x}" y1="{a.y}" x2="{b.x}" y2="{b.y}" '
            f'stroke="{EDGE_COLOR}" stroke-width="{edge_w}"/>'
        )
    for i, j in sorted(set(tree_edges or [])):
        a, b = g.ps[i], g.ps[j]
        lines.append(
            f'<line x1="{a.x}" y1="{a.y}" x2="{b.x}" y2="{b.y}" '
            f'stroke="{TREE_COLOR}" stroke-width="{tree_w}"/>'
        )
    for p in g.ps:
        lines.append(
            f'<circle cx="{p.x}" cy="{p.y}" r="{radius}" fill="{POINT_COLOR}"/>'
        )
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def write_svg(
    g: GeometricGraph, path: str, tree_edges: Iterable[Edge] | None = None
) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_svg(g, tree_edges))
