"""SVG drawing of the prism graphs.

Columns U, V, W run left to right with level i drawn at height i. G edges are
solid, G~-only edges dashed, and compatible triangles drawn bold. The WU face
wraps around the back of the prism, so its edges are drawn as arcs.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET

from .flags import FLAG_NAMES, FlagTuple
from .gensets import LayerRef
from .prism import PrismGraph, build_G, compatible_triple

COL_GAP = 120
ROW_GAP = 40
MARGIN = 40


def _xy(r: LayerRef, d: int) -> tuple[int, int]:
    return MARGIN + COL_GAP * r.flag, MARGIN + ROW_GAP * (d - r.level)


def _segment(parent, a: LayerRef, b: LayerRef, d: int, **attrs):
    (x1, y1), (x2, y2) = _xy(a, d), _xy(b, d)
    if {a.flag, b.flag} == {0, 2}:
        # back face: bow outward to the right of W
        cx = MARGIN + COL_GAP * 2 + COL_GAP // 2
        path = f"M{x1} {y1} Q{cx} {(y1 + y2) // 2} {x2} {y2}"
        return ET.SubElement(parent, "path", d=path, fill="none", **attrs)
    return ET.SubElement(parent, "line", x1=str(x1), y1=str(y1), x2=str(x2), y2=str(y2), **attrs)


def prism_svg(t: FlagTuple, g: PrismGraph | None = None) -> str:
    g = g or build_G(t)
    d = g.d
    width = MARGIN * 2 + COL_GAP * 2 + COL_GAP // 2 + 10
    height = MARGIN * 2 + ROW_GAP * (d - 1)
    root = ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        width=str(width),
        height=str(height),
        viewBox=f"0 0 {width} {height}",
    )
    edges = ET.SubElement(root, "g", stroke="black")
    g_set = {frozenset(e) for e in g.g_edges()}
    for a, b in g.gtilde_edges():
        if frozenset((a, b)) not in g_set:
            _segment(edges, a, b, d, **{"stroke-dasharray": "4 3", "stroke-width": "1"})

    bold = set()
    for c in g.cycles:
        if c.is_triangle and compatible_triple(t, *c.vertices):
            bold.update(frozenset(e) for e in c.edges())
    for a, b in g.g_edges():
        w = "3" if frozenset((a, b)) in bold else "1.2"
        _segment(edges, a, b, d, **{"stroke-width": w})

    nodes = ET.SubElement(root, "g")
    for r in g.vertices:
        x, y = _xy(r, d)
        ET.SubElement(nodes, "circle", cx=str(x), cy=str(y), r="5", fill="black")
        label = ET.SubElement(nodes, "text", x=str(x - 22), y=str(y + 4), **{"font-size": "11"})
        label.text = str(r)
    for f in range(3):
        x, _ = _xy(LayerRef(f, d), d)
        head = ET.SubElement(nodes, "text", x=str(x - 4), y=str(MARGIN - 20), **{"font-size": "14"})
        head.text = FLAG_NAMES[f]
    return ET.tostring(root, encoding="unicode") + "\n"
