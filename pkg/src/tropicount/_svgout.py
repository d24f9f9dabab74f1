"""Deterministic SVG pictures of tropical curves.

The drawing is fully determined by the curve: vertices are placed at their
exact rational positions (scaled to pixels with a fixed format), bounded edges
become line segments, unbounded ends are clipped where they leave a padded
bounding box, weights above one are printed next to their edge, and marked
points become filled dots.  Rendering twice gives byte-identical output.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from fractions import Fraction
from typing import Dict, List, Tuple

from tropicount.tropical_core import TropicalCurve

Vec = Tuple[Fraction, Fraction]

_SCALE = 48  # pixels per lattice unit
_PAD = Fraction(3, 2)  # lattice units of margin around the vertex hull


def _fmt(x: Fraction) -> str:
    # fixed decimal format keeps the output stable across runs
    return f"{float(x):.3f}"


def _clip_ray(origin: Vec, direction: Tuple[int, int], box) -> Vec:
    """Point where the ray origin + t*direction crosses out of box (t > 0)."""
    x0, y0, x1, y1 = box
    ox, oy = origin
    dx, dy = direction
    best = None
    for coord, d, lo, hi in ((ox, dx, x0, x1), (oy, dy, y0, y1)):
        if d > 0:
            t = Fraction(hi - coord, d)
        elif d < 0:
            t = Fraction(lo - coord, d)
        else:
            continue
        if best is None or t < best:
            best = t
    if best is None or best <= 0:
        raise ValueError("end direction does not leave the bounding box")
    return (ox + best * dx, oy + best * dy)


def render_svg(curve: TropicalCurve) -> str:
    """Render *curve* as a standalone SVG document (a string)."""
    if not curve.edges:
        raise ValueError("cannot render an empty curve")
    pos = curve.positions
    xs = [p[0] for p in pos.values()]
    ys = [p[1] for p in pos.values()]
    box = (min(xs) - _PAD, min(ys) - _PAD, max(xs) + _PAD, max(ys) + _PAD)

    def to_px(p: Vec) -> Tuple[Fraction, Fraction]:
        # svg y grows downward
        return (_SCALE * (p[0] - box[0]), _SCALE * (box[3] - p[1]))

    width = _SCALE * (box[2] - box[0])
    height = _SCALE * (box[3] - box[1])
    root = ET.Element(
        "svg",
        {
            "xmlns": "http://www.w3.org/2000/svg",
            "width": _fmt(width),
            "height": _fmt(height),
            "viewBox": f"0 0 {_fmt(width)} {_fmt(height)}",
        },
    )
    ET.SubElement(
        root,
        "rect",
        {
            "x": "0",
            "y": "0",
            "width": _fmt(width),
            "height": _fmt(height),
            "fill": "white",
        },
    )

    segments: List[Tuple[Vec, Vec, int]] = []
    marks: List[Vec] = []
    for e in curve.edges:
        if e.is_marking:
            marks.append(pos[e.tail])
            continue
        start = pos[e.tail]
        if e.head is not None:
            segments.append((start, pos[e.head], e.weight))
        else:
            segments.append((start, _clip_ray(start, e.direction, box), e.weight))

    for start, stop, weight in segments:
        (ax, ay), (bx, by) = to_px(start), to_px(stop)
        ET.SubElement(
            root,
            "line",
            {
                "x1": _fmt(ax),
                "y1": _fmt(ay),
                "x2": _fmt(bx),
                "y2": _fmt(by),
                "stroke": "#1a1a1a",
                "stroke-width": _fmt(Fraction(2) + Fraction(weight - 1, 2)),
                "stroke-linecap": "round",
            },
        )
        if weight > 1:
            label = ET.SubElement(
                root,
                "text",
                {
                    "x": _fmt((ax + bx) / 2 + 6),
                    "y": _fmt((ay + by) / 2 - 6),
                    "font-family": "monospace",
                    "font-size": "13",
                    "fill": "#b03030",
                },
            )
            label.text = str(weight)

    for p in marks:
        cx, cy = to_px(p)
        ET.SubElement(
            root,
            "circle",
            {
                "cx": _fmt(cx),
                "cy": _fmt(cy),
                "r": "4.5",
                "fill": "#1a1a1a",
            },
        )

    body = ET.tostring(root, encoding="unicode")
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + body + "\n"
