"""Deterministic SVG picture of the chamber tiling of a 2-torus."""
from __future__ import annotations

import math
from fractions import Fraction

from .arrangement import ToricArrangement, require_essential
from .cells import cellulate, lift_periodic
from .local_systems import WrongDimension

PALETTE = [
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
    "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f",
]
SIZE = 480
MARGIN = 20


def chamber_color(k: int) -> str:
    if k < len(PALETTE):
        return PALETTE[k]
    hue = (k * 137.508) % 360
    return f"hsl({hue:.3f},55%,{60 + 15 * (k % 2)}%)"


def _xy(p) -> str:
    x = MARGIN + float(p[0]) * SIZE
    y = MARGIN + (1 - float(p[1])) * SIZE
    return f"{x:.3f},{y:.3f}"


def _ccw(vertices, center):
    return sorted(vertices, key=lambda v: math.atan2(float(v[1] - center[1]), float(v[0] - center[0])))


def _clip_to_square(chi, level):
    a, b = chi
    pts = set()
    for x in (Fraction(0), Fraction(1)):
        if b:
            y = (level - a * x) / b
            if 0 <= y <= 1:
                pts.add((x, y))
    for y in (Fraction(0), Fraction(1)):
        if a:
            x = (level - b * y) / a
            if 0 <= x <= 1:
                pts.add((x, y))
    pts = sorted(pts)
    if len(pts) < 2:
        return None
    return pts[0], pts[-1]


def render_svg(arr: ToricArrangement) -> str:
    if arr.dimension != 2:
        raise WrongDimension(f"rendering needs n = 2, got n = {arr.dimension}")
    require_essential(arr)
    cx = cellulate(arr)
    chamber_id = {}
    for k, c in enumerate(cx.chamber_cells):
        chamber_id[cx.cells.index(c)] = k
    total = SIZE + 2 * MARGIN
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{total}" height="{total}" '
        f'viewBox="0 0 {total} {total}">',
        f'<rect x="{MARGIN}" y="{MARGIN}" width="{SIZE}" height="{SIZE}" fill="none" stroke="#999999" '
        'stroke-dasharray="4,3"/>',
        '<g id="chambers">',
    ]
    tops = [i for i, p in enumerate(cx.pieces) if p.dimension == 2]
    tops.sort(key=lambda i: (chamber_id[cx.piece_cell[i]], cx.pieces[i].barycenter))
    for i in tops:
        p = cx.pieces[i]
        k = chamber_id[cx.piece_cell[i]]
        pts = " ".join(_xy(v) for v in _ccw(p.vertices, p.barycenter))
        out.append(f'<polygon class="chamber" data-chamber="{k}" points="{pts}" '
                   f'fill="{chamber_color(k)}" stroke="none"/>')
    out.append("</g>")
    out.append('<g id="lifted-hyperplanes" stroke="#777777" stroke-width="0.8">')
    for hp in lift_periodic(arr):
        seg = _clip_to_square(hp.chi, hp.level)
        if seg is None:
            continue
        (x1, y1), (x2, y2) = (_xy(seg[0]).split(","), _xy(seg[1]).split(","))
        out.append(f'<line data-source="{hp.source}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    out.append("</g>")
    out.append('<g id="singular-skeleton" stroke="#000000" stroke-width="2.2" fill="#000000">')
    edges = sorted((p.barycenter, sorted(p.vertices)) for p in cx.pieces
                   if p.dimension == 1 and p.singular)
    for _, (u, v) in edges:
        (x1, y1), (x2, y2) = _xy(u).split(","), _xy(v).split(",")
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    for p in sorted((p for p in cx.pieces if p.dimension == 0 and p.singular), key=lambda p: p.barycenter):
        x, y = _xy(p.barycenter).split(",")
        out.append(f'<circle cx="{x}" cy="{y}" r="3"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
