"""Static SVG drawing of the wedge with both robots' traces."""
from __future__ import annotations

import math

from .geometry import PhysPoint

RADIUS = 100.0
SIZE = 520.0
STROKES = {"A": "#d62728", "B": "#1f77b4"}


def _center(circle: int) -> tuple[float, float]:
    angle = math.radians(90 + 120 * (circle - 1))
    return RADIUS * math.cos(angle), RADIUS * math.sin(angle)


def planar(p: PhysPoint) -> tuple[float, float]:
    """Plane coordinates (y up, vertex at the origin) of a point of the wedge."""
    if p.is_vertex:
        return 0.0, 0.0
    cx, cy = _center(p.circle)
    # start from the vertex side of the circle and turn counterclockwise
    angle = math.atan2(-cy, -cx) + 2 * math.pi * p.t
    return cx + RADIUS * math.cos(angle), cy + RADIUS * math.sin(angle)


def _xy(p: PhysPoint) -> tuple[float, float]:
    x, y = planar(p)
    return round(SIZE / 2 + x, 3), round(SIZE / 2 - y, 3)


def render(traj, title: str = "") -> str:
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE:g}" height="{SIZE:g}" '
        f'viewBox="0 0 {SIZE:g} {SIZE:g}">',
    ]
    if title:
        parts.append(f"<title>{title}</title>")
    for circle in (1, 2, 3):
        cx, cy = _center(circle)
        parts.append(f'<circle cx="{SIZE / 2 + cx:.3f}" cy="{SIZE / 2 - cy:.3f}" r="{RADIUS:g}" '
                     'fill="none" stroke="#888888" stroke-width="2"/>')
        px, py = _xy(PhysPoint(circle, 0.5))
        parts.append(f'<text x="{px}" y="{py}" font-size="14" fill="#444444">pole {circle}</text>')
    for robot, offset in (("A", -3.0), ("B", 3.0)):
        pts = [_xy(getattr(st, robot)) for st in traj.states]
        path = " ".join(f"{x + offset:.3f},{y + offset:.3f}" for x, y in pts)
        colour = STROKES[robot]
        parts.append(f'<polyline points="{path}" fill="none" stroke="{colour}" stroke-width="2" '
                     f'stroke-opacity="0.7"/>')
        (sx, sy), (ex, ey) = pts[0], pts[-1]
        parts.append(f'<circle cx="{sx}" cy="{sy}" r="6" fill="{colour}"><title>{robot} start</title></circle>')
        parts.append(f'<rect x="{ex - 6}" y="{ey - 6}" width="12" height="12" fill="none" '
                     f'stroke="{colour}" stroke-width="2"><title>{robot} end</title></rect>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_svg(plan, path, samples: int = 400) -> None:
    from .trajectory import sample

    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render(sample(plan, samples), f"{plan.initial!r} to {plan.final!r}"))
