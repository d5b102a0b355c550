"""Points and single-robot motion on the wedge of three unit circles.

Every circle has circumference 1 and is parameterized by ``t`` in ``[0, 1)``
with the shared vertex at ``t = 0`` and the pole at ``t = 1/2``.  Positive
displacements are counterclockwise (increasing ``t``).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

CIRCLES = (1, 2, 3)
RHO = 1e-9


class GeometryError(ValueError):
    pass


def succ(circle: int) -> int:
    return circle % 3 + 1


def pred(circle: int) -> int:
    return (circle + 1) % 3 + 1


@dataclass(frozen=True, order=True)
class PhysPoint:
    """A position on the wedge.  ``circle is None`` means the vertex."""

    circle: Optional[int] = None
    t: float = 0.0

    def __post_init__(self):
        if self.circle is None:
            if self.t != 0.0:
                raise GeometryError("vertex carries no arc parameter")
            return
        if self.circle not in CIRCLES:
            raise GeometryError(f"unknown circle {self.circle!r}")
        if not 0.0 < self.t < 1.0:
            raise GeometryError(
                f"arc parameter {self.t!r} must lie strictly inside (0, 1); "
                "use point_on() to normalize"
            )

    @property
    def is_vertex(self) -> bool:
        return self.circle is None

    def __repr__(self):
        if self.circle is None:
            return "vertex"
        return f"c{self.circle}@{self.t:.6g}"


VERTEX = PhysPoint()


def point_on(circle: int, t: float, rho: float = RHO) -> PhysPoint:
    """Normalize ``t`` mod 1 and snap to the vertex within ``rho``."""
    t = t % 1.0
    if t <= rho or t >= 1.0 - rho:
        return VERTEX
    return PhysPoint(circle, t)


def pole(circle: int) -> PhysPoint:
    return PhysPoint(circle, 0.5)


def dist_to_vertex(p: PhysPoint) -> float:
    if p.circle is None:
        return 0.0
    return min(p.t, 1.0 - p.t)


def arc_param(p: PhysPoint) -> float:
    return 0.0 if p.circle is None else p.t


def is_pole(p: PhysPoint, rho: float = RHO) -> bool:
    return p.circle is not None and abs(p.t - 0.5) <= rho


def gamma_distance(p: PhysPoint, q: PhysPoint) -> float:
    """Path-metric distance on the wedge."""
    if p.circle is not None and p.circle == q.circle:
        d = abs(p.t - q.t)
        return min(d, 1.0 - d)
    return dist_to_vertex(p) + dist_to_vertex(q)


def _check_on(p: PhysPoint, circle: int):
    if circle not in CIRCLES:
        raise GeometryError(f"unknown circle {circle!r}")
    if p.circle is not None and p.circle != circle:
        raise GeometryError(f"{p!r} does not lie on circle {circle}")


def move_on_circle(p: PhysPoint, circle: int, signed_dist: float,
                   rho: float = RHO) -> PhysPoint:
    _check_on(p, circle)
    return point_on(circle, arc_param(p) + signed_dist, rho)


def antipode_on(circle: int, p: PhysPoint) -> PhysPoint:
    _check_on(p, circle)
    return point_on(circle, arc_param(p) + 0.5)
