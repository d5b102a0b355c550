"""Closed-form deformation retraction of the configuration space onto the network.

Two rules cover every state:

* robots on distinct circles: distances to the vertex are scaled by a common
  factor until the robot farther from the vertex sits on its pole (a radial
  push away from the removed vertex-vertex corner of the square);
* robots on one circle (or one at the vertex): the gap is opened or closed to
  exactly 1/2, the displacement split in proportion to each robot's distance
  to the vertex.

A robot at the vertex has zero distance, hence never moves, so the two rules
agree on the states where they meet.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .configuration import NOT_IN_NETWORK, Configuration, classify_network
from .geometry import arc_param, dist_to_vertex, move_on_circle, point_on, pole
from .trajectory import PathSegment, RobotMove


@dataclass(frozen=True)
class RetractionMove:
    start: Configuration
    end: Configuration
    a_circle: Optional[int]
    a_velocity: float
    b_circle: Optional[int]
    b_velocity: float
    duration: float = 1.0

    @property
    def is_trivial(self) -> bool:
        return self.a_velocity == 0.0 and self.b_velocity == 0.0

    def segment(self) -> PathSegment:
        return PathSegment(
            self.start,
            self.end,
            (RobotMove(self.a_circle, self.a_velocity), RobotMove(self.b_circle, self.b_velocity)),
        )


def _signed_toward_vertex_side(t: float, new_dv: float) -> float:
    """Arc parameter on the same half of the circle as ``t`` at vertex-distance ``new_dv``."""
    return new_dv if t < 0.5 else 1.0 - new_dv


def square_displacements(s: Configuration) -> tuple[float, float]:
    """Per-robot signed displacement of the radial rule (robots on distinct circles)."""
    da, db = dist_to_vertex(s.A), dist_to_vertex(s.B)
    scale = 0.5 / max(da, db)
    out = []
    for p, d in ((s.A, da), (s.B, db)):
        if d == 0.0:
            out.append(0.0)
        else:
            out.append(_signed_toward_vertex_side(p.t, d * scale) - p.t)
    return out[0], out[1]


def cylinder_displacements(s: Configuration) -> tuple[float, float]:
    """Per-robot signed displacement of the gap rule (robots sharing a circle)."""
    ta, tb = arc_param(s.A), arc_param(s.B)
    gap = (tb - ta) % 1.0
    shortfall = 0.5 - gap
    da, db = dist_to_vertex(s.A), dist_to_vertex(s.B)
    total = da + db
    return -shortfall * da / total, shortfall * db / total


def _shared_circle(s: Configuration) -> Optional[int]:
    if s.same_circle:
        return s.A.circle
    if s.A.is_vertex:
        return s.B.circle
    if s.B.is_vertex:
        return s.A.circle
    return None


def retract(s: Configuration) -> RetractionMove:
    if classify_network(s) is not NOT_IN_NETWORK:
        return RetractionMove(s, s, None, 0.0, None, 0.0)
    circle = _shared_circle(s)
    if circle is not None:
        da, db = cylinder_displacements(s)
    else:
        da, db = square_displacements(s)

    a_circle = s.A.circle if da else None
    b_circle = s.B.circle if db else None
    if not da and not db:
        return RetractionMove(s, s, None, 0.0, None, 0.0)

    A = _land(s.A, a_circle, da)
    B = _land(s.B, b_circle, db)
    if circle is not None:
        # pin the antipodal relation exactly: B sits half a turn past A
        if s.A.is_vertex:
            B = pole(circle)
        elif s.B.is_vertex:
            A = pole(circle)
        else:
            B = point_on(circle, arc_param(A) + 0.5)
    else:
        if dist_to_vertex(s.A) >= dist_to_vertex(s.B):
            A = pole(s.A.circle)
        if dist_to_vertex(s.B) >= dist_to_vertex(s.A):
            B = pole(s.B.circle)
    return RetractionMove(s, Configuration(A, B), a_circle, da, b_circle, db)


def _land(p, circle, d):
    if not d:
        return p
    return move_on_circle(p, circle, d)


def evaluate_trace(s: Configuration, tau: float) -> Configuration:
    """State reached after fraction ``tau`` of the retraction of ``s``."""
    mv = retract(s)
    if tau <= 0.0 or mv.is_trivial:
        return s
    if tau >= 1.0:
        return mv.end
    return mv.segment().at(tau)
