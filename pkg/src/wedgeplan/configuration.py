"""Two-robot states on the wedge, chart coordinates and network classification."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .geometry import (
    RHO,
    GeometryError,
    PhysPoint,
    dist_to_vertex,
    gamma_distance,
    is_pole,
    point_on,
    succ,
)


class CollisionError(GeometryError):
    pass


@dataclass(frozen=True, order=True)
class Configuration:
    """Ordered pair of robot positions.  Robots A and B never coincide."""

    A: PhysPoint
    B: PhysPoint

    def __post_init__(self):
        if self.A.is_vertex and self.B.is_vertex:
            raise CollisionError("both robots at the vertex: state lies on the collision diagonal")
        if self.A.circle is not None and self.A.circle == self.B.circle:
            d = abs(self.A.t - self.B.t)
            if min(d, 1.0 - d) <= RHO:
                raise CollisionError(
                    f"robots coincide at {self.A!r}: state lies on the collision diagonal"
                )

    def swapped(self) -> "Configuration":
        return Configuration(self.B, self.A)

    @property
    def same_circle(self) -> bool:
        return self.A.circle is not None and self.A.circle == self.B.circle

    def __repr__(self):
        return f"(A={self.A!r}, B={self.B!r})"


def config_distance(s1: Configuration, s2: Configuration) -> float:
    return max(gamma_distance(s1.A, s2.A), gamma_distance(s1.B, s2.B))


# -- charts ------------------------------------------------------------------

@dataclass(frozen=True)
class SquareChart:
    """A on circle ``i`` at ``x``, B on circle ``j`` at ``y`` (0 or 1 = vertex)."""

    i: int
    j: int
    x: float
    y: float


@dataclass(frozen=True)
class CylinderChart:
    """Both robots on circle ``i``: A at ``a``, B at ``a + g`` (mod 1)."""

    i: int
    a: float
    g: float


Chart = Union[SquareChart, CylinderChart]


def to_chart(s: Configuration) -> Chart:
    A, B = s.A, s.B
    if s.same_circle:
        return CylinderChart(A.circle, A.t, (B.t - A.t) % 1.0)
    if A.is_vertex:
        return SquareChart(succ(B.circle), B.circle, 0.0, B.t)
    if B.is_vertex:
        return SquareChart(A.circle, succ(A.circle), A.t, 0.0)
    return SquareChart(A.circle, B.circle, A.t, B.t)


def from_chart(c: Chart) -> Configuration:
    if isinstance(c, CylinderChart):
        if not 0.0 < c.g < 1.0:
            raise CollisionError("cylinder gap 0 is on the collision diagonal")
        return Configuration(point_on(c.i, c.a), point_on(c.i, c.a + c.g))
    if c.i == c.j:
        raise GeometryError("square chart needs two distinct circles")
    return Configuration(point_on(c.i, c.x), point_on(c.j, c.y))


# -- network classification --------------------------------------------------

class NetworkClass:
    is_node = False


@dataclass(frozen=True)
class CrossVertical(NetworkClass):
    """A at pole ``i``, B strictly inside circle ``j`` at ``y``."""

    i: int
    j: int
    y: float


@dataclass(frozen=True)
class CrossHorizontal(NetworkClass):
    """B at pole ``j``, A strictly inside circle ``i`` at ``x``."""

    i: int
    j: int
    x: float


@dataclass(frozen=True)
class Diagonal(NetworkClass):
    i: int
    x: float


@dataclass(frozen=True)
class CrossCenter(NetworkClass):
    i: int
    j: int
    is_node = True


@dataclass(frozen=True)
class JVertical(NetworkClass):
    i: int
    is_node = True


@dataclass(frozen=True)
class JHorizontal(NetworkClass):
    j: int
    is_node = True


@dataclass(frozen=True)
class NotInNetwork(NetworkClass):
    pass


NOT_IN_NETWORK = NotInNetwork()


def classify_network(s: Configuration, rho: float = RHO) -> NetworkClass:
    A, B = s.A, s.B
    a_pole, b_pole = is_pole(A, rho), is_pole(B, rho)
    a_vert, b_vert = dist_to_vertex(A) <= rho, dist_to_vertex(B) <= rho

    if a_pole and b_pole and A.circle != B.circle:
        return CrossCenter(A.circle, B.circle)
    if a_pole and b_vert:
        return JVertical(A.circle)
    if b_pole and a_vert:
        return JHorizontal(B.circle)
    if a_pole and not b_vert and B.circle != A.circle:
        return CrossVertical(A.circle, B.circle, B.t)
    if b_pole and not a_vert and A.circle != B.circle:
        return CrossHorizontal(A.circle, B.circle, A.t)
    if s.same_circle and not (a_vert or b_vert):
        if abs((B.t - A.t) % 1.0 - 0.5) <= rho:
            return Diagonal(A.circle, A.t)
    return NOT_IN_NETWORK


def is_node_state(s: Configuration, rho: float = RHO) -> bool:
    return classify_network(s, rho).is_node

