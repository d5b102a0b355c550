"""The chain of fifteen circles that the network is homeomorphic to, and its zigzag cycle.

Nodes are the twelve states where every robot sits at a pole or the vertex:

* ``c(i, j)``: A at pole ``i``, B at pole ``j`` (cross centers);
* ``v(i)``: A at pole ``i``, B at the vertex (vertical j-points);
* ``h(j)``: A at the vertex, B at pole ``j`` (horizontal j-points).

Each chain circle passes through two nodes, which cut it into two semicircles.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

import networkx as nx

from .configuration import (
    Configuration,
    CrossCenter,
    CrossHorizontal,
    CrossVertical,
    Diagonal,
    JHorizontal,
    JVertical,
    NetworkClass,
)
from .geometry import CIRCLES, VERTEX, GeometryError, pole, succ
from .trajectory import STILL, PathSegment, RobotMove


@dataclass(frozen=True, order=True)
class ChainNode:
    kind: Literal["c", "v", "h"]
    i: int
    j: int = 0

    def __repr__(self):
        return f"c{self.i}{self.j}" if self.kind == "c" else f"{self.kind}{self.i}"

    @property
    def is_j_point(self) -> bool:
        return self.kind != "c"

    def configuration(self) -> Configuration:
        if self.kind == "c":
            return Configuration(pole(self.i), pole(self.j))
        if self.kind == "v":
            return Configuration(pole(self.i), VERTEX)
        return Configuration(VERTEX, pole(self.i))

    def swapped(self) -> "ChainNode":
        if self.kind == "c":
            return ChainNode("c", self.j, self.i)
        return ChainNode("h" if self.kind == "v" else "v", self.i)


def c(i: int, j: int) -> ChainNode:
    if i == j or i not in CIRCLES or j not in CIRCLES:
        raise GeometryError(f"no cross center c{i}{j}")
    return ChainNode("c", i, j)


def v(i: int) -> ChainNode:
    return ChainNode("v", i)


def h(j: int) -> ChainNode:
    return ChainNode("h", j)


ALL_NODES = tuple(
    [c(i, j) for i in CIRCLES for j in CIRCLES if i != j]
    + [v(i) for i in CIRCLES]
    + [h(j) for j in CIRCLES]
)


@dataclass(frozen=True, order=True)
class ChainCircle:
    """``vertical``: A at pole i, B sweeps circle j.  ``horizontal``: B at pole j,
    A sweeps circle i.  ``connecting``: antipodal robots sweep circle i."""

    kind: Literal["vertical", "horizontal", "connecting"]
    i: int
    j: int = 0

    @property
    def nodes(self) -> tuple[ChainNode, ChainNode]:
        if self.kind == "vertical":
            return v(self.i), c(self.i, self.j)
        if self.kind == "horizontal":
            return c(self.i, self.j), h(self.j)
        return h(self.i), v(self.i)

    @property
    def is_border(self) -> bool:
        return self.kind != "connecting"


@dataclass(frozen=True)
class Chain:
    circles: tuple[ChainCircle, ...]
    nodes: tuple[ChainNode, ...]
    # one entry per semicircle: (circle, node, node)
    edges: tuple[tuple[ChainCircle, ChainNode, ChainNode], ...]

    def circles_through(self, node: ChainNode) -> set[ChainCircle]:
        return {circ for circ in self.circles if node in circ.nodes}

    def betti_1(self) -> int:
        g = nx.MultiGraph()
        g.add_nodes_from(self.nodes)
        g.add_edges_from((a, b) for _, a, b in self.edges)
        return g.number_of_edges() - g.number_of_nodes() + nx.number_connected_components(g)

    def border_ring(self) -> list[ChainNode]:
        """Walk the border circles from v1, taking the vertical circle into succ(1) first."""
        ring = [v(1), c(1, succ(1))]
        while True:
            prev, cur = ring[-2], ring[-1]
            nxt = [n for circ in self.circles if circ.is_border and cur in circ.nodes
                   for n in circ.nodes if n not in (cur, prev)]
            if nxt[0] == ring[0]:
                return ring
            ring.append(nxt[0])


@lru_cache(maxsize=None)
def build_chain() -> Chain:
    circles = (
        [ChainCircle("vertical", i, j) for i in CIRCLES for j in CIRCLES if i != j]
        + [ChainCircle("horizontal", i, j) for i in CIRCLES for j in CIRCLES if i != j]
        + [ChainCircle("connecting", i) for i in CIRCLES]
    )
    edges = tuple((circ, *circ.nodes) for circ in circles for _ in range(2))
    return Chain(tuple(circles), ALL_NODES, edges)


# -- zigzag cycle ------------------------------------------------------------

@dataclass(frozen=True)
class Leg:
    start: ChainNode
    end: ChainNode
    kind: Literal["m_VP", "m_PV"]
    mover: Literal["A", "B"]
    circle: int
    t_from: float
    t_to: float

    def segment(self) -> PathSegment:
        move = RobotMove(self.circle, 0.5)
        moves = (move, STILL) if self.mover == "A" else (STILL, move)
        return PathSegment(self.start.configuration(), self.end.configuration(), moves)


def _next_leg(node: ChainNode) -> Leg:
    if node.kind == "v":
        # B leaves the vertex into the circle after A's
        k = succ(node.i)
        return Leg(node, c(node.i, k), "m_VP", "B", k, 0.0, 0.5)
    if node.kind == "h":
        k = succ(node.i)
        return Leg(node, c(k, node.i), "m_VP", "A", k, 0.0, 0.5)
    i, j = node.i, node.j
    if j == succ(i):
        return Leg(node, h(j), "m_PV", "A", i, 0.5, 1.0)
    return Leg(node, v(i), "m_PV", "B", j, 0.5, 1.0)


@lru_cache(maxsize=None)
def zigzag_cycle() -> tuple[Leg, ...]:
    legs = [_next_leg(v(1))]
    while legs[-1].end != v(1):
        legs.append(_next_leg(legs[-1].end))
    return tuple(legs)


@lru_cache(maxsize=None)
def _cycle_index() -> dict[ChainNode, int]:
    return {leg.start: k for k, leg in enumerate(zigzag_cycle())}


def cycle_nodes() -> list[ChainNode]:
    return [leg.start for leg in zigzag_cycle()]


def legs_between(a: ChainNode, b: ChainNode) -> list[Leg]:
    legs, index = zigzag_cycle(), _cycle_index()
    k = index[a]
    n = (index[b] - k) % len(legs)
    return [legs[(k + m) % len(legs)] for m in range(n)]


def node_of(nc: NetworkClass) -> ChainNode:
    """Chain node a network state is first moved to."""
    if isinstance(nc, (CrossVertical, CrossHorizontal, CrossCenter)):
        return c(nc.i, nc.j)
    if isinstance(nc, JVertical):
        return v(nc.i)
    if isinstance(nc, JHorizontal):
        return h(nc.j)
    if isinstance(nc, Diagonal):
        # counterclockwise along the diagonal, A reaches its pole first when x < 1/2
        return v(nc.i) if nc.x < 0.5 else h(nc.i)
    raise GeometryError(f"{nc!r} is not a network state")
