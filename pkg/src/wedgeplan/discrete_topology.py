"""Brute-force discrete model of the two-robot configuration space of a graph.

The cells are ordered pairs of closed cells of a graph ``G`` whose closures
are disjoint: vertex-vertex (0-cells), vertex-edge and edge-vertex (1-cells),
edge-edge (2-cells).  Once every cycle of ``G`` has at least three edges this
complex is a deformation retract of the continuous configuration space, so its
Euler characteristic and connectivity are those of the real thing.  The
complex here is homotopy equivalent to a graph, so ``b1 = 1 - chi``.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Hashable, Sequence

import networkx as nx


@dataclass(frozen=True)
class SubdividedGraph:
    k: int
    vertices: tuple[Hashable, ...]
    edges: tuple[tuple[Hashable, Hashable], ...]

    @property
    def adjacency(self) -> dict:
        adj = {u: set() for u in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj


def subdivide(k: int, circles: int = 3) -> SubdividedGraph:
    """Wedge of ``circles`` loops, each cut into ``k`` edges, sharing vertex 0."""
    if k < 3:
        raise ValueError(f"each loop needs at least 3 edges, got k={k}")
    vertices = [0]
    edges = []
    for c in range(circles):
        chain = [0] + [(c + 1, s) for s in range(1, k)] + [0]
        vertices.extend(chain[1:-1])
        edges.extend(zip(chain, chain[1:]))
    return SubdividedGraph(k, tuple(vertices), tuple(edges))


def cycle_graph(k: int) -> SubdividedGraph:
    """A single loop with ``k`` edges: the control case."""
    return subdivide(k, circles=1)


def farber_tc(b1: int) -> int:
    """Topological complexity of a connected graph from its first Betti number."""
    if b1 < 0:
        raise ValueError("Betti numbers are non-negative")
    return 1 if b1 == 0 else 2 if b1 == 1 else 3


@dataclass(frozen=True)
class DiscreteComplexSummary:
    k: int
    V: int
    E: int
    F: int
    connected: bool

    @property
    def euler_characteristic(self) -> int:
        return self.V - self.E + self.F

    @property
    def b1(self) -> int:
        if not self.connected:
            raise ValueError("b1 = 1 - chi only holds for a connected complex")
        return 1 - self.euler_characteristic

    @property
    def tc(self) -> int:
        return farber_tc(self.b1)

    def as_dict(self) -> dict:
        return {"k": self.k, "V": self.V, "E": self.E, "F": self.F,
                "chi": self.euler_characteristic, "connected": self.connected,
                "b1": self.b1, "tc": self.tc}


def zero_cells(g: SubdividedGraph) -> list[tuple]:
    return [(a, b) for a, b in itertools.permutations(g.vertices, 2)]


def one_cells(g: SubdividedGraph) -> list[tuple]:
    """``(robot, vertex, edge)``: ``robot`` (0 = A, 1 = B) moves along ``edge``."""
    return [(robot, u, e) for u in g.vertices for e in g.edges if u not in e for robot in (0, 1)]


def two_cells(g: SubdividedGraph) -> list[tuple]:
    return [(e, f) for e in g.edges for f in g.edges if not set(e) & set(f)]


def skeleton(g: SubdividedGraph) -> nx.Graph:
    """1-skeleton: each 1-cell joins the two vertex pairs at its ends."""
    sk = nx.Graph()
    sk.add_nodes_from(zero_cells(g))
    for robot, u, (a, b) in one_cells(g):
        if robot == 0:
            sk.add_edge((a, u), (b, u))
        else:
            sk.add_edge((u, a), (u, b))
    return sk


def build_complex(g: SubdividedGraph) -> DiscreteComplexSummary:
    sk = skeleton(g)
    return DiscreteComplexSummary(
        k=g.k,
        V=sk.number_of_nodes(),
        E=len(one_cells(g)),
        F=len(two_cells(g)),
        connected=nx.is_connected(sk),
    )


def bfs_reachable(g: SubdividedGraph, s: Sequence, t: Sequence) -> tuple[bool, int]:
    """Hop count between two vertex pairs along the 1-skeleton, by plain BFS."""
    s, t = tuple(s), tuple(t)
    adj: dict[tuple, list[tuple]] = {}
    for a, b in skeleton(g).edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    seen = {s: 0}
    queue = deque([s])
    while queue:
        cur = queue.popleft()
        if cur == t:
            return True, seen[cur]
        for nxt in adj.get(cur, ()):
            if nxt not in seen:
                seen[nxt] = seen[cur] + 1
                queue.append(nxt)
    return False, -1
