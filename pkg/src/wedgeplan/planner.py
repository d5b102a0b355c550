"""The three-domain motion planner for two robots on the wedge of three circles.

A query is answered in five stages:

    preliminary  retract the initial state onto the network
    step1        move along the network to a chain node
    step2        follow the zigzag cycle counterclockwise to the final node
    step3        reverse of the final state's step1
    final        reverse of the final state's retraction
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Literal

from .chain import ALL_NODES, ChainNode, legs_between, node_of
from .configuration import (
    Configuration,
    CrossHorizontal,
    CrossVertical,
    Diagonal,
    NetworkClass,
    NotInNetwork,
    classify_network,
    config_distance,
    is_node_state,
)
from .geometry import RHO, arc_param
from .retraction import retract
from .trajectory import STILL, ContractError, PathSegment, RobotMove, reverse

STAGES = ("preliminary", "step1", "step2", "step3", "final")
DomainTag = Literal["U", "V", "W"]


@dataclass(frozen=True)
class Plan:
    initial: Configuration
    final: Configuration
    domain: DomainTag
    stages: dict[str, list[PathSegment]]
    node_initial: ChainNode
    node_final: ChainNode

    @property
    def segments(self) -> list[PathSegment]:
        return [seg for name in STAGES for seg in self.stages[name]]

    @property
    def total_arc_length(self) -> float:
        return sum(seg.arc_length for seg in self.segments)

    def stage_length(self, name: str) -> float:
        return sum(seg.arc_length for seg in self.stages[name])

    def without_stage(self, name: str) -> "Plan":
        """Copy with one stage emptied; used to inject faults into verification runs."""
        return replace(self, stages={**self.stages, name: []})


def _nudge(start: Configuration, end: Configuration) -> list[PathSegment]:
    """Direct move onto a node that ``start`` matches only up to the snap tolerance."""
    if start == end:
        return []
    moves = []
    for p, q in ((start.A, end.A), (start.B, end.B)):
        if p == q:
            moves.append(STILL)
            continue
        circle = p.circle if p.circle is not None else q.circle
        d = (arc_param(q) - arc_param(p) + 0.5) % 1.0 - 0.5
        moves.append(RobotMove(circle, d))
    return [PathSegment(start, end, tuple(moves))]


def step1_to_node(nc: NetworkClass, state: Configuration) -> list[PathSegment]:
    if isinstance(nc, NotInNetwork):
        raise ContractError(f"{state!r} is not on the network")
    target = node_of(nc).configuration()
    if isinstance(nc, CrossVertical):
        move = RobotMove(nc.j, 0.5 - nc.y)
        return [PathSegment(state, target, (STILL, move))]
    if isinstance(nc, CrossHorizontal):
        move = RobotMove(nc.i, 0.5 - nc.x)
        return [PathSegment(state, target, (move, STILL))]
    if isinstance(nc, Diagonal):
        d = 0.5 - nc.x if nc.x < 0.5 else 1.0 - nc.x
        move = RobotMove(nc.i, d)
        return [PathSegment(state, target, (move, move))]
    return _nudge(state, target)


def classify_domain(initial: Configuration, final: Configuration, rho: float = RHO) -> DomainTag:
    nodes = is_node_state(initial, rho) + is_node_state(final, rho)
    return "UVW"[nodes]


def _to_node(s: Configuration, rho: float):
    mv = retract(s)
    prelim = [] if mv.is_trivial else [mv.segment()]
    nc = classify_network(mv.end, rho)
    return prelim, step1_to_node(nc, mv.end), node_of(nc)


def plan(initial: Configuration, final: Configuration, rho: float = RHO) -> Plan:
    if not isinstance(initial, Configuration) or not isinstance(final, Configuration):
        raise TypeError("plan() takes two Configuration instances")
    prelim_i, step1_i, node_i = _to_node(initial, rho)
    prelim_f, step1_f, node_f = _to_node(final, rho)
    stages = {
        "preliminary": prelim_i,
        "step1": step1_i,
        "step2": [leg.segment() for leg in legs_between(node_i, node_f)],
        "step3": reverse(step1_f),
        "final": reverse(prelim_f),
    }
    total = sum(seg.span for name in STAGES for seg in stages[name])
    if total > 0.0:
        stages = {name: [replace(seg, duration=seg.span / total) for seg in segs if seg.span > 0.0]
                  for name, segs in stages.items()}
    else:
        stages = {name: [] for name in STAGES}
    return Plan(initial, final, classify_domain(initial, final, rho), stages, node_i, node_f)


def nearest_node_distance(s: Configuration) -> float:
    return min(config_distance(s, n.configuration()) for n in ALL_NODES)

