"""JSON wire formats: queries, plan documents and JSONL trajectories."""
from __future__ import annotations

import json
import math
from typing import Any, Iterable

import numpy as np

from .chain import ALL_NODES, ChainNode
from .configuration import Configuration
from .geometry import CIRCLES, VERTEX, GeometryError, PhysPoint
from .planner import STAGES, Plan
from .trajectory import PathSegment, RobotMove, SampledTrajectory


class QueryError(ValueError):
    """Malformed or physically invalid input document."""


def num(x: float) -> float:
    """Round to 12 significant digits, the precision of every serialized number."""
    return float(f"{x:.12g}") + 0.0


# -- positions and states ----------------------------------------------------

def pos_to_json(p: PhysPoint) -> dict:
    if p.is_vertex:
        return {"vertex": True}
    return {"circle": p.circle, "t": num(p.t)}


def pos_from_json(obj: Any, where: str = "position") -> PhysPoint:
    if not isinstance(obj, dict):
        raise QueryError(f"{where}: expected an object, got {obj!r}")
    if obj.get("vertex") is True:
        if set(obj) != {"vertex"}:
            raise QueryError(f"{where}: a vertex position carries no other fields")
        return VERTEX
    if set(obj) != {"circle", "t"}:
        raise QueryError(f"{where}: expected {{'vertex': true}} or {{'circle', 't'}}, got keys {sorted(obj)}")
    circle, t = obj["circle"], obj["t"]
    if isinstance(circle, bool) or circle not in CIRCLES:
        raise QueryError(f"{where}: circle must be 1, 2 or 3, got {circle!r}")
    if isinstance(t, bool) or not isinstance(t, (int, float)) or not math.isfinite(t):
        raise QueryError(f"{where}: t must be a number, got {t!r}")
    if not 0.0 < t < 1.0:
        raise QueryError(f"{where}: t must lie strictly inside (0, 1), got {t!r}; use {{'vertex': true}} for the vertex")
    return PhysPoint(circle, float(t))


def state_to_json(s: Configuration) -> dict:
    return {"A": pos_to_json(s.A), "B": pos_to_json(s.B)}


def state_from_json(obj: Any, where: str = "state") -> Configuration:
    if not isinstance(obj, dict) or set(obj) != {"A", "B"}:
        raise QueryError(f"{where}: expected an object with keys 'A' and 'B'")
    A = pos_from_json(obj["A"], f"{where}.A")
    B = pos_from_json(obj["B"], f"{where}.B")
    try:
        return Configuration(A, B)
    except GeometryError as exc:
        raise QueryError(f"{where}: {exc}") from None


def query_to_json(initial: Configuration, final: Configuration) -> dict:
    return {"initial": state_to_json(initial), "final": state_to_json(final)}


def parse_query(obj: Any) -> tuple[Configuration, Configuration]:
    if not isinstance(obj, dict) or set(obj) != {"initial", "final"}:
        raise QueryError("query: expected an object with keys 'initial' and 'final'")
    return state_from_json(obj["initial"], "initial"), state_from_json(obj["final"], "final")


def load_query(text: str) -> tuple[Configuration, Configuration]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise QueryError(f"query is not valid JSON: {exc}") from None
    return parse_query(obj)


# -- plan documents ----------------------------------------------------------

def _move_to_json(m: RobotMove) -> dict:
    return {"circle": m.circle, "displacement": num(m.displacement)}


def _move_from_json(obj: dict) -> RobotMove:
    return RobotMove(obj["circle"], float(obj["displacement"]))


def segment_to_json(seg: PathSegment, stage: str) -> dict:
    return {
        "stage": stage,
        "from": state_to_json(seg.start),
        "to": state_to_json(seg.end),
        "moves": {"A": _move_to_json(seg.moves[0]), "B": _move_to_json(seg.moves[1])},
        "duration": num(seg.duration),
    }


def _rounded_length(segments) -> float:
    # summed from the serialized displacements so that a parsed document re-serializes identically
    return num(sum(abs(num(m.displacement)) for seg in segments for m in seg.moves))


def plan_document(plan: Plan) -> dict:
    return {
        "query": query_to_json(plan.initial, plan.final),
        "domain": plan.domain,
        "nodes": {"initial": repr(plan.node_initial), "final": repr(plan.node_final)},
        "stages": [
            {"name": name, "segments": len(plan.stages[name]), "arc_length": _rounded_length(plan.stages[name])}
            for name in STAGES
        ],
        "segments": [segment_to_json(seg, name) for name in STAGES for seg in plan.stages[name]],
        "total_arc_length": _rounded_length(plan.segments),
    }


_NODES_BY_NAME = {repr(n): n for n in ALL_NODES}


def _node(name: str) -> ChainNode:
    try:
        return _NODES_BY_NAME[name]
    except KeyError:
        raise QueryError(f"unknown chain node {name!r}") from None


def parse_plan_document(doc: dict) -> Plan:
    initial, final = parse_query(doc["query"])
    stages: dict[str, list[PathSegment]] = {name: [] for name in STAGES}
    for k, obj in enumerate(doc["segments"]):
        if obj["stage"] not in stages:
            raise QueryError(f"segment {k}: unknown stage {obj['stage']!r}")
        seg = PathSegment(
            state_from_json(obj["from"], f"segment {k}.from"),
            state_from_json(obj["to"], f"segment {k}.to"),
            (_move_from_json(obj["moves"]["A"]), _move_from_json(obj["moves"]["B"])),
            float(obj["duration"]),
        )
        stages[obj["stage"]].append(seg)
    return Plan(initial, final, doc["domain"], stages,
                _node(doc["nodes"]["initial"]), _node(doc["nodes"]["final"]))


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def trajectory_lines(traj: SampledTrajectory) -> Iterable[str]:
    for time, st in zip(traj.times, traj.states):
        yield json.dumps({"time": num(time), **state_to_json(st)})


def parse_trajectory_lines(lines: Iterable[str]) -> SampledTrajectory:
    times, states = [], []
    for line in lines:
        if line.strip():
            obj = json.loads(line)
            times.append(float(obj["time"]))
            states.append(state_from_json({"A": obj["A"], "B": obj["B"]}))
    return SampledTrajectory(np.array(times), states)
