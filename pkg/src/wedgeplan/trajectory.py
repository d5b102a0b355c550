"""Piecewise constant-velocity paths in the configuration space."""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Optional, Sequence

import numpy as np

from .configuration import Configuration, config_distance
from .geometry import arc_param, gamma_distance, move_on_circle

CHAIN_TOL = 1e-9
COLLISION_TOL = 1e-6


class ContractError(ValueError):
    pass


@dataclass(frozen=True)
class RobotMove:
    """Signed arc displacement of one robot along ``circle`` (None when stationary)."""

    circle: Optional[int]
    displacement: float

    def __post_init__(self):
        if self.displacement == 0.0:
            object.__setattr__(self, "circle", None)
            object.__setattr__(self, "displacement", 0.0)

    def reversed(self) -> "RobotMove":
        return RobotMove(self.circle, -self.displacement)


STILL = RobotMove(None, 0.0)


@dataclass(frozen=True)
class PathSegment:
    start: Configuration
    end: Configuration
    moves: tuple[RobotMove, RobotMove]
    duration: float = 0.0

    def __post_init__(self):
        for p, m, q in ((self.start.A, self.moves[0], self.end.A),
                        (self.start.B, self.moves[1], self.end.B)):
            if m.circle is None:
                if p != q:
                    raise ContractError(f"stationary robot changed position {p!r} -> {q!r}")
                continue
            landed = move_on_circle(p, m.circle, m.displacement)
            if q.circle not in (None, m.circle) or _gap(landed, q) > CHAIN_TOL:
                raise ContractError(f"move {m} from {p!r} does not reach {q!r}")

    @property
    def span(self) -> float:
        """Largest single-robot arc travelled; the time this segment needs at unit speed."""
        return max(abs(self.moves[0].displacement), abs(self.moves[1].displacement))

    @property
    def arc_length(self) -> float:
        return abs(self.moves[0].displacement) + abs(self.moves[1].displacement)

    def at(self, s: float) -> Configuration:
        if s <= 0.0:
            return self.start
        if s >= 1.0:
            return self.end
        a, b = self.moves
        A = self.start.A if a.circle is None else move_on_circle(self.start.A, a.circle, s * a.displacement)
        B = self.start.B if b.circle is None else move_on_circle(self.start.B, b.circle, s * b.displacement)
        return Configuration(A, B)

    def reversed(self) -> "PathSegment":
        return PathSegment(self.end, self.start,
                           (self.moves[0].reversed(), self.moves[1].reversed()),
                           self.duration)


def _gap(p, q) -> float:
    d = abs(arc_param(p) - arc_param(q)) % 1.0
    return min(d, 1.0 - d)


def reverse(segments: Sequence[PathSegment]) -> list[PathSegment]:
    return [seg.reversed() for seg in reversed(segments)]


def concat(*lists: Sequence[PathSegment]) -> list[PathSegment]:
    out: list[PathSegment] = []
    for part in lists:
        for seg in part:
            if out and config_distance(out[-1].end, seg.start) > CHAIN_TOL:
                raise ContractError(f"segments do not chain: {out[-1].end!r} != {seg.start!r}")
            out.append(seg)
    return out


def with_durations(segments: Sequence[PathSegment]) -> list[PathSegment]:
    """Assign durations proportional to each segment's span, summing to 1."""
    total = sum(seg.span for seg in segments)
    if total == 0.0:
        return []
    return [replace(seg, duration=seg.span / total) for seg in segments if seg.span > 0.0]


# -- sampling ----------------------------------------------------------------

@dataclass
class SampledTrajectory:
    times: np.ndarray
    states: list[Configuration]

    def __len__(self):
        return len(self.states)

    def max_step(self) -> float:
        return max((config_distance(a, b) for a, b in zip(self.states, self.states[1:])), default=0.0)


def state_at(initial: Configuration, segments: Sequence[PathSegment], time: float) -> Configuration:
    if not segments:
        return initial
    elapsed = 0.0
    for seg in segments:
        if time <= elapsed + seg.duration:
            return seg.at((time - elapsed) / seg.duration)
        elapsed += seg.duration
    return segments[-1].end


def sample_segments(initial: Configuration, segments: Sequence[PathSegment],
                    resolution: int) -> SampledTrajectory:
    if resolution < 2:
        raise ContractError("resolution must be at least 2")
    times = np.linspace(0.0, 1.0, resolution)
    states = []
    idx, elapsed = 0, 0.0
    for k, time in enumerate(times):
        if not segments:
            states.append(initial)
            continue
        if k == resolution - 1:
            states.append(segments[-1].end)
            continue
        while idx < len(segments) - 1 and time > elapsed + segments[idx].duration:
            elapsed += segments[idx].duration
            idx += 1
        seg = segments[idx]
        states.append(seg.at((time - elapsed) / seg.duration))
    return SampledTrajectory(times, states)


def sample(plan, resolution: int) -> SampledTrajectory:
    return sample_segments(plan.initial, plan.segments, resolution)


# -- validation --------------------------------------------------------------

@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


def _robot_track(p, move: RobotMove, s: np.ndarray):
    """Circle label (0 = vertex) and arc parameter of one robot along ``s``."""
    if move.circle is None:
        circle = p.circle or 0
        return np.full(s.shape, circle), np.full(s.shape, arc_param(p))
    t = np.mod(arc_param(p) + s * move.displacement, 1.0)
    return np.full(s.shape, move.circle), t


def _breakpoints(t0: float, d: float) -> list[float]:
    """Fractions in (0, 1) where ``t0 + s*d`` is a multiple of 1/2."""
    if d == 0.0:
        return []
    lo, hi = sorted((t0, t0 + d))
    return [(k / 2 - t0) / d for k in range(math.floor(2 * lo), math.ceil(2 * hi) + 1)
            if 0.0 < (k / 2 - t0) / d < 1.0]


def min_separation(seg: PathSegment, arc_step: float = 1e-3) -> float:
    """Smallest wedge distance between the robots along ``seg``.

    Samples at ``arc_step`` plus every point where the distance can kink
    (a robot crossing its vertex or pole, the gap crossing 0 or 1/2), so
    the piecewise-linear minimum is found exactly.
    """
    n = max(2, math.ceil(seg.span / arc_step) + 1)
    a, b = seg.moves
    ta, tb = arc_param(seg.start.A), arc_param(seg.start.B)
    extra = _breakpoints(ta, a.displacement) + _breakpoints(tb, b.displacement)
    extra += _breakpoints(tb - ta, b.displacement - a.displacement)
    s = np.unique(np.concatenate([np.linspace(0.0, 1.0, n), extra]))
    ca, pa = _robot_track(seg.start.A, a, s)
    cb, pb = _robot_track(seg.start.B, b, s)
    dva = np.minimum(pa, 1.0 - pa)
    dvb = np.minimum(pb, 1.0 - pb)
    raw = np.abs(pa - pb)
    gap = np.minimum(raw, 1.0 - raw)
    dist = np.where((ca == cb) & (ca != 0), gap, dva + dvb)
    return float(dist.min())


def validate_segments(initial: Configuration, final: Configuration,
                      segments: Sequence[PathSegment], arc_step: float = 1e-3,
                      tol: float = COLLISION_TOL) -> ValidationReport:
    report = ValidationReport()
    if not segments:
        if config_distance(initial, final) > CHAIN_TOL:
            report.violations.append("endpoint: empty path but initial != final")
        return report
    if config_distance(segments[0].start, initial) > CHAIN_TOL:
        report.violations.append(f"endpoint: path starts at {segments[0].start!r}, not {initial!r}")
    if config_distance(segments[-1].end, final) > CHAIN_TOL:
        report.violations.append(f"endpoint: path ends at {segments[-1].end!r}, not {final!r}")
    for k, (a, b) in enumerate(zip(segments, segments[1:])):
        if config_distance(a.end, b.start) > CHAIN_TOL:
            report.violations.append(f"chaining: segment {k} ends at {a.end!r}, next starts at {b.start!r}")
    for k, seg in enumerate(segments):
        sep = min_separation(seg, arc_step)
        if sep <= tol:
            report.violations.append(f"collision: segment {k} separation {sep:.3g}")
    return report


def validate_trajectory(traj: SampledTrajectory, tol: float = COLLISION_TOL) -> ValidationReport:
    report = ValidationReport()
    for time, st in zip(traj.times, traj.states):
        if gamma_distance(st.A, st.B) <= tol:
            report.violations.append(f"collision at time {time:.6f}: {st!r}")
    return report


def validate(obj, arc_step: float = 1e-3) -> ValidationReport:
    if isinstance(obj, SampledTrajectory):
        return validate_trajectory(obj)
    return validate_segments(obj.initial, obj.final, obj.segments, arc_step)


def _segment_table(initial: Configuration, segments: Sequence[PathSegment]) -> np.ndarray:
    """Rows: start time, duration, then (start circle, start t, move circle, displacement) per robot."""
    if not segments:
        segments = [PathSegment(initial, initial, (STILL, STILL), 1.0)]
    rows = []
    clock = 0.0
    for seg in segments:
        row = [clock, seg.duration]
        for p, m in ((seg.start.A, seg.moves[0]), (seg.start.B, seg.moves[1])):
            row += [p.circle or 0, arc_param(p), m.circle or 0, m.displacement]
        rows.append(row)
        clock += seg.duration
    return np.array(rows)


def positions(initial: Configuration, segments: Sequence[PathSegment],
              times: np.ndarray) -> tuple[np.ndarray, ...]:
    """Vectorized evaluation: (circle_A, t_A, circle_B, t_B) at ``times``; circle 0 is the vertex."""
    table = _segment_table(initial, segments)
    idx = np.clip(np.searchsorted(table[:, 0], times, side="right") - 1, 0, len(table) - 1)
    rows = table[idx]
    dur = np.where(rows[:, 1] > 0, rows[:, 1], 1.0)
    s = np.clip((times - rows[:, 0]) / dur, 0.0, 1.0)
    out = []
    for base in (2, 6):
        c0, t0, mc, d = rows[:, base], rows[:, base + 1], rows[:, base + 2], rows[:, base + 3]
        t = np.mod(t0 + s * d, 1.0)
        circle = np.where(d != 0.0, mc, c0)
        at_vertex = np.minimum(t, 1.0 - t) <= 1e-12
        out += [np.where(at_vertex, 0, circle), np.where(at_vertex, 0.0, t)]
    return tuple(out)


def wedge_distance(c1, t1, c2, t2) -> np.ndarray:
    """Elementwise path-metric distance between points given as (circle, t) arrays."""
    raw = np.abs(t1 - t2)
    gap = np.minimum(raw, 1.0 - raw)
    via_vertex = np.minimum(t1, 1.0 - t1) + np.minimum(t2, 1.0 - t2)
    return np.where((c1 == c2) & (c1 != 0), gap, via_vertex)


def sup_distance(first, second, resolution: int = 4001) -> float:
    """Largest time-aligned config distance between two plans."""
    times = np.linspace(0.0, 1.0, resolution)
    ca, ta, cb, tb = positions(first.initial, first.segments, times)
    da, ea, db, eb = positions(second.initial, second.segments, times)
    return float(np.max(np.maximum(wedge_distance(ca, ta, da, ea), wedge_distance(cb, tb, db, eb))))
