"""Seeded randomized checks of the planner: validity sweeps and continuity measurements."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Optional

import numpy as np

from .chain import ALL_NODES
from .configuration import Configuration, classify_network, config_distance
from .geometry import CIRCLES, VERTEX, PhysPoint, dist_to_vertex, point_on, pole
from .io import dumps, plan_document
from .planner import Plan, _to_node, nearest_node_distance, plan
from .retraction import retract
from .trajectory import reverse, sup_distance, validate_segments

LENGTH_BOUND = 10.0
STEP2_BOUND = 5.5


def _rngs(seed: int, n: int) -> list[np.random.Generator]:
    # one independent stream per trial, so trial k does not depend on how many ran before it
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(n)]


# -- random states -----------------------------------------------------------

def random_point(rng: np.random.Generator) -> PhysPoint:
    return point_on(int(rng.integers(1, 4)), float(rng.random()))


def random_generic(rng: np.random.Generator) -> Configuration:
    while True:
        A, B = random_point(rng), random_point(rng)
        if A != B:
            return Configuration(A, B)


def random_network_state(rng: np.random.Generator) -> Configuration:
    i = int(rng.integers(1, 4))
    others = [c for c in CIRCLES if c != i]
    x = float(rng.uniform(0.01, 0.99))
    kind = rng.integers(3)
    if kind == 0:
        return Configuration(pole(i), point_on(others[rng.integers(2)], x))
    if kind == 1:
        return Configuration(point_on(others[rng.integers(2)], x), pole(i))
    return Configuration(point_on(i, x), point_on(i, x + 0.5))


def random_node(rng: np.random.Generator) -> Configuration:
    return ALL_NODES[int(rng.integers(len(ALL_NODES)))].configuration()


def random_state(rng: np.random.Generator) -> Configuration:
    """Mostly generic states, with network states, nodes and vertex states mixed in."""
    u = rng.random()
    if u < 0.1:
        return random_node(rng)
    if u < 0.2:
        return random_network_state(rng)
    if u < 0.3:
        other = point_on(int(rng.integers(1, 4)), float(rng.uniform(0.001, 0.999)))
        return Configuration(VERTEX, other) if rng.random() < 0.5 else Configuration(other, VERTEX)
    return random_generic(rng)


# -- validity suite ----------------------------------------------------------

@dataclass
class Failure:
    trial: int
    check: str
    detail: str
    query: dict


@dataclass
class ValidityReport:
    trials: int
    seed: int
    fault: Optional[str] = None
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {"trials": self.trials, "seed": self.seed, "fault": self.fault, "ok": self.ok,
                "failures": [asdict(f) for f in self.failures]}


def _same_path(a, b) -> bool:
    return len(a) == len(b) and all(
        x.start == y.start and x.end == y.end and x.moves == y.moves for x, y in zip(a, b))


def check_plan(p: Plan, arc_step: float = 1e-3) -> list[tuple[str, str]]:
    """Every invariant of one plan, as (check, detail) pairs for the ones that fail."""
    problems = []
    report = validate_segments(p.initial, p.final, p.segments, arc_step)
    for v in report.violations:
        problems.append((v.split(":", 1)[0], v))

    prelim_f, step1_f, _ = _to_node(p.final, 1e-9)
    if not _same_path(p.stages["step3"], reverse(step1_f)):
        problems.append(("reversal", "step3 is not the reverse of the final state's step1"))
    if not _same_path(p.stages["final"], reverse(prelim_f)):
        problems.append(("reversal", "final stage is not the reverse of the final state's retraction"))

    if p.total_arc_length > LENGTH_BOUND:
        problems.append(("length", f"total arc length {p.total_arc_length:.6f} > {LENGTH_BOUND}"))
    if p.stage_length("step2") > STEP2_BOUND:
        problems.append(("length", f"step2 length {p.stage_length('step2'):.6f} > {STEP2_BOUND}"))
    return problems


def run_validity_suite(trials: int, seed: int, fault: Optional[str] = None,
                       arc_step: float = 1e-3) -> ValidityReport:
    """Plan ``trials`` random queries and check every plan invariant.

    ``fault`` names a stage to drop from each plan before checking; it exists
    so the suite can demonstrate that it notices broken plans.
    """
    report = ValidityReport(trials, seed, fault)
    for k, rng in enumerate(_rngs(seed, trials)):
        initial, final = random_state(rng), random_state(rng)
        query = {"initial": repr(initial), "final": repr(final)}
        p = plan(initial, final)
        if dumps(plan_document(p)) != dumps(plan_document(plan(initial, final))):
            report.failures.append(Failure(k, "determinism", "repeated plan differs", query))
        if fault:
            p = p.without_stage(fault)
        for check, detail in check_plan(p, arc_step):
            report.failures.append(Failure(k, check, detail, query))
    return report


# -- continuity --------------------------------------------------------------

def decision_margin(s: Configuration) -> float:
    """Distance from ``s`` to the loci where the planner's choices change.

    Covers robots at the vertex, nearness to a node, the antipodal and
    collision loci on a shared circle, the diagonal of a square chart, and the
    same quantities for the retracted state.
    """
    end = retract(s).end
    vals = [dist_to_vertex(s.A), dist_to_vertex(s.B), dist_to_vertex(end.A), dist_to_vertex(end.B),
            nearest_node_distance(s), nearest_node_distance(end)]
    if s.same_circle:
        gap = (s.B.t - s.A.t) % 1.0
        vals += [min(gap, 1.0 - gap), abs(gap - 0.5)]
    else:
        vals.append(abs(dist_to_vertex(s.A) - dist_to_vertex(s.B)))
    return min(vals)


def _generic_with_margin(rng, margin: float) -> Configuration:
    while True:
        s = random_generic(rng)
        if decision_margin(s) >= margin:
            return s


def perturb(s: Configuration, delta: float, rng) -> Configuration:
    """Move each robot along its own circle by at most ``delta``."""
    while True:
        A = s.A if s.A.is_vertex else point_on(s.A.circle, s.A.t + rng.uniform(-delta, delta))
        B = s.B if s.B.is_vertex else point_on(s.B.circle, s.B.t + rng.uniform(-delta, delta))
        if A != B:
            return Configuration(A, B)


def _straddle(rng, delta: float) -> tuple[Configuration, Configuration]:
    """A state with B just past the vertex, and its twin with B just before it on another circle."""
    i = int(rng.integers(1, 4))
    j, k = [c for c in CIRCLES if c != i]
    A = point_on(i, float(rng.uniform(0.2, 0.8)))
    return Configuration(A, PhysPoint(j, delta / 2)), Configuration(A, PhysPoint(k, 1.0 - delta / 2))


@dataclass
class ContinuityReport:
    region: str
    delta: float
    margin: float
    trials: int
    threshold: float
    max_modulus: float = 0.0
    moduli: list[float] = field(default_factory=list, repr=False)
    violations: list[dict] = field(default_factory=list)

    def as_dict(self) -> dict:
        d = asdict(self)
        d.pop("moduli")
        return d


def _locus(base: Plan, moved: Plan) -> str:
    for x, y in ((base.initial, moved.initial), (base.final, moved.final)):
        if x.A.circle != y.A.circle or x.B.circle != y.B.circle:
            return "vertex-crossing"
    if base.node_initial != moved.node_initial or base.node_final != moved.node_final:
        return "node-switch"
    return "other"


def continuity_probe(region: str, delta: float, margin: float, trials: int, seed: int,
                     threshold: float = 0.05, straddle_vertex: bool = False,
                     resolution: int = 4001) -> ContinuityReport:
    """Measure how far plans move when query endpoints are perturbed by ``delta``.

    Node endpoints are part of what defines regions V and W, so they stay
    fixed; only non-node endpoints are perturbed.  ``straddle_vertex`` drops
    the margin and instead places the initial state's robot B on opposite
    sides of the vertex in the base and perturbed queries.
    """
    if region not in ("U", "V", "W"):
        raise ValueError(f"unknown region {region!r}")
    if not straddle_vertex and delta and delta >= margin:
        raise ValueError("perturbation radius must stay below the margin")
    report = ContinuityReport(region, delta, margin, trials, threshold)
    for k, rng in enumerate(_rngs(seed, trials)):
        if straddle_vertex:
            initial, moved_initial = _straddle(rng, delta)
            final = _generic_with_margin(rng, margin)
            moved_final = final
        else:
            n_nodes = "UVW".index(region)
            ends = [random_node(rng) if m < n_nodes else _generic_with_margin(rng, margin) for m in range(2)]
            if rng.random() < 0.5:
                ends.reverse()
            initial, final = ends
            moved_initial, moved_final = (
                e if classify_network(e).is_node else perturb(e, delta, rng) for e in ends)
        base, moved = plan(initial, final), plan(moved_initial, moved_final)
        if base.domain != region and not straddle_vertex:
            raise AssertionError(f"sampled query left region {region}")
        modulus = sup_distance(base, moved, resolution)
        report.moduli.append(modulus)
        report.max_modulus = max(report.max_modulus, modulus)
        if modulus > threshold:
            report.violations.append({
                "trial": k,
                "modulus": modulus,
                "locus": _locus(base, moved),
                "query": {"initial": repr(initial), "final": repr(final)},
                "perturbed": {"initial": repr(moved_initial), "final": repr(moved_final)},
                "distance": max(config_distance(initial, moved_initial), config_distance(final, moved_final)),
            })
    return report


def report_json(obj) -> str:
    return json.dumps(obj.as_dict(), indent=2)
