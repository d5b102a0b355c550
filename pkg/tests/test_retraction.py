import numpy as np
import pytest

from wedgeplan.chain import ALL_NODES
from wedgeplan.configuration import (
    Configuration,
    NotInNetwork,
    classify_network,
    config_distance,
)
from wedgeplan.geometry import VERTEX, PhysPoint, dist_to_vertex, gamma_distance, point_on, pole
from wedgeplan.probes import random_generic, random_state
from wedgeplan.retraction import (
    cylinder_displacements,
    evaluate_trace,
    retract,
    square_displacements,
)
from wedgeplan.trajectory import min_separation

from conftest import st


def network_sample(n=40):
    xs = np.linspace(0.0, 1.0, n + 2)[1:-1]
    out = [node.configuration() for node in ALL_NODES]
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            if i == j:
                continue
            out += [Configuration(pole(i), point_on(j, x)) for x in xs]
            out += [Configuration(point_on(i, x), pole(j)) for x in xs]
        out += [Configuration(point_on(i, x), point_on(i, x + 0.5)) for x in xs if abs(x - 0.5) > 1e-9]
    return out


def test_same_circle_example():
    mv = retract(st((1, 0.2), (1, 0.6)))
    a, b = mv.end.A, mv.end.B
    assert a.t == pytest.approx(0.2 - 0.1 * 0.2 / 0.6, abs=1e-12)
    assert b.t == pytest.approx(0.6 + 0.1 * 0.4 / 0.6, abs=1e-12)
    assert a.t == pytest.approx(0.1667, abs=1e-4) and b.t == pytest.approx(0.6667, abs=1e-4)
    # oracle: gap exactly 1/2, displacements split in the ratio of vertex distances
    assert (b.t - a.t) % 1 == pytest.approx(0.5, abs=1e-15)
    assert -mv.a_velocity / mv.b_velocity == pytest.approx(0.2 / 0.4)


def test_square_example():
    mv = retract(st((2, 0.9), (3, 0.4)))
    assert mv.end == st((2, 0.875), (3, 0.5))
    # oracle: B on its pole, ratio of vertex distances kept
    assert dist_to_vertex(mv.end.A) / dist_to_vertex(mv.end.B) == pytest.approx(0.1 / 0.4)


def test_network_state_is_fixed():
    mv = retract(st((1, 0.5), (2, 0.3)))
    assert mv.is_trivial and mv.end == mv.start


def test_evaluate_trace():
    s = st((2, 0.9), (3, 0.4))
    assert evaluate_trace(s, 0.0) == s
    mid = evaluate_trace(s, 0.5)
    assert mid.A.t == pytest.approx(0.8875) and mid.B.t == pytest.approx(0.45)
    end = evaluate_trace(st((1, 0.2), (1, 0.6)), 1.0)
    assert end.A.t == pytest.approx(1 / 6) and end.B.t == pytest.approx(2 / 3)


def test_retraction_fixes_the_network_pointwise():
    for s in network_sample():
        assert classify_network(s) != NotInNetwork()
        mv = retract(s)
        assert mv.is_trivial
        assert config_distance(mv.end, s) <= 1e-12


def test_every_end_is_on_the_network():
    rng = np.random.default_rng(5)
    for _ in range(20_000):
        assert classify_network(retract(random_state(rng)).end) != NotInNetwork()


def test_square_and_cylinder_rules_agree_at_the_vertex():
    rng = np.random.default_rng(3)
    for _ in range(1000):
        circle, t = int(rng.integers(1, 4)), float(rng.uniform(1e-6, 1 - 1e-6))
        for s in (Configuration(VERTEX, PhysPoint(circle, t)), Configuration(PhysPoint(circle, t), VERTEX)):
            sq, cy = square_displacements(s), cylinder_displacements(s)
            assert abs(sq[0] - cy[0]) <= 1e-12 and abs(sq[1] - cy[1]) <= 1e-12
            moving = s.B if s.A.is_vertex else s.A
            assert retract(s).end == (Configuration(VERTEX, pole(circle)) if s.A.is_vertex
                                      else Configuration(pole(circle), VERTEX))
            assert moving.circle == circle


def test_same_circle_gap_stays_clear_of_collision():
    rng = np.random.default_rng(17)
    taus = np.linspace(0.0, 1.0, 100)
    checked = 0
    for _ in range(100_000):
        s = random_generic(rng)
        if not s.same_circle:
            continue
        mv = retract(s)
        g0 = (s.B.t - s.A.t) % 1
        gaps = g0 + taus * (mv.b_velocity - mv.a_velocity)
        floor = min(g0, 1 - g0, 0.5) * (1 - 1e-9)
        assert np.all(gaps > floor - 1e-15) and np.all(gaps < 1 - floor + 1e-15)
        # monotone from g0 to 1/2
        assert np.all(np.diff(gaps) * np.sign(0.5 - g0) >= -1e-15)
        assert gaps[-1] == pytest.approx(0.5, abs=1e-12)
        checked += 1
    assert checked > 25_000


def test_traces_never_collide():
    rng = np.random.default_rng(23)
    for _ in range(20_000):
        mv = retract(random_state(rng))
        if not mv.is_trivial:
            assert min_separation(mv.segment(), arc_step=1e-2) > 0.0


def test_trace_samples_are_valid_configurations():
    rng = np.random.default_rng(29)
    for _ in range(500):
        s = random_state(rng)
        for tau in np.linspace(0, 1, 21):
            assert isinstance(evaluate_trace(s, float(tau)), Configuration)


@pytest.mark.parametrize("delta", [1e-3, 1e-4, 1e-5])
def test_end_map_is_continuous_away_from_removed_loci(delta):
    rng = np.random.default_rng(31)
    worst = 0.0
    for _ in range(3000):
        s = random_generic(rng)
        if min(dist_to_vertex(s.A), dist_to_vertex(s.B), gamma_distance(s.A, s.B)) < 0.05:
            continue
        sign = rng.choice([-1.0, 1.0], size=2)
        A = point_on(s.A.circle, s.A.t + sign[0] * delta)
        B = point_on(s.B.circle, s.B.t + sign[1] * delta)
        if A == B:
            continue
        moved = Configuration(A, B)
        worst = max(worst, config_distance(retract(s).end, retract(moved).end) / delta)
    # Lipschitz constant is at most about 1/(2 * 0.05) for these states
    assert worst < 20
