import itertools

import pytest

from wedgeplan.chain import (
    ALL_NODES,
    ChainCircle,
    build_chain,
    c,
    cycle_nodes,
    h,
    legs_between,
    node_of,
    v,
    zigzag_cycle,
)
from wedgeplan.configuration import (
    Configuration,
    CrossHorizontal,
    CrossVertical,
    Diagonal,
    JHorizontal,
    NotInNetwork,
    classify_network,
)
from wedgeplan.geometry import VERTEX, GeometryError, move_on_circle, pole, pred, succ
from wedgeplan.trajectory import min_separation

EXPECTED_ORDER = [v(1), c(1, 2), h(2), c(3, 2), v(3), c(3, 1), h(1), c(2, 1), v(2), c(2, 3), h(3), c(1, 3)]


def ccw_half_moves():
    """Every node-to-node move of one robot by a ccw half circle while the other rests on a pole."""
    by_state = {n.configuration(): n for n in ALL_NODES}
    out = {}
    for n in ALL_NODES:
        s, targets = n.configuration(), []
        for robot in ("A", "B"):
            me, other = (s.A, s.B) if robot == "A" else (s.B, s.A)
            if other.is_vertex:
                continue
            circles = [k for k in (1, 2, 3) if k != other.circle] if me.is_vertex else [me.circle]
            for k in circles:
                moved = move_on_circle(me, k, 0.5)
                try:
                    t = Configuration(moved, other) if robot == "A" else Configuration(other, moved)
                except GeometryError:
                    continue
                if t in by_state:
                    targets.append(by_state[t])
        out[n] = targets
    return out


def hamiltonian_cycles(moves, start):
    found = []

    def walk(path):
        if len(path) == len(moves):
            if start in moves[path[-1]]:
                found.append(path)
            return
        for nxt in moves[path[-1]]:
            if nxt not in path:
                walk(path + [nxt])

    walk([start])
    return found


def test_nodes_are_exactly_the_pole_vertex_states():
    places = [VERTEX] + [pole(k) for k in (1, 2, 3)]
    nodes = set()
    for a, b in itertools.product(places, repeat=2):
        try:
            s = Configuration(a, b)
        except GeometryError:
            continue
        assert classify_network(s) != NotInNetwork()
        nodes.add(s)
    assert len(nodes) == 12
    assert nodes == {n.configuration() for n in ALL_NODES}


def test_chain_structure():
    chain = build_chain()
    assert len(chain.nodes) == 12
    assert len(chain.circles) == 15
    kinds = [circ.kind for circ in chain.circles]
    assert kinds.count("vertical") == kinds.count("horizontal") == 6
    assert kinds.count("connecting") == 3
    assert len(chain.edges) == 30
    assert chain.betti_1() == 30 - 12 + 1 == 19


def test_incidences():
    chain = build_chain()
    assert chain.circles_through(v(1)) == {
        ChainCircle("connecting", 1), ChainCircle("vertical", 1, 2), ChainCircle("vertical", 1, 3)}
    for n in ALL_NODES:
        assert len(chain.circles_through(n)) == (3 if n.is_j_point else 2)


def test_border_ring_is_the_zigzag_order():
    assert build_chain().border_ring() == EXPECTED_ORDER == cycle_nodes()


def test_zigzag_order_is_forced():
    cycles = hamiltonian_cycles(ccw_half_moves(), v(1))
    # the only other cycle is the mirror one, entering pred(m) instead of succ(m)
    assert len(cycles) == 2
    ours = [cyc for cyc in cycles if cyc[1] == c(1, succ(1))]
    assert ours == [EXPECTED_ORDER]
    mirror = [cyc for cyc in cycles if cyc[1] == c(1, pred(1))]
    assert len(mirror) == 1


def test_first_legs():
    legs = zigzag_cycle()
    first, second = legs[0], legs[1]
    assert (first.start, first.end, first.kind, first.mover, first.circle) == (v(1), c(1, 2), "m_VP", "B", 2)
    assert (first.t_from, first.t_to) == (0.0, 0.5)
    assert (second.start, second.end, second.kind, second.mover, second.circle) == (c(1, 2), h(2), "m_PV", "A", 1)
    assert (second.t_from, second.t_to) == (0.5, 1.0)


def test_leg_invariants():
    legs = zigzag_cycle()
    assert len(legs) == 12
    assert [leg.kind for leg in legs] == ["m_VP", "m_PV"] * 6
    assert legs[-1].end == legs[0].start
    assert len({leg.start for leg in legs}) == 12
    for leg, nxt in zip(legs, legs[1:] + legs[:1]):
        seg = leg.segment()
        assert seg.end == nxt.segment().start
        assert leg.t_to == leg.t_from + 0.5
        mover, still = (0, 1) if leg.mover == "A" else (1, 0)
        assert seg.moves[mover].displacement == 0.5 and seg.moves[still].circle is None
        resting = (seg.start.A, seg.start.B)[still]
        assert resting.t == 0.5 and resting.circle != leg.circle
        assert min_separation(seg, 1e-4) >= 0.5 - 1e-12


def test_swap_maps_cycle_to_its_half_turn():
    order = cycle_nodes()
    assert [n.swapped() for n in order] == order[6:] + order[:6]


def test_local_rules():
    for leg in zigzag_cycle():
        n = leg.start
        if n.kind == "v":
            assert leg.mover == "B" and leg.circle == succ(n.i)
        elif n.kind == "h":
            assert leg.mover == "A" and leg.circle == succ(n.i)
        else:
            assert leg.mover == ("A" if n.j == succ(n.i) else "B")


@pytest.mark.parametrize("nc, expected", [
    (CrossVertical(1, 2, 0.2), c(1, 2)),
    (CrossHorizontal(3, 1, 0.9), c(3, 1)),
    (Diagonal(1, 0.3), v(1)),
    (Diagonal(2, 0.7), h(2)),
    (JHorizontal(3), h(3)),
])
def test_node_of(nc, expected):
    assert node_of(nc) == expected


def test_node_of_rejects_off_network():
    with pytest.raises(GeometryError):
        node_of(NotInNetwork())


def test_legs_between():
    assert len(legs_between(c(1, 3), v(1))) == 1
    assert len(legs_between(v(1), c(1, 3))) == 11
    assert legs_between(h(2), h(2)) == []
    for a, b in itertools.product(ALL_NODES, repeat=2):
        legs = legs_between(a, b)
        if legs:
            assert legs[0].start == a and legs[-1].end == b
            assert all(x.end == y.start for x, y in zip(legs, legs[1:]))
