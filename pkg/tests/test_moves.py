import random

import pytest

from gems.errors import (BadAttachment, NotA2Dipole, NotADipole, NotATwistor, NotDipoleAfterInsertion,
                         NotTwoEdges, ReplayMismatch, SameEdge)
from gems.graph import sphere_graph, state_hash
from gems.report import is_bipartite, is_crystallization, is_gem, parity_vector
from gray import enumerate_twistors
from moves import (Antipole, DipoleSpec, Move, MoveKind, MoveTrace, Twistor, apply_move, c_flip,
                   cancel_blobs, cancel_dipole, create_dipole, crystallize, find_dipoles, flip_by_parity, fus,
                   is_twistor_pair, random_dipole_walk, replay, thicken, twist_direct, twist_via_flip)
from moves.dipoles import cancel_blobs_with_map

J6_SITE = {0: (1, 2), 1: (3, 2)}


def test_find_dipoles_in_j4(j4):
    assert set(find_dipoles(j4, 2)) == {
        DipoleSpec((0, 2), (1, 2)), DipoleSpec((0, 2), (3, 4)),
        DipoleSpec((1, 3), (1, 4)), DipoleSpec((1, 3), (2, 3)),
    }
    assert find_dipoles(j4, 1) == []
    with pytest.raises(ValueError):
        find_dipoles(j4, 4)


def test_cancel_dipole_of_j4_gives_g2(j4):
    assert cancel_dipole(j4, DipoleSpec((0, 2), (1, 2))) == sphere_graph()


def test_cancel_requires_a_dipole(j4):
    with pytest.raises(NotADipole):
        cancel_dipole(j4, DipoleSpec((0, 1), (1, 2)))


def test_create_dipole_builds_j6(j4, j6):
    created, spec = create_dipole(j4, (2, 3), J6_SITE)
    assert created == j6
    assert spec == DipoleSpec((2, 3), (5, 6))
    assert cancel_dipole(created, spec) == j4


def test_create_dipole_rejects_a_site_that_does_not_separate(j4):
    with pytest.raises(NotDipoleAfterInsertion):
        create_dipole(j4, (2, 3), {0: (1, 2), 1: (2, 3)})


def test_create_dipole_rejects_bad_attachments(j4):
    with pytest.raises(BadAttachment):
        create_dipole(j4, (2, 3), {0: (1, 3), 1: (3, 2)})
    with pytest.raises(BadAttachment):
        create_dipole(j4, (2, 3), {0: (1, 2)})


def test_c_flip_convention(j4, b2):
    outcome = c_flip(j4, 1, (2, 3), (4, 1))
    assert outcome.graph == b2
    assert outcome.connected and outcome.is_gem


def test_c_flip_errors(j4):
    with pytest.raises(SameEdge):
        c_flip(j4, 1, (2, 3), (3, 2))
    with pytest.raises(BadAttachment):
        c_flip(j4, 1, (1, 2), (3, 4))


def test_flip_by_parity_orients_the_edges(j4):
    even = flip_by_parity(j4, 1, (3, 2), (1, 4), side='even')
    assert even.graph == c_flip(j4, 1, (3, 2), (1, 4)).graph
    odd = flip_by_parity(j4, 1, (3, 2), (1, 4), side='odd')
    assert odd.graph == c_flip(j4, 1, (2, 3), (4, 1)).graph


def test_thicken_j4_into_b2(j4, b2):
    graph, blob = thicken(j4, DipoleSpec.of((0, 2), 1, 2), 1)
    assert graph == b2
    assert blob == DipoleSpec((0, 1, 2), (1, 2))


def test_thicken_errors(j4):
    with pytest.raises(NotA2Dipole):
        thicken(j4, DipoleSpec.of((0, 1), 1, 2), 3)
    with pytest.raises(ValueError):
        thicken(j4, DipoleSpec.of((0, 2), 1, 2), 2)


def test_fus(j4):
    assert fus(j4, (1, 2)) == sphere_graph()
    with pytest.raises(NotTwoEdges):
        fus(j4, (1, 3))


def test_cancel_blobs(b2):
    graph, labels = cancel_blobs_with_map(b2)
    assert graph == sphere_graph()
    assert labels == [3, 4]
    assert cancel_blobs(b2) == sphere_graph()


def test_twists_between_c8_and_j8(c8, j8):
    tw = Twistor(1, 2, 2, 8)
    assert is_twistor_pair(c8, 2, 2, 8)
    assert twist_direct(c8, tw) == j8
    assert twist_via_flip(c8, tw) == j8
    assert twist_direct(j8, tw.inverse) == c8
    assert twist_via_flip(j8, tw.inverse) == c8


def test_twistor_labels():
    tw = Twistor(1, 2, 2, 8)
    assert tw.label == '2:2-8'
    assert tw.e_color == 3
    assert tw.inverse == Twistor(2, 1, 2, 8)
    with pytest.raises(ValueError):
        Twistor(1, 1, 2, 8)


def test_twist_rejects_non_twistors(j4, j6):
    with pytest.raises(NotATwistor):
        twist_direct(j4, Twistor(1, 2, 1, 3))
    with pytest.raises(NotATwistor):
        twist_via_flip(j6, Antipole(1, 3, 4, 6))


def test_twist_oracles_agree_on_j8(j8):
    for kind in (1, 3):
        for u in j8.vertices:
            for v in range(u + 1, j8.n + 1):
                if is_twistor_pair(j8, kind, u, v):
                    tw = Twistor(2, kind, u, v)
                    twisted = twist_direct(j8, tw)
                    assert twist_via_flip(j8, tw) == twisted
                    assert is_gem(twisted) and is_bipartite(twisted)


def test_move_text():
    move = Move.thicken(DipoleSpec.of((0, 2), 1, 2), 1)
    assert str(move) == 'Thicken colors=0,2 u=1 v=2 flip=1'
    assert str(Move.blob_cancel_all()) == 'BlobCancelAll'
    assert move.kind == MoveKind.THICKEN


def test_apply_move_dispatch(j4, j6, b2):
    assert apply_move(j4, Move.dipole_create((2, 3), J6_SITE)) == j6
    assert apply_move(j6, Move.dipole_cancel(DipoleSpec((2, 3), (5, 6)))) == j4
    assert apply_move(j4, Move.flip(1, (2, 3), (4, 1))) == b2
    assert apply_move(b2, Move.blob_cancel_all()) == sphere_graph()
    assert apply_move(j4, Move.fus(1, 2)) == sphere_graph()


def test_trace_replay(j4, b2):
    trace = MoveTrace.starting_at(j4)
    graph = trace.run(j4, Move.thicken(DipoleSpec.of((0, 2), 1, 2), 1))
    graph = trace.run(graph, Move.blob_cancel_all())
    assert len(trace) == 2
    assert replay(j4, trace) == graph == sphere_graph()
    with pytest.raises(ReplayMismatch):
        replay(b2, trace)


@pytest.mark.parametrize('seed', range(20))
def test_random_walks_stay_bipartite_gems(seed):
    graph = random_dipole_walk(25, seed)
    assert is_gem(graph)
    assert is_bipartite(graph)


@pytest.mark.parametrize('seed', range(5))
def test_non_orientable_walks_are_gems(seed):
    assert is_gem(random_dipole_walk(25, seed, orientable=False))


def test_walk_is_deterministic_and_replayable():
    trace = MoveTrace.starting_at(sphere_graph())
    graph = random_dipole_walk(20, 3, trace=trace)
    assert graph == random_dipole_walk(20, 3)
    assert replay(sphere_graph(), trace) == graph


@pytest.mark.parametrize('seed', range(10))
def test_create_cancel_and_flip_roundtrips(seed):
    rng = random.Random(seed)
    graph = random_dipole_walk(15, seed)
    for _ in range(20):
        colors = tuple(sorted(rng.sample(range(4), 2)))
        attachment = {c: rng.choice(graph.edges(c)) for c in range(4) if c not in colors}
        try:
            created, spec = create_dipole(graph, colors, attachment)
        except NotDipoleAfterInsertion:
            continue
        assert cancel_dipole(created, spec) == graph

    for c in range(4):
        edges = graph.edges(c)
        if len(edges) >= 2:
            (a, b), (x, y) = rng.sample(edges, 2)
            flipped = c_flip(graph, c, (a, b), (x, y)).graph
            assert c_flip(flipped, c, (a, y), (x, b)).graph == graph


@pytest.mark.parametrize('chunk', range(10))
def test_twist_oracles_agree_on_random_gems(chunk):
    for seed in range(10 * chunk, 10 * chunk + 10):
        graph = random_dipole_walk(20, seed)
        for axis in (1, 2, 3):
            for tw in enumerate_twistors(graph, axis):
                assert twist_via_flip(graph, tw) == twist_direct(graph, tw)


@pytest.mark.parametrize('seed', range(10))
def test_twists_and_flips_keep_the_parity(seed):
    rng = random.Random(seed)
    graph = random_dipole_walk(20, seed)
    parity = parity_vector(graph)
    for axis in (1, 2, 3):
        for tw in enumerate_twistors(graph, axis):
            assert parity_vector(twist_direct(graph, tw)) == parity
    for c in range(4):
        edges = graph.edges(c)
        if len(edges) < 2:
            continue
        e, f = rng.sample(edges, 2)
        for side in ('even', 'odd'):
            outcome = flip_by_parity(graph, c, e, f, side=side)
            if outcome.connected:
                assert parity_vector(outcome.graph) == parity


@pytest.mark.parametrize('seed', range(10))
def test_blob_cancellation_order_does_not_matter(seed):
    rng = random.Random(seed)
    core = crystallize(random_dipole_walk(15, seed))
    graph = core
    for _ in range(4):
        c = rng.randrange(4)
        graph, _ = create_dipole(graph, [x for x in range(4) if x != c], {c: rng.choice(graph.edges(c))})
    assert len(find_dipoles(graph, 3)) >= 1
    expected = state_hash(core)
    assert state_hash(cancel_blobs(graph)) == expected
    for _ in range(10):
        reduced = graph
        while blobs := find_dipoles(reduced, 3):
            reduced = cancel_dipole(reduced, rng.choice(blobs))
        assert state_hash(reduced) == expected


def test_crystallize(j6, b2):
    assert crystallize(j6) == j6
    assert crystallize(b2) == sphere_graph()
    for seed in range(10):
        graph = random_dipole_walk(25, seed)
        crystal = crystallize(graph)
        assert is_crystallization(crystal)
        assert crystal.n <= graph.n
