import random

import config as cfg
from gems.errors import GemError
from gems.graph import COLORS, ColoredGraph, complement, sphere_graph
from gems.log import log_message
from gems.report import parity_vector

from .dipoles import find_dipoles
from .trace import Move, MoveTrace, apply_move

MAX_ATTEMPTS = 50  # per step


def _random_creation(graph: ColoredGraph, rng: random.Random, orientable: bool) -> Move:
    size = rng.choice((1, 2, 2, 3))
    colors = tuple(sorted(rng.sample(COLORS, size)))
    parity = parity_vector(graph) if orientable else None
    side = rng.randrange(2)
    attachment = {}
    for c in complement(colors):
        a, b = rng.choice(graph.edges(c))
        # all u-ends on one side keeps the graph bipartite
        if parity is not None:
            if parity[a] != side:
                a, b = b, a
        elif rng.randrange(2):
            a, b = b, a
        attachment[c] = (a, b)
    return Move.dipole_create(colors, attachment)


def random_dipole_walk(steps: int, seed: int | None = None, orientable: bool = True,
                       trace: MoveTrace | None = None) -> ColoredGraph:
    """Seeded random sequence of dipole creations and cancellations starting at G2."""
    seed = cfg.DEFAULT_SEED if seed is None else seed
    rng = random.Random(seed)
    graph = sphere_graph()
    for step in range(steps):
        for _ in range(MAX_ATTEMPTS):
            dipoles = [d for size in (1, 2, 3) for d in find_dipoles(graph, size)]
            if dipoles and graph.n > 2 and rng.random() < 0.4:
                move = Move.dipole_cancel(rng.choice(dipoles))
            else:
                move = _random_creation(graph, rng, orientable)
            try:
                graph = trace.run(graph, move) if trace is not None else apply_move(graph, move)
                break
            except GemError as e:
                log_message(f'walk step {step}: {move} rejected ({e.code})', verbose=True)
    return graph.renamed(f'walk-{seed}-{steps}')