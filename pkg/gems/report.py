from dataclasses import dataclass, field
from functools import lru_cache

import networkx as nx

from .errors import NotACrystallization, NotAGem
from .graph import (COLOR_PAIRS, COLOR_TRIPLES, Color, ColoredGraph, complement,
                    residue_labels, residues)

EVEN = 'even'
ODD = 'odd'


@dataclass
class GemReport:
    v: int
    t: int
    b: int
    bigons: dict[tuple[Color, Color], int]
    is_gem: bool
    is_bipartite: bool
    is_crystallization: bool
    parity: dict[int, str] | None = None
    residue_counts: dict[tuple[Color, ...], int] = field(default_factory=dict)
    triballs_planar: bool = True

    def bigon(self, i: Color, j: Color) -> int:
        return self.bigons[(min(i, j), max(i, j))]

    def summary(self) -> str:
        return f'v={self.v} t={self.t} b={self.b} gem={"yes" if self.is_gem else "no"}'


def to_networkx(graph: ColoredGraph, colors=(0, 1, 2, 3), vertices=None) -> nx.MultiGraph:
    """Multigraph with one keyed edge per colored edge (key = color)."""
    g = nx.MultiGraph()
    g.add_nodes_from(graph.vertices if vertices is None else vertices)
    for c in colors:
        for u, v in graph.edges(c):
            if u in g and v in g:
                g.add_edge(u, v, key=c, color=c)
    return g


@lru_cache(maxsize=4096)
def parity_vector(graph: ColoredGraph) -> tuple[int, ...] | None:
    """parity[v] in {0, 1} with vertex 1 even, or None when not bipartite."""
    g = to_networkx(graph)
    if not nx.is_bipartite(g):
        return None
    coloring = nx.bipartite.color(g)
    flip = coloring[1]
    return (0,) + tuple(coloring[v] ^ flip for v in graph.vertices)


def is_bipartite(graph: ColoredGraph) -> bool:
    return parity_vector(graph) is not None


def bigon_table(graph: ColoredGraph) -> dict[tuple[Color, Color], int]:
    return {pair: len(residues(graph, pair)) for pair in COLOR_PAIRS}


def residue_counts(graph: ColoredGraph) -> dict[tuple[Color, ...], int]:
    return {triple: len(residues(graph, triple)) for triple in COLOR_TRIPLES}


def is_gem(graph: ColoredGraph) -> bool:
    return graph.n + sum(residue_counts(graph).values()) == sum(bigon_table(graph).values())


def triball_euler_check(graph: ColoredGraph) -> bool:
    """Every 3-residue, with its bigons as faces, has Euler characteristic 2."""
    for triple in COLOR_TRIPLES:
        pair_labels = {pair: residue_labels(graph, pair) for pair in COLOR_PAIRS if set(pair) <= set(triple)}
        for res in residues(graph, triple):
            v = len(res)
            e = 3 * v // 2
            f = sum(len({labels[w] for w in res.vertices}) for labels in pair_labels.values())
            if v - e + f != 2:
                return False
    return True


def triballs_planar(graph: ColoredGraph) -> bool:
    for triple in COLOR_TRIPLES:
        for res in residues(graph, triple):
            simple = nx.Graph(to_networkx(graph, colors=triple, vertices=res.vertices))
            if not nx.check_planarity(simple, counterexample=False)[0]:
                return False
    return True


def is_crystallization(graph: ColoredGraph) -> bool:
    """Every 3-residue is connected, which for a gem means it has no 1-dipole."""
    return is_gem(graph) and all(count == 1 for count in residue_counts(graph).values())


def gem_report(graph: ColoredGraph) -> GemReport:
    bigons = bigon_table(graph)
    counts = residue_counts(graph)
    t = sum(counts.values())
    b = sum(bigons.values())
    gem = graph.n + t == b
    parity = parity_vector(graph)

    return GemReport(
        v=graph.n,
        t=t,
        b=b,
        bigons=bigons,
        is_gem=gem,
        is_bipartite=parity is not None,
        is_crystallization=gem and is_crystallization(graph),
        parity={v: (EVEN, ODD)[parity[v]] for v in graph.vertices} if parity else None,
        residue_counts=counts,
        triballs_planar=triballs_planar(graph),
    )


def check_complementary(graph: ColoredGraph) -> bool:
    if not is_crystallization(graph):
        raise NotACrystallization(f'{graph.name or "graph"} is not a crystallization')
    table = bigon_table(graph)
    return all(table[pair] == table[complement(pair)] for pair in ((0, 1), (0, 2), (0, 3)))


def generator_count(graph: ColoredGraph, axis: Color) -> int:
    if axis not in (1, 2, 3):
        raise ValueError(f'axis must be 1, 2 or 3, got {axis}')
    if not is_gem(graph):
        raise NotAGem(f'{graph.name or "graph"} is not a gem')
    return len(residues(graph, (0, axis))) - 1
