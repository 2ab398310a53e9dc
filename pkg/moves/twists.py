from dataclasses import dataclass

from gems.errors import NotATwistor, NotBipartite, TheoryDiscrepancy
from gems.graph import Color, ColoredGraph, from_pairing, is_connected, same_residue
from gems.report import is_gem, parity_vector

from .flips import c_flip


@dataclass(frozen=True, order=True)
class Twistor:
    axis: Color
    kind: Color
    u: int
    v: int

    def __post_init__(self):
        if self.axis not in (1, 2, 3) or self.kind not in (1, 2, 3) or self.axis == self.kind:
            raise ValueError(f'invalid axis/kind pair {self.axis}/{self.kind}')
        if self.u == self.v:
            raise ValueError('twistor vertices must differ')

    @property
    def e_color(self) -> Color:
        """The color of the e-pair: neither 0, the axis nor the kind."""
        return 6 - self.axis - self.kind

    @property
    def label(self) -> str:
        return f'{self.kind}:{self.u}-{self.v}'

    @property
    def inverse(self) -> 'Twistor':
        return type(self)(self.kind, self.axis, self.u, self.v)


class Antipole(Twistor):
    pass


def is_twistor_pair(graph: ColoredGraph, kind: Color, u: int, v: int, antipole: bool = False) -> bool:
    """Twistor (or antipole) conditions for a pair of vertices with respect to a kind t."""
    if kind not in (1, 2, 3) or u == v:
        return False
    parity = parity_vector(graph)
    if parity is None:
        raise NotBipartite('twistors are defined for bipartite graphs')
    a, b = (c for c in (1, 2, 3) if c != kind)

    if not (same_residue(graph, (0, kind), u, v) and same_residue(graph, (a, b), u, v)):
        return False
    for pair in ((0, a), (kind, b), (0, b), (kind, a)):
        if same_residue(graph, pair, u, v):
            return False
    return (parity[u] != parity[v]) == antipole


def _conjugate(graph: ColoredGraph, colors, u: int, v: int) -> list[list[int]]:
    swap = {u: v, v: u}
    pairing = [list(p) for p in graph.pairing]
    for c in colors:
        old = graph.pairing[c]
        for x in graph.vertices:
            pairing[c][swap.get(x, x)] = swap.get(old[x], old[x])
    return pairing


def _check_twistor(graph: ColoredGraph, tw: Twistor):
    if isinstance(tw, Antipole) or not is_twistor_pair(graph, tw.kind, tw.u, tw.v):
        raise NotATwistor(f'{tw.label} is not a twistor of {graph.name or "graph"}')


def _checked(graph: ColoredGraph, tw: Twistor) -> ColoredGraph:
    if not is_connected(graph) or not is_gem(graph) or parity_vector(graph) is None:
        raise TheoryDiscrepancy(f'twisting {tw.label} did not give a bipartite gem')
    return graph


def twist_direct(graph: ColoredGraph, tw: Twistor) -> ColoredGraph:
    """Exchange the axis- and kind-colored neighbors of u and v."""
    _check_twistor(graph, tw)
    pairing = _conjugate(graph, (tw.axis, tw.kind), tw.u, tw.v)
    return _checked(from_pairing(graph.n, pairing, graph.name, check_connected=False), tw)


def twist_via_flip(graph: ColoredGraph, tw: Twistor) -> ColoredGraph:
    """Flip the e-pair, then interchange the labels u and v on colors 1, 2 and 3."""
    _check_twistor(graph, tw)
    s = tw.e_color
    a, b = graph.pairing[s][tw.u], graph.pairing[s][tw.v]
    flipped = c_flip(graph, s, (tw.u, a), (tw.v, b)).graph
    pairing = _conjugate(flipped, (1, 2, 3), tw.u, tw.v)
    return _checked(from_pairing(graph.n, pairing, graph.name, check_connected=False), tw)
