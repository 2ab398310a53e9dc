from dataclasses import dataclass, field

import networkx as nx

from gems.errors import NotACrystallization
from gems.graph import Color, ColoredGraph, Residue, axis_colors, residue_labels, residues
from gems.report import is_crystallization
from moves.twists import Antipole, Twistor

from .twistors import enumerate_antipoles, enumerate_twistors

TWISTOR = 'twistor'
ANTIPOLE = 'antipole'


@dataclass(frozen=True)
class GrayEdge:
    source: int
    target: int
    twistor: Twistor
    # the two e-colored edges crossed by the edge, the first at u and the second at v
    e_pair: tuple[tuple[int, int], tuple[int, int]]

    @property
    def kind(self) -> Color:
        return self.twistor.kind

    @property
    def vertices(self) -> tuple[int, int]:
        return self.twistor.u, self.twistor.v

    @property
    def origin(self) -> str:
        return ANTIPOLE if isinstance(self.twistor, Antipole) else TWISTOR

    @property
    def label(self) -> str:
        return self.twistor.label


@dataclass
class GrayGraph:
    axis: Color
    nodes: list[Residue]
    edges: list[GrayEdge] = field(default_factory=list)

    def degree(self, node: int) -> int:
        return sum((e.source == node) + (e.target == node) for e in self.edges)

    def as_networkx(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(range(len(self.nodes)))
        for e in self.edges:
            g.add_edge(e.source, e.target, key=e.label, origin=e.origin)
        return g

    def is_connected(self) -> bool:
        return nx.is_connected(self.as_networkx())


def gray_edge(graph: ColoredGraph, tw: Twistor) -> GrayEdge:
    j, k = axis_colors(tw.axis)
    labels = residue_labels(graph, (j, k))
    s = tw.e_color
    e_pair = ((tw.u, graph.pairing[s][tw.u]), (tw.v, graph.pairing[s][tw.v]))
    return GrayEdge(labels[tw.u], labels[tw.v], tw, e_pair)


def build_gray_graph(graph: ColoredGraph, axis: Color = 1) -> GrayGraph:
    """Nodes are the jk-gons; every twistor and antipole joins the gons of its two vertices."""
    if not is_crystallization(graph):
        raise NotACrystallization(f'{graph.name or "graph"} is not a crystallization')
    j, k = axis_colors(axis)
    gray = GrayGraph(axis, residues(graph, (j, k)))
    for tw in enumerate_twistors(graph, axis) + enumerate_antipoles(graph, axis):
        gray.edges.append(gray_edge(graph, tw))
    return gray
