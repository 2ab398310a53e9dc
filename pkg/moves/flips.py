from dataclasses import dataclass

from gems.errors import BadAttachment, NotA2Dipole, NotBipartite, NotBlobAfterFlip, SameEdge, TheoryDiscrepancy
from gems.graph import Color, ColoredGraph, from_pairing, is_connected
from gems.report import is_gem, parity_vector

from .dipoles import DipoleSpec, is_dipole

SIDES = ('even', 'odd')


@dataclass(frozen=True)
class FlipOutcome:
    graph: ColoredGraph
    connected: bool
    is_gem: bool


def c_flip(graph: ColoredGraph, color: Color, e: tuple[int, int], f: tuple[int, int]) -> FlipOutcome:
    """Replace the color-edges a-b and x-y by a-y and x-b."""
    (a, b), (x, y) = e, f
    for s, t in (e, f):
        if not (1 <= s <= graph.n and 1 <= t <= graph.n) or graph.pairing[color][s] != t:
            raise BadAttachment(f'{s}-{t} is not a {color}-edge')
    if {a, b} == {x, y}:
        raise SameEdge(f'cannot flip edge {a}-{b} with itself')

    pairing = [list(p) for p in graph.pairing]
    p = pairing[color]
    p[a], p[y] = y, a
    p[x], p[b] = b, x
    flipped = from_pairing(graph.n, pairing, graph.name, check_connected=False)
    connected = is_connected(flipped)
    return FlipOutcome(flipped, connected, connected and is_gem(flipped))


def flip_by_parity(graph: ColoredGraph, color: Color, e: tuple[int, int], f: tuple[int, int],
                   side: str = 'even') -> FlipOutcome:
    """Switch the even (or odd) color-neighbors of the ends of e and f."""
    if side not in SIDES:
        raise ValueError(f'side must be one of {SIDES}')
    parity = parity_vector(graph)
    if parity is None:
        raise NotBipartite('parity-based flips need a bipartite graph')
    want = SIDES.index(side)
    e = e if parity[e[0]] == want else (e[1], e[0])
    f = f if parity[f[0]] == want else (f[1], f[0])
    return c_flip(graph, color, e, f)


def thicken(graph: ColoredGraph, d: DipoleSpec, flip_color: Color) -> tuple[ColoredGraph, DipoleSpec]:
    """Flip the flip_color-edges at the ends of a 2-dipole so that they join its ends."""
    u, v = d.vertices
    if d.size != 2 or not is_dipole(graph, d.colors, u, v):
        raise NotA2Dipole(f'{d} is not a 2-dipole')
    if flip_color in d.colors:
        raise ValueError(f'flip color {flip_color} is already a dipole color')

    a, b = graph.pairing[flip_color][u], graph.pairing[flip_color][v]
    outcome = c_flip(graph, flip_color, (u, a), (b, v))
    blob = DipoleSpec.of(d.colors + (flip_color,), u, v)
    if not is_dipole(outcome.graph, blob.colors, u, v):
        raise NotBlobAfterFlip(f'thickening {d} did not produce a blob')
    if not outcome.is_gem:
        raise TheoryDiscrepancy(f'thickening {d} left the class of gems')
    return outcome.graph, blob
