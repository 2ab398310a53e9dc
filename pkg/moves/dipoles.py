from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Sequence

from gems.errors import (BadAttachment, Disconnected, NotADipole, NotDipoleAfterInsertion,
                         NotTwoEdges, ResultDisconnected)
from gems.graph import (COLORS, Color, ColoredGraph, complement, from_pairing, residues,
                        same_residue)


@dataclass(frozen=True)
class DipoleSpec:
    colors: tuple[Color, ...]
    vertices: tuple[int, int]

    @classmethod
    def of(cls, colors, u: int, v: int) -> 'DipoleSpec':
        return cls(tuple(sorted(set(colors))), (min(u, v), max(u, v)))

    @property
    def size(self) -> int:
        return len(self.colors)

    def __str__(self) -> str:
        u, v = self.vertices
        return f'({",".join(map(str, self.colors))}; {u}-{v})'


def is_dipole(graph: ColoredGraph, colors, u: int, v: int) -> bool:
    colors = tuple(sorted(set(colors)))
    if not 1 <= len(colors) <= 3 or u == v:
        return False
    if any(graph.pairing[c][u] != v for c in colors):
        return False
    return not same_residue(graph, complement(colors), u, v)


def find_dipoles(graph: ColoredGraph, size: int) -> list[DipoleSpec]:
    if size not in (1, 2, 3):
        raise ValueError(f'dipole size must be 1, 2 or 3, got {size}')
    found = []
    for colors in combinations(COLORS, size):
        for res in residues(graph, colors):
            if len(res) == 2 and is_dipole(graph, colors, *res.vertices):
                found.append(DipoleSpec.of(colors, *res.vertices))
    return found


def _mutable(graph: ColoredGraph) -> list[list[int]]:
    return [list(p) for p in graph.pairing]


def _drop(n: int, pairing: list[list[int]], removed: Sequence[int], name: str,
          check_connected: bool = True) -> tuple[ColoredGraph, list[int]]:
    """Delete vertices (already unlinked) and renumber the rest in increasing order."""
    gone = set(removed)
    keep = [w for w in range(1, n + 1) if w not in gone]
    index = {w: i + 1 for i, w in enumerate(keep)}
    compact = []
    for c in COLORS:
        p = [0] * (len(keep) + 1)
        for w in keep:
            p[index[w]] = index[pairing[c][w]]
        compact.append(p)
    return from_pairing(len(keep), compact, name, check_connected=check_connected), keep


def _weld(pairing: list[list[int]], color: Color, u: int, v: int):
    a, b = pairing[color][u], pairing[color][v]
    pairing[color][a], pairing[color][b] = b, a


def cancel_dipole_with_map(graph: ColoredGraph, d: DipoleSpec) -> tuple[ColoredGraph, list[int]]:
    u, v = d.vertices
    if not is_dipole(graph, d.colors, u, v):
        raise NotADipole(f'{d} is not a dipole of {graph.name or "graph"}')
    pairing = _mutable(graph)
    for c in complement(d.colors):
        _weld(pairing, c, u, v)
    try:
        return _drop(graph.n, pairing, (u, v), graph.name)
    except Disconnected as e:
        raise ResultDisconnected(f'cancelling {d} disconnected the graph') from e


def cancel_dipole(graph: ColoredGraph, d: DipoleSpec) -> ColoredGraph:
    return cancel_dipole_with_map(graph, d)[0]


def create_dipole(graph: ColoredGraph, colors, attachment: Mapping[Color, tuple[int, int]]) -> tuple[ColoredGraph, DipoleSpec]:
    """Insert an I-dipole {u, v}; attachment[c] = (a, b) turns the c-edge a-b into a-u, v-b."""
    colors = tuple(sorted(set(colors)))
    if not 1 <= len(colors) <= 3:
        raise BadAttachment(f'dipole colors must have 1 to 3 elements, got {colors}')
    outside = complement(colors)
    if set(attachment) != set(outside):
        raise BadAttachment(f'attachment colors {sorted(attachment)} must be exactly {list(outside)}')
    for c, (a, b) in attachment.items():
        if not (1 <= a <= graph.n and 1 <= b <= graph.n) or graph.pairing[c][a] != b:
            raise BadAttachment(f'{a}-{b} is not a {c}-edge')

    n = graph.n
    u, v = n + 1, n + 2
    pairing = [p + [0, 0] for p in _mutable(graph)]
    for c in colors:
        pairing[c][u], pairing[c][v] = v, u
    for c, (a, b) in attachment.items():
        pairing[c][a], pairing[c][u] = u, a
        pairing[c][v], pairing[c][b] = b, v

    created = from_pairing(n + 2, pairing, graph.name, check_connected=False)
    spec = DipoleSpec.of(colors, u, v)
    if not is_dipole(created, colors, u, v):
        raise NotDipoleAfterInsertion(f'the site does not separate {complement(colors)}-residues')
    return created, spec


def cancel_blobs_with_map(graph: ColoredGraph) -> tuple[ColoredGraph, list[int]]:
    """Cancel 3-dipoles until none remain; also returns the original label of every survivor."""
    labels = list(graph.vertices)
    while True:
        blobs = find_dipoles(graph, 3)
        if not blobs:
            return graph, labels
        graph, keep = cancel_dipole_with_map(graph, blobs[0])
        labels = [labels[w - 1] for w in keep]


def cancel_blobs(graph: ColoredGraph) -> ColoredGraph:
    return cancel_blobs_with_map(graph)[0]


def fus(graph: ColoredGraph, pair: tuple[int, int]) -> ColoredGraph:
    p, q = pair
    joining = graph.joining_colors(p, q)
    if len(joining) != 2:
        raise NotTwoEdges(f'{p} and {q} are joined by {len(joining)} edges')
    pairing = _mutable(graph)
    for c in complement(joining):
        _weld(pairing, c, p, q)
    return _drop(graph.n, pairing, (p, q), graph.name)[0]


def crystallize(graph: ColoredGraph) -> ColoredGraph:
    """Cancel 1-dipoles until every 3-residue is connected."""
    while True:
        dipoles = find_dipoles(graph, 1)
        if not dipoles:
            return graph
        graph = cancel_dipole(graph, dipoles[0])
