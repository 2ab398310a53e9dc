from itertools import combinations

import config as cfg
from gems.errors import BadAttachment, NoAdequateSiteFound, NotBipartite, NotDipoleAfterInsertion
from gems.graph import Color, ColoredGraph, axis_colors, bigon_count, complement, residue_labels, residues
from gems.log import log_message
from gems.report import parity_vector
from moves.dipoles import create_dipole
from moves.trace import Move
from moves.twists import Antipole, Twistor, is_twistor_pair


def _pairs(graph: ColoredGraph, axis: Color, antipole: bool) -> list[Twistor]:
    if parity_vector(graph) is None:
        raise NotBipartite(f'{graph.name or "graph"} is not bipartite')
    cls = Antipole if antipole else Twistor
    found = []
    for kind in axis_colors(axis):
        # both ends of a twistor lie on one 0t-gon
        for gon in residues(graph, (0, kind)):
            for u, v in combinations(sorted(gon.vertices), 2):
                if is_twistor_pair(graph, kind, u, v, antipole=antipole):
                    found.append(cls(axis, kind, u, v))
    return sorted(found)


def enumerate_twistors(graph: ColoredGraph, axis: Color = 1) -> list[Twistor]:
    return _pairs(graph, axis, antipole=False)


def enumerate_antipoles(graph: ColoredGraph, axis: Color = 1) -> list[Antipole]:
    return _pairs(graph, axis, antipole=True)


def _candidate_edges(graph: ColoredGraph, color: Color, focus: list[int]) -> list[tuple[int, int]]:
    seen, edges = set(), []
    for w in focus:
        e = tuple(sorted((w, graph.pairing[color][w])))
        if e not in seen:
            seen.add(e)
            edges.append(e)
    return edges


def conversion_sites(graph: ColoredGraph, a: Antipole):
    """2-dipole insertion sites near the antipole: edges at u and v first, then along its 0t-gon.

    Only dipoles with one color of {0, axis} and one of {j, k} are offered; the other two
    kinds change the number of jk-gons.
    """
    parity = parity_vector(graph)
    j, k = axis_colors(a.axis)
    mixed = [(min(x, y), max(x, y)) for x in (0, a.axis) for y in (j, k)]
    near = [a.u, a.v]
    gon = next(r for r in residues(graph, (0, a.kind)) if a.u in r)
    far = [w for w in gon.vertices if w not in near]
    for focus in (near, near + far):
        for colors in sorted(mixed):
            c1, c2 = complement(colors)
            for e1 in _candidate_edges(graph, c1, focus):
                for e2 in _candidate_edges(graph, c2, focus):
                    for x1, y1 in (e1, e1[::-1]):
                        for x2, y2 in (e2, e2[::-1]):
                            if parity[x1] == parity[x2]:
                                yield colors, {c1: (x1, y1), c2: (x2, y2)}


def convert_antipole_with_move(graph: ColoredGraph, a: Antipole) -> tuple[ColoredGraph, Twistor, Move]:
    """Create a 2-dipole next to an antipole so that it yields a twistor of the same kind between the same gons."""
    j, k = axis_colors(a.axis)
    gons = bigon_count(graph, j, k)
    tried = set()
    for colors, attachment in conversion_sites(graph, a):
        key = (colors, tuple(sorted(attachment.items())))
        if key in tried:
            continue
        tried.add(key)
        if len(tried) > cfg.CONVERSION_SITE_LIMIT:
            break
        try:
            enlarged, dipole = create_dipole(graph, colors, attachment)
        except (BadAttachment, NotDipoleAfterInsertion):
            continue
        if bigon_count(enlarged, j, k) != gons:
            continue
        labels = residue_labels(enlarged, (j, k))
        wanted = {labels[a.u], labels[a.v]}
        for x in (a.u, a.v):
            for y in dipole.vertices:
                if {labels[x], labels[y]} == wanted and is_twistor_pair(enlarged, a.kind, x, y):
                    log_message(f'antipole {a.label} converted after {len(tried)} sites', verbose=True)
                    return enlarged, Twistor(a.axis, a.kind, min(x, y), max(x, y)), Move.dipole_create(colors, attachment)
    raise NoAdequateSiteFound(f'no 2-dipole converts antipole {a.label} (tried {len(tried)} sites)')


def convert_antipole(graph: ColoredGraph, a: Antipole) -> tuple[ColoredGraph, Twistor]:
    enlarged, twistor, _ = convert_antipole_with_move(graph, a)
    return enlarged, twistor
