from typing import TYPE_CHECKING

from gems.errors import InvalidDiagram
from gems.graph import Color, ColoredGraph, axis_colors, bigon_count, from_pairing
from gems.log import log_message, report_discrepancy
from gems.report import is_crystallization, is_gem
from moves.dipoles import cancel_blobs
from moves.trace import Move, MoveTrace, apply_move

from .chords import ChordDiagram, validate_diagram

if TYPE_CHECKING:
    from gray.resolution import Resolution


def j2_from_chords(d: ChordDiagram, axis: Color = 1) -> ColoredGraph:
    """Crossing points become vertices; X-segments alternate j and k, inner chords are 0, outer are axis."""
    inner, outer = validate_diagram(d)
    j, k = axis_colors(axis)
    m = d.points
    pairing = [[0] * (m + 1) for _ in range(4)]
    for p in range(1, m + 1):
        q = p % m + 1
        c = j if p % 2 else k
        pairing[c][p], pairing[c][q] = q, p
        pairing[0][p] = inner[p]
        pairing[axis][p] = outer[p]
    return from_pairing(m, pairing, f'J{m}')


def j2_layout(graph: ColoredGraph, axis: Color = 1) -> tuple[ChordDiagram | None, list[int], str | None]:
    """(diagram, vertex at every X-position, reason for failure) read from vertex 1 along the jk-gon."""
    j, k = axis_colors(axis)
    if not is_gem(graph):
        return None, [], 'not a gem'
    if not is_crystallization(graph):
        return None, [], 'not a crystallization'
    if bigon_count(graph, j, k) != 1:
        return None, [], f'b{j}{k} = {bigon_count(graph, j, k)}'
    if bigon_count(graph, 0, axis) != 1:
        return None, [], f'b0{axis} = {bigon_count(graph, 0, axis)}'

    order = [1]
    while len(order) < graph.n:
        c = j if len(order) % 2 else k
        order.append(graph.pairing[c][order[-1]])
    position = {v: idx for idx, v in enumerate(order, start=1)}

    def chords(color):
        return [(position[a], position[b]) for a, b in graph.edges(color)]

    d = ChordDiagram.of(graph.n // 2, chords(0), chords(axis))
    try:
        validate_diagram(d)
    except InvalidDiagram as e:
        report_discrepancy('j2_unrealizable', f'bigon counts of a J2-gem but {e.message}', graph)
        return None, order, e.message
    return d, order, None


def recognize_j2_reason(graph: ColoredGraph, axis: Color = 1) -> tuple[ChordDiagram | None, str | None]:
    d, _, reason = j2_layout(graph, axis)
    return d, reason


def recognize_j2(graph: ColoredGraph, axis: Color = 1) -> ChordDiagram | None:
    return recognize_j2_reason(graph, axis)[0]


def is_j2b(graph: ColoredGraph, axis: Color = 1) -> bool:
    """True when cancelling every blob leaves a J2-gem."""
    return recognize_j2(cancel_blobs(graph), axis) is not None


def twist_all(graph: ColoredGraph, resolution: 'Resolution', trace: MoveTrace | None = None) -> ColoredGraph:
    """Apply the preprocessing moves, then every twistor by two flips. Moves go to `trace` when given."""
    run = trace.run if trace is not None else apply_move
    for move in resolution.preprocessing:
        graph = run(graph, move)
    for tw in resolution.twistors:
        log_message(f'twisting {tw.label}', verbose=True)
        graph = run(graph, Move.twist(tw, via_flip=True))
    return graph
