from dataclasses import dataclass, field

from gems.errors import InvalidDiagram, No2DipoleFound, TheoryDiscrepancy
from gems.graph import Color, ColoredGraph, axis_colors, state_hash
from gems.log import log_message, report_discrepancy
from moves.dipoles import DipoleSpec, cancel_blobs_with_map, is_dipole
from moves.flips import thicken
from moves.trace import Move, MoveTrace, TraceEntry

from .bloboid import is_bloboid
from .chords import ChordDiagram
from .j2 import j2_layout


@dataclass(frozen=True)
class ThickeningStep:
    state_hash: str
    dipole: DipoleSpec
    flip_color: Color
    # the flipped color: 0 for a flip of interior edges, the axis for exterior ones
    tag: int


@dataclass
class ThickeningSequence:
    initial_hash: str
    axis: Color = 1
    steps: list[ThickeningStep] = field(default_factory=list)
    terminal: ColoredGraph | None = None

    def __len__(self) -> int:
        return len(self.steps)

    def as_trace(self) -> MoveTrace:
        """The same steps as a replayable move trace."""
        trace = MoveTrace(self.initial_hash)
        hashes = [s.state_hash for s in self.steps] + [state_hash(self.terminal)]
        for step, post in zip(self.steps, hashes[1:]):
            trace.entries.append(TraceEntry(Move.thicken(step.dipole, step.flip_color), step.state_hash, post))
        return trace


def check_two_edge_pairs(core: ColoredGraph):
    """Every pair of vertices joined by exactly two edges in a J2 core is a 2-dipole."""
    for u in core.vertices:
        for c in range(4):
            v = core.pairing[c][u]
            if u < v:
                joining = core.joining_colors(u, v)
                if len(joining) == 2 and joining[0] == c and not is_dipole(core, joining, u, v):
                    report_discrepancy('two_edges_not_dipole', f'{u}-{v} joined by {joining}', core)
                    raise TheoryDiscrepancy(f'{u}-{v} is joined by two edges but is not a 2-dipole')


def _depths(chords) -> dict[tuple[int, int], int]:
    """Nesting depth of every chord among chords of the same family."""
    return {(a, b): sum(1 for c, d in chords if c < a and b < d) for a, b in chords}


def choose_cap(core: ColoredGraph, diagram: ChordDiagram, order: list[int], axis: Color) -> tuple[DipoleSpec, Color]:
    """A 2-dipole made of a Y-edge and a j-edge, deepest Y-chord first; returns it with the color to flip."""
    j, _ = axis_colors(axis)
    position = {v: idx for idx, v in enumerate(order, start=1)}
    candidates = []
    for y, chords in ((0, diagram.inner), (axis, diagram.outer)):
        depth = _depths(chords)
        for u, v in core.edges(y):
            if core.pairing[j][u] == v and is_dipole(core, (y, j), u, v):
                a, b = sorted((position[u], position[v]))
                candidates.append((-depth[(a, b)], min(u, v), y, u, v))
    if not candidates:
        raise No2DipoleFound('no 2-dipole made of a Y-edge and a j-edge')
    _, _, y, u, v = min(candidates)
    return DipoleSpec.of((y, j), u, v), axis if y == 0 else 0


def thickening_sequence(graph: ColoredGraph, axis: Color = 1) -> ThickeningSequence:
    """Thicken 2-dipoles of a J2-gem into blobs until a bloboid remains."""
    diagram, _, reason = j2_layout(graph, axis)
    if diagram is None:
        raise InvalidDiagram(f'not a J2-gem: {reason}')

    sequence = ThickeningSequence(state_hash(graph), axis)
    working = graph
    for step in range(diagram.n - 1):
        core, labels = cancel_blobs_with_map(working)
        layout, order, reason = j2_layout(core, axis)
        if layout is None:
            report_discrepancy('not_j2b', f'step {step}: blob-free core is not a J2-gem ({reason})', working)
            raise TheoryDiscrepancy(f'intermediate graph at step {step} is not a J2B-gem')
        check_two_edge_pairs(core)
        try:
            cap, flip_color = choose_cap(core, layout, order, axis)
        except No2DipoleFound:
            report_discrepancy('no_2_dipole', f'step {step}: no 2-dipole in the J2 core', working)
            raise

        u, v = (labels[w - 1] for w in cap.vertices)
        dipole = DipoleSpec.of(cap.colors, u, v)
        sequence.steps.append(ThickeningStep(state_hash(working), dipole, flip_color, flip_color))
        log_message(f'thicken {dipole} flipping {flip_color}', verbose=True)
        working, _ = thicken(working, dipole, flip_color)

    if not is_bloboid(working):
        report_discrepancy('terminal_not_bloboid', 'thickening ended outside the bloboids', working)
        raise TheoryDiscrepancy('thickening did not end in a bloboid')
    sequence.terminal = working
    return sequence
