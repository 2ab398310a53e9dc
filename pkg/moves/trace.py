from dataclasses import dataclass, field
from enum import Enum

from gems.errors import ReplayMismatch
from gems.graph import ColoredGraph, state_hash

from .dipoles import DipoleSpec, cancel_blobs, cancel_dipole, create_dipole, fus
from .flips import c_flip, thicken
from .twists import Twistor, twist_direct, twist_via_flip


class MoveKind(Enum):
    DIPOLE_CANCEL = 'DipoleCancel'
    DIPOLE_CREATE = 'DipoleCreate'
    FLIP = 'Flip'
    TWIST_DIRECT = 'TwistDirect'
    TWIST_VIA_FLIP = 'TwistViaFlip'
    THICKEN = 'Thicken'
    FUS = 'Fus'
    BLOB_CANCEL_ALL = 'BlobCancelAll'


def _pair(text: str) -> tuple[int, int]:
    a, b = text.split('-')
    return int(a), int(b)


def _colors(text: str) -> tuple[int, ...]:
    return tuple(int(c) for c in text.split(',')) if text else ()


@dataclass(frozen=True)
class Move:
    kind: MoveKind
    # string values only, so that a move reads back exactly as it was written
    payload: dict[str, str] = field(default_factory=dict)

    @classmethod
    def dipole_cancel(cls, d: DipoleSpec) -> 'Move':
        u, v = d.vertices
        return cls(MoveKind.DIPOLE_CANCEL, {'colors': ','.join(map(str, d.colors)), 'u': str(u), 'v': str(v)})

    @classmethod
    def dipole_create(cls, colors, attachment) -> 'Move':
        sites = ','.join(f'{c}:{a}-{b}' for c, (a, b) in sorted(attachment.items()))
        return cls(MoveKind.DIPOLE_CREATE, {'colors': ','.join(map(str, sorted(colors))), 'at': sites})

    @classmethod
    def flip(cls, color: int, e: tuple[int, int], f: tuple[int, int]) -> 'Move':
        return cls(MoveKind.FLIP, {'color': str(color), 'e': f'{e[0]}-{e[1]}', 'f': f'{f[0]}-{f[1]}'})

    @classmethod
    def twist(cls, tw: Twistor, via_flip: bool = False) -> 'Move':
        kind = MoveKind.TWIST_VIA_FLIP if via_flip else MoveKind.TWIST_DIRECT
        return cls(kind, {'axis': str(tw.axis), 'kind': str(tw.kind), 'u': str(tw.u), 'v': str(tw.v)})

    @classmethod
    def thicken(cls, d: DipoleSpec, flip_color: int) -> 'Move':
        u, v = d.vertices
        return cls(MoveKind.THICKEN, {'colors': ','.join(map(str, d.colors)), 'u': str(u), 'v': str(v),
                                      'flip': str(flip_color)})

    @classmethod
    def fus(cls, p: int, q: int) -> 'Move':
        return cls(MoveKind.FUS, {'p': str(p), 'q': str(q)})

    @classmethod
    def blob_cancel_all(cls) -> 'Move':
        return cls(MoveKind.BLOB_CANCEL_ALL)

    def __str__(self) -> str:
        fields = ' '.join(f'{k}={v}' for k, v in self.payload.items())
        return f'{self.kind.value} {fields}'.rstrip()


def _dipole(p: dict[str, str]) -> DipoleSpec:
    return DipoleSpec.of(_colors(p['colors']), int(p['u']), int(p['v']))


def apply_move(graph: ColoredGraph, move: Move) -> ColoredGraph:
    p = move.payload
    kind = move.kind
    if kind == MoveKind.DIPOLE_CANCEL:
        return cancel_dipole(graph, _dipole(p))
    if kind == MoveKind.DIPOLE_CREATE:
        attachment = {}
        for site in p['at'].split(','):
            color, edge = site.split(':')
            attachment[int(color)] = _pair(edge)
        return create_dipole(graph, _colors(p['colors']), attachment)[0]
    if kind == MoveKind.FLIP:
        return c_flip(graph, int(p['color']), _pair(p['e']), _pair(p['f'])).graph
    if kind in (MoveKind.TWIST_DIRECT, MoveKind.TWIST_VIA_FLIP):
        tw = Twistor(int(p['axis']), int(p['kind']), int(p['u']), int(p['v']))
        return twist_direct(graph, tw) if kind == MoveKind.TWIST_DIRECT else twist_via_flip(graph, tw)
    if kind == MoveKind.THICKEN:
        return thicken(graph, _dipole(p), int(p['flip']))[0]
    if kind == MoveKind.FUS:
        return fus(graph, (int(p['p']), int(p['q'])))
    return cancel_blobs(graph)


@dataclass(frozen=True)
class TraceEntry:
    move: Move
    pre_hash: str
    post_hash: str


@dataclass
class MoveTrace:
    initial_hash: str
    entries: list[TraceEntry] = field(default_factory=list)

    @classmethod
    def starting_at(cls, graph: ColoredGraph) -> 'MoveTrace':
        return cls(state_hash(graph))

    def record(self, move: Move, before: ColoredGraph, after: ColoredGraph):
        self.entries.append(TraceEntry(move, state_hash(before), state_hash(after)))

    def run(self, graph: ColoredGraph, move: Move) -> ColoredGraph:
        """Apply a move and append it to the trace."""
        after = apply_move(graph, move)
        self.record(move, graph, after)
        return after

    def __len__(self) -> int:
        return len(self.entries)


def replay(initial: ColoredGraph, trace: MoveTrace) -> ColoredGraph:
    graph = initial
    if state_hash(graph) != trace.initial_hash:
        raise ReplayMismatch(f'initial state {state_hash(graph)} differs from {trace.initial_hash}')
    for step, entry in enumerate(trace.entries, start=1):
        if state_hash(graph) != entry.pre_hash:
            raise ReplayMismatch(f'step {step}: state {state_hash(graph)} differs from {entry.pre_hash}')
        graph = apply_move(graph, entry.move)
        if state_hash(graph) != entry.post_hash:
            raise ReplayMismatch(f'step {step}: {entry.move.kind.value} gave {state_hash(graph)}, '
                                 f'expected {entry.post_hash}')
    return graph
