import re
from dataclasses import dataclass

from gems.errors import GemError, GemSyntaxError, SemanticError
from gems.graph import COLORS, ColoredGraph, build_graph, relabel, state_hash
from gray.resolution import Resolution
from jordan.chords import ChordDiagram, validate_diagram
from jordan.thickening import ThickeningSequence
from moves.trace import Move, MoveKind, MoveTrace, TraceEntry
from moves.twists import Twistor

HEADERS = ('gem', 'jordan', 'resolution', 'trace', 'sequence')
PAIR = re.compile(r'^(\d+)-(\d+)$')
COLOR_LINE = re.compile(r'^color (\d+):(.*)$')
TWISTOR_LINE = re.compile(r'^(\d+):(\d+)-(\d+)$')
HASH = re.compile(r'^[0-9a-f]{16}$')


@dataclass
class Document:
    kind: str
    text: str
    # line number of the header in the whole stream
    start: int


def _lines(text: str, start: int = 1):
    """(line number, content) of every non-empty line with comments stripped."""
    for number, raw in enumerate(text.split('\n'), start=start):
        line = raw.split('#', 1)[0].strip()
        if line:
            yield number, line


def split_documents(text: str) -> list[Document]:
    docs, current, start = [], None, 0
    body: list[str] = []
    for number, raw in enumerate(text.split('\n'), start=1):
        word = raw.split('#', 1)[0].split(maxsplit=1)
        if word and word[0] in HEADERS:
            if current:
                docs.append(Document(current, '\n'.join(body), start))
            current, start, body = word[0], number, []
        elif current is None:
            if word:
                raise GemSyntaxError(f'expected one of {", ".join(HEADERS)}', number)
            continue
        body.append(raw)
    if current:
        docs.append(Document(current, '\n'.join(body), start))
    return docs


def _pairs(tokens: list[str], line: int, column: int) -> list[tuple[int, int]]:
    pairs = []
    for token in tokens:
        m = PAIR.match(token)
        if not m:
            raise GemSyntaxError(f'expected u-v, got {token!r}', line, column)
        pairs.append((int(m.group(1)), int(m.group(2))))
    return pairs


def _expect(lines, keyword: str, start: int) -> tuple[int, str]:
    try:
        number, line = next(lines)
    except StopIteration:
        raise GemSyntaxError(f'missing {keyword!r} line', start)
    if line.split(maxsplit=1)[0] != keyword.split()[0]:
        raise GemSyntaxError(f'expected {keyword!r}, got {line!r}', number)
    return number, line


def _int_field(line: str, number: int, prefix: str) -> int:
    value = line[len(prefix):].strip()
    if not value.isdigit():
        raise GemSyntaxError(f'expected a number after {prefix.strip()!r}', number, len(prefix) + 1)
    return int(value)


def parse_gem(text: str, start: int = 1) -> ColoredGraph:
    lines = _lines(text, start)
    number, header = _expect(lines, 'gem <name>', start)
    name = header[len('gem'):].strip()
    vnumber, vline = _expect(lines, 'vertices <N>', number)
    n = _int_field(vline, vnumber, 'vertices ')

    matchings: dict[int, list[tuple[int, int]]] = {}
    color_lines: dict[int, int] = {}
    for number, line in lines:
        m = COLOR_LINE.match(line)
        if not m:
            raise GemSyntaxError(f'expected "color <c>: u-v ...", got {line!r}', number)
        c = int(m.group(1))
        if c not in COLORS or c in matchings:
            raise GemSyntaxError(f'color {c} is out of range or repeated', number, 7)
        matchings[c] = _pairs(m.group(2).split(), number, len(line) - len(m.group(2)) + 1)
        color_lines[c] = number
    missing = [c for c in COLORS if c not in matchings]
    if missing:
        raise GemSyntaxError(f'missing color lines {missing}', vnumber)

    try:
        return build_graph(n, [matchings[c] for c in COLORS], name)
    except GemError as e:
        m = re.match(r'color (\d)', e.message)
        raise SemanticError(e, color_lines[int(m.group(1))] if m else vnumber) from e


def serialize_gem(graph: ColoredGraph) -> str:
    lines = [f'gem {graph.name or "unnamed"}', f'vertices {graph.n}']
    for c in COLORS:
        lines.append(f'color {c}: ' + ' '.join(f'{u}-{v}' for u, v in graph.edges(c)))
    return '\n'.join(lines) + '\n'


def normalize_0consecutive(graph: ColoredGraph) -> ColoredGraph:
    """Relabel so that the 0-edges are 1-2, 3-4, ..."""
    mapping: dict[int, int] = {}
    for v in graph.vertices:
        if v not in mapping:
            mapping[v] = len(mapping) + 1
            mapping[graph.pairing[0][v]] = len(mapping) + 1
    return relabel(graph, mapping)


def parse_chords(text: str, start: int = 1) -> ChordDiagram:
    lines = _lines(text, start)
    number, header = _expect(lines, 'jordan <2n>', start)
    points = _int_field(header, number, 'jordan ')
    if points % 2:
        raise GemSyntaxError(f'a diagram has an even number of points, got {points}', number, 8)
    chords = {}
    for side in ('inner', 'outer'):
        number, line = _expect(lines, f'{side}: a-b ...', number)
        if not line.startswith(f'{side}:'):
            raise GemSyntaxError(f'expected {side!r}', number)
        chords[side] = _pairs(line[len(side) + 1:].split(), number, len(side) + 2)
    d = ChordDiagram.of(points // 2, chords['inner'], chords['outer'])
    try:
        validate_diagram(d)
    except GemError as e:
        raise SemanticError(e, start) from e
    return d


def serialize_chords(d: ChordDiagram) -> str:
    def pairs(chords):
        return ' '.join(f'{a}-{b}' for a, b in chords)
    return f'jordan {d.points}\ninner: {pairs(d.inner)}\nouter: {pairs(d.outer)}\n'


def parse_move(text: str, line: int = 1) -> Move:
    tokens = text.split()
    try:
        kind = MoveKind(tokens[0])
    except (IndexError, ValueError):
        raise GemSyntaxError(f'unknown move {text!r}', line)
    payload = {}
    for token in tokens[1:]:
        key, sep, value = token.partition('=')
        if not sep:
            raise GemSyntaxError(f'expected key=value, got {token!r}', line)
        payload[key] = value
    return Move(kind, payload)


def parse_resolution(text: str, start: int = 1) -> Resolution:
    lines = _lines(text, start)
    number, header = _expect(lines, 'resolution axis=<i>', start)
    m = re.match(r'^resolution axis=([123])$', header)
    if not m:
        raise GemSyntaxError('expected "resolution axis=<i>" with i in 1..3', number)
    resolution = Resolution(int(m.group(1)))
    for number, line in lines:
        if line.startswith('pre '):
            resolution.preprocessing.append(parse_move(line[4:], number))
            continue
        t = TWISTOR_LINE.match(line)
        if not t:
            raise GemSyntaxError(f'expected kind:u-v or a "pre" move, got {line!r}', number)
        try:
            resolution.twistors.append(Twistor(resolution.axis, *map(int, t.groups())))
        except ValueError as e:
            raise GemSyntaxError(str(e), number)
    return resolution


def serialize_resolution(resolution: Resolution) -> str:
    lines = [f'resolution axis={resolution.axis}']
    lines += [tw.label for tw in resolution.twistors]
    lines += [f'pre {move}' for move in resolution.preprocessing]
    return '\n'.join(lines) + '\n'


def parse_trace(text: str, start: int = 1) -> MoveTrace:
    lines = _lines(text, start)
    number, header = _expect(lines, 'trace <hash>', start)
    initial = header[len('trace'):].strip()
    if not HASH.match(initial):
        raise GemSyntaxError(f'bad state hash {initial!r}', number, 7)
    trace = MoveTrace(initial)
    for number, line in lines:
        tokens = line.split()
        if len(tokens) < 4 or tokens[-2] != '->' or not HASH.match(tokens[0]) or not HASH.match(tokens[-1]):
            raise GemSyntaxError('expected "<pre-hash> <Kind> key=value ... -> <post-hash>"', number)
        trace.entries.append(TraceEntry(parse_move(' '.join(tokens[1:-2]), number), tokens[0], tokens[-1]))
    return trace


def serialize_trace(trace: MoveTrace) -> str:
    lines = [f'trace {trace.initial_hash}']
    lines += [f'{e.pre_hash} {e.move} -> {e.post_hash}' for e in trace.entries]
    return '\n'.join(lines) + '\n'


def serialize_sequence(sequence: ThickeningSequence) -> str:
    lines = [f'sequence axis={sequence.axis} steps={len(sequence)} initial={sequence.initial_hash}']
    for step in sequence.steps:
        colors = ','.join(map(str, step.dipole.colors))
        u, v = step.dipole.vertices
        lines.append(f'step {step.state_hash} dipole={colors}:{u}-{v} flip={step.flip_color} tag={step.tag}')
    if sequence.terminal is not None:
        lines.append(f'terminal {state_hash(sequence.terminal)}')
    return '\n'.join(lines) + '\n'
