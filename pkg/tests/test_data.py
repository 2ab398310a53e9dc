import json

import pytest

from data import (DiscrepancyStore, export_dot, normalize_0consecutive, parse_chords, parse_gem, parse_move,
                  parse_resolution, parse_trace, serialize_chords, serialize_gem, serialize_resolution,
                  serialize_sequence, serialize_trace, split_documents)
from gems.errors import GemSyntaxError, MismatchedGray, SemanticError
from gems.graph import color_isomorphic, state_hash
from gems.log import report_discrepancy
from gray import Resolution, Twistor, build_gray_graph
from jordan import ChordDiagram, thickening_sequence
from moves import replay

J4_TEXT = """gem J4
vertices 4
color 0: 1-2 3-4
color 1: 2-3 4-1
color 2: 1-2 3-4
color 3: 2-3 4-1
"""


def test_parse_gem(j4):
    graph = parse_gem(J4_TEXT)
    assert graph == j4
    assert graph.name == 'J4'


def test_serialize_gem_roundtrip(j4, c8):
    assert serialize_gem(j4).splitlines()[:3] == ['gem J4', 'vertices 4', 'color 0: 1-2 3-4']
    for graph in (j4, c8):
        assert parse_gem(serialize_gem(graph)) == graph


def test_comments_and_blank_lines(j4):
    text = '# a comment\n\n' + J4_TEXT.replace('vertices 4', 'vertices 4   # four')
    assert parse_gem(text) == j4


def test_semantic_error_points_at_the_color_line():
    text = J4_TEXT.replace('color 0: 1-2 3-4', 'color 0: 1-2 1-3')
    with pytest.raises(SemanticError) as info:
        parse_gem(text)
    assert info.value.line == 3
    assert info.value.cause.code == 'not_a_matching'


@pytest.mark.parametrize('broken, line', [
    (J4_TEXT.replace('1-2 3-4\ncolor 1', '1-2 3x4\ncolor 1'), 3),
    (J4_TEXT.replace('vertices 4', 'vertices four'), 2),
    (J4_TEXT.replace('color 3', 'color 2'), 6),
    (J4_TEXT.replace('gem J4', 'gemstone'), 1),
])
def test_syntax_errors(broken, line):
    with pytest.raises(GemSyntaxError) as info:
        parse_gem(broken)
    assert info.value.line == line


def test_missing_color_line():
    with pytest.raises(GemSyntaxError):
        parse_gem('\n'.join(J4_TEXT.splitlines()[:-1]))


def test_normalize_0consecutive(j4, c8):
    assert normalize_0consecutive(j4) == j4
    normal = normalize_0consecutive(c8)
    assert normal.edges(0) == [(1, 2), (3, 4), (5, 6), (7, 8)]
    assert color_isomorphic(normal, c8)


def test_chords_text():
    d = ChordDiagram.of(2, [(1, 2), (3, 4)], [(2, 3), (1, 4)])
    text = serialize_chords(d)
    assert text.startswith('jordan 4\n')
    assert parse_chords(text) == d
    with pytest.raises(SemanticError):
        parse_chords('jordan 4\ninner: 1-3 2-4\nouter: 1-2 3-4\n')
    with pytest.raises(GemSyntaxError):
        parse_chords('jordan 5\ninner: 1-2\nouter: 1-2\n')


def test_resolution_text():
    text = 'resolution axis=1\n2:2-8\n'
    resolution = parse_resolution(text)
    assert resolution.axis == 1
    assert resolution.twistors == [Twistor(1, 2, 2, 8)]
    assert serialize_resolution(resolution) == text
    assert serialize_resolution(Resolution(3)) == 'resolution axis=3\n'
    with pytest.raises(GemSyntaxError):
        parse_resolution('resolution axis=4\n')
    with pytest.raises(GemSyntaxError):
        parse_resolution('resolution axis=1\n1:2-8\n')


def test_move_text_parses_back():
    text = 'Thicken colors=0,2 u=1 v=2 flip=1'
    assert str(parse_move(text)) == text
    with pytest.raises(GemSyntaxError):
        parse_move('Teleport u=1')
    with pytest.raises(GemSyntaxError):
        parse_move('Flip color')


def test_trace_text_replays(j4, b2):
    trace = thickening_sequence(j4).as_trace()
    text = serialize_trace(trace)
    assert text.startswith(f'trace {state_hash(j4)}\n')
    parsed = parse_trace(text)
    assert serialize_trace(parsed) == text
    assert replay(j4, parsed) == b2
    with pytest.raises(GemSyntaxError):
        parse_trace('trace nothex\n')


def test_sequence_text(j4, b2):
    lines = serialize_sequence(thickening_sequence(j4)).splitlines()
    assert lines == [
        f'sequence axis=1 steps=1 initial={state_hash(j4)}',
        f'step {state_hash(j4)} dipole=0,2:1-2 flip=1 tag=1',
        f'terminal {state_hash(b2)}',
    ]


def test_split_documents():
    text = '# header comment\n' + J4_TEXT + 'resolution axis=1\n'
    docs = split_documents(text)
    assert [d.kind for d in docs] == ['gem', 'resolution']
    assert [d.start for d in docs] == [2, 8]
    assert parse_gem(docs[0].text, docs[0].start).name == 'J4'
    with pytest.raises(GemSyntaxError):
        split_documents('hello\n' + J4_TEXT)


def test_dot_export(g2, c8):
    dot = export_dot(g2)
    assert dot.startswith('graph "G2" {')
    assert sum(1 for line in dot.splitlines() if '--' in line) == 4

    gray = build_gray_graph(c8, 1)
    highlighted = export_dot(c8, gray, Resolution(1, [Twistor(1, 2, 2, 8)]))
    assert 'g1 -- g0 [style=dashed, color=gray, label="2:2-8", penwidth=3];' in highlighted
    assert highlighted.count('style=dashed') == 3
    assert highlighted.count('penwidth=3') == 1


def test_dot_rejects_a_foreign_gray_graph(c8, j8):
    with pytest.raises(MismatchedGray):
        export_dot(j8, build_gray_graph(c8, 1))


def test_discrepancy_store(tmp_path, j4):
    path = tmp_path / 'discrepancies.json'
    store = DiscrepancyStore(str(path))
    store.register()
    report_discrepancy('no_2_dipole', 'step 0: nothing to thicken', j4)
    report_discrepancy('resolution_rejected', 'tree [] fails')
    store.unregister()
    report_discrepancy('no_2_dipole', 'after unregister')

    assert len(store.records) == 2
    saved = json.loads(path.read_text())
    assert [r['kind'] for r in saved['discrepancies']] == ['no_2_dipole', 'resolution_rejected']

    reloaded = DiscrepancyStore(str(path))
    [record] = reloaded.by_kind('no_2_dipole')
    assert parse_gem(record.gem) == j4
    assert reloaded.by_kind('resolution_rejected')[0].gem is None


def test_store_without_a_file(j4):
    store = DiscrepancyStore()
    store.add('not_j2b', 'kept in memory', j4)
    assert len(store.records) == 1
