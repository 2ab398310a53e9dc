import io
import json

import pytest

from cli import cli
from data import parse_gem, serialize_gem, split_documents
from gems.graph import state_hash


def run(argv, stdin_text=''):
    out, err = io.StringIO(), io.StringIO()
    code = cli(argv, stdin_text=stdin_text, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_check_sphere(g2):
    code, out, _ = run(['check'], serialize_gem(g2))
    assert code == 0
    assert out == 'v=2 t=4 b=6 gem=yes\n'


def test_check_several_gems(g2, k4neg):
    code, out, _ = run(['check', '--json'], serialize_gem(g2) + serialize_gem(k4neg))
    assert code == 2
    rows = [json.loads(line) for line in out.splitlines()]
    assert [row['gem'] for row in rows] == [True, False]
    assert rows[1]['name'] == 'K4NEG'


def test_info(j4):
    code, out, _ = run(['info'], serialize_gem(j4))
    assert code == 0
    assert f'hash {state_hash(j4)}' in out
    assert 'crystallization yes' in out
    assert 'generators axis1=0' in out


def test_twistors_and_gray(c8):
    code, out, _ = run(['twistors'], serialize_gem(c8))
    assert code == 0
    assert out.splitlines() == ['twistor 2:2-8', 'antipole 2:3-8', 'antipole 2:7-8']
    code, out, _ = run(['gray', '--axis', '1'], serialize_gem(c8))
    assert out.splitlines()[0] == 'gray axis=1 nodes=2 edges=3'
    assert 'edge 2:2-8 g1-g0 twistor e=2-3,8-1' in out


def test_resolve_c8(c8, j8):
    code, out, _ = run(['resolve'], serialize_gem(c8))
    assert code == 0
    assert out.endswith('resolution axis=1\n2:2-8\n')
    code, out, _ = run(['twist-all', '--keep-blobs'], out)
    assert code == 0
    assert parse_gem(out) == j8


def test_resolve_reports_the_failure(j4):
    code, out, err = run(['resolve', '--axis', '2'], serialize_gem(j4))
    assert code == 3
    assert out == ''
    assert 'disconnected' in err


def test_j2_construct_and_recognize(j4, c8):
    code, out, _ = run(['j2', 'construct'], 'jordan 4\ninner: 1-2 3-4\nouter: 2-3 1-4\n')
    assert code == 0
    assert parse_gem(out) == j4
    code, out, _ = run(['j2', 'recognize'], serialize_gem(j4))
    assert code == 0
    assert out == 'jordan 4\ninner: 1-2 3-4\nouter: 1-4 2-3\n'
    code, _, err = run(['j2', 'recognize'], serialize_gem(c8))
    assert code == 2
    assert 'not_j2: b23 = 2' in err


def test_input_errors(j4):
    code, _, err = run(['check'], 'gem broken\nvertices 4\ncolor 0: 1-2 3x4\n')
    assert code == 1
    assert 'syntax_error' in err
    code, _, err = run(['twist-all'], serialize_gem(j4))
    assert code == 1
    assert 'no resolution document' in err


def test_property_error(b2):
    code, _, err = run(['gray'], serialize_gem(b2))
    assert code == 2
    assert 'not_a_crystallization' in err


def test_gen_writes_to_a_file(tmp_path):
    path = tmp_path / 'b3.gem'
    code, out, _ = run(['-o', str(path), 'gen', 'bloboid', '--n', '3'])
    assert code == 0
    assert out == ''
    assert parse_gem(path.read_text()).name == 'B3'


def test_gen_random_walk():
    code, out, _ = run(['gen', 'random-walk', '--steps', '12', '--seed', '4'])
    assert code == 0
    code, check, _ = run(['check'], out)
    assert check.endswith('gem=yes\n')


def test_dot_with_gray(c8):
    code, out, _ = run(['dot', '--gray'], serialize_gem(c8))
    assert code == 0
    assert out.count('style=dashed') == 3


@pytest.mark.parametrize('seed', range(20))
def test_pipeline(seed):
    code, gem_text, _ = run(['gen', 'j2', '--n', '10', '--seed', str(seed)])
    assert code == 0
    code, resolved, _ = run(['resolve'], gem_text)
    assert code == 0
    code, twisted, _ = run(['twist-all'], resolved)
    assert code == 0
    code, sequence, _ = run(['sequence'], twisted)
    assert code == 0
    kinds = [d.kind for d in split_documents(sequence)]
    assert kinds == ['sequence', 'trace']
    terminal = sequence.split('terminal ')[1].split()[0]

    code, replayed, _ = run(['replay'], twisted + sequence)
    assert code == 0
    assert state_hash(parse_gem(replayed)) == terminal


def test_bad_arguments_are_input_errors():
    code, out, err = run(['resolve', '--axis', '7'])
    assert code == 1
    assert out == ''
    assert 'usage' in err
    code, _, err = run([])
    assert code == 1
    assert 'usage' in err


def test_unwritable_output_file(tmp_path):
    code, _, err = run(['-o', str(tmp_path / 'missing' / 'b3.gem'), 'gen', 'bloboid', '--n', '3'])
    assert code == 1
    assert 'io_error' in err


def test_resolve_j6_through_an_antipole(j6):
    code, resolved, _ = run(['resolve'], serialize_gem(j6))
    assert code == 0
    assert resolved.endswith('resolution axis=1\n3:6-8\npre DipoleCreate colors=0,2 at=1:1-4,3:1-4\n')
    code, twisted, _ = run(['twist-all'], resolved)
    assert code == 0
    code, _, _ = run(['j2', 'recognize'], twisted)
    assert code == 0


def test_twist_all_trace_replays(c8, j8):
    _, resolved, _ = run(['resolve'], serialize_gem(c8))
    code, out, _ = run(['twist-all', '--trace'], resolved)
    assert code == 0
    docs = split_documents(out)
    assert [d.kind for d in docs] == ['gem', 'trace']
    assert 'TwistViaFlip axis=1 kind=2 u=2 v=8' in docs[1].text
    code, replayed, _ = run(['replay'], serialize_gem(c8) + docs[1].text)
    assert code == 0
    assert parse_gem(replayed) == j8


def test_gen_crystallized_random_walk():
    code, out, _ = run(['gen', 'random-walk', '--steps', '30', '--seed', '2', '--crystallize'])
    assert code == 0
    code, info, _ = run(['info'], out)
    assert 'crystallization yes' in info
