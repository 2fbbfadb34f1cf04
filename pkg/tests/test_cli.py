import json

import pytest

from periodica.cli import build_parser, main


def _run(capsys, *argv:str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_kernel(capsys):
    code, out, _ = _run(capsys, 'kernel', '--table', 'z6.json', '--A', '0x3F', '--B', '[1]', '--json')
    assert code == 0
    assert out == '{"kernel":"0x3F"}\n'

def test_kernel_trace(capsys):
    code, out, _ = _run(capsys, '--json', 'kernel', '-t', 'Z6', '--A', '0x3F', '--B', '[1]', '--trace')
    assert code == 0
    assert json.loads(out) == {'kernel': '0x3F', 'iterations': 0}

def test_text_output(capsys):
    code, out, _ = _run(capsys, 'start', '--table', 'Z6', '--A', '[0,1]', '--B', '[1]')
    assert code == 0
    assert out == 'start: 0x01\n'

def test_labels_in_literals(capsys):
    code, out, _ = _run(capsys, 'subset', 'product', '--table', 'm2.json', '--A', '["s"]', '--B', '["c1"]', '--json')
    assert code == 0
    assert json.loads(out) == {'result': '0x8'}


def test_real_coc(capsys):
    code, out, _ = _run(capsys, 'real', 'coc', '--set', 'ray5_open.json', '--json')
    assert code == 0
    assert out == '{"kind":"OpenRay","lo":"5"}\n'

def test_real_member(capsys):
    code, out, _ = _run(capsys, 'real', 'member', '--set', 'integers_and_sqrt2.json', '--x', 'sqrt(2) + 3', '--json')
    assert code == 0 and json.loads(out) == {'member': True}

def test_real_rescale(capsys):
    code, out, _ = _run(capsys, 'real', 'rescale', '--set', 'half_naturals.json', '--b', '2', '--json')
    assert code == 0
    assert json.loads(out)['E'] == [{'point': {'q': str(q)}} for q in ('0', '1/4', '1/2', '3/4')]


def test_solve_job(capsys):
    code, out, _ = _run(capsys, 'solve', 'job', '--table', 'Z6', '--job', 'z6_jobs.json', '--json')
    assert code == 0
    results = json.loads(out)['results']
    assert [r['equation'] for r in results] == ['eq', 'upper', 'sandwich']
    assert results[0]['result'] == {'solutions': ['0x3F']}
    assert results[1]['result']['count'] == 8

def test_topo_dot(capsys, tmp_path):
    code, out, _ = _run(capsys, 'topo', 'dot', '--table', 'Z6', '--B', '[2]')
    assert code == 0 and out.startswith('digraph ') and out.count('->') == 6
    path = tmp_path / 'z6.dot'
    code, out, _ = _run(capsys, 'topo', 'dot', '--table', 'Z6', '--B', '[2]', '-o', str(path), '--json')
    assert code == 0 and json.loads(out) == {'written': str(path)}
    assert path.read_text(encoding='UTF-8').count('->') == 6

def test_magma_gen(capsys, tmp_path):
    path = tmp_path / 'm2.json'
    code, _, _ = _run(capsys, 'magma', 'gen', '--builder', 'M2', '--out', str(path))
    assert code == 0
    code, out, _ = _run(capsys, 'magma', 'check', '--table', str(path), '--json')
    assert code == 0
    obj = json.loads(out)
    assert obj['n'] == 4 and obj['identity'] == 'e' and obj['units'] == '0x3' and not obj['group']


def test_verify(capsys):
    code, out, _ = _run(capsys, 'verify', '--suite', 'factor-examples', '--json')
    assert code == 0
    obj = json.loads(out)
    assert obj['summary'] == 'pass' and 'wall_time' not in obj
    assert {e['theorem_id'] for e in obj['entries']} == {'Example-1.5'}
    code, out, _ = _run(capsys, 'verify', '--list', '--json')
    suites = json.loads(out)['suites']
    assert {'id': 'Eq-2.6', 'alias': 'kernel-closed-form',
            'description': '左部分群では周期核 = 上周期核 = Σ∩A = Σ = (BA^c)^c'} in suites

def test_verify_by_label(capsys):
    code, out, _ = _run(capsys, 'verify', '--suite', 'eq-2.6', '--scope', '4', '--json')
    assert code == 0
    obj = json.loads(out)
    assert obj['summary'] == 'pass'
    assert obj['entries'] and {e['theorem_id'] for e in obj['entries']} == {'Eq-2.6'}


@pytest.mark.parametrize('argv, flag', [
    (['kernel', '--table', 'Z6', '--A', '0x40', '--B', '[1]'],   '--A'),
    (['kernel', '--table', 'nosuch', '--A', '[0]', '--B', '[1]'], '--table'),
    (['real', 'rescale', '--set', 'ray5_open.json', '--b', 'x'], '--b'),
    (['verify', '--suite', 'no-such-suite'],                     '--suite'),
])
def test_usage_errors(capsys, argv, flag):
    code, out, err = _run(capsys, *argv)
    assert code == 2 and out == ''
    assert err.startswith(f'periodica: error: {flag}: ')

def test_argparse_errors(capsys):
    code, _, err = _run(capsys, 'kernel', '--table', 'Z6', '--A', '[0]')
    assert code == 2 and '--B' in err

def test_domain_error(capsys):
    code, out, err = _run(capsys, 'solve', 'eq', '--table', 'Z24', '--B', '[0]', '--A', '0xFFFFFF', '--json')
    assert code == 1 and out == ''
    obj = json.loads(err)
    assert obj['error'] == 'SearchSpaceTooLarge' and obj['size'] == 24 and obj['limit'] == 22

def test_missing_file(capsys):
    code, _, err = _run(capsys, 'real', 'pk', '--set', 'no_such_set.json')
    assert code == 1 and json.loads(err)['error'] == 'FileNotFoundError'


def test_every_command_is_registered():
    parser = build_parser()
    ns = parser.parse_args(['solve', 'ring', '--n', '6'])
    assert ns.command.path == ('solve', 'ring') and ns.seed == 0 and not ns.json
    ns = parser.parse_args(['solve', 'ring', '--n', '6', '--seed', '3', '--json'])
    assert ns.seed == 3 and ns.json
