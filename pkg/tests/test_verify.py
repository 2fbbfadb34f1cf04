from random import Random

import pytest

from periodica import NotFound
from periodica.verify import SUITES, CaseLog, Suite, run_verify, select_suites, suite, suite_ids
from periodica.verify import registry


_QUICK = 'Sec-2.1-chain,Sec-2.2-start,Sec-1'


def test_select_suites():
    assert [s.theorem_id for s in select_suites('all')] == suite_ids()
    assert [s.theorem_id for s in select_suites('Sec-2.2-start, Sec-2.1-chain')] == ['Sec-2.2-start', 'Sec-2.1-chain']
    with pytest.raises(ValueError):
        select_suites('Sec-2.1-chain,no-such-suite')
    with pytest.raises(ValueError):
        select_suites(' , ')

@pytest.mark.parametrize('name, theorem_id', [
    ('Eq-2.6',             'Eq-2.6'),
    ('eq-2.6',             'Eq-2.6'),
    ('kernel-closed-form', 'Eq-2.6'),
    ('cor-2.3',            'Cor-2.3'),
    ('CONJECTURE-1.3',     'Conjecture-1.3'),
    ('thm-2.23a',          'Thm-2.23a'),
    ('lemma-2.2',          'Lemma-2.2'),
])
def test_select_by_label_or_alias(name, theorem_id):
    assert [s.theorem_id for s in select_suites(name)] == [theorem_id]

def test_select_deduplicates():
    assert [s.theorem_id for s in select_suites('eq-2.6,kernel-closed-form,Eq-2.6')] == ['Eq-2.6']

def test_registry():
    assert {'Example-1.5', 'Project-IV', 'Thm-2.23a', 'Example-2.15'} <= set(SUITES)
    assert SUITES['Eq-2.6'].alias == 'kernel-closed-form'
    assert len({s.alias for s in SUITES.values()}) == len(SUITES)
    with pytest.raises(ValueError):
        suite('Sec-2.1-chain', 'another-name', '重複')(lambda log, scope, rng: None)
    with pytest.raises(ValueError):
        suite('Thm-9.9', 'KERNEL-CHAIN', '別名の重複')(lambda log, scope, rng: None)
    assert 'Thm-9.9' not in SUITES


def test_case_log():
    log = CaseLog('example')
    assert log.check('Z2', True, A=1)
    assert not log.check('Z2', False, A=2)
    log.check('Z2', False, A=3)
    log.check('M2', True)
    first, second = log.entries()
    assert (first.fixture, first.cases_run, first.cases_passed, first.counterexample) == ('M2', 1, 1, None)
    assert (second.fixture, second.cases_run, second.cases_passed, second.counterexample) == ('Z2', 3, 1, {'A': 2})


def test_run_quick_suites():
    report = run_verify(_QUICK, scope=4, workers=2)
    assert report.passed and report.summary == 'pass'
    assert {e.theorem_id for e in report.entries} == set(_QUICK.split(','))
    keys = [(e.theorem_id, e.fixture) for e in report.entries]
    assert keys == sorted(keys)
    assert all(e.cases_run > 0 and e.cases_passed == e.cases_run for e in report.entries)

def test_run_is_deterministic():
    first = run_verify(_QUICK, scope=4, seed=7, workers=1).to_dict()
    second = run_verify(_QUICK, scope=4, seed=7, workers=3).to_dict()
    assert first == second
    assert 'wall_time' not in first

def test_timing():
    obj = run_verify('Example-1.5').to_dict(timing=True)
    assert obj['summary'] == 'pass'
    assert obj['wall_time'] >= 0

@pytest.mark.parametrize('suite_id', ['Example-1.5', 'Thm-2.23a', 'Thm-4.14', 'Project-IV-ring'])
def test_example_suites(suite_id):
    assert run_verify(suite_id, workers=1).passed


def _failing(log:CaseLog, scope:int, rng:Random) -> None:
    for x in range(scope):
        log.check('numbers', x < 2, x=x)

def _raising(log:CaseLog, scope:int, rng:Random) -> None:
    raise NotFound('見つかりません')

def test_failures_are_reported(monkeypatch):
    for theorem_id, alias, description, scope, func in (('Fails-1', 'always-fails', '失敗する', 4, _failing),
                                                        ('Raises-1', 'always-raises', '例外を出す', 1, _raising)):
        monkeypatch.setitem(SUITES, theorem_id, Suite(theorem_id, alias, description, scope, func))
        monkeypatch.setitem(registry._KEYS, theorem_id.casefold(), theorem_id)
        monkeypatch.setitem(registry._KEYS, alias, theorem_id)
    report = run_verify('always-fails,raises-1', workers=1)
    assert not report.passed and report.summary == 'fail'
    failed, raised = report.entries
    assert (raised.fixture, raised.cases_run, raised.cases_passed) == ('error', 1, 0)
    assert raised.counterexample == {'error': 'NotFound', 'message': '見つかりません'}
    assert (failed.cases_run, failed.cases_passed, failed.counterexample) == (4, 2, {'x': 2})
