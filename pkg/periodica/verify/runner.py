"""
検証スイートをまとめて走らせる
"""

from concurrent.futures import ThreadPoolExecutor
from random import Random
from typing import Optional
import logging
import time
import zlib

from .._util import PeriodicaError, default_workers, report_errors
from .registry import SUITES, Suite, find_suite
from .report import CaseLog, VerifyEntry, VerifyReport


_LOG = logging.getLogger(__name__)


def suite_ids() -> list[str]:
    return sorted(SUITES)


def select_suites(spec:str) -> list[Suite]:
    "'all'、スイートのラベルか別名、またはそのカンマ区切りの並び。大文字小文字は区別しない"
    if spec.strip().casefold() == 'all':
        return [SUITES[i] for i in suite_ids()]
    selected: dict[str, Suite] = {}
    for name in filter(None, (s.strip() for s in spec.split(','))):
        try:
            found = find_suite(name)
        except KeyError:
            raise ValueError(f'不明なスイートです: {name}') from None
        selected.setdefault(found.theorem_id, found)
    if not selected:
        raise ValueError('スイートが指定されていません')
    return list(selected.values())


@report_errors(_LOG)
def _run_suite(entry:Suite, scope:Optional[int], seed:int) -> list[VerifyEntry]:
    rng = Random(seed + zlib.crc32(entry.theorem_id.encode()))
    log = CaseLog(entry.theorem_id)
    started = time.perf_counter()
    try:
        entry.func(log, entry.default_scope if scope is None else scope, rng)
    except (PeriodicaError, AssertionError) as error:
        _LOG.error('%s の実行中に例外が発生しました: %s', entry.theorem_id, error)
        log.check('error', False, error=type(error).__name__, message=str(error))
    entries = log.entries()
    _LOG.info('%s: %d件 (%.2f秒)', entry.theorem_id, sum(e.cases_run for e in entries), time.perf_counter() - started)
    return entries


def run_verify(suite:str='all', *, scope:Optional[int]=None, seed:int=0, workers:Optional[int]=None) -> VerifyReport:
    """
    スイートを並列に走らせ、結果をid順に並べる。
    各スイートの乱数はseedとidから決まるので、並列度を変えても結果は変わらない。
    """
    selected = select_suites(suite)
    started = time.perf_counter()
    with ThreadPoolExecutor(max_workers=workers or default_workers(), thread_name_prefix='Verify') as executor:
        results = list(executor.map(lambda s: _run_suite(s, scope, seed), selected))
    entries = tuple(sorted((e for r in results for e in r), key=lambda e: (e.theorem_id, e.fixture)))
    failed = [e for e in entries if e.cases_passed != e.cases_run]
    for e in failed:
        _LOG.warning('検証に失敗しました: %s (%s) %d/%d', e.theorem_id, e.fixture, e.cases_passed, e.cases_run)
    return VerifyReport(entries, 'fail' if failed else 'pass', time.perf_counter() - started)


__all__ = ('suite_ids', 'select_suites', 'run_verify')
