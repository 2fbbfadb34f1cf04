"""
検証スイートの結果
"""

from dataclasses import dataclass
from typing import Any, Optional
import logging

from ..structs import PeriodicaStruct, to_jsonable


_LOG = logging.getLogger(__name__)


@dataclass(slots=True, frozen=True)
class VerifyEntry(PeriodicaStruct):
    theorem_id:     str
    fixture:        str
    cases_run:      int
    cases_passed:   int
    counterexample: Optional[dict[str, Any]] = None
    "最初に見つかった反例の入力"


@dataclass(slots=True, frozen=True)
class VerifyReport(PeriodicaStruct):
    entries:   tuple[VerifyEntry, ...]
    summary:   str
    "'pass'か'fail'"
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return self.summary == 'pass'

    def to_dict(self, *, timing:bool=False) -> dict[str, Any]: # type: ignore[override]
        obj: dict[str, Any] = {'entries': [e.to_dict() for e in self.entries], 'summary': self.summary}
        if timing:
            obj['wall_time'] = round(self.wall_time, 3)
        return obj


class CaseLog:
    """
    一つのスイートの検査結果をフィクスチャごとに数える。反例は最初の一つだけ残す。
    """

    def __init__(self, theorem_id:str):
        self.theorem_id = theorem_id
        self._counts: dict[str, list[int]] = {}
        self._counterexamples: dict[str, dict[str, Any]] = {}

    def check(self, fixture:str, ok:bool, **inputs) -> bool:
        counts = self._counts.setdefault(fixture, [0, 0])
        counts[0] += 1
        if ok:
            counts[1] += 1
        elif fixture not in self._counterexamples:
            self._counterexamples[fixture] = {k: to_jsonable(v) for k, v in inputs.items()}
            _LOG.warning('%s (%s) で反例が見つかりました: %s', self.theorem_id, fixture, self._counterexamples[fixture])
        return ok

    def entries(self) -> list[VerifyEntry]:
        return [VerifyEntry(self.theorem_id, fixture, run, passed, self._counterexamples.get(fixture))
                for fixture, (run, passed) in sorted(self._counts.items())]


__all__ = ('VerifyEntry', 'VerifyReport', 'CaseLog')
