"""
検証スイートの登録と、スイートが共通で使うフィクスチャ
"""

from collections.abc import Callable, Iterator
from dataclasses import dataclass
from random import Random
import logging

from ..builders import by_name, builder_groups
from ..magma import FiniteMagma, is_group
from ..periodic import all_subsets
from ..subset import Subset
from .report import CaseLog


_LOG = logging.getLogger(__name__)

SuiteFunc = Callable[[CaseLog, int, Random], None]

_FIXTURE_NAMES = (
    'Z2xZ2', 'S3', 'D4', 'Z2xZ4', 'Z3xZ3', 'M2', 'L2', 'R2', 'L3', 'R3', 'L2^1', 'R2^1', 'zmul4', 'zmul6', 'zmul8',
)


@dataclass(slots=True, frozen=True)
class Suite:
    theorem_id:    str
    "報告に使うラベル (例: 'Eq-2.6')"
    alias:         str
    "性質を表す短い名前 (例: 'kernel-closed-form')"
    description:   str
    default_scope: int
    func:          SuiteFunc


SUITES: dict[str, Suite] = {}
_KEYS: dict[str, str] = {}

def suite(theorem_id:str, alias:str, description:str, default_scope:int=6) -> Callable[[SuiteFunc], SuiteFunc]:
    "検証スイートを登録する。ラベルと別名はどちらも大文字小文字を区別せずに引ける"
    def _decorator(func:SuiteFunc) -> SuiteFunc:
        keys = (theorem_id.casefold(), alias.casefold())
        if any(key in _KEYS for key in keys):
            raise ValueError(f'スイートが重複しています: {theorem_id} ({alias})')
        SUITES[theorem_id] = Suite(theorem_id, alias, description, default_scope, func)
        for key in keys:
            _KEYS[key] = theorem_id
        return func
    return _decorator

def find_suite(name:str) -> Suite:
    "ラベルか別名からスイートを引く。見つからなければKeyError"
    return SUITES[_KEYS[name.strip().casefold()]]


def fixtures(scope:int) -> list[FiniteMagma]:
    "台集合の大きさが`scope`以下の半群の例"
    magmas = [by_name(f'Z{n}') for n in range(1, scope + 1)]
    for name in _FIXTURE_NAMES:
        X = by_name(name)
        if X.n <= scope:
            magmas.append(X)
    return magmas

def group_fixtures(scope:int) -> list[FiniteMagma]:
    return [G for G in builder_groups(scope) if is_group(G)]

def monoid_fixtures(scope:int) -> list[FiniteMagma]:
    "群でない例だけ"
    return [X for X in fixtures(scope) if not is_group(X)]


def random_subset(rng:Random, n:int) -> Subset:
    return Subset(n, rng.getrandbits(n))

def sample_subsets(rng:Random, n:int, count:int) -> Iterator[Subset]:
    "部分集合が`count`個以下なら全て、そうでなければ`count`個を無作為に"
    if 1 << n <= count:
        yield from all_subsets(n, force=True)
    else:
        for _ in range(count):
            yield random_subset(rng, n)

def subsets_within(A:Subset) -> Iterator[Subset]:
    "Aの部分集合を全て"
    members = list(A)
    for mask in range(1 << len(members)):
        yield Subset.of(A.n, (m for i, m in enumerate(members) if mask >> i & 1))


__all__ = (
    'Suite', 'SUITES', 'suite', 'find_suite', 'fixtures', 'group_fixtures', 'monoid_fixtures', 'random_subset',
    'sample_subsets', 'subsets_within',
)
