"""
サブコマンドの実装。各コマンドはJSONに書き出せる辞書を返す。
"""

from argparse import ArgumentParser, Namespace
from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional
import json
import logging
import os

from ..builders import by_name
from ..magma import (
    PERIODICA_ROOT, FiniteMagma, identity, idempotents, is_associative, is_group,
    left_identities, left_subgroups, right_transversal, units,
)
from ..periodic import (
    classify, decompose_three_parts, periodic_kernel_trace, start, summand, summand_closed_form,
    upper_periodic_kernel_trace, well_started_report,
)
from ..realline import (
    ExactReal, UnitPeriodicRealSet, classify_real, coc, concentration_check, construct_mixed, delta,
    finite_cell_impossibility, is_subgroup, membership, pf, pk, projections, rescale, semigroup_check, sigma, st,
)
from ..representation import (
    bi_projection_detail, enumerate_positive_partitions, generate_upper_periodic, is_positive_subsemigroup,
    is_positive_subset, periodic_representation, question_two_search, representation_report,
)
from ..solver import ring_ideal_demo, solve_equation, solve_sandwich, solve_split, solve_upper, solve_upper_inside
from ..structs import to_jsonable
from ..subset import Subset, parse_subset
from ..subset_algebra import (
    direct_witnesses, is_anti_left_transference, is_direct, search_factorization, symmetry_kind,
)
from ..topology import (
    TopologyKind, build_topology, count_opens, is_lower_open, is_open, is_topological_group, is_topological_semigroup,
    left_ideals, to_dot, write_dot,
)
from ..verify import run_verify, select_suites
from .._util import NotLeftIdentity, default_workers


_LOG = logging.getLogger(__name__)


class UsageError(Exception):
    "コマンドラインの引数が読めない。`flag`に原因の引数が入る"

    def __init__(self, flag:str, message:str):
        super().__init__(f'{flag}: {message}')
        self.flag = flag


@dataclass(slots=True)
class Outcome:
    "コマンドの結果。`raw`があればテキスト出力ではそのまま書き出す"
    payload: Any
    code:    int = 0
    raw:     Optional[str] = None


class Invocation:
    """
    解析済みの引数から、マグマ・部分集合・実数集合を読み込む窓口。
    """

    def __init__(self, ns:Namespace):
        self.ns = ns
        self._magma: Optional[FiniteMagma] = None

    def option(self, name:str, default=None):
        return getattr(self.ns, name, default)

    @property
    def magma(self) -> FiniteMagma:
        if self._magma is None:
            self._magma = load_magma(self.ns.table)
        return self._magma

    def subset(self, name:str, flag:Optional[str]=None) -> Subset:
        X = self.magma
        text = self.option(name)
        if text is None:
            return X.empty()
        try:
            return parse_subset(str(text), X.n, X.labels)
        except ValueError as error:
            raise UsageError(flag or f'--{name}', str(error)) from error

    def optional_subset(self, name:str) -> Optional[Subset]:
        return None if self.option(name) is None else self.subset(name)

    def element(self, name:str) -> Optional[int]:
        text = self.option(name)
        if text is None:
            return None
        X = self.magma
        if text in X.labels:
            return X.labels.index(text)
        try:
            return X.index(int(text))
        except ValueError as error:
            raise UsageError(f'--{name}', f'不明な元です: {text}') from error

    def real(self, name:str) -> ExactReal:
        try:
            return ExactReal.parse(str(self.option(name)))
        except ValueError as error:
            raise UsageError(f'--{name}', str(error)) from error

    def real_set(self, name:str='set') -> UnitPeriodicRealSet:
        return UnitPeriodicRealSet.from_file(self.option(name))


def load_magma(spec:str) -> FiniteMagma:
    """
    Cayley表のファイル、同梱のファイル名、または`Z6`や`M2`のような組み立て名からマグマを得る。
    """
    if os.path.exists(spec) or os.path.exists(os.path.join(PERIODICA_ROOT, 'resources', spec)):
        return FiniteMagma.from_file(spec)
    try:
        return by_name(spec)
    except ValueError as error:
        raise UsageError('--table', f'ファイルも組み立て名も見つかりません: {spec}') from error


# ===== 登録 =====

Handler = Callable[[Invocation], Any]

@dataclass(slots=True, frozen=True)
class Command:
    path:    tuple[str, ...]
    help:    str
    options: tuple[str, ...]
    handler: Handler = field(repr=False)


COMMANDS: dict[tuple[str, ...], Command] = {}

def command(path:str, help:str, *options:str) -> Callable[[Handler], Handler]:
    def _decorator(handler:Handler) -> Handler:
        key = tuple(path.split())
        COMMANDS[key] = Command(key, help, options, handler)
        return handler
    return _decorator


_SUBSET_HELP = '[0,2,4] のような添え字(ラベル)のリスト、または 0x15 のようなビット列'

OPTIONS: dict[str, tuple[tuple[str, ...], dict[str, Any]]] = {
    'table':       (('--table', '-t'),  {'required': True, 'metavar': 'TABLE', 'help': 'Cayley表のJSONファイル、同梱のファイル名、またはZ6のような組み立て名'}),
    'A':           (('--A',),           {'required': True, 'metavar': 'SUBSET', 'help': _SUBSET_HELP}),
    'B':           (('--B',),           {'required': True, 'metavar': 'SUBSET', 'help': _SUBSET_HELP}),
    'BB':          (('--BB',),          {'required': True, 'metavar': 'SUBSET', 'help': '𝔹 (左部分群など)'}),
    'D':           (('--D',),           {'required': True, 'metavar': 'SUBSET'}),
    'E':           (('--E',),           {'required': True, 'metavar': 'SUBSET'}),
    'opt_B':       (('--B',),           {'dest': 'B', 'metavar': 'SUBSET', 'help': '省略すると空集合'}),
    'l':           (('--l',),           {'metavar': 'ELEMENT', 'help': '左単位元。省略すると最小の左単位元'}),
    'x':           (('--x',),           {'required': True, 'metavar': 'VALUE'}),
    'transversal': (('--transversal',), {'metavar': 'SUBSET', 'help': '右横断集合𝓓'}),
    'size_a':      (('--a',),           {'dest': 'size_a', 'type': int, 'required': True, 'help': '|A|'}),
    'size_b':      (('--b',),           {'dest': 'size_b', 'type': int, 'required': True, 'help': '|B|'}),
    'scale':       (('--b',),           {'dest': 'scale', 'required': True, 'metavar': 'RATIONAL', 'help': '伸縮の係数b'}),
    'set':         (('--set',),         {'required': True, 'metavar': 'FILE', 'help': '実数集合のJSONファイルまたは同梱のファイル名'}),
    'other':       (('--other',),       {'required': True, 'metavar': 'FILE'}),
    'n':           (('--n',),           {'type': int, 'required': True}),
    'kind':        (('--kind',),        {'choices': ('upper', 'periodic'), 'default': 'upper'}),
    'out':         (('--out', '-o'),    {'metavar': 'PATH', 'help': '結果を書き出すファイル'}),
    'builder':     (('--builder',),     {'required': True, 'metavar': 'NAME', 'help': 'Z6, M2, S3, L2^1, Z2xZ4 など'}),
    'limit':       (('--limit',),       {'type': int, 'default': 6, 'help': '台集合の大きさの上限'}),
    'closed_form': (('--closed-form',), {'action': 'store_true', 'help': '(BA^c)^c も出力します'}),
    'trace':       (('--trace',),       {'action': 'store_true', 'help': '不動点までの反復回数も出力します'}),
    'suite':       (('--suite',),       {'default': 'all', 'help': "'all'、スイートのid、またはカンマ区切りのid"}),
    'scope':       (('--scope',),       {'type': int, 'help': '台集合の大きさの上限。省略するとスイートごとの既定値'}),
    'list':        (('--list',),        {'action': 'store_true', 'help': 'スイートのidを一覧します'}),
    'job':         (('--job',),         {'required': True, 'metavar': 'FILE', 'help': '方程式の一覧のJSONファイル'}),
}


def _write(path:str, text:str, what:str) -> None:
    with open(path, 'w', encoding='UTF-8') as f:
        f.write(text)
    _LOG.info(f'{path} に{what}を出力しました')


# ===== magma =====

@command('magma check', 'マグマの構造を調べます', 'table')
def _magma_check(inv:Invocation):
    X = inv.magma
    e = identity(X)
    associative = is_associative(X)
    return {
        'name':            X.name,
        'n':               X.n,
        'associative':     associative,
        'identity':        None if e is None else X.label(e),
        'left_identities': left_identities(X),
        'idempotents':     idempotents(X),
        'group':           is_group(X),
        'units':           units(X),
        'left_subgroups':  left_subgroups(X) if associative else [],
    }

@command('magma gen', '組み立て名からCayley表のJSONを作ります', 'builder', 'out')
def _magma_gen(inv:Invocation):
    try:
        X = by_name(inv.option('builder'))
    except ValueError as error:
        raise UsageError('--builder', str(error)) from error
    obj = X.to_json()
    out = inv.option('out')
    if out:
        _write(out, json.dumps(obj, ensure_ascii=False) + '\n', 'Cayley表')
        return {'written': out, 'n': X.n}
    return obj


# ===== subset =====

@command('subset product', 'AB', 'table', 'A', 'B')
def _subset_product(inv:Invocation):
    X = inv.magma
    return {'result': X.product(inv.subset('A'), inv.subset('B'))}

@command('subset direct', '|AB| = |A||B| か', 'table', 'A', 'B')
def _subset_direct(inv:Invocation):
    X = inv.magma
    A, B = inv.subset('A'), inv.subset('B')
    witnesses = {X.label(x): [[X.label(a), X.label(b)] for a, b in pairs]
                 for x, pairs in direct_witnesses(X, A, B).items()}
    return {'result': is_direct(X, A, B), 'witnesses': witnesses}

@command('subset anti-transfer', 'A ∩ BA = ∅ か', 'table', 'A', 'B')
def _subset_anti_transfer(inv:Invocation):
    return {'result': is_anti_left_transference(inv.magma, inv.subset('A'), inv.subset('B'))}

@command('subset symmetry', 'B と B⁻¹ の関係', 'table', 'B', 'l')
def _subset_symmetry(inv:Invocation):
    X = inv.magma
    l = inv.element('l')
    if l is None:
        l = left_identities(X).min()
        if l is None:
            raise NotLeftIdentity(f'{X!r}には左単位元がありません')
    return {'result': symmetry_kind(X, inv.subset('B'), l)}

@command('subset factorize', '群を AB = G と因数分解します', 'table', 'size_a', 'size_b')
def _subset_factorize(inv:Invocation):
    workers = inv.option('workers') or default_workers()
    A, B = search_factorization(inv.magma, inv.option('size_a'), inv.option('size_b'), workers=workers)
    return {'A': A, 'B': B}


# ===== periodic_ops =====

@command('kernel', '周期核 C_B(A)', 'table', 'A', 'B', 'trace')
def _kernel(inv:Invocation):
    trace = periodic_kernel_trace(inv.magma, inv.subset('A'), inv.subset('B'))
    return {'kernel': trace.kernel, 'iterations': trace.iterations} if inv.option('trace') else {'kernel': trace.kernel}

@command('upk', '上周期核', 'table', 'A', 'B', 'trace')
def _upk(inv:Invocation):
    trace = upper_periodic_kernel_trace(inv.magma, inv.subset('A'), inv.subset('B'))
    result: dict[str, Any] = {'upper_kernel': trace.kernel}
    if inv.option('trace'):
        result['iterations'] = trace.iterations
    return result

@command('start', '始集合 A ∖ BA', 'table', 'A', 'B')
def _start(inv:Invocation):
    return {'start': start(inv.magma, inv.subset('A'), inv.subset('B'))}

@command('summand', '和因子集合 Σ_{A|B}', 'table', 'A', 'B', 'closed_form')
def _summand(inv:Invocation):
    X, A, B = inv.magma, inv.subset('A'), inv.subset('B')
    result: dict[str, Any] = {'summand': summand(X, A, B)}
    if inv.option('closed_form'):
        result['closed_form'] = summand_closed_form(X, A, B)
    return result

@command('classify', '周期的・周期自由・混合の分類', 'table', 'A', 'B')
def _classify(inv:Invocation):
    return classify(inv.magma, inv.subset('A'), inv.subset('B'))

@command('wellstarted', 'well startedかどうか', 'table', 'A', 'BB', 'B')
def _wellstarted(inv:Invocation):
    report = well_started_report(inv.magma, inv.subset('A'), inv.subset('BB'), inv.subset('B'))
    return {'well_started': report.kernel_based, **report.to_dict()}

@command('decompose', 'A = C ∪̇ BF ∪̇ E', 'table', 'A', 'BB', 'B', 'l')
def _decompose(inv:Invocation):
    return decompose_three_parts(inv.magma, inv.subset('A'), inv.subset('BB'), inv.subset('B'), inv.element('l'))


# ===== representation =====

@command('represent report', '直和表現 𝔹D ∪̇ B¹E の各性質', 'table', 'A', 'BB', 'B', 'transversal')
def _represent_report(inv:Invocation):
    return representation_report(inv.magma, inv.subset('A'), inv.subset('BB'), inv.subset('B'),
                                 inv.optional_subset('transversal'))

@command('represent periodic', '左𝓑周期的な集合を 𝓑·D と表します', 'table', 'A', 'BB')
def _represent_periodic(inv:Invocation):
    ctx = right_transversal(inv.magma, inv.subset('BB'))
    return {'D': periodic_representation(ctx, inv.subset('A')), 'transversal': ctx.transversal}

@command('represent generate', '𝔹D ∪ ⟨B⟩¹E', 'table', 'BB', 'B', 'D', 'E')
def _represent_generate(inv:Invocation):
    return {'A': generate_upper_periodic(inv.magma, inv.subset('BB'), inv.subset('B'), inv.subset('D'),
                                         inv.subset('E'))}

@command('represent partitions', '正負分割を全て列挙します', 'table')
def _represent_partitions(inv:Invocation):
    partitions = list(enumerate_positive_partitions(inv.magma))
    return {'count': len(partitions), 'partitions': partitions}

@command('represent positive', '正部分集合かどうか', 'table', 'B')
def _represent_positive(inv:Invocation):
    G, B = inv.magma, inv.subset('B')
    return {'positive': is_positive_subset(G, B), 'positive_subsemigroup': is_positive_subsemigroup(G, B)}

@command('represent project', 'x ∈ A を生成元と係数に分けます', 'table', 'A', 'BB', 'D', 'E', 'x', 'opt_B')
def _represent_project(inv:Invocation):
    X = inv.magma
    ctx = right_transversal(X, inv.subset('BB'))
    x = inv.element('x')
    assert x is not None
    detail = bi_projection_detail(ctx, inv.subset('A'), inv.subset('D'), inv.subset('E'), x, inv.subset('B'))
    return {'part': detail.part, 'generator': X.label(detail.generator), 'factor': X.label(detail.factor)}

@command('represent question2', 'well startedになるかを小さな例で総当たりします', 'table', 'limit')
def _represent_question2(inv:Invocation):
    return question_two_search(inv.magma, limit=inv.option('limit'), force=inv.option('force'))


# ===== solver =====

@command('solve upper', 'BY ⊆ A', 'table', 'B', 'A')
def _solve_upper(inv:Invocation):
    return solve_upper(inv.magma, inv.subset('B'), inv.subset('A'))

@command('solve inside', 'Y ⊆ A かつ BY ⊆ A', 'table', 'B', 'A')
def _solve_inside(inv:Invocation):
    return solve_upper_inside(inv.magma, inv.subset('B'), inv.subset('A'))

@command('solve sandwich', 'BY ⊆ Y ⊆ A', 'table', 'B', 'A')
def _solve_sandwich(inv:Invocation):
    return solve_sandwich(inv.magma, inv.subset('B'), inv.subset('A'))

@command('solve eq', 'BY = A', 'table', 'B', 'A')
def _solve_eq(inv:Invocation):
    return {'solutions': solve_equation(inv.magma, inv.subset('B'), inv.subset('A'))}

@command('solve split', '(𝔹D ∪ BY) ∪̇ Y = A', 'table', 'BB', 'B', 'D', 'A')
def _solve_split(inv:Invocation):
    return solve_split(inv.magma, inv.subset('BB'), inv.subset('B'), inv.subset('D'), inv.subset('A'))

@command('solve ring', 'ℤ_nのイデアルを方程式として解きます', 'n')
def _solve_ring(inv:Invocation):
    return ring_ideal_demo(inv.option('n'), force=inv.option('force'))

@command('solve job', 'JSONファイルに並べた方程式をまとめて解きます', 'table', 'job')
def _solve_job(inv:Invocation):
    """
    ファイルは [{"equation": "eq", "B": "[1]", "A": "0x3F"}, ...] のような配列。
    """
    path = inv.option('job')
    if not os.path.exists(path):
        path = os.path.join(PERIODICA_ROOT, 'resources', path)
    with open(path, encoding='UTF-8') as f:
        try:
            jobs = json.load(f)
        except json.JSONDecodeError as error:
            raise UsageError('--job', f'JSONとして読み込めません: {path}') from error
    if not isinstance(jobs, list):
        raise UsageError('--job', '方程式の配列を与えてください')
    results = []
    for i, job in enumerate(jobs):
        name = job.get('equation') if isinstance(job, dict) else None
        target = COMMANDS.get(('solve', str(name)))
        if target is None or name in ('job', 'ring'):
            raise UsageError('--job', f'{i}番目の方程式の種類が不明です: {name!r}')
        sub = Invocation(Namespace(**{**vars(inv.ns), **{k: str(v) for k, v in job.items() if k != 'equation'}}))
        sub._magma = inv.magma
        results.append({'equation': name, 'result': target.handler(sub)})
    return {'results': results}


# ===== topology =====

def _topology(inv:Invocation):
    kind = TopologyKind.PERIODIC if inv.option('kind') == 'periodic' else TopologyKind.UPPER_PERIODIC
    return build_topology(inv.magma, inv.subset('B'), kind)

@command('topo build', '最小近傍を一覧します', 'table', 'B', 'kind')
def _topo_build(inv:Invocation):
    T = _topology(inv)
    return {'kind': T.kind, 'neighborhoods': {inv.magma.label(y): N for y, N in enumerate(T.neighborhoods())}}

@command('topo open', 'Aが開集合かどうか', 'table', 'B', 'A', 'kind')
def _topo_open(inv:Invocation):
    T = _topology(inv)
    A = inv.subset('A')
    return {'open': is_open(T, A), 'lower_open': is_lower_open(T, A)}

@command('topo count', '開集合の個数', 'table', 'B', 'kind')
def _topo_count(inv:Invocation):
    return {'opens': count_opens(_topology(inv))}

@command('topo semigroup', '位相半群かどうか', 'table', 'B')
def _topo_semigroup(inv:Invocation):
    return is_topological_semigroup(inv.magma, inv.subset('B'))

@command('topo group', '位相群かどうか', 'table', 'B')
def _topo_group(inv:Invocation):
    return is_topological_group(inv.magma, inv.subset('B'))

@command('topo ideals', '左イデアルを全て列挙します', 'table')
def _topo_ideals(inv:Invocation):
    return {'left_ideals': left_ideals(inv.magma, force=inv.option('force'))}

@command('topo dot', '前順序をDOT形式で書き出します', 'table', 'B', 'kind', 'out')
def _topo_dot(inv:Invocation):
    T = _topology(inv)
    out = inv.option('out')
    if out:
        write_dot(T, out)
        return {'written': out}
    text = to_dot(T)
    return Outcome({'dot': text}, raw=text)


# ===== realline =====

@command('real member', 'x ∈ A かどうか', 'set', 'x')
def _real_member(inv:Invocation):
    return {'member': membership(inv.real_set(), inv.real('x'))}

@command('real pk', '周期核', 'set')
def _real_pk(inv:Invocation):
    return pk(inv.real_set()).to_json()

@command('real pf', '周期自由部分', 'set')
def _real_pf(inv:Invocation):
    return pf(inv.real_set()).to_json()

@command('real st', '始集合', 'set')
def _real_st(inv:Invocation):
    return {'start': [c.to_json() for c in st(inv.real_set())]}

@command('real delta', 'δ = sup St(A)', 'set')
def _real_delta(inv:Invocation):
    return delta(inv.real_set())

@command('real coc', '集中数の全体', 'set')
def _real_coc(inv:Invocation):
    return coc(inv.real_set())

@command('real sigma', 'σ = sup(Σ ∖ A)', 'set')
def _real_sigma(inv:Invocation):
    return sigma(inv.real_set())

@command('real classify', '第一類・第二類・第三類の分類', 'set')
def _real_classify(inv:Invocation):
    return {'class': classify_real(inv.real_set())}

@command('real semigroup', '加法について閉じているか', 'set')
def _real_semigroup(inv:Invocation):
    return semigroup_check(inv.real_set())

@command('real subgroup', '加法部分群かどうか', 'set')
def _real_subgroup(inv:Invocation):
    return {'subgroup': is_subgroup(inv.real_set())}

@command('real rescale', '(1/b)·A', 'set', 'scale')
def _real_rescale(inv:Invocation):
    text = inv.option('scale')
    try:
        b = Fraction(text)
    except (ValueError, ZeroDivisionError) as error:
        raise UsageError('--b', f'有理数として読めません: {text}') from error
    return rescale(inv.real_set(), b).to_json()

@command('real project', 'x ∈ A の生成元と整数のずれ', 'set', 'x')
def _real_project(inv:Invocation):
    return projections(inv.real_set(), inv.real('x'))

@command('real mix', '第一類H1と第二類H2から (H1 + H2) ∪ H2 を作ります', 'set', 'other')
def _real_mix(inv:Invocation):
    return construct_mixed(inv.real_set(), inv.real_set('other')).to_json()

@command('real concentration', '集中数の境界を標本点で確かめます', 'set')
def _real_concentration(inv:Invocation):
    return concentration_check(inv.real_set())

@command('real impossibility', '有限個の点セルからなる第三類の半群を探します')
def _real_impossibility(inv:Invocation):
    report = finite_cell_impossibility()
    return {'checked': report.checked, 'third_class': [A.to_json() for A in report.third_class]}


# ===== verify =====

@command('verify', '性質の検証スイートを実行します', 'suite', 'scope', 'list')
def _verify(inv:Invocation):
    if inv.option('list'):
        return {'suites': [{'id': s.theorem_id, 'alias': s.alias, 'description': s.description}
                           for s in select_suites('all')]}
    try:
        report = run_verify(inv.option('suite'), scope=inv.option('scope'), seed=inv.option('seed'),
                            workers=inv.option('workers'))
    except ValueError as error:
        raise UsageError('--suite', str(error)) from error
    return Outcome(report.to_dict(timing=inv.option('timing')), 0 if report.passed else 1)


def add_options(parser:ArgumentParser, names:tuple[str, ...]) -> None:
    for name in names:
        flags, kwargs = OPTIONS[name]
        parser.add_argument(*flags, **kwargs)


def to_output(result:Any) -> Outcome:
    if isinstance(result, Outcome):
        return Outcome(to_jsonable(result.payload), result.code, result.raw)
    return Outcome(to_jsonable(result))


__all__ = ('UsageError', 'Outcome', 'Invocation', 'Command', 'COMMANDS', 'load_magma', 'add_options', 'to_output')
