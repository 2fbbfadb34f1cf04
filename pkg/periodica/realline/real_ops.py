"""
単位周期的な実数集合に対する演算。周期核・始集合は閉じた式で、集中数はδから求める。
"""

from dataclasses import replace
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Optional, Sequence
import logging

from .cells import (
    Cell, ConcentrationReport, DeltaKind, DeltaResult, ImpossibilityReport, RayInterval, RayKind,
    RealClass, RealPart, RealProjection, RealSemigroupReport, UnitPeriodicRealSet,
)
from .exact import ExactReal
from .._util import (
    Clash, EmptySet, InvalidRealSet, NotInSet, NotUpperPeriodic, Unsupported, ZeroModulus,
)


_LOG = logging.getLogger(__name__)
CONCENTRATION_EPS = Fraction(1, 16)


def _is_integer(x:ExactReal) -> bool:
    return x.is_rational and x.q0.denominator == 1

def _require_upward(A:UnitPeriodicRealSet, what:str) -> None:
    if A.mirrored:
        raise Unsupported(f'{what}は下1周期的な集合(反転した集合)には対応していません')

def _require_points(A:UnitPeriodicRealSet, what:str) -> None:
    if not A.points_only:
        raise Unsupported(f'{what}は点セルだけからなる集合に限ります')


def _free_shift(cell:Cell, x:ExactReal) -> Optional[int]:
    "x ∈ cell + k となる k ≥ 0。区間セルは長さが1以下なので候補は最大のkだけ"
    lo, _, lo_closed, _ = cell.bounds
    t = x - lo
    k = t.floor()
    if not lo_closed and t == k:
        k -= 1
    if k < 0 or not cell.contains(x - k):
        return None
    return k


def membership(A:UnitPeriodicRealSet, x:ExactReal) -> bool:
    x = ExactReal.coerce(x)
    if A.mirrored:
        x = -x
    f = x.frac()
    if any(c.contains(f) for c in A.D):
        return True
    return any(_free_shift(c, x) is not None for c in A.E)


def pk(A:UnitPeriodicRealSet) -> UnitPeriodicRealSet:
    "周期核 ℤ∔D"
    return UnitPeriodicRealSet(A.D, (), A.mirrored)

def pf(A:UnitPeriodicRealSet) -> UnitPeriodicRealSet:
    "周期自由部分 ℤ₊⁰∔E"
    return UnitPeriodicRealSet((), A.E, A.mirrored)

def st(A:UnitPeriodicRealSet) -> tuple[Cell, ...]:
    "始集合 St(A) = A ∖ (A + 1) = E"
    _require_upward(A, '始集合')
    return A.E


def _bound(A:UnitPeriodicRealSet) -> int:
    ends = [abs(end) for c in A.D + A.E for end in c.bounds[:2]]
    return max((e.floor() + 1 for e in ends), default=0)

def kernel_by_definition(A:UnitPeriodicRealSet, x:ExactReal) -> bool:
    "(A − x) ∩ ℤ = ℤ を、周期自由部分を外れるまで広げた窓で確かめる"
    x = ExactReal.coerce(x)
    window = abs(x).floor() + _bound(A) + 2
    return all(membership(A, x + k) for k in range(-window, window + 1))

def start_by_definition(A:UnitPeriodicRealSet, x:ExactReal) -> bool:
    "x ∈ A かつ min((A − x) ∩ ℤ) = 0"
    x = ExactReal.coerce(x)
    if not membership(A, x):
        return False
    window = abs(x).floor() + _bound(A) + 2
    return not any(membership(A, x - k) for k in range(1, window + 1))


def sample_points(A:UnitPeriodicRealSet, radius:int=10) -> list[ExactReal]:
    "セルの端点と中点を整数でずらした標本点"
    base = {ExactReal()}
    for c in A.D + A.E:
        lo, hi, _, _ = c.bounds
        base |= {lo, hi, c.midpoint()}
    if A.mirrored:
        base = {-b for b in base}
    return sorted({b + k for b in base for k in range(-radius, radius + 1)})


def delta(A:UnitPeriodicRealSet) -> DeltaResult:
    """
    δ_A = sup(A ∖ (A + 1))。E = ∅ なら約束により0。
    有限個のセルでは上限は有限なので`PLUS_INFINITY`にはならない。
    """
    _require_upward(A, 'δ')
    if not A.E:
        return DeltaResult(ExactReal(), False, DeltaKind.ZERO)
    top = max(c.bounds[1] for c in A.E)
    attained = any(c.contains(top) for c in A.E)
    return DeltaResult(top, attained, DeltaKind.FINITE)


def coc(A:UnitPeriodicRealSet) -> RayInterval:
    "集中数の全体。δが到達されれば (δ−1, ∞)、されなければ [δ−1, ∞)"
    d = delta(A)
    match d.kind:
        case DeltaKind.ZERO:
            return RayInterval(RayKind.ALL_REALS)
        case DeltaKind.PLUS_INFINITY:
            return RayInterval(RayKind.EMPTY)
    lo = d.value - 1 # type: ignore[operator]
    return RayInterval(RayKind.OPEN_RAY if d.attained else RayKind.CLOSED_RAY, lo)


def summand_zplus(A:UnitPeriodicRealSet) -> UnitPeriodicRealSet:
    "Σ_A = {x : x + n ∈ A (n ≥ 1)} = A − 1"
    _require_upward(A, 'Σ')
    return UnitPeriodicRealSet(A.D, tuple(c.shift(-1) for c in A.E))

def sigma(A:UnitPeriodicRealSet) -> DeltaResult:
    "σ_A = sup(Σ_A ∖ A)。Σ_A ∖ A = E − 1 なので δ_{Σ_A} に等しい"
    return delta(summand_zplus(A))


# ===== 半群の判定 =====

def _in_D(D:frozenset[ExactReal], x:ExactReal) -> bool:
    return x.frac() in D

def _reaches_E(E:Sequence[ExactReal], x:ExactReal, signed:bool) -> bool:
    "x − ε ∈ ℤ (signedなら ℤ₊⁰) となる ε ∈ E があるか"
    return any(_is_integer(x - e) and (not signed or x - e >= 0) for e in E)


def _couple_failures(D:Sequence[ExactReal], E:Sequence[ExactReal], signed:bool) -> list[str]:
    Dset = frozenset(D)
    failures = []
    for d, d2 in combinations_with_replacement(D, 2):
        if not _in_D(Dset, d + d2):
            failures.append(f'{{{d} + {d2}}} ∉ D')
    for d in D:
        for e in E:
            if not _in_D(Dset, d + e):
                failures.append(f'{{{d} + {e}}} ∉ D')
    for e, e2 in combinations_with_replacement(E, 2):
        s = e + e2
        if not (_in_D(Dset, s) or _reaches_E(E, s, signed)):
            failures.append(f'{e} + {e2} ∉ (ℤ∔D) ∪ (E + ℤ)')
    return failures


def is_additive_couple(D:Sequence[ExactReal], E:Sequence[ExactReal], *, signed:bool=True) -> bool:
    """
    (D, E) が加法的な組か。ε ∈ E について e + e′ − ε ∈ ℤ となることを`signed`なら ℤ₊⁰ に強める。

    D ⊆ [0, 1)、D ∪ E ≠ ∅、D ∪ E が整数の反転移的であることも条件に含む。
    """
    D = list(dict.fromkeys(ExactReal.coerce(d) for d in D))
    E = list(dict.fromkeys(ExactReal.coerce(e) for e in E))
    if not D and not E:
        return False
    try:
        UnitPeriodicRealSet.of_points(D, E)
    except InvalidRealSet as error:
        _LOG.debug('加法的な組ではありません: %s', error)
        return False
    return not _couple_failures(D, E, signed)


def _oracle(A:UnitPeriodicRealSet) -> bool:
    "生成元を窓の中でずらした点どうしの和が、全てAに入るか"
    M = max((abs(e).floor() + 1 for e in A.E_points), default=0)
    Z = 2 * M + 3
    points = [d + z for d in A.D_points for z in range(-Z, 1)]
    points += [e + k for e in A.E_points for k in range(Z + 1)]
    return all(membership(A, x + y) for x, y in combinations_with_replacement(points, 2))


def semigroup_check(A:UnitPeriodicRealSet) -> RealSemigroupReport:
    """
    加法について閉じているかを三通りに調べる。判定が食い違えば警告を出し、食い違いを報告に残す。
    """
    _require_points(A, '半群の判定')
    body = replace(A, mirrored=False)
    literal = _couple_failures(body.D_points, body.E_points, signed=False)
    signed = _couple_failures(body.D_points, body.E_points, signed=True)
    oracle = _oracle(body)
    discrepancies = []
    if (not literal) != oracle:
        discrepancies += [f'符号を問わない判定と窓の判定が異なる: {f}' for f in signed if f not in literal]
    if (not signed) != oracle:
        discrepancies.append(f'符号つきの判定({not signed})と窓の判定({oracle})が異なる')
    if discrepancies:
        _LOG.warning('半群の判定が食い違いました(要確認) %s: %s', A, discrepancies)
    return RealSemigroupReport(not literal, not signed, oracle, tuple(discrepancies))


def is_semigroup(A:UnitPeriodicRealSet) -> bool:
    return semigroup_check(A).signed


def is_subgroup(A:UnitPeriodicRealSet) -> bool:
    "E = ∅ で、Dが空でなく引き算で閉じている"
    _require_points(A, '部分群の判定')
    D = A.D_points
    Dset = frozenset(D)
    return not A.E and bool(D) and all(_in_D(Dset, d - d2) for d in D for d2 in D)


def classify_real(A:UnitPeriodicRealSet) -> RealClass:
    if not A.D and not A.E:
        raise EmptySet('空集合は分類できません')
    if not A.E:
        return RealClass.FIRST
    if not A.D:
        return RealClass.SECOND
    return RealClass.THIRD


def construct_mixed(H1:UnitPeriodicRealSet, H2:UnitPeriodicRealSet) -> UnitPeriodicRealSet:
    """
    第一類の半群H1と第二類の半群H2から (H1 + H2) ∪ H2 を作る。H1 ∩ (H2 − H2) ≠ ∅ なら`Clash`。
    有限個の点からなるH1は0を含むので、点セルの入力は必ず`Clash`になる。
    """
    _require_points(H1, '混合構成')
    _require_points(H2, '混合構成')
    if classify_real(H1) is not RealClass.FIRST or classify_real(H2) is not RealClass.SECOND:
        raise Unsupported('H1は第一類、H2は第二類の集合を与えてください')
    for name, H in (('H1', H1), ('H2', H2)):
        if not is_semigroup(H):
            raise Unsupported(f'{name} = {H} は半群ではありません')
    D1 = frozenset(H1.D_points)
    E2 = H2.E_points
    for e in E2:
        for e2 in E2:
            if _in_D(D1, e - e2):
                raise Clash(f'{e} − {e2} ∈ H1 なので H1 ∩ (H2 − H2) ≠ ∅ です', witness=str(e - e2))
    D = {(d + e).frac() for d in D1 for e in E2}
    return UnitPeriodicRealSet.of_points(D, E2)


def rescale(A:UnitPeriodicRealSet, b) -> UnitPeriodicRealSet:
    """
    (1/b)·A を単位周期的な標準形で返す。b < 0 なら反転フラグを切り替える。
    b = p/q > 0 では b + A ⊆ A が必要で、点セルの集合だけを扱う。
    """
    if isinstance(b, ExactReal):
        if not b.is_rational:
            raise Unsupported('無理数のbによる伸縮には対応していません')
        b = b.q0
    b = Fraction(b)
    if b == 0:
        raise ZeroModulus('bは0であってはなりません')
    if b == 1:
        return A
    if A.mirrored:
        return rescale(replace(A, mirrored=False), -b)
    if b < 0:
        R = rescale(A, -b)
        return replace(R, mirrored=not R.mirrored)
    _require_points(A, 'b ≠ ±1 の伸縮')

    D, E = A.D_points, A.E_points
    Dset = frozenset(D)
    broken = [str(d) for d in D if not _in_D(Dset, d + b)] + [str(e) for e in E if not membership(A, e + b)]
    if broken:
        raise NotUpperPeriodic(f'b + A ⊆ A が成り立ちません: b = {b}', witnesses=broken)
    p, q = b.numerator, b.denominator
    c = Fraction(q, p)
    D_R = {((d + j) * c).frac() for d in D for j in range(p)}
    starts: dict[ExactReal, ExactReal] = {}
    for e in E:
        for k in range(p):
            x = (e + k) * c
            f = x.frac()
            if f not in starts or x < starts[f]:
                starts[f] = x
    return UnitPeriodicRealSet.of_points(D_R, starts.values())


def projections(A:UnitPeriodicRealSet, x:ExactReal) -> RealProjection:
    """
    x ∈ A を生成元と整数のずれに分ける。自由部分では x + min((A − x) ∩ ℤ) が生成元になる。
    """
    _require_upward(A, '射影')
    x = ExactReal.coerce(x)
    if not membership(A, x):
        raise NotInSet(f'{x} ∉ A です')
    f = x.frac()
    if any(c.contains(f) for c in A.D):
        return RealProjection(RealPart.KERNEL, f, x.floor())
    for c in A.E:
        k = _free_shift(c, x)
        if k is not None:
            return RealProjection(RealPart.FREE, x - k, k)
    raise AssertionError(f'{x}の生成元が見つかりません')


# ===== 有限の検証 =====

def finite_cell_impossibility(max_q:int=6) -> ImpossibilityReport:
    """
    分母が`max_q`以下の有限加法的なDと、有理数と√2の格子から選んだ1〜2点のEの組で、
    第三類の半群になるものを探す。見つからないのが正しい。
    """
    Ds = [[ExactReal(Fraction(j, m)) for j in range(m)] for m in range(1, max_q + 1)]
    grid = {Fraction(k, q) for q in range(1, max_q + 1) for k in range(q)}
    base = [ExactReal(g) for g in sorted(grid)] + [ExactReal.sqrt(2) - 1, 2 - ExactReal.sqrt(2)]
    candidates = [e + s for e in base for s in (-1, 0, 1)]
    Es = [[e] for e in candidates] + [list(pair) for pair in combinations(candidates, 2)]
    checked = 0
    found = []
    for D in Ds:
        for E in Es:
            try:
                A = UnitPeriodicRealSet.of_points(D, E)
            except InvalidRealSet:
                continue
            checked += 1
            if is_additive_couple(D, E):
                found.append(A)
    _LOG.debug('第三類の候補を%d組調べました', checked)
    if found:
        _LOG.warning('有限セルの第三類の半群が見つかりました(要確認): %s', [str(A) for A in found])
    return ImpossibilityReport(checked, tuple(found))


def concentration_check(A:UnitPeriodicRealSet, radius:int=4) -> ConcentrationReport:
    """
    Coc(A)の境界のδ′で標本点が全て [δ′, δ′+1) ∩ A に集まり、境界のすぐ外では集まらないことを確かめる。
    """
    _require_upward(A, '集中数')
    ray = coc(A)
    samples = [a for a in sample_points(A, radius) if membership(A, a)]

    def _gathers(dp:ExactReal, points:list[ExactReal]) -> bool:
        return all(membership(A, a - (a - dp).floor()) for a in points)

    if ray.kind is RayKind.ALL_REALS:
        ok = _gathers(ExactReal(), samples) and _gathers(ExactReal(-3), samples)
        return ConcentrationReport(ray, ok, None, len(samples))

    d = delta(A).value
    eps = ExactReal(CONCENTRATION_EPS)
    if ray.kind is RayKind.OPEN_RAY:
        ok = _gathers(ray.lo + eps, samples) # type: ignore[operator]
        fails = not _gathers(ray.lo, samples + [d]) # type: ignore[arg-type, list-item]
    else:
        top = next(c for c in A.E if c.bounds[1] == d)
        half = top.length / 2
        t = eps if eps < half else half
        ok = _gathers(ray.lo, samples) # type: ignore[arg-type]
        fails = not _gathers(ray.lo - t, samples + [d - t / 2]) # type: ignore[operator]
    return ConcentrationReport(ray, ok, fails, len(samples))


__all__ = (
    'membership', 'pk', 'pf', 'st', 'kernel_by_definition', 'start_by_definition', 'sample_points', 'delta', 'coc',
    'summand_zplus', 'sigma', 'is_additive_couple', 'semigroup_check', 'is_semigroup', 'is_subgroup',
    'classify_real', 'construct_mixed', 'rescale', 'projections', 'finite_cell_impossibility', 'concentration_check',
)
