"""
正負分割と正部分集合、上周期的集合の直和表現 A = 𝔹·D ∪̇ B¹·E
"""

from collections.abc import Iterator
from typing import Optional
import logging

from .magma import (
    FactorContext, FiniteMagma, generate_subsemigroup, group_identity, group_inverse, identity, inverse_set,
    is_group, is_left_cancellative_over, is_left_subgroup, left_identities, require_associative,
    right_identities,
)
from .periodic import all_subsets, is_well_started, periodic_kernel
from .structs import (
    BiProjection, NormalFactorReport, PositivePartition, QuestionTwoCase, QuestionTwoResult, RepresentationReport,
)
from .subset import Subset
from .subset_algebra import is_direct
from ._util import NotGroup, NotInSet, NotPeriodic, NotUpperPeriodic, PreconditionFailed, TooManyPairs, require_exhaustive


_LOG = logging.getLogger(__name__)
MAX_INVERSE_PAIRS = 20


def _require_group(G:FiniteMagma) -> int:
    if not is_group(G):
        raise NotGroup(f'{G!r}は群ではありません')
    return identity(G) # type: ignore[return-value]


def g_two(G:FiniteMagma) -> Subset:
    "G₂ = {x : x² = 1}"
    e = _require_group(G)
    return Subset.of(G.n, (x for x in range(G.n) if G.mul(x, x) == e))


def _inverse_pairs(G:FiniteMagma) -> list[tuple[int, int]]:
    two = g_two(G)
    pairs = []
    for x in range(G.n):
        y = group_inverse(G, x)
        if x not in two and x < y:
            pairs.append((x, y))
    return pairs


def enumerate_positive_partitions(G:FiniteMagma) -> Iterator[PositivePartition]:
    """
    G = G₊ ∪̇ G₋ ∪̇ G₂ となる分割を全て列挙する。
    組{x, x⁻¹}を小さい添え字の順に並べ、i番目のビットが立っていればx⁻¹をG₊に入れる。
    """
    pairs = _inverse_pairs(G)
    if len(pairs) > MAX_INVERSE_PAIRS:
        raise TooManyPairs(f'逆元の組が{len(pairs)}個あり、列挙できません', pairs=len(pairs), limit=MAX_INVERSE_PAIRS)
    two = g_two(G)

    def _walk() -> Iterator[PositivePartition]:
        for mask in range(1 << len(pairs)):
            plus = Subset.of(G.n, (pair[mask >> i & 1] for i, pair in enumerate(pairs)))
            yield PositivePartition(plus, inverse_set(G, plus), two)
    return _walk()


def is_positive_subset(G:FiniteMagma, B:Subset) -> bool:
    "(G∖B)⁻¹∖G₂ = B かつ B ∩ G₂ = ∅"
    G.check(B)
    two = g_two(G)
    return inverse_set(G, B.complement()) - two == B and B.isdisjoint(two)

def is_positive_subsemigroup(G:FiniteMagma, B:Subset) -> bool:
    return is_positive_subset(G, B) and bool(B) and G.product(B, B) <= B


# ===== 直和表現 =====

def periodic_representation(ctx:FactorContext, A:Subset) -> Subset:
    """
    左𝓑周期的なAを A = 𝓑·D (D ⊆ 𝓓) と一意に表すDを返す。
    """
    X = ctx.carrier
    X.check(A)
    if X.product(ctx.subgroup, A) != A:
        raise NotPeriodic(f'{X.element_labels(A)}は左𝓑周期的ではありません')
    D = ctx.transversal & A
    if X.product(ctx.subgroup, D) != A or len(A) != len(ctx.subgroup) * len(D):
        raise AssertionError(f'A = 𝓑·D が直積になっていません: D = {X.element_labels(D)}')
    return D


def _unit_for(X:FiniteMagma, BB:Subset) -> Optional[int]:
    "B¹に付け加える元。𝔹が左部分群ならその単位元、そうでなければ最小の左単位元"
    e = group_identity(X, BB) if BB else None
    if e is not None and e in left_identities(X):
        return e
    return left_identities(X).min()


def _with_unit(X:FiniteMagma, B:Subset, E:Subset, unit:Optional[int]) -> tuple[Subset, int]:
    """
    B¹E と |B¹| を返す。左単位元がなければ1をX¹の新しい元として数える。
    """
    BE = X.product(B, E) | E
    if unit is None:
        return BE, len(B) + 1
    return BE, len(B.add(unit))


def _greedy_representatives(X:FiniteMagma, BB:Subset, C:Subset) -> Subset:
    D = X.empty()
    covered = X.empty()
    for x in C:
        if x not in covered:
            D = D.add(x)
            covered = covered | X.left_orbit(BB, x)
    return D


def representation_report(X:FiniteMagma, A:Subset, BB:Subset, B:Subset,
                          transversal:Optional[Subset]=None) -> RepresentationReport:
    """
    上B周期的なAについて、C = C_𝔹(A), E = A∖BA, D を求め、直和表現の各性質を確かめる。
    表現が成り立たなくても例外にはせず、どの性質が崩れたかを報告する。
    """
    X.check(A, BB, B)
    BA = X.product(B, A)
    if not BA <= A:
        raise NotUpperPeriodic(f'BA ⊆ A が成り立ちません: {X.element_labels(BA - A)}')
    C = periodic_kernel(X, A, BB)
    E = A - BA

    if transversal is not None:
        X.check(transversal)
        D = C & transversal
        D_unique = (is_left_subgroup(X, BB) and is_direct(X, BB, transversal)
                    and X.product(BB, transversal) == X.full() and X.product(BB, D) == C)
    else:
        D = _greedy_representatives(X, BB, C)
        D_unique = False

    BD = X.product(BB, D)
    B1E, size_B1 = _with_unit(X, B, E, _unit_for(X, BB))
    report = RepresentationReport(
        D                          = D,
        E                          = E,
        first_half_direct          = is_direct(X, BB, D) and BD == C,
        second_half_direct         = len(B1E) == size_B1 * len(E),
        halves_disjoint            = BD.isdisjoint(B1E),
        E_unique                   = E.isdisjoint(X.product(B, E)),
        D_unique_given_transversal = D_unique,
        B_is_subsemigroup          = not E or X.product(B, B) <= B,
        well_started               = is_well_started(X, A, BB, B),
        reconstructs               = (BD | B1E) == A,
    )
    _LOG.debug('直和表現: %s', report)
    return report


def generate_upper_periodic(X:FiniteMagma, BB:Subset, B:Subset, D:Subset, E:Subset) -> Subset:
    "𝔹D ∪ ⟨B⟩¹E"
    require_associative(X)
    X.check(BB, B, D, E)
    generated = generate_subsemigroup(X, B) if B else X.empty()
    return X.product(BB, D) | X.product(generated, E) | E


def unique_representation_check(X:FiniteMagma, BB:Subset, B:Subset,
                                first:tuple[Subset, Subset], second:tuple[Subset, Subset]) -> bool:
    """
    同じ集合を表す二つの表現 𝔹D ∪̇ B¹E について、Eが反左B移動的なら E₁ = E₂ かつ 𝔹D₁ = 𝔹D₂ となることを確かめる。
    """
    X.check(BB, B, *first, *second)
    e = group_identity(X, BB)
    if e is None or not is_left_subgroup(X, BB):
        raise PreconditionFailed(f'{X.element_labels(BB)}は左部分群ではありません', which='BB_left_subgroup')
    if not B or not X.product(B, B) <= B:
        raise PreconditionFailed(f'{X.element_labels(B)}は部分半群ではありません', which='B_subsemigroup')
    if X.product(B, BB) != BB:
        raise PreconditionFailed('B𝔹 = 𝔹 が成り立ちません', which='B_BB_equal')

    sets = []
    for D, E in (first, second):
        BD = X.product(BB, D)
        B1E = X.product(B.add(e), E)
        if not E.isdisjoint(X.product(B, E)):
            raise PreconditionFailed('E ∩ BE = ∅ が成り立ちません', which='anti_transference')
        if not BD.isdisjoint(B1E):
            raise PreconditionFailed('𝔹D ∩ B¹E = ∅ が成り立ちません', which='disjoint_union')
        sets.append((BD, B1E, E))
    if sets[0][0] | sets[0][1] != sets[1][0] | sets[1][1]:
        raise PreconditionFailed('二つの表現が同じ集合を表していません', which='same_set')
    return sets[0][2] == sets[1][2] and sets[0][0] == sets[1][0]


def check_normal_factor_monoid(S:FiniteMagma, ctx:FactorContext) -> NormalFactorReport:
    """
    左簡約的な半群Sが左正規な因子部分群𝓑を持つとき、1_𝓑がSの両側単位元であること、
    S = 𝓓·𝓑 も直積であること、𝓑 ∩ 𝓓 が一元集合であることを確かめる。
    """
    S.check(ctx.subgroup, ctx.transversal)
    if not is_left_cancellative_over(S, S.full()):
        raise PreconditionFailed(f'{S!r}は左簡約的ではありません', which='left_cancellative')
    BB = ctx.subgroup
    for x in range(S.n):
        xB = S.product(Subset.singleton(S.n, x), BB)
        if not xB <= S.left_orbit(BB, x):
            raise PreconditionFailed(f'{S.label(x)}𝓑 ⊆ 𝓑{S.label(x)} が成り立ちません', which='left_normal')

    e = ctx.identity
    DB = S.product(ctx.transversal, BB)
    intersection = BB & ctx.transversal
    report = NormalFactorReport(
        identity     = e,
        is_two_sided = e in left_identities(S) and e in right_identities(S),
        dual_direct  = DB == S.full() and len(ctx.transversal) * len(BB) == S.n,
        intersection = intersection,
        singleton    = len(intersection) == 1,
    )
    if not (report.is_two_sided and report.dual_direct and report.singleton):
        _LOG.warning('正規因子部分群をもつ半群の結論が成り立っていません: %s', report)
    return report


def _require_full_representation(ctx:FactorContext, A:Subset, D:Subset, E:Subset, B:Subset) -> Subset:
    X = ctx.carrier
    BD = X.product(ctx.subgroup, D)
    B1 = B.add(ctx.identity)
    B1E = X.product(B1, E)
    if not (is_direct(X, ctx.subgroup, D) and is_direct(X, B1, E) and BD.isdisjoint(B1E) and BD | B1E == A):
        raise PreconditionFailed('A = 𝓑·D ∪̇ B¹·E が直和表現になっていません', which='full_direct_representation')
    return B1


def bi_projection_detail(ctx:FactorContext, A:Subset, D:Subset, E:Subset, x:int,
                         B:Optional[Subset]=None) -> BiProjection:
    "x = factor·generator となる D ∪ E の元と、その係数"
    X = ctx.carrier
    B = X.empty() if B is None else B
    X.check(A, D, E, B)
    if x not in A:
        raise NotInSet(f'{X.label(x)}はAに属していません', element=x)
    B1 = _require_full_representation(ctx, A, D, E, B)
    for part, generators, factors in (('D', D, ctx.subgroup), ('E', E, B1)):
        for g in generators:
            for f in factors:
                if X.mul(f, g) == x:
                    return BiProjection(part, g, f)
    raise AssertionError(f'{X.label(x)}の射影が見つかりません')

def bi_projection(ctx:FactorContext, A:Subset, D:Subset, E:Subset, x:int, B:Optional[Subset]=None) -> int:
    return bi_projection_detail(ctx, A, D, E, x, B).generator


# ===== 未解決の問いの探索 =====

def _subsemigroups(X:FiniteMagma) -> list[Subset]:
    return [S for S in all_subsets(X.n, force=True) if S and X.product(S, S) <= S]

def question_two_search(X:FiniteMagma, *, limit:int=6, force:bool=False) -> QuestionTwoResult:
    """
    部分半群 B, 𝔹 (B𝔹 = 𝔹) と E ∩ BE = E ∩ 𝔹D = ∅ を満たす全ての組で A = 𝔹D ∪ B¹E を作り、
    Aがwell startedかを調べる。B ⩽̇ 𝔹 ≤_ℓ X の組では C_𝔹(A) = 𝔹D となるかも調べる。
    答えは主張せず、反例候補を集めるだけ。
    """
    require_associative(X)
    require_exhaustive(X.n, '(𝔹, B, D, E)の組', force=force, limit=limit)
    semigroups = _subsemigroups(X)
    checked = restricted_checked = 0
    found: list[QuestionTwoCase] = []
    kernel_found: list[QuestionTwoCase] = []
    for BB in semigroups:
        restricted_BB = is_left_subgroup(X, BB)
        # Aは𝔹Dにしかよらないので、𝔹Dごとに代表のDを一つ選ぶ
        products: dict[Subset, Subset] = {}
        for D in all_subsets(X.n, force=True):
            products.setdefault(X.product(BB, D), D)
        for B in semigroups:
            if X.product(B, BB) != BB:
                continue
            restricted = restricted_BB and B <= BB
            for BD, D in products.items():
                for E in all_subsets(X.n, force=True):
                    BE = X.product(B, E)
                    if not E.isdisjoint(BD) or not E.isdisjoint(BE):
                        continue
                    A = BD | BE | E
                    checked += 1
                    kernel_matches = periodic_kernel(X, A, BB) == BD if restricted else None
                    case = QuestionTwoCase(BB, B, D, E, A, is_well_started(X, A, BB, B), kernel_matches, restricted)
                    if restricted:
                        restricted_checked += 1
                        if not kernel_matches:
                            _LOG.warning('C_𝔹(A) ≠ 𝔹D となる組が見つかりました: %s', case)
                            kernel_found.append(case)
                    if not case.well_started:
                        _LOG.warning('well startedにならない組が見つかりました: %s', case)
                        found.append(case)
    _LOG.info('%d通り(うち B ⩽̇ 𝔹 ≤_ℓ X が%d通り)の組を調べ、反例の候補が%d個と%d個見つかりました',
              checked, restricted_checked, len(found), len(kernel_found))
    return QuestionTwoResult(checked, tuple(found), restricted_checked, tuple(kernel_found))


__all__ = (
    'g_two', 'enumerate_positive_partitions', 'is_positive_subset', 'is_positive_subsemigroup',
    'periodic_representation', 'representation_report', 'generate_upper_periodic', 'unique_representation_check',
    'check_normal_factor_monoid', 'bi_projection_detail', 'bi_projection', 'question_two_search',
)
