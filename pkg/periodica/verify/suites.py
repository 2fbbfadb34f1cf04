"""
有限の半群・群の上で成り立つはずの性質を、フィクスチャを走査して確かめるスイート
"""

from functools import reduce
from itertools import islice
from random import Random
import logging

import numpy as np

from ..builders import by_name, function_monoid, symmetric, with_identity
from ..magma import (
    FiniteMagma, generate_subgroup, generate_subsemigroup, group_identity, group_inverse, inverse_set, inverses_of,
    is_group, is_left_cancellative_over, is_left_factor_subgroup, left_identities, left_subgroups, right_transversal,
    units,
)
from ..periodic import (
    all_subsets, complement_periodicity, is_left_upper_periodic, left_ideal_kernel_check, periodic_kernel,
    periodic_subsets, start, summand, summand_closed_form, upper_periodic_kernel,
)
from ..representation import (
    check_normal_factor_monoid, enumerate_positive_partitions, g_two, is_positive_subset,
    is_positive_subsemigroup, unique_representation_check,
)
from ..solver import ring_ideal_demo, solve_equation, solve_sandwich, solve_split, solve_upper
from ..subset import Subset, canonical_order
from ..subset_algebra import divisor_pairs, is_direct, is_direct_by_quotients, search_factorization
from ..topology import build_topology, count_opens, is_open, is_topological_group, is_topological_semigroup
from .._util import NotLeftInvertible, PreconditionFailed
from .registry import fixtures, group_fixtures, random_subset, sample_subsets, subsets_within, suite
from .report import CaseLog


_LOG = logging.getLogger(__name__)


def _small_subset(rng:Random, n:int, most:int=3) -> Subset:
    k = rng.randint(1, min(most, n))
    return Subset.of(n, rng.sample(range(n), k))

def _nonempty(rng:Random, n:int) -> Subset:
    A = random_subset(rng, n)
    return A if A else Subset.singleton(n, rng.randrange(n))

def _nontrivial(X:FiniteMagma, H:Subset) -> tuple[int, Subset]:
    e = group_identity(X, H)
    assert e is not None
    return e, H - Subset.singleton(X.n, e)

def _inverse_within(X:FiniteMagma, H:Subset, e:int, B:Subset) -> Subset:
    "左部分群Hの中での逆元の集合"
    return Subset.of(X.n, (next(g for g in H if X.mul(g, b) == e and X.mul(b, g) == e) for b in B))


# ===== 左部分群と因子 =====

@suite('Eq-1.2', 'left-subgroup-cancellative', '左部分群Hについて台集合は左H簡約的')
def _left_subgroup_cancellative(log:CaseLog, scope:int, rng:Random) -> None:
    for X in fixtures(scope):
        for H in left_subgroups(X):
            log.check(X.name, is_left_cancellative_over(X, H), H=H)


@suite('Sec-1.3(vi)', 'group-factor-subgroups', '群の部分群は全て左因子部分群', default_scope=8)
def _group_factor_subgroups(log:CaseLog, scope:int, rng:Random) -> None:
    for G in group_fixtures(scope):
        for H in left_subgroups(G):
            ok = is_left_factor_subgroup(G, H) and len(right_transversal(G, H).transversal) * len(H) == G.n
            log.check(G.name, ok, H=H)


@suite('Remark-1.4', 'factor-context-unique', 'x = βd の分解は一通り')
def _factor_context_unique(log:CaseLog, scope:int, rng:Random) -> None:
    for X in fixtures(scope):
        for H in left_subgroups(X):
            if not is_left_factor_subgroup(X, H):
                continue
            ctx = right_transversal(X, H)
            for x in range(X.n):
                log.check(X.name, len(ctx.factor_pairs(x)) == 1, H=H, x=X.label(x))


def _covers(X:FiniteMagma, Y:Subset, B:Subset, l:int) -> bool:
    return all(any(X.mul(y, b) == l for y in Y) for b in B)

@suite('Sec-1.2', 'inverse-minimality', '逆元集合は全てのbを覆い、極小')
def _inverse_minimality(log:CaseLog, scope:int, rng:Random) -> None:
    for X in fixtures(scope):
        for l in left_identities(X):
            for B in sample_subsets(rng, X.n, 24):
                try:
                    found = inverses_of(X, B, l)
                except NotLeftInvertible as error:
                    log.check(X.name, all(X.mul(beta, error.element) != l for beta in range(X.n)), B=B, l=X.label(l))
                    continue
                ok = bool(found) and all(
                    _covers(X, Y, B, l) and not any(_covers(X, Y - Subset.singleton(X.n, y), B, l) for y in Y)
                    for Y in found)
                log.check(X.name, ok, B=B, l=X.label(l))


@suite('Example-1.5', 'factor-examples', 'F3とM2の単元群の因子性')
def _factor_examples(log:CaseLog, scope:int, rng:Random) -> None:
    F3 = function_monoid(3)
    U = units(F3)
    log.check(F3.name, F3.n == 27 and len(U) == 6 and not is_left_factor_subgroup(F3, U), U=U)
    M2 = function_monoid(2)
    U = units(M2)
    ctx = right_transversal(M2, U)
    ok = U == M2.subset('e', 's') and ctx.transversal == M2.subset('e', 'c1') and is_left_factor_subgroup(M2, U)
    log.check(M2.name, ok, U=U, transversal=ctx.transversal)


# ===== 部分集合の積と直積性 =====

@suite('Sec-1', 'product-associativity', '(AB)C = A(BC)')
def _product_associativity(log:CaseLog, scope:int, rng:Random) -> None:
    for X in fixtures(scope):
        for _ in range(40):
            A, B, C = (random_subset(rng, X.n) for _ in range(3))
            log.check(X.name, X.product(X.product(A, B), C) == X.product(A, X.product(B, C)), A=A, B=B, C=C)


@suite('Sec-1.3(i)', 'direct-sub-uniqueness', '直積な組の部分集合の組も直積')
def _direct_sub_uniqueness(log:CaseLog, scope:int, rng:Random) -> None:
    for X in fixtures(scope):
        for _ in range(40):
            A, B = _small_subset(rng, X.n), _small_subset(rng, X.n)
            if not is_direct(X, A, B):
                continue
            ok = all(is_direct(X, A2, B2) for A2 in subsets_within(A) for B2 in subsets_within(B))
            log.check(X.name, ok, A=A, B=B)


@suite('Lemma-1.3', 'direct-vs-anti-transference', '左部分群Hについて H·A が直積 ⇔ A ∩ H*A = ∅')
def _direct_vs_anti_transference(log:CaseLog, scope:int, rng:Random) -> None:
    for X in fixtures(scope):
        for H in left_subgroups(X):
            _, star = _nontrivial(X, H)
            for A in sample_subsets(rng, X.n, 32):
                log.check(X.name, is_direct(X, H, A) == A.isdisjoint(X.product(star, A)), H=H, A=A)


@suite('Cor-2.9a', 'direct-with-identity', 'B¹E が直積 ⇔ BE が直積かつ E ∩ BE = ∅')
def _direct_with_identity(log:CaseLog, scope:int, rng:Random) -> None:
    for X in fixtures(scope):
        X1 = with_identity(X)
        m = X1.n
        for _ in range(40):
            B, E = random_subset(rng, X.n).widen(m), random_subset(rng, X.n).widen(m)
            B1 = B.add(X.n)
            expected = is_direct(X1, B, E) and E.isdisjoint(X1.product(B, E))
            log.check(X.name, is_direct(X1, B1, E) == expected, B=B, E=E)


@suite('Sec-1.3(ii)', 'direct-quotients', '群で AB が直積 ⇔ A⁻¹A ∩ BB⁻¹ = {1}')
def _direct_quotients(log:CaseLog, scope:int, rng:Random) -> None:
    for G in group_fixtures(scope):
        for _ in range(60):
            A, B = _nonempty(rng, G.n), _nonempty(rng, G.n)
            log.check(G.name, is_direct(G, A, B) == is_direct_by_quotients(G, A, B), A=A, B=B)


@suite('Conjecture-1.3', 'factorization-search', '位数の約数の組ごとに因数分解が見つかる', default_scope=16)
def _factorization_search(log:CaseLog, scope:int, rng:Random) -> None:
    for G in group_fixtures(scope):
        for a, b in divisor_pairs(G.n):
            A, B = search_factorization(G, a, b)
            ok = len(A) == a and len(B) == b and G.product(A, B) == G.full() and is_direct(G, A, B)
            log.check(G.name, ok, a=a, b=b, A=A, B=B)


# ===== 周期核と始集合 =====

@suite('Sec-2.1-kernel', 'kernel-fixpoint', '周期核はAに含まれる周期的集合の和集合')
def _kernel_fixpoint(log:CaseLog, scope:int, rng:Random) -> None:
    for X in fixtures(scope):
        for B in sample_subsets(rng, X.n, 12):
            periodic = periodic_subsets(X, B, force=True)
            for A in sample_subsets(rng, X.n, 16):
                union = reduce(lambda P, Q: P | Q, (P for P in periodic if P <= A), X.empty())
                log.check(X.name, union == periodic_kernel(X, A, B), A=A, B=B)


@suite('Prop-3.2a', 'generated-periodicity', 'BA ⊆ A ⇔ ⟨B⟩A ⊆ A')
def _generated_periodicity(log:CaseLog, scope:int, rng:Random) -> None:
    for X in fixtures(scope):
        for _ in range(12):
            B = _nonempty(rng, X.n)
            generated = generate_subsemigroup(X, B)
            for A in sample_subsets(rng, X.n, 16):
                ok = is_left_upper_periodic(X, A, B) == is_left_upper_periodic(X, A, generated)
                log.check(X.name, ok, A=A, B=B)


@suite('Prop-3.1a', 'singleton-periodicity', 'BA ⊆ A ⇔ 全てのb∈Bで bA ⊆ A')
def _singleton_periodicity(log:CaseLog, scope:int, rng:Random) -> None:
    for X in fixtures(scope):
        for B in sample_subsets(rng, X.n, 12):
            for A in sample_subsets(rng, X.n, 16):
                each = all(is_left_upper_periodic(X, A, Subset.singleton(X.n, b)) for b in B)
                log.check(X.name, is_left_upper_periodic(X, A, B) == each, A=A, B=B)


@suite('Eq-2.6', 'kernel-closed-form', '左部分群では周期核 = 上周期核 = Σ∩A = Σ = (BA^c)^c')
def _kernel_closed_form(log:CaseLog, scope:int, rng:Random) -> None:
    for X in fixtures(scope):
        for BB in left_subgroups(X):
            for A in sample_subsets(rng, X.n, 24):
                C = periodic_kernel(X, A, BB)
                sigma = summand(X, A, BB)
                forms = (upper_periodic_kernel(X, A, BB), sigma & A, sigma, summand_closed_form(X, A, BB))
                log.check(X.name, all(F == C for F in forms), A=A, B=BB)


@suite('Sec-2.1-chain', 'kernel-chain', 'C ⊆ 上周期核 ⊆ Σ∩A ⊆ Σ')
def _kernel_chain(log:CaseLog, scope:int, rng:Random) -> None:
    for X in fixtures(scope):
        for B in sample_subsets(rng, X.n, 12):
            for A in sample_subsets(rng, X.n, 12):
                sigma = summand(X, A, B)
                ok = periodic_kernel(X, A, B) <= upper_periodic_kernel(X, A, B) <= sigma & A
                log.check(X.name, ok, A=A, B=B)


@suite('Sec-2.1-ideal', 'kernel-right-ideal', '部分半群Aの周期核は空かAの右イデアル')
def _kernel_right_ideal(log:CaseLog, scope:int, rng:Random) -> None:
    for X in fixtures(scope):
        for l in left_identities(X):
            for _ in range(6):
                B = generate_subsemigroup(X, random_subset(rng, X.n).add(l))
                for _ in range(6):
                    A = generate_subsemigroup(X, _nonempty(rng, X.n))
                    try:
                        ok = left_ideal_kernel_check(X, A, B)
                    except PreconditionFailed:
                        continue
                    log.check(X.name, ok, A=A, B=B)


@suite('Lemma-2.16b', 'kernel-uniqueness', '周期的な部分と周期自由な部分への分解の周期的な部分は周期核')
def _kernel_uniqueness(log:CaseLog, scope:int, rng:Random) -> None:
    for X in fixtures(scope):
        for BB in left_subgroups(X):
            for P in islice(periodic_subsets(X, BB, force=True), 16):
                for _ in range(6):
                    F = random_subset(rng, X.n) - P
                    if periodic_kernel(X, F, BB):
                        continue
                    log.check(X.name, periodic_kernel(X, P | F, BB) == P, B=BB, P=P, F=F)


@suite('Sec-2.2-start', 'start-laws', 'St(St(A)) = St(A), St(A∖C) = St(A)')
def _start_laws(log:CaseLog, scope:int, rng:Random) -> None:
    for X in fixtures(scope):
        for B in sample_subsets(rng, X.n, 12):
            for A in sample_subsets(rng, X.n, 12):
                S = start(X, A, B)
                free = A - periodic_kernel(X, A, B)
                log.check(X.name, start(X, S, B) == S and start(X, free, B) == S, A=A, B=B)


@suite('Sec-2.2-anti', 'anti-transference-start', 'E = St(E) ⇔ E ∩ BE = ∅')
def _anti_transference_start(log:CaseLog, scope:int, rng:Random) -> None:
    for X in fixtures(scope):
        for B in sample_subsets(rng, X.n, 12):
            for E in sample_subsets(rng, X.n, 12):
                ok = (start(X, E, B) == E) == E.isdisjoint(X.product(B, E))
                log.check(X.name, ok, B=B, E=E)


@suite('Sec-2(9)', 'complement-periodicity', 'B⁻¹ ⊆ B なら BA ⊆ A ⇔ BA^c ⊆ A^c')
def _complement_periodicity(log:CaseLog, scope:int, rng:Random) -> None:
    for X in fixtures(scope):
        candidates = [(H, group_identity(X, H)) for H in left_subgroups(X)]
        candidates += [(random_subset(rng, X.n), None) for _ in range(12)]
        if is_group(X):
            candidates += [(R | inverse_set(X, R), None) for R in (random_subset(rng, X.n) for _ in range(12))]
        for B, l in candidates:
            for A in sample_subsets(rng, X.n, 8):
                try:
                    ok = complement_periodicity(X, A, B, l)
                except PreconditionFailed:
                    break
                log.check(X.name, ok, A=A, B=B)


@suite('Lemma-2.2', 'periodic-census', '周期的集合は𝓑D (D ⊆ 𝓓) で、2^|𝓓|個')
def _periodic_census(log:CaseLog, scope:int, rng:Random) -> None:
    for X in fixtures(scope):
        for H in left_subgroups(X):
            if not is_left_factor_subgroup(X, H):
                continue
            T = right_transversal(X, H).transversal
            periodic = set(periodic_subsets(X, H, force=True))
            generated = {X.product(H, D) for D in subsets_within(T)}
            log.check(X.name, periodic == generated and len(periodic) == 1 << len(T), H=H, transversal=T)


@suite('Cor-2.3', 'group-upper-is-periodic', '群では BA ⊆ A ⇔ ⟨⟨B⟩⟩A = A', default_scope=8)
def _group_upper_is_periodic(log:CaseLog, scope:int, rng:Random) -> None:
    for G in group_fixtures(scope):
        for _ in range(12):
            B = _nonempty(rng, G.n)
            K = generate_subgroup(G, B)
            for A in sample_subsets(rng, G.n, 12):
                log.check(G.name, is_left_upper_periodic(G, A, B) == (G.product(K, A) == A), A=A, B=B)


# ===== 正負分割 =====

@suite('Def-2.5', 'partition-count', '正負分割は2^k通り', default_scope=8)
def _partition_count(log:CaseLog, scope:int, rng:Random) -> None:
    for G in group_fixtures(scope):
        two = g_two(G)
        parts = list(enumerate_positive_partitions(G))
        valid = all(p.G_plus | p.G_minus | p.G_two == G.full() and p.G_plus.isdisjoint(p.G_minus | p.G_two)
                    and p.G_minus.isdisjoint(p.G_two) for p in parts)
        log.check(G.name, valid and len(parts) == 1 << (G.n - len(two)) // 2, partitions=len(parts))


@suite('Prop-2.7a', 'positive-criterion', '正部分集合の判定と列挙が一致する', default_scope=8)
def _positive_criterion(log:CaseLog, scope:int, rng:Random) -> None:
    for G in group_fixtures(scope):
        plus = {p.G_plus for p in enumerate_positive_partitions(G)}
        for B in sample_subsets(rng, G.n, 256):
            log.check(G.name, is_positive_subset(G, B) == (B in plus), B=B)


@suite('Prop-2.7b', 'positive-chain', '正部分集合の三つの言い換えは同値', default_scope=8)
def _positive_chain(log:CaseLog, scope:int, rng:Random) -> None:
    for G in group_fixtures(scope):
        two = g_two(G)
        for B in sample_subsets(rng, G.n, 64):
            inv = inverse_set(G, B)
            first = is_positive_subset(G, B)
            second = B.isdisjoint(inv) and B | inv == two.complement()
            third = B.isdisjoint(two) and all((x in B) != (group_inverse(G, x) in B) for x in two.complement())
            log.check(G.name, first == second == third, B=B)


@suite('Thm-2.11', 'no-finite-positive-subsemigroup', '有限群に正部分半群はない', default_scope=8)
def _no_finite_positive_subsemigroup(log:CaseLog, scope:int, rng:Random) -> None:
    for G in group_fixtures(scope):
        for p in enumerate_positive_partitions(G):
            log.check(G.name, not is_positive_subsemigroup(G, p.G_plus), B=p.G_plus)


# ===== 直和表現 =====

@suite('Thm-3.5', 'semigroup-condition', 'E ≠ ∅ のとき 𝔹D ∪ B¹E が上B周期的 ⇔ BB ⊆ B')
def _semigroup_condition(log:CaseLog, scope:int, rng:Random) -> None:
    for X in fixtures(scope):
        subsets = list(sample_subsets(rng, X.n, 64))
        for BB in left_subgroups(X):
            e, star = _nontrivial(X, BB)
            Bs = [B for B in subsets_within(BB) if B and B.isdisjoint(_inverse_within(X, BB, e, B))]
            Es = [E for E in subsets if E and E.isdisjoint(X.product(star, E))]
            if not Bs or not Es:
                continue
            BDs = canonical_order({X.product(BB, D) for D in subsets})
            for _ in range(120):
                B, E, BD = rng.choice(Bs), rng.choice(Es), rng.choice(BDs)
                B1E = X.product(B.add(e), E)
                if not BD.isdisjoint(B1E):
                    continue
                A = BD | B1E
                ok = is_left_upper_periodic(X, A, B) == (X.product(B, B) <= B)
                log.check(X.name, ok, BB=BB, B=B, BD=BD, E=E)


@suite('Observation-3', 'representation-uniqueness', '反移動的なEと𝔹Dは集合から一意に決まる')
def _representation_uniqueness(log:CaseLog, scope:int, rng:Random) -> None:
    for X in fixtures(scope):
        subsets = list(sample_subsets(rng, X.n, 32))
        for BB in left_subgroups(X):
            e = group_identity(X, BB)
            Bs = [B for B in subsets_within(BB) if B and X.product(B, B) <= B and X.product(B, BB) == BB]
            Ds = {X.product(BB, D): D for D in reversed(subsets)}
            for B in Bs:
                found: dict[Subset, list[tuple[Subset, Subset]]] = {}
                for BD, D in Ds.items():
                    for E in subsets:
                        B1E = X.product(B.add(e), E) # type: ignore[arg-type]
                        if E.isdisjoint(X.product(B, E)) and BD.isdisjoint(B1E):
                            found.setdefault(BD | B1E, []).append((D, E))
                for A in canonical_order(found):
                    first = found[A][0]
                    for second in found[A]:
                        log.check(X.name, unique_representation_check(X, BB, B, first, second), BB=BB, B=B, A=A)


@suite('Lemma-2.8', 'transference-chain', 'H*∖B⁻¹ ⊆ B ⊆ H* なら A ∩ BA = ∅ の四つの言い換えは同値')
def _transference_chain(log:CaseLog, scope:int, rng:Random) -> None:
    for X in fixtures(scope):
        for H in left_subgroups(X):
            e, star = _nontrivial(X, H)
            Bs = [B for B in subsets_within(star) if star - _inverse_within(X, H, e, B) <= B]
            for B in rng.sample(Bs, min(len(Bs), 12)):
                B_inv = _inverse_within(X, H, e, B)
                for A in sample_subsets(rng, X.n, 16):
                    conditions = (
                        A.isdisjoint(X.product(B, A)),
                        A.isdisjoint(X.product(star, A)),
                        A.isdisjoint(X.product(B_inv, A)),
                        is_direct(X, H, A),
                    )
                    log.check(X.name, len(set(conditions)) == 1, H=H, B=B, A=A)


@suite('Thm-5.1', 'normal-factor-monoid', '左正規な因子部分群をもつ左簡約的な半群は単系')
def _normal_factor_monoid(log:CaseLog, scope:int, rng:Random) -> None:
    for X in fixtures(scope):
        for H in left_subgroups(X):
            if not is_left_factor_subgroup(X, H):
                continue
            try:
                report = check_normal_factor_monoid(X, right_transversal(X, H))
            except PreconditionFailed:
                continue
            log.check(X.name, report.is_two_sided and report.dual_direct and report.singleton, H=H)
    M2 = function_monoid(2)
    try:
        check_normal_factor_monoid(M2, right_transversal(M2, units(M2)))
        rejected = False
    except PreconditionFailed as error:
        rejected = error.which == 'left_cancellative'
    log.check(M2.name, rejected, U=units(M2))


# ===== 方程式 =====

@suite('Project-IV', 'solver-oracle', '方程式の解法と総当たりが一致する')
def _solver_oracle(log:CaseLog, scope:int, rng:Random) -> None:
    for X in fixtures(scope):
        every = list(all_subsets(X.n, force=True))
        for _ in range(6):
            B = random_subset(rng, X.n)
            A = X.product(B, random_subset(rng, X.n)) if rng.random() < 0.5 else random_subset(rng, X.n)
            BB, D = random_subset(rng, X.n), random_subset(rng, X.n)
            BD = X.product(BB, D)

            equation = [Y for Y in every if X.product(B, Y) == A]
            log.check(X.name, solve_equation(X, B, A) == equation, equation='BY = A', A=A, B=B)

            sigma = Subset.of(X.n, (x for x in range(X.n) if all(X.mul(b, x) in A for b in B)))
            log.check(X.name, summand(X, A, B) == sigma and solve_upper(X, B, A).count == 1 << len(sigma),
                      equation='BY ⊆ A', A=A, B=B)

            sandwich = canonical_order(Y for Y in every if X.product(B, Y) <= Y <= A)
            log.check(X.name, list(solve_sandwich(X, B, A).all or ()) == sandwich, equation='BY ⊆ Y ⊆ A', A=A, B=B)

            split = canonical_order(Y for Y in every
                                    if (BD | X.product(B, Y)).isdisjoint(Y) and BD | X.product(B, Y) | Y == A)
            log.check(X.name, list(solve_split(X, BB, B, D, A).solutions) == split,
                      equation='(𝔹D ∪ BY) ∪̇ Y = A', A=A, B=B, BB=BB, D=D)


@suite('Project-IV-ring', 'ring-ideals', 'ℤ_nのイデアルは dℤ_n', default_scope=8)
def _ring_ideals(log:CaseLog, scope:int, rng:Random) -> None:
    for n in range(1, scope + 1):
        log.check(f'Z{n}', ring_ideal_demo(n, force=True).agree, n=n)


# ===== 位相 =====

@suite('Thm-2.21a', 'topology-laws', 'Alexandrov位相の法則')
def _topology_laws(log:CaseLog, scope:int, rng:Random) -> None:
    for X in fixtures(scope):
        for B in sample_subsets(rng, X.n, 8):
            T = build_topology(X, B)
            opens = list(solve_sandwich(X, B, X.full()).all or ())
            if not opens:
                continue
            for _ in range(12):
                U, V = rng.choice(opens), rng.choice(opens)
                log.check(X.name, is_open(T, U | V) and is_open(T, U & V), law='alexandrov', B=B, U=U, V=V)
                Y = random_subset(rng, X.n)
                log.check(X.name, is_open(T, X.product(U, Y)), law='right_ideal', B=B, U=U, Y=Y)
            if B:
                G = build_topology(X, generate_subsemigroup(X, B))
                log.check(X.name, bool(np.array_equal(T.reach, G.reach)), law='generated', B=B)
            left_normal = all(X.product(Subset.singleton(X.n, x), B) <= X.left_orbit(B, x) for x in range(X.n))
            if left_normal:
                log.check(X.name, all(X.product(U, B) <= U for U in opens), law='left_in_right', B=B)
        for l in left_identities(X):
            T = build_topology(X, Subset.singleton(X.n, l))
            ok = all(is_open(T, A) for A in sample_subsets(rng, X.n, 32))
            log.check(X.name, ok, law='left_identity', l=X.label(l))


@suite('Thm-2.23a', 'topology-examples', 'ℤ_n, S3での位相の例')
def _topology_examples(log:CaseLog, scope:int, rng:Random) -> None:
    for n in range(1, 31):
        Z = by_name(f'Z{n}')
        log.check('Zn', count_opens(build_topology(Z, Z.subset(1 % n))) == 2, n=n)
    Z6 = by_name('Z6')
    B = Z6.subset(2)
    semigroup = is_topological_semigroup(Z6, B)
    group = is_topological_group(Z6, B)
    ok = count_opens(build_topology(Z6, B)) == 4 and semigroup.is_topological and group.is_topological_group
    log.check(Z6.name, ok, B=B)
    S3 = symmetric(3)
    B = S3.subset('e', '(12)')
    semigroup = is_topological_semigroup(S3, B)
    group = is_topological_group(S3, B)
    log.check(S3.name, not group.is_topological_group and not semigroup.continuity_minimal, B=B)


__all__ = ()
