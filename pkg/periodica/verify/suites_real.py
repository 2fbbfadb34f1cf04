"""
単位周期的な実数集合についてのスイート。集合は無作為に作り、閉じた式と集合の定義を標本点で突き合わせる。
"""

from fractions import Fraction
from random import Random
import logging

from ..realline import (
    ExactReal, IntervalCell, PointCell, RayInterval, RayKind, RealClass, UnitPeriodicRealSet, classify_real,
    coc, concentration_check, construct_mixed, finite_cell_impossibility, is_semigroup, is_subgroup, membership, pf,
    pk, projections, rescale, sample_points, semigroup_check, st,
)
from .._util import Clash, InvalidRealSet, NotUpperPeriodic
from .registry import suite
from .report import CaseLog


_LOG = logging.getLogger(__name__)

KERNEL_SAMPLES = 100
KERNEL_RADIUS = 10

_GRID = sorted({Fraction(k, q) for q in (1, 2, 3, 4, 6) for k in range(q)})
_IRRATIONALS = (ExactReal.sqrt(2) - 1, 2 - ExactReal.sqrt(2))
_LENGTHS = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1))
_SCALES = tuple(map(Fraction, ('2', '1/2', '3', '-1', '-2', '1/3', '3/2', '2/3', '-1/2')))


def _base(rng:Random) -> ExactReal:
    if rng.random() < 0.15:
        return rng.choice(_IRRATIONALS)
    return ExactReal(rng.choice(_GRID))

def _multiples(m:int) -> list[Fraction]:
    return [Fraction(j, m) for j in range(m)]


def _random_points(rng:Random) -> UnitPeriodicRealSet:
    "点セルだけの集合。三割ほどは (1/m)ℤ₊⁰ をずらした形にする"
    for _ in range(50):
        m = rng.choice((1, 2, 3, 4, 6))
        if rng.random() < 0.3:
            s = rng.randint(-1, 1)
            return UnitPeriodicRealSet.of_points((), [s + f for f in _multiples(m)])
        r = rng.random()
        if r < 0.3:
            D: list[Fraction] = []
        elif r < 0.7:
            D = _multiples(m)
        else:
            D = rng.sample(_multiples(m), rng.randint(1, m))
        E = [_base(rng) + rng.randint(-2, 2) for _ in range(rng.randint(0, 2))]
        try:
            return UnitPeriodicRealSet.of_points(D, E)
        except InvalidRealSet:
            continue
    return UnitPeriodicRealSet.of_points([0])


def _random_cells(rng:Random) -> UnitPeriodicRealSet:
    "区間セルを含む集合"
    for _ in range(50):
        D = []
        if rng.random() < 0.6:
            lo, hi = sorted(rng.sample(_GRID + [Fraction(1)], 2))
            D.append(IntervalCell(lo, hi, rng.random() < 0.5, hi < 1 and rng.random() < 0.5))
        E = []
        for _ in range(rng.randint(0, 2)):
            lo = _base(rng) + rng.randint(-2, 2)
            if rng.random() < 0.3:
                E.append(PointCell(lo))
            else:
                E.append(IntervalCell(lo, lo + rng.choice(_LENGTHS), rng.random() < 0.5, rng.random() < 0.5))
        try:
            return UnitPeriodicRealSet(tuple(D), tuple(E))
        except InvalidRealSet:
            continue
    return UnitPeriodicRealSet((IntervalCell(0, Fraction(1, 2)),))


def _random_set(rng:Random, points:bool) -> tuple[str, UnitPeriodicRealSet]:
    return ('points', _random_points(rng)) if points else ('cells', _random_cells(rng))


def _bound(A:UnitPeriodicRealSet) -> int:
    return max((abs(end).floor() + 1 for c in A.D + A.E for end in c.bounds[:2]), default=0)


@suite('Lemma-4.2', 'real-kernel-formulas', '周期核・周期自由部分・始集合の閉じた式と集合の定義が一致する')
def _real_kernel_formulas(log:CaseLog, scope:int, rng:Random) -> None:
    R = KERNEL_RADIUS
    for i in range(KERNEL_SAMPLES):
        fixture, A = _random_set(rng, i % 2 == 0)
        kernel, free, starts = pk(A), pf(A), st(A)
        W = 2 * _bound(A) + R + 2
        for b in sample_points(A, radius=0):
            # b + k ∈ A となる整数kを一度に求めておく
            hits = {k for k in range(-(R + W), R + W + 1) if membership(A, b + k)}
            for k in range(-R, R + 1):
                x = b + k
                by_definition = all(k + j in hits for j in range(-W, W + 1))
                starts_here = k in hits and not any(k - j in hits for j in range(1, W + 1))
                ok = (membership(kernel, x) == by_definition
                      and membership(free, x) == (k in hits and not by_definition)
                      and any(c.contains(x) for c in starts) == starts_here)
                log.check(fixture, ok, A=str(A), x=str(x))


@suite('Thm-4.6', 'real-concentration', 'Cocの境界で標本点が集まり、すぐ外では集まらない')
def _real_concentration(log:CaseLog, scope:int, rng:Random) -> None:
    for i in range(60):
        fixture, A = _random_set(rng, i % 2 == 0)
        report = concentration_check(A)
        edge = report.below_fails is None if report.coc.kind is RayKind.ALL_REALS else report.below_fails
        log.check(fixture, report.boundary_ok and bool(edge), A=str(A))
    opened = UnitPeriodicRealSet((), (IntervalCell(5, 6, False, True),))
    closed = UnitPeriodicRealSet((), (IntervalCell(5, 6, True, False),))
    log.check('rays', coc(opened) == RayInterval(RayKind.OPEN_RAY, ExactReal(5)), A=str(opened))
    log.check('rays', coc(closed) == RayInterval(RayKind.CLOSED_RAY, ExactReal(5)), A=str(closed))


@suite('Thm-4.10', 'real-semigroup-dual', '符号つきの半群の判定と窓の中の和の判定が一致する')
def _real_semigroup_dual(log:CaseLog, scope:int, rng:Random) -> None:
    for _ in range(60):
        A = _random_points(rng)
        report = semigroup_check(A)
        log.check('points', report.signed == report.oracle, A=str(A), discrepancies=report.discrepancies)


@suite('Thm-4.14', 'real-known-semigroups', '半整数や無理数を含む既知の例')
def _real_known_semigroups(log:CaseLog, scope:int, rng:Random) -> None:
    half = Fraction(1, 2)
    sqrt2 = ExactReal.sqrt(2)
    known = (
        ('half-integers',        UnitPeriodicRealSet.of_points([0, half]),             True,  True,  RealClass.FIRST),
        ('thirds',               UnitPeriodicRealSet.of_points(_multiples(3)),         True,  True,  RealClass.FIRST),
        ('half-naturals',        UnitPeriodicRealSet.of_points((), [0, half]),         True,  False, RealClass.SECOND),
        ('from-one-by-halves',   UnitPeriodicRealSet.of_points((), [1, 1 + half]),     True,  False, RealClass.SECOND),
        ('from-minus-one',       UnitPeriodicRealSet.of_points((), [-1]),              False, False, RealClass.SECOND),
        ('from-sqrt2',           UnitPeriodicRealSet.of_points((), [sqrt2]),           False, False, RealClass.SECOND),
        ('integers-and-sqrt2',   UnitPeriodicRealSet.of_points([0], [sqrt2]),          False, False, RealClass.THIRD),
    )
    for name, A, semigroup, subgroup, cls in known:
        ok = is_semigroup(A) == semigroup and is_subgroup(A) == subgroup and classify_real(A) is cls
        log.check(name, ok, A=str(A))
    try:
        construct_mixed(known[0][1], known[2][1])
        clashed = False
    except Clash:
        clashed = True
    log.check('mixed', clashed, H1=str(known[0][1]), H2=str(known[2][1]))


@suite('Cor-4.21', 'real-finite-cell-impossibility', '有限個の点セルからなる第三類の半群はない')
def _real_finite_cell_impossibility(log:CaseLog, scope:int, rng:Random) -> None:
    report = finite_cell_impossibility()
    log.check('finite-cells', report.checked > 0 and not report.third_class, checked=report.checked,
              found=[str(A) for A in report.third_class])


@suite('Lemma-4.2d', 'real-projection-periodicity', 'x + 1 の射影は生成元が同じでずれが1増える')
def _real_projection_periodicity(log:CaseLog, scope:int, rng:Random) -> None:
    for i in range(40):
        fixture, A = _random_set(rng, i % 2 == 0)
        for x in sample_points(A, radius=3):
            if not membership(A, x):
                continue
            P, Q = projections(A, x), projections(A, x + 1)
            ok = (P.generator + P.shift == x and Q.part is P.part and Q.generator == P.generator
                  and Q.shift == P.shift + 1)
            log.check(fixture, ok, A=str(A), x=str(x))


def _rescalable(rng:Random) -> tuple[UnitPeriodicRealSet, Fraction]:
    "b + A ⊆ A を満たす(A, b)"
    m = rng.choice((1, 2, 3, 4))
    b = Fraction(rng.randint(1, 2 * m), m) * rng.choice((1, -1))
    s = rng.randint(-1, 1)
    match rng.choice(('periodic', 'free', 'mixed')):
        case 'periodic':
            A = UnitPeriodicRealSet.of_points(_multiples(m))
        case 'free':
            A = UnitPeriodicRealSet.of_points((), [s + f for f in _multiples(m)])
        case _:
            A = UnitPeriodicRealSet.of_points(_multiples(m), [s + f + Fraction(1, 2 * m) for f in _multiples(m)])
    return A, b

@suite('Example-2.15', 'real-rescale-conjugation', 'x ∈ (1/b)A ⇔ bx ∈ A')
def _real_rescale_conjugation(log:CaseLog, scope:int, rng:Random) -> None:
    for i in range(60):
        if i % 2 == 0:
            A, b = _rescalable(rng)
            fixture = 'rescalable'
        else:
            A, b = _random_points(rng), rng.choice(_SCALES)
            fixture = 'points'
        try:
            R = rescale(A, b)
        except NotUpperPeriodic:
            continue
        for x in sample_points(R, radius=3):
            log.check(fixture, membership(R, x) == membership(A, x * b), A=str(A), b=str(b), x=str(x))


__all__ = ()
