from fractions import Fraction

import pytest

from periodica import (
    ExactReal, IntervalCell, InvalidRealSet, PointCell, RayInterval, RayKind, UnitPeriodicRealSet, intersects,
    meets_modulo_one,
)


HALF = Fraction(1, 2)


def test_interval_cells():
    cell = IntervalCell(5, 6, False, True)
    assert str(cell) == '(5, 6]'
    assert not cell.contains(ExactReal(5)) and cell.contains(ExactReal(6))
    assert cell.length == 1
    assert cell.midpoint() == Fraction(11, 2)
    assert cell.shift(-5) == IntervalCell(0, 1, False, True)
    with pytest.raises(InvalidRealSet):
        IntervalCell(1, 1)

def test_intersections():
    assert not intersects(IntervalCell(0, 1), IntervalCell(1, 2))
    assert intersects(IntervalCell(0, 1, True, True), IntervalCell(1, 2))
    assert intersects(PointCell(HALF), IntervalCell(0, 1))
    assert meets_modulo_one(PointCell(HALF), PointCell(Fraction(5, 2)))
    assert not meets_modulo_one(PointCell(0), PointCell(HALF))
    assert meets_modulo_one(IntervalCell(5, 6, False, True), PointCell(0))


def test_cells_are_sorted():
    A = UnitPeriodicRealSet.of_points(D=[HALF, 0])
    assert A.D_points == (0, HALF)
    assert A.points_only and not A.E

@pytest.mark.parametrize('D, E, part', [
    ((PointCell(1),), (), 'D'),
    ((IntervalCell(HALF, 1, True, True),), (), 'D'),
    ((IntervalCell(0, HALF), PointCell(Fraction(1, 4))), (), 'D'),
    ((), (IntervalCell(5, 7),), 'E'),
    ((), (IntervalCell(5, 6, True, True),), 'E'),
    ((), (PointCell(0), PointCell(1)), 'E'),
    ((PointCell(0),), (PointCell(0),), 'E'),
    ((PointCell(HALF),), (IntervalCell(0, 1, False, False),), 'E'),
])
def test_invalid_sets(D, E, part):
    with pytest.raises(InvalidRealSet) as error:
        UnitPeriodicRealSet(D, E)
    assert error.value.details['part'] == part


def test_json():
    A = UnitPeriodicRealSet.from_file('ray5_open.json')
    assert A.E == (IntervalCell(5, 6, False, True),)
    assert A.to_json() == {'D': [], 'E': [{'lo': {'q': '5'}, 'hi': {'q': '6'}, 'lo_closed': False, 'hi_closed': True}]}
    assert UnitPeriodicRealSet.from_json(A.to_json()) == A
    assert UnitPeriodicRealSet.from_file('half_integers.json').D_points == (0, HALF)
    assert UnitPeriodicRealSet.from_file('integers_and_sqrt2.json').E_points == (ExactReal.sqrt(2),)
    mirrored = UnitPeriodicRealSet.of_points(D=[0], mirrored=True)
    assert mirrored.to_json()['mirrored'] is True
    assert str(mirrored).startswith('−')

@pytest.mark.parametrize('obj', [[], {'D': [{'point': 'abc'}]}, {'D': [{'foo': 1}]}, {'E': [{'lo': 0}]}])
def test_json_invalid(obj):
    with pytest.raises(InvalidRealSet):
        UnitPeriodicRealSet.from_json(obj)

def test_broken_file(tmp_path):
    path = tmp_path / 'broken.json'
    path.write_text('{"D": [', encoding='UTF-8')
    with pytest.raises(InvalidRealSet):
        UnitPeriodicRealSet.from_file(str(path))


def test_rays():
    five = ExactReal(5)
    assert RayInterval(RayKind.CLOSED_RAY, five).contains(five)
    assert not RayInterval(RayKind.OPEN_RAY, five).contains(five)
    assert RayInterval(RayKind.OPEN_RAY, five).contains(ExactReal.parse('5 + sqrt(2)/100'))
    assert RayInterval(RayKind.ALL_REALS).contains(ExactReal(-100))
    assert not RayInterval(RayKind.EMPTY).contains(five)
    assert RayInterval(RayKind.OPEN_RAY, five).to_dict() == {'kind': 'OpenRay', 'lo': '5'}
