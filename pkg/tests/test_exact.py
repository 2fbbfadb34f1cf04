from fractions import Fraction

from hypothesis import given, strategies as st
import pytest

from periodica import (
    ExactReal, Ordering, PeriodicaError, PrecisionExhausted, ZeroModulus, exact_compare, floor_b, frac_b,
)
from periodica.realline import exact


SQRT2 = ExactReal.sqrt(2)


def test_normal_form():
    assert ExactReal.sqrt(8) == 2 * SQRT2
    assert ExactReal.sqrt(4) == 2 and ExactReal.sqrt(4).is_rational
    assert SQRT2 * SQRT2 == 2
    assert SQRT2 * ExactReal.sqrt(3) == ExactReal.sqrt(6)
    assert (SQRT2 - SQRT2).terms == ()
    assert ExactReal(0, {2: 1, 3: 0}) == SQRT2

def test_compare_and_floor():
    assert SQRT2 < Fraction(3, 2)
    assert exact_compare(SQRT2, Fraction(3, 2)) is Ordering.LT
    assert exact_compare(ExactReal.sqrt(8), 2 * SQRT2) is Ordering.EQ
    assert exact_compare(ExactReal.sqrt(3), SQRT2) is Ordering.GT
    assert SQRT2.floor() == 1
    assert SQRT2.frac() == SQRT2 - 1
    assert (-SQRT2).floor() == -2
    assert abs(-SQRT2) == SQRT2

def test_sign_of_tiny_difference():
    # どちらも√2に近い分数
    assert (SQRT2 - Fraction(99, 70)).sign() == -1
    assert (Fraction(577, 408) - SQRT2).sign() == 1

def test_division():
    assert SQRT2 / 2 == ExactReal.parse('sqrt(2)/2')
    with pytest.raises(ZeroDivisionError):
        SQRT2 / 0
    with pytest.raises(TypeError):
        SQRT2 / SQRT2

def test_sign_precision_limit(monkeypatch):
    monkeypatch.setattr(exact, 'MAX_PREC', exact.START_PREC // 2)
    value = SQRT2 - Fraction(7, 5)
    with pytest.raises(PrecisionExhausted) as info:
        value.sign()
    assert isinstance(info.value, PeriodicaError)
    assert info.value.to_dict()['error'] == 'PrecisionExhausted'
    assert info.value.details['precision'] == exact.START_PREC // 2
    assert ExactReal(Fraction(7, 5)).sign() == 1


@pytest.mark.parametrize('text, expected', [
    ('3/2',          ExactReal(Fraction(3, 2))),
    ('-7',           ExactReal(-7)),
    ('0.25',         ExactReal(Fraction(1, 4))),
    ('sqrt(2)',      SQRT2),
    ('√2',           SQRT2),
    ('1 - sqrt(3)/2', 1 - ExactReal.sqrt(3) / 2),
    ('1/2*sqrt(5)',  ExactReal.sqrt(5) / 2),
    ('2sqrt(2) + 1', 2 * SQRT2 + 1),
])
def test_parse(text, expected):
    assert ExactReal.parse(text) == expected

@pytest.mark.parametrize('text', ['', 'abc', '1 +', 'sqrt(-2)', '2 ** 3'])
def test_parse_invalid(text):
    with pytest.raises(ValueError):
        ExactReal.parse(text)

def test_text_forms():
    value = ExactReal.parse('1 - sqrt(3)/2')
    assert str(value) == '1 - 1/2*sqrt(3)'
    assert str(SQRT2) == 'sqrt(2)' and str(-SQRT2) == '-sqrt(2)'
    assert str(ExactReal()) == '0'
    assert value.to_num() == {'q': '1', 'roots': {'3': '-1/2'}}
    assert ExactReal.from_json(value.to_num()) == value
    assert ExactReal.from_json({'q': '1/2', 'roots': {'2': '1'}}) == SQRT2 + Fraction(1, 2)
    assert ExactReal.from_json(0.5) == Fraction(1, 2)
    with pytest.raises(ValueError):
        ExactReal.from_json(True)


def test_floor_modulo_b():
    assert floor_b(Fraction(7, 2), 2) == 2
    assert frac_b(Fraction(7, 2), 2) == Fraction(3, 2)
    assert floor_b(Fraction(-1, 2), Fraction(1, 3)) == Fraction(-2, 3)
    assert frac_b(SQRT2, Fraction(1, 2)) == SQRT2 - 1
    with pytest.raises(ZeroModulus):
        floor_b(SQRT2, 0)


_RATIONALS = st.fractions(min_value=-50, max_value=50, max_denominator=30)

@st.composite
def _reals(draw):
    terms = {m: draw(st.integers(min_value=-6, max_value=6)) for m in draw(st.sets(st.sampled_from([2, 3, 5, 7]), max_size=2))}
    return ExactReal(draw(_RATIONALS), terms)

@given(_reals(), _reals())
def test_ordering_agrees_with_float(x, y):
    if abs(float(x) - float(y)) > 1e-6:
        assert (x < y) == (float(x) < float(y))
    assert (x < y) + (y < x) + (x == y) == 1

@given(_reals())
def test_floor_laws(x):
    k = x.floor()
    assert ExactReal(k) <= x < k + 1
    assert 0 <= x.frac() < 1
    assert (x + 3).floor() == k + 3
