import pytest

from periodica import FiniteMagma, by_name, function_monoid, symmetric


@pytest.fixture
def z6() -> FiniteMagma:
    return by_name('Z6')

@pytest.fixture
def m2() -> FiniteMagma:
    "e, s, c1, c2"
    return function_monoid(2)

@pytest.fixture
def s3() -> FiniteMagma:
    return symmetric(3)


@pytest.fixture(autouse=True)
def _small_limits(monkeypatch):
    monkeypatch.setenv('PERIODICA_WORKERS', '2')
