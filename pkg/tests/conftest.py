import pytest

from holescope.coeffs import make_family
from holescope.growth import clear_table_cache


@pytest.fixture(autouse=True)
def fresh_tables():
    clear_table_cache()
    yield
    clear_table_cache()


@pytest.fixture
def gef():
    return make_family('gef')


@pytest.fixture
def gaussian_decay():
    return make_family('gaussian_decay', c=1.0)


@pytest.fixture
def mittag_leffler():
    return make_family('mittag_leffler', alpha=1.0)


@pytest.fixture
def exp_exp():
    return make_family('exp_exp')


@pytest.fixture
def builtin_models(gef, gaussian_decay, mittag_leffler, exp_exp):
    return [gef, gaussian_decay, mittag_leffler, exp_exp]


@pytest.fixture
def many_threads(monkeypatch):
    """Lift the worker cap so requested thread counts are honoured."""
    monkeypatch.setenv('HOLESCOPE_THREADS', '16')
