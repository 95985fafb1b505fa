import pytest

import qcover.settings as settings
from qcover.family.family import Family
from qcover.gfq.field import make_field
from qcover.singular.extremal import construct_extremal_thm12
from qcover.subspace.subspace import span_of, standard_vector


@pytest.fixture(autouse=True)
def clean_settings():
    yield
    settings.clear_settings()


@pytest.fixture
def gf2():
    return make_field(2)


@pytest.fixture
def gf3():
    return make_field(3)


@pytest.fixture
def gf4():
    return make_field(4)


@pytest.fixture
def gf5():
    return make_field(5)


@pytest.fixture
def make_subspace():
    def _make_subspace(spec, rows):
        return span_of(spec, len(rows[0]), rows)

    return _make_subspace


@pytest.fixture
def make_point():
    def _make_point(spec, ambient, idx):
        return span_of(spec, ambient, [standard_vector(ambient, idx)])

    return _make_point


@pytest.fixture
def make_family(make_subspace):
    def _make_family(spec, members_rows):
        return Family([make_subspace(spec, rows) for rows in members_rows])

    return _make_family


@pytest.fixture
def fano_lines(gf2):
    """All 7 lines of the plane F_2^3."""
    return construct_extremal_thm12(gf2, 3, 2)


@pytest.fixture
def make_mock_family(mocker):
    def _make_mock_family(q, ambient, m, num_members):
        family = mocker.MagicMock()
        family.spec = make_field(q)
        family.ambient = ambient
        family.m = m
        family.__len__.return_value = num_members
        return family

    return _make_mock_family
