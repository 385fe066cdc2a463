import pytest

from charloci import conf
from charloci.config import Config
from charloci.algebra.ring import PolyRing
from charloci.algebra.poly import parse_poly
from charloci.torus import CharacterTorus


@pytest.fixture(autouse=True)
def restore_config(request):
    """ Restore global configuration after every test. """
    saved = dict((name, getattr(conf, name)) for name in
                 ['THREADS', 'MONOMIAL_ORDER', 'MEMOIZE',
                  'SUPPORT_CERTIFICATE', 'MAX_TORSION_ORDER'])

    def fin():
        for name, value in saved.items():
            setattr(conf, name, value)

    request.addfinalizer(fin)


@pytest.fixture
def config():
    return Config()


@pytest.fixture
def ring():
    return PolyRing(['x', 'y', 'z'], 'grevlex')


@pytest.fixture
def plane():
    return PolyRing(['x', 'y'], 'grevlex')


@pytest.fixture
def p(ring):
    """ Return parser of polynomials in `ring`. """
    return lambda text: parse_poly(text, ring)


@pytest.fixture
def curve():
    """ Character torus of an elliptic curve. """
    return CharacterTorus(1)


@pytest.fixture
def surface():
    return CharacterTorus(2)
