import json

import pytest

from charloci import conf
from charloci.cli import JobSpec, run


@pytest.fixture(autouse=True)
def restore_config(request):
    saved = conf.MONOMIAL_ORDER, conf.MAX_TORSION_ORDER

    def fin():
        conf.MONOMIAL_ORDER, conf.MAX_TORSION_ORDER = saved

    request.addfinalizer(fin)


@pytest.fixture
def charloci():
    """ Return function that runs a command and returns tuple (exit code,
    decoded JSON report).
    """
    def inner(command, *examples, **params):
        code, text = run(JobSpec(command, examples=examples, **params))
        assert code != 1, text
        return code, json.loads(text)

    return inner


@pytest.fixture
def verify(charloci):
    """ Return function that runs verification suites on examples with seed
    7 and returns the report.
    """
    def inner(suite, *examples, **params):
        params.setdefault('seed', 7)
        return charloci('verify', *examples, suites=[suite], **params)

    return inner
