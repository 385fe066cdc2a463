"""
The bundled corpus: example files shipped in ``charloci/data``. Each file
carries an ``expect`` block that the verification suites check.
"""
import os

from charloci.exceptions import UnknownExample
from charloci.serialization import file_kind, from_json, load

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data')


def bundled_examples():
    """ Return dict mapping example name to file path. """
    return dict((name[:-len('.json')], os.path.join(DATA_DIR, name))
                for name in sorted(os.listdir(DATA_DIR))
                if name.endswith('.json'))


def example_path(name):
    try:
        return bundled_examples()[name]
    except KeyError:
        raise UnknownExample('No bundled example {0!r}.'.format(name))


def load_example(name):
    """ Return tuple (value, expect, description) of a bundled example. """
    data = load(example_path(name))
    return from_json(data), data.get('expect', {}), data.get('description')


def describe_examples():
    """ Return list of dicts with name, kind and description per example.
    """
    result = []
    for name, path in sorted(bundled_examples().items()):
        data = load(path)
        result.append({'name': name, 'kind': file_kind(data),
                       'description': data.get('description', '')})
    return result
