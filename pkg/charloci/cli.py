"""
Command line interface.

.. code-block:: console

    $ charloci loci --example constant_g1 --k 1 --m 1
    $ charloci verify --suite base-change --samples 50 --seed 7
    $ charloci euler --example skyscraper_rank3

Reports go to standard output as JSON (``--output json``, the default) or as
indented text. Exit codes:

    ==== ============================================
    Code Meaning
    ==== ============================================
    0    Success.
    1    Input error, the message goes to stderr.
    2    Verification found a failed check.
    ==== ============================================

"""
import argparse
import logging
import sys

from charloci import conf, log
from charloci.commands import (command_name_to_command_map,
                               create_command_from_job, VERIFY)
from charloci.exceptions import CharLociError
from charloci.serialization import dumps, encode
from charloci.utils import log_to_stream, to_fraction
from charloci.verification import SUITES


class JobSpec(object):
    """ A single invocation of the tool.

    :param command: Name of the command.
    :param inputs: Paths of input files.
    :param examples: Names of bundled examples used as inputs.
    :param k: Degree for loci.
    :param m: Multiplicity for loci.
    :param point: Character for fiber, list of rationals.
    :param samples: Number of sample points per check.
    :param seed: Seed of every random choice.
    :param max_m: Largest multiplicity checked by the loci suite.
    :param max_order: Largest order of roots of unity counted as torsion.
    :param ell_override: Odd `l` for the intersection complex.
    :param suites: Names of verification suites.
    :param exchange_size: Number of random complexes of the exchange suite.
    :param output: 'json' or 'text'.
    :param order: Monomial order, 'grevlex' or 'lex'.
    """
    def __init__(self, command, inputs=(), examples=(), k=None, m=1,
                 point=None, samples=50, seed=None, max_m=3, max_order=None,
                 ell_override=None, suites=('all',), exchange_size=20,
                 output='json', order=None):
        self.command = command
        self.inputs = list(inputs)
        self.examples = list(examples)
        self.k = k
        self.m = m
        self.point = point
        self.samples = samples
        self.seed = seed
        self.max_m = max_m
        self.max_order = max_order
        self.ell_override = ell_override
        self.suites = list(suites)
        self.exchange_size = exchange_size
        self.output = output
        self.order = order

    def with_examples(self, examples):
        job = JobSpec(self.command)
        job.__dict__.update(self.__dict__)
        job.examples = list(examples)
        return job

    def __repr__(self):
        return 'JobSpec({0!r})'.format(self.command)


def _point(text):
    try:
        return [to_fraction(v) for v in text.split(',')]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError('{0!r} is not a list of rationals '
                                         'p/q.'.format(text))


def build_parser():
    parser = argparse.ArgumentParser(
        prog='charloci',
        description='Exact jump loci, transforms, perversity and '
                    'intersection complexes on character tori.')
    parser.add_argument('--verbose', '-v', action='store_true',
                        help='Log debug messages to stderr.')
    parser.add_argument('--output', choices=['json', 'text'], default='json')
    parser.add_argument('--order', choices=['grevlex', 'lex'])
    parser.add_argument('--field', choices=['q'], default='q',
                        help='Coefficient field; only the rationals.')

    commands = parser.add_subparsers(dest='command')
    for name in sorted(command_name_to_command_map):
        sub = commands.add_parser(name)
        sub.add_argument('inputs', nargs='*', metavar='FILE')
        sub.add_argument('--example', action='append', default=[],
                         dest='examples', metavar='NAME')
        if name == 'loci':
            sub.add_argument('--k', type=int)
            sub.add_argument('--m', type=int, default=1)
        if name == 'fiber':
            sub.add_argument('--point', type=_point,
                             help='Comma separated rationals.')
        if name == 'ic':
            sub.add_argument('--ell', type=int, dest='ell_override')
        if name == VERIFY:
            sub.add_argument('--suite', action='append', dest='suites',
                             choices=list(SUITES) + ['all'])
            sub.add_argument('--samples', type=int, default=50)
            sub.add_argument('--seed', type=int)
            sub.add_argument('--max-m', type=int, default=3)
            sub.add_argument('--max-order', type=int)
            sub.add_argument('--exchange-size', type=int, default=20)
    return parser


def job_from_args(argv=None):
    """ Return tuple (:class:`JobSpec`, verbose flag) from command line
    arguments.
    """
    args = build_parser().parse_args(argv)
    if args.command is None:
        build_parser().error('a command is required')

    values = vars(args)
    verbose = values.pop('verbose')
    values.pop('field')
    if values.get('suites') is None:
        values.pop('suites', None)
    return JobSpec(**values), verbose


def render(report, output='json'):
    """ Return report as JSON or indented text. """
    if output == 'json':
        return dumps(report)
    return '\n'.join(_text_lines(encode(report), 0))


def _text_lines(value, depth):
    indent = '  ' * depth
    if isinstance(value, dict):
        for key in sorted(value):
            item = value[key]
            if isinstance(item, (dict, list)) and item:
                yield '{0}{1}:'.format(indent, key)
                for line in _text_lines(item, depth + 1):
                    yield line
            else:
                yield '{0}{1}: {2}'.format(indent, key, item)
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                yield '{0}-'.format(indent)
                for line in _text_lines(item, depth + 1):
                    yield line
            else:
                yield '{0}- {1}'.format(indent, item)
    else:
        yield '{0}{1}'.format(indent, value)


def run(job):
    """ Run a job.

    :param job: :class:`JobSpec`.
    :return: Tuple (exit code, report text or error message).
    """
    if job.order is not None:
        conf.MONOMIAL_ORDER = job.order
    if job.max_order is not None:
        conf.MAX_TORSION_ORDER = job.max_order

    try:
        command = create_command_from_job(job)
        report = command.execute()
    except CharLociError as e:
        log.debug('{0} failed: {1}'.format(job.command, e))
        return e.exit_code, str(e)
    except (IOError, OSError, ValueError) as e:
        return 1, str(e)

    code = 2 if command.failed(report) else 0
    return code, render(report, job.output)


def main(argv=None):
    job, verbose = job_from_args(argv)
    if verbose:
        log_to_stream(level=logging.DEBUG)

    try:
        code, text = run(job)
    except Exception:
        log.exception('Unexpected error while running {0!r}.'.format(job))
        raise

    stream = sys.stderr if code == 1 else sys.stdout
    stream.write(text + '\n')
    return code
