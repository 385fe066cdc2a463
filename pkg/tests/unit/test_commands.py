import pytest

from charloci.cli import JobSpec
from charloci.commands import (Examples, Loci, Verify,
                               command_name_to_command_map,
                               create_command_from_job)
from charloci.examples import describe_examples
from charloci.exceptions import PreconditionFailed, UnknownExample


def test_every_command_is_mapped():
    assert sorted(command_name_to_command_map) == [
        'euler', 'examples', 'fiber', 'ic', 'loci', 'perversity', 'transform',
        'verify']
    for name, cls in command_name_to_command_map.items():
        assert cls.name == name


@pytest.mark.parametrize('job', [
    JobSpec('plot', examples=['constant_g1']),
    JobSpec('loci', examples=['constant_g1']),
    JobSpec('loci', examples=['constant_g1'], k=0, m=0),
    JobSpec('fiber', examples=['constant_g1']),
    JobSpec('euler'),
    JobSpec('euler', examples=['constant_g1', 'constant_g2']),
    JobSpec('ic', examples=['constant_g1']),
    JobSpec('transform', examples=['koszul_complex']),
    JobSpec('verify', examples=['constant_g1']),
    JobSpec('verify', examples=['constant_g1'], seed=1, samples=0),
    JobSpec('verify', examples=['constant_g1'], seed=1, suites=['fast']),
])
def test_refused_jobs(job):
    with pytest.raises(PreconditionFailed):
        create_command_from_job(job)


def test_unknown_example():
    with pytest.raises(UnknownExample):
        create_command_from_job(JobSpec('euler', examples=['nothing']))


def test_loci():
    command = create_command_from_job(JobSpec('loci', examples=['constant_g1'],
                                              k=0, m=1))
    report = command.execute()

    assert isinstance(command, Loci)
    assert (report['k'], report['m']) == (0, 1)
    assert [c['codim'] for c in report['components']] == [2]
    assert not command.failed(report)


def test_fiber_of_objects_has_twisted_cohomology():
    report = create_command_from_job(JobSpec(
        'fiber', examples=['twist_torsion'], point=[-1, 1])).execute()

    assert report['fiber'] == {-1: 1, 0: 2, 1: 1}
    assert report['twisted'] == report['fiber']


def test_fiber_of_complex():
    report = create_command_from_job(JobSpec(
        'fiber', examples=['koszul_complex'], point=[1, 1])).execute()

    assert 'twisted' not in report
    assert report['fiber'] == {-1: 1, 0: 2, 1: 1}


def test_ic_failure():
    command = create_command_from_job(JobSpec('ic',
                                              examples=['maximal_ideal']))

    assert command.failed(command.execute())


def test_verify_defaults_to_corpus():
    command = create_command_from_job(JobSpec('verify', seed=1))

    assert isinstance(command, Verify)
    assert [s.name for s in command.subjects] == \
        sorted(e['name'] for e in describe_examples())


def test_examples():
    command = create_command_from_job(JobSpec('examples'))

    assert isinstance(command, Examples)
    assert command.execute()['examples'] == describe_examples()
