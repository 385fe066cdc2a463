import json

import pytest

from charloci import conf
from charloci.cli import JobSpec, job_from_args, main, render, run


def test_job_from_args():
    job, verbose = job_from_args(['-v', '--order', 'lex', 'loci',
                                  '--example', 'constant_g1', '--k', '0'])

    assert verbose
    assert (job.command, job.examples, job.k, job.m) == \
        ('loci', ['constant_g1'], 0, 1)
    assert job.order == 'lex'


def test_verify_arguments():
    job, _ = job_from_args(['verify', '--suite', 'loci', '--suite', 'ic',
                            '--seed', '7', '--max-m', '2'])

    assert job.suites == ['loci', 'ic']
    assert (job.seed, job.samples, job.max_m) == (7, 50, 2)
    assert job_from_args(['verify'])[0].suites == ['all']


def test_point_argument():
    job, _ = job_from_args(['fiber', 'file.json', '--point', '1/2,-3'])

    assert job.inputs == ['file.json']
    assert [str(v) for v in job.point] == ['1/2', '-3']


@pytest.mark.parametrize('argv', [
    [],
    ['plot'],
    ['fiber', '--point', '0.5,1'],
    ['verify', '--suite', 'fast'],
    ['--field', 'c', 'euler'],
])
def test_invalid_arguments(argv):
    with pytest.raises(SystemExit):
        job_from_args(argv)


def test_run_euler():
    code, text = run(JobSpec('euler', examples=['skyscraper_rank3']))

    assert code == 0
    assert json.loads(text) == {'euler': 3}


def test_run_is_deterministic():
    job = JobSpec('loci', examples=['twist_nontorsion'], k=-1)

    assert run(job) == run(job)


def test_run_sets_configuration():
    run(JobSpec('euler', examples=['skyscraper_rank3'], order='lex',
                max_order=4))

    assert conf.MONOMIAL_ORDER == 'lex'
    assert conf.MAX_TORSION_ORDER == 4


@pytest.mark.parametrize('job, message', [
    (JobSpec('fiber', examples=['constant_g1']), 'needs --point'),
    (JobSpec('euler', examples=['nothing']), 'nothing'),
    (JobSpec('euler', inputs=['/nonexistent/file.json']), 'file.json'),
])
def test_run_input_errors(job, message):
    code, text = run(job)

    assert code == 1
    assert message in text


def test_run_reports_parse_position(tmpdir):
    path = tmpdir.join('broken.json')
    path.write('{"g": 1,\n "objects": [}')

    code, text = run(JobSpec('euler', inputs=[str(path)]))

    assert code == 1
    assert 'line 2' in text


def test_run_failed_verification():
    code, text = run(JobSpec('ic', examples=['maximal_ideal']))

    assert code == 2
    assert json.loads(text)['passed'] is False


def test_render_text():
    text = render({'k': 0, 'components': [{'codim': 2}], 'empty': []},
                  'text')

    assert text.splitlines() == ['components:', '  -', '    codim: 2',
                                 'empty: []', 'k: 0']


def test_main(capsys):
    assert main(['euler', '--example', 'skyscraper_rank3']) == 0
    out, err = capsys.readouterr()
    assert json.loads(out) == {'euler': 3}
    assert err == ''


def test_main_writes_errors_to_stderr(capsys):
    assert main(['euler', '--example', 'nothing']) == 1
    out, err = capsys.readouterr()
    assert out == ''
    assert 'nothing' in err
