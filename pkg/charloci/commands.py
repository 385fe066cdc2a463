"""
Commands of the command line tool.

Every command is a subclass of :class:`Command` registered in
:data:`command_name_to_command_map`. A command is created from a job with
:meth:`Command.create_from_job`, which loads and checks the inputs, and
:meth:`Command.execute` returns a report: a dict that
:func:`charloci.serialization.dumps` turns into JSON.

Inputs are given as file paths or names of bundled examples. Each input is
one of three kinds:

    ========= ==================================================
    Kind      Commands
    ========= ==================================================
    objects   transform, fiber, loci, perversity, euler, verify
    complex   fiber, loci, perversity, euler, verify
    module    ic, verify
    ========= ==================================================

"""
from charloci import log
from charloci.complexes import derived_fiber, euler_characteristic
from charloci.examples import describe_examples, load_example
from charloci.exceptions import PreconditionFailed
from charloci.intersection import ICInput, ic_verify
from charloci.loci import jump_locus, locus_report
from charloci.perversity import perversity_report
from charloci.serialization import complex_to_json, from_json, load
from charloci.verification import SUITES, Settings, Subject, run_suites

TRANSFORM = 'transform'
FIBER = 'fiber'
LOCI = 'loci'
PERVERSITY = 'perversity'
IC = 'ic'
EULER = 'euler'
VERIFY = 'verify'
EXAMPLES = 'examples'


def load_subjects(job):
    """ Return list of :class:`charloci.verification.Subject`, one per input
    path and bundled example named in the job.
    """
    subjects = []
    for path in job.inputs:
        data = load(path)
        subjects.append(Subject(path, from_json(data),
                                data.get('expect', {})))
    for name in job.examples:
        value, expect, _ = load_example(name)
        subjects.append(Subject(name, value, expect))
    return subjects


def create_command_from_job(job):
    """ Return command instance for a job.

    :param job: :class:`charloci.cli.JobSpec`.
    :raises PreconditionFailed: When the command is unknown.
    """
    try:
        command_class = command_name_to_command_map[job.command]
    except KeyError:
        raise PreconditionFailed('Unknown command {0!r}.'.format(job.command))

    return command_class.create_from_job(job)


class Command(object):
    name = None
    kinds = ()
    single_input = True

    subject = None

    @classmethod
    def create_from_job(cls, job):
        """ Create instance from a job, loading its input.

        :raises PreconditionFailed: When the number or kind of inputs does
            not suit the command.
        """
        instance = cls()
        instance.job = job
        subjects = load_subjects(job)
        if cls.single_input and len(subjects) != 1:
            raise PreconditionFailed('{0} needs exactly one input, got {1}.'
                                     .format(cls.name, len(subjects)))
        for subject in subjects:
            if subject.kind not in cls.kinds:
                raise PreconditionFailed('{0} does not accept {1} input {2}.'
                                         .format(cls.name, subject.kind,
                                                 subject.name))
        instance.subjects = subjects
        if subjects:
            instance.subject = subjects[0]
        return instance

    def execute(self):
        raise NotImplementedError

    def failed(self, report):
        """ Whether the report records a failed verification. """
        return False


class Transform(Command):
    """ Compute the transform of an object file as a complex over the
    character torus.
    """
    name = TRANSFORM
    kinds = ('objects',)

    def execute(self):
        complex_ = self.subject.complex
        return {'complex': complex_to_json(complex_),
                'euler': euler_characteristic(complex_)}


class Fiber(Command):
    """ Compute the derived fiber at a character, and for object files also
    the twisted cohomology computed without the transform.
    """
    name = FIBER
    kinds = ('objects', 'complex')

    @classmethod
    def create_from_job(cls, job):
        if job.point is None:
            raise PreconditionFailed('fiber needs --point.')
        return super(Fiber, cls).create_from_job(job)

    def execute(self):
        point = self.subject.torus.point(self.job.point)
        report = {'point': point,
                  'fiber': derived_fiber(self.subject.complex, point)}
        if self.subject.kind == 'objects':
            report['twisted'] = self.subject.value.twisted_cohomology(point)
        return report


class Loci(Command):
    """ Compute the jump locus ``S_m^k`` and decompose its components into
    translated subtori.
    """
    name = LOCI
    kinds = ('objects', 'complex')

    @classmethod
    def create_from_job(cls, job):
        if job.k is None:
            raise PreconditionFailed('loci needs --k.')
        if job.m < 1:
            raise PreconditionFailed('Multiplicity must be 1 or larger.')
        return super(Loci, cls).create_from_job(job)

    def execute(self):
        locus = jump_locus(self.subject.complex, self.job.k, self.job.m,
                           self.subject.torus)
        return locus_report(locus)


class Perversity(Command):
    name = PERVERSITY
    kinds = ('objects', 'complex')

    def execute(self):
        g = self.subject.torus.g if self.subject.kind == 'objects' else None
        return perversity_report(self.subject.complex, self.subject.torus, g)


class IntersectionComplex(Command):
    """ Build and verify the intersection complex of a reflexive module. """
    name = IC
    kinds = ('module',)

    def execute(self):
        value = self.subject.value
        return ic_verify(ICInput(value.module, value.torus_mode),
                         self.job.ell_override, value.torsion)

    def failed(self, report):
        return not report['passed']


class Euler(Command):
    name = EULER
    kinds = ('objects', 'complex')

    def execute(self):
        return {'euler': euler_characteristic(self.subject.complex)}


class Verify(Command):
    """ Run verification suites on the inputs, by default on the whole
    bundled corpus.
    """
    name = VERIFY
    kinds = ('objects', 'complex', 'module')
    single_input = False

    @classmethod
    def create_from_job(cls, job):
        if job.seed is None:
            raise PreconditionFailed('verify needs --seed.')
        if job.samples < 1:
            raise PreconditionFailed('Need at least one sample.')
        unknown = [s for s in job.suites if s != 'all' and s not in SUITES]
        if unknown:
            raise PreconditionFailed('Unknown suite(s): {0}.'
                                     .format(', '.join(unknown)))

        if not job.inputs and not job.examples:
            job = job.with_examples(sorted(
                e['name'] for e in describe_examples()))
        return super(Verify, cls).create_from_job(job)

    def execute(self):
        settings = Settings(samples=self.job.samples, seed=self.job.seed,
                            max_m=self.job.max_m,
                            exchange_size=self.job.exchange_size)
        failures = run_suites(self.subjects, self.job.suites, settings)
        log.debug('Verification found {0} failure(s).'.format(len(failures)))
        return {
            'suites': list(self.job.suites),
            'inputs': [s.name for s in self.subjects],
            'seed': self.job.seed,
            'samples': self.job.samples,
            'failures': [f._asdict() for f in failures],
            'passed': not failures,
        }

    def failed(self, report):
        return not report['passed']


class Examples(Command):
    """ List the bundled corpus. """
    name = EXAMPLES
    kinds = ()
    single_input = False

    def execute(self):
        return {'examples': describe_examples()}


command_name_to_command_map = {
    TRANSFORM: Transform,
    FIBER: Fiber,
    LOCI: Loci,
    PERVERSITY: Perversity,
    IC: IntersectionComplex,
    EULER: Euler,
    VERIFY: Verify,
    EXAMPLES: Examples,
}
