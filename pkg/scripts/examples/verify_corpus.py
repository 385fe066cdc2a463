#!/usr/bin/env python
# scripts/examples/verify_corpus.py
import sys

from charloci.examples import bundled_examples, load_example
from charloci.exceptions import VerificationFailed
from charloci.verification import Settings, Subject, run_suites

subjects = [Subject(name, *load_example(name)[:2])
            for name in sorted(bundled_examples())]

try:
    run_suites(subjects, ['expect', 'structure'], Settings(seed=7),
               raise_on_failure=True)
except VerificationFailed as e:
    for failure in e.failures:
        print('{0}: {1} ({2})'.format(failure.operation, failure.claim,
                                      failure.inputs))
    sys.exit(2)

print('{0} examples verified.'.format(len(subjects)))
