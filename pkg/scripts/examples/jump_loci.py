#!/usr/bin/env python
# scripts/examples/jump_loci.py
import logging
from argparse import ArgumentParser

from charloci import conf
from charloci.loci import jump_locus, locus_report
from charloci.serialization import dumps
from charloci.torus import CharacterTorus
from charloci.transform import LocalSystemObject, mellin_transform
from charloci.utils import log_to_stream

# Add stream handler to logger 'charloci'.
log_to_stream(level=logging.DEBUG)

# Spread independent computations over 2 threads.
conf.THREADS = 2

parser = ArgumentParser()
parser.add_argument('--monodromy', default='-1',
                    help='Monodromy along the first loop, a rational p/q.')
parser.add_argument('-k', type=int, default=-1)
args = parser.parse_args()

# Rank one local system on an elliptic curve, shifted to be perverse.
curve = CharacterTorus(1)
system = LocalSystemObject(curve, 1, [[1, 0], [0, 1]],
                           [[[args.monodromy]], [[1]]], shift=1)

complex_ = mellin_transform(system)
locus = jump_locus(complex_, args.k, 1, curve)

print(dumps(locus_report(locus)))
