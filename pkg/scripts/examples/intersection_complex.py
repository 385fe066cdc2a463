#!/usr/bin/env python
# scripts/examples/intersection_complex.py
from charloci.algebra.matrix import PolyMatrix
from charloci.algebra.modules import FPModule
from charloci.algebra.poly import parse_poly
from charloci.algebra.ring import PolyRing
from charloci.intersection import ICInput, ell, ic_verify
from charloci.serialization import dumps

ring = PolyRing(['t1', 't2', 't3', 't4'], 'grevlex')
column = [[parse_poly(v, ring)] for v in ring.var_names]

# Cokernel of R -> R^4, a reflexive module that is not free.
module = FPModule(ring, 4, PolyMatrix(ring, 4, 1, column))

print('Intersection complex is F_{0}.'.format(ell(ring.num_vars)))
print(dumps(ic_verify(ICInput(module), reconstruction=True)))
