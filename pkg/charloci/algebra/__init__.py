"""
Exact commutative algebra over the rationals: polynomials, Gröbner bases of
ideals and submodules, syzygies, ideal arithmetic, dimension and finitely
presented modules.
"""
from charloci.algebra.ring import PolyRing  # NOQA
from charloci.algebra.poly import Poly, parse_poly, format_poly  # NOQA
from charloci.algebra.matrix import PolyMatrix, rational_rank  # NOQA
from charloci.algebra.groebner import (groebner_basis, module_groebner_basis,  # NOQA
                                       normal_form, syzygies, lift,
                                       minimal_generators, GroebnerBasis)
from charloci.algebra.ideal import (Ideal, EMPTY, INF, ideal_sum,  # NOQA
                                    ideal_product, intersection, quotient,
                                    saturation, radical_membership,
                                    krull_dimension, codimension,
                                    minors_ideal, leading_term_ideal)
from charloci.algebra.modules import (FPModule, free_resolution,  # NOQA
                                      hom_module, dual_module, isomorphic,
                                      subquotient)
