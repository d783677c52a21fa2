"""Groebner-Shirshov bases for dialgebras over exact fields."""

from .composition import (Ambiguity, CompositionReport, MultComposition, check_gsb, complete,
                          composition_poly, inclusion_ambiguities, interreduce,
                          intersection_ambiguities, is_trivial, mult_compositions)
from .constructions import (LeibnizAlgebra, MultiplicationTable, SymmetricForm, bar_extension,
                            check_dialgebra_axioms, check_leibniz, clifford, free_product,
                            ideal_closure, leibniz_enveloping, pbw_dimension, suggest_i0)
from .core import (DASHV, VDASH, Alphabet, DiPoly, Diword, chain, compare, dashv, leading,
                   leibniz_bracket, letter, normedness, poly_product, product, vdash)
from .field import GF, QQ, PrimeField, RationalField
from .oracle import cross_check, degree_dims, enumerate_diwords, quotient_dim
from .rewrite import (Placement, Presentation, ReductionTrace, find_placements, irr_enumerate,
                      normal_form, replay, substitute)

__version__ = "0.1.0"
