"""Exact combinatorics of parahoric Hecke algebra centers.

Iwahori-Weyl groups from based root data with Galois descent, admissible
sets, Bernstein bases of parahoric centers, and the test functions attached
to geometric cocharacter classes, all in exact arithmetic.
"""

from .cyclotomic import CycNum
from .descriptors import (build_descriptor, descriptor_names,
                          descent_from_toml, descent_to_toml, gl_datum,
                          gl_to_pgl_matrix, load_descriptor, pgl_datum,
                          sl_datum, torus_datum)
from .dualside import (MonomialOp, MonomialRep, box_frobenius_op,
                       box_induction, gamma_frobenius_op, gamma_induction,
                       highest_weight_rep, pairing_with_two_rho,
                       weight_multiplicities, weyl_character, weyl_dimension)
from .hecke import (AdjointTransport, Character, HeckeAlgebra, HeckeElement,
                    element_from_json, element_to_json)
from .iwahori import IwahoriWeylGroup, WeylElement
from .laurent import Laurent
from .rootdata import (BasedRootDatum, GaloisDescentDatum,
                       UnsupportedCaseError, ValidationError,
                       relative_root_data, split_descent, weil_restrict)
from .testfn import (TestFunctionContext, normalize_and_check_integrality,
                     sample_characters, semisimple_by_invariants,
                     semisimple_test_function, support_in_admissible,
                     test_function)

__version__ = "0.1.0"

__all__ = [
    "AdjointTransport",
    "BasedRootDatum",
    "Character",
    "CycNum",
    "GaloisDescentDatum",
    "HeckeAlgebra",
    "HeckeElement",
    "IwahoriWeylGroup",
    "Laurent",
    "MonomialOp",
    "MonomialRep",
    "TestFunctionContext",
    "UnsupportedCaseError",
    "ValidationError",
    "WeylElement",
    "box_frobenius_op",
    "box_induction",
    "build_descriptor",
    "descent_from_toml",
    "descent_to_toml",
    "descriptor_names",
    "element_from_json",
    "element_to_json",
    "gamma_frobenius_op",
    "gamma_induction",
    "gl_datum",
    "gl_to_pgl_matrix",
    "highest_weight_rep",
    "load_descriptor",
    "normalize_and_check_integrality",
    "pairing_with_two_rho",
    "pgl_datum",
    "relative_root_data",
    "sample_characters",
    "semisimple_by_invariants",
    "semisimple_test_function",
    "sl_datum",
    "split_descent",
    "support_in_admissible",
    "test_function",
    "torus_datum",
    "weight_multiplicities",
    "weil_restrict",
    "weyl_character",
    "weyl_dimension",
]
