"""Dual-group representations: multiplicities, characters, induced traces.

Independent oracles: the Weyl character formula evaluated by exact alternant
division (against the Freudenthal recursion), the Weyl dimension formula, and
affine translation lengths (against the pairing with 2 rho).
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parahoric.cyclotomic import CycNum
from parahoric.descriptors import build_descriptor, gl_datum, sl_datum
from parahoric.dualside import (
    MonomialRep,
    average_trace,
    box_frobenius_op,
    box_induction,
    gamma_frobenius_op,
    gamma_induction,
    highest_weight_rep,
    invariant_dimension,
    pairing_with_two_rho,
    weight_multiplicities,
    weyl_character,
    weyl_dimension,
)
from parahoric.iwahori import IwahoriWeylGroup
from parahoric.rootdata import UnsupportedCaseError, ValidationError, relative_root_data


def rat(x):
    return CycNum.rational(Fraction(x))


# -- weight multiplicities ---------------------------------------------------------


def test_standard_representation_gl2():
    assert weight_multiplicities(gl_datum(2), (1, 0)) == {(1, 0): 1, (0, 1): 1}


def test_adjoint_gl3_zero_weight_has_multiplicity_two():
    mult = weight_multiplicities(gl_datum(3), (1, 0, -1))
    assert mult[(0, 0, 0)] == 2
    assert sum(mult.values()) == 8
    assert all(m == 1 for w, m in mult.items() if w != (0, 0, 0))


def test_minuscule_weights_have_multiplicity_one():
    for datum, mu, dim in [
        (gl_datum(3), (1, 0, 0), 3),
        (gl_datum(4), (1, 1, 0, 0), 6),
        (gl_datum(4), (1, 0, 0, 0), 4),
    ]:
        mult = weight_multiplicities(datum, mu)
        assert set(mult.values()) == {1}
        assert len(mult) == dim


def test_weight_sets_are_weyl_stable():
    datum = gl_datum(3)
    mult = weight_multiplicities(datum, (2, 1, 0))
    for w, m in mult.items():
        for orbit_member in datum.coweight_orbit(w):
            assert mult[orbit_member] == m


def test_nondominant_highest_weight_rejected():
    with pytest.raises(ValidationError):
        weight_multiplicities(gl_datum(2), (0, 1))


# -- oracles ----------------------------------------------------------------------------


def test_freudenthal_matches_weyl_character_division():
    cases = [
        (gl_datum(2), (1, 0)),
        (gl_datum(2), (3, 1)),
        (gl_datum(3), (1, 0, -1)),
        (gl_datum(3), (2, 1, 0)),
        (gl_datum(3), (3, 1, 0)),
        (gl_datum(4), (1, 1, 0, 0)),
        (sl_datum(2), (2,)),
        (sl_datum(3), (1, 1)),
    ]
    for datum, mu in cases:
        assert weight_multiplicities(datum, mu) == weyl_character(datum, mu)


def test_dimension_matches_weyl_dimension_formula():
    for datum, mu in [
        (gl_datum(2), (4, 0)),
        (gl_datum(3), (2, 1, 0)),
        (gl_datum(4), (2, 1, 1, 0)),
        (sl_datum(2), (3,)),
    ]:
        assert sum(weight_multiplicities(datum, mu).values()) == weyl_dimension(datum, mu)


@settings(deadline=None, max_examples=20)
@given(st.tuples(st.integers(0, 3), st.integers(0, 3)))
def test_freudenthal_matches_character_on_random_gl2_weights(steps):
    a, b = steps
    mu = (a + b, b)
    assert weight_multiplicities(gl_datum(2), mu) == weyl_character(gl_datum(2), mu)


# -- monomial operators ---------------------------------------------------------------------


def test_torus_operator_gives_character_values():
    rep = highest_weight_rep(gl_datum(2), (1, 0))
    assert rep.character_value([rat(2), rat(3)]) == 5
    assert rep.character_value([rat(Fraction(1, 2)), rat(3)]) == Fraction(7, 2)


def test_weight_permutation_requires_stable_multiset():
    rep = MonomialRep([(1, 0), (0, 1)])
    swap = rep.weight_permutation_op(((0, 1), (1, 0)))
    assert swap.perm == (1, 0)
    with pytest.raises(UnsupportedCaseError):
        rep.weight_permutation_op(((1, 1), (0, 1)))


def test_operator_composition_order():
    rep = MonomialRep([(1, 0), (0, 1)])
    swap = rep.weight_permutation_op(((0, 1), (1, 0)))
    t = rep.torus_op([rat(2), rat(5)])
    # (t after swap)(e_0) = t(e_1) = 5 e_1
    composed = rep.compose(t, swap)
    assert composed.perm[0] == 1
    assert composed.diag[0] == 5


# -- induced representations --------------------------------------------------------------------


def test_box_induction_dimension_and_weights():
    base = highest_weight_rep(gl_datum(2), (1, 0))
    box = box_induction(base, 3)
    assert box.dim == 8
    assert box.rank == 6
    assert box.multiplicity((1, 0, 1, 0, 1, 0)) == 1


def test_box_trace_identity_two_blocks():
    # tr(Frobenius o torus | tensor induction) = base character of the product
    base = highest_weight_rep(gl_datum(2), (1, 0))
    box = box_induction(base, 2)
    frob = box_frobenius_op(base, 2)
    samples = [
        (rat(2), rat(3), rat(5), rat(7)),
        (rat(1), CycNum.zeta(4), rat(-2), rat(Fraction(1, 3))),
    ]
    for a, b, c, d in samples:
        lhs = box.trace(box.compose(frob, box.torus_op([a, b, c, d])))
        assert lhs == base.character_value([a * c, b * d])


def test_box_trace_identity_three_blocks():
    base = highest_weight_rep(gl_datum(2), (1, 0))
    box = box_induction(base, 3)
    frob = box_frobenius_op(base, 3)
    vals = [rat(2), rat(3), rat(5), rat(7), rat(11), rat(13)]
    lhs = box.trace(box.compose(frob, box.torus_op(vals)))
    assert lhs == base.character_value([rat(2 * 5 * 11), rat(3 * 7 * 13)])


def test_box_frobenius_square_is_pointwise_product():
    base = highest_weight_rep(gl_datum(2), (1, 0))
    box = box_induction(base, 2)
    frob = box_frobenius_op(base, 2)
    frob2 = box.compose(frob, frob)
    assert frob2.perm == box.identity_op().perm
    vals = [rat(2), rat(3), rat(5), rat(7)]
    lhs = box.trace(box.compose(frob2, box.torus_op(vals)))
    assert lhs == base.character_value([rat(2), rat(3)]) * base.character_value(
        [rat(5), rat(7)]
    )


def test_box_frobenius_matches_restriction_frobenius_matrix():
    descent = build_descriptor("res_gl2_unram2")
    base = highest_weight_rep(gl_datum(2), (1, 0))
    box = box_induction(base, 2)
    frob = box_frobenius_op(base, 2)
    assert box.operator_maps_weights_by(frob, descent.frobenius)


def test_gamma_induction_dimension_and_vanishing_trace():
    base = highest_weight_rep(gl_datum(3), (1, 0, 0))
    box = box_induction(base, 2)
    gam = gamma_induction(base, 2)
    assert box.dim == 9
    assert gam.dim == 6
    vals = [rat(x) for x in (2, 3, 5, 7, 11, 13)]
    rot = gamma_frobenius_op(base, 2)
    assert gam.trace(gam.compose(rot, gam.torus_op(vals))) == 0
    frob = box_frobenius_op(base, 2)
    assert box.trace(box.compose(frob, box.torus_op(vals))) != 0


# -- averaging -------------------------------------------------------------------------------------


def test_invariant_dimension_under_weight_swap():
    rep = MonomialRep([(1,), (-1,)])
    swap = rep.weight_permutation_op(((-1,),))
    assert invariant_dimension(rep, [rep.identity_op(), swap]) == 1
    twisted = average_trace(rep, [rep.identity_op(), swap], rep.torus_op([rat(3)]))
    # (3 + 1/3)/2 + 0 from the swap
    assert twisted == Fraction(5, 3)


# -- parity --------------------------------------------------------------------------------------------


def test_pairing_with_two_rho_matches_split_translation_length():
    group = IwahoriWeylGroup(relative_root_data(build_descriptor("gl3")))
    datum = gl_datum(3)
    for mu in [(1, 0, 0), (1, 1, 0), (2, 1, 0), (3, 1, 1)]:
        assert pairing_with_two_rho(datum, mu) == group.length(group.translation(mu))


def test_parity_is_orbit_invariant():
    datum = gl_datum(3)
    for mu in [(1, 0, 0), (2, 1, 0)]:
        base = pairing_with_two_rho(datum, mu) % 2
        for w in datum.coweight_orbit(mu):
            assert pairing_with_two_rho(datum, w) % 2 == base
