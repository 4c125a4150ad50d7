"""Iwahori-Weyl groups: lengths, words, Bruhat order, admissible sets.

Independent oracles: graph distance in the affine Cayley graph for lengths,
and subword products of fixed reduced words for Bruhat intervals.
"""

import itertools

import pytest

from parahoric.descriptors import build_descriptor, sl_datum, torus_datum
from parahoric.iwahori import IwahoriWeylGroup
from parahoric.linalg import identity, vec_dot
from parahoric.rootdata import (
    GaloisDescentDatum,
    ValidationError,
    relative_root_data,
    split_descent,
)


def make_group(name: str) -> IwahoriWeylGroup:
    return IwahoriWeylGroup(relative_root_data(build_descriptor(name)))


GL2 = make_group("gl2")
GL3 = make_group("gl3")
RES_RAM = make_group("res_gl2_ram2")
RES_UNRAM = make_group("res_gl2_unram2")


def tr(group, *coords):
    return group.translation(group.lattice.project(coords))


# -- lengths -------------------------------------------------------------------


def test_gl2_lengths():
    s = GL2.simple_reflection(0)
    assert GL2.length(s) == 1
    assert GL2.length(tr(GL2, 1, 0)) == 1
    assert GL2.length(tr(GL2, 1, 1)) == 0
    assert GL2.length(tr(GL2, 2, 0)) == 2
    assert GL2.length(tr(GL2, 1, -1)) == 2
    # omega generator: t^(1,0) s has length zero
    assert GL2.length(GL2.multiply(tr(GL2, 1, 0), s)) == 0


def test_dominant_translation_length_is_two_rho_pairing():
    for group, coords in [
        (GL3, (3, 1, 0)),
        (GL3, (2, 2, 1)),
        (RES_RAM, (2, 1, 0, 0)),
    ]:
        cls = group.lattice.project(coords)
        dom, _ = group.config.dominant_class(cls)
        expected = vec_dot(group.config.two_rho_fun, dom)
        assert group.length(group.translation(dom)) == expected


def cayley_distances(group, radius):
    """Graph distance from the identity, computed without the length formula."""
    e = group.identity_element()
    dist = {e: 0}
    frontier = [e]
    d = 0
    while frontier and d < radius:
        d += 1
        nxt = []
        for w in frontier:
            for node in group.affine_nodes:
                u = group.multiply(w, node.element)
                if u not in dist:
                    dist[u] = d
                    nxt.append(u)
        frontier = nxt
    return dist


@pytest.mark.parametrize("group", [GL2, GL3, RES_RAM, RES_UNRAM],
                         ids=["gl2", "gl3", "res_ram", "res_unram"])
def test_length_matches_cayley_distance(group):
    dist = cayley_distances(group, 4)
    for w, d in dist.items():
        assert group.length(w) == d


def test_ramified_restriction_matches_split_gl2():
    # the Iwahori-Weyl group of the ramified restriction is the one of GL_2
    for a, b in itertools.product(range(-2, 3), repeat=2):
        lr = RES_RAM.length(tr(RES_RAM, a, b, 0, 0))
        ls = GL2.length(tr(GL2, a, b))
        assert lr == ls


def test_length_antiautomorphism():
    for w in GL3.cayley_ball(GL3.omega_quotient.zero(), 3):
        assert GL3.length(GL3.inverse(w)) == GL3.length(w)


# -- words ----------------------------------------------------------------------


def test_reduced_words_roundtrip():
    for group in (GL2, GL3, RES_UNRAM):
        ball = group.cayley_ball(group.omega_quotient.zero(), 3)
        for w in ball:
            label, word = group.reduced_word(w)
            assert len(word) == group.length(w)
            assert group.from_word(label, word) == w


def test_words_are_deterministic():
    w = tr(GL3, 2, 1, 0)
    label1, word1 = GL3.reduced_word(w)
    GL3._word_cache.clear()
    label2, word2 = GL3.reduced_word(w)
    assert (label1, word1) == (label2, word2)


def test_no_descent_only_at_identity_label():
    assert GL2.right_descents(GL2.identity_element()) == ()
    s = GL2.simple_reflection(0)
    assert GL2.right_descents(s) == (0,)


# -- omega labels ------------------------------------------------------------------


def test_omega_label_homomorphism():
    pairs = [
        (tr(GL2, 1, 0), tr(GL2, 0, 1)),
        (tr(GL2, 2, 1), GL2.simple_reflection(0)),
        (tr(GL2, 1, 1), tr(GL2, 1, 0)),
    ]
    for a, b in pairs:
        lab = GL2.omega_label(GL2.multiply(a, b))
        expected = GL2.omega_quotient.add(GL2.omega_label(a), GL2.omega_label(b))
        assert lab == expected


def test_omega_reps_have_length_zero():
    for coords in [(1, 0), (0, 1), (2, 1), (3, 3)]:
        lab = GL2.omega_label(tr(GL2, *coords))
        rep = GL2.omega_rep(lab)
        assert GL2.length(rep) == 0
        assert GL2.omega_label(rep) == lab


def test_gl2_omega_group_is_z():
    assert GL2.omega_quotient.free_rank == 1
    assert GL2.omega_quotient.torsion == ()
    # kappa to pi_1 = Z distinguishes the two length-zero classes
    assert GL2.kappa(tr(GL2, 1, 0)) != GL2.kappa(GL2.identity_element())


def test_sl2_omega_trivial():
    sl2 = IwahoriWeylGroup(relative_root_data(split_descent(sl_datum(2), 3)))
    assert sl2.omega_quotient.class_len == 0
    # pgl2: omega = Z/2
    pgl2 = make_group("pgl2")
    assert pgl2.omega_quotient.torsion == (2,)


# -- Bruhat order --------------------------------------------------------------------


def subword_interval(group, w):
    """Oracle: all products of subwords of a fixed reduced word of w."""
    label, word = group.reduced_word(w)
    out = set()
    for mask in itertools.product((0, 1), repeat=len(word)):
        sub = tuple(letter for letter, keep in zip(word, mask) if keep)
        out.add(group.from_word(label, sub))
    return out


@pytest.mark.parametrize("group", [GL2, GL3, RES_RAM], ids=["gl2", "gl3", "res_ram"])
def test_bruhat_against_subword_oracle(group):
    ball = group.cayley_ball(group.omega_quotient.zero(), 3)
    for w in ball:
        if group.length(w) > 3:
            continue
        expected = subword_interval(group, w)
        got = {u for u in ball if group.bruhat_le(u, w)}
        assert got == expected


def test_bruhat_labels_separate():
    a = tr(GL2, 1, 0)
    b = tr(GL2, 2, 0)
    assert not GL2.bruhat_le(a, b)  # different omega labels
    assert GL2.bruhat_le(tr(GL2, 1, 1), b)


def test_bruhat_reflexive_antisymmetric():
    ball = list(GL3.cayley_ball(GL3.omega_quotient.zero(), 2))
    for w in ball:
        assert GL3.bruhat_le(w, w)
    for a in ball:
        for b in ball:
            if a != b and GL3.bruhat_le(a, b):
                assert not GL3.bruhat_le(b, a)


# -- admissible sets --------------------------------------------------------------------


def test_admissible_counts_minuscule():
    adm2 = GL2.admissible_set(GL2.lattice.project((1, 0)))
    assert len(adm2) == 3
    adm3 = GL3.admissible_set(GL3.lattice.project((1, 0, 0)))
    assert len(adm3) == 7


def test_admissible_set_contents_gl2():
    adm = GL2.admissible_set(GL2.lattice.project((1, 0)))
    assert tr(GL2, 1, 0) in adm
    assert tr(GL2, 0, 1) in adm
    omega = GL2.multiply(tr(GL2, 1, 0), GL2.simple_reflection(0))
    assert omega in adm
    assert GL2.identity_element() not in adm  # wrong omega label


def test_admissible_closed_under_bruhat():
    adm = GL3.admissible_set(GL3.lattice.project((1, 1, 0)))
    for w in adm:
        for u in GL3.cayley_ball(GL3.omega_label(w), GL3.length(w)):
            if GL3.bruhat_le(u, w):
                assert u in adm


def test_admissible_torus_is_singleton():
    torus = IwahoriWeylGroup(relative_root_data(split_descent(torus_datum(2), 3)))
    mu = torus.lattice.project((4, -1))
    assert torus.admissible_set(mu) == frozenset({torus.translation(mu)})


def test_admissible_ramified_matches_split():
    adm_res = RES_RAM.admissible_set(RES_RAM.lattice.project((1, 0, 0, 0)))
    adm_gl2 = GL2.admissible_set(GL2.lattice.project((1, 0)))
    assert len(adm_res) == len(adm_gl2)
    assert sorted(map(RES_RAM.length, adm_res)) == sorted(map(GL2.length, adm_gl2))


# -- parahoric pieces ---------------------------------------------------------------------


def test_finite_subgroup_sizes():
    assert len(GL2.finite_subgroup([0])) == 2
    assert len(GL3.finite_subgroup([0, 1])) == 6
    assert len(GL3.finite_subgroup([])) == 1
    # a non-finite facet: the whole affine diagram of SL_2
    sl2 = IwahoriWeylGroup(relative_root_data(split_descent(sl_datum(2), 3)))
    with pytest.raises(ValidationError):
        sl2.finite_subgroup([0, 1])


def test_max_double_coset_rep_gl2():
    t = tr(GL2, 1, 0)
    s = GL2.simple_reflection(0)
    rep = GL2.max_double_coset_rep([0], t)
    assert rep == GL2.multiply(s, t)
    assert GL2.length(rep) == 2
    # all four coset members reduce to the same maximal representative
    for x in (t, GL2.multiply(s, t), GL2.multiply(t, s), GL2.product(s, t, s)):
        assert GL2.max_double_coset_rep([0], x) == rep


def test_translation_invariance_enforced():
    with pytest.raises(ValidationError):
        RES_UNRAM.translation(RES_UNRAM.lattice.project((1, 0, 0, 0)))
    RES_UNRAM.translation(RES_UNRAM.lattice.project((1, 0, 1, 0)))


def test_norm_one_torus_group():
    descent = GaloisDescentDatum(torus_datum(1), [((-1,),)], identity(1), 3, 2, 1)
    grp = IwahoriWeylGroup(relative_root_data(descent))
    assert grp.affine_nodes == ()
    w = grp.translation((1,))
    assert grp.length(w) == 0
    assert grp.multiply(w, w) == grp.identity_element()
    assert grp.omega_label(w) == (1,)
