"""Central test functions from dual-side trace data, exactly.

A monomial representation of the dual group together with a monomial lift of
Frobenius determines a central element of the parahoric Hecke algebra: the one
whose scalar on every unramified principal series equals the twisted trace of
the lift.  Only slots fixed by the permutation part contribute; the fixed slot
j with weight class nu adds its diagonal entry to a coefficient A_nu, and the
element is sum over dominant classes of A_nu z_nu once the coefficients are
checked to be constant on Weyl orbits.

The semisimple variant averages over all lifts of Frobenius through the image
of inertia.  An independent route computes the same element from the trace of
Frobenius on the inertia invariants, slot orbit by slot orbit; the two must
agree coefficient by coefficient.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd
from typing import Dict, List, NamedTuple, Sequence, Tuple

from .cyclotomic import CycNum
from .dualside import MonomialOp, MonomialRep, highest_weight_rep
from .hecke import Character, HeckeAlgebra, HeckeElement
from .iwahori import WeylElement
from .laurent import Laurent
from .linalg import Vec, mat_vec
from .rootdata import UnsupportedCaseError, ValidationError


class TestFunctionContext:
    """A Hecke algebra together with the Galois data behind its root system."""

    def __init__(self, algebra: HeckeAlgebra):
        self.algebra = algebra
        self.group = algebra.group
        self.cfg = algebra.group.config
        self.descent = self.cfg.descent
        self.datum = self.descent.datum

    # -- representations of the dual group ----------------------------------------

    def box_rep(self, mu_full: Sequence[int]) -> MonomialRep:
        """Irreducible with highest weight mu_full on the full (product) datum.

        For a restricted group the full datum is a product of copies, so this
        is the outer tensor product of the factor representations.
        """
        return highest_weight_rep(self.datum, mu_full)

    def gamma_rep(self, weight: Sequence[int]) -> MonomialRep:
        """Permutation representation on the Galois orbit of a single weight."""
        orbit = {tuple(weight)}
        frontier = [tuple(weight)]
        mats = self.descent.full_elements()
        while frontier:
            cur = frontier.pop()
            for g in mats:
                img = mat_vec(g, cur)
                if img not in orbit:
                    orbit.add(img)
                    frontier.append(img)
        return MonomialRep(sorted(orbit))

    # -- monomial lifts of the Galois action ----------------------------------------

    def frobenius_op(self, rep: MonomialRep) -> MonomialOp:
        return rep.weight_permutation_op(self.descent.frobenius)

    def inertia_ops(self, rep: MonomialRep) -> Tuple[MonomialOp, ...]:
        return tuple(
            rep.weight_permutation_op(g) for g in self.descent.inertia_elements()
        )

    def frobenius_lifts(self, rep: MonomialRep) -> Tuple[MonomialOp, ...]:
        """The Frobenius coset of the inertia image, one operator per element."""
        frob = self.frobenius_op(rep)
        return tuple(rep.compose(frob, g) for g in self.inertia_ops(rep))


def _perm_is_identity(op: MonomialOp) -> bool:
    return all(p == j for j, p in enumerate(op.perm))


def _repeated_weight_guard(rep: MonomialRep, ops: Sequence[MonomialOp]) -> None:
    # with a repeated weight the slot matching behind a nontrivial permutation
    # is a choice, and fixed-slot sums would depend on it
    if all(_perm_is_identity(op) for op in ops):
        return
    if any(rep.multiplicity(w) > 1 for w in rep.weights):
        raise UnsupportedCaseError(
            "repeated weight under a nontrivial Galois permutation"
        )


def fixed_slot_coefficients(ctx: TestFunctionContext, rep: MonomialRep,
                            op: MonomialOp) -> Dict[Vec, CycNum]:
    """A_nu = sum of diagonal entries over op-fixed slots with weight class nu."""
    _repeated_weight_guard(rep, [op])
    lat = ctx.group.lattice
    coeffs: Dict[Vec, CycNum] = {}
    for j, w in enumerate(rep.weights):
        if op.perm[j] != j:
            continue
        c = lat.project(w)
        if not ctx.cfg.is_frobenius_fixed(c):
            raise ValidationError("fixed slot carries a non-rational weight class")
        cur = coeffs.get(c, CycNum.rational(0))
        coeffs[c] = cur + CycNum.coerce(op.diag[j])
    return coeffs


def _scalar_to_laurent(x: CycNum) -> Laurent:
    if x.is_rational():
        f = x.as_fraction()
        return Laurent.const(int(f) if f.denominator == 1 else f)
    return Laurent.const(x)


def assemble_central_element(ctx: TestFunctionContext,
                             coeffs: Dict[Vec, CycNum]) -> HeckeElement:
    """sum of A_nu z_nu, requiring A to be constant on Weyl orbits of classes."""
    alg = ctx.algebra
    cfg = ctx.cfg
    zero = CycNum.rational(0)
    orbits: Dict[Vec, Dict[Vec, CycNum]] = {}
    for c, a in coeffs.items():
        dom, _ = cfg.dominant_class(c)
        orbits.setdefault(dom, {})[c] = a
    out = alg.zero()
    for dom in sorted(orbits):
        got = orbits[dom]
        orbit = sorted({cfg.weyl_apply(u, dom) for u in cfg.weyl_elements})
        ref = got.get(orbit[0], zero)
        for mu in orbit:
            if got.get(mu, zero) != ref:
                raise ValidationError("dual trace is not Weyl-symmetric")
        if ref == 0:
            continue
        out = alg.add(out, alg.scale(_scalar_to_laurent(ref), alg.z_element(dom)))
    return out


def test_function(ctx: TestFunctionContext, rep: MonomialRep,
                  op: MonomialOp) -> HeckeElement:
    """The central element attached to one monomial lift of Frobenius."""
    return assemble_central_element(ctx, fixed_slot_coefficients(ctx, rep, op))


def dual_trace(ctx: TestFunctionContext, rep: MonomialRep, op: MonomialOp,
               chi: Character) -> CycNum:
    """Twisted trace of the lift: the expected scalar of the test function at chi."""
    lat = ctx.group.lattice
    total = CycNum.rational(0)
    for j, w in enumerate(rep.weights):
        if op.perm[j] == j:
            total = total + chi(lat.project(w)) * CycNum.coerce(op.diag[j])
    return total


# -- semisimple test functions ---------------------------------------------------------


def semisimple_test_function(ctx: TestFunctionContext,
                             rep: MonomialRep) -> HeckeElement:
    """Average of the test functions over all lifts of Frobenius."""
    lifts = ctx.frobenius_lifts(rep)
    alg = ctx.algebra
    total = alg.zero()
    for op in lifts:
        total = alg.add(total, test_function(ctx, rep, op))
    return HeckeElement(total.support, total.den * Laurent.const(len(lifts)))


def semisimple_by_invariants(ctx: TestFunctionContext,
                             rep: MonomialRep) -> HeckeElement:
    """Independent route: Frobenius trace on inertia invariants, by slot orbit.

    Requires inertia to act by bare permutations; each Frobenius-stable slot
    orbit O contributes (1/|O|) sum over O of the Frobenius diagonal to the
    coefficient of its (constant) weight class.
    """
    ops = ctx.inertia_ops(rep)
    for op in ops:
        if any(not (d == 1) for d in op.diag):
            raise UnsupportedCaseError(
                "inertia acts with nontrivial scalars on the weight basis"
            )
    frob = ctx.frobenius_op(rep)
    _repeated_weight_guard(rep, list(ops) + [frob])
    parent = list(range(rep.dim))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for op in ops:
        for j, p in enumerate(op.perm):
            parent[find(j)] = find(p)
    orbits: Dict[int, List[int]] = {}
    for j in range(rep.dim):
        orbits.setdefault(find(j), []).append(j)
    lat = ctx.group.lattice
    coeffs: Dict[Vec, CycNum] = {}
    for slots in orbits.values():
        if {frob.perm[j] for j in slots} != set(slots):
            continue
        classes = {lat.project(rep.weights[j]) for j in slots}
        if len(classes) != 1:
            raise ValidationError("slot orbit with a non-constant weight class")
        nu = classes.pop()
        total = CycNum.rational(0)
        for j in slots:
            total = total + CycNum.coerce(frob.diag[j])
        share = total * CycNum.rational(Fraction(1, len(slots)))
        coeffs[nu] = coeffs.get(nu, CycNum.rational(0)) + share
    return assemble_central_element(ctx, coeffs)


# -- support and integrality checks ------------------------------------------------


def support_in_admissible(ctx: TestFunctionContext, h: HeckeElement,
                          mu_full: Sequence[int]) -> Tuple[bool, Tuple[WeylElement, ...]]:
    """Whether every support element is admissible for the class of mu_full."""
    adm = ctx.group.admissible_set(ctx.group.lattice.project(mu_full))
    extra = tuple(
        w for w in sorted(h.support, key=ctx.group.reduced_word) if w not in adm
    )
    return (not extra, extra)


class IntegralityReport(NamedTuple):
    ok: bool
    values: Dict[WeylElement, Dict[int, int]]
    failures: Tuple[WeylElement, ...]


def normalize_and_check_integrality(alg: HeckeAlgebra, h: HeckeElement,
                                    twist: int) -> IntegralityReport:
    """Pass h to the unnormalized basis, multiply by v^twist, and test Z[q]-ness.

    The coefficient on the characteristic function of the w cell is
    c_w v^(twist - L(w)) / den; all of them must be polynomials in q = v^2
    with integer coefficients.
    """
    values: Dict[WeylElement, Dict[int, int]] = {}
    failures: List[WeylElement] = []
    for w in sorted(h.support, key=alg.group.reduced_word):
        shifted = h.support[w] * Laurent.gen(twist - alg.length_param(w))
        poly = shifted.exact_div(h.den)
        if poly is None or not poly.in_z_of_q():
            failures.append(w)
            continue
        values[w] = poly.eval_at_q()
    return IntegralityReport(not failures, values, tuple(failures))


# -- unramified characters --------------------------------------------------------------


def sample_characters(group, count: int, seed: int) -> List[Character]:
    """Deterministic exact characters: rational on the free part, roots of
    unity on the torsion part."""
    rng = random.Random(seed)
    lat = group.lattice
    out = []
    nonzero = [x for x in range(-9, 10) if x != 0]
    for _ in range(count):
        free = [Fraction(rng.choice(nonzero), rng.randint(1, 9))
                for _ in group._inv_basis]
        tors = [CycNum.zeta(d, rng.randrange(d)) for d in lat.torsion]
        out.append(Character(group, free, tors))
    return out


# -- unramified base change bookkeeping ----------------------------------------------


def reduce_unramified_base(deg_group: int, deg_base: int) -> Tuple[int, int]:
    """Composite of unramified degrees: the product of an unramified degree-a
    extension with a degree-b base splits into gcd(a, b) factors of degree
    lcm(a, b).  Returns (number of factors, common degree)."""
    g = gcd(deg_group, deg_base)
    return g, deg_group * deg_base // g

def unramified_base_change_cycles(blocks: int, power: int
                                  ) -> Tuple[Tuple[int, ...], ...]:
    """Orbits of j -> j + power on Z/blocks: the block structure after passing
    to the degree-power unramified subextension."""
    seen = set()
    cycles = []
    for start in range(blocks):
        if start in seen:
            continue
        cur = start
        cyc = []
        while cur not in seen:
            seen.add(cur)
            cyc.append(cur)
            cur = (cur + power) % blocks
        cycles.append(tuple(cyc))
    return tuple(cycles)
