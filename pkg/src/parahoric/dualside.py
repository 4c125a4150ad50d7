"""Representations of the dual group, as weight multisets with monomial operators.

The dual group swaps characters and cocharacters, so its weights are
cocharacter vectors of the original datum and its positive roots are the
positive coroots.  A representation is stored as an ordered list of weight
slots (one per multiplicity); every operator we need (torus elements, block
permutations coming from a Galois action, cyclic shifts of a tensor product)
is monomial in that basis, so traces are sums over fixed slots and stay exact.

Weight multiplicities come from the Freudenthal recursion with the invariant
form B(x, y) = sum over positive roots of <alpha, x><alpha, y>; the Weyl
character formula, evaluated by exact alternant division, serves as an
independent oracle.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from .cyclotomic import CycNum
from .linalg import Vec, frac_solve, freeze, mat_vec, transpose, vec_add, vec_sub
from .rootdata import BasedRootDatum, UnsupportedCaseError, ValidationError


class MonomialOp(NamedTuple):
    """e_j -> diag[j] * e_perm[j]."""

    perm: Tuple[int, ...]
    diag: Tuple[CycNum, ...]


class MonomialRep:
    """A vector space with one weight vector per basis slot."""

    def __init__(self, weights: Sequence[Sequence[int]]):
        self.weights: Tuple[Vec, ...] = tuple(tuple(w) for w in weights)
        if not self.weights:
            raise ValidationError("representation needs at least one slot")
        n = len(self.weights[0])
        if any(len(w) != n for w in self.weights):
            raise ValidationError("weight coordinate lengths differ")
        self.rank = n

    @property
    def dim(self) -> int:
        return len(self.weights)

    def multiplicity(self, weight: Sequence[int]) -> int:
        w = tuple(weight)
        return sum(1 for x in self.weights if x == w)

    # -- operators ------------------------------------------------------------

    def identity_op(self) -> MonomialOp:
        one = CycNum.rational(1)
        return MonomialOp(tuple(range(self.dim)), (one,) * self.dim)

    def torus_op(self, values: Sequence[CycNum]) -> MonomialOp:
        if len(values) != self.rank:
            raise ValidationError("torus element needs one value per coordinate")
        vals = [CycNum.coerce(v) for v in values]
        diag = []
        for w in self.weights:
            entry = CycNum.rational(1)
            for v, e in zip(vals, w):
                entry = entry * v**e
            diag.append(entry)
        return MonomialOp(tuple(range(self.dim)), tuple(diag))

    def weight_permutation_op(self, matrix) -> MonomialOp:
        """The slot permutation induced by an integral map of the weight lattice.

        Slots with equal weights are matched in order; the map must permute
        the weight multiset.
        """
        matrix = freeze(matrix)
        groups: Dict[Vec, List[int]] = {}
        for j, w in enumerate(self.weights):
            groups.setdefault(w, []).append(j)
        used: Dict[Vec, int] = {}
        perm = [0] * self.dim
        for j, w in enumerate(self.weights):
            target = tuple(mat_vec(matrix, w))
            slot_list = groups.get(target)
            k = used.get(target, 0)
            if slot_list is None or k >= len(slot_list):
                raise UnsupportedCaseError(
                    "lattice map does not permute the weight multiset"
                )
            perm[j] = slot_list[k]
            used[target] = k + 1
        one = CycNum.rational(1)
        return MonomialOp(tuple(perm), (one,) * self.dim)

    def compose(self, a: MonomialOp, b: MonomialOp) -> MonomialOp:
        perm = tuple(a.perm[b.perm[j]] for j in range(self.dim))
        diag = tuple(b.diag[j] * a.diag[b.perm[j]] for j in range(self.dim))
        return MonomialOp(perm, diag)

    def op_pow(self, op: MonomialOp, k: int) -> MonomialOp:
        if k < 0:
            raise ValidationError("negative operator powers are not needed")
        out = self.identity_op()
        for _ in range(k):
            out = self.compose(op, out)
        return out

    def trace(self, op: MonomialOp) -> CycNum:
        total = CycNum.rational(0)
        for j in range(self.dim):
            if op.perm[j] == j:
                total = total + op.diag[j]
        return total

    def character_value(self, values: Sequence[CycNum]) -> CycNum:
        return self.trace(self.torus_op(values))

    def operator_maps_weights_by(self, op: MonomialOp, matrix) -> bool:
        matrix = freeze(matrix)
        return all(
            self.weights[op.perm[j]] == tuple(mat_vec(matrix, self.weights[j]))
            for j in range(self.dim)
        )


# -- highest weight representations -----------------------------------------------


def _form(datum: BasedRootDatum, x, y):
    total = Fraction(0)
    for i in datum.positive_indices:
        total += Fraction(datum.pair(datum.roots[i], x)) * datum.pair(datum.roots[i], y)
    return total


def _half_sum_of_positive_coroots(datum: BasedRootDatum) -> Tuple[Fraction, ...]:
    total = [Fraction(0)] * datum.rank
    for i in datum.positive_indices:
        for k in range(datum.rank):
            total[k] += Fraction(datum.coroots[i][k], 2)
    return tuple(total)


def _is_subdominant(datum: BasedRootDatum, lam: Vec, mu: Vec) -> bool:
    """mu - dominant(lam) is a nonnegative combination of simple coroots."""
    diff = vec_sub(mu, datum.dominant_coweight(lam))
    cols = freeze([datum.coroots[i] for i in datum.simple_indices])
    sol = frac_solve(transpose(cols), diff)
    return sol is not None and all(c >= 0 for c in sol)


def weight_multiplicities(datum: BasedRootDatum, mu: Sequence[int]) -> Dict[Vec, int]:
    """All weights of the dual-group irreducible with highest weight mu."""
    mu = tuple(mu)
    if not datum.is_dominant_coweight(mu):
        raise ValidationError("highest weight must be dominant")
    depth: Dict[Vec, int] = {mu: 0}
    frontier = [mu]
    while frontier:
        nxt = []
        for lam in frontier:
            for i in datum.simple_indices:
                child = vec_sub(lam, datum.coroots[i])
                if child in depth:
                    continue
                if _is_subdominant(datum, child, mu):
                    depth[child] = depth[lam] + 1
                    nxt.append(child)
        frontier = nxt
    rho = _half_sum_of_positive_coroots(datum)
    top = _form(datum, vec_add(mu, rho), vec_add(mu, rho))
    mult: Dict[Vec, int] = {}
    for lam in sorted(depth, key=lambda x: (depth[x], x)):
        if depth[lam] == 0:
            mult[lam] = 1
            continue
        rhs = Fraction(0)
        for i in datum.positive_indices:
            alpha = datum.coroots[i]
            k = 1
            cur = vec_add(lam, alpha)
            while cur in mult:
                rhs += 2 * mult[cur] * _form(datum, cur, alpha)
                k += 1
                cur = vec_add(lam, tuple(k * c for c in alpha))
        denom = top - _form(datum, vec_add(lam, rho), vec_add(lam, rho))
        if denom <= 0:
            raise ValidationError("Freudenthal denominator is not positive")
        value = rhs / denom
        if value.denominator != 1 or value <= 0:
            raise ValidationError("Freudenthal produced a non-positive multiplicity")
        mult[lam] = int(value)
    return mult


def highest_weight_rep(datum: BasedRootDatum, mu: Sequence[int]) -> MonomialRep:
    mult = weight_multiplicities(datum, mu)
    slots: List[Vec] = []
    for lam in sorted(mult, reverse=True):
        slots.extend([lam] * mult[lam])
    return MonomialRep(slots)


# -- Weyl character oracle ------------------------------------------------------------


def _weyl_group_with_signs(datum: BasedRootDatum) -> List[Tuple[Tuple[Vec, ...], int]]:
    gens = [datum.coweight_reflection_matrix(i) for i in datum.simple_indices]
    start = freeze([tuple(1 if i == j else 0 for j in range(datum.rank))
                    for i in range(datum.rank)])
    seen = {start: 1}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                prod = freeze([
                    tuple(sum(g[i][k] * m[k][j] for k in range(datum.rank))
                          for j in range(datum.rank))
                    for i in range(datum.rank)
                ])
                if prod not in seen:
                    seen[prod] = -seen[m]
                    nxt.append(prod)
        frontier = nxt
        if len(seen) > 50000:
            raise ValidationError("absolute Weyl group is too large")
    return list(seen.items())


def _alternant(datum: BasedRootDatum, vec2: Tuple[int, ...]) -> Dict[Vec, int]:
    out: Dict[Vec, int] = {}
    for mat, sign in _weyl_group_with_signs(datum):
        key = tuple(mat_vec(mat, vec2))
        out[key] = out.get(key, 0) + sign
    return {k: c for k, c in out.items() if c}


def weyl_character(datum: BasedRootDatum, mu: Sequence[int]) -> Dict[Vec, int]:
    """Weight multiplicities by exact division of Weyl alternants.

    Works with doubled exponents so the half-integral shift stays integral.
    """
    mu = tuple(mu)
    if not datum.is_dominant_coweight(mu):
        raise ValidationError("highest weight must be dominant")
    rho = _half_sum_of_positive_coroots(datum)
    mu_rho2 = tuple(int(2 * (m + r)) for m, r in zip(mu, rho))
    rho2 = tuple(int(2 * r) for r in rho)
    num = _alternant(datum, mu_rho2)
    den = _alternant(datum, rho2)
    lt_den = max(den)
    quo: Dict[Vec, int] = {}
    while num:
        lt_num = max(num)
        c, rem = divmod(num[lt_num], den[lt_den])
        if rem:
            raise ValidationError("alternant division is not exact")
        shift = vec_sub(lt_num, lt_den)
        quo[shift] = quo.get(shift, 0) + c
        for k, d in den.items():
            key = vec_add(k, shift)
            acc = num.get(key, 0) - c * d
            if acc:
                num[key] = acc
            else:
                num.pop(key, None)
    out: Dict[Vec, int] = {}
    for k, c in quo.items():
        if any(e % 2 for e in k):
            raise ValidationError("character exponent is not even after doubling")
        out[tuple(e // 2 for e in k)] = c
    return out


def weyl_dimension(datum: BasedRootDatum, mu: Sequence[int]) -> int:
    rho = _half_sum_of_positive_coroots(datum)
    mu_rho = vec_add(tuple(Fraction(m) for m in mu), rho)
    total = Fraction(1)
    for i in datum.positive_indices:
        total *= Fraction(datum.pair(datum.roots[i], mu_rho))
        total /= Fraction(datum.pair(datum.roots[i], rho))
    if total.denominator != 1:
        raise ValidationError("Weyl dimension is not integral")
    return int(total)


# -- parity ---------------------------------------------------------------------------


def pairing_with_two_rho(datum: BasedRootDatum, mu: Sequence[int]) -> int:
    """<2 rho, mu>: the sign (-1)^<2 rho, mu> controls the trace normalization."""
    return datum.pair(datum.two_rho, tuple(mu))


# -- induced representations of a restricted group -------------------------------------


def box_induction(base: MonomialRep, blocks: int) -> MonomialRep:
    """Tensor-induced representation: one tensor factor per block.

    Slot (j_0, ..., j_{n-1}) has the concatenated weight; the dimension is
    dim(base)^n.
    """
    if blocks < 1:
        raise ValidationError("need at least one block")
    slots = []
    for combo in itertools.product(range(base.dim), repeat=blocks):
        w: Tuple[int, ...] = ()
        for j in combo:
            w = w + base.weights[j]
        slots.append(w)
    return MonomialRep(slots)


def box_frobenius_op(base: MonomialRep, blocks: int,
                     step: Optional[MonomialOp] = None) -> MonomialOp:
    """The cyclic shift on a tensor induction, twisting the wrapped factor.

    Sends v_0 x ... x v_{n-1} to (step v_{n-1}) x v_0 x ... x v_{n-2}.
    """
    if step is None:
        step = base.identity_op()
    combos = list(itertools.product(range(base.dim), repeat=blocks))
    index = {c: i for i, c in enumerate(combos)}
    perm = []
    diag = []
    for combo in combos:
        last = combo[-1]
        target = (step.perm[last],) + combo[:-1]
        perm.append(index[target])
        diag.append(step.diag[last])
    return MonomialOp(tuple(perm), tuple(diag))


def gamma_induction(base: MonomialRep, blocks: int) -> MonomialRep:
    """Direct-sum induction: one summand per block, weights block-embedded."""
    if blocks < 1:
        raise ValidationError("need at least one block")
    rank = base.rank
    slots = []
    for b in range(blocks):
        for w in base.weights:
            slots.append((0,) * (rank * b) + w + (0,) * (rank * (blocks - 1 - b)))
    return MonomialRep(slots)


def gamma_frobenius_op(base: MonomialRep, blocks: int,
                       step: Optional[MonomialOp] = None) -> MonomialOp:
    """The summand rotation on a direct-sum induction, twisting the wraparound."""
    if step is None:
        step = base.identity_op()
    one = CycNum.rational(1)
    perm = []
    diag = []
    for b in range(blocks):
        for j in range(base.dim):
            if b < blocks - 1:
                perm.append((b + 1) * base.dim + j)
                diag.append(one)
            else:
                perm.append(step.perm[j])
                diag.append(step.diag[j])
    return MonomialOp(tuple(perm), tuple(diag))


def average_trace(rep: MonomialRep, ops: Sequence[MonomialOp],
                  twist: Optional[MonomialOp] = None) -> CycNum:
    """Trace of twist composed with the averaging projector of a finite set."""
    if not ops:
        raise ValidationError("averaging needs at least one operator")
    if twist is None:
        twist = rep.identity_op()
    total = CycNum.rational(0)
    for g in ops:
        total = total + rep.trace(rep.compose(twist, g))
    return total * CycNum.rational(Fraction(1, len(ops)))


def invariant_dimension(rep: MonomialRep, ops: Sequence[MonomialOp]) -> int:
    dim = average_trace(rep, ops)
    if not dim.is_rational():
        raise ValidationError("invariant dimension is not rational")
    frac = dim.as_fraction()
    if frac.denominator != 1 or frac < 0:
        raise ValidationError("invariant dimension is not a nonnegative integer")
    return int(frac)
