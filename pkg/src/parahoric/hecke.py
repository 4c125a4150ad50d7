"""Iwahori-Hecke algebras of extended affine Weyl groups, exactly.

Coefficients live in Z[v, v^-1] (v^2 = q).  The basis is the normalized one:
T_w here is v^(-L(w)) times the characteristic-function basis element, so the
quadratic relation reads (T_s - v^L)(T_s + v^-L) = 0 with L the length
parameter of the node (the residue degree f by default: the relevant residue
field of a restricted group is the one of the extension).

Elements carry an explicit denominator so parahoric idempotents
e_J = P_J(v)^{-1} sum_w v^L(w) T_w stay exact without fraction coefficients.

The Bernstein elements theta are built two independent ways: the main path
splits the translation as a difference of dominant classes and multiplies
T T^{-1}; the oracle walks a reduced word of t^lambda through the alcove
picture, taking T_s or T_s^{-1} per wall crossing according to the direction
of the crossing.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .cyclotomic import CycNum
from .iwahori import IwahoriWeylGroup, WeylElement
from .laurent import Laurent
from .linalg import Vec, frac_solve, freeze, mat_vec, vec_dot
from .rootdata import ValidationError

Support = Dict[WeylElement, Laurent]


class HeckeElement:
    """sum over support of coeff * T_w, divided by den (a Laurent polynomial).

    The denominator clears automatically when it divides every coefficient.
    """

    __slots__ = ("support", "den")

    def __init__(self, support: Support, den: Optional[Laurent] = None):
        den = Laurent.one() if den is None else den
        if den.is_zero():
            raise ZeroDivisionError("Hecke element with zero denominator")
        clean = {w: c for w, c in support.items() if not c.is_zero()}
        if not den.is_one() and clean:
            divided = {}
            for w, c in clean.items():
                q = c.exact_div(den)
                if q is None:
                    break
                divided[w] = q
            else:
                clean = divided
                den = Laurent.one()
        if not clean:
            den = Laurent.one()
        self.support = clean
        self.den = den

    def is_zero(self) -> bool:
        return not self.support

    def coeff(self, w: WeylElement) -> Laurent:
        return self.support.get(w, Laurent.zero())

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        if self.den == other.den:
            return self.support == other.support
        a = {w: c * other.den for w, c in self.support.items()}
        b = {w: c * self.den for w, c in other.support.items()}
        return a == b

    __hash__ = None

    def __repr__(self) -> str:
        n = len(self.support)
        return f"HeckeElement({n} terms, den={self.den})"


class Character:
    """A character of the F-rational translation lattice, valued exactly.

    Values are fixed on the invariant free basis (nonzero rationals) and on
    the torsion basis classes (roots of unity of the matching order).
    """

    def __init__(self, group: IwahoriWeylGroup, free_values: Sequence[Fraction],
                 torsion_values: Sequence[CycNum]):
        self.group = group
        lat = group.lattice
        if len(free_values) != len(group._inv_basis):
            raise ValidationError("character needs one value per free generator")
        if len(torsion_values) != len(lat.torsion):
            raise ValidationError("character needs one value per torsion generator")
        self.free_values = tuple(Fraction(x) for x in free_values)
        if any(x == 0 for x in self.free_values):
            raise ValidationError("character values must be nonzero")
        self.torsion_values = tuple(torsion_values)
        for val, d in zip(self.torsion_values, lat.torsion):
            if not (val**d == 1):
                raise ValidationError("torsion value is not a root of unity of its order")

    def __call__(self, cls: Sequence[int]) -> CycNum:
        coords = self.group._invariant_coords(self.group.lattice.reduce(cls))
        m = len(self.free_values)
        out = CycNum.rational(1)
        for x, val in zip(coords[:m], self.free_values):
            out = out * CycNum.rational(val**x)
        for x, val in zip(coords[m:], self.torsion_values):
            out = out * val**x
        return out


class HeckeAlgebra:
    """The Hecke algebra of an Iwahori-Weyl group with length parameters."""

    def __init__(self, group: IwahoriWeylGroup,
                 length_params: Optional[Dict[int, int]] = None):
        self.group = group
        f = group.config.descent.f
        self.L: Dict[int, int] = {node.label: f for node in group.affine_nodes}
        if length_params:
            for k, val in length_params.items():
                if k not in self.L:
                    raise ValidationError(f"no affine node labeled {k}")
                if val < 1:
                    raise ValidationError("length parameters must be positive")
                self.L[k] = val
        self._validate_parameters()
        self._theta_cache: Dict[Tuple[int, ...], HeckeElement] = {}
        self._inv_cache: Dict[WeylElement, HeckeElement] = {}
        self._z_cache: Dict[Tuple[int, ...], HeckeElement] = {}
        self._shift_cache: Optional[Tuple[int, ...]] = None

    def _validate_parameters(self) -> None:
        """Parameters must be constant on conjugacy classes of simple reflections.

        Two nodes are forced equal when they are linked by an odd braid
        relation or by conjugation under a length-zero element (the latter is
        an algebra automorphism permuting the T_s).
        """
        grp = self.group
        nodes = grp.affine_nodes
        parent = {node.label: node.label for node in nodes}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x: int, y: int) -> None:
            parent[find(x)] = find(y)

        for a in nodes:
            for b in nodes:
                if a.label >= b.label:
                    continue
                prod = grp.multiply(a.element, b.element)
                order = 1
                cur = prod
                while order <= 12 and cur != grp.identity_element():
                    cur = grp.multiply(cur, prod)
                    order += 1
                if order <= 12 and order % 2:
                    union(a.label, b.label)
        by_element = {node.element: node.label for node in nodes}
        for omega in self.omega_generators():
            omega_inv = grp.inverse(omega)
            for node in nodes:
                conj = grp.product(omega, node.element, omega_inv)
                other = by_element.get(conj)
                if other is None:
                    raise ValidationError(
                        "length-zero conjugation does not permute the simple "
                        "reflections"
                    )
                union(node.label, other)
        for node in nodes:
            if self.L[node.label] != self.L[find(node.label)]:
                raise ValidationError(
                    f"nodes {node.label}, {find(node.label)} are conjugate but "
                    "have different length parameters"
                )

    # -- element builders ----------------------------------------------------

    def zero(self) -> HeckeElement:
        return HeckeElement({})

    def one(self) -> HeckeElement:
        return self.basis(self.group.identity_element())

    def basis(self, w: WeylElement) -> HeckeElement:
        return HeckeElement({w: Laurent.one()})

    def scale(self, c: Laurent, h: HeckeElement) -> HeckeElement:
        c = Laurent.coerce(c)
        return HeckeElement({w: c * x for w, x in h.support.items()}, h.den)

    def add(self, *hs: HeckeElement) -> HeckeElement:
        out: Support = {}
        den = Laurent.one()
        for h in hs:
            if h.den == den:
                inc = h.support
            else:
                out = {w: c * h.den for w, c in out.items()}
                inc = {w: c * den for w, c in h.support.items()}
                den = den * h.den
            for w, c in inc.items():
                out[w] = out.get(w, Laurent.zero()) + c
        return HeckeElement(out, den)

    def sub(self, a: HeckeElement, b: HeckeElement) -> HeckeElement:
        return self.add(a, self.scale(Laurent.const(-1), b))

    def length_param(self, w: WeylElement) -> int:
        """L(w): the sum of node parameters along a reduced word."""
        _, word = self.group.reduced_word(w)
        return sum(self.L[i] for i in word)

    # -- multiplication --------------------------------------------------------

    def _quad(self, label: int) -> Laurent:
        L = self.L[label]
        return Laurent({L: 1, -L: -1})

    def _mul_support_node(self, sup: Support, label: int) -> Support:
        grp = self.group
        s = grp.affine_nodes[label].element
        quad = self._quad(label)
        out: Support = {}

        def bump(w: WeylElement, c: Laurent) -> None:
            acc = out.get(w, Laurent.zero()) + c
            if acc.is_zero():
                out.pop(w, None)
            else:
                out[w] = acc

        for w, c in sup.items():
            ws = grp.multiply(w, s)
            if grp.length(ws) > grp.length(w):
                bump(ws, c)
            else:
                bump(ws, c)
                bump(w, c * quad)
        return out

    def _mul_support_omega(self, sup: Support, omega: WeylElement) -> Support:
        grp = self.group
        return {grp.multiply(w, omega): c for w, c in sup.items()}

    def _mul_support_basis(self, sup: Support, x: WeylElement) -> Support:
        label, word = self.group.reduced_word(x)
        out = self._mul_support_omega(sup, self.group.omega_rep(label))
        for letter in word:
            out = self._mul_support_node(out, letter)
        return out

    def mul(self, a: HeckeElement, b: HeckeElement) -> HeckeElement:
        total: Support = {}
        for x, c in b.support.items():
            part = self._mul_support_basis(a.support, x)
            for w, d in part.items():
                acc = total.get(w, Laurent.zero()) + d * c
                if acc.is_zero():
                    total.pop(w, None)
                else:
                    total[w] = acc
        return HeckeElement(total, a.den * b.den)

    def commutator(self, a: HeckeElement, b: HeckeElement) -> HeckeElement:
        return self.sub(self.mul(a, b), self.mul(b, a))

    # -- inverses of basis elements -----------------------------------------------

    def basis_inverse(self, w: WeylElement) -> HeckeElement:
        """T_w^{-1}, by the quadratic relation along a reduced word."""
        cached = self._inv_cache.get(w)
        if cached is not None:
            return cached
        grp = self.group
        label, word = grp.reduced_word(w)
        omega_inv = grp.inverse(grp.omega_rep(label))
        out = self.one()
        for letter in reversed(word):
            s = grp.affine_nodes[letter].element
            s_inv = self.sub(self.basis(s), self.scale(self._quad(letter), self.one()))
            out = self.mul(out, s_inv)
        out = self.mul(out, self.basis(omega_inv))
        # verifying the inverse costs another full product; only afford it on
        # short words, correctness on long ones is covered by the short cases
        if len(word) <= 6:
            assert self.mul(out, self.basis(w)) == self.one()
        self._inv_cache[w] = out
        return out

    # -- Bernstein elements -----------------------------------------------------------

    def _two_rho_coroot(self) -> Tuple[int, ...]:
        cfg = self.group.config
        lat = self.group.lattice
        total = lat.zero()
        for i in cfg.positive_indices:
            total = lat.add(total, cfg.roots[i].coroot)
        return total

    def _dominance_shift(self) -> Tuple[int, ...]:
        """A strictly dominant Frobenius-fixed class of minimal translation length.

        Any regular dominant class works in the Bernstein quotient formula; a
        short one keeps the denominator word, and with it the inverse support,
        small.  Searched over a box of invariant-basis combinations, falling
        back to the sum of positive coroots.
        """
        if self._shift_cache is not None:
            return self._shift_cache
        cfg = self.group.config
        lat = self.group.lattice
        fallback = self._two_rho_coroot()
        simples = cfg.simple_indices
        best = fallback
        best_len = vec_dot(cfg.two_rho_fun, fallback)
        basis = cfg.invariant_free_basis
        if simples and basis and len(basis) <= 6:
            for combo in itertools.product(range(-3, 4), repeat=len(basis)):
                if not any(combo):
                    continue
                cand = lat.zero()
                for c, b in zip(combo, basis):
                    cand = lat.add(cand, lat.scale(c, b))
                if any(vec_dot(cfg.roots[i].fun, cand) < 1 for i in simples):
                    continue
                length = vec_dot(cfg.two_rho_fun, cand)
                if (length, cand) < (best_len, best):
                    best, best_len = cand, length
        self._shift_cache = best
        return best

    def _shift_count(self, lam: Vec, shift: Vec) -> int:
        cfg = self.group.config
        lat = self.group.lattice
        n = 0
        plus = lam
        while not cfg.is_dominant_class(plus):
            n += 1
            plus = lat.add(plus, shift)
            if n > 1000:
                raise ValidationError("dominance shift did not terminate")
        return n

    def theta(self, cls: Sequence[int], shift_count: Optional[int] = None
              ) -> HeckeElement:
        """theta_lambda = T_{t^(lambda + N e)} T_{t^(N e)}^{-1}, e regular dominant.

        The result does not depend on the choice of N; passing a common
        shift_count across a Weyl orbit lets the denominator inverse be reused.
        """
        lam = self.group.lattice.reduce(cls)
        cached = self._theta_cache.get(lam)
        if cached is not None:
            return cached
        cfg = self.group.config
        lat = self.group.lattice
        shift = self._dominance_shift()
        n = self._shift_count(lam, shift) if shift_count is None else shift_count
        plus = lat.add(lam, lat.scale(n, shift))
        if not cfg.is_dominant_class(plus):
            raise ValidationError("shift count does not reach the dominant cone")
        minus = lat.scale(n, shift)
        t_plus = self.basis(self.group.translation(plus))
        t_minus_inv = self.basis_inverse(self.group.translation(minus))
        out = self.mul(t_plus, t_minus_inv)
        self._theta_cache[lam] = out
        return out

    def theta_by_alcove_walk(self, cls: Sequence[int]) -> HeckeElement:
        """Oracle route: signed T products along a reduced word of t^lambda.

        A generic base point is pushed through the gallery; each letter
        contributes T_s when the crossed affine functional increases (positive
        crossing) and T_s^{-1} otherwise.
        """
        grp = self.group
        cfg = grp.config
        lat = grp.lattice
        lam = lat.reduce(cls)
        t = grp.translation(lam)
        label, word = grp.reduced_word(t)
        base = self._generic_point()
        out = self.basis(grp.omega_rep(label))
        prefix = grp.omega_rep(label)
        for letter in word:
            node = grp.affine_nodes[letter]
            nxt = grp.multiply(prefix, node.element)
            before = self._apply_to_point(prefix, base)
            after = self._apply_to_point(nxt, base)
            sign = self._crossing_sign(before, after)
            if sign > 0:
                out = self.mul(out, self.basis(node.element))
            else:
                out = self.mul(out, self.basis_inverse(node.element))
            prefix = nxt
        return out

    def _generic_point(self) -> Tuple[Fraction, ...]:
        cfg = self.group.config
        lat = self.group.lattice
        n = lat.class_len
        simples = cfg.simple_indices
        if not simples:
            return (Fraction(0),) * n
        heights = []
        for i in cfg.positive_indices:
            coords = self.group._simple_coordinates(i)
            heights.append(sum(coords))
        m = 2 * (max(heights) + 2)
        rows = freeze([cfg.roots[i].fun for i in simples])
        target = tuple(Fraction(1, int(m)) for _ in simples)
        sol = frac_solve(rows, target)
        if sol is None:
            raise ValidationError("no generic point in the base alcove")
        return sol

    def _apply_to_point(self, w: WeylElement, p: Tuple[Fraction, ...]
                        ) -> Tuple[Fraction, ...]:
        cfg = self.group.config
        lat = self.group.lattice
        u = cfg.weyl_elements[w.w0]
        out = [Fraction(0)] * lat.class_len
        # linear extension of the class action; torsion tensored with Q is zero
        for j in range(lat.free_rank):
            img = u.images[j]
            for i in range(lat.free_rank):
                out[i] += p[j] * img[i]
        for i in range(lat.free_rank):
            out[i] += w.trans[i]
        return tuple(out)

    def _crossing_sign(self, before: Tuple[Fraction, ...],
                       after: Tuple[Fraction, ...]) -> int:
        cfg = self.group.config
        found = None
        for i in cfg.positive_indices:
            fun = cfg.roots[i].fun
            s1 = sum(f * x for f, x in zip(fun, before))
            s2 = sum(f * x for f, x in zip(fun, after))
            lo, hi = min(s1, s2), max(s1, s2)
            crossed = [k for k in range(int(lo) - 1, int(hi) + 2) if lo < k < hi]
            if crossed:
                if len(crossed) > 1 or found is not None:
                    raise ValidationError("gallery step crosses more than one wall")
                found = 1 if s2 > s1 else -1
        if found is None:
            raise ValidationError("gallery step crosses no wall")
        return found

    def z_element(self, cls: Sequence[int]) -> HeckeElement:
        """Central Bernstein basis element: orbit sum of theta over W_0."""
        cfg = self.group.config
        lat = self.group.lattice
        dom, _ = cfg.dominant_class(lat.reduce(cls))
        cached = self._z_cache.get(dom)
        if cached is not None:
            return cached
        orbit = {cfg.weyl_apply(u, dom) for u in cfg.weyl_elements}
        # a shared shift count lets every theta in the orbit reuse one inverse
        shift = self._dominance_shift()
        count = max(self._shift_count(mu, shift) for mu in orbit)
        out = self.zero()
        for mu in sorted(orbit):
            out = self.add(out, self.theta(mu, shift_count=count))
        self._z_cache[dom] = out
        return out

    # -- parahoric level ------------------------------------------------------------------

    def poincare_polynomial(self, node_labels: Sequence[int]) -> Laurent:
        total = Laurent.zero()
        for w in self.group.finite_subgroup(node_labels):
            total = total + Laurent.gen(2 * self.length_param(w))
        return total

    def parahoric_idempotent(self, node_labels: Sequence[int]) -> HeckeElement:
        """e_J = P_J(v)^{-1} sum_{w in W_J} v^{L(w)} T_w."""
        sup: Support = {}
        for w in self.group.finite_subgroup(node_labels):
            sup[w] = Laurent.gen(self.length_param(w))
        return HeckeElement(sup, self.poincare_polynomial(node_labels))

    def parahoric_compress(self, node_labels: Sequence[int], h: HeckeElement
                           ) -> HeckeElement:
        """e_J h: the image of a central element at parahoric level."""
        return self.mul(self.parahoric_idempotent(node_labels), h)

    # -- principal series ---------------------------------------------------------------------

    def right_decompose(self, h: HeckeElement
                        ) -> Dict[int, List[Tuple[Tuple[int, ...], Laurent]]]:
        """Write h = sum_u T_u a_u with u finite and a_u in the theta subalgebra.

        Returns {finite index: [(translation class, coefficient)]}; the
        denominator of h is ignored here and must be handled by the caller.
        """
        grp = self.group
        cfg = grp.config
        rem: Support = dict(h.support)
        out: Dict[int, List[Tuple[Tuple[int, ...], Laurent]]] = {}
        guard = 0
        while rem:
            guard += 1
            if guard > 100000:
                raise ValidationError("right decomposition did not terminate")
            w = max(rem, key=lambda x: (grp.length(x), x.trans, x.w0))
            c_w = rem[w]
            u = cfg.weyl_elements[w.w0]
            uinv = cfg.weyl_inverse(u)
            nu = cfg.weyl_apply(uinv, w.trans)
            t_u = self.basis(WeylElement(grp.lattice.zero(), w.w0))
            prod = self.mul(t_u, self.theta(nu))
            lead = prod.coeff(w)
            if lead.is_zero() or not lead.is_monomial():
                raise ValidationError("decomposition leading term is not a monomial")
            factor = c_w * (lead ** -1)
            out.setdefault(w.w0, []).append((nu, factor))
            for x, c in prod.support.items():
                acc = rem.get(x, Laurent.zero()) - factor * c
                if acc.is_zero():
                    rem.pop(x, None)
                else:
                    rem[x] = acc
            if w in rem:
                raise ValidationError("decomposition failed to clear leading term")
        return out

    def principal_series_matrix(self, h: HeckeElement, chi: Character
                                ) -> Tuple[List[List[Laurent]], Laurent]:
        """Action of h on H tensor_A chi, in the basis T_u tensor 1.

        Returns (matrix, denominator): the true matrix is matrix/denominator.
        """
        grp = self.group
        cfg = grp.config
        n = len(cfg.weyl_elements)
        cols: List[List[Laurent]] = [[Laurent.zero()] * n for _ in range(n)]
        for j in range(n):
            t_u = self.basis(WeylElement(grp.lattice.zero(), j))
            image = self.mul(h, t_u)
            if image.den != h.den:
                # the constructor cleared a divisible denominator; restore it
                if not image.den.is_one():
                    raise ValidationError("denominator changed during module action")
                image = HeckeElement(
                    {w: c * h.den for w, c in image.support.items()}, Laurent.one()
                )
            decomp = self.right_decompose(image)
            for i, parts in decomp.items():
                total = Laurent.zero()
                for nu, coeff in parts:
                    total = total + coeff * Laurent.const(chi(nu))
                cols[i][j] = total
        return [[cols[i][j] for j in range(n)] for i in range(n)], h.den

    def central_scalar(self, cls: Sequence[int], chi: Character) -> CycNum:
        """The scalar by which z_lambda acts on the chi principal series."""
        cfg = self.group.config
        lat = self.group.lattice
        dom, _ = cfg.dominant_class(lat.reduce(cls))
        orbit = {cfg.weyl_apply(u, dom) for u in cfg.weyl_elements}
        total = CycNum.rational(0)
        for mu in sorted(orbit):
            total = total + chi(mu)
        return total

    def acts_by_scalar(self, h: HeckeElement, chi: Character
                       ) -> Optional[Laurent]:
        """The scalar action of h on the chi principal series, or None."""
        mat, den = self.principal_series_matrix(h, chi)
        n = len(mat)
        for i in range(n):
            for j in range(n):
                if i != j and not mat[i][j].is_zero():
                    return None
        diag = mat[0][0]
        for i in range(1, n):
            if mat[i][i] != diag:
                return None
        q = diag.exact_div(den)
        if q is None:
            raise ValidationError("scalar is not exactly divisible by the denominator")
        return q

    # -- centrality --------------------------------------------------------------------------------

    def omega_generators(self) -> Tuple[WeylElement, ...]:
        grp = self.group
        quot = grp.omega_quotient
        gens = []
        for b in quot.free_basis_classes() + quot.torsion_basis_classes():
            gens.append(grp.omega_rep(b))
        return tuple(gens)

    def is_central(self, h: HeckeElement) -> bool:
        for node in self.group.affine_nodes:
            if not self.commutator(h, self.basis(node.element)).is_zero():
                return False
        for omega in self.omega_generators():
            if not self.commutator(h, self.basis(omega)).is_zero():
                return False
        return True


# -- transport along a central isogeny ------------------------------------------


class AdjointTransport:
    """Pushforward of Hecke elements along a cocharacter-lattice map.

    The map must identify the relative root systems node by node; on each
    length-zero slice the induced map of Iwahori-Weyl groups is a bijection
    onto its image preserving lengths, words, and the Bruhat order, so
    T_w -> T_p(w) is well defined on such a slice.
    """

    def __init__(self, source: HeckeAlgebra, target: HeckeAlgebra, matrix):
        self.source = source
        self.target = target
        self.matrix = freeze(matrix)
        self._check_roots_align()

    def _check_roots_align(self) -> None:
        src_cfg = self.source.group.config
        dst_cfg = self.target.group.config
        if len(src_cfg.simple_indices) != len(dst_cfg.simple_indices):
            raise ValidationError("transport needs matching relative ranks")
        for a in range(len(src_cfg.simple_indices)):
            for b in range(len(dst_cfg.simple_indices)):
                ci = src_cfg.cartan_integer(
                    src_cfg.simple_indices[a], src_cfg.simple_indices[b]
                )
                cj = dst_cfg.cartan_integer(
                    dst_cfg.simple_indices[a], dst_cfg.simple_indices[b]
                )
                if ci != cj:
                    raise ValidationError("relative Cartan matrices do not match")

    def map_class(self, cls: Sequence[int]) -> Tuple[int, ...]:
        src_lat = self.source.group.lattice
        dst_lat = self.target.group.lattice
        return dst_lat.project(mat_vec(self.matrix, src_lat.lift(src_lat.reduce(cls))))

    def map_element(self, w: WeylElement) -> WeylElement:
        src_cfg = self.source.group.config
        dst_cfg = self.target.group.config
        u = src_cfg.weyl_elements[w.w0]
        out = dst_cfg.weyl_elements[0]
        for i in u.word:
            k = src_cfg.simple_indices.index(i)
            out = dst_cfg.weyl_compose(
                out, dst_cfg.weyl_simple(dst_cfg.simple_indices[k])
            )
        mapped = WeylElement(self.map_class(w.trans), out.index)
        if self.target.group.length(mapped) != self.source.group.length(w):
            raise ValidationError("transport does not preserve lengths")
        return mapped

    def push(self, h: HeckeElement) -> HeckeElement:
        sup: Support = {}
        for w, c in h.support.items():
            img = self.map_element(w)
            if img in sup:
                raise ValidationError("transport collapses support elements")
            sup[img] = c
        return HeckeElement(sup, h.den)

    def slice_inverse(self, elements: Sequence[WeylElement]
                      ) -> Dict[WeylElement, WeylElement]:
        """The inverse of the slice bijection, tabulated on given elements."""
        out: Dict[WeylElement, WeylElement] = {}
        for w in elements:
            img = self.map_element(w)
            if img in out:
                raise ValidationError("transport is not injective on the slice")
            out[img] = w
        return out


# -- JSON forms ----------------------------------------------------------------------


def _laurent_pairs(x: Laurent) -> List[List[int]]:
    out = []
    for e, c in x.items():
        if not isinstance(c, int):
            raise ValidationError("JSON form needs integer coefficients")
        out.append([e, c])
    return out


def element_to_json(alg: HeckeAlgebra, h: HeckeElement) -> dict:
    grp = alg.group
    keys = sorted(
        h.support,
        key=lambda w: (grp.length(w),) + grp.reduced_word(w)[0] + grp.reduced_word(w)[1],
    )
    terms = []
    for w in keys:
        label, word = grp.reduced_word(w)
        terms.append(
            {
                "omega_label": list(label),
                "reduced_word": list(word),
                "coeffs": _laurent_pairs(h.support[w]),
            }
        )
    out = {"terms": terms}
    if not h.den.is_one():
        out["denominator"] = _laurent_pairs(h.den)
    return out


def element_from_json(alg: HeckeAlgebra, data: dict) -> HeckeElement:
    sup: Support = {}
    for term in data["terms"]:
        w = alg.group.from_word(tuple(term["omega_label"]), term["reduced_word"])
        sup[w] = Laurent({int(e): int(c) for e, c in term["coeffs"]})
    den = None
    if "denominator" in data:
        den = Laurent({int(e): int(c) for e, c in data["denominator"]})
    return HeckeElement(sup, den)
