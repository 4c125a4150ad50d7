"""The Iwahori-Weyl group: translations by coinvariant classes and the
relative finite Weyl group, with lengths, canonical reduced words, the
Bruhat order, length-zero elements, and admissible sets.

Elements are pairs (translation class, finite part); the group law is
(l1, u)(l2, w) = (l1 + u.l2, uw).  The length of t^l u counts affine root
hyperplanes separating the base alcove from its image:

    len(t^l u) = sum over positive relative roots a of
                 |<a, l>|      when u^{-1} a > 0,
                 |<a, l> - 1|  when u^{-1} a < 0.

The affine generators are the relative simple reflections together with one
extra node per irreducible component, t^(theta^vee) s_theta for the highest
root theta.  Length-zero elements form the stabilizer of the base alcove,
canonically isomorphic to the translations modulo the coroot lattice; each
element carries that quotient class as its label, and canonical reduced
words are computed by repeatedly stripping the smallest descent.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, FrozenSet, List, NamedTuple, Sequence, Tuple

from .linalg import frac_solve, freeze, solve_integer, transpose
from .rootdata import (
    LatticeQuotient,
    RelativeRootConfiguration,
    RelativeWeylElement,
    UnsupportedCaseError,
    ValidationError,
)

Vec = Tuple[int, ...]


class WeylElement(NamedTuple):
    """t^trans . (finite Weyl element with index w0)."""

    trans: Vec
    w0: int


class AffineNode(NamedTuple):
    label: int
    kind: str            # "finite" or "affine"
    root_index: int      # relative root whose reflection enters the generator
    element: WeylElement


PARAHORIC_CAP = 40320


class IwahoriWeylGroup:
    """Iwahori-Weyl group of a relative root configuration.

    Translations are restricted to Frobenius-fixed classes (the F-rational
    points); the finite part is the full relative Weyl group.
    """

    def __init__(self, config: RelativeRootConfiguration):
        self.config = config
        self.lattice = config.lattice
        self._len_cache: Dict[WeylElement, int] = {}
        self._word_cache: Dict[WeylElement, Tuple[Vec, Tuple[int, ...]]] = {}
        self._le_cache: Dict[Tuple[WeylElement, WeylElement], bool] = {}
        self._omega_reps: Dict[Vec, WeylElement] = {}
        self._mask_cache: Dict[int, Tuple[bool, ...]] = {}
        self._build_affine_nodes()
        self._build_omega_quotient()

    # -- element constructors ----------------------------------------------------

    def identity_element(self) -> WeylElement:
        return WeylElement(self.lattice.zero(), 0)

    def translation(self, cls: Sequence[int], check: bool = True) -> WeylElement:
        c = self.lattice.reduce(cls)
        if check and not self.config.is_frobenius_fixed(c):
            raise ValidationError(
                f"translation class {c} is not Frobenius-fixed"
            )
        return WeylElement(c, 0)

    def finite_element(self, w: RelativeWeylElement) -> WeylElement:
        return WeylElement(self.lattice.zero(), w.index)

    # -- group operations -----------------------------------------------------------

    def multiply(self, a: WeylElement, b: WeylElement) -> WeylElement:
        cfg = self.config
        u = cfg.weyl_elements[a.w0]
        trans = self.lattice.add(a.trans, cfg.weyl_apply(u, b.trans))
        w = cfg.weyl_compose(u, cfg.weyl_elements[b.w0])
        return WeylElement(trans, w.index)

    def inverse(self, a: WeylElement) -> WeylElement:
        cfg = self.config
        uinv = cfg.weyl_inverse(cfg.weyl_elements[a.w0])
        trans = self.lattice.neg(cfg.weyl_apply(uinv, a.trans))
        return WeylElement(trans, uinv.index)

    def product(self, *elements: WeylElement) -> WeylElement:
        out = self.identity_element()
        for e in elements:
            out = self.multiply(out, e)
        return out

    # -- length -----------------------------------------------------------------------

    def _inv_positive_mask(self, w0: int) -> Tuple[bool, ...]:
        """For each positive relative root a, whether u^{-1} a stays positive."""
        mask = self._mask_cache.get(w0)
        if mask is None:
            cfg = self.config
            uinv = cfg.weyl_inverse(cfg.weyl_elements[w0])
            mask = tuple(
                cfg.roots[uinv.root_perm[i]].positive for i in cfg.positive_indices
            )
            self._mask_cache[w0] = mask
        return mask

    def length(self, w: WeylElement) -> int:
        cached = self._len_cache.get(w)
        if cached is not None:
            return cached
        cfg = self.config
        mask = self._inv_positive_mask(w.w0)
        total = 0
        for i, stays_positive in zip(cfg.positive_indices, mask):
            val = cfg.roots[i].pair(w.trans)
            total += abs(val) if stays_positive else abs(val - 1)
        self._len_cache[w] = total
        return total

    # -- affine generators ---------------------------------------------------------------

    def _build_affine_nodes(self) -> None:
        cfg = self.config
        nodes: List[AffineNode] = []
        for i in cfg.simple_indices:
            el = WeylElement(self.lattice.zero(), cfg.weyl_simple(i).index)
            nodes.append(AffineNode(len(nodes), "finite", i, el))
        for comp in self._components():
            theta = self._highest_root(comp)
            s_theta = cfg.weyl_simple(theta)
            el = WeylElement(cfg.roots[theta].coroot, s_theta.index)
            if not cfg.is_frobenius_fixed(cfg.roots[theta].coroot):
                raise UnsupportedCaseError(
                    "highest coroot class is not Frobenius-fixed"
                )
            nodes.append(AffineNode(len(nodes), "affine", theta, el))
        self.affine_nodes: Tuple[AffineNode, ...] = tuple(nodes)
        for node in nodes:
            if self.length(node.element) != 1:
                raise ValidationError(
                    f"affine generator {node.label} does not have length one"
                )

    def _components(self) -> Tuple[Tuple[int, ...], ...]:
        cfg = self.config
        simples = list(cfg.simple_indices)
        comps: List[List[int]] = []
        seen = set()
        for s in simples:
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            frontier = [s]
            while frontier:
                nxt = []
                for i in frontier:
                    for j in simples:
                        if j not in seen and cfg.cartan_integer(i, j) != 0:
                            seen.add(j)
                            comp.append(j)
                            nxt.append(j)
                frontier = nxt
            comps.append(sorted(comp))
        return tuple(tuple(c) for c in comps)

    def _simple_coordinates(self, root_index: int) -> Tuple[Fraction, ...]:
        cfg = self.config
        cols = freeze([cfg.roots[i].fun for i in cfg.simple_indices])
        sol = frac_solve(transpose(cols), cfg.roots[root_index].fun)
        if sol is None:
            raise ValidationError("relative root outside the simple span")
        return sol

    def _highest_root(self, component: Tuple[int, ...]) -> int:
        cfg = self.config
        comp_pos = set(component)
        best = None
        best_height = None
        for i in cfg.positive_indices:
            coords = self._simple_coordinates(i)
            support = {
                cfg.simple_indices[k] for k, c in enumerate(coords) if c != 0
            }
            if not support <= comp_pos:
                continue
            h = sum(coords)
            if best_height is None or h > best_height:
                best, best_height = i, h
            elif h == best_height:
                raise ValidationError("highest root is not unique in component")
        assert best is not None
        return best

    def simple_reflection(self, label: int) -> WeylElement:
        return self.affine_nodes[label].element

    # -- descents and canonical words ---------------------------------------------------------

    def right_descents(self, w: WeylElement) -> Tuple[int, ...]:
        lw = self.length(w)
        return tuple(
            node.label
            for node in self.affine_nodes
            if self.length(self.multiply(w, node.element)) < lw
        )

    def reduced_word(self, w: WeylElement) -> Tuple[Vec, Tuple[int, ...]]:
        """Canonical (omega_label, word): w = omega . prod s_i, length letters.

        The word is produced by repeatedly stripping the smallest right
        descent, so it is deterministic.
        """
        cached = self._word_cache.get(w)
        if cached is not None:
            return cached
        letters: List[int] = []
        cur = w
        while self.length(cur) > 0:
            for node in self.affine_nodes:
                nxt = self.multiply(cur, node.element)
                if self.length(nxt) < self.length(cur):
                    letters.append(node.label)
                    cur = nxt
                    break
            else:
                raise ValidationError("positive length element with no descent")
        label = self.omega_label(cur)
        self._omega_reps.setdefault(label, cur)
        word = tuple(reversed(letters))
        out = (label, word)
        self._word_cache[w] = out
        return out

    def from_word(self, label: Vec, word: Sequence[int]) -> WeylElement:
        out = self.omega_rep(label)
        for i in word:
            out = self.multiply(out, self.affine_nodes[i].element)
        return out

    # -- length-zero elements -------------------------------------------------------------------

    def _build_omega_quotient(self) -> None:
        cfg = self.config
        lat = self.lattice
        self._inv_basis = cfg.invariant_free_basis
        m = len(self._inv_basis)
        t = len(lat.torsion)
        cols: List[Vec] = []
        for i, d in enumerate(lat.torsion):
            cols.append(tuple(d if k == m + i else 0 for k in range(m + t)))
        for i in cfg.simple_indices:
            coroot = cfg.roots[i].coroot
            cols.append(self._invariant_coords(coroot))
        self.omega_quotient = LatticeQuotient(m + t, cols)

    def _invariant_coords(self, cls: Vec) -> Vec:
        """Coordinates of a Frobenius-fixed class in the invariant basis."""
        lat = self.lattice
        m = len(self._inv_basis)
        if m:
            b = freeze([bb[: lat.free_rank] for bb in self._inv_basis])
            sol = solve_integer(transpose(b), cls[: lat.free_rank])
        else:
            sol = ()
            if any(cls[: lat.free_rank]):
                sol = None
        if sol is None:
            raise ValidationError(
                f"class {cls} is not in the Frobenius-fixed translation lattice"
            )
        return tuple(sol) + tuple(cls[lat.free_rank:])

    def omega_label(self, w: WeylElement) -> Vec:
        """The class of the translation part modulo the relative coroot lattice."""
        return self.omega_quotient.project(self._invariant_coords(w.trans))

    def omega_rep(self, label: Vec) -> WeylElement:
        """The canonical length-zero element with the given label."""
        label = self.omega_quotient.reduce(label)
        cached = self._omega_reps.get(label)
        if cached is not None:
            return cached
        coords = self.omega_quotient.lift(label)
        lat = self.lattice
        m = len(self._inv_basis)
        cls = lat.zero()
        for x, b in zip(coords[:m], self._inv_basis):
            cls = lat.add(cls, lat.scale(x, b))
        tors = tuple(coords[m:])
        cls = lat.add(
            cls, lat.reduce((0,) * lat.free_rank + tors)
        )
        elem = self.translation(cls)
        lab2, _ = self.reduced_word(elem)  # registers the stripped rep
        if lab2 != label:
            raise ValidationError("omega label mismatch during representative build")
        return self._omega_reps[label]

    def kappa(self, w: WeylElement) -> Vec:
        """Kottwitz invariant: image of the translation part in pi_1."""
        return self.config.kappa(w.trans)

    # -- Bruhat order ---------------------------------------------------------------------------

    def bruhat_le(self, a: WeylElement, b: WeylElement) -> bool:
        """Bruhat order on the extended group: equal labels, affine parts compared."""
        if self.omega_label(a) != self.omega_label(b):
            return False
        return self._le(a, b)

    def _le(self, a: WeylElement, b: WeylElement) -> bool:
        if a == b:
            return True
        la, lb = self.length(a), self.length(b)
        if la >= lb:
            return False
        key = (a, b)
        cached = self._le_cache.get(key)
        if cached is not None:
            return cached
        descents = self.right_descents(b)
        s = self.affine_nodes[descents[0]].element
        bs = self.multiply(b, s)
        as_ = self.multiply(a, s)
        if self.length(as_) < la:
            out = self._le(as_, bs)
        else:
            out = self._le(a, bs)
        self._le_cache[key] = out
        return out

    # -- enumeration ------------------------------------------------------------------------------

    def cayley_ball(self, label: Vec, radius: int) -> FrozenSet[WeylElement]:
        """All elements with the given length-zero label and length <= radius."""
        start = self.omega_rep(label)
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for w in frontier:
                for node in self.affine_nodes:
                    u = self.multiply(w, node.element)
                    if u not in seen and self.length(u) <= radius:
                        seen.add(u)
                        nxt.append(u)
            frontier = nxt
        return frozenset(seen)

    def admissible_set(self, mu: Sequence[int]) -> FrozenSet[WeylElement]:
        """Elements below some translation by a Weyl conjugate of mu.

        The candidates come from a Cayley ball; membership uses the Bruhat
        recursion, so this route is independent of the subword description.
        """
        cfg = self.config
        mu_cls = self.lattice.reduce(mu)
        if not cfg.is_frobenius_fixed(mu_cls):
            raise ValidationError("admissible sets need a Frobenius-fixed class")
        maximals = {
            self.translation(cfg.weyl_apply(u, mu_cls))
            for u in cfg.weyl_elements
        }
        radius = max(self.length(t) for t in maximals)
        label = self.omega_label(next(iter(maximals)))
        out = set()
        for u in self.cayley_ball(label, radius):
            if any(self._le(u, t) for t in maximals):
                out.add(u)
        return frozenset(out)

    # -- parahoric subgroups ------------------------------------------------------------------------

    def finite_subgroup(self, node_labels: Sequence[int]) -> Tuple[WeylElement, ...]:
        """W_J for a facet J, enumerated; raises when J is not of finite type."""
        gens = [self.affine_nodes[i].element for i in node_labels]
        e = self.identity_element()
        seen = {e}
        order = [e]
        frontier = [e]
        while frontier:
            nxt = []
            for w in frontier:
                for g in gens:
                    u = self.multiply(w, g)
                    if u not in seen:
                        if len(seen) >= PARAHORIC_CAP:
                            raise ValidationError(
                                "facet does not generate a finite parahoric group"
                            )
                        seen.add(u)
                        order.append(u)
                        nxt.append(u)
            frontier = nxt
        return tuple(order)

    def longest_element_of(self, elements: Sequence[WeylElement]) -> WeylElement:
        return max(elements, key=self.length)

    def max_double_coset_rep(self, node_labels: Sequence[int], w: WeylElement
                             ) -> WeylElement:
        """The maximal element of W_J w W_J, by greedy two-sided ascent."""
        gens = [self.affine_nodes[i].element for i in node_labels]
        cur = w
        changed = True
        while changed:
            changed = False
            for g in gens:
                left = self.multiply(g, cur)
                if self.length(left) > self.length(cur):
                    cur = left
                    changed = True
                right = self.multiply(cur, g)
                if self.length(right) > self.length(cur):
                    cur = right
                    changed = True
        return cur

    # -- presentation -----------------------------------------------------------------------------

    def describe_element(self, w: WeylElement) -> str:
        label, word = self.reduced_word(w)
        word_str = "".join(f"s{i}" for i in word) if word else "e"
        return f"omega{label} * {word_str}"
