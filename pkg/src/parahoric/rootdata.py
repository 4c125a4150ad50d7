"""Based root data with Galois descent and the relative root configuration.

The objects here are the exact-arithmetic backbone: a based root datum on a
pair of dual lattices, a descent datum (inertia generators plus a Frobenius
lift acting on the cocharacter lattice), coinvariant lattice quotients via
Smith normal form, Weil restriction as an induced module, and the relative
root system on the inertia coinvariants that drives all Iwahori-Weyl
combinatorics downstream.

Conventions: vectors are coordinate tuples, matrices act on column vectors,
and the pairing between the character lattice X^* and the cocharacter
lattice X_* is <w, x> = w . P . x with P the pairing matrix (identity for
all shipped descriptors, i.e. the two lattices are presented in dual bases).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .linalg import (
    Mat,
    Vec,
    frac_inverse,
    frac_solve,
    freeze,
    identity,
    integer_inverse,
    mat_mul,
    mat_vec,
    smith_normal_form,
    transpose,
    vec_add,
    vec_dot,
    vec_scale,
    vec_sub,
)


class ValidationError(ValueError):
    """Input data violates a structural invariant."""


class UnsupportedCaseError(NotImplementedError):
    """Mathematically meaningful input outside the implemented theory."""


GROUP_CAP = 20000


def generate_group(gens: Sequence[Mat], cap: int = GROUP_CAP) -> Tuple[Mat, ...]:
    """Closure of unimodular integer matrices under multiplication (BFS)."""
    n = len(gens[0]) if gens else 0
    if not gens:
        return ()
    e = identity(n)
    seen = {e}
    frontier = [e]
    order = [e]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                gh = mat_mul(g, h)
                if gh not in seen:
                    seen.add(gh)
                    order.append(gh)
                    nxt.append(gh)
                    if len(seen) > cap:
                        raise ValidationError(
                            f"group generated by descent matrices exceeds {cap} elements"
                        )
        frontier = nxt
    return tuple(order)


def matrix_order(m: Mat, cap: int = GROUP_CAP) -> int:
    e = identity(len(m))
    p = m
    for k in range(1, cap + 1):
        if p == e:
            return k
        p = mat_mul(p, m)
    raise ValidationError(f"matrix order exceeds {cap}")


# ---------------------------------------------------------------------------
# based root data
# ---------------------------------------------------------------------------


class BasedRootDatum:
    """A based root datum (X^*, roots, X_*, coroots) with a fixed pairing.

    Roots are vectors in X^*-coordinates, coroots in X_*-coordinates, with
    roots[k] paired to coroots[k].  A subset of the roots is marked simple;
    every root must be a sign-coherent rational combination of the simples.
    """

    def __init__(
        self,
        rank: int,
        roots: Sequence[Sequence[int]],
        coroots: Sequence[Sequence[int]],
        simple_indices: Sequence[int],
        pairing: Optional[Mat] = None,
    ):
        self.rank = int(rank)
        self.roots: Mat = freeze(roots)
        self.coroots: Mat = freeze(coroots)
        self.simple_indices: Tuple[int, ...] = tuple(simple_indices)
        self.pairing: Mat = freeze(pairing) if pairing is not None else identity(rank)
        self._validate()
        self.positive_indices: Tuple[int, ...] = self._positivity()
        self.two_rho: Vec = self._two_rho()

    # -- pairing and reflections -------------------------------------------

    def pair(self, weight: Sequence[int], coweight: Sequence[int]):
        return vec_dot(mat_vec(self.pairing, coweight), weight)

    def reflect_coweight(self, k: int, x: Sequence[int]) -> Vec:
        """s_k(x) = x - <alpha_k, x> alpha_k^vee on the cocharacter side."""
        return vec_sub(x, vec_scale(self.pair(self.roots[k], x), self.coroots[k]))

    def reflect_weight(self, k: int, w: Sequence[int]) -> Vec:
        """s_k(w) = w - <w, alpha_k^vee> alpha_k on the character side."""
        return vec_sub(w, vec_scale(self.pair(w, self.coroots[k]), self.roots[k]))

    def coweight_reflection_matrix(self, k: int) -> Mat:
        cols = [self.reflect_coweight(k, e) for e in identity(self.rank)]
        return transpose(freeze(cols))

    def weight_reflection_matrix(self, k: int) -> Mat:
        cols = [self.reflect_weight(k, e) for e in identity(self.rank)]
        return transpose(freeze(cols))

    # -- validation ----------------------------------------------------------

    def _validate(self) -> None:
        n = self.rank
        if len(self.pairing) != n or any(len(r) != n for r in self.pairing):
            raise ValidationError("pairing matrix shape does not match rank")
        if len(self.roots) != len(self.coroots):
            raise ValidationError("roots and coroots must align")
        for v in self.roots + self.coroots:
            if len(v) != n:
                raise ValidationError("root/coroot coordinate length mismatch")
        if len(set(self.roots)) != len(self.roots):
            raise ValidationError("duplicate roots")
        if any(all(c == 0 for c in r) for r in self.roots):
            raise ValidationError("zero vector listed as a root")
        for k, (a, av) in enumerate(zip(self.roots, self.coroots)):
            if self.pair(a, av) != 2:
                raise ValidationError(f"<alpha, alpha^vee> != 2 at root index {k}")
        for i in self.simple_indices:
            if not 0 <= i < len(self.roots):
                raise ValidationError("simple index out of range")
        root_index = {r: k for k, r in enumerate(self.roots)}
        for k in range(len(self.roots)):
            for j, a in enumerate(self.roots):
                img = self.reflect_weight(k, a)
                if img not in root_index:
                    raise ValidationError(
                        f"reflection s_{k} does not permute the roots (image of {j})"
                    )
                if self.reflect_coweight(k, self.coroots[j]) != self.coroots[root_index[img]]:
                    raise ValidationError(
                        f"reflection s_{k} breaks the root/coroot alignment at {j}"
                    )

    def _simple_coordinates(self, k: int) -> Tuple[Fraction, ...]:
        cols = freeze([self.roots[i] for i in self.simple_indices])
        sol = frac_solve(transpose(cols), self.roots[k])
        if sol is None:
            raise ValidationError(f"root {k} is not in the span of the simples")
        return sol

    def _positivity(self) -> Tuple[int, ...]:
        pos = []
        for k in range(len(self.roots)):
            coords = self._simple_coordinates(k)
            if all(c >= 0 for c in coords):
                pos.append(k)
            elif not all(c <= 0 for c in coords):
                raise ValidationError(f"root {k} is not sign-coherent in the simples")
        return tuple(pos)

    def _two_rho(self) -> Vec:
        total = (0,) * self.rank
        for k in self.positive_indices:
            total = vec_add(total, self.roots[k])
        return total

    # -- dominance on the cocharacter side -----------------------------------

    def is_dominant_coweight(self, x: Sequence[int]) -> bool:
        return all(self.pair(self.roots[i], x) >= 0 for i in self.simple_indices)

    def dominant_coweight(self, x: Sequence[int]) -> Vec:
        x = tuple(x)
        while True:
            for i in self.simple_indices:
                if self.pair(self.roots[i], x) < 0:
                    x = self.reflect_coweight(i, x)
                    break
            else:
                return x

    def coweight_orbit(self, x: Sequence[int]) -> Tuple[Vec, ...]:
        """Weyl group orbit of a cocharacter, by reflection closure."""
        seen = {tuple(x)}
        frontier = [tuple(x)]
        while frontier:
            nxt = []
            for y in frontier:
                for i in self.simple_indices:
                    z = self.reflect_coweight(i, y)
                    if z not in seen:
                        seen.add(z)
                        nxt.append(z)
            frontier = nxt
        return tuple(sorted(seen))

    def product(self, other: "BasedRootDatum") -> "BasedRootDatum":
        n, m = self.rank, other.rank
        roots = [tuple(r) + (0,) * m for r in self.roots]
        roots += [(0,) * n + tuple(r) for r in other.roots]
        coroots = [tuple(c) + (0,) * m for c in self.coroots]
        coroots += [(0,) * n + tuple(c) for c in other.coroots]
        simples = list(self.simple_indices) + [
            len(self.roots) + i for i in other.simple_indices
        ]
        pairing = tuple(
            tuple(row) + (0,) * m for row in self.pairing
        ) + tuple((0,) * n + tuple(row) for row in other.pairing)
        return BasedRootDatum(n + m, roots, coroots, simples, pairing)


# ---------------------------------------------------------------------------
# lattice quotients
# ---------------------------------------------------------------------------


class LatticeQuotient:
    """Z^n modulo the column span of a relation matrix, with canonical classes.

    A class is a tuple (free coordinates..., torsion coordinates...) where the
    torsion entries are reduced modulo their divisors.  The section `lift`
    sends a class back to Z^n and is a set-theoretic inverse of `project`.
    """

    def __init__(self, n: int, relation_columns: Sequence[Sequence[int]]):
        self.source_rank = n
        cols = [tuple(c) for c in relation_columns]
        for c in cols:
            if len(c) != n:
                raise ValidationError("relation column length mismatch")
        if n == 0:
            self._u = ()
            self._uinv = ()
            rank = 0
            divisors: List[int] = []
        elif not cols:
            self._u = identity(n)
            self._uinv = identity(n)
            rank = 0
            divisors = []
        else:
            a = transpose(freeze(cols))  # n x (#cols)
            u, d, _ = smith_normal_form(a)
            self._u = u
            self._uinv = integer_inverse(u)
            rank = sum(1 for t in range(min(len(d), len(d[0]))) if d[t][t])
            divisors = [d[t][t] for t in range(rank)]
        self._rank = rank
        self._free_rows = tuple(range(rank, n))
        self._torsion_rows = tuple(i for i in range(rank) if divisors[i] > 1)
        self.free_rank = len(self._free_rows)
        self.torsion: Tuple[int, ...] = tuple(divisors[i] for i in self._torsion_rows)
        self.class_len = self.free_rank + len(self.torsion)

    # -- class arithmetic ------------------------------------------------------

    def zero(self) -> Vec:
        return (0,) * self.class_len

    def reduce(self, raw: Sequence[int]) -> Vec:
        free = tuple(raw[: self.free_rank])
        tors = tuple(
            raw[self.free_rank + i] % d for i, d in enumerate(self.torsion)
        )
        return free + tors

    def add(self, c1: Sequence[int], c2: Sequence[int]) -> Vec:
        return self.reduce(vec_add(c1, c2))

    def neg(self, c: Sequence[int]) -> Vec:
        return self.reduce(vec_scale(-1, c))

    def sub(self, c1: Sequence[int], c2: Sequence[int]) -> Vec:
        return self.reduce(vec_sub(c1, c2))

    def scale(self, k: int, c: Sequence[int]) -> Vec:
        return self.reduce(vec_scale(k, c))

    def free_basis_classes(self) -> Tuple[Vec, ...]:
        return tuple(
            self.reduce(tuple(1 if j == i else 0 for j in range(self.class_len)))
            for i in range(self.free_rank)
        )

    def torsion_basis_classes(self) -> Tuple[Vec, ...]:
        return tuple(
            self.reduce(
                tuple(
                    1 if j == self.free_rank + i else 0 for j in range(self.class_len)
                )
            )
            for i in range(len(self.torsion))
        )

    # -- projection and section ------------------------------------------------

    def project(self, x: Sequence[int]) -> Vec:
        y = mat_vec(self._u, x)
        free = tuple(y[i] for i in self._free_rows)
        tors = tuple(y[i] % d for i, d in zip(self._torsion_rows, self.torsion))
        return free + tors

    def lift(self, c: Sequence[int]) -> Vec:
        if len(c) != self.class_len:
            raise ValidationError("class tuple length mismatch")
        y = [0] * self.source_rank
        for j, i in enumerate(self._free_rows):
            y[i] = c[j]
        for j, i in enumerate(self._torsion_rows):
            y[i] = c[self.free_rank + j]
        return mat_vec(self._uinv, y)

    def induced(self, m: Mat) -> Dict[Vec, Vec]:
        """Action of a relation-preserving matrix, tabulated on basis classes."""
        table = {}
        for c in self.free_basis_classes() + self.torsion_basis_classes():
            table[c] = self.project(mat_vec(m, self.lift(c)))
        return table

    def apply_induced(self, m: Mat, c: Sequence[int]) -> Vec:
        return self.project(mat_vec(m, self.lift(c)))

    def is_zero_class(self, x: Sequence[int]) -> bool:
        return self.project(x) == self.zero()


def coinvariants(n: int, group_elements: Sequence[Mat],
                 extra_columns: Sequence[Sequence[int]] = ()) -> LatticeQuotient:
    """Z^n / ( span{x - g x} + span(extra columns) )."""
    cols: List[Vec] = []
    basis = identity(n)
    for g in group_elements:
        for e in basis:
            col = vec_sub(e, mat_vec(g, e))
            if any(col):
                cols.append(col)
    cols.extend(tuple(c) for c in extra_columns)
    return LatticeQuotient(n, cols)


# ---------------------------------------------------------------------------
# Galois descent data
# ---------------------------------------------------------------------------


def _is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = 2
    n = q
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
        p += 1
    return True  # q itself prime


class GaloisDescentDatum:
    """A based root datum plus a tame Galois action through a finite quotient.

    The inertia generators and the Frobenius lift are integer matrices on the
    cocharacter lattice.  They must be unimodular, permute the coroots (and,
    via the pairing, the roots), and generate a finite group in which the
    inertia subgroup is normalized by Frobenius.  The scalars are the residue
    cardinality q of the base field and the ramification index e and residue
    degree f of the splitting extension.
    """

    def __init__(
        self,
        datum: BasedRootDatum,
        inertia_gens: Sequence[Mat],
        frobenius: Mat,
        q: int,
        e: int = 1,
        f: int = 1,
    ):
        self.datum = datum
        self.inertia_gens: Tuple[Mat, ...] = tuple(freeze(g) for g in inertia_gens)
        self.frobenius: Mat = freeze(frobenius)
        self.q = int(q)
        self.e = int(e)
        self.f = int(f)
        self._validate()

    # -- induced weight action -------------------------------------------------

    def weight_action_matrix(self, g: Mat) -> Mat:
        """The contragredient action on X^* determined by <g.w, g.x> = <w, x>."""
        p = self.datum.pairing
        rows = mat_mul(mat_mul(p, frac_inverse(g)), frac_inverse(p))
        out = transpose(rows)
        if any(isinstance(x, Fraction) and x.denominator != 1 for r in out for x in r):
            raise ValidationError("weight action is not integral")
        return tuple(tuple(int(x) for x in r) for r in out)

    def root_permutation(self, g: Mat) -> Tuple[int, ...]:
        """Permutation of root indices induced by g, with coroot alignment."""
        wmat = self.weight_action_matrix(g)
        index = {r: k for k, r in enumerate(self.datum.roots)}
        perm = []
        for k, a in enumerate(self.datum.roots):
            img = mat_vec(wmat, a)
            if img not in index:
                raise ValidationError("descent matrix does not permute the roots")
            j = index[img]
            if mat_vec(g, self.datum.coroots[k]) != self.datum.coroots[j]:
                raise ValidationError("descent matrix breaks root/coroot alignment")
            perm.append(j)
        return tuple(perm)

    # -- group enumeration -------------------------------------------------------

    def inertia_elements(self) -> Tuple[Mat, ...]:
        if not self.inertia_gens:
            return (identity(self.datum.rank),)
        return generate_group(self.inertia_gens)

    def full_elements(self) -> Tuple[Mat, ...]:
        gens = list(self.inertia_gens)
        gens.append(self.frobenius)
        return generate_group(gens)

    def is_quasi_split(self) -> bool:
        simple_set = {self.datum.roots[i] for i in self.datum.simple_indices}
        for g in self.full_elements():
            wmat = self.weight_action_matrix(g)
            if {mat_vec(wmat, a) for a in simple_set} != simple_set:
                return False
        return True

    # -- validation ----------------------------------------------------------------

    def _validate(self) -> None:
        n = self.datum.rank
        if not _is_prime_power(self.q):
            raise ValidationError(f"q = {self.q} is not a prime power")
        if self.e < 1 or self.f < 1:
            raise ValidationError("e and f must be positive")
        if gcd(self.e, self.q) != 1:
            raise UnsupportedCaseError(
                f"wild ramification (e = {self.e} shares a factor with q = {self.q})"
            )
        for g in self.inertia_gens + (self.frobenius,):
            if len(g) != n or any(len(r) != n for r in g):
                raise ValidationError("descent matrix shape mismatch")
            try:
                integer_inverse(g)
            except ValueError as exc:
                raise ValidationError("descent matrix is not unimodular") from exc
            self.root_permutation(g)
        inertia = self.inertia_elements()
        # Frobenius must normalize the inertia subgroup
        frob_inv = integer_inverse(self.frobenius)
        iner_set = set(inertia)
        for s in self.inertia_gens:
            conj = mat_mul(mat_mul(self.frobenius, s), frob_inv)
            if conj not in iner_set:
                raise ValidationError("Frobenius does not normalize inertia")
        self.full_elements()  # must be finite; raises otherwise

    # -- orbits ---------------------------------------------------------------------

    def root_orbits(self, elements: Sequence[Mat]) -> Tuple[Tuple[int, ...], ...]:
        perms = [self.root_permutation(g) for g in elements]
        n = len(self.datum.roots)
        seen = [False] * n
        orbits = []
        for k in range(n):
            if seen[k]:
                continue
            orb = {k}
            frontier = [k]
            while frontier:
                nxt = []
                for i in frontier:
                    for p in perms:
                        j = p[i]
                        if j not in orb:
                            orb.add(j)
                            nxt.append(j)
                frontier = nxt
            for i in orb:
                seen[i] = True
            orbits.append(tuple(sorted(orb)))
        return tuple(orbits)


def split_descent(datum: BasedRootDatum, q: int) -> GaloisDescentDatum:
    """The trivial descent datum of a split group."""
    return GaloisDescentDatum(datum, (), identity(datum.rank), q, 1, 1)


# ---------------------------------------------------------------------------
# Weil restriction
# ---------------------------------------------------------------------------


def _block_embed(vec: Sequence[int], block: int, nblocks: int) -> Vec:
    n = len(vec)
    out = [0] * (n * nblocks)
    for i, c in enumerate(vec):
        out[block * n + i] = c
    return tuple(out)


def _block_diag(mats: Sequence[Mat]) -> Mat:
    n = sum(len(m) for m in mats)
    out = [[0] * n for _ in range(n)]
    off = 0
    for m in mats:
        k = len(m)
        for i in range(k):
            for j in range(k):
                out[off + i][off + j] = m[i][j]
        off += k
    return freeze(out)


def _mat_pow(m: Mat, k: int) -> Mat:
    out = identity(len(m))
    base = m
    while k:
        if k & 1:
            out = mat_mul(out, base)
        base = mat_mul(base, base)
        k >>= 1
    return out


def weil_restrict(inner: GaloisDescentDatum, q: int, e: int, f: int
                  ) -> GaloisDescentDatum:
    """Restriction of scalars along a tame extension K/F with invariants (e, f).

    The base field F has residue cardinality q; the inner datum lives over K,
    so its residue cardinality must be q**f.  The induced module has one block
    per coset, ordered ramified-first within each of the f inertia blocks, and
    the Galois action permutes blocks with a wraparound twist by the inner
    action.  Ramified directions use the abelian tame model, which needs the
    e-th roots of unity in the base (q = 1 mod e); other tame forms are not
    implemented.
    """
    if e < 1 or f < 1:
        raise ValidationError("extension invariants must be positive")
    if inner.q != q**f:
        raise ValidationError(
            f"inner residue cardinality {inner.q} is not q**f = {q**f}"
        )
    if e > 1:
        if gcd(e, q) != 1:
            raise UnsupportedCaseError("wild ramification in the extension")
        if (q - 1) % e:
            raise UnsupportedCaseError(
                f"tame model needs q = 1 mod e (got q = {q}, e = {e})"
            )
        if inner.inertia_gens:
            raise UnsupportedCaseError(
                "ramified restriction of a ramified datum is not implemented"
            )
    d = e * f
    n = inner.datum.rank
    base = inner.datum

    # product root datum on d blocks
    roots = []
    coroots = []
    simples = []
    for b in range(d):
        for k, (a, av) in enumerate(zip(base.roots, base.coroots)):
            roots.append(_block_embed(a, b, d))
            coroots.append(_block_embed(av, b, d))
        for i in base.simple_indices:
            simples.append(b * len(base.roots) + i)
    pairing = _block_diag([base.pairing] * d)
    datum = BasedRootDatum(d * n, roots, coroots, simples, pairing)

    # block index: coset sigma^i phi^j sits at position j*e + i
    def perm_matrix(images: Dict[int, Tuple[int, Mat]]) -> Mat:
        out = [[0] * (d * n) for _ in range(d * n)]
        for src, (dst, twist) in images.items():
            for r in range(n):
                for c in range(n):
                    out[dst * n + r][src * n + c] = twist[r][c]
        return freeze(out)

    eye = identity(n)
    inertia_gens: List[Mat] = []
    if e > 1:
        # sigma: i -> i+1 within each inertia block, trivial wraparound twist
        images = {}
        for j in range(f):
            for i in range(e):
                images[j * e + i] = (j * e + (i + 1) % e, eye)
        inertia_gens.append(perm_matrix(images))
    if inner.inertia_gens and e == 1:
        # inertia of the unramified restriction: blockwise, twisted by the
        # tame relation phi^-j sigma phi^j = sigma^(q^j)
        for s in inner.inertia_gens:
            ord_s = matrix_order(s)
            images = {}
            for j in range(f):
                images[j] = (j, _mat_pow(s, pow(q, j, ord_s)))
            inertia_gens.append(perm_matrix(images))

    # Frobenius: j -> j+1 across inertia blocks, inner Frobenius on wraparound
    images = {}
    for j in range(f):
        for i in range(e):
            twist = eye if j + 1 < f else inner.frobenius
            images[j * e + i] = (((j + 1) % f) * e + i, twist)
    frobenius = perm_matrix(images)

    return GaloisDescentDatum(
        datum, inertia_gens, frobenius, q, e * inner.e, f * inner.f
    )


# ---------------------------------------------------------------------------
# relative root configuration
# ---------------------------------------------------------------------------


class RelativeRoot:
    """A relative root: a functional on the coinvariant classes plus a coroot.

    `fun` has one entry per class coordinate (zero on torsion slots, where
    every functional vanishes); the pairing with a class tuple is the dot
    product.  `coroot` is a class tuple.
    """

    __slots__ = ("fun", "coroot", "positive", "orbit", "index", "negative_index")

    def __init__(self, fun: Vec, coroot: Vec, positive: bool, orbit: Tuple[int, ...]):
        self.fun = fun
        self.coroot = coroot
        self.positive = positive
        self.orbit = orbit
        self.index = -1
        self.negative_index = -1

    def pair(self, cls: Sequence[int]) -> int:
        return vec_dot(self.fun, cls)


class RelativeWeylElement:
    __slots__ = ("index", "word", "images", "root_perm", "length")

    def __init__(self, index: int, word: Tuple[int, ...], images: Tuple[Vec, ...],
                 root_perm: Tuple[int, ...], length: int):
        self.index = index
        self.word = word          # word in relative simple root indices
        self.images = images      # images of the free basis classes
        self.root_perm = root_perm
        self.length = length


class RelativeRootConfiguration:
    """Everything the Iwahori-Weyl group needs, over the coinvariant lattice.

    Built from a quasi-split descent datum whose Galois orbits of absolute
    roots are orthogonal within each orbit; genuine diagram foldings (orbits
    with adjacent members) are out of scope and raise UnsupportedCaseError.
    """

    def __init__(self, descent: GaloisDescentDatum):
        self.descent = descent
        datum = descent.datum
        if not descent.is_quasi_split():
            raise UnsupportedCaseError(
                "descent datum is not quasi-split (Galois moves the simple roots)"
            )
        inertia = descent.inertia_elements()
        self.lattice = coinvariants(datum.rank, inertia)
        self._frob_table = self.lattice.induced(descent.frobenius)
        self._build_relative_roots(inertia)
        self._build_weyl_group()
        self._build_invariant_lattice()
        self._build_pi1()

    # -- class helpers ---------------------------------------------------------

    def frobenius_class(self, c: Sequence[int]) -> Vec:
        lat = self.lattice
        out = lat.zero()
        basis = lat.free_basis_classes() + lat.torsion_basis_classes()
        for coord, b in zip(lat.reduce(c), basis):
            out = lat.add(out, lat.scale(coord, self._frob_table[b]))
        return out

    def is_frobenius_fixed(self, c: Sequence[int]) -> bool:
        return self.frobenius_class(tuple(c)) == self.lattice.reduce(c)

    # -- relative roots ----------------------------------------------------------

    def _build_relative_roots(self, inertia: Sequence[Mat]) -> None:
        descent = self.descent
        datum = descent.datum
        lat = self.lattice
        full_orbits = descent.root_orbits(descent.full_elements())
        inertia_orbits = descent.root_orbits(inertia)
        suborbit_of = {}
        for so in inertia_orbits:
            for k in so:
                suborbit_of[k] = so

        roots: List[RelativeRoot] = []
        pos_set = set(datum.positive_indices)
        for orbit in full_orbits:
            for a in orbit:
                for b in orbit:
                    if a != b and datum.pair(datum.roots[a], datum.coroots[b]) != 0:
                        raise UnsupportedCaseError(
                            "Galois orbit contains non-orthogonal roots "
                            "(diagram folding is not supported)"
                        )
            positive = orbit[0] in pos_set
            if any((k in pos_set) != positive for k in orbit):
                raise ValidationError("Galois orbit mixes positive and negative roots")
            # functional: sum of one inertia suborbit, paired through a lift
            sub = suborbit_of[orbit[0]]
            wsum = (0,) * datum.rank
            for k in sub:
                wsum = vec_add(wsum, datum.roots[k])
            fun = tuple(
                datum.pair(wsum, lat.lift(c))
                for c in lat.free_basis_classes() + lat.torsion_basis_classes()
            )
            assert all(
                fun[lat.free_rank + i] == 0 for i in range(len(lat.torsion))
            ), "relative functional must vanish on torsion"
            # coroot: sum over the Frobenius cycle of suborbits, one member each
            seen_subs = set()
            coroot = lat.zero()
            for k in orbit:
                so = suborbit_of[k]
                if so not in seen_subs:
                    seen_subs.add(so)
                    coroot = lat.add(coroot, lat.project(datum.coroots[k]))
            roots.append(RelativeRoot(fun, coroot, positive, orbit))

        # deduplicate: distinct orbits must give distinct functionals
        seen_funs = {}
        for r in roots:
            if r.fun in seen_funs:
                raise UnsupportedCaseError(
                    "two Galois orbits induce the same relative root"
                )
            seen_funs[r.fun] = r
        for r in roots:
            if not any(r.fun):
                raise UnsupportedCaseError(
                    "a Galois orbit induces the zero functional"
                )
            for s in roots:
                if s is not r and _proportional(r.fun, s.fun):
                    raise UnsupportedCaseError(
                        "non-reduced relative root system (proportional functionals)"
                    )
        for i, r in enumerate(roots):
            r.index = i
        fun_index = {r.fun: r.index for r in roots}
        for r in roots:
            neg = tuple(-x for x in r.fun)
            if neg not in fun_index:
                raise ValidationError("relative roots are not stable under negation")
            r.negative_index = fun_index[neg]

        self.roots: Tuple[RelativeRoot, ...] = tuple(roots)
        simple_abs = {datum.simple_indices[i] for i in range(len(datum.simple_indices))}
        self.simple_indices = tuple(
            r.index for r in roots if r.positive and set(r.orbit) & simple_abs
        )
        # every relative simple orbit must consist of absolute simples
        for i in self.simple_indices:
            if not set(self.roots[i].orbit) <= simple_abs:
                raise ValidationError("orbit of a simple root leaves the simples")
        self.positive_indices = tuple(r.index for r in roots if r.positive)
        self.two_rho_fun = tuple(
            sum(self.roots[i].fun[j] for i in self.positive_indices)
            for j in range(lat.class_len)
        )

    def cartan_integer(self, i: int, j: int) -> int:
        """<a_i, a_j^vee> for relative roots."""
        return self.roots[i].pair(self.roots[j].coroot)

    # -- relative Weyl group ------------------------------------------------------

    def reflect_class(self, root_index: int, c: Sequence[int]) -> Vec:
        r = self.roots[root_index]
        return self.lattice.sub(c, self.lattice.scale(r.pair(c), r.coroot))

    def _apply_images(self, images: Tuple[Vec, ...], c: Sequence[int]) -> Vec:
        lat = self.lattice
        out = list(c)
        for i in range(lat.free_rank):
            out[i] = 0
        out = lat.reduce(tuple(out))
        for coord, img in zip(c[: lat.free_rank], images):
            out = lat.add(out, lat.scale(coord, img))
        return out

    def _build_weyl_group(self) -> None:
        lat = self.lattice
        free_basis = lat.free_basis_classes()
        id_images = tuple(free_basis)

        def images_of_reflection(i: int) -> Tuple[Vec, ...]:
            return tuple(self.reflect_class(i, b) for b in free_basis)

        gen_images = {i: images_of_reflection(i) for i in self.simple_indices}

        def compose(img1: Tuple[Vec, ...], img2: Tuple[Vec, ...]) -> Tuple[Vec, ...]:
            # (img1 o img2): apply img2 first, then img1
            return tuple(self._apply_images(img1, c) for c in img2)

        elements: List[RelativeWeylElement] = []
        index_of: Dict[Tuple[Vec, ...], int] = {}

        def root_perm_of(images: Tuple[Vec, ...], word: Tuple[int, ...]) -> Tuple[int, ...]:
            # w . a: coroot maps by w, functional by precomposition with w^{-1};
            # the generators are involutions, so w^{-1} is the reversed word
            inv_images = id_images
            for i in word:
                inv_images = compose(gen_images[i], inv_images)
            perm = []
            for r in self.roots:
                new_coroot = self._apply_images(images, r.coroot)
                new_fun = tuple(
                    vec_dot(r.fun, self._apply_images(inv_images, b))
                    for b in free_basis
                ) + (0,) * len(lat.torsion)
                cands = [
                    s.index
                    for s in self.roots
                    if s.fun == new_fun and s.coroot == new_coroot
                ]
                if len(cands) != 1:
                    raise ValidationError("Weyl action does not permute relative roots")
                perm.append(cands[0])
            return tuple(perm)

        ident = RelativeWeylElement(0, (), id_images,
                                    tuple(range(len(self.roots))), 0)
        elements.append(ident)
        index_of[id_images] = 0
        frontier = [ident]
        while frontier:
            nxt = []
            for w in frontier:
                for i in self.simple_indices:
                    # right multiplication: w' = w s_i, images = w o s_i
                    new_images = compose(w.images, gen_images[i])
                    if new_images in index_of:
                        continue
                    word = w.word + (i,)
                    perm = root_perm_of(new_images, word)
                    length = sum(
                        1
                        for r in self.roots
                        if r.positive and not self.roots[perm[r.index]].positive
                    )
                    if length != len(word):
                        raise ValidationError("BFS word is not reduced")
                    el = RelativeWeylElement(len(elements), word, new_images, perm, length)
                    elements.append(el)
                    index_of[new_images] = el.index
                    nxt.append(el)
            frontier = nxt
        self.weyl_elements: Tuple[RelativeWeylElement, ...] = tuple(elements)
        self._weyl_index = index_of
        self.longest_element = max(elements, key=lambda w: w.length)

    def weyl_apply(self, w: RelativeWeylElement, c: Sequence[int]) -> Vec:
        return self._apply_images(w.images, self.lattice.reduce(c))

    def weyl_compose(self, w1: RelativeWeylElement, w2: RelativeWeylElement
                     ) -> RelativeWeylElement:
        images = tuple(self._apply_images(w1.images, c) for c in w2.images)
        return self.weyl_elements[self._weyl_index[images]]

    def weyl_inverse(self, w: RelativeWeylElement) -> RelativeWeylElement:
        out = self.weyl_elements[0]
        for i in reversed(w.word):
            out = self.weyl_compose(out, self.weyl_simple(i))
        return out

    def weyl_simple(self, root_index: int) -> RelativeWeylElement:
        free_basis = self.lattice.free_basis_classes()
        images = tuple(self.reflect_class(root_index, b) for b in free_basis)
        return self.weyl_elements[self._weyl_index[images]]

    def dominant_class(self, c: Sequence[int]) -> Tuple[Vec, Tuple[int, ...]]:
        """Dominant representative and a word moving c to it (applied left to right)."""
        c = self.lattice.reduce(c)
        word: List[int] = []
        while True:
            for i in self.simple_indices:
                if self.roots[i].pair(c) < 0:
                    c = self.reflect_class(i, c)
                    word.append(i)
                    break
            else:
                return c, tuple(word)

    def is_dominant_class(self, c: Sequence[int]) -> bool:
        return all(self.roots[i].pair(c) >= 0 for i in self.simple_indices)

    # -- Frobenius-invariant translations ------------------------------------------

    def _build_invariant_lattice(self) -> None:
        """Generators of the Frobenius-fixed classes (the F-rational translations).

        Torsion classes must be Frobenius-fixed individually; mixing of free
        and torsion parts under Frobenius is out of scope.
        """
        lat = self.lattice
        for t in lat.torsion_basis_classes():
            if self.frobenius_class(t) != t:
                raise UnsupportedCaseError(
                    "Frobenius moves a torsion class of the coinvariant lattice"
                )
        nfree = lat.free_rank
        if nfree == 0:
            self.invariant_free_basis: Tuple[Vec, ...] = ()
            return
        # Frobenius on free coordinates, recording torsion spill separately
        cols_free = []
        cols_tors = []
        for b in lat.free_basis_classes():
            img = self.frobenius_class(b)
            cols_free.append(img[:nfree])
            cols_tors.append(img[nfree:])
        a_minus_id = tuple(
            tuple(cols_free[j][i] - (1 if i == j else 0) for j in range(nfree))
            for i in range(nfree)
        )
        from .linalg import column_space_basis, kernel_basis

        ker = kernel_basis(a_minus_id)
        if lat.torsion and ker:
            # keep the combinations whose torsion spill vanishes mod the divisors
            rows = []
            for i, d in enumerate(lat.torsion):
                rows.append(
                    tuple(sum(cols_tors[j][i] * k[j] for j in range(nfree)) for k in ker)
                    + tuple(d if t == i else 0 for t in range(len(lat.torsion)))
                )
            aug = freeze(rows)
            sub = kernel_basis(aug)
            combos = tuple(
                tuple(sum(s[j] * ker[j][i] for j in range(len(ker))) for i in range(nfree))
                for s in sub
            )
            ker = column_space_basis(combos)
        self.invariant_free_basis = tuple(
            lat.reduce(tuple(k) + (0,) * len(lat.torsion)) for k in ker if any(k)
        )

    # -- fundamental group -------------------------------------------------------------

    def _build_pi1(self) -> None:
        """pi_1 = X_* / (inertia relations + absolute coroot span), with kappa."""
        descent = self.descent
        datum = descent.datum
        inertia = descent.inertia_elements()
        self.pi1 = coinvariants(datum.rank, inertia, datum.coroots)

    def kappa(self, c: Sequence[int]) -> Vec:
        """Kottwitz invariant of a translation class."""
        return self.pi1.project(self.lattice.lift(self.lattice.reduce(c)))


def _proportional(u: Vec, v: Vec) -> bool:
    """True when nonzero u, v satisfy u = c v for some rational c != +-0, u != v, u != -v."""
    if u == v or u == tuple(-x for x in v):
        return False
    nz = [(a, b) for a, b in zip(u, v) if a or b]
    if any(b == 0 and a != 0 or a == 0 and b != 0 for a, b in nz):
        return False
    ratios = {Fraction(a, b) for a, b in nz if b}
    return len(ratios) == 1


def relative_root_data(descent: GaloisDescentDatum) -> RelativeRootConfiguration:
    return RelativeRootConfiguration(descent)
