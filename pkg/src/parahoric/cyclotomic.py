"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Characters of the coweight coinvariant lattice take values in roots of unity
on torsion classes, so evaluating central elements on principal series needs
Q(zeta_n) with exact equality, not floating point.  Elements are stored as
coefficient vectors over the power basis 1, x, ..., x^(phi(n)-1) of
Q[x]/(Phi_n), and mixed conductors are handled by lifting both operands into
the lcm field.

>>> z = CycNum.zeta(3)
>>> z * z * z == 1
True
>>> (1 + z + z * z).is_zero()
True
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import List, Sequence, Tuple

# -- dense polynomial helpers over Fraction (index = degree) ----------------


def _trim(p: List[Fraction]) -> List[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _padd(a: Sequence[Fraction], b: Sequence[Fraction]) -> List[Fraction]:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _pmul(a: Sequence[Fraction], b: Sequence[Fraction]) -> List[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                out[i + j] += c * d
    return _trim(out)


def _pdivmod(a: Sequence[Fraction], b: Sequence[Fraction]
             ) -> Tuple[List[Fraction], List[Fraction]]:
    a = list(a)
    _trim(a)
    if not b:
        raise ZeroDivisionError
    quo = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    lead = b[-1]
    while len(a) >= len(b):
        c = a[-1] / lead
        k = len(a) - len(b)
        quo[k] = c
        for j, d in enumerate(b):
            a[k + j] -= c * d
        _trim(a)
    return _trim(quo), a


@lru_cache(maxsize=None)
def cyclotomic_coeffs(n: int) -> Tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial Phi_n.

    Computed by exact division of x^n - 1 by the product of Phi_d over
    proper divisors d of n.

    >>> cyclotomic_coeffs(1)
    (-1, 1)
    >>> cyclotomic_coeffs(6)
    (1, -1, 1)
    """
    if n < 1:
        raise ValueError("conductor must be positive")
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    den = [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            den = _pmul(den, [Fraction(c) for c in cyclotomic_coeffs(d)])
    quo, rem = _pdivmod(num, den)
    assert not rem, "cyclotomic division must be exact"
    assert all(c.denominator == 1 for c in quo)
    return tuple(int(c) for c in quo)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return len(cyclotomic_coeffs(n)) - 1


def _reduce_mod_phi(p: Sequence[Fraction], n: int) -> List[Fraction]:
    phi = [Fraction(c) for c in cyclotomic_coeffs(n)]
    _, rem = _pdivmod(list(p), phi)
    return rem


def _ext_gcd(a: List[Fraction], b: List[Fraction]
             ) -> Tuple[List[Fraction], List[Fraction], List[Fraction]]:
    """Extended Euclid in Q[x]: returns (g, s, t) with s*a + t*b = g."""
    r0, r1 = list(a), list(b)
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _padd(s0, [-c for c in _pmul(q, s1)])
        t0, t1 = t1, _padd(t0, [-c for c in _pmul(q, t1)])
    return r0, s0, t0


class CycNum:
    """An element of Q(zeta_n), zeta_n = exp(2*pi*i/n)."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Sequence):
        deg = euler_phi(n)
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > deg:
            cs = _reduce_mod_phi(cs, n)
        cs += [Fraction(0)] * (deg - len(cs))
        self.n = n
        self.coeffs = tuple(cs[:deg])

    # -- constructors ------------------------------------------------------

    @staticmethod
    def rational(r) -> "CycNum":
        return CycNum(1, [Fraction(r)])

    @staticmethod
    def zeta(n: int, k: int = 1) -> "CycNum":
        """zeta_n**k."""
        k %= n
        mono = [Fraction(0)] * k + [Fraction(1)]
        return CycNum(n, mono)

    @staticmethod
    def coerce(x) -> "CycNum":
        if isinstance(x, CycNum):
            return x
        if isinstance(x, (int, Fraction)):
            return CycNum.rational(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to CycNum")

    # -- conductor handling --------------------------------------------------

    def lift(self, m: int) -> "CycNum":
        """Rewrite in Q(zeta_m) for a multiple m of the conductor n."""
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError(f"{m} is not a multiple of conductor {self.n}")
        step = m // self.n
        out = [Fraction(0)] * (euler_phi(self.n) * step + 1)
        for j, c in enumerate(self.coeffs):
            out[j * step] += c
        return CycNum(m, out)

    @staticmethod
    def _common(a: "CycNum", b: "CycNum") -> Tuple["CycNum", "CycNum"]:
        m = lcm(a.n, b.n)
        return a.lift(m), b.lift(m)

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other) -> "CycNum":
        a, b = CycNum._common(self, CycNum.coerce(other))
        return CycNum(a.n, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> "CycNum":
        return CycNum(self.n, [-c for c in self.coeffs])

    def __sub__(self, other) -> "CycNum":
        return self + (-CycNum.coerce(other))

    def __rsub__(self, other) -> "CycNum":
        return CycNum.coerce(other) + (-self)

    def __mul__(self, other) -> "CycNum":
        a, b = CycNum._common(self, CycNum.coerce(other))
        return CycNum(a.n, _pmul(list(a.coeffs), list(b.coeffs)))

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        phi = [Fraction(c) for c in cyclotomic_coeffs(self.n)]
        g, s, _ = _ext_gcd(list(self.coeffs), phi)
        # Phi_n is irreducible, so the gcd with a nonzero residue is a constant
        assert len(g) == 1
        return CycNum(self.n, [c / g[0] for c in s])

    def __truediv__(self, other) -> "CycNum":
        return self * CycNum.coerce(other).inverse()

    def __rtruediv__(self, other) -> "CycNum":
        return CycNum.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "CycNum":
        if k < 0:
            return self.inverse() ** (-k)
        out = CycNum.rational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycNum.rational(other)
        if not isinstance(other, CycNum):
            return NotImplemented
        a, b = CycNum._common(self, other)
        return a.coeffs == b.coeffs

    __hash__ = None  # mixed-conductor equality makes hashing unreliable

    def __repr__(self) -> str:
        if self.is_rational():
            return f"CycNum({self.as_fraction()})"
        return f"CycNum(zeta_{self.n}; {[str(c) for c in self.coeffs]})"


def conjugates_sum(x: CycNum) -> Fraction:
    """Trace to Q: sum over k coprime to n of the substitution zeta -> zeta^k."""
    total = CycNum.rational(0)
    n = x.n
    for k in range(1, n + 1):
        if gcd(k, n) == 1:
            img = CycNum.rational(0)
            for j, c in enumerate(x.coeffs):
                if c:
                    img = img + CycNum.zeta(n, j * k) * c
            total = total + img
    return total.as_fraction()
