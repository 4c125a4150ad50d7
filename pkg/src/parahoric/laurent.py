"""Sparse Laurent polynomials in one variable v with exact scalar coefficients.

These are the coefficients of Iwahori-Hecke algebra elements: the parameter
specialization v^2 = q identifies v with a formal square root of the residue
cardinality, so everything downstream (quadratic relations, idempotents,
integrality reports) stays in exact arithmetic.  Scalars are ints whenever
possible, fractions.Fraction otherwise; any exact scalar type supporting
+, -, * with ints works.

>>> v = Laurent.gen()
>>> (v - v**-1) * (v + v**-1)
Laurent({-2: -1, 2: 1})
>>> (v**3).eval_at_q()
Traceback (most recent call last):
    ...
ValueError: odd exponent 3 cannot be written in q = v^2
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterator, Optional, Tuple

Scalar = object  # int | Fraction | any exact coefficient type


def _norm_scalar(c: Scalar) -> Scalar:
    """Collapse integral Fractions back to int so JSON output stays integer."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _scalar_inv(c: Scalar) -> Scalar:
    if isinstance(c, int):
        return _norm_scalar(Fraction(1, c))
    if isinstance(c, Fraction):
        return _norm_scalar(1 / c)
    return c.inverse()


class Laurent:
    """An element of Z[v, v^-1] (or F[v, v^-1] for an exact scalar field F)."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Optional[Dict[int, Scalar]] = None):
        self._c: Dict[int, Scalar] = {}
        if coeffs:
            for e, c in coeffs.items():
                c = _norm_scalar(c)
                if c != 0:
                    self._c[int(e)] = c

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Laurent":
        return Laurent()

    @staticmethod
    def one() -> "Laurent":
        return Laurent({0: 1})

    @staticmethod
    def gen(exp: int = 1) -> "Laurent":
        """The monomial v**exp."""
        return Laurent({exp: 1})

    @staticmethod
    def term(c: Scalar, exp: int) -> "Laurent":
        return Laurent({exp: c})

    @staticmethod
    def const(c: Scalar) -> "Laurent":
        return Laurent({0: c})

    @staticmethod
    def coerce(x) -> "Laurent":
        if isinstance(x, Laurent):
            return x
        return Laurent.const(x)

    # -- structure ---------------------------------------------------------

    def items(self) -> Iterator[Tuple[int, Scalar]]:
        return iter(sorted(self._c.items()))

    def coeff(self, exp: int) -> Scalar:
        return self._c.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._c

    def is_one(self) -> bool:
        return self._c == {0: 1}

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def degree(self) -> int:
        if not self._c:
            raise ValueError("degree of zero polynomial")
        return max(self._c)

    def valuation(self) -> int:
        if not self._c:
            raise ValueError("valuation of zero polynomial")
        return min(self._c)

    def leading_coeff(self) -> Scalar:
        return self._c[self.degree()]

    def support(self) -> Tuple[int, ...]:
        return tuple(sorted(self._c))

    def is_integral(self) -> bool:
        """True when every coefficient is a plain integer."""
        return all(isinstance(c, int) for c in self._c.values())

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "Laurent":
        other = Laurent.coerce(other)
        out = dict(self._c)
        for e, c in other._c.items():
            s = _norm_scalar(out.get(e, 0) + c)
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        res = Laurent()
        res._c = out
        return res

    __radd__ = __add__

    def __neg__(self) -> "Laurent":
        res = Laurent()
        res._c = {e: -c for e, c in self._c.items()}
        return res

    def __sub__(self, other) -> "Laurent":
        return self + (-Laurent.coerce(other))

    def __rsub__(self, other) -> "Laurent":
        return Laurent.coerce(other) + (-self)

    def __mul__(self, other) -> "Laurent":
        other = Laurent.coerce(other)
        out: Dict[int, Scalar] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                e = e1 + e2
                s = _norm_scalar(out.get(e, 0) + c1 * c2)
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        res = Laurent()
        res._c = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Laurent":
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial")
            (e, c), = self._c.items()
            return Laurent.term(_scalar_inv(c), -e) ** (-n)
        out = Laurent.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Laurent):
            if isinstance(other, (int, Fraction)):
                other = Laurent.const(other)
            else:
                return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    # -- division ----------------------------------------------------------

    def exact_div(self, den: "Laurent") -> Optional["Laurent"]:
        """Return self/den if den divides self exactly in F[v, v^-1], else None.

        Long division after shifting both arguments into the polynomial ring;
        coefficients pass through Fraction so integer inputs with non-unit
        leading coefficients still divide exactly when they should.
        """
        if den.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return Laurent.zero()
        shift = self.valuation() - den.valuation()
        num = {e - self.valuation(): c for e, c in self._c.items()}
        d = {e - den.valuation(): c for e, c in den._c.items()}
        ddeg = max(d)
        dlead_inv = _scalar_inv(d[ddeg])
        quo: Dict[int, Scalar] = {}
        while num:
            ndeg = max(num)
            if ndeg < ddeg:
                return None
            c = _norm_scalar(num[ndeg] * dlead_inv)
            quo[ndeg - ddeg] = c
            for e2, c2 in d.items():
                e = ndeg - ddeg + e2
                s = _norm_scalar(num.get(e, 0) - c * c2)
                if s == 0:
                    num.pop(e, None)
                else:
                    num[e] = s
        return Laurent({e + shift: c for e, c in quo.items()})

    def divides(self, other: "Laurent") -> bool:
        return other.exact_div(self) is not None

    # -- specializations ---------------------------------------------------

    def eval_at_q(self) -> Dict[int, Scalar]:
        """Rewrite in q = v^2: return {k: c} meaning sum c*q^k.

        Raises ValueError when an odd v-exponent is present (the element is
        not a polynomial expression in q).
        """
        out = {}
        for e, c in self._c.items():
            if e % 2:
                raise ValueError(f"odd exponent {e} cannot be written in q = v^2")
            out[e // 2] = c
        return out

    def in_z_of_q(self) -> bool:
        """True when the element lies in Z[q] under v^2 = q (no negatives)."""
        return all(e % 2 == 0 and e >= 0 and isinstance(c, int)
                   for e, c in self._c.items())

    def substitute(self, value: Scalar) -> Scalar:
        """Evaluate at v = value (value must be invertible if needed)."""
        out = 0
        inv = None
        for e, c in self._c.items():
            if e >= 0:
                out = out + c * value**e
            else:
                if inv is None:
                    inv = _scalar_inv(value)
                out = out + c * inv**(-e)
        return _norm_scalar(out)

    # -- presentation ------------------------------------------------------

    def __repr__(self) -> str:
        return f"Laurent({dict(sorted(self._c.items()))!r})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e, c in sorted(self._c.items()):
            if e == 0:
                parts.append(f"{c}")
            else:
                mono = "v" if e == 1 else f"v^{e}"
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def scalar_inverse(c: Scalar) -> Scalar:
    """Exact inverse of a nonzero scalar."""
    return _scalar_inv(c)
