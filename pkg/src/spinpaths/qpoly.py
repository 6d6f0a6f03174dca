"""Exact Laurent polynomial arithmetic in the formal variable q.

A Laurent polynomial is a finite integer combination of powers q^e with
integer exponents of either sign.  Coefficients are Python ints, so all
arithmetic is arbitrary precision and exact; nothing in this module ever
rounds.  Rational evaluation returns ``fractions.Fraction``.

Canonical form: zero coefficients are never stored, and the zero
polynomial stores no terms at all.  Instances are immutable and safe to
share between threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

# Exact rational scalars: reduced form, positive denominator, arbitrary
# precision.  fractions.Fraction guarantees all three.
ExactRational = Fraction


class NotDivisible(ArithmeticError):
    """No exact polynomial quotient exists (nonzero remainder)."""


class ZeroToNegativePower(ZeroDivisionError):
    """A negative power of q was evaluated at q = 0."""


class LaurentPoly:
    """Sparse Laurent polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean: dict[int, int] = {}
        if terms:
            for e, c in terms.items():
                if not isinstance(e, int) or not isinstance(c, int):
                    raise TypeError("exponents and coefficients must be int")
                if c != 0:
                    clean[e] = clean.get(e, 0) + c
                    if clean[e] == 0:
                        del clean[e]
        self._terms = clean

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def q_power(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        """The monomial coeff * q^exponent."""
        return cls({exponent: coeff})

    # -- inspection --------------------------------------------------------

    def items(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs, exponents ascending."""
        return sorted(self._terms.items())

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no valuation")
        return min(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = terms
        return out

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = {e: -c for e, c in self._terms.items()}
        return out

    def __sub__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        terms: dict[int, int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                s = terms.get(e, 0) + ca * cb
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def div_exact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self / divisor.

        Long division from the lowest exponent after normalizing the
        Laurent shifts of both operands.  Raises NotDivisible on any
        nonzero remainder; the result is never an approximation.
        """
        divisor = _coerce(divisor)
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return LaurentPoly.zero()
        shift = divisor.valuation()
        b = {e - shift: c for e, c in divisor._terms.items()}
        b_deg = max(b)
        b_low = b[0]
        rem = {e - shift: c for e, c in self._terms.items()}
        # quotient exponents cannot exceed deg(rem) - deg(b)
        max_quot_exp = max(rem) - b_deg
        quot: dict[int, int] = {}
        while rem:
            v = min(rem)
            if v > max_quot_exp:
                raise NotDivisible("nonzero remainder")
            c, r = divmod(rem[v], b_low)
            if r:
                raise NotDivisible("nonzero remainder")
            quot[v] = c
            for e, cb in b.items():
                s = rem.get(v + e, 0) - c * cb
                if s:
                    rem[v + e] = s
                else:
                    rem.pop(v + e, None)
        return LaurentPoly(quot)

    # -- evaluation ----------------------------------------------------------

    def evaluate(self, q0) -> Fraction:
        """Exact value at q = q0 (int or Fraction)."""
        q0 = Fraction(q0)
        if q0 == 0 and self._terms and self.valuation() < 0:
            raise ZeroToNegativePower("negative power of q at q = 0")
        total = Fraction(0)
        for e, c in self._terms.items():
            total += c * q0 ** e
        return total

    # -- serialization ---------------------------------------------------------

    def to_json_obj(self) -> dict[str, str]:
        """JSON form: exponent string -> coefficient string, exponents ascending."""
        return {str(e): str(c) for e, c in self.items()}

    @classmethod
    def from_json_obj(cls, obj: Mapping[str, str]) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in obj.items()})

    # -- dunder plumbing ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self.items())!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = "q" if e == 1 else f"q^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


def _coerce(value) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly({0: value})
    return NotImplemented


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()


def qsquare_factorial_product(k: int) -> LaurentPoly:
    """The product of (1 - q^(2i)) for i = 1..k; the empty product is 1."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    result = LaurentPoly.one()
    for i in range(1, k + 1):
        result = result * LaurentPoly({0: 1, 2 * i: -1})
    return result


def product(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    """Product of an iterable of polynomials; empty product is 1."""
    result = LaurentPoly.one()
    for p in polys:
        result = result * p
    return result
